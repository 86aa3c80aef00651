// Copyright 2026 The gematch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GEM_GEM_HPP
#define GEM_GEM_HPP

#include "gem/decomposition.hpp"
#include "gem/graph.hpp"
#include "gem/io.hpp"
#include "gem/matching.hpp"
#include "gem/oracle.hpp"

#endif  // GEM_GEM_HPP
