// Copyright 2026 The fincat Authors
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

#pragma once

#include <string>

#include "fincat/dsl/parser.hpp"

namespace fincat::dsl {

/// Canonical text of a parsed workspace: one declaration per line, single
/// spaces, no comments, pair and system classes closed under isomorphism.
/// Printing the result of parsing this text reproduces it exactly.
std::string print_workspace(const Workspace& ws);

}  // namespace fincat::dsl
