// Copyright 2026 The chist authors
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

#include <json.hpp>

#include "chist/histories.hpp"

namespace chist {

/// Framework file schema: complex numbers as [re, im] pairs, matrices
/// row-major as lists of rows. Projectors may be given as a full "matrix" or
/// as a rank-1 "generating_vector"; serialization always writes matrices.
nlohmann::json framework_to_json(const HistoryFramework& fw);

/// Throws ParseError with a diagnostic naming the offending step when a
/// decomposition is incomplete or otherwise invalid.
HistoryFramework framework_from_json(const nlohmann::json& j);

void save_framework(const HistoryFramework& fw, const std::string& path);
HistoryFramework load_framework(const std::string& path);

}  // namespace chist
