/*
 * Copyright 2026 The msca Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// JSON helpers shared by the io and simulate modules. Not installed.

#ifndef MSCA_SRC_JSON_UTIL_HPP_
#define MSCA_SRC_JSON_UTIL_HPP_

#include <string>
#include <string_view>

#include <json.hpp>

#include "msca/core.hpp"

namespace msca::detail {

using Json = nlohmann::ordered_json;

Json state_to_json(const StateVec& q);
Json label_to_json(const Label& l);
Json transition_to_json(const Transition& t);

StateVec state_from_json(const Json& j, const std::string& field);
Label label_from_json(const Json& j, const std::string& field);
Transition transition_from_json(const Json& j, const std::string& field);

/// Parses text, turning nlohmann parse errors into SyntaxError with line and
/// column.
Json parse_json(std::string_view text);

/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

const Json& require(const Json& j, const char* key, const std::string& field);

}  // namespace msca::detail

#endif  // MSCA_SRC_JSON_UTIL_HPP_
