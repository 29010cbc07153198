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

// Bundled automata: the principals of the worked examples and the expected
// orchestrations they lead to.

#ifndef MSCA_CORPUS_HPP_
#define MSCA_CORPUS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "msca/core.hpp"

namespace msca {

/// Principals first, then the expected orchestrations ("fig1-orchestration",
/// ...).
std::vector<std::string> corpus_names();

/// Throws Error on an unknown name.
Msca corpus_automaton(std::string_view name);

/// Builds an automaton from one transition per line,
/// "[q] [label] [q'] modality"; blank lines are ignored. States are the
/// initial state, the finals and every transition endpoint.
Msca automaton_from_lines(std::size_t rank, std::string_view initial,
                          const std::vector<std::string_view>& finals, std::string_view lines);

}  // namespace msca

#endif  // MSCA_CORPUS_HPP_
