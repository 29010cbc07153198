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

#ifndef MSCA_SIMULATE_HPP_
#define MSCA_SIMULATE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "msca/core.hpp"

namespace msca {

/// Uniform choice among the outgoing transitions, drawn with std::mt19937_64.
struct RandomPolicy {};

/// Step k takes the indices[k]-th outgoing transition in canonical order.
/// The walk stops early when the script runs out.
struct ScriptedPolicy {
  std::vector<std::size_t> indices;
};

using WalkPolicy = std::variant<RandomPolicy, ScriptedPolicy>;

struct WalkVerdict {
  std::size_t requests_seen = 0;
  /// The last state is final, or a final state can be reached from it in at
  /// most the unused part of the step budget.
  bool ended_in_final = false;
  /// A final state is reachable from every visited state.
  bool final_reachable = false;

  bool operator==(const WalkVerdict&) const = default;
};

struct Walk {
  std::vector<Transition> steps;
  WalkVerdict verdict;

  /// Visited states, starting with the initial state.
  std::vector<StateVec> states(const Msca& a) const;
};

/// Walks at most `steps` transitions from the initial state, stopping at a
/// state without outgoing transitions. Throws Error on an empty automaton or
/// when a scripted index is out of range.
Walk walk(const Msca& a, std::size_t steps, std::uint64_t seed, const WalkPolicy& policy);

/// `.trace.json` document for a walk.
std::string save_walk(const Walk& w, std::uint64_t seed);

}  // namespace msca

#endif  // MSCA_SIMULATE_HPP_
