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

#ifndef MSCA_REACH_HPP_
#define MSCA_REACH_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "msca/core.hpp"

namespace msca {

/// States reachable from the initial state.
std::set<StateVec> reachable_states(const Msca& a);

/// States from which some final state is reachable.
std::set<StateVec> coreachable_states(const Msca& a);

/// States that are unreachable from the initial state or cannot reach any
/// final state. Empty for the empty automaton.
std::set<StateVec> dangling(const Msca& a);

/// Breadth-first exploration from one state along transitions whose label is
/// idle at component j, never touching an excluded state. Keeps the BFS
/// parent of each visited state so that shortest idle prefixes can be
/// rebuilt deterministically. `a` and `excluded` must outlive the object.
class IdleReach {
 public:
  IdleReach(const Msca& a, const StateVec& from, std::size_t j,
            const std::set<StateVec>& excluded);

  const std::set<StateVec>& visited() const { return visited_; }

  /// True iff t is the last step of an admissible sequence: t leaves a
  /// visited state and its target is not excluded.
  bool reaches(const Transition& t) const;

  /// The sequence t0..tn with tn = t, or nullopt if !reaches(t).
  std::optional<std::vector<Transition>> path_to(const Transition& t) const;

  /// Every transition satisfying reaches(), in canonical order.
  std::set<Transition> transitions() const;

 private:
  const Msca* automaton_;
  const std::set<StateVec>* excluded_;
  std::set<StateVec> visited_;
  std::map<StateVec, std::optional<Transition>> parent_;
};

/// Transitions t' of a reachable from `from` by a (possibly empty) sequence
/// of transitions idle at component j, where every visited state is neither
/// forbidden nor dangling in a. `from` itself must be admissible.
std::set<Transition> reachable_via_idle(const Msca& a, const StateVec& from, std::size_t j,
                                        const std::set<StateVec>& forbidden);

}  // namespace msca

#endif  // MSCA_REACH_HPP_
