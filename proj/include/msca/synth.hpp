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

#ifndef MSCA_SYNTH_HPP_
#define MSCA_SYNTH_HPP_

#include <cstddef>
#include <vector>

#include "msca/control.hpp"
#include "msca/core.hpp"

namespace msca {

enum class ForbiddenReason { Uncontrollable, Dangling };

std::string to_string(ForbiddenReason r);

struct ForbiddenState {
  StateVec state;
  ForbiddenReason reason;

  bool operator==(const ForbiddenState&) const = default;
};

struct ControllabilityCheck {
  Transition transition;
  Verdict verdict;

  bool operator==(const ControllabilityCheck&) const = default;
};

/// One application of the pruning step.
struct SynthesisIteration {
  std::size_t index = 0;
  std::vector<Transition> removed_transitions;
  std::vector<ForbiddenState> newly_forbidden;
  /// Verdicts for the necessary transitions whose source was not yet
  /// forbidden when the iteration started.
  std::vector<ControllabilityCheck> checks;

  bool operator==(const SynthesisIteration&) const = default;
};

struct FinalTrim {
  std::vector<StateVec> removed_states;
  std::vector<Transition> removed_transitions;

  bool operator==(const FinalTrim&) const = default;
};

struct SynthesisTrace {
  Semantics semantics = Semantics::Original;
  /// Dangling states of the input, forbidden before the first iteration.
  std::vector<StateVec> initially_forbidden;
  std::vector<SynthesisIteration> iterations;
  /// Index of the first iteration that changed neither the transitions nor
  /// the forbidden states.
  std::size_t fixpoint_index = 0;
  FinalTrim final_trim;
  bool empty = false;

  bool operator==(const SynthesisTrace&) const = default;
};

struct SynthesisResult {
  Msca orchestration;
  SynthesisTrace trace;
};

/// Orchestration synthesis.
///
/// Starting from K = a and R = dangling(a), every iteration first drops the
/// requests and the transitions entering R, then adds to R the sources of
/// lazy transitions of a that are uncontrollable in the new K, and the
/// dangling states of the new K. All removals of one iteration are computed
/// as a batch. At the fixpoint the result is empty if the initial state is
/// forbidden; otherwise forbidden states are removed together with their
/// transitions and the reachable part is kept.
///
/// Under Mpc every necessary transition is uncontrollable: a necessary
/// transition that is a request or enters R is never pruned, its source is
/// forbidden instead. The other semantics reject automata with urgent
/// transitions.
///
/// Throws Error on ill-formed input or on urgent transitions outside Mpc.
SynthesisResult synthesize(const Msca& a, Semantics sem);

/// Replaces every lazy transition q -a-> q' by an urgent silent selection
/// q -[!tau at j]-> i followed by an optional q' <-a- i, where j is the
/// requesting component and i is a fresh non-final state that differs from q
/// only at j. Throws Error when a already uses the reserved silent action.
Msca split_lazy(const Msca& a);

struct Diff {
  bool rank_mismatch = false;
  bool initial_differs = false;
  std::vector<StateVec> states_only_in_a;
  std::vector<StateVec> states_only_in_b;
  std::vector<StateVec> finals_only_in_a;
  std::vector<StateVec> finals_only_in_b;
  std::vector<Transition> transitions_only_in_a;
  std::vector<Transition> transitions_only_in_b;
  /// Reachable parts equal up to a renaming of the state vectors.
  bool isomorphic = false;

  bool identical() const;
};

Diff compare(const Msca& a, const Msca& b);

/// Isomorphism of the reachable parts: a bijection on states preserving the
/// initial state, final states and labelled, modality-tagged transitions.
bool isomorphic(const Msca& a, const Msca& b);

/// The reachable part of a (operands dropped).
Msca reachable_part(const Msca& a);

}  // namespace msca

#endif  // MSCA_SYNTH_HPP_
