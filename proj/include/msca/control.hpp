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

#ifndef MSCA_CONTROL_HPP_
#define MSCA_CONTROL_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "msca/core.hpp"
#include "msca/reach.hpp"

namespace msca {

/// How a lazy (semi-controllable) transition is judged.
///
/// Original: some necessary match in the sub-automaton, between non-dangling
///   states, where the same component in the same local state performs the
///   same request.
/// Refined: as Original but restricted to lazy matches that are reachable
///   from the source of the transition through moves in which the requesting
///   component stays idle.
/// Forall: there is a non-dangling anchor state from which, for every lazy
///   request the requesting principal can perform in its local state, a lazy
///   match of that request is reachable while the principal stays idle.
/// Mpc: every necessary transition is uncontrollable.
enum class Semantics { Original, Refined, Forall, Mpc };

std::string to_string(Semantics s);
/// Parses "original", "refined", "forall" or "mpc". Throws Error otherwise.
Semantics parse_semantics(std::string_view text);

struct Witness {
  /// The matching transition(s): one under Original/Refined, one per request
  /// name (sorted by name) under Forall.
  std::vector<Transition> via;
  /// Forall only.
  std::optional<StateVec> anchor;
  /// Refined/Forall: for each via[k], an idle prefix followed by via[k].
  std::vector<std::vector<Transition>> paths;

  bool operator==(const Witness&) const = default;
};

struct Verdict {
  bool controllable = false;
  std::optional<Witness> witness;

  bool operator==(const Verdict&) const = default;
};

/// Controllability of transitions of `original` inside one sub-automaton.
///
/// Dangling states, witness candidates and idle explorations are computed
/// once and shared by every check(); verdicts depend only on the immutable
/// inputs. Witnesses are the least valid ones in canonical order, with
/// shortest idle prefixes. `original` and `sub` must outlive the context.
class ControlContext {
 public:
  ControlContext(const Msca& original, const Msca& sub, Semantics sem,
                 std::vector<Msca> principals = {});
  ~ControlContext();
  ControlContext(const ControlContext&) = delete;
  ControlContext& operator=(const ControlContext&) = delete;

  Semantics semantics() const { return sem_; }
  const std::set<StateVec>& dangling_states() const { return dangling_; }

  /// Verdict for t, a transition of the original automaton (unchecked).
  Verdict check(const Transition& t) const;

 private:
  using Key = std::tuple<std::size_t, std::string, std::string>;  // component, local state, request

  Verdict check_original(const Transition& t, std::size_t j) const;
  Verdict check_refined(const Transition& t, std::size_t j) const;
  Verdict check_forall(const Transition& t, std::size_t j) const;
  const IdleReach& idle_from(const StateVec& q, std::size_t j) const;
  const Msca& principal_of(std::size_t j) const;

  const Msca* original_;
  const Msca* sub_;
  Semantics sem_;
  std::vector<Msca> principals_;
  std::set<StateVec> dangling_;
  // Necessary matches of sub with non-dangling endpoints, indexed by the
  // requesting component, its local source state and the request name.
  std::map<Key, std::vector<const Transition*>> candidates_;

  mutable std::map<std::size_t, Msca> projected_;
  mutable std::map<std::pair<std::size_t, StateVec>, std::unique_ptr<IdleReach>> idle_;
  mutable std::map<std::pair<std::size_t, std::string>, Verdict> forall_cache_;
};

/// Decides whether t, a transition of a, is controllable in the
/// sub-automaton a_prime. Under Forall the principals are taken from
/// `principals` when given, otherwise from a's operands or by projection.
///
/// Throws Error when t is not a transition of a or a_prime is not a
/// sub-automaton of a.
Verdict is_controllable(const Transition& t, const Msca& a, const Msca& a_prime,
                        std::span<const Msca> principals, Semantics sem);

/// True iff every state and transition of sub belongs to a (same rank).
bool is_sub_automaton(const Msca& sub, const Msca& a);

}  // namespace msca

#endif  // MSCA_CONTROL_HPP_
