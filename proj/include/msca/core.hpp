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

#ifndef MSCA_CORE_HPP_
#define MSCA_CORE_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <ranges>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace msca {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Offer name reserved for the silent selection step introduced by split_lazy.
inline constexpr std::string_view kSilentAction = "tau";

// Declaration order fixes the canonical order of actions: '!' < '-' < '?'.
enum class ActionKind { Offer, Idle, Request };

/// An atomic action: a request ?x, an offer !x, or the idle action -.
class Action {
 public:
  Action() = default;  // idle

  static Action request(std::string name);
  static Action offer(std::string name);
  static Action idle() { return Action{}; }

  ActionKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  bool is_idle() const { return kind_ == ActionKind::Idle; }
  bool is_request() const { return kind_ == ActionKind::Request; }
  bool is_offer() const { return kind_ == ActionKind::Offer; }

  /// True iff one of the two is ?x and the other is !x.
  bool matches(const Action& other) const;

  /// Complementary action (?x <-> !x); idle maps to idle.
  Action complement() const;

  std::string str() const;

  auto operator<=>(const Action&) const = default;
  bool operator==(const Action&) const = default;

 private:
  Action(ActionKind kind, std::string name);

  ActionKind kind_ = ActionKind::Idle;
  std::string name_;
};

using Label = std::vector<Action>;
using StateVec = std::vector<std::string>;

enum class LabelClass { Request, Offer, Match };

enum class Modality { Optional, Urgent, Lazy };

inline bool is_necessary(Modality m) { return m != Modality::Optional; }

struct Transition {
  StateVec source;
  Label label;
  StateVec target;
  Modality modality = Modality::Optional;

  // Member order is the canonical order: source, label, target, modality.
  auto operator<=>(const Transition&) const = default;
  bool operator==(const Transition&) const = default;
};

/// Raised by classify_label on an ill-formed label.
class LabelError : public Error {
 public:
  using Error::Error;
};

/// Classifies a label as a request, an offer or a match.
/// Throws LabelError when the label is ill-formed.
LabelClass classify_label(const Label& label);

/// Non-throwing variant; nullopt for ill-formed labels.
std::optional<LabelClass> try_classify_label(const Label& label);

/// Index of the (unique) requesting component, if any.
std::optional<std::size_t> requester_index(const Label& label);

/// Index of the (unique) offering component, if any.
std::optional<std::size_t> offerer_index(const Label& label);

/// A modal service contract automaton.
///
/// The automaton with no states is the distinguished "empty" automaton that
/// stands for the absence of an orchestration. Automata built by compose()
/// remember their operands so that principals can be recovered without
/// projection.
class Msca {
 public:
  Msca() = default;
  Msca(std::size_t rank, std::set<StateVec> states, StateVec initial,
       std::set<StateVec> finals, std::set<Transition> transitions,
       std::vector<Msca> operands = {});

  static Msca empty(std::size_t rank);

  std::size_t rank() const { return rank_; }
  const std::set<StateVec>& states() const { return states_; }
  const StateVec& initial() const { return initial_; }
  const std::set<StateVec>& finals() const { return finals_; }
  const std::set<Transition>& transitions() const { return transitions_; }
  const std::vector<Msca>& operands() const { return operands_; }

  bool is_empty() const { return states_.empty(); }
  bool has_state(const StateVec& q) const { return states_.contains(q); }
  bool is_final(const StateVec& q) const { return finals_.contains(q); }
  bool has_transition(const Transition& t) const {
    return transitions_.contains(t);
  }

  /// Transitions leaving q, in canonical order.
  auto outgoing(const StateVec& q) const {
    auto first = transitions_.lower_bound(Transition{q, {}, {}, Modality::Optional});
    auto last = first;
    while (last != transitions_.end() && last->source == q) ++last;
    return std::ranges::subrange(first, last);
  }

  /// Names x such that ?x occurs in some label.
  std::set<std::string> request_alphabet() const;
  /// Names x such that !x occurs in some label.
  std::set<std::string> offer_alphabet() const;

  /// Same states and initial state, transitions replaced. Operands are kept.
  Msca with_transitions(std::set<Transition> transitions) const;

  bool operator==(const Msca&) const = default;

 private:
  std::size_t rank_ = 0;
  std::set<StateVec> states_;
  StateVec initial_;
  std::set<StateVec> finals_;
  std::set<Transition> transitions_;
  std::vector<Msca> operands_;
};

struct Violation {
  std::string code;
  std::string message;

  bool operator==(const Violation&) const = default;
};

/// Lists every violated well-formedness constraint; empty means well-formed.
std::vector<Violation> validate(const Msca& a);

// Textual notation used by reports, DOT labels and the corpus:
// states "[a0,b0,c0]", labels "[!a,?a,-]", transitions
// "[q] -[label]-> [q'] (lazy)".
std::string to_string(const StateVec& q);
std::string to_string(const Label& l);
std::string to_string(Modality m);
std::string to_string(LabelClass c);
std::string to_string(const Transition& t);

/// Parses "?x", "!x" or "-". Throws Error on malformed input.
Action parse_action(std::string_view text);
/// Parses "[s1,...,sn]". Throws Error on malformed input.
StateVec parse_state(std::string_view text);
/// Parses "[a1,...,an]". Throws Error on malformed input.
Label parse_label(std::string_view text);
/// Parses "optional", "urgent" or "lazy". Throws Error otherwise.
Modality parse_modality(std::string_view text);

}  // namespace msca

#endif  // MSCA_CORE_HPP_
