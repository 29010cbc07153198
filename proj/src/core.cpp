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

#include "msca/core.hpp"

#include <utility>

namespace msca {

Action::Action(ActionKind kind, std::string name)
    : kind_(kind), name_(std::move(name)) {
  if (name_.empty()) throw Error("action name must not be empty");
}

Action Action::request(std::string name) {
  return Action(ActionKind::Request, std::move(name));
}

Action Action::offer(std::string name) {
  return Action(ActionKind::Offer, std::move(name));
}

bool Action::matches(const Action& other) const {
  if (name_ != other.name_) return false;
  return (is_request() && other.is_offer()) || (is_offer() && other.is_request());
}

Action Action::complement() const {
  switch (kind_) {
    case ActionKind::Request: return offer(name_);
    case ActionKind::Offer: return request(name_);
    case ActionKind::Idle: break;
  }
  return idle();
}

std::string Action::str() const {
  switch (kind_) {
    case ActionKind::Request: return "?" + name_;
    case ActionKind::Offer: return "!" + name_;
    case ActionKind::Idle: break;
  }
  return "-";
}

namespace {

// Returns the class or a short reason why the label is ill-formed.
std::pair<std::optional<LabelClass>, std::string> inspect_label(const Label& label) {
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < label.size(); ++i)
    if (!label[i].is_idle()) active.push_back(i);

  if (active.empty()) return {std::nullopt, "no non-idle action"};
  if (active.size() == 1)
    return {label[active[0]].is_request() ? LabelClass::Request : LabelClass::Offer, {}};
  if (active.size() == 2 && label[active[0]].matches(label[active[1]]))
    return {LabelClass::Match, {}};
  if (active.size() == 2) return {std::nullopt, "non-idle actions do not match"};
  return {std::nullopt, "more than two non-idle actions"};
}

}  // namespace

LabelClass classify_label(const Label& label) {
  auto [cls, reason] = inspect_label(label);
  if (!cls) throw LabelError("ill-formed label " + to_string(label) + ": " + reason);
  return *cls;
}

std::optional<LabelClass> try_classify_label(const Label& label) {
  return inspect_label(label).first;
}

std::optional<std::size_t> requester_index(const Label& label) {
  for (std::size_t i = 0; i < label.size(); ++i)
    if (label[i].is_request()) return i;
  return std::nullopt;
}

std::optional<std::size_t> offerer_index(const Label& label) {
  for (std::size_t i = 0; i < label.size(); ++i)
    if (label[i].is_offer()) return i;
  return std::nullopt;
}

Msca::Msca(std::size_t rank, std::set<StateVec> states, StateVec initial,
           std::set<StateVec> finals, std::set<Transition> transitions,
           std::vector<Msca> operands)
    : rank_(rank),
      states_(std::move(states)),
      initial_(std::move(initial)),
      finals_(std::move(finals)),
      transitions_(std::move(transitions)),
      operands_(std::move(operands)) {}

Msca Msca::empty(std::size_t rank) { return Msca(rank, {}, {}, {}, {}); }

std::set<std::string> Msca::request_alphabet() const {
  std::set<std::string> names;
  for (const auto& t : transitions_)
    for (const auto& a : t.label)
      if (a.is_request()) names.insert(a.name());
  return names;
}

std::set<std::string> Msca::offer_alphabet() const {
  std::set<std::string> names;
  for (const auto& t : transitions_)
    for (const auto& a : t.label)
      if (a.is_offer()) names.insert(a.name());
  return names;
}

Msca Msca::with_transitions(std::set<Transition> transitions) const {
  return Msca(rank_, states_, initial_, finals_, std::move(transitions), operands_);
}

std::vector<Violation> validate(const Msca& a) {
  std::vector<Violation> out;
  auto report = [&](std::string code, std::string message) {
    out.push_back({std::move(code), std::move(message)});
  };

  if (a.is_empty()) {
    if (!a.initial().empty()) report("initial-not-a-state", "empty automaton has an initial state");
    if (!a.finals().empty()) report("final-not-a-state", "empty automaton has final states");
    if (!a.transitions().empty())
      report("endpoint-not-a-state", "empty automaton has transitions");
    return out;
  }

  const std::size_t n = a.rank();
  if (n == 0) report("rank", "rank must be positive");

  for (const auto& q : a.states())
    if (q.size() != n)
      report("state-length", "state " + to_string(q) + " has length " +
                                  std::to_string(q.size()) + ", rank is " + std::to_string(n));
  if (!a.has_state(a.initial()))
    report("initial-not-a-state", "initial state " + to_string(a.initial()) + " is not a state");
  for (const auto& q : a.finals())
    if (!a.has_state(q))
      report("final-not-a-state", "final state " + to_string(q) + " is not a state");

  for (const auto& t : a.transitions()) {
    const std::string where = "transition " + to_string(t);
    if (!a.has_state(t.source) || !a.has_state(t.target))
      report("endpoint-not-a-state", where + " has an endpoint that is not a state");
    if (t.label.size() != n) {
      report("label-length", where + " has a label of length " + std::to_string(t.label.size()));
      continue;
    }
    auto [cls, reason] = inspect_label(t.label);
    if (!cls) {
      report("label-ill-formed", where + ": " + reason);
    } else if (*cls == LabelClass::Offer && t.modality != Modality::Optional) {
      // The silent selection step of split_lazy is an urgent offer by design.
      const auto& act = t.label[*offerer_index(t.label)];
      if (!(act.name() == kSilentAction && t.modality == Modality::Urgent))
        report("offer-not-optional", where + ": offer must be optional");
    }
    if (t.source.size() == n && t.target.size() == n) {
      for (std::size_t i = 0; i < n; ++i)
        if (t.label[i].is_idle() && t.source[i] != t.target[i])
          report("idle-changes-state", where + ": idle component " + std::to_string(i) +
                                           " must not change state");
    }
  }
  return out;
}

std::string to_string(const StateVec& q) {
  std::string s = "[";
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i) s += ',';
    s += q[i];
  }
  return s + "]";
}

std::string to_string(const Label& l) {
  std::string s = "[";
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) s += ',';
    s += l[i].str();
  }
  return s + "]";
}

std::string to_string(Modality m) {
  switch (m) {
    case Modality::Optional: return "optional";
    case Modality::Urgent: return "urgent";
    case Modality::Lazy: return "lazy";
  }
  return "?";
}

std::string to_string(LabelClass c) {
  switch (c) {
    case LabelClass::Request: return "request";
    case LabelClass::Offer: return "offer";
    case LabelClass::Match: return "match";
  }
  return "?";
}

std::string to_string(const Transition& t) {
  std::string s = to_string(t.source) + " -" + to_string(t.label) + "-> " + to_string(t.target);
  if (t.modality != Modality::Optional) s += " (" + to_string(t.modality) + ")";
  return s;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_bracketed(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw Error("expected a bracketed vector, got '" + std::string(text) + "'");
  text = text.substr(1, text.size() - 2);
  std::vector<std::string_view> parts;
  if (trim(text).empty()) return parts;
  for (;;) {
    auto comma = text.find(',');
    parts.push_back(trim(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return parts;
}

}  // namespace

Action parse_action(std::string_view text) {
  text = trim(text);
  if (text == "-") return Action::idle();
  if (text.size() >= 2 && text.front() == '?') return Action::request(std::string(text.substr(1)));
  if (text.size() >= 2 && text.front() == '!') return Action::offer(std::string(text.substr(1)));
  throw Error("malformed action '" + std::string(text) + "'");
}

StateVec parse_state(std::string_view text) {
  StateVec q;
  for (auto part : split_bracketed(text)) {
    if (part.empty()) throw Error("empty basic state in '" + std::string(text) + "'");
    q.emplace_back(part);
  }
  return q;
}

Label parse_label(std::string_view text) {
  Label l;
  for (auto part : split_bracketed(text)) l.push_back(parse_action(part));
  return l;
}

Modality parse_modality(std::string_view text) {
  if (text == "optional") return Modality::Optional;
  if (text == "urgent") return Modality::Urgent;
  if (text == "lazy") return Modality::Lazy;
  throw Error("unknown modality '" + std::string(text) + "'");
}

}  // namespace msca
