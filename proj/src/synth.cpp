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

#include "msca/synth.hpp"

#include "msca/reach.hpp"

namespace msca {

std::string to_string(ForbiddenReason r) {
  return r == ForbiddenReason::Uncontrollable ? "uncontrollable" : "dangling";
}

namespace {

void require_well_formed(const Msca& a, const char* who) {
  auto issues = validate(a);
  if (!issues.empty())
    throw Error(std::string(who) + ": ill-formed automaton: " + issues.front().message);
}

bool is_request(const Transition& t) {
  return classify_label(t.label) == LabelClass::Request;
}

}  // namespace

SynthesisResult synthesize(const Msca& a, Semantics sem) {
  require_well_formed(a, "synthesize");
  SynthesisResult result{Msca::empty(a.rank()), {}};
  SynthesisTrace& trace = result.trace;
  trace.semantics = sem;

  if (sem != Semantics::Mpc) {
    for (const auto& t : a.transitions())
      if (t.modality == Modality::Urgent)
        throw Error("synthesize: urgent transition " + to_string(t) +
                    " is only supported under mpc semantics");
  }
  if (a.is_empty()) {
    trace.empty = true;
    return result;
  }

  auto in_scope = [sem](const Transition& t) {
    return sem == Semantics::Mpc ? is_necessary(t.modality) : t.modality == Modality::Lazy;
  };

  std::set<Transition> kept = a.transitions();
  std::set<StateVec> forbidden = dangling(a);
  trace.initially_forbidden.assign(forbidden.begin(), forbidden.end());

  for (std::size_t i = 1;; ++i) {
    SynthesisIteration it;
    it.index = i;

    // Under mpc a bad necessary transition cannot be blocked; it stays and
    // its source is forbidden below.
    auto bad = [&](const Transition& t) { return forbidden.contains(t.target) || is_request(t); };
    std::set<Transition> next;
    for (const auto& t : kept) {
      if (bad(t) && !(sem == Semantics::Mpc && is_necessary(t.modality)))
        it.removed_transitions.push_back(t);
      else
        next.insert(t);
    }

    const Msca sub = a.with_transitions(next);
    const ControlContext ctx(a, sub, sem);

    std::set<StateVec> grown = forbidden;
    for (const auto& t : a.transitions()) {
      if (!in_scope(t) || forbidden.contains(t.source)) continue;
      Verdict v;
      if (sem == Semantics::Mpc) {
        if (!bad(t)) continue;
        v = {false, std::nullopt};
      } else {
        v = ctx.check(t);
      }
      if (!v.controllable && grown.insert(t.source).second)
        it.newly_forbidden.push_back({t.source, ForbiddenReason::Uncontrollable});
      it.checks.push_back({t, std::move(v)});
    }
    for (const auto& q : ctx.dangling_states())
      if (grown.insert(q).second) it.newly_forbidden.push_back({q, ForbiddenReason::Dangling});

    const bool unchanged = it.removed_transitions.empty() && it.newly_forbidden.empty();
    trace.iterations.push_back(std::move(it));
    kept = std::move(next);
    forbidden = std::move(grown);
    if (unchanged) {
      trace.fixpoint_index = i;
      break;
    }
  }

  if (forbidden.contains(a.initial())) {
    trace.empty = true;
    trace.final_trim.removed_states.assign(a.states().begin(), a.states().end());
    trace.final_trim.removed_transitions.assign(kept.begin(), kept.end());
    return result;
  }

  std::set<StateVec> states;
  for (const auto& q : a.states())
    if (!forbidden.contains(q)) states.insert(q);
  std::set<Transition> transitions;
  for (const auto& t : kept)
    if (states.contains(t.source) && states.contains(t.target)) transitions.insert(t);
  std::set<StateVec> finals;
  for (const auto& q : a.finals())
    if (states.contains(q)) finals.insert(q);

  Msca trimmed = reachable_part(
      Msca(a.rank(), std::move(states), a.initial(), std::move(finals), std::move(transitions)));

  for (const auto& q : a.states())
    if (!trimmed.has_state(q)) trace.final_trim.removed_states.push_back(q);
  for (const auto& t : kept)
    if (!trimmed.has_transition(t)) trace.final_trim.removed_transitions.push_back(t);

  result.orchestration = std::move(trimmed);
  return result;
}

Msca reachable_part(const Msca& a) {
  if (a.is_empty()) return Msca::empty(a.rank());
  auto states = reachable_states(a);
  std::set<Transition> transitions;
  for (const auto& t : a.transitions())
    if (states.contains(t.source)) transitions.insert(t);
  std::set<StateVec> finals;
  for (const auto& q : a.finals())
    if (states.contains(q)) finals.insert(q);
  return Msca(a.rank(), std::move(states), a.initial(), std::move(finals),
              std::move(transitions));
}

Msca split_lazy(const Msca& a) {
  require_well_formed(a, "split_lazy");
  const std::string silent(kSilentAction);
  if (a.request_alphabet().contains(silent) || a.offer_alphabet().contains(silent))
    throw Error("split_lazy: the automaton already uses the reserved action '" + silent + "'");
  if (a.is_empty()) return a;

  std::set<StateVec> states = a.states();
  std::set<Transition> transitions;
  std::size_t tag = 0;
  for (const auto& t : a.transitions()) {
    if (t.modality != Modality::Lazy) {
      transitions.insert(t);
      continue;
    }
    const std::size_t j = *requester_index(t.label);
    StateVec mid = t.source;
    do {
      mid[j] = t.source[j] + ".i" + std::to_string(tag++);
    } while (states.contains(mid));
    states.insert(mid);

    Label select(a.rank());
    select[j] = Action::offer(silent);
    transitions.insert({t.source, std::move(select), mid, Modality::Urgent});
    transitions.insert({mid, t.label, t.target, Modality::Optional});
  }
  return Msca(a.rank(), std::move(states), a.initial(), a.finals(), std::move(transitions));
}

}  // namespace msca
