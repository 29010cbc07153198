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

#include "msca/compose.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace msca {
namespace {

Modality combine(Modality lhs, Modality rhs) {
  if (lhs == Modality::Urgent || rhs == Modality::Urgent) return Modality::Urgent;
  if (lhs == Modality::Lazy || rhs == Modality::Lazy) return Modality::Lazy;
  return Modality::Optional;
}

// The single non-idle action of a request or offer label, idle otherwise.
Action single_action(const Label& label) {
  if (classify_label(label) == LabelClass::Match) return Action::idle();
  for (const auto& a : label)
    if (!a.is_idle()) return a;
  return Action::idle();
}

struct Enabled {
  std::size_t operand;
  const Transition* move;
  Action action;  // idle for operand-level matches
};

}  // namespace

Msca compose(std::span<const Msca> operands) {
  if (operands.empty()) throw Error("compose: empty operand list");

  std::vector<std::size_t> offset(operands.size() + 1, 0);
  for (std::size_t k = 0; k < operands.size(); ++k) {
    const auto& op = operands[k];
    if (op.is_empty()) throw Error("compose: operand " + std::to_string(k) + " is empty");
    auto issues = validate(op);
    if (!issues.empty())
      throw Error("compose: operand " + std::to_string(k) + " is ill-formed: " +
                  issues.front().message);
    offset[k + 1] = offset[k] + op.rank();
  }
  const std::size_t rank = offset.back();

  auto slice = [&](const StateVec& q, std::size_t k) {
    return StateVec(q.begin() + offset[k], q.begin() + offset[k + 1]);
  };
  auto place = [&](StateVec& q, std::size_t k, const StateVec& local) {
    std::copy(local.begin(), local.end(), q.begin() + offset[k]);
  };
  auto lift = [&](Label& l, std::size_t k, const Label& local) {
    std::copy(local.begin(), local.end(), l.begin() + offset[k]);
  };

  StateVec init(rank);
  for (std::size_t k = 0; k < operands.size(); ++k) place(init, k, operands[k].initial());

  std::set<StateVec> states{init};
  std::set<Transition> transitions;
  std::deque<StateVec> frontier{init};

  while (!frontier.empty()) {
    StateVec q = std::move(frontier.front());
    frontier.pop_front();

    std::vector<Enabled> enabled;
    for (std::size_t k = 0; k < operands.size(); ++k)
      for (const auto& t : operands[k].outgoing(slice(q, k)))
        enabled.push_back({k, &t, single_action(t.label)});

    auto emit = [&](Transition t) {
      if (states.insert(t.target).second) frontier.push_back(t.target);
      transitions.insert(std::move(t));
    };

    for (const auto& e : enabled) {
      bool matchable = false;
      for (const auto& other : enabled) {
        if (other.operand == e.operand || !e.action.matches(other.action)) continue;
        matchable = true;
        // Each unordered pair is emitted once, from its lower operand.
        if (other.operand < e.operand) continue;
        Transition m{q, Label(rank), q, combine(e.move->modality, other.move->modality)};
        lift(m.label, e.operand, e.move->label);
        lift(m.label, other.operand, other.move->label);
        place(m.target, e.operand, e.move->target);
        place(m.target, other.operand, other.move->target);
        emit(std::move(m));
      }
      if (matchable) continue;
      Transition lone{q, Label(rank), q, e.move->modality};
      lift(lone.label, e.operand, e.move->label);
      place(lone.target, e.operand, e.move->target);
      emit(std::move(lone));
    }
  }

  std::set<StateVec> finals;
  for (const auto& q : states) {
    bool final = true;
    for (std::size_t k = 0; k < operands.size() && final; ++k)
      final = operands[k].is_final(slice(q, k));
    if (final) finals.insert(q);
  }

  return Msca(rank, std::move(states), std::move(init), std::move(finals), std::move(transitions),
              std::vector<Msca>(operands.begin(), operands.end()));
}

Msca project(const Msca& a, std::size_t j) {
  if (j >= a.rank())
    throw Error("project: index " + std::to_string(j) + " out of range for rank " +
                std::to_string(a.rank()));
  if (a.is_empty()) return Msca::empty(1);

  std::set<StateVec> states;
  for (const auto& q : a.states()) states.insert({q[j]});
  std::set<StateVec> finals;
  for (const auto& q : a.finals()) finals.insert({q[j]});
  std::set<Transition> transitions;
  for (const auto& t : a.transitions())
    if (!t.label[j].is_idle())
      transitions.insert({{t.source[j]}, {t.label[j]}, {t.target[j]}, t.modality});
  return Msca(1, std::move(states), {a.initial()[j]}, std::move(finals), std::move(transitions));
}

Msca principal(const Msca& a, std::size_t j) {
  if (j >= a.rank())
    throw Error("principal: index " + std::to_string(j) + " out of range for rank " +
                std::to_string(a.rank()));
  std::size_t total = 0;
  for (const auto& op : a.operands()) total += op.rank();
  if (a.operands().empty() || total != a.rank()) return project(a, j);

  for (const auto& op : a.operands()) {
    if (j < op.rank()) return op.rank() == 1 ? op : principal(op, j);
    j -= op.rank();
  }
  return project(a, j);  // unreachable: ranks add up
}

}  // namespace msca
