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

#include "msca/reach.hpp"

#include <algorithm>
#include <deque>

namespace msca {

std::set<StateVec> reachable_states(const Msca& a) {
  std::set<StateVec> seen;
  if (a.is_empty() || !a.has_state(a.initial())) return seen;
  std::deque<StateVec> todo{a.initial()};
  seen.insert(a.initial());
  while (!todo.empty()) {
    auto q = std::move(todo.front());
    todo.pop_front();
    for (const auto& t : a.outgoing(q))
      if (seen.insert(t.target).second) todo.push_back(t.target);
  }
  return seen;
}

std::set<StateVec> coreachable_states(const Msca& a) {
  std::map<StateVec, std::vector<const StateVec*>> preds;
  for (const auto& t : a.transitions()) preds[t.target].push_back(&t.source);

  std::set<StateVec> seen;
  std::deque<StateVec> todo;
  for (const auto& f : a.finals())
    if (a.has_state(f) && seen.insert(f).second) todo.push_back(f);
  while (!todo.empty()) {
    auto q = std::move(todo.front());
    todo.pop_front();
    auto it = preds.find(q);
    if (it == preds.end()) continue;
    for (const auto* p : it->second)
      if (seen.insert(*p).second) todo.push_back(*p);
  }
  return seen;
}

std::set<StateVec> dangling(const Msca& a) {
  const auto fwd = reachable_states(a);
  const auto bwd = coreachable_states(a);
  std::set<StateVec> out;
  for (const auto& q : a.states())
    if (!fwd.contains(q) || !bwd.contains(q)) out.insert(q);
  return out;
}

IdleReach::IdleReach(const Msca& a, const StateVec& from, std::size_t j,
                     const std::set<StateVec>& excluded)
    : automaton_(&a), excluded_(&excluded) {
  if (!a.has_state(from) || excluded.contains(from)) return;
  visited_.insert(from);
  parent_.emplace(from, std::nullopt);
  std::deque<StateVec> todo{from};
  while (!todo.empty()) {
    auto q = std::move(todo.front());
    todo.pop_front();
    for (const auto& t : a.outgoing(q)) {
      if (j >= t.label.size() || !t.label[j].is_idle()) continue;
      if (excluded.contains(t.target) || !visited_.insert(t.target).second) continue;
      parent_.emplace(t.target, t);
      todo.push_back(t.target);
    }
  }
}

bool IdleReach::reaches(const Transition& t) const {
  return visited_.contains(t.source) && !excluded_->contains(t.target) &&
         automaton_->has_transition(t);
}

std::optional<std::vector<Transition>> IdleReach::path_to(const Transition& t) const {
  if (!reaches(t)) return std::nullopt;
  std::vector<Transition> path{t};
  for (auto p = parent_.at(t.source); p; p = parent_.at(p->source)) path.push_back(*p);
  std::reverse(path.begin(), path.end());
  return path;
}

std::set<Transition> IdleReach::transitions() const {
  std::set<Transition> out;
  for (const auto& q : visited_)
    for (const auto& t : automaton_->outgoing(q))
      if (!excluded_->contains(t.target)) out.insert(t);
  return out;
}

std::set<Transition> reachable_via_idle(const Msca& a, const StateVec& from, std::size_t j,
                                        const std::set<StateVec>& forbidden) {
  auto excluded = dangling(a);
  excluded.insert(forbidden.begin(), forbidden.end());
  return IdleReach(a, from, j, excluded).transitions();
}

}  // namespace msca
