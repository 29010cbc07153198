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

#include "msca/control.hpp"

#include <algorithm>

#include "msca/compose.hpp"

namespace msca {

std::string to_string(Semantics s) {
  switch (s) {
    case Semantics::Original: return "original";
    case Semantics::Refined: return "refined";
    case Semantics::Forall: return "forall";
    case Semantics::Mpc: return "mpc";
  }
  return "?";
}

Semantics parse_semantics(std::string_view text) {
  if (text == "original") return Semantics::Original;
  if (text == "refined") return Semantics::Refined;
  if (text == "forall") return Semantics::Forall;
  if (text == "mpc") return Semantics::Mpc;
  throw Error("unknown semantics '" + std::string(text) + "'");
}

ControlContext::ControlContext(const Msca& original, const Msca& sub, Semantics sem,
                               std::vector<Msca> principals)
    : original_(&original),
      sub_(&sub),
      sem_(sem),
      principals_(std::move(principals)),
      dangling_(dangling(sub)) {
  if (sem == Semantics::Mpc) return;
  for (const auto& t : sub.transitions()) {
    if (!is_necessary(t.modality)) continue;
    if (try_classify_label(t.label) != LabelClass::Match) continue;
    if (dangling_.contains(t.source) || dangling_.contains(t.target)) continue;
    const std::size_t j = *requester_index(t.label);
    candidates_[{j, t.source[j], t.label[j].name()}].push_back(&t);
  }
}

ControlContext::~ControlContext() = default;

Verdict ControlContext::check(const Transition& t) const {
  switch (t.modality) {
    case Modality::Optional: return {true, std::nullopt};
    case Modality::Urgent: return {false, std::nullopt};
    case Modality::Lazy: break;
  }
  if (sem_ == Semantics::Mpc) return {false, std::nullopt};

  const auto j = requester_index(t.label);
  if (!j) return {false, std::nullopt};
  switch (sem_) {
    case Semantics::Original: return check_original(t, *j);
    case Semantics::Refined: return check_refined(t, *j);
    case Semantics::Forall: return check_forall(t, *j);
    case Semantics::Mpc: break;
  }
  return {false, std::nullopt};
}

Verdict ControlContext::check_original(const Transition& t, std::size_t j) const {
  auto it = candidates_.find({j, t.source[j], t.label[j].name()});
  if (it == candidates_.end()) return {false, std::nullopt};
  // Candidates are collected in canonical order, so the first is the least.
  return {true, Witness{{*it->second.front()}, std::nullopt, {}}};
}

const IdleReach& ControlContext::idle_from(const StateVec& q, std::size_t j) const {
  auto& slot = idle_[{j, q}];
  if (!slot) slot = std::make_unique<IdleReach>(*sub_, q, j, dangling_);
  return *slot;
}

Verdict ControlContext::check_refined(const Transition& t, std::size_t j) const {
  auto it = candidates_.find({j, t.source[j], t.label[j].name()});
  if (it == candidates_.end()) return {false, std::nullopt};
  const auto& reach = idle_from(t.source, j);
  for (const auto* cand : it->second) {
    if (cand->modality != Modality::Lazy) continue;
    if (auto path = reach.path_to(*cand))
      return {true, Witness{{*cand}, std::nullopt, {std::move(*path)}}};
  }
  return {false, std::nullopt};
}

const Msca& ControlContext::principal_of(std::size_t j) const {
  if (j < principals_.size()) return principals_[j];
  auto it = projected_.find(j);
  if (it == projected_.end()) it = projected_.emplace(j, principal(*original_, j)).first;
  return it->second;
}

Verdict ControlContext::check_forall(const Transition& t, std::size_t j) const {
  const std::string& local = t.source[j];
  auto cached = forall_cache_.find({j, local});
  if (cached != forall_cache_.end()) return cached->second;

  std::set<std::string> requests;
  for (const auto& pt : principal_of(j).outgoing(StateVec{local}))
    if (pt.modality == Modality::Lazy && pt.label.size() == 1 && pt.label[0].is_request())
      requests.insert(pt.label[0].name());

  Verdict verdict{false, std::nullopt};
  for (const auto& anchor : sub_->states()) {
    if (dangling_.contains(anchor)) continue;
    const auto& reach = idle_from(anchor, j);
    Witness w{{}, anchor, {}};
    bool all = true;
    for (const auto& x : requests) {
      bool found = false;
      if (auto it = candidates_.find({j, local, x}); it != candidates_.end()) {
        for (const auto* cand : it->second) {
          if (cand->modality != Modality::Lazy) continue;
          if (auto path = reach.path_to(*cand)) {
            w.via.push_back(*cand);
            w.paths.push_back(std::move(*path));
            found = true;
            break;
          }
        }
      }
      if (!found) {
        all = false;
        break;
      }
    }
    if (all) {
      verdict = {true, std::move(w)};
      break;
    }
  }
  forall_cache_.emplace(std::pair{j, local}, verdict);
  return verdict;
}

bool is_sub_automaton(const Msca& sub, const Msca& a) {
  if (sub.is_empty()) return true;
  if (sub.rank() != a.rank()) return false;
  return std::ranges::includes(a.states(), sub.states()) &&
         std::ranges::includes(a.transitions(), sub.transitions());
}

Verdict is_controllable(const Transition& t, const Msca& a, const Msca& a_prime,
                        std::span<const Msca> principals, Semantics sem) {
  if (!a.has_transition(t))
    throw Error("is_controllable: " + to_string(t) + " is not a transition of the automaton");
  if (!is_sub_automaton(a_prime, a))
    throw Error("is_controllable: the second automaton is not a sub-automaton of the first");
  ControlContext ctx(a, a_prime, sem, std::vector<Msca>(principals.begin(), principals.end()));
  return ctx.check(t);
}

}  // namespace msca
