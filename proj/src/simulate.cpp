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

#include "msca/simulate.hpp"

#include <deque>
#include <map>
#include <random>

#include "json_util.hpp"
#include "msca/io.hpp"
#include "msca/reach.hpp"

namespace msca {

namespace {

// Length of a shortest path from q to a final state, if any.
std::optional<std::size_t> distance_to_final(const Msca& a, const StateVec& q) {
  std::map<StateVec, std::size_t> dist{{q, 0}};
  std::deque<StateVec> todo{q};
  while (!todo.empty()) {
    auto s = std::move(todo.front());
    todo.pop_front();
    if (a.is_final(s)) return dist.at(s);
    for (const auto& t : a.outgoing(s))
      if (dist.emplace(t.target, dist.at(s) + 1).second) todo.push_back(t.target);
  }
  return std::nullopt;
}

}  // namespace

std::vector<StateVec> Walk::states(const Msca& a) const {
  std::vector<StateVec> out{a.initial()};
  for (const auto& t : steps) out.push_back(t.target);
  return out;
}

Walk walk(const Msca& a, std::size_t steps, std::uint64_t seed, const WalkPolicy& policy) {
  if (a.is_empty()) throw Error("walk: empty automaton");
  std::mt19937_64 rng(seed);
  const auto* script = std::get_if<ScriptedPolicy>(&policy);

  Walk w;
  StateVec q = a.initial();
  for (std::size_t k = 0; k < steps; ++k) {
    if (script && k >= script->indices.size()) break;
    std::vector<const Transition*> out;
    for (const auto& t : a.outgoing(q)) out.push_back(&t);
    if (script) {
      const std::size_t i = script->indices[k];
      if (i >= out.size())
        throw Error("walk: step " + std::to_string(k) + " asks for outgoing transition " +
                    std::to_string(i) + " of " + to_string(q) + ", which has " +
                    std::to_string(out.size()));
      w.steps.push_back(*out[i]);
    } else {
      if (out.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, out.size() - 1);
      w.steps.push_back(*out[pick(rng)]);
    }
    q = w.steps.back().target;
  }

  for (const auto& t : w.steps)
    if (try_classify_label(t.label) == LabelClass::Request) ++w.verdict.requests_seen;
  const auto d = distance_to_final(a, q);
  w.verdict.ended_in_final = d && *d <= steps - w.steps.size();
  const auto co = coreachable_states(a);
  w.verdict.final_reachable = true;
  for (const auto& s : w.states(a)) w.verdict.final_reachable &= co.contains(s);
  return w;
}

std::string save_walk(const Walk& w, std::uint64_t seed) {
  detail::Json doc = detail::Json::object();
  doc["format_version"] = kFormatVersion;
  doc["kind"] = "walk";
  doc["seed"] = seed;
  doc["steps"] = detail::Json::array();
  for (const auto& t : w.steps) doc["steps"].push_back(detail::transition_to_json(t));
  doc["verdict"] = {{"requests_seen", w.verdict.requests_seen},
                    {"ended_in_final", w.verdict.ended_in_final},
                    {"final_reachable", w.verdict.final_reachable}};
  return detail::dump(doc);
}

}  // namespace msca
