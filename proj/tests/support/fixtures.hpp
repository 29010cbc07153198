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

#ifndef MSCA_TESTS_SUPPORT_FIXTURES_HPP_
#define MSCA_TESTS_SUPPORT_FIXTURES_HPP_

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "msca/compose.hpp"
#include "msca/corpus.hpp"
#include "msca/core.hpp"

namespace fx {

/// "[q] [label] [q'] modality"
inline msca::Transition tr(const std::string& text) {
  std::istringstream in(text);
  std::string s, l, t, m = "optional";
  in >> s >> l >> t >> m;
  return {msca::parse_state(s), msca::parse_label(l), msca::parse_state(t),
          msca::parse_modality(m)};
}

inline msca::StateVec st(const std::string& text) { return msca::parse_state(text); }

inline msca::Msca corpus(const char* name) { return msca::corpus_automaton(name); }

inline msca::Msca composed(std::initializer_list<const char*> names) {
  std::vector<msca::Msca> ops;
  for (auto n : names) ops.push_back(msca::corpus_automaton(n));
  return msca::compose(ops);
}

inline msca::Msca example1() { return composed({"server", "client2", "client2"}); }
inline msca::Msca example2() { return composed({"alice", "bob", "carl"}); }
inline msca::Msca example3() { return composed({"dealer", "player", "player"}); }

// The four transitions of the composition that the orchestration drops.
inline msca::Transition t1() { return tr("[1,0,1] [-,?a,-] [1,1,1] lazy"); }
inline msca::Transition t2() { return tr("[1,1,0] [-,-,?a] [1,1,1] lazy"); }
inline msca::Transition t3() { return tr("[1,1,1] [!tau,-,-] [2,1,1] optional"); }
inline msca::Transition t4() { return tr("[2,1,1] [!a,-,-] [3,1,1] optional"); }

inline msca::Msca without(const msca::Msca& a, std::initializer_list<msca::Transition> drop) {
  auto ts = a.transitions();
  for (const auto& t : drop) ts.erase(t);
  return a.with_transitions(ts);
}

}  // namespace fx

#endif  // MSCA_TESTS_SUPPORT_FIXTURES_HPP_
