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

#include "msca/corpus.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace msca {

Msca automaton_from_lines(std::size_t rank, std::string_view initial,
                          const std::vector<std::string_view>& finals, std::string_view lines) {
  std::set<StateVec> states{parse_state(initial)};
  std::set<StateVec> final_states;
  for (auto f : finals) final_states.insert(parse_state(f));
  states.insert(final_states.begin(), final_states.end());

  std::set<Transition> transitions;
  std::istringstream in{std::string(lines)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string src, label, tgt, modality;
    if (!(words >> src)) continue;
    if (!(words >> label >> tgt >> modality)) throw Error("corpus: malformed line '" + line + "'");
    Transition t{parse_state(src), parse_label(label), parse_state(tgt), parse_modality(modality)};
    states.insert(t.source);
    states.insert(t.target);
    transitions.insert(std::move(t));
  }
  return Msca(rank, std::move(states), parse_state(initial), std::move(final_states),
              std::move(transitions));
}

namespace {

Msca client1() {
  return automaton_from_lines(1, "[0]", {"[0]", "[1]"}, R"(
    [0] [!b] [0] optional
    [0] [?a] [1] optional
  )");
}

Msca client2() {
  return automaton_from_lines(1, "[0]", {"[0]", "[1]"}, R"(
    [0] [!b] [0] optional
    [0] [?a] [1] lazy
  )");
}

Msca client2_urgent() {
  return automaton_from_lines(1, "[0]", {"[0]", "[1]"}, R"(
    [0] [!b] [0] optional
    [0] [?a] [1] urgent
  )");
}

Msca server() {
  return automaton_from_lines(1, "[0]", {"[0]", "[3]"}, R"(
    [0] [!a] [1] optional
    [1] [!tau] [2] optional
    [2] [!a] [3] optional
  )");
}

Msca alice() {
  return automaton_from_lines(1, "[a0]", {"[a5]", "[a6]"}, R"(
    [a0] [!a] [a1] optional
    [a1] [!c] [a3] optional
    [a3] [!e] [a5] optional
    [a0] [!b] [a2] optional
    [a2] [!d] [a4] optional
    [a4] [!f] [a6] optional
  )");
}

Msca bob() {
  return automaton_from_lines(1, "[b0]", {"[b1]", "[b2]"}, R"(
    [b0] [?c] [b1] lazy
    [b0] [?d] [b2] lazy
  )");
}

Msca carl() {
  return automaton_from_lines(1, "[c0]", {"[c1]", "[c2]"}, R"(
    [c0] [?e] [c1] lazy
    [c0] [?f] [c2] lazy
  )");
}

Msca dealer() {
  return automaton_from_lines(
      1, "[Dealing]",
      {"[Cards21]", "[Cards32]", "[Cards31]", "[Cards43]", "[Cards42]", "[Cards41]"}, R"(
    [Dealing] [?pair1] [P1] optional
    [Dealing] [?pair2] [P2] optional
    [P1] [?pair2] [Collecting] optional
    [P1] [?pair3] [Collecting] optional
    [P2] [?pair3] [Collecting] optional
    [Collecting] [!2] [Card2] optional
    [Collecting] [!3] [Card3] optional
    [Collecting] [!4] [Card4] optional
    [Card2] [!1] [Cards21] optional
    [Card3] [!2] [Cards32] optional
    [Card3] [!1] [Cards31] optional
    [Card4] [!3] [Cards43] optional
    [Card4] [!2] [Cards42] optional
    [Card4] [!1] [Cards41] optional
  )");
}

Msca player() {
  return automaton_from_lines(
      1, "[Waiting]",
      {"[Pair1Card1]", "[Pair1Card3]", "[Pair2Card2]", "[Pair2Card4]", "[Pair3Card2]",
       "[Pair3Card3]"},
      R"(
    [Waiting] [!pair1] [Pair1] optional
    [Waiting] [!pair2] [Pair2] optional
    [Waiting] [!pair3] [Pair3] optional
    [Pair1] [?1] [Pair1Card1] lazy
    [Pair1] [?3] [Pair1Card3] lazy
    [Pair2] [?2] [Pair2Card2] lazy
    [Pair2] [?4] [Pair2Card4] lazy
    [Pair3] [?2] [Pair3Card2] lazy
    [Pair3] [?3] [Pair3Card3] lazy
  )");
}

Msca adrian() {
  return automaton_from_lines(1, "[0]", {"[1]"}, R"(
    [0] [!b] [0] optional
    [0] [?a] [1] lazy
  )");
}

Msca bruce() {
  return automaton_from_lines(1, "[0]", {"[2]"}, R"(
    [0] [?b] [1] lazy
    [1] [!a] [2] optional
  )");
}

Msca fig1() {
  return automaton_from_lines(2, "[0,0]", {"[0,0]"}, R"(
    [0,0] [!b,-] [0,0] optional
    [0,0] [-,!b] [0,0] optional
  )");
}

// [0,0,0] is final as well: every component is in a final state there.
Msca fig2() {
  return automaton_from_lines(3, "[0,0,0]", {"[0,0,0]", "[3,1,1]"}, R"(
    [0,0,0] [!a,-,?a] [1,0,1] lazy
    [0,0,0] [!a,?a,-] [1,1,0] lazy
    [2,0,1] [!a,?a,-] [3,1,1] lazy
    [2,1,0] [!a,-,?a] [3,1,1] lazy
    [1,0,1] [!tau,-,-] [2,0,1] optional
    [1,1,0] [!tau,-,-] [2,1,0] optional
    [0,0,0] [-,!b,-] [0,0,0] optional
    [0,0,0] [-,-,!b] [0,0,0] optional
    [1,0,1] [-,!b,-] [1,0,1] optional
    [2,0,1] [-,!b,-] [2,0,1] optional
    [1,1,0] [-,-,!b] [1,1,0] optional
    [2,1,0] [-,-,!b] [2,1,0] optional
  )");
}

Msca fig4() {
  return automaton_from_lines(3, "[a0,b0,c0]", {"[a5,b1,c1]", "[a6,b2,c2]"}, R"(
    [a0,b0,c0] [!a,-,-] [a1,b0,c0] optional
    [a1,b0,c0] [!c,?c,-] [a3,b1,c0] lazy
    [a3,b1,c0] [!e,-,?e] [a5,b1,c1] lazy
    [a0,b0,c0] [!b,-,-] [a2,b0,c0] optional
    [a2,b0,c0] [!d,?d,-] [a4,b2,c0] lazy
    [a4,b2,c0] [!f,-,?f] [a6,b2,c2] lazy
  )");
}

Msca fig8() {
  return automaton_from_lines(
      3, "[Dealing,Waiting,Waiting]",
      {"[Cards21,Pair1Card1,Pair2Card2]", "[Cards32,Pair1Card3,Pair2Card2]",
       "[Cards41,Pair1Card1,Pair2Card4]", "[Cards43,Pair1Card3,Pair2Card4]",
       "[Cards21,Pair2Card2,Pair1Card1]", "[Cards32,Pair2Card2,Pair1Card3]",
       "[Cards41,Pair2Card4,Pair1Card1]", "[Cards43,Pair2Card4,Pair1Card3]"},
      R"(
    [Dealing,Waiting,Waiting] [?pair1,!pair1,-] [P1,Pair1,Waiting] optional
    [Dealing,Waiting,Waiting] [?pair1,-,!pair1] [P1,Waiting,Pair1] optional
    [P1,Pair1,Waiting] [?pair2,-,!pair2] [Collecting,Pair1,Pair2] optional
    [P1,Waiting,Pair1] [?pair2,!pair2,-] [Collecting,Pair2,Pair1] optional
    [Collecting,Pair1,Pair2] [!4,-,?4] [Card4,Pair1,Pair2Card4] lazy
    [Collecting,Pair1,Pair2] [!3,?3,-] [Card3,Pair1Card3,Pair2] lazy
    [Collecting,Pair1,Pair2] [!2,-,?2] [Card2,Pair1,Pair2Card2] lazy
    [Card2,Pair1,Pair2Card2] [!1,?1,-] [Cards21,Pair1Card1,Pair2Card2] lazy
    [Card3,Pair1Card3,Pair2] [!2,-,?2] [Cards32,Pair1Card3,Pair2Card2] lazy
    [Card4,Pair1,Pair2Card4] [!1,?1,-] [Cards41,Pair1Card1,Pair2Card4] lazy
    [Card4,Pair1,Pair2Card4] [!3,?3,-] [Cards43,Pair1Card3,Pair2Card4] lazy
    [Collecting,Pair2,Pair1] [!4,?4,-] [Card4,Pair2Card4,Pair1] lazy
    [Collecting,Pair2,Pair1] [!3,-,?3] [Card3,Pair2,Pair1Card3] lazy
    [Collecting,Pair2,Pair1] [!2,?2,-] [Card2,Pair2Card2,Pair1] lazy
    [Card2,Pair2Card2,Pair1] [!1,-,?1] [Cards21,Pair2Card2,Pair1Card1] lazy
    [Card3,Pair2,Pair1Card3] [!2,?2,-] [Cards32,Pair2Card2,Pair1Card3] lazy
    [Card4,Pair2Card4,Pair1] [!1,-,?1] [Cards41,Pair2Card4,Pair1Card1] lazy
    [Card4,Pair2Card4,Pair1] [!3,-,?3] [Cards43,Pair2Card4,Pair1Card3] lazy
  )");
}

const std::vector<std::pair<std::string, std::function<Msca()>>>& table() {
  static const std::vector<std::pair<std::string, std::function<Msca()>>> t = {
      {"client1", client1},
      {"client2", client2},
      {"server", server},
      {"alice", alice},
      {"bob", bob},
      {"carl", carl},
      {"dealer", dealer},
      {"player", player},
      {"adrian", adrian},
      {"bruce", bruce},
      {"client2-urgent", client2_urgent},
      {"fig1-orchestration", fig1},
      {"fig2-orchestration", fig2},
      {"fig4-orchestration", fig4},
      {"fig8-orchestration", fig8},
  };
  return t;
}

}  // namespace

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : table()) out.push_back(name);
  return out;
}

Msca corpus_automaton(std::string_view name) {
  for (const auto& [n, make] : table())
    if (n == name) return make();
  throw Error("unknown corpus automaton '" + std::string(name) + "'");
}

}  // namespace msca
