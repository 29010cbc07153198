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

#include <doctest.h>

#include "msca/core.hpp"
#include "support/fixtures.hpp"

using namespace msca;
using fx::tr;

namespace {

bool has_code(const std::vector<Violation>& vs, const std::string& code) {
  for (const auto& v : vs)
    if (v.code == code) return true;
  return false;
}

}  // namespace

TEST_CASE("actions") {
  CHECK(Action::request("a").matches(Action::offer("a")));
  CHECK(Action::offer("a").matches(Action::request("a")));
  CHECK_FALSE(Action::offer("a").matches(Action::request("b")));
  CHECK_FALSE(Action::request("a").matches(Action::request("a")));
  CHECK_FALSE(Action::idle().matches(Action::idle()));
  CHECK(Action::request("a").complement() == Action::offer("a"));
  CHECK(Action::idle().name().empty());
  CHECK_THROWS_AS(Action::request(""), Error);
  CHECK(parse_action("?x") == Action::request("x"));
  CHECK(parse_action("!x").str() == "!x");
  CHECK(parse_action("-").is_idle());
  CHECK_THROWS_AS(parse_action("x"), Error);
  // canonical order: offers, idle, requests
  CHECK(Action::offer("z") < Action::idle());
  CHECK(Action::idle() < Action::request("a"));
}

TEST_CASE("classify_label") {
  CHECK(classify_label(parse_label("[!a,?a,-,-]")) == LabelClass::Match);
  CHECK(classify_label(parse_label("[?a,-]")) == LabelClass::Request);
  CHECK(classify_label(parse_label("[-,!b]")) == LabelClass::Offer);
  CHECK_THROWS_AS(classify_label(parse_label("[-,-]")), LabelError);
  CHECK_THROWS_AS(classify_label(parse_label("[!a,?b]")), LabelError);
  CHECK_THROWS_AS(classify_label(parse_label("[?a,?a]")), LabelError);
  CHECK_THROWS_AS(classify_label(parse_label("[!a,?a,!a]")), LabelError);
  CHECK_FALSE(try_classify_label(parse_label("[-]")).has_value());
  CHECK(requester_index(parse_label("[!a,-,?a]")) == 2u);
  CHECK(offerer_index(parse_label("[!a,-,?a]")) == 0u);
  CHECK_FALSE(requester_index(parse_label("[!a,-]")).has_value());
}

TEST_CASE("validate: Client1 is well-formed") {
  CHECK(validate(fx::corpus("client1")).empty());
  for (const auto& name : corpus_names()) CHECK_MESSAGE(validate(fx::corpus(name.c_str())).empty(), name);
}

TEST_CASE("validate: lazy offer") {
  Msca a(1, {{"0"}}, {"0"}, {{"0"}}, {tr("[0] [!b] [0] lazy")});
  CHECK(has_code(validate(a), "offer-not-optional"));
}

TEST_CASE("validate: idle component changes state") {
  Msca a(2, {{"0", "0"}, {"1", "1"}}, {"0", "0"}, {{"1", "1"}}, {tr("[0,0] [-,?a] [1,1] optional")});
  CHECK(has_code(validate(a), "idle-changes-state"));
}

TEST_CASE("validate: structural violations") {
  Msca a(2, {{"0", "0"}}, {"9", "9"}, {{"8", "8"}},
         {tr("[0,0] [-,-] [0,0] optional"), tr("[0,0] [?a] [7,7] optional")});
  const auto vs = validate(a);
  CHECK(has_code(vs, "initial-not-a-state"));
  CHECK(has_code(vs, "final-not-a-state"));
  CHECK(has_code(vs, "endpoint-not-a-state"));
  CHECK(has_code(vs, "label-length"));
  CHECK(has_code(vs, "label-ill-formed"));
  Msca b(2, {{"0"}}, {"0"}, {}, {});
  CHECK(has_code(validate(b), "state-length"));
}

TEST_CASE("validate: urgent silent offer allowed, other urgent offers not") {
  Msca ok(1, {{"0"}, {"1"}}, {"0"}, {{"1"}}, {tr("[0] [!tau] [1] urgent")});
  CHECK(validate(ok).empty());
  Msca bad(1, {{"0"}, {"1"}}, {"0"}, {{"1"}}, {tr("[0] [!a] [1] urgent")});
  CHECK(has_code(validate(bad), "offer-not-optional"));
}

TEST_CASE("empty automaton") {
  const auto e = Msca::empty(3);
  CHECK(e.is_empty());
  CHECK(e.rank() == 3);
  CHECK(validate(e).empty());
}

TEST_CASE("textual notation round-trips") {
  const auto t = tr("[1,0,1] [-,?a,-] [1,1,1] lazy");
  CHECK(to_string(t) == "[1,0,1] -[-,?a,-]-> [1,1,1] (lazy)");
  CHECK(parse_state(to_string(t.source)) == t.source);
  CHECK(parse_label(to_string(t.label)) == t.label);
  CHECK(to_string(tr("[0] [!b] [0]")) == "[0] -[!b]-> [0]");
  CHECK_THROWS_AS(parse_state("[a,,b]"), Error);
  CHECK_THROWS_AS(parse_modality("sometimes"), Error);
}

TEST_CASE("alphabets may overlap") {
  const auto a = fx::corpus("bruce");
  CHECK(a.request_alphabet() == std::set<std::string>{"b"});
  CHECK(a.offer_alphabet() == std::set<std::string>{"a"});
  const auto s = fx::example1();
  CHECK(s.request_alphabet().contains("a"));
  CHECK(s.offer_alphabet().contains("a"));
}

TEST_CASE("outgoing is the canonical slice") {
  const auto a = fx::example1();
  std::size_t total = 0;
  for (const auto& q : a.states()) {
    const Transition* prev = nullptr;
    for (const auto& t : a.outgoing(q)) {
      CHECK(t.source == q);
      if (prev) CHECK(*prev < t);
      prev = &t;
      ++total;
    }
  }
  CHECK(total == a.transitions().size());
}
