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

#include "msca/compose.hpp"
#include "msca/control.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace msca;
using fx::st;
using fx::tr;

namespace {

Verdict check(const Transition& t, const Msca& a, const Msca& sub, Semantics sem) {
  return is_controllable(t, a, sub, {}, sem);
}

}  // namespace

TEST_CASE("semantics names") {
  for (auto s : {Semantics::Original, Semantics::Refined, Semantics::Forall, Semantics::Mpc})
    CHECK(parse_semantics(to_string(s)) == s);
  CHECK_THROWS_AS(parse_semantics("strict"), Error);
}

TEST_CASE("Original: t1 controllable in K1 via the initial match") {
  const auto a = fx::example1();
  const auto k1 = fx::without(a, {fx::t1(), fx::t2()});
  const auto v = check(fx::t1(), a, k1, Semantics::Original);
  CHECK(v.controllable);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->via == std::vector<Transition>{tr("[0,0,0] [!a,?a,-] [1,1,0] lazy")});
  const auto v2 = check(fx::t2(), a, k1, Semantics::Original);
  CHECK(v2.witness->via == std::vector<Transition>{tr("[0,0,0] [!a,-,?a] [1,0,1] lazy")});
}

TEST_CASE("alice-bob-carl: ?d from [a1,b0,c0]") {
  const auto a = fx::example2();
  const auto t = tr("[a1,b0,c0] [-,?d,-] [a1,b2,c0] lazy");
  REQUIRE(a.has_transition(t));
  const auto orig = check(t, a, a, Semantics::Original);
  CHECK(orig.controllable);
  CHECK(orig.witness->via == std::vector<Transition>{tr("[a2,b0,c0] [!d,?d,-] [a4,b2,c0] lazy")});
  CHECK_FALSE(check(t, a, a, Semantics::Refined).controllable);
  const auto fa = check(t, a, a, Semantics::Forall);
  CHECK(fa.controllable);
  CHECK(oracle::witness_valid(t, a, Semantics::Forall, *fa.witness,
                              {fx::corpus("alice"), fx::corpus("bob"), fx::corpus("carl")}));
  CHECK(oracle::controllable(t, a, Semantics::Forall,
                             {fx::corpus("alice"), fx::corpus("bob"), fx::corpus("carl")}));
}

TEST_CASE("Refined: [-,?3,-] out of [Card2,Pair1,Pair2Card2] is uncontrollable") {
  const auto a = fx::example3();
  const auto t = tr("[Card2,Pair1,Pair2Card2] [-,?3,-] [Card2,Pair1Card3,Pair2Card2] lazy");
  REQUIRE(a.has_transition(t));
  CHECK_FALSE(check(t, a, a, Semantics::Refined).controllable);
  CHECK_FALSE(oracle::controllable(t, a, Semantics::Refined, {}));
  CHECK(check(t, a, a, Semantics::Original).controllable);
}

TEST_CASE("Refined: [!2,-,?2] out of [Collecting,Pair1,Pair2] is controllable") {
  const auto a = fx::example3();
  const auto t = tr("[Collecting,Pair1,Pair2] [!2,-,?2] [Card2,Pair1,Pair2Card2] lazy");
  const auto v = check(t, a, a, Semantics::Refined);
  CHECK(v.controllable);
  CHECK(oracle::witness_valid(t, a, Semantics::Refined, *v.witness, {}));
}

TEST_CASE("optional and urgent transitions") {
  const auto a = fx::example1();
  const auto opt = tr("[0,0,0] [-,!b,-] [0,0,0] optional");
  for (auto s : {Semantics::Original, Semantics::Refined, Semantics::Forall, Semantics::Mpc})
    CHECK(check(opt, a, a, s).controllable);
  const auto u = fx::composed({"server", "client2-urgent", "client2-urgent"});
  const auto ut = tr("[0,0,0] [!a,?a,-] [1,1,0] urgent");
  REQUIRE(u.has_transition(ut));
  for (auto s : {Semantics::Original, Semantics::Refined, Semantics::Forall, Semantics::Mpc})
    CHECK_FALSE(check(ut, u, u, s).controllable);
  CHECK_FALSE(check(fx::t1(), a, a, Semantics::Mpc).controllable);
}

TEST_CASE("Original admits urgent witnesses, Refined does not") {
  Msca one(2, {{"0", "0"}, {"1", "1"}, {"1", "0"}}, {"0", "0"}, {{"1", "1"}},
           {tr("[0,0] [!a,?a] [1,1] urgent"), tr("[1,0] [-,?a] [1,1] lazy"),
            tr("[0,0] [!b,-] [1,0]")});
  const auto t = tr("[1,0] [-,?a] [1,1] lazy");
  CHECK(check(t, one, one, Semantics::Original).controllable);
  CHECK_FALSE(check(t, one, one, Semantics::Refined).controllable);
}

TEST_CASE("is_controllable: argument checks") {
  const auto a = fx::example1();
  CHECK_THROWS_AS(check(tr("[9,9,9] [-,?a,-] [1,1,1] lazy"), a, a, Semantics::Original), Error);
  CHECK_THROWS_AS(check(fx::t1(), a, fx::example2(), Semantics::Original), Error);
  CHECK(is_sub_automaton(fx::without(a, {fx::t1()}), a));
  CHECK_FALSE(is_sub_automaton(a, fx::without(a, {fx::t1()})));
}

TEST_CASE("ControlContext: Forall verdict shared by equal local states") {
  const auto a = fx::example2();
  ControlContext ctx(a, a, Semantics::Forall);
  const auto x = ctx.check(tr("[a1,b0,c0] [-,?d,-] [a1,b2,c0] lazy"));
  const auto y = ctx.check(tr("[a2,b0,c0] [-,?c,-] [a2,b1,c0] lazy"));
  CHECK(x == y);
}
