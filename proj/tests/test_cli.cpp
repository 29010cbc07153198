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

// Runs the msca executable end to end.

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

const fs::path& work() {
  static const fs::path dir = [] {
    fs::path d = fs::path(MSCA_WORK_DIR) / "cli";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args) {
  const std::string cmd =
      "cd '" + work().string() + "' && MSCA_NO_COLOR=1 '" MSCA_CLI "' " + args + " 2>/dev/null";
  Run r{0, {}};
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit_corpus() {
  static bool done = false;
  if (done) return;
  REQUIRE(run("corpus emit all -o corpus").status == 0);
  done = true;
}

}  // namespace

TEST_CASE("corpus list names every bundled automaton") {
  const auto r = run("corpus list");
  CHECK(r.status == 0);
  for (const char* n : {"client1", "client2", "server", "alice", "bob", "carl", "dealer", "player",
                        "adrian", "bruce", "client2-urgent", "fig1-orchestration",
                        "fig2-orchestration", "fig4-orchestration", "fig8-orchestration"})
    CHECK(r.out.find(std::string(n) + "\n") != std::string::npos);
}

TEST_CASE("corpus emit | compose | synth equals fig2-orchestration") {
  emit_corpus();
  const auto r = run(
      "corpus emit server | '" MSCA_CLI "' compose - corpus/client2.msca.json "
      "corpus/client2.msca.json | '" MSCA_CLI "' synth --semantics original - -o fig2.json");
  CHECK(r.status == 0);
  CHECK(run("diff fig2.json corpus/fig2-orchestration.msca.json").status == 0);
}

TEST_CASE("synth exit codes") {
  emit_corpus();
  REQUIRE(run("compose corpus/alice.msca.json corpus/bob.msca.json corpus/carl.msca.json -o abc.json")
              .status == 0);
  CHECK(run("synth --semantics refined abc.json -o abc-refined.json").status == 2);
  CHECK(run("synth --semantics original abc.json -o abc-original.json").status == 0);
  CHECK(run("diff abc-original.json corpus/fig4-orchestration.msca.json").status == 0);
  REQUIRE(run("compose corpus/server.msca.json corpus/client2-urgent.msca.json "
              "corpus/client2-urgent.msca.json -o u.json").status == 0);
  CHECK(run("synth --semantics original u.json").status == 1);
  CHECK(run("synth --semantics mpc u.json -o /dev/null").status == 2);
  CHECK(run("synth --semantics sometimes u.json").status == 64);
}

TEST_CASE("diff") {
  emit_corpus();
  CHECK(run("diff corpus/dealer.msca.json corpus/dealer.msca.json").status == 0);
  const auto r = run("diff corpus/client1.msca.json corpus/client2.msca.json");
  CHECK(r.status == 1);
  CHECK(r.out.find("differs") != std::string::npos);
}

TEST_CASE("check") {
  emit_corpus();
  const auto ok = run("check corpus/server.msca.json");
  CHECK(ok.status == 0);
  CHECK(ok.out.find("well-formed") != std::string::npos);
  CHECK(ok.out.find("dangling: 0") != std::string::npos);
  std::ofstream(work() / "bad.json") << R"({"format_version":1,"rank":1,"states":[["0"]],"initial":["0"],
    "finals":[],"transitions":[{"source":["0"],"label":["!b"],"target":["0"],"modality":"lazy"}]})";
  const auto bad = run("check bad.json");
  CHECK(bad.status == 1);
  CHECK(bad.out.find("offer-not-optional") != std::string::npos);
  std::ofstream(work() / "broken.json") << "{ \"rank\": ";
  CHECK(run("check broken.json").status == 1);
}

TEST_CASE("project") {
  emit_corpus();
  REQUIRE(run("compose corpus/server.msca.json corpus/client2.msca.json corpus/client2.msca.json "
              "-o ssc.json").status == 0);
  CHECK(run("project -j 1 ssc.json -o p1.json").status == 0);
  CHECK(run("diff p1.json corpus/client2.msca.json").status == 0);
  CHECK(run("project -j 7 ssc.json").status == 1);
}

TEST_CASE("dot") {
  emit_corpus();
  CHECK(run("dot corpus/client1.msca.json -o c1.dot").status == 0);
  const auto text = slurp(work() / "c1.dot");
  CHECK(text.rfind("digraph", 0) == 0);
  CHECK(run("dot corpus/client1.msca.json").out == text);
}

TEST_CASE("simulate") {
  emit_corpus();
  const auto a = run("simulate --steps 8 --seed 3 corpus/fig2-orchestration.msca.json -o w.json");
  const auto b = run("simulate --steps 8 --seed 3 corpus/fig2-orchestration.msca.json");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("requests_seen: 0") != std::string::npos);
  CHECK(slurp(work() / "w.json").find("\"kind\": \"walk\"") != std::string::npos);
  CHECK(run("simulate --script 0,9 corpus/client1.msca.json").status == 1);
}

TEST_CASE("runs are byte-identical") {
  emit_corpus();
  REQUIRE(run("compose corpus/dealer.msca.json corpus/player.msca.json corpus/player.msca.json "
              "-o dpp.json").status == 0);
  CHECK(run("synth --semantics refined dpp.json -o r1.json --trace t1.json").status == 2);
  CHECK(run("synth --semantics refined dpp.json -o r2.json --trace t2.json").status == 2);
  CHECK(slurp(work() / "t1.json") == slurp(work() / "t2.json"));
  CHECK(slurp(work() / "r1.json") == slurp(work() / "r2.json"));
}

TEST_CASE("usage and I/O errors") {
  CHECK(run("frobnicate").status == 64);
  CHECK(run("check").status == 64);
  CHECK(run("check missing.json").status == 64);
  CHECK(run("corpus emit nobody").status == 1);
  emit_corpus();
  CHECK(run("dot corpus/client1.msca.json -o /proc/none/x.dot").status == 74);
  CHECK(run("--help").status == 0);
}
