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

// msca: command-line front end.
//
// Exit status: 0 success, 1 error (or "differs" for diff), 2 empty
// orchestration, 64 usage error, 74 I/O error.

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "msca/compose.hpp"
#include "msca/corpus.hpp"
#include "msca/io.hpp"
#include "msca/reach.hpp"
#include "msca/simulate.hpp"
#include "msca/synth.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kEmpty = 2;
constexpr int kUsage = 64;
constexpr int kIoError = 74;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool use_colour() { return std::getenv("MSCA_NO_COLOR") == nullptr && isatty(STDOUT_FILENO); }

std::string paint(const std::string& s, const char* code) {
  return use_colour() ? std::string("\033[") + code + "m" + s + "\033[0m" : s;
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error while reading '" + path + "'");
  }
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("error while writing '" + path + "'");
}

msca::Msca load_file(const std::string& path) { return msca::load(read_input(path)); }

int cmd_compose(const std::vector<std::string>& inputs, const std::string& out) {
  std::vector<msca::Msca> operands;
  for (const auto& p : inputs) operands.push_back(load_file(p));
  write_output(out, msca::save(msca::compose(operands)));
  return kOk;
}

int cmd_synth(const std::string& semantics, const std::string& input, const std::string& out,
              const std::string& trace_path) {
  const auto sem = msca::parse_semantics(semantics);
  const auto result = msca::synthesize(load_file(input), sem);
  if (!trace_path.empty()) write_output(trace_path, msca::save_trace(result.trace));
  write_output(out, msca::save(result.orchestration));
  if (result.orchestration.is_empty()) {
    std::cerr << paint("empty orchestration", "33") << " (" << semantics << ")\n";
    return kEmpty;
  }
  return kOk;
}

int cmd_check(const std::string& input) {
  const auto a = msca::parse_document(read_input(input));
  const auto issues = msca::validate(a);
  std::cout << "rank " << a.rank() << ", " << a.states().size() << " states, "
            << a.finals().size() << " finals, " << a.transitions().size() << " transitions\n";
  if (!issues.empty()) {
    for (const auto& v : issues)
      std::cout << paint("error", "31") << " [" << v.code << "] " << v.message << "\n";
    std::cout << paint("ill-formed", "31") << "\n";
    return kFailure;
  }
  std::map<msca::LabelClass, std::size_t> classes;
  std::map<msca::Modality, std::size_t> modalities;
  for (const auto& t : a.transitions()) {
    ++classes[msca::classify_label(t.label)];
    ++modalities[t.modality];
  }
  for (auto c : {msca::LabelClass::Request, msca::LabelClass::Offer, msca::LabelClass::Match})
    std::cout << msca::to_string(c) << ": " << classes[c] << "\n";
  for (auto m : {msca::Modality::Optional, msca::Modality::Urgent, msca::Modality::Lazy})
    std::cout << msca::to_string(m) << ": " << modalities[m] << "\n";
  const auto dangling = msca::dangling(a);
  std::cout << "dangling: " << dangling.size() << "\n";
  for (const auto& q : dangling) std::cout << "  " << msca::to_string(q) << "\n";
  std::cout << paint("well-formed", "32") << "\n";
  return kOk;
}

int cmd_project(std::size_t j, const std::string& input, const std::string& out) {
  write_output(out, msca::save(msca::project(load_file(input), j)));
  return kOk;
}

int cmd_dot(const std::string& input, const std::string& out) {
  write_output(out, msca::export_dot(load_file(input)));
  return kOk;
}

int cmd_diff(const std::string& lhs, const std::string& rhs) {
  const auto a = load_file(lhs);
  const auto b = load_file(rhs);
  const auto d = msca::compare(a, b);
  if (d.identical()) {
    std::cout << paint("identical", "32") << "\n";
    return kOk;
  }
  if (d.rank_mismatch) {
    std::cout << "rank differs: " << a.rank() << " vs " << b.rank() << "\n";
    return kFailure;
  }
  if (d.initial_differs)
    std::cout << "initial: " << msca::to_string(a.initial()) << " vs "
              << msca::to_string(b.initial()) << "\n";
  auto states = [](const char* what, const std::vector<msca::StateVec>& qs) {
    for (const auto& q : qs) std::cout << what << " " << msca::to_string(q) << "\n";
  };
  auto transitions = [](const char* what, const std::vector<msca::Transition>& ts) {
    for (const auto& t : ts) std::cout << what << " " << msca::to_string(t) << "\n";
  };
  states("- state", d.states_only_in_a);
  states("+ state", d.states_only_in_b);
  states("- final", d.finals_only_in_a);
  states("+ final", d.finals_only_in_b);
  transitions("-", d.transitions_only_in_a);
  transitions("+", d.transitions_only_in_b);
  std::cout << (d.isomorphic ? "isomorphic up to state names" : "not isomorphic") << "\n";
  std::cout << paint("differs", "31") << "\n";
  return kFailure;
}

int cmd_simulate(std::size_t steps, std::uint64_t seed, const std::vector<std::size_t>& script,
                 const std::string& input, const std::string& out) {
  const auto a = load_file(input);
  msca::WalkPolicy policy = msca::RandomPolicy{};
  if (!script.empty()) policy = msca::ScriptedPolicy{script};
  const auto w = msca::walk(a, steps, seed, policy);
  if (!out.empty()) write_output(out, msca::save_walk(w, seed));
  for (const auto& t : w.steps) std::cout << msca::to_string(t) << "\n";
  std::cout << "steps: " << w.steps.size() << "\n"
            << "requests_seen: " << w.verdict.requests_seen << "\n"
            << "ended_in_final: " << (w.verdict.ended_in_final ? "true" : "false") << "\n"
            << "final_reachable: " << (w.verdict.final_reachable ? "true" : "false") << "\n";
  return kOk;
}

int cmd_corpus_list() {
  for (const auto& n : msca::corpus_names()) std::cout << n << "\n";
  return kOk;
}

int cmd_corpus_emit(const std::vector<std::string>& names, const std::string& dir) {
  std::vector<std::string> todo = names;
  if (todo.size() == 1 && todo[0] == "all") todo = msca::corpus_names();
  if (dir.empty()) {
    if (todo.size() != 1) throw msca::Error("several automata need an output directory (-o)");
    write_output("", msca::save(msca::corpus_automaton(todo[0])));
    return kOk;
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir + "': " + ec.message());
  for (const auto& n : todo) {
    const auto a = msca::corpus_automaton(n);
    write_output((std::filesystem::path(dir) / (n + ".msca.json")).string(), msca::save(a));
  }
  return kOk;
}

// Input files must exist; "-" reads stdin.
const CLI::Validator kInputFile(
    [](std::string& path) {
      if (path == "-" || std::filesystem::is_regular_file(path)) return std::string();
      return "no such file: " + path;
    },
    "FILE");

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modal service contract automata: composition and orchestration synthesis"};
  app.require_subcommand(1);
  int status = kOk;

  std::vector<std::string> inputs;
  std::string input, input2, out, trace, semantics = "original";
  std::size_t component = 0, steps = 10;
  std::uint64_t seed = 0;
  std::vector<std::size_t> script;
  std::vector<std::string> names;

  auto* compose = app.add_subcommand("compose", "Compose automata");
  compose->add_option("inputs", inputs, "Operand files ('-' for stdin)")->required()->check(kInputFile);
  compose->add_option("-o,--output", out, "Output file (default stdout)");

  auto* synth = app.add_subcommand("synth", "Synthesize the orchestration");
  synth->add_option("--semantics", semantics, "original, refined, forall or mpc")
      ->check(CLI::IsMember({"original", "refined", "forall", "mpc"}));
  synth->add_option("input", input, "Input file ('-' for stdin)")->required()->check(kInputFile);
  synth->add_option("-o,--output", out, "Output file (default stdout)");
  synth->add_option("--trace", trace, "Write the synthesis trace here");

  auto* check = app.add_subcommand("check", "Validate and report");
  check->add_option("input", input, "Input file")->required()->check(kInputFile);

  auto* project = app.add_subcommand("project", "Project one component");
  project->add_option("-j", component, "Component index, from 0")->required();
  project->add_option("input", input, "Input file")->required()->check(kInputFile);
  project->add_option("-o,--output", out, "Output file (default stdout)");

  auto* dot = app.add_subcommand("dot", "Graphviz export");
  dot->add_option("input", input, "Input file")->required()->check(kInputFile);
  dot->add_option("-o,--output", out, "Output file (default stdout)");

  auto* diff = app.add_subcommand("diff", "Compare two automata");
  diff->add_option("a", input, "First file")->required()->check(kInputFile);
  diff->add_option("b", input2, "Second file")->required()->check(kInputFile);

  auto* simulate = app.add_subcommand("simulate", "Walk the automaton");
  simulate->add_option("--steps", steps, "Maximum number of steps");
  simulate->add_option("--seed", seed, "Seed of the random policy");
  simulate->add_option("--script", script, "Outgoing transition indices to follow")
      ->delimiter(',');
  simulate->add_option("input", input, "Input file")->required()->check(kInputFile);
  simulate->add_option("-o,--output", out, "Write the walk trace here");

  auto* corpus = app.add_subcommand("corpus", "Bundled automata");
  corpus->require_subcommand(1);
  auto* list = corpus->add_subcommand("list", "List bundled automata");
  auto* emit = corpus->add_subcommand("emit", "Write bundled automata");
  emit->add_option("names", names, "Names, or 'all'")->required();
  emit->add_option("-o,--output", out, "Output directory (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*compose) status = cmd_compose(inputs, out);
    else if (*synth) status = cmd_synth(semantics, input, out, trace);
    else if (*check) status = cmd_check(input);
    else if (*project) status = cmd_project(component, input, out);
    else if (*dot) status = cmd_dot(input, out);
    else if (*diff) status = cmd_diff(input, input2);
    else if (*simulate) status = cmd_simulate(steps, seed, script, input, out);
    else if (*list) status = cmd_corpus_list();
    else if (*emit) status = cmd_corpus_emit(names, out);
  } catch (const IoError& e) {
    std::cerr << "msca: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "msca: " << e.what() << "\n";
    return kFailure;
  }
  return status;
}
