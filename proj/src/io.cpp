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

#include "msca/io.hpp"

#include <algorithm>

#include "json_util.hpp"

namespace msca {

SyntaxError::SyntaxError(const std::string& what, std::size_t line, std::size_t column)
    : FormatError("syntax error at line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

SchemaError::SchemaError(const std::string& what, std::string field,
                         std::vector<Violation> violations)
    : FormatError("schema error in '" + field + "': " + what),
      field_(std::move(field)),
      violations_(std::move(violations)) {}

namespace detail {

Json state_to_json(const StateVec& q) { return Json(q); }

Json label_to_json(const Label& l) {
  Json out = Json::array();
  for (const auto& a : l) out.push_back(a.str());
  return out;
}

Json transition_to_json(const Transition& t) {
  Json out = Json::object();
  out["source"] = state_to_json(t.source);
  out["label"] = label_to_json(t.label);
  out["target"] = state_to_json(t.target);
  out["modality"] = to_string(t.modality);
  return out;
}

const Json& require(const Json& j, const char* key, const std::string& field) {
  if (!j.is_object()) throw SchemaError("expected an object", field);
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError("missing field", field.empty() ? key : field + "." + key);
  return *it;
}

StateVec state_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw SchemaError("expected an array of strings", field);
  StateVec q;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string() || j[i].get<std::string>().empty())
      throw SchemaError("expected a non-empty string", field + "[" + std::to_string(i) + "]");
    q.push_back(j[i].get<std::string>());
  }
  return q;
}

Label label_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw SchemaError("expected an array of actions", field);
  Label l;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_string()) throw SchemaError("expected an action string", where);
    try {
      l.push_back(parse_action(j[i].get<std::string>()));
    } catch (const Error& e) {
      throw SchemaError(e.what(), where);
    }
  }
  return l;
}

Transition transition_from_json(const Json& j, const std::string& field) {
  Transition t;
  t.source = state_from_json(require(j, "source", field), field + ".source");
  t.label = label_from_json(require(j, "label", field), field + ".label");
  t.target = state_from_json(require(j, "target", field), field + ".target");
  const auto& m = require(j, "modality", field);
  if (!m.is_string()) throw SchemaError("expected a modality string", field + ".modality");
  try {
    t.modality = parse_modality(m.get<std::string>());
  } catch (const Error& e) {
    throw SchemaError(e.what(), field + ".modality");
  }
  return t;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is the 1-based offset of the last character read.
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw SyntaxError(e.what(), line, column);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

using detail::Json;

namespace {

Json document(const Msca& a) {
  Json doc = Json::object();
  doc["format_version"] = kFormatVersion;
  doc["rank"] = a.rank();
  doc["states"] = Json::array();
  for (const auto& q : a.states()) doc["states"].push_back(detail::state_to_json(q));
  doc["initial"] = a.is_empty() ? Json(nullptr) : detail::state_to_json(a.initial());
  doc["finals"] = Json::array();
  for (const auto& q : a.finals()) doc["finals"].push_back(detail::state_to_json(q));
  doc["transitions"] = Json::array();
  for (const auto& t : a.transitions()) doc["transitions"].push_back(detail::transition_to_json(t));
  if (!a.operands().empty()) {
    doc["operands"] = Json::array();
    for (const auto& op : a.operands()) doc["operands"].push_back(document(op));
  }
  return doc;
}

Msca from_document(const Json& doc, const std::string& field) {
  auto sub = [&](const char* key) { return field.empty() ? std::string(key) : field + "." + key; };

  const auto& version = detail::require(doc, "format_version", field);
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion)
    throw SchemaError("unsupported format version", sub("format_version"));

  const auto& rank = detail::require(doc, "rank", field);
  if (!rank.is_number_unsigned()) throw SchemaError("expected a non-negative integer", sub("rank"));

  auto read_states = [&](const char* key) {
    const auto& arr = detail::require(doc, key, field);
    if (!arr.is_array()) throw SchemaError("expected an array", sub(key));
    std::set<StateVec> out;
    for (std::size_t i = 0; i < arr.size(); ++i)
      out.insert(detail::state_from_json(arr[i], sub(key) + "[" + std::to_string(i) + "]"));
    return out;
  };
  auto states = read_states("states");
  auto finals = read_states("finals");

  const auto& init = detail::require(doc, "initial", field);
  StateVec initial;
  if (!init.is_null()) initial = detail::state_from_json(init, sub("initial"));

  const auto& trans = detail::require(doc, "transitions", field);
  if (!trans.is_array()) throw SchemaError("expected an array", sub("transitions"));
  std::set<Transition> transitions;
  for (std::size_t i = 0; i < trans.size(); ++i)
    transitions.insert(
        detail::transition_from_json(trans[i], sub("transitions") + "[" + std::to_string(i) + "]"));

  std::vector<Msca> operands;
  if (auto it = doc.find("operands"); it != doc.end()) {
    if (!it->is_array()) throw SchemaError("expected an array", sub("operands"));
    for (std::size_t i = 0; i < it->size(); ++i)
      operands.push_back(from_document((*it)[i], sub("operands") + "[" + std::to_string(i) + "]"));
  }

  return Msca(rank.get<std::size_t>(), std::move(states), std::move(initial), std::move(finals),
              std::move(transitions), std::move(operands));
}

std::string field_of(const Violation& v) {
  if (v.code == "state-length" || v.code == "rank") return "states";
  if (v.code == "initial-not-a-state") return "initial";
  if (v.code == "final-not-a-state") return "finals";
  return "transitions";
}

}  // namespace

std::string save(const Msca& a) { return detail::dump(document(a)); }

Msca parse_document(std::string_view text) { return from_document(detail::parse_json(text), ""); }

Msca load(std::string_view text) {
  Msca a = parse_document(text);
  auto issues = validate(a);
  if (!issues.empty()) {
    auto field = field_of(issues.front());
    auto message = issues.front().message;
    throw SchemaError(message, std::move(field), std::move(issues));
  }
  return a;
}

namespace {

Json transitions_json(const std::vector<Transition>& ts) {
  Json out = Json::array();
  for (const auto& t : ts) out.push_back(detail::transition_to_json(t));
  return out;
}

Json states_json(const std::vector<StateVec>& qs) {
  Json out = Json::array();
  for (const auto& q : qs) out.push_back(detail::state_to_json(q));
  return out;
}

std::vector<Transition> transitions_from(const Json& j, const std::string& field) {
  if (!j.is_array()) throw SchemaError("expected an array", field);
  std::vector<Transition> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(detail::transition_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<StateVec> states_from(const Json& j, const std::string& field) {
  if (!j.is_array()) throw SchemaError("expected an array", field);
  std::vector<StateVec> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(detail::state_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

Json witness_json(const Witness& w) {
  Json out = Json::object();
  out["via"] = transitions_json(w.via);
  out["anchor"] = w.anchor ? detail::state_to_json(*w.anchor) : Json(nullptr);
  out["paths"] = Json::array();
  for (const auto& p : w.paths) out["paths"].push_back(transitions_json(p));
  return out;
}

Witness witness_from(const Json& j, const std::string& field) {
  Witness w;
  w.via = transitions_from(detail::require(j, "via", field), field + ".via");
  const auto& anchor = detail::require(j, "anchor", field);
  if (!anchor.is_null()) w.anchor = detail::state_from_json(anchor, field + ".anchor");
  const auto& paths = detail::require(j, "paths", field);
  if (!paths.is_array()) throw SchemaError("expected an array", field + ".paths");
  for (std::size_t i = 0; i < paths.size(); ++i)
    w.paths.push_back(transitions_from(paths[i], field + ".paths[" + std::to_string(i) + "]"));
  return w;
}

}  // namespace

std::string save_trace(const SynthesisTrace& trace) {
  Json doc = Json::object();
  doc["format_version"] = kFormatVersion;
  doc["kind"] = "synthesis";
  doc["semantics"] = to_string(trace.semantics);
  doc["initially_forbidden"] = states_json(trace.initially_forbidden);
  doc["iterations"] = Json::array();
  for (const auto& it : trace.iterations) {
    Json j = Json::object();
    j["index"] = it.index;
    j["removed_transitions"] = transitions_json(it.removed_transitions);
    j["newly_forbidden"] = Json::array();
    for (const auto& f : it.newly_forbidden)
      j["newly_forbidden"].push_back(
          Json{{"state", detail::state_to_json(f.state)}, {"reason", to_string(f.reason)}});
    j["checks"] = Json::array();
    for (const auto& c : it.checks) {
      Json cj = Json::object();
      cj["transition"] = detail::transition_to_json(c.transition);
      cj["controllable"] = c.verdict.controllable;
      cj["witness"] = c.verdict.witness ? witness_json(*c.verdict.witness) : Json(nullptr);
      j["checks"].push_back(std::move(cj));
    }
    doc["iterations"].push_back(std::move(j));
  }
  doc["fixpoint_index"] = trace.fixpoint_index;
  doc["final_trim"] = Json{{"removed_states", states_json(trace.final_trim.removed_states)},
                           {"removed_transitions",
                            transitions_json(trace.final_trim.removed_transitions)}};
  doc["empty"] = trace.empty;
  return detail::dump(doc);
}

SynthesisTrace load_trace(std::string_view text) {
  const Json doc = detail::parse_json(text);
  const auto& kind = detail::require(doc, "kind", "");
  if (kind != "synthesis") throw SchemaError("expected a synthesis trace", "kind");
  const auto& version = detail::require(doc, "format_version", "");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion)
    throw SchemaError("unsupported format version", "format_version");

  SynthesisTrace trace;
  const auto& sem = detail::require(doc, "semantics", "");
  if (!sem.is_string()) throw SchemaError("expected a string", "semantics");
  try {
    trace.semantics = parse_semantics(sem.get<std::string>());
  } catch (const Error& e) {
    throw SchemaError(e.what(), "semantics");
  }
  trace.initially_forbidden =
      states_from(detail::require(doc, "initially_forbidden", ""), "initially_forbidden");

  const auto& iterations = detail::require(doc, "iterations", "");
  if (!iterations.is_array()) throw SchemaError("expected an array", "iterations");
  for (std::size_t i = 0; i < iterations.size(); ++i) {
    const std::string field = "iterations[" + std::to_string(i) + "]";
    const auto& j = iterations[i];
    SynthesisIteration it;
    it.index = detail::require(j, "index", field).get<std::size_t>();
    it.removed_transitions =
        transitions_from(detail::require(j, "removed_transitions", field), field + ".removed_transitions");
    const auto& forb = detail::require(j, "newly_forbidden", field);
    for (std::size_t k = 0; k < forb.size(); ++k) {
      const std::string f = field + ".newly_forbidden[" + std::to_string(k) + "]";
      const auto reason = detail::require(forb[k], "reason", f).get<std::string>();
      if (reason != "uncontrollable" && reason != "dangling")
        throw SchemaError("unknown reason '" + reason + "'", f + ".reason");
      it.newly_forbidden.push_back(
          {detail::state_from_json(detail::require(forb[k], "state", f), f + ".state"),
           reason == "uncontrollable" ? ForbiddenReason::Uncontrollable
                                      : ForbiddenReason::Dangling});
    }
    const auto& checks = detail::require(j, "checks", field);
    for (std::size_t k = 0; k < checks.size(); ++k) {
      const std::string f = field + ".checks[" + std::to_string(k) + "]";
      ControllabilityCheck c;
      c.transition = detail::transition_from_json(detail::require(checks[k], "transition", f),
                                                  f + ".transition");
      c.verdict.controllable = detail::require(checks[k], "controllable", f).get<bool>();
      const auto& w = detail::require(checks[k], "witness", f);
      if (!w.is_null()) c.verdict.witness = witness_from(w, f + ".witness");
      it.checks.push_back(std::move(c));
    }
    trace.iterations.push_back(std::move(it));
  }
  trace.fixpoint_index = detail::require(doc, "fixpoint_index", "").get<std::size_t>();
  const auto& trim = detail::require(doc, "final_trim", "");
  trace.final_trim.removed_states =
      states_from(detail::require(trim, "removed_states", "final_trim"), "final_trim.removed_states");
  trace.final_trim.removed_transitions = transitions_from(
      detail::require(trim, "removed_transitions", "final_trim"), "final_trim.removed_transitions");
  trace.empty = detail::require(doc, "empty", "").get<bool>();
  return trace;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string modality_suffix(Modality m) {
  switch (m) {
    case Modality::Urgent: return "□u";
    case Modality::Lazy: return "□l";
    case Modality::Optional: break;
  }
  return "";
}

}  // namespace

std::string export_dot(const Msca& a) {
  std::string out = "digraph msca {\n";
  if (a.is_empty()) return out + "  // empty orchestration\n}\n";
  out += "  rankdir=LR;\n";
  out += "  node [shape=ellipse];\n";
  for (const auto& q : a.states()) {
    const auto name = to_string(q);
    out += "  " + quote(name) + " [label=" + quote(name);
    if (a.is_final(q)) out += ", peripheries=2";
    if (q == a.initial()) out += ", xlabel=\"→\"";
    out += "];\n";
  }
  for (const auto& t : a.transitions())
    out += "  " + quote(to_string(t.source)) + " -> " + quote(to_string(t.target)) +
           " [label=" + quote(to_string(t.label) + modality_suffix(t.modality)) + "];\n";
  return out + "}\n";
}

namespace {

// Recursive-descent parser over the DOT grammar; counts statements.
class DotParser {
 public:
  explicit DotParser(std::string_view text) : text_(text) {}

  DotCheck run() {
    DotCheck r;
    try {
      graph();
      skip();
      if (pos_ != text_.size()) fail("trailing input");
      r.ok = true;
    } catch (const Error& e) {
      r.error = e.what();
    }
    r.nodes = nodes_;
    r.edges = edges_;
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error("DOT offset " + std::to_string(pos_) + ": " + why);
  }

  void skip() {
    for (;;) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (text_.substr(pos_, 2) == "//" ||
          (pos_ < text_.size() && text_[pos_] == '#' && (pos_ == 0 || text_[pos_ - 1] == '\n'))) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (text_.substr(pos_, 2) == "/*") {
        auto end = text_.find("*/", pos_ + 2);
        if (end == std::string_view::npos) fail("unterminated comment");
        pos_ = end + 2;
      } else {
        return;
      }
    }
  }

  bool peek(std::string_view tok) {
    skip();
    return text_.substr(pos_, tok.size()) == tok;
  }

  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  static bool id_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }

  bool at_id() {
    skip();
    if (pos_ >= text_.size()) return false;
    const auto c = static_cast<unsigned char>(text_[pos_]);
    return id_start(c) || std::isdigit(c) || c == '.' || c == '-' || c == '"' || c == '<';
  }

  std::string id() {
    skip();
    if (pos_ >= text_.size()) fail("expected an identifier");
    const auto c = static_cast<unsigned char>(text_[pos_]);
    const std::size_t start = pos_;
    if (id_start(c)) {
      while (pos_ < text_.size() &&
             (id_start(static_cast<unsigned char>(text_[pos_])) ||
              std::isdigit(static_cast<unsigned char>(text_[pos_]))))
        ++pos_;
    } else if (std::isdigit(c) || c == '.' || c == '-') {
      if (c == '-' && text_.substr(pos_, 2) == "->") fail("expected an identifier");
      ++pos_;
      bool digits = std::isdigit(c) != 0;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
        digits = digits || std::isdigit(static_cast<unsigned char>(text_[pos_]));
        ++pos_;
      }
      if (!digits) fail("malformed numeral");
    } else if (c == '"') {
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') pos_ += text_[pos_] == '\\' ? 2 : 1;
      if (pos_ >= text_.size()) fail("unterminated string");
      ++pos_;
    } else if (c == '<') {
      int depth = 0;
      do {
        if (pos_ >= text_.size()) fail("unterminated HTML string");
        if (text_[pos_] == '<') ++depth;
        if (text_[pos_] == '>') --depth;
        ++pos_;
      } while (depth > 0);
    } else {
      fail("expected an identifier");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  bool keyword(std::string_view kw) {
    skip();
    if (text_.size() - pos_ < kw.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i)
      if (std::tolower(static_cast<unsigned char>(text_[pos_ + i])) != kw[i]) return false;
    const std::size_t after = pos_ + kw.size();
    if (after < text_.size() && (id_start(static_cast<unsigned char>(text_[after])) ||
                                 std::isdigit(static_cast<unsigned char>(text_[after]))))
      return false;
    pos_ = after;
    return true;
  }

  void graph() {
    keyword("strict");
    if (keyword("digraph")) {
      edge_op_ = "->";
    } else if (keyword("graph")) {
      edge_op_ = "--";
    } else {
      fail("expected 'graph' or 'digraph'");
    }
    if (!peek("{")) id();
    expect("{");
    stmt_list();
    expect("}");
  }

  void stmt_list() {
    while (!peek("}")) {
      if (pos_ >= text_.size()) fail("unexpected end of input");
      stmt();
      accept(";");
    }
  }

  void attr_list() {
    while (accept("[")) {
      while (!accept("]")) {
        id();
        expect("=");
        id();
        if (!accept(",")) accept(";");
      }
    }
  }

  void subgraph() {
    if (keyword("subgraph") && !peek("{")) id();
    expect("{");
    stmt_list();
    expect("}");
  }

  // node_id or subgraph as an edge endpoint.
  void endpoint() {
    if (peek("{") || peek("subgraph")) {
      subgraph();
      return;
    }
    id();
    if (accept(":")) {
      id();
      if (accept(":")) id();
    }
  }

  void stmt() {
    if (keyword("graph") || keyword("node") || keyword("edge")) {
      if (!peek("[")) fail("expected an attribute list");
      attr_list();
      return;
    }
    const bool is_subgraph = peek("{") || peek("subgraph");
    endpoint();
    if (!is_subgraph && accept("=")) {
      id();
      return;
    }
    std::size_t hops = 0;
    while (accept(edge_op_)) {
      endpoint();
      ++hops;
    }
    if (hops == 0 && peek(edge_op_ == "->" ? "--" : "->")) fail("wrong edge operator");
    attr_list();
    if (hops > 0) {
      edges_ += hops;
    } else if (!is_subgraph) {
      ++nodes_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::string edge_op_ = "->";
  std::size_t nodes_ = 0;
  std::size_t edges_ = 0;
};

}  // namespace

DotCheck check_dot(std::string_view text) { return DotParser(text).run(); }

}  // namespace msca
