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

#ifndef MSCA_IO_HPP_
#define MSCA_IO_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "msca/core.hpp"
#include "msca/synth.hpp"

namespace msca {

inline constexpr int kFormatVersion = 1;

/// Malformed document.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// JSON syntax error; line and column are 1-based.
class SyntaxError : public FormatError {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed JSON that does not describe a valid automaton. `field` names
/// the offending field; `violations` is filled when the structure parsed but
/// failed validation.
class SchemaError : public FormatError {
 public:
  SchemaError(const std::string& what, std::string field, std::vector<Violation> violations = {});
  const std::string& field() const { return field_; }
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::string field_;
  std::vector<Violation> violations_;
};

/// Canonical `.msca.json` document: sorted states and transitions, two-space
/// indentation, LF line endings, trailing newline.
std::string save(const Msca& a);

/// Parses and validates a `.msca.json` document.
Msca load(std::string_view text);

/// Parses without validating, so that ill-formed candidates can be reported.
Msca parse_document(std::string_view text);

/// `.trace.json` document for a synthesis run.
std::string save_trace(const SynthesisTrace& trace);
SynthesisTrace load_trace(std::string_view text);

/// Graphviz rendering: one node per state (finals doubled, initial marked
/// with an incoming arrow glyph), one edge per transition labelled
/// "[!a,?a,-]" plus "□u"/"□l" for necessary transitions.
std::string export_dot(const Msca& a);

struct DotCheck {
  bool ok = false;
  std::string error;
  std::size_t nodes = 0;  // node statements
  std::size_t edges = 0;
};

/// Minimal checker for the DOT language grammar (graphs, attribute, node and
/// edge statements, subgraphs, comments, quoted and HTML identifiers).
DotCheck check_dot(std::string_view text);

}  // namespace msca

#endif  // MSCA_IO_HPP_
