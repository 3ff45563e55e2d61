// Copyright 2026 The symlp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symlp/lp_io.h"

#include <fstream>
#include <sstream>
#include <utility>

#include "symlp/error.h"

namespace symlp {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

// Splits into lines, strips '#' comments and drops blank lines.
std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() &&
             (raw[pos] == ' ' || raw[pos] == '\t' || raw[pos] == '\r')) {
        ++pos;
      }
      const std::size_t tok_start = pos;
      while (pos < raw.size() && raw[pos] != ' ' && raw[pos] != '\t' &&
             raw[pos] != '\r') {
        ++pos;
      }
      if (pos > tok_start) {
        line.tokens.push_back(
            {raw.substr(tok_start, pos - tok_start), tok_start + 1});
      }
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

Rational ParseNumber(const Token& tok, std::size_t line) {
  try {
    return Rational::Parse(tok.text);
  } catch (const ParseError& e) {
    throw ParseError(e.bare_message(), line, tok.column);
  }
}

bool IsRelation(std::string_view s) {
  return s == "<=" || s == ">=" || s == "=" || s == "==" || s == "<" ||
         s == ">";
}

}  // namespace

LpFileDocument ParseLpDocument(std::string_view text) {
  enum class Section { kHeader, kObjective, kRows };
  Section section = Section::kHeader;
  std::optional<std::string> name;
  std::optional<Vector> objective;
  std::size_t objective_line = 0;
  std::vector<Vector> rows;
  Vector rhs;
  bool nonneg = true;
  bool seen_nonneg = false;
  bool seen_subject_to = false;

  for (const Line& line : Tokenize(text)) {
    const Token& head = line.tokens.front();
    if (head.text == "name") {
      if (name) throw ParseError("duplicate 'name'", line.number, head.column);
      if (line.tokens.size() < 2) {
        throw ParseError("'name' needs a value", line.number, head.column);
      }
      // The name is the rest of the line, inner spacing preserved.
      const Token& first = line.tokens[1];
      const Token& last = line.tokens.back();
      name = std::string(first.text.data(),
                         last.text.data() + last.text.size());
      continue;
    }
    if (head.text == "maximize") {
      if (section != Section::kHeader) {
        throw ParseError("unexpected 'maximize'", line.number, head.column);
      }
      if (line.tokens.size() != 1) {
        throw ParseError("unexpected text after 'maximize'", line.number,
                         line.tokens[1].column);
      }
      section = Section::kObjective;
      continue;
    }
    if (head.text == "subject-to") {
      if (!objective) {
        throw ParseError("'subject-to' before the objective coefficients",
                         line.number, head.column);
      }
      if (seen_subject_to) {
        throw ParseError("duplicate 'subject-to'", line.number, head.column);
      }
      if (line.tokens.size() != 1) {
        throw ParseError("unexpected text after 'subject-to'", line.number,
                         line.tokens[1].column);
      }
      seen_subject_to = true;
      section = Section::kRows;
      continue;
    }
    if (head.text == "nonneg") {
      if (seen_nonneg) {
        throw ParseError("duplicate 'nonneg'", line.number, head.column);
      }
      if (line.tokens.size() != 2 ||
          (line.tokens[1].text != "true" && line.tokens[1].text != "false")) {
        throw ParseError("expected 'nonneg true' or 'nonneg false'",
                         line.number, head.column);
      }
      nonneg = line.tokens[1].text == "true";
      seen_nonneg = true;
      continue;
    }

    switch (section) {
      case Section::kHeader:
        throw ParseError("expected 'maximize', got '" +
                             std::string(head.text) + "'",
                         line.number, head.column);
      case Section::kObjective: {
        if (objective) {
          throw ParseError("expected 'subject-to' after the objective",
                           line.number, head.column);
        }
        Vector c;
        for (const Token& tok : line.tokens) {
          c.push_back(ParseNumber(tok, line.number));
        }
        objective = std::move(c);
        objective_line = line.number;
        break;
      }
      case Section::kRows: {
        std::size_t rel = line.tokens.size();
        for (std::size_t t = 0; t < line.tokens.size(); ++t) {
          if (IsRelation(line.tokens[t].text)) {
            rel = t;
            break;
          }
        }
        if (rel == line.tokens.size()) {
          throw ParseError("constraint row has no '<='", line.number,
                           head.column);
        }
        const Token& relation = line.tokens[rel];
        if (relation.text != "<=") {
          throw ParseError("unsupported relation '" +
                               std::string(relation.text) +
                               "'; only '<=' rows are accepted",
                           line.number, relation.column);
        }
        if (rel + 2 != line.tokens.size()) {
          throw ParseError("expected exactly one right-hand side after '<='",
                           line.number, relation.column);
        }
        if (rel != objective->size()) {
          throw ParseError("row has " + std::to_string(rel) +
                               " coefficients, objective has " +
                               std::to_string(objective->size()),
                           line.number, head.column);
        }
        Vector row;
        for (std::size_t t = 0; t < rel; ++t) {
          row.push_back(ParseNumber(line.tokens[t], line.number));
        }
        rows.push_back(std::move(row));
        rhs.push_back(ParseNumber(line.tokens.back(), line.number));
        break;
      }
    }
  }

  if (!objective) throw ParseError("missing 'maximize' section");
  if (!seen_subject_to) throw ParseError("missing 'subject-to' section");
  Matrix a = rows.empty() ? Matrix(0, objective->size())
                          : Matrix::FromRows(rows);
  try {
    return {LpProblem(std::move(a), std::move(rhs), std::move(*objective),
                      nonneg),
            std::move(name)};
  } catch (const InvalidProblem& e) {
    throw ParseError(e.what(), objective_line);
  }
}

LpProblem ParseLpFile(std::string_view text) {
  return ParseLpDocument(text).lp;
}

std::string EmitLpFile(const LpProblem& lp,
                       const std::optional<std::string>& name) {
  std::ostringstream out;
  if (name) out << "name " << *name << "\n";
  out << "maximize\n";
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    out << (j == 0 ? "" : " ") << lp.c()[j];
  }
  out << "\nsubject-to\n";
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
      out << lp.a()(i, j) << " ";
    }
    out << "<= " << lp.b()[i] << "\n";
  }
  out << "nonneg " << (lp.nonneg() ? "true" : "false") << "\n";
  return out.str();
}

std::vector<Permutation> ParseGeneratorsFile(std::string_view text,
                                             std::size_t n) {
  std::vector<Permutation> gens;
  for (const Line& line : Tokenize(text)) {
    const Token& first = line.tokens.front();
    const Token& last = line.tokens.back();
    const std::string_view body(first.text.data(),
                                last.text.data() + last.text.size() -
                                    first.text.data());
    try {
      gens.push_back(Permutation::ParseCycles(body, n));
    } catch (const ParseError& e) {
      throw ParseError(e.bare_message(), line.number,
                       e.column() == 0 ? 0 : first.column + e.column() - 1);
    }
  }
  return gens;
}

Matrix ParseMatrixFile(std::string_view text) {
  std::vector<Vector> rows;
  for (const Line& line : Tokenize(text)) {
    Vector row;
    for (const Token& tok : line.tokens) {
      row.push_back(ParseNumber(tok, line.number));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("row has " + std::to_string(row.size()) +
                           " entries, expected " +
                           std::to_string(rows.front().size()),
                       line.number);
    }
    rows.push_back(std::move(row));
  }
  return Matrix::FromRows(rows);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace symlp
