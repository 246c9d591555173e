// Copyright 2026 The polarf Authors
//
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


#include "polarf/corpus.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "polarf/pretty.hpp"
#include "polarf/types.hpp"

namespace polarf {

namespace embedded {
struct File {
  const char *name;
  const char *text;
};
// Generated at build time from corpus/*.ipf.
extern const File kCorpusFiles[];
extern const std::size_t kCorpusFileCount;
}  // namespace embedded

std::string_view to_string(RowClass c) {
  switch (c) {
    case RowClass::Ok: return "ok";
    case RowClass::Ann: return "ann";
    case RowClass::Reject: return "reject";
    case RowClass::Stripped: return "stripped";
  }
  return "ok";
}

namespace {

RowClass parse_class(const std::string &s) {
  if (s == "ok") return RowClass::Ok;
  if (s == "ann") return RowClass::Ann;
  if (s == "reject") return RowClass::Reject;
  if (s == "stripped") return RowClass::Stripped;
  throw std::invalid_argument("unknown corpus class: " + s);
}

// Glyph used in the comparison table.
std::string_view glyph(RowClass c) {
  switch (c) {
    case RowClass::Ok: return "✓";
    case RowClass::Ann: return "Ann";
    case RowClass::Reject: return "×";
    case RowClass::Stripped: return "strip";
  }
  return "?";
}

}  // namespace

CorpusEntry parse_corpus_entry(std::string name, std::string text) {
  CorpusEntry e;
  e.name = std::move(name);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("-- ", 0) != 0) break;
    auto colon = line.find(": ");
    if (colon == std::string::npos) continue;
    std::string key = line.substr(3, colon - 3);
    std::string value = line.substr(colon + 2);
    if (key == "row") e.row = value;
    else if (key == "source") e.source = value;
    else if (key == "class") e.row_class = parse_class(value);
    else if (key == "expect") e.expect = value;
  }
  e.text = std::move(text);
  return e;
}

const std::vector<CorpusEntry> &corpus_entries() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    for (std::size_t i = 0; i < embedded::kCorpusFileCount; ++i)
      out.push_back(parse_corpus_entry(embedded::kCorpusFiles[i].name,
                                       embedded::kCorpusFiles[i].text));
    // Table order: row letter, row number, the stripped variant last.
    auto key = [](const CorpusEntry &e) {
      return std::make_tuple(e.row.substr(0, 1), std::stoi(e.row.substr(1)), e.name);
    };
    std::sort(out.begin(), out.end(),
              [&](const auto &a, const auto &b) { return key(a) < key(b); });
    return out;
  }();
  return entries;
}

CorpusResult run_entry(const CorpusEntry &entry, CheckOptions options) {
  CorpusResult r;
  r.entry = &entry;
  Program program;
  try {
    program = parse_program(entry.text, entry.name + ".ipf");
  } catch (const TypeError &e) {
    r.outcome.status = Status::Malformed;
    r.detail = "parse error: " + e.message();
    return r;
  }
  r.outcome = check_program(program, entry.text, options);
  const CheckOutcome &o = r.outcome;
  switch (entry.row_class) {
    case RowClass::Ok:
    case RowClass::Ann: {
      if (o.status != Status::Accepted) {
        r.detail = "expected acceptance, got " + std::string(to_string(o.status)) +
                   (o.error ? ": " + o.error->message : o.internal);
        return r;
      }
      NegRef want = parse_neg_type(entry.expect, program.signature);
      r.pass = alpha_equal(want, o.type);
      if (!r.pass) r.detail = "expected " + pretty(want) + ", got " + pretty(o.type);
      return r;
    }
    case RowClass::Reject:
      r.pass = o.status == Status::Rejected;
      if (!r.pass) r.detail = "expected a type error, got " + std::string(to_string(o.status));
      return r;
    case RowClass::Stripped:
      r.pass = o.status == Status::Rejected && o.error &&
               o.error->kind == ErrorKind::AmbiguousLet;
      if (!r.pass)
        r.detail = "expected an ambiguous let, got " + std::string(to_string(o.status)) +
                   (o.error ? " (" + std::string(to_string(o.error->kind)) + ")" : "");
      return r;
  }
  return r;
}

bool CorpusReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const auto &r) { return r.pass; });
}

CorpusReport run_corpus(CheckOptions options) {
  CorpusReport report;
  auto start = std::chrono::steady_clock::now();
  for (const auto &e : corpus_entries()) {
    CorpusResult r = run_entry(e, options);
    if (r.pass) {
      switch (e.row_class) {
        case RowClass::Ok: ++report.ok_accepted; break;
        case RowClass::Ann: ++report.ann_accepted; break;
        case RowClass::Reject: ++report.rejected; break;
        case RowClass::Stripped: ++report.stripped_ambiguous; break;
      }
    }
    report.results.push_back(std::move(r));
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::string render_corpus(const CorpusReport &report) {
  std::ostringstream out;
  for (const auto &r : report.results) {
    const CorpusEntry &e = *r.entry;
    std::string label = e.row + (e.row_class == RowClass::Stripped ? "-" : "");
    std::string_view g = glyph(e.row_class);
    // The check mark and the cross are one column wide but several bytes long.
    std::size_t width = g == "✓" || g == "×" ? 1 : g.size();
    out << (r.pass ? "pass " : "FAIL ") << label << std::string(6 - label.size(), ' ')
        << g << std::string(7 - width, ' ');
    if (r.outcome.status == Status::Accepted)
      out << "OK : " << pretty(r.outcome.type);
    else if (r.outcome.error)
      out << "error[" << to_string(r.outcome.error->kind) << "]";
    else
      out << to_string(r.outcome.status);
    if (!r.pass) out << "  -- " << r.detail;
    out << "   " << e.source << "\n";
  }
  out << report.ok_accepted << " ✓ / " << report.ann_accepted << " Ann / "
      << report.rejected << " × ; " << report.stripped_ambiguous
      << " stripped rows ambiguous ; "
      << static_cast<long>(report.elapsed.count() * 1000.0) << " ms\n";
  return out.str();
}

}  // namespace polarf
