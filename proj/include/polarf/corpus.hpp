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


#pragma once

// The embedded example corpus: one `.ipf` fixture per row of the comparison
// table, plus annotation-stripped variants of rows A3, A11 and C6.

#include <chrono>
#include <string>
#include <vector>

#include "polarf/check.hpp"

namespace polarf {

enum class RowClass { Ok, Ann, Reject, Stripped };

std::string_view to_string(RowClass c);

struct CorpusEntry {
  std::string name;    // file stem, e.g. "a3_stripped"
  std::string row;     // table row, e.g. "A3"
  std::string source;  // the example as written for other systems
  RowClass row_class = RowClass::Ok;
  std::string expect;  // a type, "reject", or "ambiguous-let"
  std::string text;
};

/// All fixtures in name order. Metadata comes from the `-- key: value`
/// header lines.
const std::vector<CorpusEntry> &corpus_entries();

/// Header metadata of one fixture text.
CorpusEntry parse_corpus_entry(std::string name, std::string text);

struct CorpusResult {
  const CorpusEntry *entry = nullptr;
  CheckOutcome outcome;
  bool pass = false;
  std::string detail;  // why it failed, when it did
};

struct CorpusReport {
  std::vector<CorpusResult> results;
  std::size_t ok_accepted = 0;
  std::size_t ann_accepted = 0;
  std::size_t rejected = 0;
  std::size_t stripped_ambiguous = 0;
  std::chrono::duration<double> elapsed{};
  bool all_pass() const;
};

/// Checks every fixture against its expectation. An accepted row must
/// synthesize a type alpha-equal to the expected one; a rejected row must be
/// a type error (not a parse or internal error); a stripped row must fail
/// with an ambiguous let.
CorpusReport run_corpus(CheckOptions options = {});
CorpusResult run_entry(const CorpusEntry &entry, CheckOptions options = {});

/// The verdict table, one line per fixture, then a summary line.
std::string render_corpus(const CorpusReport &report);

}  // namespace polarf
