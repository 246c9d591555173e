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


#include "polarf/polarf.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "polarf/check.hpp"
#include "polarf/corpus.hpp"
#include "polarf/pretty.hpp"

struct polarf_result {
  polarf::Status status = polarf::Status::InternalError;
  std::string type;
  std::string text;
  std::string trace;
  std::string json;
  std::string error_kind;
  int corpus_pass = 0;
};

namespace {

polarf::CheckOptions options_for(unsigned flags) {
  polarf::CheckOptions o;
  o.trace = (flags & POLARF_FLAG_TRACE) != 0;
  o.verify = (flags & POLARF_FLAG_VERIFY) != 0;
  return o;
}

void fill(polarf_result &r, const polarf::CheckOutcome &o) {
  r.status = o.status;
  if (o.type) r.type = polarf::pretty(o.type);
  r.text = polarf::render_text(o);
  r.trace = polarf::render_trace(o.trace);
  r.json = polarf::render_json(o);
  if (o.error) r.error_kind = std::string(polarf::to_string(o.error->kind));
  else if (o.status == polarf::Status::InternalError) r.error_kind = "internal";
}

template <typename Fn>
int produce(polarf_result **out, Fn &&fn) {
  if (out == nullptr) return POLARF_EINVAL;
  *out = nullptr;
  try {
    auto *r = new polarf_result;
    try {
      fn(*r);
    } catch (const std::bad_alloc &) {
      delete r;
      return POLARF_ENOMEM;
    } catch (const std::exception &e) {
      r->status = polarf::Status::InternalError;
      r->text = std::string("internal error: ") + e.what();
      r->error_kind = "internal";
    }
    *out = r;
    return POLARF_OK;
  } catch (const std::bad_alloc &) {
    return POLARF_ENOMEM;
  }
}

const char *str(const polarf_result *r, std::string polarf_result::*field) {
  return r == nullptr ? "" : (r->*field).c_str();
}

}  // namespace

extern "C" {

const char *polarf_version(void) { return "1.0.0"; }

int polarf_check(const char *source, size_t length, const char *file,
                 unsigned flags, polarf_result **out) {
  if (source == nullptr && length != 0) return POLARF_EINVAL;
  return produce(out, [&](polarf_result &r) {
    std::string_view text(source == nullptr ? "" : source, length);
    fill(r, polarf::check_source(text, file ? file : "<input>", options_for(flags)));
  });
}

int polarf_subtype_file(const char *source, size_t length, const char *file,
                        unsigned flags, polarf_result **out) {
  if (source == nullptr && length != 0) return POLARF_EINVAL;
  return produce(out, [&](polarf_result &r) {
    std::string_view text(source == nullptr ? "" : source, length);
    polarf::SubOutcome o =
        polarf::check_sub_source(text, file ? file : "<input>", options_for(flags));
    r.status = o.status;
    r.text = polarf::render_sub(o);
    if (o.error) r.error_kind = std::string(polarf::to_string(o.error->kind));
  });
}

int polarf_corpus_check(size_t index, unsigned flags, polarf_result **out) {
  const auto &entries = polarf::corpus_entries();
  if (index >= entries.size()) return POLARF_EINVAL;
  return produce(out, [&](polarf_result &r) {
    polarf::CorpusResult c = polarf::run_entry(entries[index], options_for(flags));
    fill(r, c.outcome);
    r.corpus_pass = c.pass ? 1 : 0;
  });
}

polarf_status polarf_result_status(const polarf_result *r) {
  return r == nullptr ? POLARF_INTERNAL_ERROR : static_cast<polarf_status>(r->status);
}

int polarf_result_exit_code(const polarf_result *r) {
  return r == nullptr ? 3 : polarf::exit_code(r->status);
}

const char *polarf_result_type(const polarf_result *r) { return str(r, &polarf_result::type); }
const char *polarf_result_text(const polarf_result *r) { return str(r, &polarf_result::text); }
const char *polarf_result_trace(const polarf_result *r) { return str(r, &polarf_result::trace); }
const char *polarf_result_json(const polarf_result *r) { return str(r, &polarf_result::json); }
const char *polarf_result_error_kind(const polarf_result *r) {
  return str(r, &polarf_result::error_kind);
}

int polarf_result_corpus_pass(const polarf_result *r) {
  return r == nullptr ? 0 : r->corpus_pass;
}

void polarf_result_free(polarf_result *r) { delete r; }

size_t polarf_corpus_count(void) { return polarf::corpus_entries().size(); }

int polarf_corpus_entry(size_t index, const char **name, const char **row,
                        const char **row_class) {
  const auto &entries = polarf::corpus_entries();
  if (index >= entries.size()) return POLARF_EINVAL;
  const auto &e = entries[index];
  if (name) *name = e.name.c_str();
  if (row) *row = e.row.c_str();
  if (row_class) *row_class = polarf::to_string(e.row_class).data();
  return POLARF_OK;
}

int polarf_corpus_report(unsigned flags, char **table, int *all_pass) {
  if (table == nullptr) return POLARF_EINVAL;
  *table = nullptr;
  try {
    polarf::CorpusReport report = polarf::run_corpus(options_for(flags));
    std::string text = polarf::render_corpus(report);
    char *buf = static_cast<char *>(std::malloc(text.size() + 1));
    if (buf == nullptr) return POLARF_ENOMEM;
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *table = buf;
    if (all_pass) *all_pass = report.all_pass() ? 1 : 0;
    return POLARF_OK;
  } catch (const std::bad_alloc &) {
    return POLARF_ENOMEM;
  }
}

void polarf_string_free(char *s) { std::free(s); }

}  // extern "C"
