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


// polarf: command-line front end over the C API.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "polarf/polarf.h"

namespace {

bool read_file(const std::string &path, std::string &out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int report_io_error(const std::string &path) {
  std::cerr << "polarf: cannot read " << path << "\n";
  return 2;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Typechecker for polarized System F with impredicative local inference"};
  app.set_version_flag("--version", polarf_version());
  app.require_subcommand(1);

  std::string file;
  bool trace = false;
  bool json = false;
  bool verify = false;
  auto *check = app.add_subcommand("check", "Typecheck a program");
  check->add_option("FILE", file, "Program (.ipf)")->required();
  check->add_flag("--trace", trace, "Print the derivation");
  check->add_flag("--json", json, "Emit a JSON record");
  check->add_flag("--verify", verify, "Check postconditions after every judgment");

  std::string sub_file;
  auto *sub = app.add_subcommand("sub", "Check subtyping judgments, one `A <: B` each");
  sub->add_option("FILE", sub_file, "Judgment file")->required();

  bool corpus_verify = false;
  auto *corpus = app.add_subcommand("corpus", "Run the embedded example table");
  corpus->add_flag("--verify", corpus_verify, "Check postconditions after every judgment");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  polarf_result *r = nullptr;
  if (*check) {
    std::string text;
    if (!read_file(file, text)) return report_io_error(file);
    unsigned flags = (trace || json ? POLARF_FLAG_TRACE : 0u) |
                     (verify ? POLARF_FLAG_VERIFY : 0u);
    if (polarf_check(text.data(), text.size(), file.c_str(), flags, &r) != POLARF_OK)
      return 3;
    if (json) {
      std::cout << polarf_result_json(r) << "\n";
    } else {
      std::ostream &os = polarf_result_status(r) == POLARF_ACCEPTED ? std::cout : std::cerr;
      os << polarf_result_text(r) << "\n";
      if (trace) std::cout << polarf_result_trace(r);
    }
  } else if (*sub) {
    std::string text;
    if (!read_file(sub_file, text)) return report_io_error(sub_file);
    if (polarf_subtype_file(text.data(), text.size(), sub_file.c_str(), 0, &r) != POLARF_OK)
      return 3;
    std::cout << polarf_result_text(r) << "\n";
  } else if (*corpus) {
    char *table = nullptr;
    int all_pass = 0;
    if (polarf_corpus_report(corpus_verify ? POLARF_FLAG_VERIFY : 0u, &table, &all_pass) !=
        POLARF_OK)
      return 3;
    std::cout << table;
    polarf_string_free(table);
    return all_pass ? 0 : 1;
  }
  int code = polarf_result_exit_code(r);
  polarf_result_free(r);
  return code;
}
