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


#include "polarf/check.hpp"

#include "json.hpp"

#include "polarf/oracle.hpp"
#include "polarf/pretty.hpp"
#include "polarf/subtyper.hpp"
#include "polarf/typer.hpp"
#include "polarf/types.hpp"
#include "polarf/wellformed.hpp"

namespace polarf {

namespace {

Diagnostic diagnose(const TypeError &e, std::string_view text) {
  Diagnostic d;
  d.kind = e.kind();
  d.message = e.message();
  d.span = e.span();
  d.position = line_column(text, e.span().start);
  d.expected = e.expected();
  return d;
}

Status status_for(ErrorKind k) {
  return k == ErrorKind::Parse || k == ErrorKind::IllFormed ? Status::Malformed
                                                            : Status::Rejected;
}

void check_assumptions(const Program &p) {
  AlgContext empty;
  for (const auto &a : p.assumptions)
    if (auto why = wf_type_problem(empty, a.type, &p.signature); !why.empty())
      throw TypeError(ErrorKind::IllFormed, "ill-formed type for " + a.name + ": " + why,
                      a.span);
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Accepted: return "accepted";
    case Status::Rejected: return "rejected";
    case Status::Malformed: return "malformed";
    case Status::InternalError: return "internal-error";
  }
  return "internal-error";
}

int exit_code(Status s) {
  switch (s) {
    case Status::Accepted: return 0;
    case Status::Rejected: return 1;
    case Status::Malformed: return 2;
    case Status::InternalError: return 3;
  }
  return 3;
}

CheckOutcome check_program(const Program &program, std::string_view text,
                           CheckOptions options) {
  CheckOutcome out;
  Session session(options);
  try {
    check_assumptions(program);
    TypeEnv env;
    for (const auto &a : program.assumptions) env = env.extended(a.name, a.type);
    CompResult r = synth_computation(session, AlgContext(), env, program.body);
    if (!r.context.empty())
      throw InvariantViolation("top-level output context is not empty");
    out.status = Status::Accepted;
    out.type = r.type;
  } catch (const TypeError &e) {
    out.status = status_for(e.kind());
    out.error = diagnose(e, text);
  } catch (const std::exception &e) {
    out.status = Status::InternalError;
    out.internal = e.what();
  }
  out.trace = session.trace();
  out.stats = session.stats();
  return out;
}

CheckOutcome check_source(std::string_view text, const std::string &file,
                          CheckOptions options) {
  try {
    Program p = parse_program(text, file);
    return check_program(p, text, options);
  } catch (const TypeError &e) {
    CheckOutcome out;
    out.status = status_for(e.kind());
    out.error = diagnose(e, text);
    return out;
  } catch (const std::exception &e) {
    CheckOutcome out;
    out.status = Status::InternalError;
    out.internal = e.what();
    return out;
  }
}

SubOutcome check_sub_source(std::string_view text, const std::string &file,
                            CheckOptions options) {
  SubOutcome out;
  try {
    SubFile f = parse_sub_file(text, file);
    bool all = true;
    for (const auto &j : f.judgments) {
      SubVerdict v;
      v.left = pretty(j.left);
      v.right = pretty(j.right);
      v.line = line_column(text, j.span.start).line;
      AlgContext theta;
      NameSet vars = free_uvars(j.left);
      for (const auto &u : free_uvars(j.right)) vars.insert(u);
      for (const auto &u : vars) theta.push(Universal{u});
      for (const Type *t : {&j.left, &j.right})
        if (auto why = wf_type_problem(theta, *t, &f.signature); !why.empty())
          throw TypeError(ErrorKind::IllFormed, "ill-formed type " + pretty(*t) + ": " + why,
                          j.span);
      Session session(options);
      try {
        subtype(session, theta, j.left, j.right);
        v.holds = true;
      } catch (const TypeError &e) {
        v.message = e.message();
        all = false;
      }
      out.verdicts.push_back(std::move(v));
    }
    out.status = all ? Status::Accepted : Status::Rejected;
  } catch (const TypeError &e) {
    out.status = status_for(e.kind());
    out.error = diagnose(e, text);
  } catch (const std::exception &e) {
    out.status = Status::InternalError;
    out.internal = e.what();
  }
  return out;
}

namespace {

std::string render_error(const Diagnostic &d) {
  return d.span.file + ":" + std::to_string(d.position.line) + ":" +
         std::to_string(d.position.column) + ": error[" + std::string(to_string(d.kind)) +
         "]: " + d.message;
}

}  // namespace

std::string render_text(const CheckOutcome &o) {
  switch (o.status) {
    case Status::Accepted: return "OK : " + pretty(o.type);
    case Status::InternalError: return "internal error: " + o.internal;
    default: return render_error(*o.error);
  }
}

std::string render_trace(const std::vector<TraceStep> &trace) {
  std::string out;
  for (const auto &s : trace) {
    out += std::string(static_cast<std::size_t>(s.depth) * 2, ' ');
    out += s.rule + "  " + s.goal + "  [" + s.input + "]";
    out += s.output.empty() ? "  (failed)" : "  ~> " + s.output;
    out += "\n";
  }
  return out;
}

std::string render_json(const CheckOutcome &o) {
  nlohmann::ordered_json j;
  j["status"] = std::string(to_string(o.status));
  j["type"] = o.type ? nlohmann::ordered_json(pretty(o.type)) : nlohmann::ordered_json();
  if (o.error) {
    const Diagnostic &d = *o.error;
    nlohmann::ordered_json span;
    span["file"] = d.span.file;
    span["start"] = d.span.start;
    span["end"] = d.span.end;
    span["line"] = d.position.line;
    span["column"] = d.position.column;
    nlohmann::ordered_json err;
    err["kind"] = std::string(to_string(d.kind));
    err["message"] = d.message;
    err["span"] = span;
    err["expected"] = d.expected;
    j["error"] = err;
  } else if (o.status == Status::InternalError) {
    nlohmann::ordered_json err;
    err["kind"] = "internal";
    err["message"] = o.internal;
    err["span"] = nullptr;
    err["expected"] = nlohmann::ordered_json::array();
    j["error"] = err;
  } else {
    j["error"] = nullptr;
  }
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto &s : o.trace) {
    nlohmann::ordered_json step;
    step["depth"] = s.depth;
    step["rule"] = s.rule;
    step["goal"] = s.goal;
    step["input"] = s.input;
    step["output"] = s.output.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(s.output);
    steps.push_back(step);
  }
  j["trace"] = steps;
  return j.dump(2);
}

std::string render_sub(const SubOutcome &o) {
  if (o.error) return render_error(*o.error);
  if (o.status == Status::InternalError) return "internal error: " + o.internal;
  std::string out;
  for (std::size_t i = 0; i < o.verdicts.size(); ++i) {
    const auto &v = o.verdicts[i];
    if (i) out += "\n";
    out += "line " + std::to_string(v.line) + ": " + v.left + " <: " + v.right + "  " +
           (v.holds ? "holds" : "fails: " + v.message);
  }
  return out;
}

}  // namespace polarf
