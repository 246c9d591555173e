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


#include "polarf/parser.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <set>
#include <utility>

#include "polarf/error.hpp"

namespace polarf {

namespace {

enum class Tok {
  Ident,
  Int,
  Caret,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Semi,
  Colon,
  Dot,
  Equals,
  Arrow,
  Star,
  Lambda,
  TypeLambda,
  SubOp,
  End,
};

std::string describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::Equals: return "'='";
    case Tok::Arrow: return "'->'";
    case Tok::Star: return "'*'";
    case Tok::Lambda: return "'\\'";
    case Tok::TypeLambda: return "'/\\'";
    case Tok::SubOp: return "'<:'";
    case Tok::End: return "end of input";
  }
  return "token";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t start;
  std::size_t end;
};

const std::set<std::string> kKeywords = {"forall", "up",   "dn",    "return",
                                         "let",    "true", "false", "data",
                                         "val",    "run"};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

[[noreturn]] void lex_error(const std::string &file, std::size_t at,
                            const std::string &message) {
  throw TypeError(ErrorKind::Parse, message, SourceSpan{file, at, at + 1});
}

std::vector<Token> lex(std::string_view src, const std::string &file) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t len) {
    out.push_back({k, std::string(src.substr(i, len)), i, i + len});
    i += len;
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      push(Tok::Ident, j - i);
      continue;
    }
    bool negative = c == '-' && i + 1 < src.size() &&
                    std::isdigit(static_cast<unsigned char>(src[i + 1]));
    if (std::isdigit(static_cast<unsigned char>(c)) || negative) {
      std::size_t j = negative ? i + 1 : i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      push(Tok::Int, j - i);
      continue;
    }
    auto two = [&](char a, char b) {
      return c == a && i + 1 < src.size() && src[i + 1] == b;
    };
    if (two('-', '>')) { push(Tok::Arrow, 2); continue; }
    if (two('/', '\\')) { push(Tok::TypeLambda, 2); continue; }
    if (two('<', ':')) { push(Tok::SubOp, 2); continue; }
    switch (c) {
      case '^': push(Tok::Caret, 1); continue;
      case '(': push(Tok::LParen, 1); continue;
      case ')': push(Tok::RParen, 1); continue;
      case '{': push(Tok::LBrace, 1); continue;
      case '}': push(Tok::RBrace, 1); continue;
      case ',': push(Tok::Comma, 1); continue;
      case ';': push(Tok::Semi, 1); continue;
      case ':': push(Tok::Colon, 1); continue;
      case '.': push(Tok::Dot, 1); continue;
      case '=': push(Tok::Equals, 1); continue;
      case '*': push(Tok::Star, 1); continue;
      case '\\': push(Tok::Lambda, 1); continue;
      default:
        lex_error(file, i, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", src.size(), src.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, std::string file, Signature sig,
         bool allow_existentials)
      : file_(std::move(file)),
        tokens_(lex(src, file_)),
        sig_(std::move(sig)),
        allow_existentials_(allow_existentials) {}

  Signature &signature() { return sig_; }

  // ---- token helpers ----------------------------------------------------

  const Token &peek(std::size_t ahead = 0) const {
    std::size_t k = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[k];
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_word(const char *w) const {
    return peek().kind == Tok::Ident && peek().text == w;
  }
  const Token &advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  std::size_t last_end() const { return pos_ == 0 ? 0 : tokens_[pos_ - 1].end; }

  [[noreturn]] void fail(const std::string &message,
                         std::vector<std::string> expected = {}) const {
    const Token &t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    std::string text = message;
    if (!expected.empty()) {
      text += ": expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) text += i + 1 == expected.size() ? " or " : ", ";
        text += expected[i];
      }
      text += ", found " + found;
    }
    TypeError e(ErrorKind::Parse, text, SourceSpan{file_, t.start, t.end});
    e.set_expected(std::move(expected));
    throw e;
  }

  [[noreturn]] void fail_at(std::size_t start, std::size_t end,
                            const std::string &message) const {
    throw TypeError(ErrorKind::Parse, message, SourceSpan{file_, start, end});
  }

  const Token &expect(Tok k, const char *context) {
    if (!at(k)) fail(std::string("in ") + context, {describe(k)});
    return advance();
  }

  void expect_word(const char *w, const char *context) {
    if (!at_word(w)) fail(std::string("in ") + context, {std::string("'") + w + "'"});
    advance();
  }

  bool is_ctor(const std::string &name) const { return sig_.lookup(name).has_value(); }

  std::string binder_name(const char *context) {
    if (!at(Tok::Ident)) fail(std::string("in ") + context, {"identifier"});
    const Token &t = peek();
    if (kKeywords.count(t.text)) fail(std::string("in ") + context + ", '" + t.text + "' is reserved", {"identifier"});
    advance();
    return t.text;
  }

  std::string type_var_name(const char *context) {
    if (at(Tok::Ident) && is_ctor(peek().text))
      fail(std::string("in ") + context + ", '" + peek().text +
               "' is a type constructor",
           {"type variable"});
    return binder_name(context);
  }

  SourceSpan span_from(std::size_t start) const {
    return SourceSpan{file_, start, std::max(start, last_end())};
  }

  // ---- types --------------------------------------------------------------

  PosRef want_pos(const Type &t, std::size_t start, const char *what) {
    if (const auto *p = std::get_if<PosRef>(&t)) return *p;
    fail_at(start, last_end(),
            std::string("polarity error: ") + what + " must be a positive type");
  }
  NegRef want_neg(const Type &t, std::size_t start, const char *what) {
    if (const auto *n = std::get_if<NegRef>(&t)) return *n;
    fail_at(start, last_end(),
            std::string("polarity error: ") + what + " must be a negative type");
  }

  Type any_type() {
    std::size_t start = peek().start;
    if (at_word("forall")) {
      advance();
      std::vector<std::string> binders;
      binders.push_back(type_var_name("quantifier"));
      while (at(Tok::Ident)) binders.push_back(type_var_name("quantifier"));
      expect(Tok::Dot, "quantifier");
      std::size_t body_start = peek().start;
      Type body = any_type();
      return forall_n(binders, want_neg(body, body_start, "the body of forall"));
    }
    Type left = prod_type();
    if (!at(Tok::Arrow)) return left;
    PosRef domain = want_pos(left, start, "an arrow domain");
    advance();
    std::size_t cod_start = peek().start;
    Type right = any_type();
    return arrow(domain, want_neg(right, cod_start, "an arrow codomain"));
  }

  Type prod_type() {
    std::size_t start = peek().start;
    Type left = app_type();
    if (!at(Tok::Star)) return left;
    PosRef first = want_pos(left, start, "a product component");
    advance();
    std::size_t right_start = peek().start;
    Type right = prod_type();
    return product(first, want_pos(right, right_start, "a product component"));
  }

  Type ctor_type(const std::string &name, std::size_t args_wanted) {
    DatatypeInfo info = *sig_.lookup(name);
    std::vector<PosRef> args;
    for (std::size_t i = 0; i < args_wanted; ++i) {
      std::size_t s = peek().start;
      if (!starts_atom())
        fail("type constructor " + name + " expects " +
                 std::to_string(info.arity) + " argument(s)",
             {"type argument"});
      Type arg = atom_type();
      args.push_back(want_pos(arg, s, "a constructor argument"));
    }
    if (info.polarity == Polarity::Positive) return data(name, std::move(args));
    return neg_data(name, std::move(args));
  }

  bool starts_atom() const {
    if (at(Tok::LParen)) return true;
    if (at(Tok::Caret)) return true;
    return at(Tok::Ident) && !kKeywords.count(peek().text);
  }

  Type app_type() {
    if (at_word("up")) {
      advance();
      std::size_t s = peek().start;
      Type body = atom_type();
      return up(want_pos(body, s, "the body of up"));
    }
    if (at_word("dn")) {
      advance();
      std::size_t s = peek().start;
      Type body = atom_type();
      return down(want_neg(body, s, "the body of dn"));
    }
    if (at(Tok::Ident) && is_ctor(peek().text)) {
      std::string name = advance().text;
      return ctor_type(name, sig_.lookup(name)->arity);
    }
    return atom_type();
  }

  Type atom_type() {
    if (at(Tok::LParen)) {
      advance();
      Type t = any_type();
      expect(Tok::RParen, "parenthesized type");
      return t;
    }
    if (at(Tok::Caret)) {
      if (!allow_existentials_)
        fail("existential variables cannot appear in source programs");
      advance();
      if (!at(Tok::Ident)) fail("after '^'", {"identifier"});
      return evar(advance().text);
    }
    if (at(Tok::Ident) && !kKeywords.count(peek().text)) {
      const Token &t = peek();
      if (auto info = sig_.lookup(t.text)) {
        if (info->arity != 0)
          fail("type constructor " + t.text + " expects " +
               std::to_string(info->arity) +
               " argument(s); parenthesize it in this position");
        advance();
        return ctor_type(t.text, 0);
      }
      advance();
      return uvar(t.text);
    }
    fail("in type", {"type variable", "type constructor", "'('", "'up'", "'dn'", "'forall'"});
  }

  PosRef pos_type(const char *what) {
    std::size_t s = peek().start;
    Type t = any_type();
    return want_pos(t, s, what);
  }

  Type type_of_polarity(Polarity p) {
    std::size_t s = peek().start;
    Type t = any_type();
    if (p == Polarity::Positive) return want_pos(t, s, "the type");
    return want_neg(t, s, "the type");
  }

  // ---- terms ----------------------------------------------------------------

  ValueRef value() {
    std::size_t start = peek().start;
    if (at(Tok::LBrace)) {
      advance();
      CompRef body = computation();
      expect(Tok::RBrace, "thunk");
      return thunk_value(body, span_from(start));
    }
    if (at(Tok::Int)) {
      const Token &t = advance();
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
      if (ec != std::errc() || ptr != t.text.data() + t.text.size())
        fail_at(t.start, t.end, "integer literal out of range");
      return int_value(v, span_from(start));
    }
    if (at_word("true") || at_word("false")) {
      bool b = advance().text == "true";
      return bool_value(b, span_from(start));
    }
    if (at(Tok::LParen)) {
      advance();
      ValueRef first = value();
      if (at(Tok::RParen)) {
        advance();
        return first;
      }
      expect(Tok::Comma, "pair");
      ValueRef second = value();
      expect(Tok::RParen, "pair");
      return pair_value(first, second, span_from(start));
    }
    if (at(Tok::Ident) && !kKeywords.count(peek().text)) {
      std::string name = advance().text;
      return var_value(name, span_from(start));
    }
    fail("in value", {"identifier", "integer", "'true'", "'false'", "'{'", "'('"});
  }

  ArgList arguments() {
    expect(Tok::LParen, "application");
    ArgList args;
    if (at(Tok::RParen)) {
      advance();
      return args;
    }
    args.push_back(value());
    while (at(Tok::Comma)) {
      advance();
      args.push_back(value());
    }
    expect(Tok::RParen, "application");
    return args;
  }

  CompRef computation() {
    std::size_t start = peek().start;
    if (at(Tok::Lambda)) {
      advance();
      std::string param = binder_name("lambda");
      expect(Tok::Colon, "lambda (parameters need a type annotation)");
      PosRef annotation = pos_type("a lambda annotation");
      expect(Tok::Dot, "lambda");
      CompRef body = computation();
      return lambda(param, annotation, body, span_from(start));
    }
    if (at(Tok::TypeLambda)) {
      advance();
      std::vector<std::string> binders;
      binders.push_back(type_var_name("type abstraction"));
      while (at(Tok::Ident)) binders.push_back(type_var_name("type abstraction"));
      expect(Tok::Dot, "type abstraction");
      CompRef body = computation();
      for (std::size_t i = binders.size(); i-- > 0;)
        body = type_abs(binders[i], body, span_from(start));
      return body;
    }
    if (at_word("return")) {
      advance();
      ValueRef v = value();
      return return_comp(v, span_from(start));
    }
    if (at_word("let")) {
      advance();
      std::string name = binder_name("let");
      PosRef annotation;
      if (at(Tok::Colon)) {
        advance();
        annotation = pos_type("a let annotation");
      }
      expect(Tok::Equals, "let");
      ValueRef head = value();
      ArgList args = arguments();
      expect(Tok::Semi, "let");
      SourceSpan header = span_from(start);
      CompRef cont = computation();
      // The let's span covers the binding, not the continuation, so errors
      // in the binding point at the right line.
      if (annotation) return let_ann(name, annotation, head, args, cont, header);
      return let_plain(name, head, args, cont, header);
    }
    if (at(Tok::LParen)) {
      advance();
      CompRef c = computation();
      expect(Tok::RParen, "parenthesized computation");
      return c;
    }
    fail("in computation", {"'\\'", "'/\\'", "'return'", "'let'", "'('"});
  }

  // ---- declarations -------------------------------------------------------

  bool at_data() const { return at_word("data"); }

  DataDecl data_decl() {
    std::size_t start = peek().start;
    advance();
    if (!at(Tok::Ident) || kKeywords.count(peek().text))
      fail("in data declaration", {"constructor name"});
    const Token &name_tok = advance();
    Polarity polarity;
    if (at_word("pos")) {
      polarity = Polarity::Positive;
    } else if (at_word("neg")) {
      polarity = Polarity::Negative;
    } else {
      fail("in data declaration", {"'pos'", "'neg'"});
    }
    advance();
    const Token &arity_tok = expect(Tok::Int, "data declaration");
    std::size_t arity = 0;
    auto [ptr, ec] = std::from_chars(arity_tok.text.data(),
                                     arity_tok.text.data() + arity_tok.text.size(), arity);
    if (ec != std::errc() || ptr != arity_tok.text.data() + arity_tok.text.size() ||
        arity > 16)
      fail_at(arity_tok.start, arity_tok.end, "bad constructor arity");
    DataDecl d{name_tok.text, {polarity, arity}, span_from(start)};
    if (Signature::is_builtin(d.name))
      fail_at(name_tok.start, name_tok.end,
              "type constructor " + d.name + " is built in and cannot be redeclared");
    if (!sig_.declare(d.name, d.info))
      fail_at(name_tok.start, name_tok.end,
              "type constructor " + d.name + " is declared twice");
    return d;
  }

  Program program() {
    Program p;
    p.file = file_;
    std::set<std::string> names;
    while (true) {
      if (at_data()) {
        p.datatypes.push_back(data_decl());
      } else if (at_word("val")) {
        std::size_t start = peek().start;
        advance();
        std::size_t name_start = peek().start;
        std::string name = binder_name("assumption");
        if (!names.insert(name).second)
          fail_at(name_start, last_end(), "assumption " + name + " is declared twice");
        expect(Tok::Colon, "assumption");
        PosRef t = pos_type("an assumption");
        p.assumptions.push_back({name, t, span_from(start)});
      } else {
        break;
      }
    }
    expect_word("run", "program (after declarations)");
    p.body = computation();
    if (!at(Tok::End)) fail("after the program body", {"end of input"});
    p.signature = sig_;
    return p;
  }

  SubFile sub_file() {
    SubFile f;
    f.file = file_;
    while (at_data()) f.datatypes.push_back(data_decl());
    while (!at(Tok::End)) {
      std::size_t start = peek().start;
      Type left = any_type();
      expect(Tok::SubOp, "subtyping judgment");
      Type right = any_type();
      if (left.index() != right.index())
        fail_at(start, last_end(), "polarity error: both sides of '<:' must have the same polarity");
      f.judgments.push_back({left, right, span_from(start)});
    }
    f.signature = sig_;
    return f;
  }

  void finish(const char *what) {
    if (!at(Tok::End)) fail(std::string("after ") + what, {"end of input"});
  }

 private:
  std::string file_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Signature sig_;
  bool allow_existentials_;
};

}  // namespace

Program parse_program(std::string_view text, const std::string &file) {
  Parser p(text, file, Signature::builtin(), false);
  return p.program();
}

SubFile parse_sub_file(std::string_view text, const std::string &file) {
  Parser p(text, file, Signature::builtin(), false);
  return p.sub_file();
}

Type parse_type(std::string_view text, Polarity expected, const Signature &sig,
                bool allow_existentials) {
  Parser p(text, "<type>", sig, allow_existentials);
  Type t = p.type_of_polarity(expected);
  p.finish("type");
  return t;
}

PosRef parse_pos_type(std::string_view text, const Signature &sig,
                      bool allow_existentials) {
  return std::get<PosRef>(parse_type(text, Polarity::Positive, sig, allow_existentials));
}

NegRef parse_neg_type(std::string_view text, const Signature &sig,
                      bool allow_existentials) {
  return std::get<NegRef>(parse_type(text, Polarity::Negative, sig, allow_existentials));
}

CompRef parse_computation(std::string_view text, const Signature &sig) {
  Parser p(text, "<term>", sig, false);
  CompRef c = p.computation();
  p.finish("computation");
  return c;
}

ValueRef parse_value(std::string_view text, const Signature &sig) {
  Parser p(text, "<term>", sig, false);
  ValueRef v = p.value();
  p.finish("value");
  return v;
}

LineColumn line_column(std::string_view text, std::size_t offset) {
  LineColumn lc;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++lc.line;
      lc.column = 1;
    } else {
      ++lc.column;
    }
  }
  return lc;
}

}  // namespace polarf
