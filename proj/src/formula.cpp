/*
 * Copyright 2026 the ptskit authors
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

#include "ptskit/formula.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace ptskit {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return s != "bot" && s != "top";
}

} // namespace

FormulaPtr Formula::prop(std::string name) {
  if (!is_identifier(name))
    throw Error("'" + name + "' is not a valid proposition name");
  return FormulaPtr(new Formula(Conn::Prop, std::move(name), nullptr, nullptr));
}

FormulaPtr Formula::bottom() {
  return FormulaPtr(new Formula(Conn::Bottom, {}, nullptr, nullptr));
}

FormulaPtr Formula::neg(FormulaPtr f) {
  return FormulaPtr(new Formula(Conn::Neg, {}, std::move(f), nullptr));
}
FormulaPtr Formula::conj(FormulaPtr l, FormulaPtr r) {
  return FormulaPtr(new Formula(Conn::And, {}, std::move(l), std::move(r)));
}
FormulaPtr Formula::disj(FormulaPtr l, FormulaPtr r) {
  return FormulaPtr(new Formula(Conn::Or, {}, std::move(l), std::move(r)));
}
FormulaPtr Formula::implies(FormulaPtr l, FormulaPtr r) {
  return FormulaPtr(new Formula(Conn::Implies, {}, std::move(l), std::move(r)));
}
FormulaPtr Formula::box(FormulaPtr f) {
  return FormulaPtr(new Formula(Conn::Box, {}, std::move(f), nullptr));
}
FormulaPtr Formula::diamond(FormulaPtr f) {
  return FormulaPtr(new Formula(Conn::Diamond, {}, std::move(f), nullptr));
}
FormulaPtr Formula::neg_box(FormulaPtr f) {
  return FormulaPtr(new Formula(Conn::NegBox, {}, std::move(f), nullptr));
}
FormulaPtr Formula::neg_diamond(FormulaPtr f) {
  return FormulaPtr(new Formula(Conn::NegDiamond, {}, std::move(f), nullptr));
}
FormulaPtr Formula::consistency(FormulaPtr f) {
  return FormulaPtr(new Formula(Conn::Consistency, {}, std::move(f), nullptr));
}

FormulaPtr Formula::iff(FormulaPtr l, FormulaPtr r) {
  return conj(implies(l, r), implies(r, l));
}

bool equal(const Formula& a, const Formula& b) {
  if (a.conn() != b.conn()) return false;
  switch (a.conn()) {
    case Conn::Prop: return a.prop() == b.prop();
    case Conn::Bottom: return true;
    case Conn::Neg:
    case Conn::Box:
    case Conn::Diamond:
    case Conn::NegBox:
    case Conn::NegDiamond:
    case Conn::Consistency: return equal(*a.child(), *b.child());
    case Conn::And:
    case Conn::Or:
    case Conn::Implies:
      return equal(*a.left(), *b.left()) && equal(*a.right(), *b.right());
  }
  return false;
}

namespace {

enum class Tok {
  End,
  Ident,
  Bot,
  Top,
  Bang,       // !
  Tilde,      // ~
  Amp,        // &
  Pipe,       // |
  Arrow,      // ->
  Iff,        // <->
  Box,        // []
  Diamond,    // <>
  NegBox,     // [~]
  NegDiamond, // <~>
  At,         // @
  LParen,
  RParen,
};

struct Lexer {
  std::string_view src;
  std::size_t pos = 0;
  Tok tok = Tok::End;
  std::string ident;
  std::size_t tok_pos = 0;

  explicit Lexer(std::string_view s) : src(s) { advance(); }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, at);
  }

  char peek(std::size_t ahead = 0) const {
    return pos + ahead < src.size() ? src[pos + ahead] : '\0';
  }

  void advance() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    tok_pos = pos;
    if (pos >= src.size()) {
      tok = Tok::End;
      return;
    }
    char c = src[pos];
    switch (c) {
      case '!': ++pos; tok = Tok::Bang; return;
      case '~': ++pos; tok = Tok::Tilde; return;
      case '&': ++pos; tok = Tok::Amp; return;
      case '|': ++pos; tok = Tok::Pipe; return;
      case '@': ++pos; tok = Tok::At; return;
      case '(': ++pos; tok = Tok::LParen; return;
      case ')': ++pos; tok = Tok::RParen; return;
      case '-':
        if (peek(1) == '>') { pos += 2; tok = Tok::Arrow; return; }
        fail("stray '-' (did you mean '->')", pos);
      case '[':
        if (peek(1) == ']') { pos += 2; tok = Tok::Box; return; }
        if (peek(1) == '~' && peek(2) == ']') { pos += 3; tok = Tok::NegBox; return; }
        fail("unterminated box operator (expected '[]' or '[~]')", pos);
      case '<':
        if (peek(1) == '>') { pos += 2; tok = Tok::Diamond; return; }
        if (peek(1) == '~' && peek(2) == '>') { pos += 3; tok = Tok::NegDiamond; return; }
        if (peek(1) == '-' && peek(2) == '>') { pos += 3; tok = Tok::Iff; return; }
        fail("unterminated diamond operator (expected '<>', '<~>' or '<->')", pos);
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
        ++pos;
      ident = std::string(src.substr(start, pos - start));
      tok = ident == "bot" ? Tok::Bot : ident == "top" ? Tok::Top : Tok::Ident;
      return;
    }
    fail(std::string("unexpected character '") + c + "'", pos);
  }
};

struct Parser {
  Lexer lx;

  explicit Parser(std::string_view s) : lx(s) {}

  FormulaPtr parse() {
    FormulaPtr f = parse_iff();
    if (lx.tok != Tok::End) lx.fail("trailing input after formula", lx.tok_pos);
    return f;
  }

  FormulaPtr parse_iff() {
    FormulaPtr f = parse_impl();
    while (lx.tok == Tok::Iff) {
      lx.advance();
      f = Formula::iff(std::move(f), parse_impl());
    }
    return f;
  }

  FormulaPtr parse_impl() {
    FormulaPtr f = parse_or();
    if (lx.tok == Tok::Arrow) {
      lx.advance();
      return Formula::implies(std::move(f), parse_impl());
    }
    return f;
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (lx.tok == Tok::Pipe) {
      lx.advance();
      f = Formula::disj(std::move(f), parse_and());
    }
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_unary();
    while (lx.tok == Tok::Amp) {
      lx.advance();
      f = Formula::conj(std::move(f), parse_unary());
    }
    return f;
  }

  FormulaPtr parse_unary() {
    switch (lx.tok) {
      case Tok::Bang: lx.advance(); return Formula::neg(parse_unary());
      case Tok::Tilde: lx.advance(); return Formula::strong_neg(parse_unary());
      case Tok::Box: lx.advance(); return Formula::box(parse_unary());
      case Tok::Diamond: lx.advance(); return Formula::diamond(parse_unary());
      case Tok::NegBox: lx.advance(); return Formula::neg_box(parse_unary());
      case Tok::NegDiamond: lx.advance(); return Formula::neg_diamond(parse_unary());
      case Tok::At: lx.advance(); return Formula::consistency(parse_unary());
      default: return parse_atom();
    }
  }

  FormulaPtr parse_atom() {
    switch (lx.tok) {
      case Tok::Bot: lx.advance(); return Formula::bottom();
      case Tok::Top: lx.advance(); return Formula::top();
      case Tok::Ident: {
        std::string name = lx.ident;
        lx.advance();
        return Formula::prop(std::move(name));
      }
      case Tok::LParen: {
        std::size_t open = lx.tok_pos;
        lx.advance();
        FormulaPtr f = parse_iff();
        if (lx.tok != Tok::RParen) lx.fail("unbalanced parenthesis", open);
        lx.advance();
        return f;
      }
      case Tok::End: lx.fail("formula ends where an operand is expected", lx.tok_pos);
      default: lx.fail("expected a proposition, constant or '('", lx.tok_pos);
    }
  }
};

// Binding strength used by the printer; higher binds tighter.
int level(Conn c) {
  switch (c) {
    case Conn::Implies: return 1;
    case Conn::Or: return 2;
    case Conn::And: return 3;
    case Conn::Neg:
    case Conn::Box:
    case Conn::Diamond:
    case Conn::NegBox:
    case Conn::NegDiamond:
    case Conn::Consistency: return 4;
    case Conn::Prop:
    case Conn::Bottom: return 5;
  }
  return 5;
}

void print_rec(const Formula& f, int min_level, std::string& out) {
  bool parens = level(f.conn()) < min_level;
  if (parens) out += '(';
  switch (f.conn()) {
    case Conn::Prop: out += f.prop(); break;
    case Conn::Bottom: out += "bot"; break;
    case Conn::Neg: out += '!'; print_rec(*f.child(), 4, out); break;
    case Conn::Box: out += "[]"; print_rec(*f.child(), 4, out); break;
    case Conn::Diamond: out += "<>"; print_rec(*f.child(), 4, out); break;
    case Conn::NegBox: out += "[~]"; print_rec(*f.child(), 4, out); break;
    case Conn::NegDiamond: out += "<~>"; print_rec(*f.child(), 4, out); break;
    case Conn::Consistency: out += '@'; print_rec(*f.child(), 4, out); break;
    case Conn::And:
      print_rec(*f.left(), 3, out);
      out += '&';
      print_rec(*f.right(), 4, out);
      break;
    case Conn::Or:
      print_rec(*f.left(), 2, out);
      out += '|';
      print_rec(*f.right(), 3, out);
      break;
    case Conn::Implies:
      print_rec(*f.left(), 2, out);
      out += "->";
      print_rec(*f.right(), 1, out);
      break;
  }
  if (parens) out += ')';
}

} // namespace

FormulaPtr parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string print_formula(const Formula& f) {
  std::string out;
  print_rec(f, 0, out);
  return out;
}

bool in_positive_diamond_fragment(const Formula& f) {
  switch (f.conn()) {
    case Conn::Prop:
    case Conn::Bottom: return true;
    case Conn::Neg: return f.child()->conn() == Conn::Bottom; // only as the top constant
    case Conn::And:
    case Conn::Or:
      return in_positive_diamond_fragment(*f.left()) &&
             in_positive_diamond_fragment(*f.right());
    case Conn::Diamond: return in_positive_diamond_fragment(*f.child());
    default: return false;
  }
}

} // namespace ptskit
