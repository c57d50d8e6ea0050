// Surface grammar:
//
//   formula  := iff
//   iff      := imp ('<->' iff)?
//   imp      := or ('->' imp)?
//   or       := and ('|' or)?
//   and      := unary ('&' and)?
//   unary    := '~' unary | ('exists' | 'forall') VAR+ '.' formula | primary
//   primary  := 'true' | 'false' | '(' formula ')' | term '=' term | symbol args?
//   question := '?' formula
//
// Identifiers starting with an uppercase letter are variables unless they are
// immediately applied to an argument list. Binary connectives associate to
// the right; quantifiers extend as far right as possible.

#ifndef PQA_PARSER_HPP_
#define PQA_PARSER_HPP_

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pqa/syntax.hpp"

namespace pqa {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Token {
  enum class Kind { ident, number, punct, end };
  Kind kind = Kind::end;
  std::string text;
  int line = 1;
  int column = 1;
  bool space_before = false;
};

// Splits text into identifiers, numbers and punctuation. `%` starts a comment
// that runs to the end of the line.
class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { tokenize(); }
  const std::vector<Token>& tokens() const { return tokens_; }

 private:
  void tokenize() {
    std::size_t i = 0;
    int line = 1, column = 1;
    bool space = false;
    auto advance = [&](std::size_t n) {
      for (std::size_t k = 0; k < n; ++k, ++i) {
        if (text_[i] == '\n') {
          ++line;
          column = 1;
        } else {
          ++column;
        }
      }
    };
    while (i < text_.size()) {
      char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
        space = true;
        continue;
      }
      if (c == '%') {
        while (i < text_.size() && text_[i] != '\n') advance(1);
        space = true;
        continue;
      }
      Token tok;
      tok.line = line;
      tok.column = column;
      tok.space_before = space;
      space = false;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) ++j;
        while (j < text_.size() && text_[j] == '\'') ++j;
        tok.kind = Token::Kind::ident;
        tok.text = std::string(text_.substr(i, j - i));
        advance(j - i);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
        tok.kind = Token::Kind::number;
        tok.text = std::string(text_.substr(i, j - i));
        advance(j - i);
      } else {
        static constexpr std::string_view multi[] = {"<->", "->", "!="};
        std::size_t len = 1;
        for (std::string_view m : multi)
          if (text_.substr(i, m.size()) == m) {
            len = m.size();
            break;
          }
        tok.kind = Token::Kind::punct;
        tok.text = std::string(text_.substr(i, len));
        static const std::string allowed = "()~&|=?.,/";
        if (len == 1 && allowed.find(c) == std::string::npos)
          throw ParseError(std::string("unexpected character '") + c + "'", line, column);
        advance(len);
      }
      tokens_.push_back(std::move(tok));
    }
    Token end;
    end.line = line;
    end.column = column;
    tokens_.push_back(end);
  }

  std::string_view text_;
  std::vector<Token> tokens_;
};

inline bool is_variable_name(std::string_view name) {
  return !name.empty() && std::isupper(static_cast<unsigned char>(name[0]));
}

inline bool is_keyword(std::string_view name) {
  return name == "true" || name == "false" || name == "exists" || name == "forall";
}

struct ParseOptions {
  // Admits generated names (primed symbols) that user input may not use.
  bool allow_reserved = false;
};

// Recursive-descent parser over a token stream. Symbols are declared in the
// signature as they are met; arity conflicts are reported as parse errors.
class FormulaParser {
 public:
  FormulaParser(const std::vector<Token>& tokens, Signature& sig, ParseOptions options = {})
      : tokens_(tokens), sig_(sig), options_(options) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[k];
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Token::Kind::end; }
  bool accept(std::string_view punct) {
    if (peek().kind == Token::Kind::punct && peek().text == punct) {
      next();
      return true;
    }
    return false;
  }
  void expect(std::string_view punct) {
    if (!accept(punct)) fail("expected '" + std::string(punct) + "'");
  }
  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    std::string found = t.kind == Token::Kind::end ? "end of input" : "'" + t.text + "'";
    throw ParseError(message + ", found " + found, t.line, t.column);
  }

  // Parses a formula, desugars it and renames bound variables apart.
  Formula formula() { return rename_bound_apart(parse_iff()); }

  // Parses and declares a term.
  Term term() {
    const Token where = peek();
    Term t = raw_term();
    declare_term(t, where);
    return t;
  }

 private:
  Formula parse_iff() {
    Formula left = parse_imp();
    if (accept("<->")) return Formula::iff(left, parse_iff());
    return left;
  }
  Formula parse_imp() {
    Formula left = parse_or();
    if (accept("->")) return Formula::implies(left, parse_imp());
    return left;
  }
  Formula parse_or() {
    Formula left = parse_and();
    if (accept("|")) return Formula::disj(left, parse_or());
    return left;
  }
  Formula parse_and() {
    Formula left = parse_unary();
    if (accept("&")) return Formula::conj(left, parse_and());
    return left;
  }
  Formula parse_unary() {
    if (accept("~")) return Formula::neg(parse_unary());
    const Token& t = peek();
    if (t.kind == Token::Kind::ident && (t.text == "exists" || t.text == "forall")) {
      bool universal = next().text == "forall";
      std::vector<std::string> vars;
      while (peek().kind == Token::Kind::ident && is_variable_name(peek().text)) vars.push_back(next().text);
      if (vars.empty()) fail("expected a variable after quantifier");
      expect(".");
      Formula body = parse_iff();
      return universal ? Formula::forall(vars, body) : Formula::exists(vars, body);
    }
    return parse_primary();
  }
  Formula parse_primary() {
    const Token& t = peek();
    if (accept("(")) {
      Formula f = parse_iff();
      expect(")");
      return f;
    }
    if (t.kind != Token::Kind::ident) fail("expected a formula");
    if (t.text == "true") {
      next();
      return Formula::top();
    }
    if (t.text == "false") {
      next();
      return Formula::bottom();
    }
    const Token start = t;
    Term lhs = raw_term();
    if (accept("=")) {
      declare_term(lhs, start);
      return Formula::equal(lhs, term());
    }
    if (accept("!=")) {
      declare_term(lhs, start);
      return Formula::neg(Formula::equal(lhs, term()));
    }
    if (lhs.is_variable())
      throw ParseError("variable '" + lhs.name() + "' used as a formula", start.line, start.column);
    for (const Term& a : lhs.args()) declare_term(a, start);
    declare(start, [&] { sig_.use_predicate(lhs.name(), static_cast<int>(lhs.args().size())); });
    return Formula::atom(lhs.name(), lhs.arg_vector());
  }

  Term raw_term() {
    const Token& t = peek();
    if (t.kind != Token::Kind::ident) fail("expected a term");
    std::string name = next().text;
    check_symbol_name(name, t);
    bool applied = peek().kind == Token::Kind::punct && peek().text == "(" && !peek().space_before;
    if (is_variable_name(name) && !applied) return Term::variable(name);
    std::vector<Term> args;
    if (accept("(")) {
      do args.push_back(raw_term());
      while (accept(","));
      expect(")");
    }
    return Term::apply(name, std::move(args));
  }

  void declare_term(const Term& t, const Token& where) {
    if (t.is_variable()) return;
    declare(where, [&] { sig_.use_function(t.name(), static_cast<int>(t.args().size())); });
    for (const Term& a : t.args()) declare_term(a, where);
  }

  template <typename F>
  void declare(const Token& where, F&& f) {
    try {
      f();
    } catch (const SignatureError& e) {
      throw ParseError(e.what(), where.line, where.column);
    }
  }

  void check_symbol_name(const std::string& name, const Token& where) {
    if (is_keyword(name)) throw ParseError("keyword '" + name + "' used as a symbol", where.line, where.column);
    if (!options_.allow_reserved && name.find('\'') != std::string::npos)
      throw ParseError("reserved symbol name '" + name + "'", where.line, where.column);
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
  Signature& sig_;
  ParseOptions options_;
};

inline Formula parse_formula(std::string_view text, Signature& sig, ParseOptions options = {}) {
  Lexer lexer(text);
  FormulaParser p(lexer.tokens(), sig, options);
  Formula f = p.formula();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return f;
}

inline Question parse_question(std::string_view text, Signature& sig, ParseOptions options = {}) {
  Lexer lexer(text);
  FormulaParser p(lexer.tokens(), sig, options);
  p.expect("?");
  Formula f = p.formula();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return Question(f);
}

// A leading '?' makes the input a question.
inline std::variant<Formula, Question> parse(std::string_view text, Signature& sig, ParseOptions options = {}) {
  Lexer lexer(text);
  FormulaParser p(lexer.tokens(), sig, options);
  bool question = p.accept("?");
  Formula f = p.formula();
  if (!p.at_end()) p.fail("unexpected trailing input");
  if (question) return Question(f);
  return f;
}

}  // namespace pqa

#endif  // PQA_PARSER_HPP_
