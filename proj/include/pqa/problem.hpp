// Problem files: line-oriented declarations, each terminated by '.'.
//
//   rigid a, b, f/2.          rigid function symbols (arity defaults to 0)
//   axiom <formula>.          theory
//   context <formula>.        context; several are conjoined
//   question <formula>.       question body, free variables are the x
//   common <formula>.         common-ground question
//   conjecture <formula>.     the psi of entail / check modes
//
// '%' starts a comment.

#ifndef PQA_PROBLEM_HPP_
#define PQA_PROBLEM_HPP_

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pqa/parser.hpp"
#include "pqa/syntax.hpp"

namespace pqa {

struct ProblemFile {
  Signature signature;
  std::vector<Formula> axioms;
  std::optional<Formula> context;
  std::vector<Question> questions;
  std::vector<Question> common;
  std::optional<Formula> conjecture;

  Formula context_or_top() const { return context ? *context : Formula::top(); }
};

// Theta union Phi, keeping the first of any two questions that differ only
// in the names of their variables.
inline std::vector<Question> fold_common_ground(std::span<const Question> theta, std::span<const Question> phi) {
  std::vector<Question> out;
  auto bound = [](const Question& q) { return Formula::exists(q.variables(), q.body()); };
  auto add = [&](const Question& q) {
    for (const Question& e : out)
      if (alpha_equivalent(bound(e), bound(q))) return;
    out.push_back(q);
  };
  for (const Question& q : theta) add(q);
  for (const Question& q : phi) add(q);
  return out;
}

inline ProblemFile parse_problem(std::string_view text) {
  ProblemFile pf;
  Lexer lexer(text);
  FormulaParser p(lexer.tokens(), pf.signature);
  auto closed = [&](const Formula& f, const Token& where, const char* what) {
    if (!is_closed(f))
      throw ParseError(std::string(what) + " must be closed (free: " + free_variables(f).front() + ")", where.line,
                       where.column);
  };
  try {
    while (!p.at_end()) {
      const Token kw = p.next();
      if (kw.kind != Token::Kind::ident) throw ParseError("expected a declaration keyword, found '" + kw.text + "'", kw.line, kw.column);
      if (kw.text == "rigid") {
        do {
          const Token name = p.next();
          if (name.kind != Token::Kind::ident || is_variable_name(name.text))
            throw ParseError("expected a function symbol, found '" + name.text + "'", name.line, name.column);
          int arity = 0;
          if (p.accept("/")) {
            const Token n = p.next();
            if (n.kind != Token::Kind::number) throw ParseError("expected an arity", n.line, n.column);
            arity = std::stoi(n.text);
          }
          pf.signature.declare_function(name.text, arity, true);
        } while (p.accept(","));
      } else if (kw.text == "axiom") {
        const Token at = p.peek();
        Formula f = p.formula();
        closed(f, at, "axiom");
        pf.axioms.push_back(f);
      } else if (kw.text == "context") {
        const Token at = p.peek();
        Formula f = p.formula();
        closed(f, at, "context");
        pf.context = pf.context ? Formula::conj(*pf.context, f) : f;
      } else if (kw.text == "question") {
        pf.questions.emplace_back(p.formula());
      } else if (kw.text == "common") {
        pf.common.emplace_back(p.formula());
      } else if (kw.text == "conjecture") {
        if (pf.conjecture) throw ParseError("only one conjecture is allowed", kw.line, kw.column);
        pf.conjecture = p.formula();
      } else {
        throw ParseError("unknown declaration '" + kw.text + "'", kw.line, kw.column);
      }
      p.expect(".");
    }
  } catch (const SignatureError& e) {
    const Token& t = p.peek();
    throw ParseError(e.what(), t.line, t.column);
  }
  return pf;
}

inline ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

}  // namespace pqa

#endif  // PQA_PROBLEM_HPP_
