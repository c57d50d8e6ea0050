// Surface-syntax rendering. Desugared disjunction, implication, biconditional
// and universal patterns are printed back in their sugared form; the output
// always re-parses to a structurally identical formula.

#ifndef PQA_PRINTER_HPP_
#define PQA_PRINTER_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "pqa/syntax.hpp"

namespace pqa {

inline void print_term(std::string& out, const Term& t) {
  out += t.name();
  if (t.is_variable() || t.args().empty()) return;
  out += '(';
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i) out += ", ";
    print_term(out, t.args()[i]);
  }
  out += ')';
}

inline std::string to_string(const Term& t) {
  std::string out;
  print_term(out, t);
  return out;
}

namespace detail {

enum Prec : int { kQuant = 0, kIff = 1, kImp = 2, kOr = 3, kAnd = 4, kUnary = 5, kAtom = 6 };

struct Sugar {
  enum Kind { none, iff, imp, disj, forall } kind = none;
  const Formula* a = nullptr;
  const Formula* b = nullptr;
};

inline Sugar recognise(const Formula& f) {
  using K = Formula::Kind;
  if (f.is(K::conj)) {
    const Formula& x = f.left();
    const Formula& y = f.right();
    // (a -> b) & (b -> a)
    if (x.is(K::neg) && y.is(K::neg) && x.operand().is(K::conj) && y.operand().is(K::conj)) {
      const Formula& xa = x.operand().left();
      const Formula& xnb = x.operand().right();
      const Formula& yb = y.operand().left();
      const Formula& yna = y.operand().right();
      if (xnb.is(K::neg) && yna.is(K::neg) && xnb.operand() == yb && yna.operand() == xa)
        return {Sugar::iff, &xa, &yb};
    }
    return {};
  }
  if (f.is(K::neg)) {
    const Formula& g = f.operand();
    if (g.is(K::conj) && g.right().is(K::neg)) {
      if (g.left().is(K::neg)) return {Sugar::disj, &g.left().operand(), &g.right().operand()};
      return {Sugar::imp, &g.left(), &g.right().operand()};
    }
    if (g.is(K::exists) && g.body().is(K::neg)) return {Sugar::forall, nullptr, nullptr};
  }
  return {};
}

inline void print(std::string& out, const Formula& f, int context);

inline void print_binary(std::string& out, const char* op, int prec, const Formula& a, const Formula& b,
                         int context) {
  bool paren = prec < context;
  if (paren) out += '(';
  // Right-associative: the left operand needs strictly tighter binding.
  print(out, a, prec + 1);
  out += op;
  print(out, b, prec);
  if (paren) out += ')';
}

inline void print(std::string& out, const Formula& f, int context) {
  using K = Formula::Kind;
  Sugar s = recognise(f);
  switch (s.kind) {
    case Sugar::iff:
      print_binary(out, " <-> ", kIff, *s.a, *s.b, context);
      return;
    case Sugar::imp:
      print_binary(out, " -> ", kImp, *s.a, *s.b, context);
      return;
    case Sugar::disj:
      print_binary(out, " | ", kOr, *s.a, *s.b, context);
      return;
    case Sugar::forall: {
      bool paren = context > kQuant;
      if (paren) out += '(';
      out += "forall";
      const Formula* cur = &f;
      while (recognise(*cur).kind == Sugar::forall) {
        out += ' ';
        out += cur->operand().variable();
        cur = &cur->operand().body().operand();
      }
      out += ". ";
      print(out, *cur, kQuant);
      if (paren) out += ')';
      return;
    }
    case Sugar::none:
      break;
  }
  switch (f.kind()) {
    case K::top:
      out += "true";
      return;
    case K::bottom:
      out += "false";
      return;
    case K::atom:
      out += f.predicate();
      if (!f.terms().empty()) {
        out += '(';
        for (std::size_t i = 0; i < f.terms().size(); ++i) {
          if (i) out += ", ";
          print_term(out, f.terms()[i]);
        }
        out += ')';
      }
      return;
    case K::equal: {
      bool paren = context >= kAtom;
      if (paren) out += '(';
      print_term(out, f.lhs());
      out += " = ";
      print_term(out, f.rhs());
      if (paren) out += ')';
      return;
    }
    case K::conj:
      print_binary(out, " & ", kAnd, f.left(), f.right(), context);
      return;
    case K::neg:
      out += '~';
      print(out, f.operand(), kAtom);
      return;
    case K::exists: {
      bool paren = context > kQuant;
      if (paren) out += '(';
      out += "exists";
      const Formula* cur = &f;
      while (cur->is(K::exists)) {
        out += ' ';
        out += cur->variable();
        cur = &cur->body();
      }
      out += ". ";
      print(out, *cur, kQuant);
      if (paren) out += ')';
      return;
    }
  }
}

}  // namespace detail

inline std::string to_string(const Formula& f) {
  std::string out;
  detail::print(out, f, detail::kQuant);
  return out;
}

inline std::string to_string(const Question& q) { return "? " + to_string(q.body()); }

inline std::ostream& operator<<(std::ostream& os, const Term& t) { return os << to_string(t); }
inline std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << to_string(f); }
inline std::ostream& operator<<(std::ostream& os, const Question& q) { return os << to_string(q); }

inline std::string to_string(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, t] : s.bindings()) {
    if (!first) out += ", ";
    first = false;
    out += v + " := " + to_string(t);
  }
  return out + "}";
}

}  // namespace pqa

#endif  // PQA_PRINTER_HPP_
