// Skolemization by a polarity walk. An existential in positive position is
// replaced by a fresh non-rigid function of the universals in scope that it
// actually depends on; negated existentials stay as they are and become
// gamma formulas in the tableau. The result is what NNF followed by ordinary
// Skolemization would give, written back over the core connectives.

#ifndef PQA_SKOLEM_HPP_
#define PQA_SKOLEM_HPP_

#include <set>
#include <string>
#include <vector>

#include "pqa/syntax.hpp"

namespace pqa {

struct SkolemizedTheory {
  std::vector<Formula> formulas;
  std::vector<std::string> skolem_symbols;
};

namespace detail {

class Skolemizer {
 public:
  Skolemizer(Signature& sig, SkolemizedTheory& out) : sig_(sig), out_(out) {}

  Formula run(const Formula& f, bool positive, std::vector<std::string>& universals) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::conj: {
        Formula l = run(f.left(), positive, universals);
        return Formula::conj(l, run(f.right(), positive, universals));
      }
      case K::neg:
        return Formula::neg(run(f.operand(), !positive, universals));
      case K::exists: {
        if (!positive) {
          universals.push_back(f.variable());
          Formula body = run(f.body(), positive, universals);
          universals.pop_back();
          return Formula::exists(f.variable(), body);
        }
        std::vector<std::string> free = free_variables(f);
        std::set<std::string> free_set(free.begin(), free.end());
        std::vector<Term> args;
        for (const std::string& u : universals)
          if (free_set.count(u)) args.push_back(Term::variable(u));
        std::string name = sig_.fresh_name("sk");
        sig_.declare_function(name, static_cast<int>(args.size()), false, SymbolOrigin::skolem);
        out_.skolem_symbols.push_back(name);
        Substitution s;
        s.bind(f.variable(), Term::apply(name, std::move(args)));
        return run(apply_substitution(f.body(), s), positive, universals);
      }
      default:
        return f;
    }
  }

 private:
  Signature& sig_;
  SkolemizedTheory& out_;
};

}  // namespace detail

// Free variables of an input formula are treated as universally quantified.
inline Formula skolemize_formula(const Formula& f, Signature& sig, SkolemizedTheory& out) {
  std::vector<std::string> universals = free_variables(f);
  return detail::Skolemizer(sig, out).run(f, true, universals);
}

inline SkolemizedTheory skolemize(std::span<const Formula> theory, Signature& sig) {
  SkolemizedTheory out;
  for (const Formula& f : theory) out.formulas.push_back(skolemize_formula(f, sig, out));
  return out;
}

// True if no existential quantifier occurs in positive position.
inline bool is_skolem_form(const Formula& f, bool positive = true) {
  switch (f.kind()) {
    case Formula::Kind::conj:
      return is_skolem_form(f.left(), positive) && is_skolem_form(f.right(), positive);
    case Formula::Kind::neg:
      return is_skolem_form(f.operand(), !positive);
    case Formula::Kind::exists:
      return !positive && is_skolem_form(f.body(), positive);
    default:
      return true;
  }
}

}  // namespace pqa

#endif  // PQA_SKOLEM_HPP_
