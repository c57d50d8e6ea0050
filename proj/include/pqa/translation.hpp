// Reduction of question entailment to classical first-order consequence, and
// relativization of quantifiers to an existence predicate.

#ifndef PQA_TRANSLATION_HPP_
#define PQA_TRANSLATION_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "pqa/printer.hpp"
#include "pqa/syntax.hpp"

namespace pqa {

inline std::string primed_name(const std::string& name) { return name + "'"; }

inline bool is_primed_name(const std::string& name) { return !name.empty() && name.back() == '\''; }

struct Sequent {
  std::vector<Formula> premises;
  Formula conclusion = Formula::top();
};

inline std::string to_string(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.premises.size(); ++i) out += (i ? ",\n" : "") + ("  " + to_string(s.premises[i]));
  if (!s.premises.empty()) out += "\n";
  return out + "  |= " + to_string(s.conclusion);
}

namespace detail {

inline Term star_term(const Term& t, Signature& sig) {
  if (t.is_variable()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(star_term(a, sig));
  int arity = static_cast<int>(args.size());
  if (sig.is_rigid(t.name())) return Term::apply(t.name(), std::move(args));
  if (is_primed_name(t.name())) throw std::invalid_argument("symbol '" + t.name() + "' is already primed");
  sig.use_function(t.name(), arity);
  std::string p = primed_name(t.name());
  sig.declare_function(p, arity, false, SymbolOrigin::primed);
  return Term::apply(p, std::move(args));
}

}  // namespace detail

// Primes every predicate and every non-rigid function symbol. Primed copies
// are declared in `sig`.
inline Formula star(const Formula& f, Signature& sig) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::top:
    case K::bottom:
      return f;
    case K::atom: {
      if (is_primed_name(f.predicate()))
        throw std::invalid_argument("symbol '" + f.predicate() + "' is already primed");
      std::vector<Term> args;
      for (const Term& t : f.terms()) args.push_back(detail::star_term(t, sig));
      std::string p = primed_name(f.predicate());
      sig.declare_predicate(p, static_cast<int>(args.size()), SymbolOrigin::primed);
      return Formula::atom(p, std::move(args));
    }
    case K::equal:
      return Formula::equal(detail::star_term(f.lhs(), sig), detail::star_term(f.rhs(), sig));
    case K::conj:
      return Formula::conj(star(f.left(), sig), star(f.right(), sig));
    case K::neg:
      return Formula::neg(star(f.operand(), sig));
    case K::exists:
      return Formula::exists(f.variable(), star(f.body(), sig));
  }
  return f;
}

// forall x. (body <-> body*), x the free variables of the question.
inline Formula hash(const Question& q, Signature& sig) {
  return Formula::forall(q.variables(), Formula::iff(q.body(), star(q.body(), sig)));
}

// premises: phi#, chi, chi*; conclusion: psi#. A context of `true` is dropped.
inline Sequent reduce_entailment(std::span<const Question> phi, const Formula& chi, const Question& psi,
                                 Signature& sig) {
  if (!is_closed(chi)) throw std::invalid_argument("context must be closed");
  Sequent s;
  for (const Question& q : phi) s.premises.push_back(hash(q, sig));
  if (!chi.is(Formula::Kind::top)) {
    s.premises.push_back(chi);
    s.premises.push_back(star(chi, sig));
  }
  s.conclusion = hash(psi, sig);
  return s;
}

inline constexpr const char* kExistencePredicate = "E";

namespace detail {

inline Formula relativize_body(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::conj:
      return Formula::conj(relativize_body(f.left()), relativize_body(f.right()));
    case K::neg: {
      const Formula& g = f.operand();
      // forall X. G  becomes  forall X. (E(X) -> G)
      if (g.is(K::exists) && g.body().is(K::neg))
        return Formula::forall(g.variable(), Formula::implies(Formula::atom(kExistencePredicate, {Term::variable(g.variable())}),
                                                              relativize_body(g.body().operand())));
      return Formula::neg(relativize_body(g));
    }
    case K::exists:
      return Formula::exists(
          f.variable(),
          Formula::conj(Formula::atom(kExistencePredicate, {Term::variable(f.variable())}), relativize_body(f.body())));
    default:
      return f;
  }
}

inline void check_existence_free(const Formula& f) {
  SymbolUse use;
  collect_symbols(f, use);
  if (use.predicates.count(kExistencePredicate) || use.functions.count(kExistencePredicate))
    throw std::invalid_argument("existence predicate E already occurs in the formula");
}

}  // namespace detail

// exists X. G  becomes  exists X. (E(X) & G), everywhere.
inline Formula relativize(const Formula& f) {
  detail::check_existence_free(f);
  return detail::relativize_body(f);
}

// Also guards the question's free variables: ?(E(x1) & ... & E(xn) & body).
inline Question relativize(const Question& q) {
  detail::check_existence_free(q.body());
  std::vector<Formula> parts;
  for (const std::string& v : q.variables()) parts.push_back(Formula::atom(kExistencePredicate, {Term::variable(v)}));
  parts.push_back(detail::relativize_body(q.body()));
  return Question(Formula::conj_all(parts));
}

}  // namespace pqa

#endif  // PQA_TRANSLATION_HPP_
