// Syntactic answerhood: rigid terms, rigid instances, developments, and the
// combined prover/oracle answerhood check.

#ifndef PQA_DEVELOPMENT_HPP_
#define PQA_DEVELOPMENT_HPP_

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "pqa/oracle.hpp"
#include "pqa/printer.hpp"
#include "pqa/prover.hpp"
#include "pqa/syntax.hpp"
#include "pqa/translation.hpp"

namespace pqa {

inline bool is_rigid_term(const Term& t, const Signature& sig) { return term_is_rigid(t, sig); }

namespace detail {

// Pattern binders paired with candidate binders, innermost last.
using BinderPairs = std::vector<std::pair<std::string, std::string>>;

inline bool bound_in(const BinderPairs& m, const std::string& var, bool candidate_side) {
  for (const auto& [p, c] : m)
    if ((candidate_side ? c : p) == var) return true;
  return false;
}

inline bool match_instance_term(const Term& pat, const Term& cand, const BinderPairs& m, Substitution& theta,
                                const Signature& sig) {
  if (pat.is_variable()) {
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
      if (it->first == pat.name()) return cand.is_variable() && cand.name() == it->second;
    }
    // A free variable of the pattern: the candidate must be a rigid term that
    // mentions no variable bound inside the matched region.
    if (!is_rigid_term(cand, sig)) return false;
    for (const std::string& v : term_variables(cand))
      if (bound_in(m, v, true)) return false;
    if (const Term* prev = theta.lookup(pat.name())) return *prev == cand;
    theta.bind(pat.name(), cand);
    return true;
  }
  if (cand.is_variable()) return false;
  if (pat.name() != cand.name() || pat.args().size() != cand.args().size()) return false;
  for (std::size_t i = 0; i < pat.args().size(); ++i)
    if (!match_instance_term(pat.args()[i], cand.args()[i], m, theta, sig)) return false;
  return true;
}

inline bool match_instance(const Formula& pat, const Formula& cand, BinderPairs& m, Substitution& theta,
                           const Signature& sig) {
  if (pat.kind() != cand.kind()) return false;
  switch (pat.kind()) {
    case Formula::Kind::top:
    case Formula::Kind::bottom:
      return true;
    case Formula::Kind::atom:
    case Formula::Kind::equal:
      if (pat.predicate() != cand.predicate() || pat.terms().size() != cand.terms().size()) return false;
      for (std::size_t i = 0; i < pat.terms().size(); ++i)
        if (!match_instance_term(pat.terms()[i], cand.terms()[i], m, theta, sig)) return false;
      return true;
    case Formula::Kind::conj:
      return match_instance(pat.left(), cand.left(), m, theta, sig) &&
             match_instance(pat.right(), cand.right(), m, theta, sig);
    case Formula::Kind::neg:
      return match_instance(pat.operand(), cand.operand(), m, theta, sig);
    case Formula::Kind::exists: {
      m.emplace_back(pat.variable(), cand.variable());
      bool ok = match_instance(pat.body(), cand.body(), m, theta, sig);
      m.pop_back();
      return ok;
    }
  }
  return false;
}

}  // namespace detail

// sigma with rigid range such that pattern.sigma is candidate up to renaming
// of bound variables.
inline std::optional<Substitution> rigid_instance_match(const Formula& candidate, const Formula& pattern,
                                                        const Signature& sig) {
  detail::BinderPairs m;
  Substitution theta;
  if (!detail::match_instance(pattern, candidate, m, theta, sig)) return std::nullopt;
  // Identity bindings are dropped so that P(X) vs P(X) gives {}.
  Substitution out;
  for (const auto& [v, t] : theta.bindings())
    if (!(t.is_variable() && t.name() == v)) out.bind(v, t);
  return out;
}

struct DevelopmentConfig {
  bool equality_allowed = true;
};

struct DevelopmentWitness {
  enum class Clause { top, bottom, rigid_instance, rigid_identity, negation, conjunction, quantifier };
  Clause clause = Clause::top;
  Formula formula = Formula::top();
  int question = -1;  // for rigid_instance: index into the question bodies
  Substitution sigma;
  std::vector<DevelopmentWitness> children;
};

inline const char* to_string(DevelopmentWitness::Clause c) {
  using C = DevelopmentWitness::Clause;
  switch (c) {
    case C::top:
      return "true";
    case C::bottom:
      return "false";
    case C::rigid_instance:
      return "rigid instance";
    case C::rigid_identity:
      return "rigid identity";
    case C::negation:
      return "negation";
    case C::conjunction:
      return "conjunction";
    case C::quantifier:
      return "quantifier";
  }
  return "?";
}

inline std::string to_string(const DevelopmentWitness& w, int indent = 0) {
  std::string out = std::string(2 * indent, ' ') + to_string(w.clause) + ": " + to_string(w.formula);
  if (w.clause == DevelopmentWitness::Clause::rigid_instance)
    out += "  [question " + std::to_string(w.question) + ", " + to_string(w.sigma) + "]";
  out += "\n";
  for (const auto& c : w.children) out += to_string(c, indent + 1);
  return out;
}

// Is psi built from true, false, rigid instances of the bodies and (when
// allowed) rigid identities, using the connectives and quantifiers?
inline std::optional<DevelopmentWitness> is_development(const Formula& psi, std::span<const Formula> bodies,
                                                        const Signature& sig, DevelopmentConfig cfg = {}) {
  using C = DevelopmentWitness::Clause;
  DevelopmentWitness w;
  w.formula = psi;
  if (psi.is(Formula::Kind::top)) return w;
  if (psi.is(Formula::Kind::bottom)) {
    w.clause = C::bottom;
    return w;
  }
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    if (auto s = rigid_instance_match(psi, bodies[i], sig)) {
      w.clause = C::rigid_instance;
      w.question = static_cast<int>(i);
      w.sigma = *s;
      return w;
    }
  }
  switch (psi.kind()) {
    case Formula::Kind::equal:
      if (cfg.equality_allowed && is_rigid_term(psi.lhs(), sig) && is_rigid_term(psi.rhs(), sig)) {
        w.clause = C::rigid_identity;
        return w;
      }
      return std::nullopt;
    case Formula::Kind::neg: {
      auto c = is_development(psi.operand(), bodies, sig, cfg);
      if (!c) return std::nullopt;
      w.clause = C::negation;
      w.children.push_back(std::move(*c));
      return w;
    }
    case Formula::Kind::conj: {
      auto l = is_development(psi.left(), bodies, sig, cfg);
      if (!l) return std::nullopt;
      auto r = is_development(psi.right(), bodies, sig, cfg);
      if (!r) return std::nullopt;
      w.clause = C::conjunction;
      w.children.push_back(std::move(*l));
      w.children.push_back(std::move(*r));
      return w;
    }
    case Formula::Kind::exists: {
      auto b = is_development(psi.body(), bodies, sig, cfg);
      if (!b) return std::nullopt;
      w.clause = C::quantifier;
      w.children.push_back(std::move(*b));
      return w;
    }
    default:
      return std::nullopt;
  }
}

inline std::vector<Formula> bodies_of(std::span<const Question> qs) {
  std::vector<Formula> out;
  for (const Question& q : qs) out.push_back(q.body());
  return out;
}

struct AnswerhoodBudget {
  int levels = 4;          // prover multiplicity and oracle domain size grow together
  int max_domain = 3;      // oracle stops growing here
  int max_worlds = 2;
  ProverOptions prover;    // max_gamma is ignored; levels governs it
  long long timeout_ms = 0;
  int jobs = 1;
};

enum class Verdict { yes, no, unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::unknown:
      return "unknown";
  }
  return "?";
}

struct EntailmentReport {
  Verdict verdict = Verdict::unknown;
  Sequent sequent;
  std::optional<Countermodel> countermodel;
  ProofResult proof;
  std::string note;
};

// ?phi |=_chi ?psi, deciding by alternating prover levels with oracle domain
// sizes. A proof gives yes, a countermodel gives no.
inline EntailmentReport decide_entailment(std::span<const Question> phi, const Formula& chi, const Question& psi,
                                          const Signature& sig, const AnswerhoodBudget& budget,
                                          bool use_prover = true, bool use_oracle = true) {
  if (budget.levels <= 0) throw std::invalid_argument("budget must be positive");
  EntailmentReport rep;
  Signature local = sig;
  rep.sequent = reduce_entailment(phi, chi, psi, local);
  std::vector<Formula> input =
      refutation_input(rep.sequent.premises, rep.sequent.conclusion, local, budget.prover.equality_axioms);
  Deadline deadline(budget.timeout_ms);
  bool prover_done = !use_prover;
  bool oracle_done = !use_oracle;
  for (int level = 1; level <= budget.levels && !(prover_done && oracle_done); ++level) {
    if (!prover_done) {
      rep.proof = refute_at(input, level, budget.prover, deadline);
      if (rep.proof.valid()) {
        rep.verdict = Verdict::yes;
        return rep;
      }
      prover_done = rep.proof.exhausted;
      if (rep.proof.exhausted && !budget.prover.equality_axioms) {
        // An exhausted, open tableau is a proof of invalidity only when the
        // uninterpreted treatment of equality is faithful, i.e. "=" is absent.
        SymbolUse use = collect_symbols(input);
        if (!use.predicates.count(std::string(kEqualitySymbol))) {
          rep.verdict = Verdict::no;
          rep.note = "tableau saturated without closing";
          return rep;
        }
      }
    }
    if (!oracle_done && level <= budget.max_domain) {
      OracleBounds ob;
      ob.max_worlds = budget.max_worlds;
      ob.min_domain = level;
      ob.max_domain = level;
      ob.jobs = budget.jobs;
      try {
        rep.countermodel = entails_bounded(phi, chi, psi, sig, ob);
      } catch (const OracleBoundError&) {
        oracle_done = true;
      }
      if (rep.countermodel) {
        rep.verdict = Verdict::no;
        return rep;
      }
      if (level == budget.max_domain) oracle_done = true;
    } else {
      oracle_done = true;
    }
    if (deadline.expired()) break;
  }
  return rep;
}

// Is psi an answer to the questions in the context chi?
inline EntailmentReport check_answerhood(const Formula& psi, std::span<const Question> phi, const Formula& chi,
                                         const Signature& sig, const AnswerhoodBudget& budget = {}) {
  if (!is_closed(psi)) throw std::invalid_argument("answer must be closed");
  return decide_entailment(phi, chi, Question(psi), sig, budget);
}

// ---------------------------------------------------------------------------
// Bounded enumeration of developments

struct EnumerationOptions {
  int depth = 2;
  bool equality_allowed = true;
  bool function_terms = true;  // rigid functions applied once to constants and variables
  std::size_t max_formulas = 20000;
};

namespace detail {

inline std::vector<Term> rigid_terms(const Signature& sig, const std::vector<std::string>& scope, bool functions) {
  std::vector<Term> base;
  for (const auto& [name, info] : sig.functions())
    if (info.rigid && info.arity == 0 && info.origin == SymbolOrigin::user) base.push_back(Term::apply(name));
  for (const std::string& v : scope) base.push_back(Term::variable(v));
  std::vector<Term> out = base;
  if (!functions) return out;
  for (const auto& [name, info] : sig.functions()) {
    if (!info.rigid || info.arity == 0 || info.origin != SymbolOrigin::user) continue;
    std::vector<std::size_t> idx(info.arity, 0);
    while (true) {
      std::vector<Term> args;
      for (std::size_t i : idx) args.push_back(base[i]);
      out.push_back(Term::apply(name, std::move(args)));
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == base.size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  return out;
}

class DevelopmentEnumerator {
 public:
  DevelopmentEnumerator(std::span<const Formula> bodies, const Signature& sig, EnumerationOptions opt)
      : bodies_(bodies.begin(), bodies.end()), sig_(sig), opt_(opt) {}

  std::vector<Formula> run() {
    std::vector<Formula> all = gen(opt_.depth, {});
    std::vector<Formula> out;
    for (const Formula& f : all)
      if (is_closed(f)) out.push_back(f);
    return out;
  }

 private:
  std::vector<Formula> base(const std::vector<std::string>& scope) {
    std::vector<Formula> out{Formula::top(), Formula::bottom()};
    std::vector<Term> terms = rigid_terms(sig_, scope, opt_.function_terms);
    for (const Formula& body : bodies_) {
      std::vector<std::string> vars = free_variables(body);
      std::vector<std::size_t> idx(vars.size(), 0);
      if (terms.empty() && !vars.empty()) continue;
      while (true) {
        Substitution s;
        for (std::size_t i = 0; i < vars.size(); ++i) s.bind(vars[i], terms[idx[i]]);
        out.push_back(apply_substitution(body, s));
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == terms.size()) idx[k++] = 0;
        if (k == idx.size()) break;
      }
    }
    if (opt_.equality_allowed)
      for (std::size_t i = 0; i < terms.size(); ++i)
        for (std::size_t j = i + 1; j < terms.size(); ++j) out.push_back(Formula::equal(terms[i], terms[j]));
    return dedupe(std::move(out));
  }

  std::vector<Formula> gen(int depth, const std::vector<std::string>& scope) {
    if (depth == 0) return base(scope);
    std::vector<Formula> prev = gen(depth - 1, scope);
    std::vector<Formula> out = prev;
    for (const Formula& g : prev)
      if (!g.is(Formula::Kind::neg)) out.push_back(Formula::neg(g));
    for (std::size_t i = 0; i < prev.size() && out.size() < opt_.max_formulas; ++i)
      for (std::size_t j = i + 1; j < prev.size() && out.size() < opt_.max_formulas; ++j)
        out.push_back(Formula::conj(prev[i], prev[j]));
    std::string v = "X" + (scope.empty() ? std::string() : std::to_string(scope.size()));
    std::vector<std::string> inner = scope;
    inner.push_back(v);
    for (const Formula& g : gen(depth - 1, inner)) {
      std::vector<std::string> fv = free_variables(g);
      if (std::find(fv.begin(), fv.end(), v) != fv.end()) out.push_back(Formula::exists(v, g));
    }
    if (out.size() > opt_.max_formulas) out.erase(out.begin() + static_cast<std::ptrdiff_t>(opt_.max_formulas), out.end());
    return dedupe(std::move(out));
  }

  static std::vector<Formula> dedupe(std::vector<Formula> fs) {
    std::unordered_set<Formula, FormulaHash> seen;
    std::vector<Formula> out;
    for (Formula& f : fs)
      if (seen.insert(f).second) out.push_back(std::move(f));
    return out;
  }

  std::vector<Formula> bodies_;
  const Signature& sig_;
  EnumerationOptions opt_;
};

}  // namespace detail

// Closed developments of the bodies up to the given connective depth.
inline std::vector<Formula> enumerate_developments(std::span<const Formula> bodies, const Signature& sig,
                                                   EnumerationOptions opt = {}) {
  return detail::DevelopmentEnumerator(bodies, sig, opt).run();
}

}  // namespace pqa

#endif  // PQA_DEVELOPMENT_HPP_
