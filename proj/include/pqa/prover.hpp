// Refutation prover: Skolemize premises plus the negated conclusion and search
// for a closed tableau, deepening the gamma multiplicity 1, 2, 3, ...

#ifndef PQA_PROVER_HPP_
#define PQA_PROVER_HPP_

#include <string>
#include <vector>

#include "pqa/skolem.hpp"
#include "pqa/syntax.hpp"
#include "pqa/tableau.hpp"

namespace pqa {

struct ProverOptions {
  int max_gamma = 6;
  std::size_t max_nodes = 60000;
  std::size_t max_branches = 20000;
  std::size_t max_steps = 2'000'000;  // per deepening level
  long long timeout_ms = 0;           // 0: none
  bool trace = false;
  bool equality_axioms = false;
};

struct ProofResult {
  enum class Status { valid, no_proof_within_budget };
  Status status = Status::no_proof_within_budget;
  int gamma = 0;               // multiplicity at which the search stopped
  std::size_t nodes = 0;
  bool exhausted = false;      // the bounded search space was fully explored
  std::optional<Closure> closure;
  std::string trace;

  bool valid() const { return status == Status::valid; }
};

namespace detail {

inline std::vector<std::string> numbered_vars(const char* stem, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::string(stem) + std::to_string(i));
  return out;
}

inline std::vector<Term> as_terms(const std::vector<std::string>& vars) {
  std::vector<Term> out;
  for (const auto& v : vars) out.push_back(Term::variable(v));
  return out;
}

}  // namespace detail

// Reflexivity plus one replacement axiom per argument position of every
// predicate (including equality itself when it occurs) and every function
// symbol occurring in `formulas`.
inline std::vector<Formula> equality_axioms(std::span<const Formula> formulas) {
  SymbolUse use = collect_symbols(formulas);
  Term x = Term::variable("X");
  std::vector<Formula> out{Formula::forall("X", Formula::equal(x, x))};
  for (const auto& [p, arity] : use.predicates) {
    for (int i = 0; i < arity; ++i) {
      std::vector<std::string> vars = detail::numbered_vars("X", arity);
      std::vector<Term> before = detail::as_terms(vars);
      std::vector<Term> after = before;
      after[i] = Term::variable("Y");
      auto make = [&](std::vector<Term> args) {
        return p == kEqualitySymbol ? Formula::equal(args[0], args[1]) : Formula::atom(p, std::move(args));
      };
      Formula body = Formula::implies(Formula::conj(Formula::equal(before[i], after[i]), make(before)), make(after));
      vars.push_back("Y");
      out.push_back(Formula::forall(vars, body));
    }
  }
  for (const auto& [f, arity] : use.functions) {
    for (int i = 0; i < arity; ++i) {
      std::vector<std::string> vars = detail::numbered_vars("X", arity);
      std::vector<Term> before = detail::as_terms(vars);
      std::vector<Term> after = before;
      after[i] = Term::variable("Y");
      Formula body = Formula::implies(Formula::equal(before[i], after[i]),
                                      Formula::equal(Term::apply(f, before), Term::apply(f, after)));
      vars.push_back("Y");
      out.push_back(Formula::forall(vars, body));
    }
  }
  return out;
}

// One deepening level: a closed tableau with gamma multiplicity k?
inline ProofResult refute_at(std::span<const Formula> skolemized, int k, const ProverOptions& opt,
                             const Deadline& deadline) {
  ProofResult result;
  Tableau t(skolemized, TableauLimits{k, opt.max_nodes, opt.max_branches});
  SearchOptions so;
  so.mode = SearchOptions::Mode::first;
  so.max_steps = opt.max_steps;
  so.deadline = deadline;
  SearchResult r = ClosureSearch(t, so).run();
  result.gamma = k;
  result.nodes = t.size();
  if (opt.trace) result.trace += "-- gamma limit " + std::to_string(k) + "\n" + t.dump();
  if (!r.closures.empty()) {
    result.status = ProofResult::Status::valid;
    result.closure = r.closures.front();
  } else if (!r.truncated && !t.limit_hit() && !t.truncated()) {
    result.exhausted = true;
  }
  return result;
}

// Searches for a closed tableau of already Skolemized formulas.
inline ProofResult refute(std::span<const Formula> skolemized, const ProverOptions& opt) {
  ProofResult result;
  Deadline deadline(opt.timeout_ms);
  std::string trace;
  for (int k = 1; k <= opt.max_gamma; ++k) {
    result = refute_at(skolemized, k, opt, deadline);
    trace += result.trace;
    result.trace = trace;
    if (result.valid() || result.exhausted || deadline.expired()) break;
  }
  return result;
}

// Skolemized premises plus negated conclusion, with equality axioms on request.
inline std::vector<Formula> refutation_input(std::span<const Formula> premises, const Formula& conclusion,
                                             Signature& sig, bool equality_axioms_on) {
  std::vector<Formula> input(premises.begin(), premises.end());
  input.push_back(Formula::neg(conclusion));
  if (equality_axioms_on) {
    std::vector<Formula> ax = equality_axioms(input);
    input.insert(input.begin(), ax.begin(), ax.end());
  }
  return skolemize(input, sig).formulas;
}

// premises |= conclusion ?
inline ProofResult prove(std::span<const Formula> premises, const Formula& conclusion, const Signature& sig,
                         const ProverOptions& opt = {}) {
  Signature local = sig;
  return refute(refutation_input(premises, conclusion, local, opt.equality_axioms), opt);
}

inline ProofResult prove(std::initializer_list<Formula> premises, const Formula& conclusion, const Signature& sig,
                         const ProverOptions& opt = {}) {
  std::vector<Formula> p(premises);
  return prove(std::span<const Formula>(p), conclusion, sig, opt);
}

}  // namespace pqa

#endif  // PQA_PROVER_HPP_
