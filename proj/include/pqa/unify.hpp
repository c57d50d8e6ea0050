// Syntactic unification with occurs check, one-way matching, and the
// generality preorder on substitutions.

#ifndef PQA_UNIFY_HPP_
#define PQA_UNIFY_HPP_

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pqa/syntax.hpp"

namespace pqa {

// Triangular binding store with an undo trail, used by the tableau search.
class Bindings {
 public:
  const Term* lookup(const std::string& var) const {
    auto it = map_.find(var);
    return it == map_.end() ? nullptr : &it->second;
  }

  // Follows variable bindings until an unbound variable or an application.
  Term walk(Term t) const {
    while (t.is_variable()) {
      const Term* r = lookup(t.name());
      if (!r) break;
      t = *r;
    }
    return t;
  }

  Term resolve(const Term& t) const {
    Term w = walk(t);
    if (w.is_variable() || w.args().empty()) return w;
    std::vector<Term> args;
    args.reserve(w.args().size());
    for (const Term& a : w.args()) args.push_back(resolve(a));
    return Term::apply(w.name(), std::move(args));
  }

  bool occurs(const std::string& var, const Term& t) const {
    Term w = walk(t);
    if (w.is_variable()) return w.name() == var;
    for (const Term& a : w.args())
      if (occurs(var, a)) return true;
    return false;
  }

  void bind(const std::string& var, Term t) {
    map_.emplace(var, std::move(t));
    trail_.push_back(var);
  }

  std::size_t mark() const { return trail_.size(); }
  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      map_.erase(trail_.back());
      trail_.pop_back();
    }
  }

  bool unify(const Term& a, const Term& b) {
    Term x = walk(a);
    Term y = walk(b);
    if (x.is_variable() && y.is_variable() && x.name() == y.name()) return true;
    if (x.is_variable()) {
      if (occurs(x.name(), y)) return false;
      bind(x.name(), y);
      return true;
    }
    if (y.is_variable()) {
      if (occurs(y.name(), x)) return false;
      bind(y.name(), x);
      return true;
    }
    if (x.name() != y.name() || x.args().size() != y.args().size()) return false;
    for (std::size_t i = 0; i < x.args().size(); ++i)
      if (!unify(x.args()[i], y.args()[i])) return false;
    return true;
  }

  // Unifies two atoms (or equalities) argument-wise. Leaves partial bindings
  // on failure; callers undo to a mark.
  bool unify_atoms(const Formula& a, const Formula& b) {
    if (a.kind() != b.kind() || a.predicate() != b.predicate() || a.terms().size() != b.terms().size())
      return false;
    for (std::size_t i = 0; i < a.terms().size(); ++i)
      if (!unify(a.terms()[i], b.terms()[i])) return false;
    return true;
  }

  // The bindings of `vars`, fully resolved.
  Substitution snapshot(const std::vector<std::string>& vars) const {
    Substitution s;
    for (const std::string& v : vars) {
      Term t = resolve(Term::variable(v));
      if (!(t.is_variable() && t.name() == v)) s.bind(v, t);
    }
    return s;
  }

  Substitution snapshot() const {
    Substitution s;
    for (const auto& [v, t] : map_) s.bind(v, resolve(t));
    return s;
  }

  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<std::string, Term> map_;
  std::vector<std::string> trail_;
};

// Most general unifier of a list of term pairs; nullopt if none exists.
inline std::optional<Substitution> mgu(const std::vector<std::pair<Term, Term>>& pairs) {
  Bindings b;
  std::vector<std::string> vars;
  std::set<std::string> seen;
  for (const auto& [l, r] : pairs) {
    collect_term_variables(l, vars, seen);
    collect_term_variables(r, vars, seen);
    if (!b.unify(l, r)) return std::nullopt;
  }
  return b.snapshot(vars);
}

inline std::optional<Substitution> mgu(const Term& a, const Term& b) { return mgu({{a, b}}); }

// Unifier of two atomic formulas with the same predicate.
inline std::optional<Substitution> mgu(const Formula& a, const Formula& b) {
  if (!a.is_atomic() || !b.is_atomic() || a.kind() != b.kind() || a.predicate() != b.predicate() ||
      a.terms().size() != b.terms().size())
    return std::nullopt;
  std::vector<std::pair<Term, Term>> pairs;
  for (std::size_t i = 0; i < a.terms().size(); ++i) pairs.emplace_back(a.terms()[i], b.terms()[i]);
  return mgu(pairs);
}

// One-way matching: extends `theta` so that pattern·theta == target. Only
// variables of the pattern are bound.
inline bool match_term(const Term& pattern, const Term& target, Substitution& theta) {
  if (pattern.is_variable()) {
    if (const Term* bound = theta.lookup(pattern.name())) return *bound == target;
    theta.bind(pattern.name(), target);
    return true;
  }
  if (target.is_variable() || pattern.name() != target.name() || pattern.args().size() != target.args().size())
    return false;
  for (std::size_t i = 0; i < pattern.args().size(); ++i)
    if (!match_term(pattern.args()[i], target.args()[i], theta)) return false;
  return true;
}

// True when s1 is at least as general as s2 on `vars`: there is a theta with
// v·s1·theta == v·s2 for every v in vars.
inline bool more_general(const Substitution& s1, const Substitution& s2, const std::vector<std::string>& vars) {
  Substitution theta;
  for (const std::string& v : vars) {
    Term t1 = s1.apply(Term::variable(v));
    Term t2 = s2.apply(Term::variable(v));
    if (!match_term(t1, t2, theta)) return false;
  }
  return true;
}

}  // namespace pqa

#endif  // PQA_UNIFY_HPP_
