// Question answering on top of the tableau: answer literals, Add Instance,
// Ans(sigma, kappa), unskolemization, simplification, and the answer stream.
//
// The stream deepens over levels L = k + m, where k bounds the gamma
// multiplicity and m is the number of added instances. For each level every
// mix of m instances (question, polarity) gets its own tableau with the
// instances added at the root, and the closure search collects the closures
// that are minimal when seen through the instances. Their Ans formulas are
// conjoined, unskolemized, rewritten back to the original questions and
// simplified; conjuncts the accumulated answer does not already imply are
// added to it and the strengthened answer is emitted.

#ifndef PQA_QA_HPP_
#define PQA_QA_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pqa/development.hpp"
#include "pqa/printer.hpp"
#include "pqa/prover.hpp"
#include "pqa/skolem.hpp"
#include "pqa/syntax.hpp"
#include "pqa/tableau.hpp"

namespace pqa {

// ---------------------------------------------------------------------------
// Answer literals

struct AtomicQuestion {
  std::string predicate;
  int arity = 0;
  Question original;
  bool literal_introduced = false;  // predicate is a generated answer literal
};

struct AnswerLiteralResult {
  std::vector<Formula> theory;
  std::vector<AtomicQuestion> questions;
};

// A question is used as it stands when its body is an atom whose arguments
// are distinct variables; otherwise ans_i(x) <-> body is added to the theory.
inline bool is_plain_atomic(const Question& q) {
  const Formula& b = q.body();
  if (!b.is(Formula::Kind::atom)) return false;
  std::set<std::string> seen;
  for (const Term& t : b.terms())
    if (!t.is_variable() || !seen.insert(t.name()).second) return false;
  return true;
}

inline AnswerLiteralResult introduce_answer_literals(std::span<const Formula> theory, std::span<const Question> qs,
                                                     Signature& sig) {
  AnswerLiteralResult out;
  out.theory.assign(theory.begin(), theory.end());
  for (const Question& q : qs) {
    AtomicQuestion aq{std::string(), 0, q, false};
    if (is_plain_atomic(q)) {
      aq.predicate = q.body().predicate();
      aq.arity = static_cast<int>(q.body().terms().size());
    } else {
      aq.predicate = sig.fresh_name("ans");
      aq.arity = static_cast<int>(q.variables().size());
      aq.literal_introduced = true;
      sig.declare_predicate(aq.predicate, aq.arity, SymbolOrigin::answer_literal);
      std::vector<Term> args;
      for (const std::string& v : q.variables()) args.push_back(Term::variable(v));
      Formula def = Formula::forall(q.variables(), Formula::iff(Formula::atom(aq.predicate, args), q.body()));
      out.theory.push_back(rename_bound_apart(def));
    }
    out.questions.push_back(std::move(aq));
  }
  return out;
}

inline AnswerLiteralResult introduce_answer_literal(std::span<const Formula> theory, const Question& q,
                                                    Signature& sig) {
  return introduce_answer_literals(theory, std::span<const Question>(&q, 1), sig);
}

// Replaces every generated answer-literal atom ans(t) by body(t).
inline Formula rewrite_answer_literals(const Formula& f, std::span<const AtomicQuestion> qs) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::atom:
      for (const AtomicQuestion& q : qs) {
        if (!q.literal_introduced || q.predicate != f.predicate()) continue;
        Substitution s;
        for (std::size_t i = 0; i < q.original.variables().size(); ++i) s.bind(q.original.variables()[i], f.terms()[i]);
        return apply_substitution(q.original.body(), s);
      }
      return f;
    case K::conj:
      return Formula::conj(rewrite_answer_literals(f.left(), qs), rewrite_answer_literals(f.right(), qs));
    case K::neg:
      return Formula::neg(rewrite_answer_literals(f.operand(), qs));
    case K::exists:
      return Formula::exists(f.variable(), rewrite_answer_literals(f.body(), qs));
    default:
      return f;
  }
}

// ---------------------------------------------------------------------------
// Ans(sigma, kappa)

// Universal closure of ~(conjunction of the used instances under sigma).
inline Formula ans(const ClosureKey& key, const std::vector<Tableau::Instance>& instances) {
  std::vector<Formula> parts;
  for (int i : key.instances) parts.push_back(apply_substitution(instances[i].literal, key.sigma));
  Formula body = Formula::neg(Formula::conj_all(parts));
  return Formula::forall(free_variables(body), body);
}

inline Formula ans(const Closure& c, const Tableau& t) {
  ClosureKey key;
  std::set<int> used;
  for (int n : c.kappa)
    if (t.node(n).instance >= 0) used.insert(t.node(n).instance);
  key.instances.assign(used.begin(), used.end());
  key.sigma = c.sigma;
  return ans(key, t.instances());
}

// ---------------------------------------------------------------------------
// Simplification

namespace detail {

inline Formula simplify_once(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::equal:
      return f.lhs() == f.rhs() ? Formula::top() : f;
    case K::neg: {
      Formula g = simplify_once(f.operand());
      if (g.is(K::neg)) return g.operand();
      if (g.is(K::top)) return Formula::bottom();
      if (g.is(K::bottom)) return Formula::top();
      return Formula::neg(g);
    }
    case K::conj: {
      std::vector<Formula> parts;
      flatten_conjunction(f, parts);
      std::vector<Formula> kept;
      for (const Formula& p : parts) {
        Formula s = simplify_once(p);
        std::vector<Formula> sub;
        flatten_conjunction(s, sub);
        for (const Formula& q : sub) {
          if (q.is(K::top)) continue;
          if (q.is(K::bottom)) return Formula::bottom();
          bool dup = false;
          for (const Formula& k : kept) dup = dup || alpha_equivalent(k, q);
          if (!dup) kept.push_back(q);
        }
      }
      for (const Formula& a : kept)
        for (const Formula& b : kept)
          if (a.is(K::neg) && alpha_equivalent(a.operand(), b)) return Formula::bottom();
      return Formula::conj_all(kept);
    }
    case K::exists: {
      Formula body = simplify_once(f.body());
      std::vector<std::string> fv = free_variables(body);
      if (std::find(fv.begin(), fv.end(), f.variable()) == fv.end()) return body;
      return Formula::exists(f.variable(), body);
    }
    default:
      return f;
  }
}

}  // namespace detail

// Equivalence-preserving clean-up: double negation, constant folding,
// flattening and deduplication of conjunctions, vacuous quantifiers, t = t.
inline Formula simplify(const Formula& f) {
  Formula cur = f;
  for (int i = 0; i < 32; ++i) {
    Formula next = detail::simplify_once(cur);
    if (next == cur) break;
    cur = next;
  }
  return cur;
}

// Renames bound variables to X, Y, Z, W, U, V, X1, ... by nesting depth.
inline Formula pretty_variables(const Formula& f) {
  static const char* names[] = {"X", "Y", "Z", "W", "U", "V"};
  std::set<std::string> free;
  for (const auto& v : free_variables(f)) free.insert(v);
  std::function<Formula(const Formula&, int, const Substitution&)> go = [&](const Formula& g, int depth,
                                                                           const Substitution& s) -> Formula {
    using K = Formula::Kind;
    switch (g.kind()) {
      case K::atom:
      case K::equal:
        return apply_substitution(g, s);
      case K::conj:
        return Formula::conj(go(g.left(), depth, s), go(g.right(), depth, s));
      case K::neg:
        return Formula::neg(go(g.operand(), depth, s));
      case K::exists: {
        std::string name;
        for (int d = depth;; ++d) {
          name = std::string(names[d % 6]) + (d >= 6 ? std::to_string(d / 6) : "");
          if (!free.count(name)) break;
        }
        Substitution inner = s;
        inner.bind(g.variable(), Term::variable(name));
        return Formula::exists(name, go(g.body(), depth + 1, inner));
      }
      default:
        return g;
    }
  };
  return go(f, 0, Substitution{});
}

// ---------------------------------------------------------------------------
// Unskolemization

namespace detail {

using Path = std::vector<int>;

inline const Formula& at_path(const Formula& f, const Path& p, std::size_t len) {
  const Formula* cur = &f;
  for (std::size_t i = 0; i < len; ++i) {
    switch (cur->kind()) {
      case Formula::Kind::conj:
        cur = p[i] == 0 ? &cur->left() : &cur->right();
        break;
      case Formula::Kind::neg:
        cur = &cur->operand();
        break;
      case Formula::Kind::exists:
        cur = &cur->body();
        break;
      default:
        return *cur;
    }
  }
  return *cur;
}

inline Formula replace_at(const Formula& f, const Path& p, std::size_t i, const Formula& repl) {
  if (i == p.size()) return repl;
  switch (f.kind()) {
    case Formula::Kind::conj:
      return p[i] == 0 ? Formula::conj(replace_at(f.left(), p, i + 1, repl), f.right())
                       : Formula::conj(f.left(), replace_at(f.right(), p, i + 1, repl));
    case Formula::Kind::neg:
      return Formula::neg(replace_at(f.operand(), p, i + 1, repl));
    case Formula::Kind::exists:
      return Formula::exists(f.variable(), replace_at(f.body(), p, i + 1, repl));
    default:
      return f;
  }
}

inline bool eliminable(const Term& t, const Signature& sig, bool assume_rigid) {
  if (t.is_variable()) return false;
  if (sig.is_skolem(t.name())) return true;
  if (assume_rigid) return false;
  return !sig.is_rigid(t.name());
}

inline std::optional<Term> outermost_in_term(const Term& t, const Signature& sig, bool assume_rigid) {
  if (eliminable(t, sig, assume_rigid)) return t;
  for (const Term& a : t.args())
    if (auto r = outermost_in_term(a, sig, assume_rigid)) return r;
  return std::nullopt;
}

inline std::optional<Term> first_eliminable(const Formula& f, const Signature& sig, bool assume_rigid) {
  switch (f.kind()) {
    case Formula::Kind::atom:
    case Formula::Kind::equal:
      for (const Term& t : f.terms())
        if (auto r = outermost_in_term(t, sig, assume_rigid)) return r;
      return std::nullopt;
    case Formula::Kind::conj:
      if (auto r = first_eliminable(f.left(), sig, assume_rigid)) return r;
      return first_eliminable(f.right(), sig, assume_rigid);
    case Formula::Kind::neg:
      return first_eliminable(f.operand(), sig, assume_rigid);
    case Formula::Kind::exists:
      return first_eliminable(f.body(), sig, assume_rigid);
    default:
      return std::nullopt;
  }
}

inline bool term_contains(const Term& hay, const Term& needle) {
  if (hay == needle) return true;
  for (const Term& a : hay.args())
    if (term_contains(a, needle)) return true;
  return false;
}

inline void occurrence_paths(const Formula& f, const Term& t, Path& cur, std::vector<Path>& out) {
  switch (f.kind()) {
    case Formula::Kind::atom:
    case Formula::Kind::equal:
      for (const Term& a : f.terms())
        if (term_contains(a, t)) {
          out.push_back(cur);
          return;
        }
      return;
    case Formula::Kind::conj:
      cur.push_back(0);
      occurrence_paths(f.left(), t, cur, out);
      cur.back() = 1;
      occurrence_paths(f.right(), t, cur, out);
      cur.pop_back();
      return;
    case Formula::Kind::neg:
    case Formula::Kind::exists:
      cur.push_back(0);
      occurrence_paths(f.kind() == Formula::Kind::neg ? f.operand() : f.body(), t, cur, out);
      cur.pop_back();
      return;
    default:
      return;
  }
}

inline Term replace_term(const Term& hay, const Term& needle, const Term& with) {
  if (hay == needle) return with;
  if (hay.is_variable() || hay.args().empty()) return hay;
  std::vector<Term> args;
  for (const Term& a : hay.args()) args.push_back(replace_term(a, needle, with));
  return Term::apply(hay.name(), std::move(args));
}

inline Formula replace_term(const Formula& f, const Term& needle, const Term& with) {
  switch (f.kind()) {
    case Formula::Kind::atom: {
      std::vector<Term> args;
      for (const Term& a : f.terms()) args.push_back(replace_term(a, needle, with));
      return Formula::atom(f.predicate(), std::move(args));
    }
    case Formula::Kind::equal:
      return Formula::equal(replace_term(f.lhs(), needle, with), replace_term(f.rhs(), needle, with));
    case Formula::Kind::conj:
      return Formula::conj(replace_term(f.left(), needle, with), replace_term(f.right(), needle, with));
    case Formula::Kind::neg:
      return Formula::neg(replace_term(f.operand(), needle, with));
    case Formula::Kind::exists:
      return Formula::exists(f.variable(), replace_term(f.body(), needle, with));
    default:
      return f;
  }
}

}  // namespace detail

// Removes Skolem and non-rigid terms by existential generalization. The
// outermost offending term t is replaced, everywhere, by a fresh variable V
// bound just inside the innermost binder of t's variables (at the root if t
// is ground). At a positive position this is exists V; at a negative position
// the generalization is forall V, i.e. exists V under the enclosing negation.
// Each step is entailed by its input, and binding V as high as possible keeps
// the strongest such generalization.
inline Formula unskolemize(const Formula& input, const Signature& sig, bool assume_rigid = false) {
  Formula f = rename_bound_apart(input);
  std::set<std::string> used = all_variables(f);
  while (auto t = detail::first_eliminable(f, sig, assume_rigid)) {
    std::vector<detail::Path> paths;
    detail::Path cur;
    detail::occurrence_paths(f, *t, cur, paths);
    detail::Path common = paths.front();
    for (const auto& p : paths) {
      std::size_t n = 0;
      while (n < common.size() && n < p.size() && common[n] == p[n]) ++n;
      common.resize(n);
    }
    std::vector<std::string> tv = term_variables(*t);
    std::size_t insert = 0;
    int negations = 0, negations_at_insert = 0;
    for (std::size_t i = 0; i < common.size(); ++i) {
      const Formula& node = detail::at_path(f, common, i);
      if (node.is(Formula::Kind::neg)) ++negations;
      if (node.is(Formula::Kind::exists) &&
          std::find(tv.begin(), tv.end(), node.variable()) != tv.end()) {
        insert = i + 1;
        negations_at_insert = negations;
      }
    }
    detail::Path where(common.begin(), common.begin() + static_cast<std::ptrdiff_t>(insert));
    std::string v = fresh_variable("X", used);
    used.insert(v);
    Formula target = detail::replace_term(detail::at_path(f, where, where.size()), *t, Term::variable(v));
    Formula generalized = negations_at_insert % 2 == 0 ? Formula::exists(v, target)
                                                       : Formula::forall(v, target);
    f = detail::replace_at(f, where, 0, generalized);
  }
  return f;
}

// No Skolem symbol and no non-rigid function symbol occurs in f.
inline bool free_of_nonrigid(const Formula& f, const Signature& sig, bool assume_rigid = false) {
  return !detail::first_eliminable(f, sig, assume_rigid).has_value();
}

// ---------------------------------------------------------------------------
// Horn theories

namespace detail {

// Positive-literal counts of the clauses of f's clause form, or nullopt once
// the clause set gets too large to bother.
inline std::optional<std::vector<int>> clause_profile(const Formula& f, bool positive) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::top:
      return positive ? std::vector<int>{} : std::vector<int>{0};
    case K::bottom:
      return positive ? std::vector<int>{0} : std::vector<int>{};
    case K::atom:
    case K::equal:
      return std::vector<int>{positive ? 1 : 0};
    case K::neg:
      return clause_profile(f.operand(), !positive);
    case K::exists:
      return clause_profile(f.body(), positive);
    case K::conj: {
      auto l = clause_profile(f.left(), positive);
      auto r = clause_profile(f.right(), positive);
      if (!l || !r) return std::nullopt;
      if (positive) {
        l->insert(l->end(), r->begin(), r->end());
        return l;
      }
      if (l->size() * r->size() > 4096) return std::nullopt;
      std::vector<int> out;
      for (int a : *l)
        for (int b : *r) out.push_back(a + b);
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline bool is_horn(const Formula& f) {
  auto p = detail::clause_profile(f, true);
  return p && std::all_of(p->begin(), p->end(), [](int n) { return n <= 1; });
}

// ---------------------------------------------------------------------------
// The answer stream

struct StreamOptions {
  int max_level = 6;
  int max_instances = 3;
  std::size_t max_answers = 10;
  long long timeout_ms = 10000;
  bool horn = false;
  bool assume_rigid = false;
  bool equality_axioms = false;
  std::size_t max_nodes = 40000;
  std::size_t max_branches = 10000;
  std::size_t max_steps = 400000;   // per mix
  std::size_t max_closures = 64;    // per mix
  int implication_gamma = 2;        // budget for the "already implied" check
  std::size_t implication_steps = 20000;
  bool trace = false;
};

struct Answer {
  Formula formula = Formula::top();
  int level = 0;
  std::string provenance;
};

class AnswerStream {
 public:
  // `questions` is the effective question set (common ground included).
  AnswerStream(std::span<const Formula> theory, std::span<const Question> questions, const Signature& sig,
               StreamOptions opt)
      : sig_(sig), opt_(opt), deadline_(opt.timeout_ms) {
    if (questions.empty()) throw std::invalid_argument("at least one question is required");
    if (opt_.assume_rigid) sig_.set_all_rigid();
    for (const Question& q : questions) originals_.push_back(q);
    if (opt_.horn) {
      for (const Question& q : questions)
        if (!q.body().is(Formula::Kind::atom))
          throw std::invalid_argument("horn mode requires atomic questions");
      for (const Formula& f : theory)
        if (!is_horn(f)) throw std::invalid_argument("horn mode: not a Horn formula: " + to_string(f));
    }
    AnswerLiteralResult al = introduce_answer_literals(theory, questions, sig_);
    questions_ = al.questions;
    std::vector<Formula> base = al.theory;
    if (opt_.equality_axioms) {
      std::vector<Formula> ax = equality_axioms(base);
      base.insert(base.begin(), ax.begin(), ax.end());
    }
    theory_ = skolemize(base, sig_).formulas;
    build_schedule();
  }

  const Signature& signature() const { return sig_; }
  const std::vector<Formula>& skolemized_theory() const { return theory_; }
  const std::vector<AtomicQuestion>& questions() const { return questions_; }
  bool exhausted() const { return pos_ >= schedule_.size() && pending_.empty(); }
  bool timed_out() const { return deadline_.expired(); }
  const std::string& trace() const { return trace_; }

  // Next answer in schedule order, or nullopt when the budget is spent.
  std::optional<Answer> next() {
    while (pending_.empty()) {
      if (emitted_ >= opt_.max_answers) return std::nullopt;
      if (!started_) {
        started_ = true;
        if (!opt_.horn) pending_.push_back(Answer{Formula::top(), 0, "empty closure set"});
        continue;
      }
      if (pos_ >= schedule_.size() || deadline_.expired()) return std::nullopt;
      run_step(schedule_[pos_++]);
    }
    if (emitted_ >= opt_.max_answers) return std::nullopt;
    Answer a = pending_.front();
    pending_.erase(pending_.begin());
    ++emitted_;
    return a;
  }

  // Processes a raw pre-answer the way the stream does.
  Formula finish(const Formula& pre) const {
    Formula f = unskolemize(pre, sig_, false);
    f = rewrite_answer_literals(f, questions_);
    f = simplify(rename_bound_apart(f));
    return pretty_variables(f);
  }

 private:
  struct Step {
    int level;
    int k;
    std::vector<std::pair<int, bool>> mix;  // (question, positive)
  };

  void build_schedule() {
    std::vector<std::pair<int, bool>> choices;
    for (std::size_t q = 0; q < questions_.size(); ++q) {
      if (!opt_.horn) choices.emplace_back(static_cast<int>(q), true);
      choices.emplace_back(static_cast<int>(q), false);
    }
    for (int level = 1; level <= opt_.max_level; ++level) {
      int lo = opt_.horn ? 1 : 0;
      int hi = opt_.horn ? 1 : std::min(level, opt_.max_instances);
      for (int m = lo; m <= hi; ++m) {
        int k = level - m;
        if (k < 0) continue;
        std::vector<std::size_t> idx(m, 0);
        // Multisets of size m over `choices`, in lexicographic order.
        while (true) {
          Step s{level, k, {}};
          for (std::size_t i : idx) s.mix.push_back(choices[i]);
          schedule_.push_back(std::move(s));
          int pos = m - 1;
          while (pos >= 0 && idx[pos] + 1 == choices.size()) --pos;
          if (pos < 0) break;
          ++idx[pos];
          for (int j = pos + 1; j < m; ++j) idx[j] = idx[pos];
        }
      }
    }
  }

  static std::string mix_name(const std::vector<std::pair<int, bool>>& mix) {
    std::string s;
    for (const auto& [q, pos] : mix) s += (s.empty() ? "" : " ") + std::string(pos ? "+" : "-") + std::to_string(q);
    return s.empty() ? "none" : s;
  }

  void run_step(const Step& step) {
    std::string name = mix_name(step.mix);
    // A mix whose search was exhaustive at a smaller multiplicity without
    // hitting the gamma bound cannot find anything new.
    if (saturated_.count(name)) return;
    Tableau t(theory_, TableauLimits{step.k, opt_.max_nodes, opt_.max_branches});
    for (const auto& [q, positive] : step.mix)
      t.add_instance(questions_[q].predicate, questions_[q].arity, positive);
    SearchOptions so;
    so.mode = SearchOptions::Mode::all_keys;
    so.max_steps = opt_.max_steps;
    so.max_results = opt_.max_closures;
    so.deadline = deadline_;
    SearchResult r = ClosureSearch(t, so).run();
    if (!r.truncated && !t.limit_hit() && !t.truncated()) saturated_.insert(name);
    if (opt_.trace)
      trace_ += "-- level " + std::to_string(step.level) + " k=" + std::to_string(step.k) + " mix " + name + ": " +
                std::to_string(r.keys.size()) + " closures, " + std::to_string(t.size()) + " nodes" +
                (r.truncated ? " (truncated)" : "") + "\n";
    if (r.keys.empty()) return;
    std::string prov = "k=" + std::to_string(step.k) + " mix " + name + ", " + std::to_string(r.keys.size()) +
                       " closure" + (r.keys.size() == 1 ? "" : "s");
    if (opt_.horn) {
      for (const ClosureKey& key : r.keys) {
        Formula a = finish(ans(key, t.instances()));
        if (a.is(Formula::Kind::top)) continue;
        bool seen = false;
        for (const Formula& e : accepted_) seen = seen || alpha_equivalent(e, a);
        if (seen) continue;
        accepted_.push_back(a);
        pending_.push_back(Answer{a, step.level, prov});
      }
      return;
    }
    std::vector<Formula> parts;
    for (const ClosureKey& key : r.keys) parts.push_back(ans(key, t.instances()));
    Formula pre = Formula::conj_all(parts);
    Formula psi = finish(pre);
    std::vector<Formula> conjuncts;
    flatten_conjunction(psi, conjuncts);
    bool added = false;
    for (const Formula& c : conjuncts) {
      if (c.is(Formula::Kind::top)) continue;
      bool known = false;
      for (const Formula& e : accepted_) known = known || alpha_equivalent(e, c);
      if (known || implied(c)) continue;
      accepted_.push_back(c);
      added = true;
    }
    if (!added) return;
    Formula acc = simplify(Formula::conj_all(accepted_));
    pending_.push_back(Answer{acc, step.level, prov});
  }

  bool implied(const Formula& c) const {
    ProverOptions po;
    po.max_gamma = opt_.implication_gamma;
    po.max_steps = opt_.implication_steps;
    po.max_nodes = 5000;
    po.timeout_ms = std::max<long long>(1, std::min<long long>(500, deadline_.remaining_ms() < 0 ? 500 : deadline_.remaining_ms()));
    return prove(accepted_, c, sig_, po).valid();
  }

  Signature sig_;
  StreamOptions opt_;
  Deadline deadline_;
  std::vector<Question> originals_;
  std::vector<AtomicQuestion> questions_;
  std::vector<Formula> theory_;
  std::vector<Step> schedule_;
  std::size_t pos_ = 0;
  bool started_ = false;
  std::vector<Answer> pending_;
  std::vector<Formula> accepted_;
  std::set<std::string> saturated_;
  std::size_t emitted_ = 0;
  std::string trace_;
};

// ---------------------------------------------------------------------------
// Reference mode: enumerate developments and keep the provable ones.

struct EnumerateOptions {
  EnumerationOptions enumeration;
  ProverOptions prover{2, 5000, 2000, 20000, 200, false, false};
  std::size_t max_answers = 1000;
  long long timeout_ms = 30000;
};

inline std::vector<Formula> algorithm1_reference(std::span<const Formula> theory, std::span<const Question> qs,
                                                 const Signature& sig, const EnumerateOptions& opt = {}) {
  std::vector<Formula> bodies = bodies_of(qs);
  std::vector<Formula> out;
  Deadline deadline(opt.timeout_ms);
  for (const Formula& d : enumerate_developments(bodies, sig, opt.enumeration)) {
    if (deadline.expired() || out.size() >= opt.max_answers) break;
    if (prove(theory, d, sig, opt.prover).valid()) out.push_back(d);
  }
  return out;
}

}  // namespace pqa

#endif  // PQA_QA_HPP_
