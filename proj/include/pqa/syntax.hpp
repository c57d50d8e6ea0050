// First-order terms, formulas, questions and substitutions over a
// rigidity-annotated signature.
//
// Core connectives are {and, not, exists, true, false, =}; disjunction,
// implication, biconditional and universal quantification are built from them
// by the helper constructors below and recognised again by the printer.

#ifndef PQA_SYNTAX_HPP_
#define PQA_SYNTAX_HPP_

#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace pqa {

class SignatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Where a symbol came from. Anything other than `user` is generated and lives
// in a namespace that user input cannot reach.
enum class SymbolOrigin { user, skolem, primed, answer_literal, existence };

struct FunctionInfo {
  int arity = 0;
  bool rigid = false;
  SymbolOrigin origin = SymbolOrigin::user;
};

struct PredicateInfo {
  int arity = 0;
  SymbolOrigin origin = SymbolOrigin::user;
};

inline constexpr std::string_view kEqualitySymbol = "=";

class Signature {
 public:
  void declare_predicate(const std::string& name, int arity,
                         SymbolOrigin origin = SymbolOrigin::user) {
    check_name(name, arity);
    if (functions_.count(name))
      throw SignatureError("symbol '" + name + "' is already a function symbol");
    auto [it, inserted] = predicates_.try_emplace(name, PredicateInfo{arity, origin});
    if (!inserted && it->second.arity != arity)
      throw SignatureError("predicate '" + name + "' used with arity " + std::to_string(arity) +
                           " but declared with arity " + std::to_string(it->second.arity));
  }

  void declare_function(const std::string& name, int arity, bool rigid,
                        SymbolOrigin origin = SymbolOrigin::user) {
    check_name(name, arity);
    if (predicates_.count(name))
      throw SignatureError("symbol '" + name + "' is already a predicate symbol");
    auto [it, inserted] = functions_.try_emplace(name, FunctionInfo{arity, rigid, origin});
    if (!inserted) {
      if (it->second.arity != arity)
        throw SignatureError("function '" + name + "' used with arity " + std::to_string(arity) +
                             " but declared with arity " + std::to_string(it->second.arity));
      it->second.rigid = it->second.rigid || rigid;
    }
  }

  // Looks up or implicitly declares (non-rigid) a function symbol.
  void use_function(const std::string& name, int arity) {
    if (const FunctionInfo* info = function(name)) {
      if (info->arity != arity)
        throw SignatureError("function '" + name + "' used with arity " + std::to_string(arity) +
                             " but declared with arity " + std::to_string(info->arity));
      return;
    }
    declare_function(name, arity, false);
  }

  void use_predicate(const std::string& name, int arity) {
    if (name == kEqualitySymbol) return;
    declare_predicate(name, arity);
  }

  const FunctionInfo* function(const std::string& name) const {
    auto it = functions_.find(name);
    return it == functions_.end() ? nullptr : &it->second;
  }
  const PredicateInfo* predicate(const std::string& name) const {
    auto it = predicates_.find(name);
    return it == predicates_.end() ? nullptr : &it->second;
  }

  // Undeclared symbols default to non-rigid.
  bool is_rigid(const std::string& name) const {
    const FunctionInfo* info = function(name);
    return info != nullptr && info->rigid;
  }
  bool is_skolem(const std::string& name) const {
    const FunctionInfo* info = function(name);
    return info != nullptr && info->origin == SymbolOrigin::skolem;
  }
  bool has_symbol(const std::string& name) const {
    return functions_.count(name) || predicates_.count(name);
  }

  void set_all_rigid() {
    for (auto& [name, info] : functions_) info.rigid = true;
  }

  // A name of the form base<N> not used by any symbol.
  std::string fresh_name(std::string_view base) const {
    for (std::size_t i = 0;; ++i) {
      std::string candidate = std::string(base) + std::to_string(i);
      if (!has_symbol(candidate)) return candidate;
    }
  }

  const std::map<std::string, PredicateInfo>& predicates() const { return predicates_; }
  const std::map<std::string, FunctionInfo>& functions() const { return functions_; }

 private:
  static void check_name(const std::string& name, int arity) {
    if (name.empty()) throw SignatureError("empty symbol name");
    if (arity < 0) throw SignatureError("negative arity for '" + name + "'");
  }

  std::map<std::string, PredicateInfo> predicates_;
  std::map<std::string, FunctionInfo> functions_;
};

inline std::size_t hash_combine(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

class Term {
 public:
  enum class Kind { variable, apply };

  static Term variable(std::string name) {
    return Term(std::make_shared<const Node>(Kind::variable, std::move(name), std::vector<Term>{}));
  }
  static Term apply(std::string symbol, std::vector<Term> args = {}) {
    return Term(std::make_shared<const Node>(Kind::apply, std::move(symbol), std::move(args)));
  }

  Kind kind() const { return node_->kind; }
  bool is_variable() const { return node_->kind == Kind::variable; }
  const std::string& name() const { return node_->name; }
  std::span<const Term> args() const { return node_->args; }
  const std::vector<Term>& arg_vector() const { return node_->args; }
  std::size_t hash() const { return node_->hash; }
  bool same_node(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind ||
        a.node_->name != b.node_->name || a.node_->args.size() != b.node_->args.size())
      return false;
    for (std::size_t i = 0; i < a.node_->args.size(); ++i)
      if (!(a.node_->args[i] == b.node_->args[i])) return false;
    return true;
  }
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node {
    Node(Kind k, std::string n, std::vector<Term> a)
        : kind(k), name(std::move(n)), args(std::move(a)) {
      hash = hash_combine(std::hash<std::string>{}(name), static_cast<std::size_t>(kind));
      for (const Term& t : args) hash = hash_combine(hash, t.hash());
    }
    Kind kind;
    std::string name;
    std::vector<Term> args;
    std::size_t hash;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class Formula {
 public:
  enum class Kind { top, bottom, atom, equal, conj, neg, exists };

  static Formula top() { return Formula(make(Kind::top)); }
  static Formula bottom() { return Formula(make(Kind::bottom)); }
  static Formula atom(std::string predicate, std::vector<Term> args = {}) {
    auto n = make(Kind::atom);
    n->name = std::move(predicate);
    n->terms = std::move(args);
    return Formula(finish(std::move(n)));
  }
  static Formula equal(Term lhs, Term rhs) {
    auto n = make(Kind::equal);
    n->name = std::string(kEqualitySymbol);
    n->terms = {std::move(lhs), std::move(rhs)};
    return Formula(finish(std::move(n)));
  }
  static Formula conj(Formula a, Formula b) {
    auto n = make(Kind::conj);
    n->subs = {std::move(a), std::move(b)};
    return Formula(finish(std::move(n)));
  }
  static Formula neg(Formula a) {
    auto n = make(Kind::neg);
    n->subs = {std::move(a)};
    return Formula(finish(std::move(n)));
  }
  static Formula exists(std::string var, Formula body) {
    auto n = make(Kind::exists);
    n->name = std::move(var);
    n->subs = {std::move(body)};
    return Formula(finish(std::move(n)));
  }

  // Derived forms, desugared into the core connectives.
  static Formula disj(Formula a, Formula b) { return neg(conj(neg(std::move(a)), neg(std::move(b)))); }
  static Formula implies(Formula a, Formula b) { return neg(conj(std::move(a), neg(std::move(b)))); }
  static Formula iff(const Formula& a, const Formula& b) { return conj(implies(a, b), implies(b, a)); }
  static Formula forall(std::string var, Formula body) {
    return neg(exists(std::move(var), neg(std::move(body))));
  }
  static Formula forall(const std::vector<std::string>& vars, Formula body) {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = forall(*it, std::move(body));
    return body;
  }
  static Formula exists(const std::vector<std::string>& vars, Formula body) {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = exists(*it, std::move(body));
    return body;
  }
  static Formula conj_all(std::span<const Formula> parts) {
    if (parts.empty()) return top();
    Formula acc = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) acc = conj(parts[i], acc);
    return acc;
  }

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  bool is_atomic() const { return is(Kind::atom) || is(Kind::equal); }
  bool is_literal() const {
    return is_atomic() || is(Kind::top) || is(Kind::bottom) ||
           (is(Kind::neg) && (operand().is_atomic() || operand().is(Kind::top) ||
                              operand().is(Kind::bottom)));
  }

  // atom / equal
  const std::string& predicate() const { return node_->name; }
  std::span<const Term> terms() const { return node_->terms; }
  const std::vector<Term>& term_vector() const { return node_->terms; }
  const Term& lhs() const { return node_->terms[0]; }
  const Term& rhs() const { return node_->terms[1]; }
  // conj
  const Formula& left() const { return node_->subs[0]; }
  const Formula& right() const { return node_->subs[1]; }
  // neg
  const Formula& operand() const { return node_->subs[0]; }
  // exists
  const std::string& variable() const { return node_->name; }
  const Formula& body() const { return node_->subs[0]; }

  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    if (x.hash != y.hash || x.kind != y.kind || x.name != y.name || x.terms.size() != y.terms.size() ||
        x.subs.size() != y.subs.size())
      return false;
    for (std::size_t i = 0; i < x.terms.size(); ++i)
      if (x.terms[i] != y.terms[i]) return false;
    for (std::size_t i = 0; i < x.subs.size(); ++i)
      if (!(x.subs[i] == y.subs[i])) return false;
    return true;
  }
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Term> terms;
    std::vector<Formula> subs;
    std::size_t hash = 0;
  };
  static std::shared_ptr<Node> make(Kind k) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->hash = static_cast<std::size_t>(k) * 7919u + 17u;
    return n;
  }
  static std::shared_ptr<Node> finish(std::shared_ptr<Node> n) {
    std::size_t h = hash_combine(static_cast<std::size_t>(n->kind), std::hash<std::string>{}(n->name));
    for (const Term& t : n->terms) h = hash_combine(h, t.hash());
    for (const Formula& f : n->subs) h = hash_combine(h, f.hash());
    n->hash = h;
    return n;
  }
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// ---------------------------------------------------------------------------
// Variables

inline void collect_term_variables(const Term& t, std::vector<std::string>& out,
                                   std::set<std::string>& seen) {
  if (t.is_variable()) {
    if (seen.insert(t.name()).second) out.push_back(t.name());
    return;
  }
  for (const Term& a : t.args()) collect_term_variables(a, out, seen);
}

inline std::vector<std::string> term_variables(const Term& t) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect_term_variables(t, out, seen);
  return out;
}

inline bool occurs_in(const std::string& var, const Term& t) {
  if (t.is_variable()) return t.name() == var;
  for (const Term& a : t.args())
    if (occurs_in(var, a)) return true;
  return false;
}

namespace detail {

inline void free_vars(const Formula& f, std::vector<std::string>& bound, std::vector<std::string>& out,
                      std::set<std::string>& seen) {
  auto note_term = [&](const Term& t, auto&& self) -> void {
    if (t.is_variable()) {
      for (const std::string& b : bound)
        if (b == t.name()) return;
      if (seen.insert(t.name()).second) out.push_back(t.name());
      return;
    }
    for (const Term& a : t.args()) self(a, self);
  };
  switch (f.kind()) {
    case Formula::Kind::top:
    case Formula::Kind::bottom:
      return;
    case Formula::Kind::atom:
    case Formula::Kind::equal:
      for (const Term& t : f.terms()) note_term(t, note_term);
      return;
    case Formula::Kind::conj:
      free_vars(f.left(), bound, out, seen);
      free_vars(f.right(), bound, out, seen);
      return;
    case Formula::Kind::neg:
      free_vars(f.operand(), bound, out, seen);
      return;
    case Formula::Kind::exists:
      bound.push_back(f.variable());
      free_vars(f.body(), bound, out, seen);
      bound.pop_back();
      return;
  }
}

inline void all_vars(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::atom:
    case Formula::Kind::equal:
      for (const Term& t : f.terms())
        for (const std::string& v : term_variables(t)) out.insert(v);
      return;
    case Formula::Kind::conj:
      all_vars(f.left(), out);
      all_vars(f.right(), out);
      return;
    case Formula::Kind::neg:
      all_vars(f.operand(), out);
      return;
    case Formula::Kind::exists:
      out.insert(f.variable());
      all_vars(f.body(), out);
      return;
    default:
      return;
  }
}

}  // namespace detail

// Free variables in order of first occurrence.
inline std::vector<std::string> free_variables(const Formula& f) {
  std::vector<std::string> bound, out;
  std::set<std::string> seen;
  detail::free_vars(f, bound, out, seen);
  return out;
}

// Every variable name occurring in f, bound or free.
inline std::set<std::string> all_variables(const Formula& f) {
  std::set<std::string> out;
  detail::all_vars(f, out);
  return out;
}

inline bool is_closed(const Formula& f) { return free_variables(f).empty(); }

// Returns `base` if unused, otherwise base1, base2, ...
inline std::string fresh_variable(const std::string& base, const std::set<std::string>& used) {
  if (!used.count(base)) return base;
  std::string stem = base;
  while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
  if (stem.empty()) stem = "X";
  for (std::size_t i = 1;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (!used.count(candidate)) return candidate;
  }
}

// ---------------------------------------------------------------------------
// Substitutions

class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<const std::string, Term>> init) : map_(init) {}

  void bind(const std::string& var, Term t) { map_.insert_or_assign(var, std::move(t)); }
  const Term* lookup(const std::string& var) const {
    auto it = map_.find(var);
    return it == map_.end() ? nullptr : &it->second;
  }
  bool contains(const std::string& var) const { return map_.count(var) > 0; }
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  const std::map<std::string, Term>& bindings() const { return map_; }
  void erase(const std::string& var) { map_.erase(var); }

  Term apply(const Term& t) const {
    if (t.is_variable()) {
      const Term* r = lookup(t.name());
      return r ? *r : t;
    }
    if (t.args().empty()) return t;
    std::vector<Term> args;
    args.reserve(t.args().size());
    bool changed = false;
    for (const Term& a : t.args()) {
      args.push_back(apply(a));
      changed = changed || !args.back().same_node(a);
    }
    return changed ? Term::apply(t.name(), std::move(args)) : t;
  }

  // Applies repeatedly until no domain variable remains in any range term.
  // Requires the bindings to be acyclic.
  Substitution normalized() const {
    Substitution out;
    for (const auto& [v, t] : map_) out.map_.emplace(v, resolve(t, 0));
    for (auto it = out.map_.begin(); it != out.map_.end();) {
      if (it->second.is_variable() && it->second.name() == it->first)
        it = out.map_.erase(it);
      else
        ++it;
    }
    return out;
  }

  // (this ; other): first this, then other.
  Substitution compose(const Substitution& other) const {
    Substitution out;
    for (const auto& [v, t] : map_) out.map_.emplace(v, other.apply(t));
    for (const auto& [v, t] : other.map_) out.map_.try_emplace(v, t);
    return out.normalized();
  }

  Substitution restricted(const std::vector<std::string>& vars) const {
    Substitution out;
    for (const std::string& v : vars)
      if (const Term* t = lookup(v)) out.map_.emplace(v, *t);
    return out;
  }

  std::set<std::string> range_variables() const {
    std::set<std::string> out;
    for (const auto& [v, t] : map_)
      for (const std::string& x : term_variables(t)) out.insert(x);
    return out;
  }

  friend bool operator==(const Substitution& a, const Substitution& b) { return a.map_ == b.map_; }

 private:
  Term resolve(const Term& t, int depth) const {
    if (depth > 10000) throw std::logic_error("cyclic substitution");
    if (t.is_variable()) {
      const Term* r = lookup(t.name());
      if (!r || (r->is_variable() && r->name() == t.name())) return t;
      return resolve(*r, depth + 1);
    }
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args()) args.push_back(resolve(a, depth + 1));
    return Term::apply(t.name(), std::move(args));
  }

  std::map<std::string, Term> map_;
};

namespace detail {

inline Formula subst(const Formula& f, const Substitution& s, const std::set<std::string>& range_vars) {
  switch (f.kind()) {
    case Formula::Kind::top:
    case Formula::Kind::bottom:
      return f;
    case Formula::Kind::atom: {
      std::vector<Term> args;
      for (const Term& t : f.terms()) args.push_back(s.apply(t));
      return Formula::atom(f.predicate(), std::move(args));
    }
    case Formula::Kind::equal:
      return Formula::equal(s.apply(f.lhs()), s.apply(f.rhs()));
    case Formula::Kind::conj:
      return Formula::conj(subst(f.left(), s, range_vars), subst(f.right(), s, range_vars));
    case Formula::Kind::neg:
      return Formula::neg(subst(f.operand(), s, range_vars));
    case Formula::Kind::exists: {
      const std::string& x = f.variable();
      Substitution inner = s;
      inner.erase(x);
      if (inner.empty()) return f;
      if (!range_vars.count(x)) return Formula::exists(x, subst(f.body(), inner, range_vars));
      // Rename the binder so that it cannot capture a range variable.
      std::set<std::string> used = all_variables(f.body());
      used.insert(range_vars.begin(), range_vars.end());
      for (const auto& [v, t] : inner.bindings()) used.insert(v);
      std::string fresh = fresh_variable(x, used);
      inner.bind(x, Term::variable(fresh));
      std::set<std::string> extended = range_vars;
      extended.insert(fresh);
      return Formula::exists(fresh, subst(f.body(), inner, extended));
    }
  }
  return f;
}

}  // namespace detail

// Capture-avoiding substitution of free variables.
inline Formula apply_substitution(const Formula& f, const Substitution& s) {
  if (s.empty()) return f;
  return detail::subst(f, s, s.range_variables());
}

namespace detail {

inline Formula rename_binders(const Formula& f, std::set<std::string>& used, const Substitution& s) {
  switch (f.kind()) {
    case Formula::Kind::top:
    case Formula::Kind::bottom:
    case Formula::Kind::atom:
    case Formula::Kind::equal:
      return apply_substitution(f, s);
    case Formula::Kind::conj: {
      Formula l = rename_binders(f.left(), used, s);
      return Formula::conj(l, rename_binders(f.right(), used, s));
    }
    case Formula::Kind::neg:
      return Formula::neg(rename_binders(f.operand(), used, s));
    case Formula::Kind::exists: {
      std::string v = fresh_variable(f.variable(), used);
      used.insert(v);
      Substitution inner = s;
      if (v != f.variable())
        inner.bind(f.variable(), Term::variable(v));
      else
        inner.erase(v);
      return Formula::exists(v, rename_binders(f.body(), used, inner));
    }
  }
  return f;
}

}  // namespace detail

// Renames binders so that no variable is bound twice and no bound variable
// shares a name with a free one. Names in `avoid` are also kept clear.
inline Formula rename_bound_apart(const Formula& f, std::set<std::string> avoid = {}) {
  for (const std::string& v : free_variables(f)) avoid.insert(v);
  return detail::rename_binders(f, avoid, Substitution{});
}

// ---------------------------------------------------------------------------
// Questions

class Question {
 public:
  explicit Question(Formula body) : body_(std::move(body)), free_(free_variables(body_)) {}
  const Formula& body() const { return body_; }
  const std::vector<std::string>& variables() const { return free_; }
  bool operator==(const Question& o) const { return body_ == o.body_; }

 private:
  Formula body_;
  std::vector<std::string> free_;
};

// ---------------------------------------------------------------------------
// Alpha equivalence

namespace detail {

using BinderMap = std::vector<std::pair<std::string, std::string>>;

inline bool alpha_term(const Term& a, const Term& b, const BinderMap& m) {
  if (a.is_variable() != b.is_variable()) return false;
  if (a.is_variable()) {
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
      bool la = it->first == a.name();
      bool lb = it->second == b.name();
      if (la || lb) return la && lb;
    }
    return a.name() == b.name();
  }
  if (a.name() != b.name() || a.args().size() != b.args().size()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!alpha_term(a.args()[i], b.args()[i], m)) return false;
  return true;
}

inline bool alpha(const Formula& a, const Formula& b, BinderMap& m) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::top:
    case Formula::Kind::bottom:
      return true;
    case Formula::Kind::atom:
    case Formula::Kind::equal:
      if (a.predicate() != b.predicate() || a.terms().size() != b.terms().size()) return false;
      for (std::size_t i = 0; i < a.terms().size(); ++i)
        if (!alpha_term(a.terms()[i], b.terms()[i], m)) return false;
      return true;
    case Formula::Kind::conj:
      return alpha(a.left(), b.left(), m) && alpha(a.right(), b.right(), m);
    case Formula::Kind::neg:
      return alpha(a.operand(), b.operand(), m);
    case Formula::Kind::exists: {
      m.emplace_back(a.variable(), b.variable());
      bool ok = alpha(a.body(), b.body(), m);
      m.pop_back();
      return ok;
    }
  }
  return false;
}

}  // namespace detail

inline bool alpha_equivalent(const Formula& a, const Formula& b) {
  detail::BinderMap m;
  return detail::alpha(a, b, m);
}

// ---------------------------------------------------------------------------
// Symbol scans

namespace detail {

inline void term_symbols(const Term& t, std::map<std::string, int>& functions) {
  if (t.is_variable()) return;
  functions.emplace(t.name(), static_cast<int>(t.args().size()));
  for (const Term& a : t.args()) term_symbols(a, functions);
}

}  // namespace detail

struct SymbolUse {
  std::map<std::string, int> predicates;  // includes "=" when equality occurs
  std::map<std::string, int> functions;
};

inline void collect_symbols(const Formula& f, SymbolUse& use) {
  switch (f.kind()) {
    case Formula::Kind::atom:
    case Formula::Kind::equal:
      use.predicates.emplace(f.predicate(), static_cast<int>(f.terms().size()));
      for (const Term& t : f.terms()) detail::term_symbols(t, use.functions);
      return;
    case Formula::Kind::conj:
      collect_symbols(f.left(), use);
      collect_symbols(f.right(), use);
      return;
    case Formula::Kind::neg:
      collect_symbols(f.operand(), use);
      return;
    case Formula::Kind::exists:
      collect_symbols(f.body(), use);
      return;
    default:
      return;
  }
}

inline SymbolUse collect_symbols(std::span<const Formula> fs) {
  SymbolUse use;
  for (const Formula& f : fs) collect_symbols(f, use);
  return use;
}

inline bool term_is_rigid(const Term& t, const Signature& sig) {
  if (t.is_variable()) return true;
  if (!sig.is_rigid(t.name())) return false;
  for (const Term& a : t.args())
    if (!term_is_rigid(a, sig)) return false;
  return true;
}

// Number of connectives and quantifiers.
inline std::size_t formula_size(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::conj:
      return 1 + formula_size(f.left()) + formula_size(f.right());
    case Formula::Kind::neg:
      return 1 + formula_size(f.operand());
    case Formula::Kind::exists:
      return 1 + formula_size(f.body());
    default:
      return 0;
  }
}

// Splits nested conjunctions into their conjuncts (top stays a single item).
inline void flatten_conjunction(const Formula& f, std::vector<Formula>& out) {
  if (f.is(Formula::Kind::conj)) {
    flatten_conjunction(f.left(), out);
    flatten_conjunction(f.right(), out);
  } else {
    out.push_back(f);
  }
}

}  // namespace pqa

#endif  // PQA_SYNTAX_HPP_
