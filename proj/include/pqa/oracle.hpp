// Finite constant-domain modal structures and brute-force evaluation of
// partitions, question entailment and answerhood.
//
// Models are enumerated by (|W|, |D|), then by the interpretation digits:
// rigid function tables first (shared by all worlds), then world 0, world 1.
// Entailment search never needs more than two worlds: any countermodel
// (M, w, v) restricts to one over {w, v}. With two worlds the search reduces
// to grouping "world types" by their profile, which avoids the quadratic
// pair enumeration.

#ifndef PQA_ORACLE_HPP_
#define PQA_ORACLE_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "pqa/printer.hpp"
#include "pqa/syntax.hpp"

namespace pqa {

class OracleBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Vocabulary {
  struct Pred {
    std::string name;
    int arity;
  };
  struct Func {
    std::string name;
    int arity;
    bool rigid;
  };
  std::vector<Pred> predicates;
  std::vector<Func> functions;
  std::unordered_map<std::string, int> pred_index;
  std::unordered_map<std::string, int> func_index;

  void add_predicate(const std::string& name, int arity) {
    if (name == kEqualitySymbol || pred_index.count(name)) return;
    pred_index[name] = static_cast<int>(predicates.size());
    predicates.push_back({name, arity});
  }
  void add_function(const std::string& name, int arity, bool rigid) {
    if (func_index.count(name)) return;
    func_index[name] = static_cast<int>(functions.size());
    functions.push_back({name, arity, rigid});
  }

  // Every symbol occurring in `fs`, with rigidity taken from `sig`.
  static Vocabulary of(std::span<const Formula> fs, const Signature& sig) {
    SymbolUse use = collect_symbols(fs);
    Vocabulary v;
    for (const auto& [p, ar] : use.predicates) v.add_predicate(p, ar);
    for (const auto& [f, ar] : use.functions) v.add_function(f, ar, sig.is_rigid(f));
    return v;
  }
};

inline std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Interpretation of the world-dependent symbols at one world.
struct WorldInterp {
  std::vector<std::vector<std::uint8_t>> relations;  // per predicate, indexed by argument tuple
  std::vector<std::vector<int>> functions;           // per function; empty for rigid ones
};

struct ModalModel {
  std::shared_ptr<const Vocabulary> vocab;
  int domain_size = 1;
  std::vector<std::vector<int>> rigid;  // per function; empty for non-rigid ones
  std::vector<WorldInterp> worlds;

  int world_count() const { return static_cast<int>(worlds.size()); }

  const std::vector<int>& function_table(int world, int f) const {
    return vocab->functions[f].rigid ? rigid[f] : worlds[world].functions[f];
  }
};

// Variable assignment; later entries shadow earlier ones.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<std::string, int>> init) : slots_(init) {}
  void push(const std::string& var, int value) { slots_.emplace_back(var, value); }
  void pop() { slots_.pop_back(); }
  void set(const std::string& var, int value) {
    for (auto it = slots_.rbegin(); it != slots_.rend(); ++it)
      if (it->first == var) {
        it->second = value;
        return;
      }
    push(var, value);
  }
  std::optional<int> get(const std::string& var) const {
    for (auto it = slots_.rbegin(); it != slots_.rend(); ++it)
      if (it->first == var) return it->second;
    return std::nullopt;
  }

 private:
  std::vector<std::pair<std::string, int>> slots_;
};

class Evaluator {
 public:
  Evaluator(const ModalModel& m, int world) : m_(m), w_(world) {}

  int term(const Term& t, const Assignment& g) const {
    if (t.is_variable()) {
      auto v = g.get(t.name());
      if (!v) throw std::invalid_argument("unassigned variable " + t.name());
      return *v;
    }
    auto it = m_.vocab->func_index.find(t.name());
    if (it == m_.vocab->func_index.end()) throw std::invalid_argument("uninterpreted function " + t.name());
    std::size_t idx = 0;
    for (const Term& a : t.args()) idx = idx * m_.domain_size + term(a, g);
    return m_.function_table(w_, it->second)[idx];
  }

  bool formula(const Formula& f, Assignment& g) const {
    switch (f.kind()) {
      case Formula::Kind::top:
        return true;
      case Formula::Kind::bottom:
        return false;
      case Formula::Kind::atom: {
        auto it = m_.vocab->pred_index.find(f.predicate());
        if (it == m_.vocab->pred_index.end())
          throw std::invalid_argument("uninterpreted predicate " + f.predicate());
        std::size_t idx = 0;
        for (const Term& a : f.terms()) idx = idx * m_.domain_size + term(a, g);
        return m_.worlds[w_].relations[it->second][idx] != 0;
      }
      case Formula::Kind::equal:
        return term(f.lhs(), g) == term(f.rhs(), g);
      case Formula::Kind::conj:
        return formula(f.left(), g) && formula(f.right(), g);
      case Formula::Kind::neg:
        return !formula(f.operand(), g);
      case Formula::Kind::exists: {
        bool result = false;
        g.push(f.variable(), 0);
        for (int d = 0; d < m_.domain_size && !result; ++d) {
          g.set(f.variable(), d);
          result = formula(f.body(), g);
        }
        g.pop();
        return result;
      }
    }
    return false;
  }

 private:
  const ModalModel& m_;
  int w_;
};

inline bool evaluate(const ModalModel& m, int world, const Assignment& g, const Formula& f) {
  Assignment local = g;
  return Evaluator(m, world).formula(f, local);
}

// Truth values of f at `world` under every assignment to `vars`, in
// lexicographic order of the assignment.
inline std::vector<bool> extension(const ModalModel& m, int world, const Formula& f,
                                   const std::vector<std::string>& vars) {
  std::size_t n = ipow(m.domain_size, static_cast<int>(vars.size()));
  std::vector<bool> out(n);
  Evaluator ev(m, world);
  Assignment g;
  for (const std::string& v : vars) g.push(v, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rest = i;
    for (std::size_t k = vars.size(); k-- > 0;) {
      g.set(vars[k], static_cast<int>(rest % m.domain_size));
      rest /= m.domain_size;
    }
    out[i] = ev.formula(f, g);
  }
  return out;
}

// w and v lie in the same block of the partition induced by q.
inline bool partition_equivalent(const ModalModel& m, int w, int v, const Question& q) {
  return extension(m, w, q.body(), q.variables()) == extension(m, v, q.body(), q.variables());
}

inline bool partition_equivalent(const ModalModel& m, int w, int v, std::span<const Question> qs) {
  for (const Question& q : qs)
    if (!partition_equivalent(m, w, v, q)) return false;
  return true;
}

inline std::string describe(const ModalModel& m) {
  std::ostringstream os;
  auto tuple = [&](std::size_t idx, int arity) {
    std::vector<int> digits(arity);
    for (int k = arity; k-- > 0;) {
      digits[k] = static_cast<int>(idx % m.domain_size);
      idx /= m.domain_size;
    }
    std::string s;
    for (int k = 0; k < arity; ++k) s += (k ? "," : "") + std::string("d") + std::to_string(digits[k]);
    return s;
  };
  auto print_function = [&](const Vocabulary::Func& f, const std::vector<int>& table) {
    for (std::size_t i = 0; i < table.size(); ++i) {
      os << "  " << f.name;
      if (f.arity) os << "(" << tuple(i, f.arity) << ")";
      os << " = d" << table[i] << "\n";
    }
  };
  os << "domain: {";
  for (int d = 0; d < m.domain_size; ++d) os << (d ? ", " : "") << "d" << d;
  os << "}\n";
  for (std::size_t f = 0; f < m.vocab->functions.size(); ++f)
    if (m.vocab->functions[f].rigid) print_function(m.vocab->functions[f], m.rigid[f]);
  for (int w = 0; w < m.world_count(); ++w) {
    os << "world w" << w << ":\n";
    for (std::size_t p = 0; p < m.vocab->predicates.size(); ++p) {
      const auto& pred = m.vocab->predicates[p];
      const auto& rel = m.worlds[w].relations[p];
      os << "  " << pred.name << " = {";
      bool first = true;
      for (std::size_t i = 0; i < rel.size(); ++i)
        if (rel[i]) {
          os << (first ? "" : ", ") << (pred.arity ? "(" + tuple(i, pred.arity) + ")" : "()");
          first = false;
        }
      os << "}\n";
    }
    for (std::size_t f = 0; f < m.vocab->functions.size(); ++f)
      if (!m.vocab->functions[f].rigid) print_function(m.vocab->functions[f], m.worlds[w].functions[f]);
  }
  return os.str();
}

// Mixed-radix enumeration of interpretations over a fixed domain size.
class InterpretationSpace {
 public:
  InterpretationSpace(std::shared_ptr<const Vocabulary> vocab, int domain_size, std::uint64_t limit)
      : vocab_(std::move(vocab)), nd_(domain_size) {
    rigid_count_ = 1;
    type_count_ = 1;
    for (const auto& f : vocab_->functions) {
      std::size_t cells = ipow(nd_, f.arity);
      std::uint64_t& count = f.rigid ? rigid_count_ : type_count_;
      for (std::size_t i = 0; i < cells; ++i) count = checked_mul(count, nd_, limit);
    }
    for (const auto& p : vocab_->predicates) {
      std::size_t cells = ipow(nd_, p.arity);
      for (std::size_t i = 0; i < cells; ++i) type_count_ = checked_mul(type_count_, 2, limit);
    }
    checked_mul(rigid_count_, type_count_, limit);
  }

  std::uint64_t rigid_count() const { return rigid_count_; }
  std::uint64_t type_count() const { return type_count_; }

  // Decodes index `r` into the rigid tables. The last cell varies fastest.
  std::vector<std::vector<int>> rigid(std::uint64_t r) const {
    std::vector<std::vector<int>> tables(vocab_->functions.size());
    for (std::size_t f = vocab_->functions.size(); f-- > 0;) {
      if (!vocab_->functions[f].rigid) continue;
      tables[f].resize(ipow(nd_, vocab_->functions[f].arity));
      for (std::size_t c = tables[f].size(); c-- > 0;) {
        tables[f][c] = static_cast<int>(r % nd_);
        r /= nd_;
      }
    }
    return tables;
  }

  // Decodes a world type: function tables first, then predicate bits.
  WorldInterp world(std::uint64_t t) const {
    WorldInterp w;
    w.relations.resize(vocab_->predicates.size());
    w.functions.resize(vocab_->functions.size());
    for (std::size_t p = vocab_->predicates.size(); p-- > 0;) {
      w.relations[p].resize(ipow(nd_, vocab_->predicates[p].arity));
      for (std::size_t c = w.relations[p].size(); c-- > 0;) {
        w.relations[p][c] = static_cast<std::uint8_t>(t % 2);
        t /= 2;
      }
    }
    for (std::size_t f = vocab_->functions.size(); f-- > 0;) {
      if (vocab_->functions[f].rigid) continue;
      w.functions[f].resize(ipow(nd_, vocab_->functions[f].arity));
      for (std::size_t c = w.functions[f].size(); c-- > 0;) {
        w.functions[f][c] = static_cast<int>(t % nd_);
        t /= nd_;
      }
    }
    return w;
  }

  ModalModel model(std::uint64_t r, const std::vector<std::uint64_t>& types) const {
    ModalModel m;
    m.vocab = vocab_;
    m.domain_size = nd_;
    m.rigid = rigid(r);
    for (std::uint64_t t : types) m.worlds.push_back(world(t));
    return m;
  }

 private:
  static std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t limit) {
    if (b != 0 && a > limit / b) throw OracleBoundError("model space exceeds the enumeration limit");
    return a * b;
  }

  std::shared_ptr<const Vocabulary> vocab_;
  int nd_;
  std::uint64_t rigid_count_;
  std::uint64_t type_count_;
};

struct OracleBounds {
  int max_worlds = 2;
  int max_domain = 3;
  int min_domain = 1;
  std::uint64_t max_models = 1ull << 26;  // per domain size, rigid x world types
  int jobs = 1;
};

struct Countermodel {
  ModalModel model;
  int w = 0;
  int v = 0;
};

namespace detail {

// Runs body(i) for i in [0, n) on `jobs` threads.
template <typename F>
void parallel_for(std::uint64_t n, int jobs, F&& body) {
  if (jobs <= 1 || n < 64) {
    for (std::uint64_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> threads;
  std::atomic<std::uint64_t> next{0};
  for (int j = 0; j < jobs; ++j)
    threads.emplace_back([&] {
      for (std::uint64_t i; (i = next.fetch_add(1)) < n;) body(i);
    });
  for (auto& t : threads) t.join();
}

inline void append_bits(std::string& key, const std::vector<bool>& bits) {
  for (bool b : bits) key += b ? '1' : '0';
  key += '|';
}

}  // namespace detail

// Searches for M, w, v with chi true at every world, w and v equivalent under
// every question in phi, but not under psi. Returns the first such model in
// enumeration order.
inline std::optional<Countermodel> entails_bounded(std::span<const Question> phi, const Formula& chi,
                                                   const Question& psi, const Signature& sig,
                                                   const OracleBounds& bounds = {}) {
  if (!is_closed(chi)) throw std::invalid_argument("context must be closed");
  if (bounds.max_worlds < 2) return std::nullopt;
  std::vector<Formula> all{chi, psi.body()};
  for (const Question& q : phi) all.push_back(q.body());
  auto vocab = std::make_shared<const Vocabulary>(Vocabulary::of(all, sig));

  for (int nd = std::max(1, bounds.min_domain); nd <= bounds.max_domain; ++nd) {
    InterpretationSpace space(vocab, nd, bounds.max_models);
    std::uint64_t types = space.type_count();
    for (std::uint64_t r = 0; r < space.rigid_count(); ++r) {
      std::vector<std::string> phi_key(types), psi_key(types);
      std::vector<std::uint8_t> chi_ok(types);
      detail::parallel_for(types, bounds.jobs, [&](std::uint64_t t) {
        ModalModel m = space.model(r, {t});
        Assignment g;
        chi_ok[t] = Evaluator(m, 0).formula(chi, g);
        if (!chi_ok[t]) return;
        std::string key;
        for (const Question& q : phi) detail::append_bits(key, extension(m, 0, q.body(), q.variables()));
        phi_key[t] = std::move(key);
        std::string pk;
        detail::append_bits(pk, extension(m, 0, psi.body(), psi.variables()));
        psi_key[t] = std::move(pk);
      });
      // Per phi-block: smallest type for each distinct psi extension.
      std::unordered_map<std::string, std::map<std::string, std::uint64_t>> blocks;
      for (std::uint64_t t = 0; t < types; ++t)
        if (chi_ok[t]) blocks[phi_key[t]].try_emplace(psi_key[t], t);
      for (std::uint64_t t0 = 0; t0 < types; ++t0) {
        if (!chi_ok[t0]) continue;
        const auto& block = blocks[phi_key[t0]];
        if (block.size() < 2) continue;
        std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
        for (const auto& [k, t1] : block)
          if (k != psi_key[t0]) best = std::min(best, t1);
        return Countermodel{space.model(r, {t0, best}), 0, 1};
      }
    }
  }
  return std::nullopt;
}

inline std::optional<Countermodel> is_answer_bounded(const Formula& psi, std::span<const Question> phi,
                                                     const Signature& sig, const OracleBounds& bounds = {}) {
  if (!is_closed(psi)) throw std::invalid_argument("answer must be closed");
  return entails_bounded(phi, Formula::top(), Question(psi), sig, bounds);
}

// Classical countermodel: a single world where every premise holds and the
// conclusion fails.
inline std::optional<ModalModel> classical_countermodel(std::span<const Formula> premises, const Formula& conclusion,
                                                        const Signature& sig, int max_domain = 3,
                                                        std::uint64_t max_models = 1ull << 26, int jobs = 1) {
  std::vector<Formula> all(premises.begin(), premises.end());
  all.push_back(conclusion);
  for (const Formula& f : all)
    if (!is_closed(f)) throw std::invalid_argument("sequent formulas must be closed");
  auto vocab = std::make_shared<const Vocabulary>(Vocabulary::of(all, sig));
  for (int nd = 1; nd <= max_domain; ++nd) {
    InterpretationSpace space(vocab, nd, max_models);
    for (std::uint64_t r = 0; r < space.rigid_count(); ++r) {
      std::uint64_t types = space.type_count();
      std::vector<std::uint8_t> hit(types);
      detail::parallel_for(types, jobs, [&](std::uint64_t t) {
        ModalModel m = space.model(r, {t});
        Evaluator ev(m, 0);
        Assignment g;
        if (ev.formula(conclusion, g)) return;
        for (const Formula& p : premises)
          if (!ev.formula(p, g)) return;
        hit[t] = 1;
      });
      for (std::uint64_t t = 0; t < types; ++t)
        if (hit[t]) return space.model(r, {t});
    }
  }
  return std::nullopt;
}

}  // namespace pqa

#endif  // PQA_ORACLE_HPP_
