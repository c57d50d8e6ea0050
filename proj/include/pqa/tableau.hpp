// Free-variable tableau over the core connectives.
//
//   alpha   A & B       -> A, B
//   beta    ~(A & B)    -> ~A | ~B
//   gamma   ~exists X.A -> ~A[X := fresh]   (at most gamma_limit times per occurrence)
//   double  ~~A         -> A
//
// The tree is an arena of occurrences. Leaves carry an agenda of pending
// occurrences; expansion is driven lazily by the closure search, so the tree
// is only grown where the search looks. Expansion never depends on bindings,
// so the tree is the same whichever order the search visits it in.

#ifndef PQA_TABLEAU_HPP_
#define PQA_TABLEAU_HPP_

#include <pthread.h>

#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pqa/printer.hpp"
#include "pqa/syntax.hpp"
#include "pqa/unify.hpp"

namespace pqa {

enum class Provenance { theory, expansion, instance };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::theory:
      return "theory";
    case Provenance::expansion:
      return "expansion";
    case Provenance::instance:
      return "instance";
  }
  return "?";
}

class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(long long ms) {
    if (ms > 0) end_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
  }
  bool expired() const { return end_ && std::chrono::steady_clock::now() >= *end_; }
  long long remaining_ms() const {
    if (!end_) return -1;
    auto d = std::chrono::duration_cast<std::chrono::milliseconds>(*end_ - std::chrono::steady_clock::now());
    return std::max<long long>(0, d.count());
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
};

struct TableauLimits {
  int gamma_limit = 1;
  std::size_t max_nodes = 60000;
  std::size_t max_branches = 20000;
};

class Tableau {
 public:
  enum class Rule { none, alpha, beta, gamma, double_negation, closes, trivial };

  struct Node {
    Formula formula;
    int parent = -1;
    std::vector<int> children;
    Provenance provenance = Provenance::theory;
    int instance = -1;  // index into instances() for added instances
    bool expanded = false;
    int agenda = -1;
  };

  struct Instance {
    Formula literal = Formula::top();
    std::vector<std::string> variables;
    bool positive = true;
  };

  static Rule classify(const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::top:
        return Rule::trivial;
      case K::bottom:
        return Rule::closes;
      case K::atom:
      case K::equal:
        return Rule::none;
      case K::conj:
        return Rule::alpha;
      case K::exists:
        throw std::logic_error("existential in positive position; the theory must be Skolemized");
      case K::neg: {
        const Formula& g = f.operand();
        switch (g.kind()) {
          case K::top:
            return Rule::closes;
          case K::bottom:
            return Rule::trivial;
          case K::atom:
          case K::equal:
            return Rule::none;
          case K::conj:
            return Rule::beta;
          case K::neg:
            return Rule::double_negation;
          case K::exists:
            return Rule::gamma;
        }
      }
    }
    return Rule::none;
  }

  explicit Tableau(std::span<const Formula> theory, TableauLimits limits = {}) : limits_(limits) {
    nodes_.push_back(Node{Formula::top(), -1, {}, Provenance::theory});
    agendas_.emplace_back();
    nodes_[0].agenda = 0;
    leaves_ = 1;
    int leaf = 0;
    for (const Formula& f : theory) leaf = append(leaf, f, Provenance::theory);
  }

  const Node& node(int id) const { return nodes_[id]; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<Instance>& instances() const { return instances_; }
  const std::vector<std::string>& variables() const { return variables_; }
  bool limit_hit() const { return limit_hit_; }
  bool truncated() const { return truncated_; }
  std::size_t leaf_count() const { return leaves_; }
  const TableauLimits& limits() const { return limits_; }

  std::string fresh_variable() {
    std::string v = "_" + std::to_string(variables_.size());
    variables_.push_back(v);
    return v;
  }

  // Adds pred(Y1..Yn) or its negation, with fresh Y, to the end of every branch.
  int add_instance(const std::string& predicate, int arity, bool positive) {
    Instance inst;
    std::vector<Term> args;
    for (int i = 0; i < arity; ++i) {
      inst.variables.push_back(fresh_variable());
      args.push_back(Term::variable(inst.variables.back()));
    }
    Formula atom = predicate == kEqualitySymbol && arity == 2 ? Formula::equal(args[0], args[1])
                                                               : Formula::atom(predicate, std::move(args));
    inst.literal = positive ? atom : Formula::neg(atom);
    inst.positive = positive;
    int index = static_cast<int>(instances_.size());
    instances_.push_back(inst);
    for (int leaf : leaves())
      nodes_[append(leaf, inst.literal, Provenance::instance)].instance = index;
    return index;
  }

  std::vector<int> leaves() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i].children.empty()) out.push_back(static_cast<int>(i));
    return out;
  }

  // Children of `id`, expanding the leaf by its next agenda item on first use.
  const std::vector<int>& children(int id, bool grow = true) {
    if (grow && !nodes_[id].expanded && nodes_[id].children.empty()) expand_next(id);
    return nodes_[id].children;
  }

  // Applies the rule of occurrence `occ` at `leaf` directly, bypassing the
  // agenda. Returns false if the formula has no rule.
  bool expand(int leaf, int occ) {
    if (!nodes_[leaf].children.empty()) throw std::invalid_argument("not a leaf");
    if (!on_branch(leaf, occ)) throw std::invalid_argument("occurrence not on this branch");
    Agenda ag = take_agenda(leaf);
    if (apply(leaf, occ, ag, 0)) return true;
    nodes_[leaf].agenda = store_agenda(std::move(ag));
    return false;
  }

  // Expands every branch until all agendas are exhausted or a limit is hit.
  void saturate() {
    for (std::size_t i = 0; i < nodes_.size() && !truncated_; ++i) children(static_cast<int>(i));
  }

  bool on_branch(int leaf, int occ) const {
    for (int n = leaf; n >= 0; n = nodes_[n].parent)
      if (n == occ) return true;
    return false;
  }

  std::vector<int> branch(int leaf) const {
    std::vector<int> out;
    for (int n = leaf; n >= 0; n = nodes_[n].parent) out.push_back(n);
    std::reverse(out.begin(), out.end());
    return out;
  }

  // One line per occurrence: id, branch path, formula, provenance.
  std::string dump() const {
    std::string out;
    std::function<void(int, const std::string&, int)> walk = [&](int id, const std::string& path, int indent) {
      const Node& n = nodes_[id];
      if (id != 0) {
        out += std::string(2 * indent, ' ') + "[" + std::to_string(id) + "] " + (path.empty() ? "." : path) + "  " +
               pqa::to_string(n.formula) + "  (" + to_string(n.provenance) + ")\n";
      }
      if (n.children.size() == 1) {
        walk(n.children[0], path, indent);
      } else {
        for (std::size_t i = 0; i < n.children.size(); ++i)
          walk(n.children[i], path + (path.empty() ? "" : ".") + std::to_string(i), indent + 1);
      }
    };
    walk(0, "", 0);
    return out;
  }

 private:
  struct Agenda {
    std::deque<int> cheap;
    std::deque<std::pair<int, int>> costly;  // occurrence, gamma uses so far
    std::deque<std::pair<int, int>> reuse;   // further gamma instances, after everything else
  };

  Agenda take_agenda(int id) {
    Node& n = nodes_[id];
    Agenda ag;
    if (n.agenda >= 0) {
      ag = std::move(agendas_[n.agenda]);
      agendas_[n.agenda] = Agenda{};
      free_agendas_.push_back(n.agenda);
      n.agenda = -1;
    }
    return ag;
  }

  int store_agenda(Agenda ag) {
    if (!free_agendas_.empty()) {
      int slot = free_agendas_.back();
      free_agendas_.pop_back();
      agendas_[slot] = std::move(ag);
      return slot;
    }
    agendas_.push_back(std::move(ag));
    return static_cast<int>(agendas_.size() - 1);
  }

  static void enqueue(Agenda& ag, int id, const Formula& f) {
    switch (classify(f)) {
      case Rule::alpha:
      case Rule::double_negation:
        ag.cheap.push_back(id);
        break;
      case Rule::beta:
      case Rule::gamma:
        ag.costly.emplace_back(id, 0);
        break;
      default:
        break;
    }
  }

  int new_node(int parent, const Formula& f, Provenance prov) {
    if (nodes_.size() >= limits_.max_nodes) {
      truncated_ = true;
      return -1;
    }
    (void)classify(f);
    nodes_.push_back(Node{f, parent, {}, prov});
    int id = static_cast<int>(nodes_.size() - 1);
    nodes_[parent].children.push_back(id);
    nodes_[parent].expanded = true;
    return id;
  }

  // Appends f below the leaf, passing the leaf's agenda down.
  int append(int leaf, const Formula& f, Provenance prov) {
    Agenda ag = take_agenda(leaf);
    int id = new_node(leaf, f, prov);
    if (id < 0) throw std::length_error("tableau node limit exceeded");
    enqueue(ag, id, f);
    nodes_[id].agenda = store_agenda(std::move(ag));
    return id;
  }

  void expand_next(int leaf) {
    Agenda ag = take_agenda(leaf);
    while (!truncated_) {
      if (!ag.cheap.empty()) {
        int occ = ag.cheap.front();
        ag.cheap.pop_front();
        if (apply(leaf, occ, ag, 0)) return;
        continue;
      }
      auto& q = ag.costly.empty() ? ag.reuse : ag.costly;
      if (q.empty()) break;
      auto [occ, uses] = q.front();
      q.pop_front();
      if (apply(leaf, occ, ag, uses)) return;
    }
    nodes_[leaf].expanded = true;  // saturated (or truncated): an open leaf
  }

  // Applies the rule for `occ` below `leaf` with remaining agenda `ag`.
  bool apply(int leaf, int occ, Agenda& ag, int uses) {
    Formula f = nodes_[occ].formula;
    switch (classify(f)) {
      case Rule::alpha: {
        int a = new_node(leaf, f.left(), Provenance::expansion);
        if (a < 0) return false;
        int b = new_node(a, f.right(), Provenance::expansion);
        if (b < 0) return false;
        enqueue(ag, a, f.left());
        enqueue(ag, b, f.right());
        nodes_[b].agenda = store_agenda(std::move(ag));
        return true;
      }
      case Rule::double_negation: {
        const Formula& g = f.operand().operand();
        int a = new_node(leaf, g, Provenance::expansion);
        if (a < 0) return false;
        enqueue(ag, a, g);
        nodes_[a].agenda = store_agenda(std::move(ag));
        return true;
      }
      case Rule::beta: {
        if (leaves_ + 1 > limits_.max_branches) {
          truncated_ = true;
          return false;
        }
        Formula l = Formula::neg(f.operand().left());
        Formula r = Formula::neg(f.operand().right());
        int a = new_node(leaf, l, Provenance::expansion);
        if (a < 0) return false;
        int b = new_node(leaf, r, Provenance::expansion);
        if (b < 0) return false;
        ++leaves_;
        Agenda ag2 = ag;
        enqueue(ag, a, l);
        enqueue(ag2, b, r);
        nodes_[a].agenda = store_agenda(std::move(ag));
        nodes_[b].agenda = store_agenda(std::move(ag2));
        return true;
      }
      case Rule::gamma: {
        if (uses >= limits_.gamma_limit) {
          limit_hit_ = true;
          return false;
        }
        const Formula& ex = f.operand();
        Substitution s;
        s.bind(ex.variable(), Term::variable(fresh_variable()));
        Formula inst = Formula::neg(apply_substitution(ex.body(), s));
        int a = new_node(leaf, inst, Provenance::expansion);
        if (a < 0) return false;
        enqueue(ag, a, inst);
        if (uses + 1 < limits_.gamma_limit)
          ag.reuse.emplace_back(occ, uses + 1);
        else
          limit_hit_ = true;
        nodes_[a].agenda = store_agenda(std::move(ag));
        return true;
      }
      default:
        return false;
    }
  }

  TableauLimits limits_;
  std::vector<Node> nodes_;
  std::vector<Agenda> agendas_;
  std::vector<int> free_agendas_;
  std::vector<Instance> instances_;
  std::vector<std::string> variables_;
  std::size_t leaves_ = 0;
  bool limit_hit_ = false;
  bool truncated_ = false;
};

struct Closure {
  Substitution sigma;
  std::vector<int> kappa;  // sorted occurrence ids
  bool operator==(const Closure& o) const { return sigma == o.sigma && kappa == o.kappa; }
};

// A closure seen through the added instances only.
struct ClosureKey {
  std::vector<int> instances;  // sorted instance indices
  Substitution sigma;          // restricted to instance variables
  bool operator==(const ClosureKey& o) const { return instances == o.instances && sigma == o.sigma; }
};

// c1 dominates c2 when it uses no more instances and binds them more generally.
inline bool dominates(const ClosureKey& c1, const ClosureKey& c2, const std::vector<std::string>& vars) {
  return std::includes(c2.instances.begin(), c2.instances.end(), c1.instances.begin(), c1.instances.end()) &&
         more_general(c1.sigma, c2.sigma, vars);
}

struct SearchOptions {
  enum class Mode { first, all_keys, all_closures };
  Mode mode = Mode::first;
  bool grow = true;       // expand leaves lazily; otherwise use the tree as it is
  bool cut = true;        // commit to closes that bind nothing and use no new instance
  std::size_t max_results = 256;
  std::size_t max_steps = 5'000'000;
  Deadline deadline;
};

struct SearchResult {
  std::vector<Closure> closures;
  std::vector<ClosureKey> keys;
  bool truncated = false;  // stopped by a budget before the space was exhausted
  std::size_t steps = 0;
};

namespace detail {

// Runs fn on a thread with a large stack; the closure search recurses once per
// visited occurrence.
inline void run_with_large_stack(const std::function<void()>& fn, std::size_t bytes = std::size_t{1} << 30) {
  struct Payload {
    const std::function<void()>* fn;
    std::exception_ptr error;
  } payload{&fn, nullptr};
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, bytes);
  pthread_t thread;
  auto entry = [](void* p) -> void* {
    auto* pl = static_cast<Payload*>(p);
    try {
      (*pl->fn)();
    } catch (...) {
      pl->error = std::current_exception();
    }
    return nullptr;
  };
  if (pthread_create(&thread, &attr, entry, &payload) != 0) {
    pthread_attr_destroy(&attr);
    fn();
    return;
  }
  pthread_join(thread, nullptr);
  pthread_attr_destroy(&attr);
  if (payload.error) std::rethrow_exception(payload.error);
}

}  // namespace detail

// Depth-first search for closures of the whole tableau. Each branch is closed
// by a complementary pair whose lower member is the occurrence being visited,
// or by a lone `false`.
class ClosureSearch {
 public:
  ClosureSearch(Tableau& t, SearchOptions options) : t_(t), opt_(std::move(options)) {
    for (const auto& inst : t_.instances())
      instance_vars_.insert(instance_vars_.end(), inst.variables.begin(), inst.variables.end());
    inst_count_.assign(t_.instances().size(), 0);
  }

  // Iterative deepening on the number of branchings passed on one branch;
  // results accumulate across rounds.
  SearchResult run() {
    detail::run_with_large_stack([this] {
      for (depth_limit_ = 2;; depth_limit_ *= 2) {
        depth_hit_ = false;
        std::vector<std::pair<int, int>> goals{{0, 0}};
        solve(goals);
        if (done_ || aborted_ || !depth_hit_) break;
      }
    });
    if (opt_.mode == SearchOptions::Mode::all_closures) filter_most_general();
    result_.steps = steps_;
    return std::move(result_);
  }

 private:
  bool stop() {
    if (done_ || aborted_) return true;
    if (++steps_ > opt_.max_steps || ((steps_ & 1023) == 0 && opt_.deadline.expired()) || t_.truncated()) {
      aborted_ = true;
      result_.truncated = true;
    }
    return aborted_;
  }

  static bool complementary(const Formula& a, const Formula& b) {
    bool na = a.is(Formula::Kind::neg);
    bool nb = b.is(Formula::Kind::neg);
    if (na == nb) return false;
    const Formula& x = na ? a.operand() : a;
    const Formula& y = nb ? b.operand() : b;
    return x.is_atomic() && y.is_atomic() && x.kind() == y.kind() && x.predicate() == y.predicate() &&
           x.terms().size() == y.terms().size();
  }

  static const Formula& atom_of(const Formula& f) { return f.is(Formula::Kind::neg) ? f.operand() : f; }

  void push_occurrence(int id) {
    kappa_.push_back(id);
    int inst = t_.node(id).instance;
    if (inst >= 0) ++inst_count_[inst];
  }
  void pop_occurrence() {
    int inst = t_.node(kappa_.back()).instance;
    if (inst >= 0) --inst_count_[inst];
    kappa_.pop_back();
  }

  ClosureKey current_key() const {
    ClosureKey k;
    for (std::size_t i = 0; i < inst_count_.size(); ++i)
      if (inst_count_[i] > 0) k.instances.push_back(static_cast<int>(i));
    k.sigma = b_.snapshot(instance_vars_);
    return k;
  }

  bool dominated(const ClosureKey& k) const {
    for (const ClosureKey& found : result_.keys)
      if (dominates(found, k, instance_vars_)) return true;
    return false;
  }

  void record() {
    switch (opt_.mode) {
      case SearchOptions::Mode::first: {
        Closure c{b_.snapshot(t_.variables()), sorted_kappa()};
        result_.closures.push_back(std::move(c));
        result_.keys.push_back(current_key());
        done_ = true;
        return;
      }
      case SearchOptions::Mode::all_keys: {
        ClosureKey k = current_key();
        if (dominated(k)) return;
        std::erase_if(result_.keys, [&](const ClosureKey& old) { return dominates(k, old, instance_vars_); });
        result_.keys.push_back(std::move(k));
        break;
      }
      case SearchOptions::Mode::all_closures: {
        Closure c{b_.snapshot(t_.variables()), sorted_kappa()};
        if (std::find(result_.closures.begin(), result_.closures.end(), c) == result_.closures.end())
          result_.closures.push_back(std::move(c));
        break;
      }
    }
    if (result_.keys.size() + result_.closures.size() >= opt_.max_results) {
      aborted_ = true;
      result_.truncated = true;
    }
  }

  std::vector<int> sorted_kappa() const {
    std::vector<int> k = kappa_;
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());
    return k;
  }

  void solve(std::vector<std::pair<int, int>>& goals) {
    if (stop()) return;
    if (goals.empty()) {
      record();
      return;
    }
    auto [n, depth] = goals.back();
    goals.pop_back();
    const Formula f = t_.node(n).formula;
    Tableau::Rule rule = Tableau::classify(f);
    bool cut = false;
    if (rule == Tableau::Rule::closes) {
      push_occurrence(n);
      solve(goals);
      pop_occurrence();
      cut = true;
    } else if (rule == Tableau::Rule::none) {
      for (int m = t_.node(n).parent; m >= 0 && !done_ && !aborted_; m = t_.node(m).parent) {
        const Formula& g = t_.node(m).formula;
        if (!complementary(f, g)) continue;
        std::size_t mark = b_.mark();
        if (b_.unify_atoms(atom_of(f), atom_of(g))) {
          bool binds = b_.mark() != mark;
          int in = t_.node(n).instance, im = t_.node(m).instance;
          bool new_instance = (in >= 0 && inst_count_[in] == 0) || (im >= 0 && inst_count_[im] == 0);
          push_occurrence(n);
          push_occurrence(m);
          bool prune = opt_.mode == SearchOptions::Mode::all_keys && dominated(current_key());
          if (!prune) solve(goals);
          pop_occurrence();
          pop_occurrence();
          b_.undo(mark);
          if (opt_.cut && !binds && !new_instance) {
            cut = true;
            break;
          }
        } else {
          b_.undo(mark);
        }
      }
    }
    if (!cut && !done_ && !aborted_) {
      std::vector<int> kids = t_.children(n, opt_.grow);
      int d = depth + (kids.size() > 1 ? 1 : 0);
      if (d > depth_limit_) {
        depth_hit_ = true;
      } else if (!kids.empty()) {
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) goals.emplace_back(*it, d);
        solve(goals);
        goals.resize(goals.size() - kids.size());
      }
    }
    goals.emplace_back(n, depth);
  }

  // Keeps closures with no strictly more general closure (by substitution
  // generality and occurrence-set inclusion).
  void filter_most_general() {
    auto& cs = result_.closures;
    const auto& vars = t_.variables();
    auto geq = [&](const Closure& a, const Closure& b) {
      return std::includes(b.kappa.begin(), b.kappa.end(), a.kappa.begin(), a.kappa.end()) &&
             more_general(a.sigma, b.sigma, vars);
    };
    std::vector<Closure> kept;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      bool beaten = false;
      for (std::size_t j = 0; j < cs.size() && !beaten; ++j) {
        if (i == j || !geq(cs[j], cs[i])) continue;
        beaten = !geq(cs[i], cs[j]) || j < i;
      }
      if (!beaten) kept.push_back(cs[i]);
    }
    cs = std::move(kept);
  }

  Tableau& t_;
  SearchOptions opt_;
  Bindings b_;
  std::vector<int> kappa_;
  std::vector<int> inst_count_;
  std::vector<std::string> instance_vars_;
  SearchResult result_;
  std::size_t steps_ = 0;
  int depth_limit_ = 0;
  bool depth_hit_ = false;
  bool done_ = false;
  bool aborted_ = false;
};

// Every most general closure of the tableau as it stands, without expansion.
inline std::vector<Closure> find_most_general_closures(Tableau& t, std::size_t max_results = 4096) {
  SearchOptions opt;
  opt.mode = SearchOptions::Mode::all_closures;
  opt.grow = false;
  opt.cut = false;
  opt.max_results = max_results;
  return ClosureSearch(t, opt).run().closures;
}

// True if, after applying sigma, every branch restricted to kappa holds a
// complementary pair (or a lone false).
inline bool is_closure(const Tableau& t, const Closure& c) {
  std::set<int> k(c.kappa.begin(), c.kappa.end());
  for (int leaf : t.leaves()) {
    std::vector<Formula> lits;
    bool closed = false;
    for (int n : t.branch(leaf)) {
      if (!k.count(n)) continue;
      Formula f = apply_substitution(t.node(n).formula, c.sigma);
      if (Tableau::classify(f) == Tableau::Rule::closes) closed = true;
      lits.push_back(f);
    }
    for (std::size_t i = 0; i < lits.size() && !closed; ++i)
      for (std::size_t j = 0; j < lits.size() && !closed; ++j)
        closed = lits[i].is(Formula::Kind::neg) && lits[i].operand() == lits[j];
    if (!closed) return false;
  }
  return true;
}

}  // namespace pqa

#endif  // PQA_TABLEAU_HPP_
