// Mode dispatch for the command-line tool. Kept in the library so tests can
// run a mode without spawning a process.

#ifndef PQA_DRIVER_HPP_
#define PQA_DRIVER_HPP_

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pqa/development.hpp"
#include "pqa/oracle.hpp"
#include "pqa/printer.hpp"
#include "pqa/problem.hpp"
#include "pqa/qa.hpp"
#include "pqa/translation.hpp"

namespace pqa {

enum class Mode { answer, entail, check_development, check_answer };

struct RunOptions {
  Mode mode = Mode::answer;
  // answer
  int max_level = 6;
  std::size_t max_answers = 10;
  int max_instances = 3;
  long long timeout_ms = 10000;
  bool horn = false;
  bool assume_rigid = false;
  bool enumerate = false;  // enumerate developments instead of the tableau stream
  int depth = 2;           // enumeration depth for that mode
  // shared
  bool equality_axioms = false;
  int max_gamma = 6;
  std::size_t max_branches = 20000;
  bool trace = false;
  // entail / check-answer
  bool oracle = true;
  bool prover = true;
  int max_worlds = 2;
  int max_domain = 3;
  int jobs = 1;
  bool show_translation = false;
};

namespace exit_code {
inline constexpr int yes = 0;
inline constexpr int no = 1;
inline constexpr int unknown = 2;
inline constexpr int only_trivial = 3;
inline constexpr int usage = 64;
}  // namespace exit_code

inline int verdict_exit(Verdict v) {
  return v == Verdict::yes ? exit_code::yes : v == Verdict::no ? exit_code::no : exit_code::unknown;
}

namespace detail {

inline int run_answer(const ProblemFile& pf, const RunOptions& o, std::ostream& out, std::ostream& log) {
  std::vector<Question> qs = fold_common_ground(pf.common, pf.questions);
  if (qs.empty()) throw std::invalid_argument("answer mode needs at least one question");
  bool nontrivial = false;
  if (o.enumerate) {
    if (o.horn) throw std::invalid_argument("--horn applies to the tableau algorithm only");
    Signature sig = pf.signature;
    if (o.assume_rigid) sig.set_all_rigid();
    EnumerateOptions eo;
    eo.enumeration.depth = o.depth;
    eo.enumeration.equality_allowed = o.equality_axioms;
    eo.prover.equality_axioms = o.equality_axioms;
    eo.max_answers = o.max_answers;
    eo.timeout_ms = o.timeout_ms;
    std::vector<Formula> found = algorithm1_reference(pf.axioms, qs, sig, eo);
    for (std::size_t i = 0; i < found.size(); ++i) {
      out << "answer[" << i + 1 << "]: " << to_string(found[i]) << "  % depth<=" << o.depth << "\n";
      nontrivial = nontrivial || !found[i].is(Formula::Kind::top);
    }
    return nontrivial ? exit_code::yes : exit_code::only_trivial;
  }
  StreamOptions so;
  so.max_level = o.max_level;
  so.max_instances = o.max_instances;
  so.max_answers = o.max_answers;
  so.timeout_ms = o.timeout_ms;
  so.horn = o.horn;
  so.assume_rigid = o.assume_rigid;
  so.equality_axioms = o.equality_axioms;
  so.max_branches = o.max_branches;
  so.trace = o.trace;
  AnswerStream stream(pf.axioms, qs, pf.signature, so);
  std::size_t i = 0;
  while (auto a = stream.next()) {
    out << "answer[" << ++i << "]: " << to_string(a->formula) << "  % level=" << a->level << "\n";
    if (o.trace) log << "% answer[" << i << "] from " << a->provenance << "\n";
    nontrivial = nontrivial || !a->formula.is(Formula::Kind::top);
  }
  if (o.trace) log << stream.trace();
  return nontrivial ? exit_code::yes : exit_code::only_trivial;
}

inline AnswerhoodBudget budget_of(const RunOptions& o) {
  AnswerhoodBudget b;
  b.levels = std::max(o.max_gamma, o.max_domain);
  b.max_domain = o.max_domain;
  b.max_worlds = o.max_worlds;
  b.prover.max_branches = o.max_branches;
  b.prover.equality_axioms = o.equality_axioms;
  b.prover.trace = o.trace;
  b.timeout_ms = o.timeout_ms;
  b.jobs = o.jobs;
  return b;
}

inline int report(const EntailmentReport& rep, const RunOptions& o, std::ostream& out, std::ostream& log) {
  if (o.show_translation) out << "sequent:\n" << to_string(rep.sequent) << "\n";
  out << to_string(rep.verdict);
  if (rep.verdict == Verdict::yes) out << " (proof at gamma multiplicity " << rep.proof.gamma << ")";
  if (rep.countermodel)
    out << " (countermodel: |W|=" << rep.countermodel->model.worlds.size()
        << ", |D|=" << rep.countermodel->model.domain_size << ", w=" << rep.countermodel->w
        << ", v=" << rep.countermodel->v << ")";
  if (!rep.note.empty()) out << " (" << rep.note << ")";
  out << "\n";
  if (rep.countermodel) out << describe(rep.countermodel->model);
  if (o.trace) log << rep.proof.trace;
  return verdict_exit(rep.verdict);
}

// The axioms act as background context in entail and check-answer modes.
inline Formula effective_context(const ProblemFile& pf) {
  std::vector<Formula> parts = pf.axioms;
  if (pf.context) parts.push_back(*pf.context);
  return Formula::conj_all(parts);
}

}  // namespace detail

inline int run(const ProblemFile& pf, const RunOptions& o, std::ostream& out, std::ostream& log) {
  switch (o.mode) {
    case Mode::answer:
      return detail::run_answer(pf, o, out, log);
    case Mode::entail: {
      std::vector<Question> qs = fold_common_ground(pf.common, pf.questions);
      if (qs.empty()) throw std::invalid_argument("entail mode needs at least one question");
      if (!pf.conjecture) throw std::invalid_argument("entail mode needs a conjecture");
      EntailmentReport rep = decide_entailment(qs, detail::effective_context(pf), Question(*pf.conjecture),
                                               pf.signature, detail::budget_of(o), o.prover, o.oracle);
      return detail::report(rep, o, out, log);
    }
    case Mode::check_answer: {
      std::vector<Question> qs = fold_common_ground(pf.common, pf.questions);
      if (qs.empty()) throw std::invalid_argument("check-answer mode needs at least one question");
      if (!pf.conjecture) throw std::invalid_argument("check-answer mode needs a conjecture");
      if (!is_closed(*pf.conjecture)) throw std::invalid_argument("the conjecture must be closed");
      EntailmentReport rep = decide_entailment(qs, detail::effective_context(pf), Question(*pf.conjecture),
                                               pf.signature, detail::budget_of(o), o.prover, o.oracle);
      return detail::report(rep, o, out, log);
    }
    case Mode::check_development: {
      std::vector<Question> qs = fold_common_ground(pf.common, pf.questions);
      if (qs.empty()) throw std::invalid_argument("check-development mode needs at least one question");
      if (!pf.conjecture) throw std::invalid_argument("check-development mode needs a conjecture");
      DevelopmentConfig cfg;
      std::vector<Formula> bodies = bodies_of(qs);
      auto w = is_development(*pf.conjecture, bodies, pf.signature, cfg);
      if (!w) {
        out << "no\n";
        return exit_code::no;
      }
      out << "yes\n" << to_string(*w);
      return exit_code::yes;
    }
  }
  return exit_code::usage;
}

}  // namespace pqa

#endif  // PQA_DRIVER_HPP_
