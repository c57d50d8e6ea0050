#include <gtest/gtest.h>

#include "pqa/oracle.hpp"
#include "pqa/parser.hpp"
#include "pqa/printer.hpp"
#include "pqa/prover.hpp"
#include "pqa/translation.hpp"
#include "support/bridge.hpp"

using namespace pqa;

namespace {

Formula parse_reserved(const std::string& s, Signature& sig) { return parse_formula(s, sig, ParseOptions{true}); }

bool shape_equal(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::conj:
      return shape_equal(a.left(), b.left()) && shape_equal(a.right(), b.right());
    case Formula::Kind::neg:
      return shape_equal(a.operand(), b.operand());
    case Formula::Kind::exists:
      return a.variable() == b.variable() && shape_equal(a.body(), b.body());
    case Formula::Kind::atom:
      return a.terms().size() == b.terms().size();
    default:
      return true;
  }
}

}  // namespace

TEST(Star, Examples) {
  Signature sig;
  sig.declare_function("f", 1, true);
  sig.declare_function("c", 0, true);
  EXPECT_EQ(to_string(star(parse_formula("P(X)", sig), sig)), "P'(X)");
  Formula eq = parse_formula("X = f(c)", sig);
  EXPECT_EQ(star(eq, sig), eq);
  Signature s2;
  EXPECT_EQ(to_string(star(parse_formula("P(c)", s2), s2)), "P'(c')");
  EXPECT_TRUE(s2.function("c'") && !s2.function("c'")->rigid);
  EXPECT_EQ(s2.function("c'")->origin, SymbolOrigin::primed);
}

TEST(Star, LeavesConstantsAndVariables) {
  Signature sig;
  EXPECT_EQ(star(Formula::top(), sig), Formula::top());
  EXPECT_EQ(star(Formula::bottom(), sig), Formula::bottom());
  Formula f = parse_formula("exists X. p(X) & X = Y", sig);
  EXPECT_EQ(to_string(star(f, sig)), "exists X. p'(X) & X = Y");
}

TEST(Hash, Examples) {
  Signature sig;
  EXPECT_EQ(to_string(hash(parse_question("?P(X)", sig), sig)), "forall X. P(X) <-> P'(X)");
  EXPECT_EQ(hash(Question(Formula::top()), sig), Formula::iff(Formula::top(), Formula::top()));
  sig.declare_function("a", 0, true);
  EXPECT_EQ(to_string(hash(parse_question("?P(a)", sig), sig)), "P(a) <-> P'(a)");
}

TEST(ReduceEntailment, RigidInstance) {
  Signature sig;
  sig.declare_function("a", 0, true);
  std::vector<Question> phi{parse_question("?P(X)", sig)};
  Sequent s = reduce_entailment(phi, Formula::top(), parse_question("?P(a)", sig), sig);
  ASSERT_EQ(s.premises.size(), 1u);  // the true context is dropped
  EXPECT_EQ(to_string(s.premises[0]), "forall X. P(X) <-> P'(X)");
  EXPECT_EQ(to_string(s.conclusion), "P(a) <-> P'(a)");
  EXPECT_TRUE(prove(s.premises, s.conclusion, sig).valid());
}

TEST(ReduceEntailment, ContextSequent) {
  Signature sig;
  sig.declare_function("a", 0, true);
  std::vector<Question> phi{parse_question("?P(X)", sig)};
  Formula chi = parse_formula("forall X. (P(X) <-> Q(X))", sig);
  Sequent s = reduce_entailment(phi, chi, parse_question("?Q(a)", sig), sig);
  ASSERT_EQ(s.premises.size(), 3u);
  EXPECT_EQ(s.premises[1], chi);
  EXPECT_EQ(to_string(s.premises[2]), "forall X. P'(X) <-> Q'(X)");
  EXPECT_EQ(to_string(s.conclusion), "Q(a) <-> Q'(a)");
  EXPECT_TRUE(prove(s.premises, s.conclusion, sig).valid());
}

TEST(ReduceEntailment, NonRigidInstanceIsInvalid) {
  Signature sig;
  std::vector<Question> phi{parse_question("?P(X)", sig)};
  Sequent s = reduce_entailment(phi, Formula::top(), parse_question("?P(a)", sig), sig);
  EXPECT_EQ(to_string(s.conclusion), "P(a) <-> P'(a')");
  EXPECT_FALSE(prove(s.premises, s.conclusion, sig).valid());
  EXPECT_TRUE(classical_countermodel(s.premises, s.conclusion, sig).has_value());
}

TEST(ReduceEntailment, RejectsOpenContext) {
  Signature sig;
  std::vector<Question> phi{parse_question("?P(X)", sig)};
  EXPECT_THROW(reduce_entailment(phi, parse_formula("P(X)", sig), parse_question("?P(X)", sig), sig),
               std::invalid_argument);
}

TEST(Relativize, Examples) {
  Signature sig;
  EXPECT_EQ(to_string(relativize(parse_formula("exists X. P(X)", sig))), "exists X. E(X) & P(X)");
  EXPECT_EQ(to_string(relativize(parse_question("?P(X)", sig))), "? E(X) & P(X)");
  EXPECT_EQ(relativize(Formula::top()), Formula::top());
  EXPECT_EQ(to_string(relativize(parse_formula("forall X. P(X)", sig))), "forall X. E(X) -> P(X)");
  EXPECT_THROW(relativize(parse_formula("E(a)", sig)), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Properties

TEST(Property, StarPreservesShapeAndPrimesAreTerminal) {
  naive::Symbols s;
  s.predicates = {{"p", 1}, {"r", 2}};
  s.functions = {{"a", 0}, {"b", 0}, {"f", 1}};
  s.rigid = {"a"};
  naive::FormulaGen gen(s, {"X", "Y"}, 31);
  for (int i = 0; i < 200; ++i) {
    Signature sig = naive::signature_of(s);
    Formula f = gen.formula(4, true);
    Formula g = star(f, sig);
    EXPECT_TRUE(shape_equal(f, g));
    SymbolUse use = collect_symbols(std::vector<Formula>{g});
    for (const auto& [p, ar] : use.predicates)
      if (p != "=") EXPECT_TRUE(is_primed_name(p)) << p;
    for (const auto& [fn, ar] : use.functions) EXPECT_TRUE(sig.is_rigid(fn) || is_primed_name(fn)) << fn;
    // Nothing primed is ever primed again.
    for (const auto& [fn, info] : sig.functions()) EXPECT_FALSE(fn.size() > 1 && fn.ends_with("''"));
    Formula reparsed = parse_reserved(to_string(g), sig);
    EXPECT_TRUE(alpha_equivalent(reparsed, g));
  }
}

TEST(Property, ModalAndClassicalCountermodelsCoincide) {
  // A two-world countermodel and a classical countermodel of the sequent exist
  // for exactly the same domain sizes.
  naive::Symbols s;
  s.predicates = {{"p", 1}, {"q", 1}};
  s.functions = {{"a", 0}, {"b", 0}};
  s.rigid = {"a"};
  naive::FormulaGen gen(s, {"X"}, 32);
  int refuted = 0, valid = 0;
  for (int i = 0; i < 120; ++i) {
    Signature sig = naive::signature_of(s);
    std::vector<Question> phi{Question(gen.formula(2))};
    Formula chi = i % 4 == 0 ? Formula::forall("X", gen.formula(1)) : Formula::top();
    if (!is_closed(chi)) chi = Formula::top();
    Question psi(gen.formula(2));
    Signature local = sig;
    Sequent seq = reduce_entailment(phi, chi, psi, local);
    for (int nd = 1; nd <= 2; ++nd) {
      OracleBounds b;
      b.max_domain = nd;
      bool modal = entails_bounded(phi, chi, psi, sig, b).has_value();
      bool classical = classical_countermodel(seq.premises, seq.conclusion, local, nd).has_value();
      EXPECT_EQ(modal, classical) << to_string(phi[0].body()) << " |=_" << to_string(chi) << " "
                                  << to_string(psi.body()) << " at |D|<=" << nd;
      if (nd == 2) (classical ? refuted : valid)++;
    }
  }
  EXPECT_GT(refuted, 10);
  EXPECT_GT(valid, 10);
}
