#include <gtest/gtest.h>

#include "pqa/oracle.hpp"
#include "pqa/parser.hpp"
#include "pqa/printer.hpp"
#include "support/bridge.hpp"

using namespace pqa;

namespace {

// P over a domain of `nd`, one world per extension.
ModalModel unary_model(int nd, std::vector<std::vector<int>> ext_per_world) {
  naive::Symbols s;
  s.predicates = {{"P", 1}};
  naive::Model m{nd, {}};
  for (const auto& ext : ext_per_world) {
    naive::World w;
    for (int d : ext) w.relations["P"].insert({d});
    m.worlds.push_back(w);
  }
  return naive::to_modal(m, s);
}

naive::Symbols tiny_symbols() {
  naive::Symbols s;
  s.predicates = {{"p", 1}, {"q", 1}};
  s.functions = {{"a", 0}, {"b", 0}};
  s.rigid = {"a"};
  return s;
}

}  // namespace

TEST(Evaluate, Examples) {
  ModalModel m = unary_model(2, {{0}});
  Signature sig;
  EXPECT_TRUE(evaluate(m, 0, Assignment{{"X", 0}}, parse_formula("P(X)", sig)));
  EXPECT_FALSE(evaluate(m, 0, Assignment{{"X", 1}}, parse_formula("P(X)", sig)));
  EXPECT_TRUE(evaluate(m, 0, Assignment{}, Formula::top()));
  ModalModel empty = unary_model(2, {{}});
  EXPECT_FALSE(evaluate(empty, 0, Assignment{}, parse_formula("exists X. P(X)", sig)));
  EXPECT_THROW(evaluate(m, 0, Assignment{}, parse_formula("P(X)", sig)), std::invalid_argument);
}

TEST(PartitionEquivalent, Examples) {
  Signature sig;
  ModalModel m = unary_model(2, {{0}, {0, 1}});
  EXPECT_TRUE(partition_equivalent(m, 0, 1, Question(Formula::top())));
  EXPECT_FALSE(partition_equivalent(m, 0, 1, parse_question("?P(X)", sig)));
  EXPECT_TRUE(partition_equivalent(m, 0, 1, parse_question("?P(X) & ~P(X)", sig)));
}

TEST(PartitionEquivalent, RigidIdentityIsEntailedByEveryQuestion) {
  Signature sig;
  sig.declare_function("j", 0, true);
  sig.declare_function("b", 0, true);
  Question q = parse_question("?j = b", sig);
  Question any = parse_question("?P(X)", sig);
  EXPECT_FALSE(entails_bounded(std::span<const Question>(&any, 1), Formula::top(), q, sig));
  EXPECT_FALSE(entails_bounded({}, Formula::top(), q, sig));
}

TEST(EntailsBounded, Examples) {
  Signature sig;
  Question p = parse_question("?P(X)", sig);
  std::vector<Question> phi{p};
  EXPECT_FALSE(entails_bounded(phi, Formula::top(), parse_question("?forall X. P(X)", sig), sig));
  EXPECT_FALSE(entails_bounded(phi, Formula::top(), parse_question("?~P(X)", sig), sig));

  sig.declare_function("a", 0, true);
  auto cm = entails_bounded({}, Formula::top(), parse_question("?P(a)", sig), sig);
  ASSERT_TRUE(cm);
  EXPECT_EQ(cm->model.world_count(), 2);
  EXPECT_EQ(cm->model.domain_size, 1);
  // Independent check of the countermodel: the worlds disagree on P(a).
  Assignment g;
  EXPECT_NE(evaluate(cm->model, cm->w, g, parse_formula("P(a)", sig)),
            evaluate(cm->model, cm->v, g, parse_formula("P(a)", sig)));
}

TEST(EntailsBounded, NonRigidConstantNeedsTwoObjects) {
  // ?P(X) |= ?P(a) fails for non-rigid a, but only once a can move: with one
  // object, a denotes it in both worlds.
  Signature sig;
  Question p = parse_question("?P(X)", sig);
  Question pa = parse_question("?P(a)", sig);
  std::vector<Question> phi{p};
  OracleBounds one;
  one.max_domain = 1;
  EXPECT_FALSE(entails_bounded(phi, Formula::top(), pa, sig, one));
  auto cm = entails_bounded(phi, Formula::top(), pa, sig);
  ASSERT_TRUE(cm);
  EXPECT_EQ(cm->model.domain_size, 2);
  naive::Symbols s;
  s.predicates = {{"P", 1}};
  s.functions = {{"a", 0}};
  EXPECT_FALSE(naive::has_modal_countermodel({p.body()}, Formula::top(), pa.body(), s, 1));
  EXPECT_TRUE(naive::has_modal_countermodel({p.body()}, Formula::top(), pa.body(), s, 2));
}

TEST(IsAnswerBounded, Examples) {
  Signature sig;
  Question p = parse_question("?P(X)", sig);
  std::vector<Question> phi{p};
  EXPECT_FALSE(is_answer_bounded(parse_formula("forall X. P(X)", sig), phi, sig));
  EXPECT_FALSE(is_answer_bounded(Formula::top(), phi, sig));
  sig.declare_function("a", 0, true);
  auto cm = is_answer_bounded(parse_formula("Q(a)", sig), phi, sig);
  ASSERT_TRUE(cm);
  EXPECT_EQ(cm->model.domain_size, 1);
  EXPECT_THROW(is_answer_bounded(parse_formula("Q(X)", sig), phi, sig), std::invalid_argument);
}

TEST(EntailsBounded, ContextMustHoldAtBothWorlds) {
  Signature sig;
  sig.declare_function("a", 0, true);
  std::vector<Question> phi{parse_question("?P(X)", sig)};
  Formula chi = parse_formula("forall X. (P(X) <-> Q(X))", sig);
  EXPECT_FALSE(entails_bounded(phi, chi, parse_question("?Q(a)", sig), sig));
  EXPECT_TRUE(entails_bounded(phi, Formula::top(), parse_question("?Q(a)", sig), sig));
}

TEST(EntailsBounded, OverflowGuard) {
  Signature sig;
  std::vector<Question> phi{parse_question("?r(X, Y, Z)", sig)};
  OracleBounds b;
  b.max_domain = 3;
  b.max_models = 1000;
  EXPECT_THROW(entails_bounded(phi, Formula::top(), parse_question("?r(X, Y, Z)", sig), sig, b), OracleBoundError);
}

TEST(EntailsBounded, ParallelAgreesWithSequential) {
  Signature sig;
  std::vector<Question> phi{parse_question("?p(X)", sig)};
  Question psi = parse_question("?q(b) & p(X)", sig);
  OracleBounds seq, par;
  par.jobs = 4;
  auto a = entails_bounded(phi, Formula::top(), psi, sig, seq);
  auto b = entails_bounded(phi, Formula::top(), psi, sig, par);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(describe(a->model), describe(b->model));
}

TEST(Describe, PrintsTables) {
  ModalModel m = unary_model(2, {{0}, {1}});
  std::string s = describe(m);
  EXPECT_NE(s.find("domain: {d0, d1}"), std::string::npos);
  EXPECT_NE(s.find("world w1"), std::string::npos);
}

// ---------------------------------------------------------------------------
// Properties

TEST(Property, EvaluatorAgreesWithNaive) {
  naive::Symbols s = tiny_symbols();
  naive::FormulaGen gen(s, {"X", "Y"}, 21);
  std::mt19937 rng(4);
  for (int i = 0; i < 300; ++i) {
    Formula f = gen.formula(4, true);
    naive::Model nm = naive::random_model(s, 1 + i % 3, 2, rng);
    ModalModel m = naive::to_modal(nm, s);
    for (int w = 0; w < 2; ++w)
      for (const naive::Env& env : naive::assignments({"X", "Y"}, nm.domain)) {
        Assignment g;
        for (const auto& [k, d] : env) g.push(k, d);
        ASSERT_EQ(evaluate(m, w, g, f), naive::eval(nm, w, env, f)) << to_string(f);
      }
  }
}

TEST(Property, PartitionIsEquivalenceRelation) {
  naive::Symbols s = tiny_symbols();
  naive::FormulaGen gen(s, {"X", "Y"}, 22);
  std::mt19937 rng(8);
  for (int i = 0; i < 60; ++i) {
    Question q(gen.formula(3, true));
    naive::Model nm = naive::random_model(s, 2, 4, rng);
    ModalModel m = naive::to_modal(nm, s);
    for (int a = 0; a < 4; ++a) {
      EXPECT_TRUE(partition_equivalent(m, a, a, q));
      for (int b = 0; b < 4; ++b) {
        EXPECT_EQ(partition_equivalent(m, a, b, q), partition_equivalent(m, b, a, q));
        for (int c = 0; c < 4; ++c)
          if (partition_equivalent(m, a, b, q) && partition_equivalent(m, b, c, q))
            EXPECT_TRUE(partition_equivalent(m, a, c, q));
      }
    }
  }
}

TEST(Property, QuestionSetPartitionIsIntersection) {
  naive::Symbols s = tiny_symbols();
  naive::FormulaGen gen(s, {"X", "Y"}, 23);
  std::mt19937 rng(12);
  for (int i = 0; i < 100; ++i) {
    std::vector<Question> qs{Question(gen.formula(3)), Question(gen.formula(3)), Question(gen.formula(2))};
    naive::Model nm = naive::random_model(s, 2, 3, rng);
    ModalModel m = naive::to_modal(nm, s);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        bool all = true;
        for (const Question& q : qs) all = all && naive::agree(nm, a, b, q.body());
        EXPECT_EQ(partition_equivalent(m, a, b, qs), all);
      }
  }
}

TEST(Property, TypeSearchAgreesWithPairSearch) {
  naive::Symbols s;
  s.predicates = {{"p", 1}, {"q", 1}};
  s.functions = {{"a", 0}, {"b", 0}};
  s.rigid = {"a"};
  naive::FormulaGen gen(s, {"X"}, 24);
  Signature sig = naive::signature_of(s);
  for (int i = 0; i < 80; ++i) {
    std::vector<Formula> phi{gen.formula(2)};
    Formula chi = i % 3 == 0 ? Formula::top() : Formula::forall("X", gen.formula(1));
    if (!is_closed(chi)) chi = Formula::top();
    Formula psi = gen.formula(2);
    std::vector<Question> qs;
    for (const Formula& f : phi) qs.emplace_back(f);
    OracleBounds b;
    b.max_domain = 2;
    bool lib = entails_bounded(qs, chi, Question(psi), sig, b).has_value();
    bool ref = naive::has_modal_countermodel(phi, chi, psi, s, 2);
    EXPECT_EQ(lib, ref) << to_string(phi[0]) << " / " << to_string(chi) << " / " << to_string(psi);
  }
}

TEST(Property, ReturnedCountermodelsAreCountermodels) {
  naive::Symbols s = tiny_symbols();
  naive::FormulaGen gen(s, {"X"}, 25);
  Signature sig = naive::signature_of(s);
  int found = 0;
  for (int i = 0; i < 80; ++i) {
    std::vector<Question> qs{Question(gen.formula(2))};
    Question psi(gen.formula(2));
    auto cm = entails_bounded(qs, Formula::top(), psi, sig);
    if (!cm) continue;
    ++found;
    EXPECT_TRUE(partition_equivalent(cm->model, cm->w, cm->v, qs));
    EXPECT_FALSE(partition_equivalent(cm->model, cm->w, cm->v, psi));
  }
  EXPECT_GT(found, 10);
}

TEST(Property, ClassicalCountermodelAgreesWithNaive) {
  naive::Symbols s = tiny_symbols();
  naive::FormulaGen gen(s, {"X"}, 26);
  Signature sig = naive::signature_of(s);
  for (int i = 0; i < 100; ++i) {
    Formula p = Formula::forall("X", gen.formula(2));
    Formula c = Formula::exists("X", gen.formula(2));
    std::vector<Formula> prem{p};
    bool lib = classical_countermodel(prem, c, sig, 2).has_value();
    EXPECT_EQ(lib, naive::has_classical_countermodel(prem, c, s, 2)) << to_string(p) << " |= " << to_string(c);
  }
}
