#include <fltl/campaigns.hpp>
#include <fltl/error.hpp>
#include <fltl/evaluator.hpp>
#include <fltl/parser.hpp>

#include <gtest/gtest.h>

using namespace fltl;

namespace {

const LassoWord& worked_word()
{
    static const LassoWord w = parse_lasso("c b a a b b ; c");
    return w;
}

bool holds(const char* word, const char* formula)
{
    return models(parse_lasso(word), parse_formula(formula));
}

} // namespace

TEST(Evaluator, WorkedExample)
{
    EXPECT_TRUE(models(worked_word(), parse_formula("a U{1/2} b")));
    EXPECT_FALSE(models(worked_word(), parse_formula("a U{3/4} b")));
    EXPECT_TRUE(brute_force_models(worked_word(), parse_formula("a U{1/2} b")));
    EXPECT_FALSE(brute_force_models(worked_word(), parse_formula("a U{3/4} b")));
}

TEST(Evaluator, WorkedExampleWitness)
{
    const auto reports = until_witnesses(worked_word(), parse_formula("a U{1/2} b"));
    ASSERT_EQ(reports.size(), 1U);
    ASSERT_TRUE(reports[0].witness.has_value());
    EXPECT_EQ(reports[0].witness->j, 4U);
    EXPECT_EQ(reports[0].witness->count, 2);
}

TEST(Evaluator, ObservedFrequencies)
{
    const Formula a = Formula::atom("a");
    EXPECT_EQ(observed_frequency(worked_word(), a, 0, 1), Rational(0));
    EXPECT_EQ(observed_frequency(worked_word(), a, 0, 5), Rational(2, 5));
    EXPECT_THROW((void)observed_frequency(worked_word(), a, 0, 0), std::invalid_argument);
}

TEST(Evaluator, ImmediateWitnessNeedsNoPhi)
{
    // j = 0: zero positions of phi meet any bound
    EXPECT_TRUE(holds("b ; c", "a U{1/1} b"));
    EXPECT_TRUE(holds("; b", "false U{1/1} b"));
}

TEST(Evaluator, TiesSatisfyTheBound)
{
    // before the a at position 2 the frequency of b is exactly 1/2
    EXPECT_TRUE(holds("b c a ; c", "b U{1/2} a"));
    EXPECT_FALSE(holds("b c a ; c", "b U{2/3} a"));
    EXPECT_TRUE(holds("b c b a ; c", "b U{2/3} a"));
}

TEST(Evaluator, WitnessInTheLoopNeedsPositiveSlope)
{
    // frequency of b along the loop is 2/3, so eventually the bound 1/2 is met
    EXPECT_TRUE(holds("c c c c c ; b b a", "b U{1/2} a"));
    EXPECT_FALSE(holds("c c c c c ; b c a", "b U{1/2} a"));
    EXPECT_FALSE(holds("c ; b b", "b U a"));
}

TEST(Evaluator, LateWitnessIsMinimal)
{
    const LassoWord w = parse_lasso("c c c c ; b b a");
    const auto reports = until_witnesses(w, parse_formula("b U{1/2} a"));
    ASSERT_EQ(reports.size(), 1U);
    ASSERT_TRUE(reports[0].witness.has_value());
    // a occurs at 6, 9, 12, ...; counts of b before them are 2, 4, 6, ...
    // 2*count >= j first holds at j = 12 (count 6)
    EXPECT_EQ(reports[0].witness->j, 12U);
    EXPECT_EQ(reports[0].witness->count, 6);
}

TEST(Evaluator, ClassicalOperators)
{
    EXPECT_TRUE(holds("a a ; b", "a U b"));
    EXPECT_FALSE(holds("a c ; b", "a U b"));
    EXPECT_TRUE(holds("a ; b", "G F b"));
    EXPECT_FALSE(holds("b ; a", "G F b"));
    EXPECT_TRUE(holds("a ; b", "X G b"));
    EXPECT_TRUE(holds("a b ; a", "X b & X X a"));
    EXPECT_TRUE(holds("a ; c", "[a b] & !b"));
    EXPECT_TRUE(holds("a ; c", "true & !false"));
    EXPECT_TRUE(holds("a ; c", "b -> c"));
    EXPECT_TRUE(holds("a ; c", "F c U{0/1} c"));
}

TEST(Evaluator, NextWrapsIntoTheLoop)
{
    const LassoWord w = parse_lasso("a ; b c");
    const Formula f = parse_formula("X c");
    const SatTable t = sat_table(w, f);
    EXPECT_FALSE(t.holds(f, 0));
    EXPECT_TRUE(t.holds(f, 1));
    EXPECT_FALSE(t.holds(f, 2));
    EXPECT_TRUE(t.holds(f, 3));
    EXPECT_TRUE(t.holds(f, 101));
}

TEST(SatTable, RowsAreLookedUpByFormula)
{
    const LassoWord w = parse_lasso("a b ; c");
    const Formula f = parse_formula("a & X b");
    const SatTable t = sat_table(w, f);
    EXPECT_EQ(t.width(), 3U);
    EXPECT_TRUE(t.contains(Formula::atom("b")));
    const auto row = t.row(Formula::atom("b"));
    EXPECT_EQ(std::vector<std::uint8_t>(row.begin(), row.end()), (std::vector<std::uint8_t>{0, 1, 0}));
    EXPECT_THROW((void)t.row(Formula::atom("z")), std::out_of_range);
}

TEST(EvaluationPlan, ReusableAcrossWords)
{
    const EvaluationPlan plan(parse_formula("a U{1/2} b"));
    EXPECT_TRUE(plan.models(worked_word()));
    EXPECT_FALSE(plan.models(parse_lasso("c ; c")));
    EXPECT_TRUE(plan.models(parse_lasso("; b")));
    EXPECT_TRUE(plan.core().is_core(true));
}

TEST(EvaluationPlan, AlphabetIsEnforced)
{
    const Alphabet sigma{"a", "b", "c"};
    EXPECT_TRUE(models(worked_word(), parse_formula("a U{1/2} b"), sigma));
    EXPECT_THROW((void)models(parse_lasso("a d ; c"), parse_formula("a"), sigma), AlphabetError);
    EXPECT_THROW((void)models(worked_word(), parse_formula("d"), sigma), AlphabetError);
}

TEST(FreqUntilDecide, DirectQuery)
{
    const std::vector<std::uint8_t> phi{0, 1, 1, 0};
    const std::vector<std::uint8_t> psi{0, 0, 0, 1};
    FreqWitnessQuery q{0, phi, psi, Rational(2, 3), 1, 3};
    EXPECT_TRUE(freq_until_decide(q));
    const auto w = freq_until_witness(q);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->j, 3U);
    EXPECT_EQ(w->count, 2);
    q.r = Rational(3, 4);
    // loop slope 2 of 3 < 3/4, so no witness ever appears
    EXPECT_FALSE(freq_until_decide(q));
    EXPECT_FALSE(freq_until_witness(q).has_value());
}

TEST(BruteForce, BoundGrowsWithTheDenominator)
{
    const LassoWord w = parse_lasso("a b ; c d");
    EXPECT_LT(brute_force_bound(w, 0, Rational(1, 2)), brute_force_bound(w, 0, Rational(2, 5)));
}

TEST(Campaigns, EvaluatorAgreesWithBruteForce)
{
    const auto exhaustive = campaigns::check_evaluator_exhaustive(
        {Letter("a"), Letter("b")}, 4, 2, {Rational(0), Rational(1, 2), Rational(1)});
    EXPECT_TRUE(exhaustive.passed()) << exhaustive.summary();
    const auto random = campaigns::check_evaluator_random(500, 3);
    EXPECT_TRUE(random.passed()) << random.summary();
}

TEST(Campaigns, Identities)
{
    for (const auto& outcome : {campaigns::check_until_zero_is_eventually(200, 5),
                                campaigns::check_until_one_is_classical(200, 5),
                                campaigns::check_frequency_monotonicity(200, 5),
                                campaigns::check_suffix_congruence(200, 5),
                                campaigns::check_desugar_preserves(300, 5)}) {
        EXPECT_TRUE(outcome.passed()) << outcome.summary();
    }
}
