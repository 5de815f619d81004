#include <fltl/campaigns.hpp>
#include <fltl/error.hpp>
#include <fltl/formula.hpp>
#include <fltl/parser.hpp>

#include <gtest/gtest.h>

using namespace fltl;

namespace {

Formula a() { return Formula::atom("a"); }
Formula b() { return Formula::atom("b"); }
Formula c() { return Formula::atom("c"); }

} // namespace

TEST(Rational, NormalisesSignAndTerms)
{
    const Rational r(-2, -4);
    EXPECT_EQ(r.num(), 1);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(Rational(3, 6), Rational(1, 2));
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_EQ(Rational(2, 5).to_string(), "2/5");
}

TEST(Rational, ZeroDenominatorThrows)
{
    EXPECT_THROW(Rational(1, 0), std::invalid_argument);
}

TEST(Rational, FrequencyBoundIsInclusive)
{
    EXPECT_TRUE(meets_frequency(2, 4, Rational(1, 2)));
    EXPECT_FALSE(meets_frequency(1, 4, Rational(1, 2)));
    EXPECT_TRUE(meets_frequency(0, 0, Rational(1)));
    EXPECT_TRUE(meets_frequency(0, 7, Rational(0)));
}

TEST(Alphabet, RejectsEmptyAndDuplicates)
{
    EXPECT_THROW(Alphabet(std::vector<Letter>{}), AlphabetError);
    EXPECT_THROW((Alphabet{"a", "a"}), AlphabetError);
    const Alphabet sigma{"a", "b"};
    EXPECT_EQ(sigma.size(), 2U);
    EXPECT_EQ(sigma.index_of(Letter("b")), 1U);
    EXPECT_FALSE(sigma.contains(Letter("c")));
}

TEST(Alphabet, LetterTokens)
{
    EXPECT_TRUE(is_letter_token("t_12"));
    EXPECT_TRUE(is_letter_token("$z"));
    EXPECT_TRUE(is_letter_token("#"));
    EXPECT_FALSE(is_letter_token("$2"));
    EXPECT_FALSE(is_letter_token("1a"));
    EXPECT_TRUE(is_keyword("U"));
    EXPECT_FALSE(is_keyword("u"));
}

TEST(Formula, StructuralEqualityAndHash)
{
    const Formula f = Formula::freq_until(Rational(1, 2), a(), b());
    const Formula g = Formula::freq_until(Rational(2, 4), a(), b());
    EXPECT_EQ(f, g);
    EXPECT_EQ(f.hash(), g.hash());
    EXPECT_NE(f, Formula::freq_until(Rational(1, 3), a(), b()));
    EXPECT_NE(Formula::until(a(), b()), Formula::freq_until(Rational(1), a(), b()));
}

TEST(Formula, SizeAndDepthCountAtomsAsOne)
{
    EXPECT_EQ(a().depth(), 1U);
    EXPECT_EQ(a().size(), 1U);
    const Formula f = Formula::conj(Formula::next(a()), b());
    EXPECT_EQ(f.depth(), 3U);
    EXPECT_EQ(f.size(), 4U);
}

TEST(Formula, FrequencyOutsideUnitIntervalThrows)
{
    EXPECT_THROW(Formula::freq_until(Rational(3, 2), a(), b()), std::invalid_argument);
    EXPECT_THROW(Formula::freq_until(Rational(-1, 2), a(), b()), std::invalid_argument);
}

TEST(Formula, EmptyCombinatorsAreUnits)
{
    EXPECT_EQ(Formula::conj_all({}), Formula::top());
    EXPECT_EQ(Formula::disj_all({}), Formula::bottom());
    EXPECT_EQ(Formula::any_of({}), Formula::bottom());
    EXPECT_EQ(Formula::conj_all({a()}), a());
}

TEST(Formula, AccessorsOnWrongKindThrow)
{
    EXPECT_THROW((void)a().lhs(), std::logic_error);
    EXPECT_THROW((void)Formula::next(a()).letter(), std::logic_error);
    EXPECT_THROW((void)a().frequency(), std::logic_error);
}

TEST(Desugar, ProducesCoreFormulas)
{
    const Alphabet sigma{"a", "b"};
    const Formula g = Formula::always(Formula::implies(a(), Formula::eventually(b())));
    const Formula core = desugar(g, sigma);
    EXPECT_TRUE(core.is_core());
    EXPECT_FALSE(g.is_core());
    EXPECT_TRUE(desugar_keep_true(Formula::eventually(a())).is_core(true));
}

TEST(Desugar, ExpandsTrueOverTheAlphabet)
{
    const Alphabet sigma{"a", "b"};
    const Formula expected = Formula::negate(Formula::conj(Formula::negate(a()), Formula::negate(b())));
    EXPECT_EQ(desugar(Formula::top(), sigma), expected);
    EXPECT_EQ(desugar(Formula::letter_set({Letter("a")}), sigma), a());
    EXPECT_EQ(desugar(Formula::until(a(), b()), sigma), Formula::freq_until(Rational(1), a(), b()));
}

TEST(Desugar, ForeignLetterThrows)
{
    const Alphabet sigma{"a", "b"};
    EXPECT_THROW((void)desugar(c(), sigma), AlphabetError);
}

TEST(Subformulas, ChildrenBeforeParentsWithoutDuplicates)
{
    const Formula f = Formula::conj(a(), Formula::next(a()));
    const auto subs = subformulas(f);
    ASSERT_EQ(subs.size(), 3U);
    EXPECT_EQ(subs.front(), a());
    EXPECT_EQ(subs.back(), f);
}

TEST(Parser, FrequencyUntil)
{
    const Formula f = parse_formula("a U{1/2} b");
    EXPECT_EQ(f, Formula::freq_until(Rational(1, 2), a(), b()));
    EXPECT_EQ(parse_formula("a U b"), Formula::until(a(), b()));
}

TEST(Parser, Precedence)
{
    // unary > until > and > or
    EXPECT_EQ(parse_formula("!a U b & c | a"),
              Formula::disj(Formula::conj(Formula::until(Formula::negate(a()), b()), c()), a()));
    EXPECT_EQ(parse_formula("a U b U c"), Formula::until(a(), Formula::until(b(), c())));
    EXPECT_EQ(parse_formula("a & b & c"), Formula::conj(Formula::conj(a(), b()), c()));
    EXPECT_EQ(parse_formula("G F a -> X b"),
              Formula::implies(Formula::always(Formula::eventually(a())), Formula::next(b())));
}

TEST(Parser, ConstantsSetsAndReservedTokens)
{
    EXPECT_EQ(parse_formula("true"), Formula::top());
    EXPECT_EQ(parse_formula("false"), Formula::bottom());
    EXPECT_EQ(parse_formula("[a b]"), Formula::letter_set({Letter("a"), Letter("b")}));
    EXPECT_EQ(parse_formula("$0 & X #"), Formula::conj(Formula::atom("$0"), Formula::next(Formula::atom("#"))));
}

TEST(Parser, Errors)
{
    EXPECT_THROW((void)parse_formula("a U{3/2} b"), ParseError);
    EXPECT_THROW((void)parse_formula("a U{1/0} b"), ParseError);
    EXPECT_THROW((void)parse_formula("a &"), ParseError);
    EXPECT_THROW((void)parse_formula("(a"), ParseError);
    EXPECT_THROW((void)parse_formula("a b"), ParseError);
    try {
        (void)parse_formula("a & & b");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4U);
    }
}

TEST(Parser, AlphabetCheck)
{
    const Alphabet sigma{"a", "b"};
    EXPECT_NO_THROW((void)parse_formula("a U b", sigma));
    EXPECT_THROW((void)parse_formula("a U c", sigma), AlphabetError);
}

TEST(Render, Canonical)
{
    EXPECT_EQ(render(Formula::freq_until(Rational(2, 4), a(), b())), "a U{1/2} b");
    EXPECT_EQ(render(Formula::freq_until(Rational(1), a(), b())), "a U{1/1} b");
    EXPECT_EQ(render(Formula::until(a(), b())), "a U b");
    EXPECT_EQ(render(Formula::conj(a(), Formula::conj(b(), c()))), "a & (b & c)");
    EXPECT_EQ(render(Formula::until(Formula::until(a(), b()), c())), "(a U b) U c");
}

TEST(Campaigns, ParseRenderRoundTrip)
{
    const auto outcome = campaigns::check_parse_render(2000, 11);
    EXPECT_TRUE(outcome.passed()) << outcome.summary();
}

TEST(Parser, ImplicationIsLowestAndRightAssociative)
{
    EXPECT_EQ(parse_formula("a | b -> c -> a"),
              Formula::implies(Formula::disj(a(), b()), Formula::implies(c(), a())));
    EXPECT_EQ(render(Formula::implies(Formula::implies(a(), b()), c())), "(a -> b) -> c");
    EXPECT_THROW((void)parse_formula("a - b"), ParseError);
}
