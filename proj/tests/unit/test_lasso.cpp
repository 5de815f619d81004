#include <fltl/error.hpp>
#include <fltl/lasso.hpp>

#include <gtest/gtest.h>

using namespace fltl;

namespace {

FiniteWord word(std::initializer_list<const char*> names)
{
    FiniteWord w;
    for (const char* n : names) w.emplace_back(n);
    return w;
}

} // namespace

TEST(LassoWord, EmptyLoopThrows)
{
    EXPECT_THROW(LassoWord(word({"a"}), {}), std::invalid_argument);
}

TEST(LassoWord, LettersBeyondThePrefixRepeatTheLoop)
{
    const LassoWord w(word({"c", "b"}), word({"a", "b"}));
    EXPECT_EQ(w.letter_at(0).name(), "c");
    EXPECT_EQ(w.letter_at(2).name(), "a");
    EXPECT_EQ(w.letter_at(3).name(), "b");
    EXPECT_EQ(w.letter_at(102).name(), "a");
    EXPECT_EQ(w.period_span(), 4U);
}

TEST(LassoWord, FoldMapsIntoTheFirstPeriod)
{
    const LassoWord w(word({"c", "b"}), word({"a", "b", "a"}));
    EXPECT_EQ(w.fold(1), 1U);
    EXPECT_EQ(w.fold(4), 4U);
    EXPECT_EQ(w.fold(5), 2U);
    EXPECT_EQ(w.fold(9), 3U);
}

TEST(LassoWord, Suffix)
{
    const LassoWord w(word({"c", "b"}), word({"a", "b", "d"}));
    EXPECT_EQ(w.suffix(1), LassoWord(word({"b"}), word({"a", "b", "d"})));
    EXPECT_EQ(w.suffix(2), LassoWord({}, word({"a", "b", "d"})));
    EXPECT_EQ(w.suffix(3), LassoWord({}, word({"b", "d", "a"})));
    EXPECT_EQ(w.suffix(7), LassoWord({}, word({"d", "a", "b"})));
    EXPECT_EQ(w.suffix(8), LassoWord({}, word({"a", "b", "d"})));
}

TEST(LassoWord, SameWordComparesDenotations)
{
    const LassoWord x(word({"a"}), word({"b", "a"}));
    const LassoWord y({}, word({"a", "b"}));
    const LassoWord z(word({"a", "b"}), word({"a", "b", "a", "b"}));
    EXPECT_NE(x, y);
    EXPECT_TRUE(same_word(x, y));
    EXPECT_TRUE(same_word(y, z));
    EXPECT_FALSE(same_word(y, LassoWord({}, word({"b", "a"}))));
}

TEST(LassoWord, OccurrenceCount)
{
    const FiniteWord w = word({"a", "b", "a", "c"});
    EXPECT_EQ(occ(w, {Letter("a")}), 2U);
    EXPECT_EQ(occ(w, {Letter("a"), Letter("c")}), 3U);
    EXPECT_EQ(occ(w, {}), 0U);
}

TEST(ParseLasso, RoundTrip)
{
    const LassoWord w = parse_lasso("c b a a b b ; c");
    EXPECT_EQ(w.prefix_length(), 6U);
    EXPECT_EQ(w.loop(), word({"c"}));
    EXPECT_EQ(render(w), "c b a a b b ; c");
    EXPECT_EQ(render(parse_lasso(" ; a b")), "; a b");
    EXPECT_EQ(parse_lasso("$0 t1 ah $1 ; #").prefix().front().name(), "$0");
}

TEST(ParseLasso, Errors)
{
    EXPECT_THROW((void)parse_lasso("a b"), ParseError);
    EXPECT_THROW((void)parse_lasso("a ; b ; c"), ParseError);
    EXPECT_THROW((void)parse_lasso("a ;"), ParseError);
    EXPECT_THROW((void)parse_lasso("a ; U"), ParseError);
    EXPECT_THROW((void)parse_lasso("a ; b%"), ParseError);
}
