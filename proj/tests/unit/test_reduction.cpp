#include <fltl/campaigns.hpp>
#include <fltl/error.hpp>
#include <fltl/evaluator.hpp>
#include <fltl/generators.hpp>
#include <fltl/parser.hpp>
#include <fltl/reduction.hpp>

#include <gtest/gtest.h>

using namespace fltl;
using namespace fltl::reduction;
using minsky::CounterConfig;
using minsky::MinskyMachine;
using minsky::Operation;

namespace {

const char* const kFig1Word =
    "$0 t1 ah $1 a t2 ah ah $0 a a t3 ah ah $z a a t4 ah ah bh $1 a a b t5 ah bh $0 a b t6 ah bh bh $1 ; #";

MinskyMachine one_increment()
{
    return MinskyMachine({"l0", "l1", "l2"},
                         {{"t1", "l0", "l1", Operation::Inc1}, {"t2", "l1", "l2", Operation::Inc2}}, "t1", "t2");
}

std::vector<std::size_t> positions_of(const LassoWord& w, bool (*pred)(const Letter&))
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w.prefix_length(); ++i) {
        if (pred(w.prefix()[i])) out.push_back(i);
    }
    return out;
}

bool is_sep(const Letter& l) { return l == kSep0 || l == kSep1 || l == kSepZero; }
bool is_transition(const Letter& l) { return l.name().size() == 2 && l.name()[0] == 't'; }

} // namespace

TEST(Alphabet, ReservedLettersAndTransitions)
{
    const Alphabet sigma = build_alphabet(gen::reference_machine());
    EXPECT_EQ(sigma.size(), 14U);
    EXPECT_TRUE(sigma.contains(Letter("t4")));
    EXPECT_TRUE(sigma.contains(kSepZero));
    EXPECT_EQ(reserved_letters().size(), 8U);
}

TEST(Alphabet, ClashingTransitionIdsAreRejected)
{
    const auto two = [](const char* first) {
        return MinskyMachine({"l0", "l1", "l2"},
                             {{first, "l0", "l1", Operation::Inc1}, {"t2", "l1", "l2", Operation::Inc1}}, first, "t2");
    };
    EXPECT_THROW((void)build_alphabet(two("a")), ReductionError);
    EXPECT_THROW((void)build_alphabet(two("U")), ReductionError);
    EXPECT_NO_THROW((void)build_alphabet(two("t1")));
    const MinskyMachine invalid({"l0", "l1"}, {{"t1", "l0", "l1", Operation::Zero1}}, "t1", "t1");
    EXPECT_THROW((void)build_alphabet(invalid), MachineError);
}

TEST(Partition, ClassesCoverTheAlphabetWithoutPad)
{
    const auto machine = gen::reference_machine();
    const PartitionTable table(machine);
    EXPECT_EQ(table.a_class(Type::A), (std::set<Letter>{kA, Letter("t1"), Letter("t2")}));
    EXPECT_EQ(table.a_class(Type::AHat), (std::set<Letter>{kAHat, Letter("t5")}));
    EXPECT_EQ(table.a_class(Type::B), (std::set<Letter>{kB, Letter("t4"), Letter("t6")}));
    EXPECT_EQ(table.a_class(Type::Zero), (std::set<Letter>{Letter("t3")}));
    EXPECT_EQ(table.a_class(Type::ZeroBar), (std::set<Letter>{kSepZero}));
    EXPECT_EQ(table.b_class(Type::Sep1), (std::set<Letter>{kSep0, kSep1, kSepZero}));
    EXPECT_THROW((void)table.b_class(Type::Zero), std::out_of_range);
    EXPECT_EQ(table.letters().size(), 13U);
    EXPECT_FALSE(table.a_type_of(kPad).has_value());
    EXPECT_EQ(table.b_type_of(Letter("t3")), Type::Sep0);
}

TEST(Partition, TuplesAndComplements)
{
    EXPECT_EQ(PartitionTable::tuples_a().size(), 16U);
    EXPECT_EQ(PartitionTable::tuples_b().size(), 8U);
    for (Type t : kTypesA) EXPECT_EQ(complement(complement(t)), t);
    EXPECT_EQ(complement(Type::Sep0), Type::Sep1);
    EXPECT_EQ(to_string(Type::ZeroBar), "zerobar");
}

TEST(Encode, OneIncrement)
{
    const auto machine = one_increment();
    const auto pi = minsky::run(machine, {"t1", "t2"});
    EXPECT_EQ(render(encode(pi, machine).word), "$0 t1 ah $1 a t2 ah bh $0 ; #");
}

TEST(Encode, ReferenceMachineLayout)
{
    const auto sample = campaigns::reference_sample();
    const LassoWord& w = sample.encoding.word;
    EXPECT_EQ(render(w), kFig1Word);
    EXPECT_EQ(w.prefix_length(), 36U);
    EXPECT_EQ(positions_of(w, is_sep), (std::vector<std::size_t>{0, 3, 8, 14, 21, 28, 35}));
    EXPECT_EQ(positions_of(w, is_transition), (std::vector<std::size_t>{1, 5, 11, 17, 25, 31}));
    EXPECT_EQ(sample.encoding.segments.separator_positions, (std::vector<std::size_t>{0, 3, 8, 14, 21, 28, 35}));
    EXPECT_EQ(sample.encoding.segments.transition_positions, (std::vector<std::size_t>{1, 5, 11, 17, 25, 31}));
}

TEST(Encode, RejectsForeignComputations)
{
    const auto machine = gen::reference_machine();
    auto pi = minsky::run(machine, {"t1", "t2"});
    EXPECT_THROW((void)encode(pi, machine), ReductionError);
    pi = minsky::run(machine, {"t1", "t2", "t3", "t4", "t5", "t6"});
    pi.configs[2] = {5, 5};
    EXPECT_THROW((void)encode(pi, machine), ReductionError);
}

TEST(Segment, Shapes)
{
    const auto machine = gen::reference_machine();
    EXPECT_TRUE(segment(parse_lasso(kFig1Word), machine).has_value());
    EXPECT_TRUE(segment(parse_lasso("$0 t1 ah $1 # # ; #"), machine).has_value());
    EXPECT_FALSE(segment(parse_lasso("$0 t1 ah $1 ; # a"), machine).has_value());
    EXPECT_FALSE(segment(parse_lasso("$0 t1 ah a $1 ; #"), machine).has_value());
    EXPECT_FALSE(segment(parse_lasso("$0 ; #"), machine).has_value());
    EXPECT_FALSE(segment(parse_lasso("t1 ah $1 ; #"), machine).has_value());
    EXPECT_FALSE(segment(parse_lasso("$0 t1 ah $1 # a t2 $0 ; #"), machine).has_value());
}

TEST(Lsymb, MembershipConditions)
{
    const auto machine = one_increment();
    EXPECT_TRUE(in_Lsymb(parse_lasso("$0 t1 ah $1 a t2 ah bh $0 ; #"), machine));
    // carryover blocks may disagree with the hatted block before them
    EXPECT_TRUE(in_Lsymb(parse_lasso("$0 t1 ah $1 a a b t2 bh $0 ; #"), machine));
    // nonempty first block
    EXPECT_FALSE(in_Lsymb(parse_lasso("$0 a t1 ah $1 a t2 ah bh $0 ; #"), machine));
    // does not end with the final transition
    EXPECT_FALSE(in_Lsymb(parse_lasso("$0 t1 ah $1 ; #"), machine));
    // t1 cannot follow t1
    EXPECT_FALSE(in_Lsymb(parse_lasso("$0 t1 ah $1 a t1 ah $0 a t2 ah bh $1 ; #"), machine));
    // separators out of order
    EXPECT_FALSE(in_Lsymb(parse_lasso("$1 t1 ah $1 a t2 ah bh $0 ; #"), machine));
    EXPECT_FALSE(in_Lsymb(parse_lasso("$0 t1 ah $0 a t2 ah bh $1 ; #"), machine));
}

TEST(Lsymb, ZeroTestsEmptyTheTestedCounter)
{
    const auto machine = gen::reference_machine();
    const std::string ok = "$0 t1 ah $1 a t2 ah ah $0 a a t3 ah ah $z a a t4 ah ah bh $1 a a b t5 ah bh $0 a b t6 ah bh bh $1 ; #";
    EXPECT_TRUE(in_Lsymb(parse_lasso(ok), machine));
    const std::string bad_block = "$0 t1 ah $1 a t2 ah ah $0 a a t3 ah ah bh $z a a t4 ah ah bh $1 a a b t5 ah bh $0 a b t6 ah bh bh $1 ; #";
    EXPECT_FALSE(in_Lsymb(parse_lasso(bad_block), machine));
    const std::string bad_sep = "$0 t1 ah $1 a t2 ah ah $0 a a t3 ah ah $1 a a t4 ah ah bh $0 a a b t5 ah bh $1 a b t6 ah bh bh $0 ; #";
    EXPECT_FALSE(in_Lsymb(parse_lasso(bad_sep), machine));
}

TEST(Formulas, ShortcutsOnSeparators)
{
    const LassoWord w = parse_lasso("$0 t1 ah $1 a t2 ah bh $0 ; #");
    const Formula last0 = last_separator(0);
    const Formula next1 = next_separator(1);
    const SatTable t0 = sat_table(w, last0);
    const SatTable t1 = sat_table(w, next1);
    EXPECT_FALSE(t0.holds(last0, 0));
    EXPECT_TRUE(t0.holds(last0, 8));
    EXPECT_TRUE(t1.holds(next1, 0));
    EXPECT_TRUE(t1.holds(next1, 2));
    EXPECT_FALSE(t1.holds(next1, 3));
}

TEST(Formulas, EncodingsAreModels)
{
    const auto machine = one_increment();
    const Alphabet sigma = build_alphabet(machine);
    const LassoWord good = parse_lasso("$0 t1 ah $1 a t2 ah bh $0 ; #");
    EXPECT_TRUE(models(good, phi_symb(machine), sigma));
    EXPECT_TRUE(models(good, phi_count(machine), sigma));
    EXPECT_TRUE(models(good, reduce(machine), sigma));
}

TEST(Formulas, CountRejectsWrongBlocks)
{
    const auto machine = one_increment();
    const LassoWord wrong_update = parse_lasso("$0 t1 ah ah $1 a t2 ah bh $0 ; #");
    const LassoWord wrong_carry = parse_lasso("$0 t1 ah $1 a a t2 ah bh $0 ; #");
    EXPECT_TRUE(models(wrong_update, phi_symb(machine)));
    EXPECT_FALSE(models(wrong_update, phi_count(machine)));
    EXPECT_TRUE(models(wrong_carry, phi_symb(machine)));
    EXPECT_FALSE(models(wrong_carry, phi_count(machine)));
}

TEST(Decode, ValidWord)
{
    const auto machine = gen::reference_machine();
    const auto result = decode(parse_lasso(kFig1Word), machine);
    ASSERT_TRUE(result.valid());
    EXPECT_EQ(result.computation->configs.back(), (CounterConfig{1, 2}));
    EXPECT_FALSE(result.violation.has_value());
}

TEST(Decode, CarryoverViolation)
{
    const auto machine = gen::reference_machine();
    const std::string w =
        "$0 t1 ah $1 a a t2 ah ah $0 a a t3 ah ah $z a a t4 ah ah bh $1 a a b t5 ah bh $0 a b t6 ah bh bh $1 ; #";
    const auto result = decode(parse_lasso(w), machine);
    ASSERT_TRUE(result.violation.has_value());
    EXPECT_EQ(result.violation->to_string(), "kind=carryover i=1 expected=(1,0) actual=(2,0)");
    EXPECT_FALSE(result.valid());
}

TEST(Decode, UpdateViolationIsCheckedFirst)
{
    const auto machine = one_increment();
    // both v_1 and u_1 are off; the update at step 1 is reported
    const auto result = decode(parse_lasso("$0 t1 ah ah $1 a t2 ah bh $0 ; #"), machine);
    ASSERT_TRUE(result.violation.has_value());
    EXPECT_EQ(result.violation->to_string(), "kind=update i=1 expected=(1,0) actual=(2,0)");
}

TEST(Decode, BlockedStep)
{
    const MinskyMachine machine({"l0", "l1", "l2"},
                                {{"t1", "l0", "l1", Operation::Inc1}, {"t2", "l1", "l2", Operation::Dec2}}, "t1", "t2");
    const auto result = decode(parse_lasso("$0 t1 ah $1 a t2 ah $0 ; #"), machine);
    ASSERT_TRUE(result.violation.has_value());
    EXPECT_EQ(result.violation->to_string(), "kind=update i=2 expected=blocked actual=(1,0)");
}

TEST(Decode, OutsideLsymbThrows)
{
    EXPECT_THROW((void)decode(parse_lasso("$0 t1 ; #"), one_increment()), ReductionError);
}

TEST(Balance, ComplementsOfABalancedWord)
{
    const PartitionTable table(gen::reference_machine());
    const auto report = balance_check_a(parse_finite_word("a ah $0 $1 t3 $z b bh"), table);
    EXPECT_TRUE(report.hypothesis);
    EXPECT_TRUE(report.complements_equal);
    const auto skewed = balance_check_a(parse_finite_word("a a ah"), table);
    EXPECT_FALSE(skewed.hypothesis);
    EXPECT_FALSE(skewed.complements_equal);
    EXPECT_THROW((void)balance_check_a(parse_finite_word("a #"), table), std::invalid_argument);
    EXPECT_EQ(balance_check_b(parse_finite_word("t1 $0 a ah b bh"), table).count(Type::Sep0), 1U);
}

TEST(Campaigns, SmallMachines)
{
    const auto samples = campaigns::sample_computations(8, 21);
    ASSERT_EQ(samples.size(), 8U);
    for (const auto& outcome : {campaigns::check_encodings_are_models(samples),
                                campaigns::check_decode_round_trip(samples),
                                campaigns::check_symb_oracle(samples, 200, 200, 20, 21),
                                campaigns::check_mutation_kill(samples),
                                campaigns::check_balance_exhaustive(campaigns::inc_dec_machine(), 4),
                                campaigns::check_count_enumeration(campaigns::two_transition_machine(), 13)}) {
        EXPECT_TRUE(outcome.passed()) << outcome.summary();
        EXPECT_GT(outcome.checked, 0U) << outcome.name;
    }
}

TEST(Campaigns, EnumerationSizes)
{
    std::size_t n = 0;
    campaigns::enumerate_lsymb(campaigns::two_transition_machine(), 7, [&](const LassoWord&) { ++n; });
    // fixed letters: $0 t1 $1 t2 $0; two free letters over six counter slots
    EXPECT_EQ(n, 28U);
}
