#pragma once

#include <fltl/alphabet.hpp>
#include <fltl/formula.hpp>
#include <fltl/lasso.hpp>
#include <fltl/minsky.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

/// Encoding of two-counter machine computations as fLTL models.
///
/// A successful computation (0,0) -t1-> C1 -t2-> ... -tk-> Ck becomes the word
///
///     $0 t1 ah^m1 bh^n1 s1 a^m1 b^n1 t2 ... tk ah^mk bh^nk sk #^w
///
/// where the separator s_i is `$z` after a zero test and otherwise
/// alternates `$1`, `$0`, `$1`, ... over the remaining transitions.
/// `phi_symb` accepts exactly the words of this shape (carryover blocks may
/// differ from the preceding hatted block); `phi_count` uses frequency-until
/// to force every hatted block to follow from the previous plain block by
/// the transition's operation and every plain block to copy the previous
/// hatted block.
namespace fltl::reduction {

inline const Letter kA{"a"};
inline const Letter kB{"b"};
inline const Letter kAHat{"ah"};
inline const Letter kBHat{"bh"};
inline const Letter kSep0{"$0"};
inline const Letter kSep1{"$1"};
inline const Letter kSepZero{"$z"};
inline const Letter kPad{"#"};

/// The eight letters every reduction alphabet contains besides the transitions.
[[nodiscard]] const std::vector<Letter>& reserved_letters();

class ReductionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {a, b, ah, bh} + transition ids + {$0, $1, $z, #}. Throws MachineError if
/// the machine is not valid and ReductionError if a transition id clashes
/// with a reserved token or cannot be written as a letter.
[[nodiscard]] Alphabet build_alphabet(const minsky::MinskyMachine& machine);

/// Letter classes. The first six index the carryover partition; all eight
/// index the counter-update partition.
enum class Type { A, AHat, B, BHat, Sep0, Sep1, Zero, ZeroBar };

[[nodiscard]] Type complement(Type t) noexcept;
[[nodiscard]] std::string_view to_string(Type t) noexcept;

inline constexpr std::array<Type, 8> kTypesA{Type::A, Type::AHat, Type::B,    Type::BHat,
                                             Type::Sep0, Type::Sep1, Type::Zero, Type::ZeroBar};
inline constexpr std::array<Type, 6> kTypesB{Type::A, Type::AHat, Type::B, Type::BHat, Type::Sep0, Type::Sep1};

/// Two partitions of the alphabet without `#`.
///
/// Update classes: A_a = {a} + inc1-transitions, A_ah = {ah} + dec1,
/// A_b = {b} + inc2, A_bh = {bh} + dec2, A_0 = {$0}, A_1 = {$1},
/// A_zero = zero tests, A_zerobar = {$z}.
/// Carryover classes: B_a = {a}, B_ah = {ah}, B_b = {b}, B_bh = {bh},
/// B_0 = transitions, B_1 = separators.
class PartitionTable {
public:
    explicit PartitionTable(const minsky::MinskyMachine& machine);

    [[nodiscard]] const std::set<Letter>& a_class(Type t) const;
    /// Throws std::out_of_range for Zero/ZeroBar.
    [[nodiscard]] const std::set<Letter>& b_class(Type t) const;

    [[nodiscard]] std::optional<Type> a_type_of(const Letter& l) const;
    [[nodiscard]] std::optional<Type> b_type_of(const Letter& l) const;

    /// {a,ah} x {b,bh} x {0,1} x {zero,zerobar}, lexicographic.
    [[nodiscard]] static const std::vector<std::array<Type, 4>>& tuples_a();
    /// {a,ah} x {b,bh} x {0,1}, lexicographic.
    [[nodiscard]] static const std::vector<std::array<Type, 3>>& tuples_b();

    [[nodiscard]] const std::set<Letter>& letters() const noexcept { return letters_; }

private:
    std::array<std::set<Letter>, 8> a_;
    std::array<std::set<Letter>, 6> b_;
    std::set<Letter> letters_;
};

/// Shape of L_symb together with (P1)-(P5).
[[nodiscard]] Formula phi_symb(const minsky::MinskyMachine& machine);
/// G(($ & next_0 -> Phi_0) & ($ & next_1 -> Phi_1) & (T & !t_final -> Psi)).
[[nodiscard]] Formula phi_count(const minsky::MinskyMachine& machine);
[[nodiscard]] Formula reduce(const minsky::MinskyMachine& machine);

/// Holds exactly at the last occurrence of `$beta`.
[[nodiscard]] Formula last_separator(int beta);
/// Holds where the next separator from {$0, $1} exists and is `$beta`.
[[nodiscard]] Formula next_separator(int beta);

/// Block structure of a word of the shape
/// `sep (a* b* t ah* bh* sep)+ #^w`.
struct Segmentation {
    std::vector<Letter> separators;              // sigma_0 .. sigma_k
    std::vector<std::size_t> separator_positions;
    std::vector<std::string> transitions;        // t_1 .. t_k
    std::vector<std::size_t> transition_positions;
    std::vector<minsky::CounterConfig> plain;    // u_0 .. u_{k-1}: a/b blocks before each transition
    std::vector<minsky::CounterConfig> hatted;   // v_1 .. v_k: ah/bh blocks after each transition

    [[nodiscard]] std::size_t length() const noexcept { return transitions.size(); }

    friend bool operator==(const Segmentation&, const Segmentation&) = default;
};

/// Splits a word into blocks, or std::nullopt if it does not have the
/// separator/block shape (loop and trailing prefix must be all `#`).
/// Transition letters are recognised by the machine's ids; no (P1)-(P5)
/// condition is checked.
[[nodiscard]] std::optional<Segmentation> segment(const LassoWord& w, const minsky::MinskyMachine& machine);

/// Direct membership test for L_symb, independent of the evaluator.
[[nodiscard]] bool in_Lsymb(const LassoWord& w, const minsky::MinskyMachine& machine);

struct EncodedComputation {
    LassoWord word;
    Segmentation segments;
};

/// Throws ReductionError unless `pi` is a successful computation of `machine`.
[[nodiscard]] EncodedComputation encode(const minsky::Computation& pi, const minsky::MinskyMachine& machine);

struct Violation {
    enum class Kind { Carryover, Update };
    Kind kind;
    std::size_t index;                                 // i, 1-based
    std::optional<minsky::CounterConfig> expected;     // nullopt: the step is blocked
    minsky::CounterConfig actual;

    /// `kind=carryover i=1 expected=(1,0) actual=(2,0)`
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct DecodeResult {
    Segmentation segments;
    std::optional<minsky::Computation> computation;  // set iff no violation
    std::optional<Violation> violation;

    [[nodiscard]] bool valid() const noexcept { return computation.has_value(); }
};

/// Reads the computation back out of a word in L_symb. Checks, for i = 1..k,
/// first the update u_{i-1} -t_i-> v_i and then the carryover v_i = u_i,
/// stopping at the first failure. Throws ReductionError if w is not in L_symb.
[[nodiscard]] DecodeResult decode(const LassoWord& w, const minsky::MinskyMachine& machine);

template <std::size_t N>
struct BalanceReport {
    bool hypothesis = false;                // every tuple sum >= |w|/2
    std::array<std::size_t, N> counts{};    // occurrences per class, indexed like kTypesA / kTypesB
    bool complements_equal = false;         // occ(class) == occ(complement) for every class

    [[nodiscard]] std::size_t count(Type t) const { return counts.at(static_cast<std::size_t>(t)); }
};

/// Counts for the counter-update partition. Letters outside it (`#`) throw
/// std::invalid_argument.
[[nodiscard]] BalanceReport<8> balance_check_a(const FiniteWord& w, const PartitionTable& table);
/// Counts for the carryover partition.
[[nodiscard]] BalanceReport<6> balance_check_b(const FiniteWord& w, const PartitionTable& table);

} // namespace fltl::reduction
