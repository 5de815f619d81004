#pragma once

#include <fltl/alphabet.hpp>
#include <fltl/formula.hpp>
#include <fltl/lasso.hpp>
#include <fltl/rational.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace fltl {

/// Does some j >= 0 exist with psi at start+j and
/// #{start <= k < start+j : phi at k} >= r * j ?
///
/// Rows are sat-table rows of one lasso word: entry i < prefix_length is
/// position i, entry i >= prefix_length stands for every position congruent
/// to i modulo loop_length.
struct FreqWitnessQuery {
    std::size_t start = 0;
    std::span<const std::uint8_t> phi_row;
    std::span<const std::uint8_t> psi_row;
    Rational r;
    std::size_t prefix_length = 0;
    std::size_t loop_length = 1;
};

struct UntilWitness {
    std::size_t j = 0;        // offset from the start position
    std::int64_t count = 0;   // phi-positions in [start, start + j)

    friend bool operator==(const UntilWitness&, const UntilWitness&) = default;
};

[[nodiscard]] bool freq_until_decide(const FreqWitnessQuery& q);

/// Smallest witness offset j, if any exists.
[[nodiscard]] std::optional<UntilWitness> freq_until_witness(const FreqWitnessQuery& q);

/// Satisfaction of every subformula at every distinct suffix of a lasso word.
class SatTable {
public:
    SatTable(std::vector<Formula> formulas, std::vector<std::uint8_t> cells, std::size_t prefix_length,
             std::size_t loop_length);

    [[nodiscard]] std::size_t width() const noexcept { return prefix_length_ + loop_length_; }
    [[nodiscard]] std::size_t prefix_length() const noexcept { return prefix_length_; }
    [[nodiscard]] std::size_t loop_length() const noexcept { return loop_length_; }
    [[nodiscard]] const std::vector<Formula>& formulas() const noexcept { return formulas_; }

    /// Sugared formulas are looked up through their desugaring.
    [[nodiscard]] bool contains(const Formula& f) const
    {
        return index_.contains(f) || (!f.is_core(true) && index_.contains(desugar_keep_true(f)));
    }
    /// Throws std::out_of_range when `f` is not a subformula of the table's root.
    [[nodiscard]] std::span<const std::uint8_t> row(const Formula& f) const;
    /// Satisfaction at any position; positions past the table are folded into the loop.
    [[nodiscard]] bool holds(const Formula& f, std::size_t position) const;

private:
    std::vector<Formula> formulas_;
    std::unordered_map<Formula, std::size_t> index_;
    std::vector<std::uint8_t> cells_;
    std::size_t prefix_length_;
    std::size_t loop_length_;
};

/// A formula compiled once for repeated evaluation over many words.
///
/// Sugar is rewritten to core form with `true` kept primitive, and
/// structurally equal subformulas share a single row.
class EvaluationPlan {
public:
    explicit EvaluationPlan(const Formula& phi);
    /// Additionally rejects letters outside `alphabet`, both in the formula
    /// and in every evaluated word.
    EvaluationPlan(const Formula& phi, const Alphabet& alphabet);

    [[nodiscard]] const Formula& core() const noexcept { return core_; }
    [[nodiscard]] std::size_t node_count() const noexcept { return nodes_.size(); }

    [[nodiscard]] bool models(const LassoWord& w) const;
    [[nodiscard]] SatTable table(const LassoWord& w) const;

private:
    struct Node {
        FormulaKind kind = FormulaKind::Atom;
        std::size_t lhs = 0;
        std::size_t rhs = 0;
        Letter letter;
        Rational r;
    };

    void fill(const LassoWord& w, std::vector<std::uint8_t>& cells) const;
    void check_word(const LassoWord& w) const;

    Formula core_;
    std::vector<Formula> order_;
    std::vector<Node> nodes_;
    std::optional<Alphabet> alphabet_;
};

[[nodiscard]] SatTable sat_table(const LassoWord& w, const Formula& phi);
[[nodiscard]] bool models(const LassoWord& w, const Formula& phi);
[[nodiscard]] bool models(const LassoWord& w, const Formula& phi, const Alphabet& alphabet);

/// #{start <= k < start + j : phi at k} / j, for j > 0.
[[nodiscard]] Rational observed_frequency(const LassoWord& w, const Formula& phi, std::size_t start, std::size_t j);

struct UntilReport {
    Formula until;
    std::optional<UntilWitness> witness;
};

/// Minimal witness at position 0 for every frequency-until subformula of
/// the desugared formula, in bottom-up order.
[[nodiscard]] std::vector<UntilReport> until_witnesses(const LassoWord& w, const Formula& phi);

/// Second, independently coded decision procedure used as a test oracle.
/// Interprets every constructor (sugar included) directly from its
/// definition and searches frequency-until witnesses up to a completeness
/// bound instead of reasoning about the periodic tail. Desk-scale only.
[[nodiscard]] bool brute_force_models(const LassoWord& w, const Formula& phi);

/// Bound used by `brute_force_models`: with T the transient from `start`
/// into the loop plus one full loop, B = T + |v| * (den(r) * T + 1).
[[nodiscard]] std::size_t brute_force_bound(const LassoWord& w, std::size_t start, const Rational& r);

} // namespace fltl
