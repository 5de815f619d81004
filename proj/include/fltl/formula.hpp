#pragma once

#include <fltl/alphabet.hpp>
#include <fltl/rational.hpp>

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace fltl {

enum class FormulaKind {
    // core
    Atom,
    Next,
    FreqUntil,
    Not,
    And,
    // sugar
    True,
    False,
    Or,
    Implies,
    Eventually,
    Always,
    Until,
    LetterSet,
};

[[nodiscard]] bool is_core_kind(FormulaKind k) noexcept;

/// Immutable fLTL syntax tree with shared structure.
///
/// Equality is structural and hashing is cached per node, so formulas can
/// key hash maps directly. Frequency annotations are validated to lie in
/// [0, 1] at construction.
class Formula {
public:
    static Formula atom(Letter letter);
    static Formula atom(std::string name) { return atom(Letter(std::move(name))); }
    static Formula next(Formula f);
    static Formula freq_until(Rational r, Formula lhs, Formula rhs);
    static Formula negate(Formula f);
    static Formula conj(Formula lhs, Formula rhs);

    static Formula top();
    static Formula bottom();
    static Formula disj(Formula lhs, Formula rhs);
    static Formula implies(Formula lhs, Formula rhs);
    static Formula eventually(Formula f);
    static Formula always(Formula f);
    static Formula until(Formula lhs, Formula rhs);
    static Formula letter_set(std::set<Letter> letters);

    /// Left-nested conjunction; `top()` for an empty list.
    static Formula conj_all(const std::vector<Formula>& fs);
    /// Left-nested disjunction; `bottom()` for an empty list.
    static Formula disj_all(const std::vector<Formula>& fs);
    /// Letter-set disjunction; `bottom()` for an empty set.
    static Formula any_of(const std::set<Letter>& letters);

    [[nodiscard]] FormulaKind kind() const noexcept;
    [[nodiscard]] const Letter& letter() const;             // Atom
    [[nodiscard]] const Rational& frequency() const;        // FreqUntil
    [[nodiscard]] const std::set<Letter>& letters() const;  // LetterSet
    [[nodiscard]] const Formula& lhs() const;               // unary operand or left operand
    [[nodiscard]] const Formula& rhs() const;               // binary right operand
    [[nodiscard]] std::size_t arity() const noexcept;

    [[nodiscard]] std::size_t hash() const noexcept;
    /// Number of nodes in the tree, counting shared subtrees once per occurrence.
    [[nodiscard]] std::size_t size() const noexcept;
    /// Atoms have depth 1.
    [[nodiscard]] std::size_t depth() const noexcept;
    [[nodiscard]] bool is_core(bool allow_true = false) const;

    /// Every letter mentioned by an atom or letter set.
    [[nodiscard]] std::set<Letter> mentioned_letters() const;

    friend bool operator==(const Formula& lhs, const Formula& rhs);

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Formula make(Node node);

    std::shared_ptr<const Node> node_;
};

struct DesugarOptions {
    /// When false, `true` stays a primitive rather than being expanded to the
    /// disjunction of all alphabet letters.
    bool expand_true = true;
};

/// Rewrites every sugared constructor into Atom/Next/FreqUntil/Not/And
/// (plus True when `expand_true` is off). Letters outside `alphabet` raise
/// AlphabetError.
[[nodiscard]] Formula desugar(const Formula& phi, const Alphabet& alphabet, DesugarOptions options = {});

/// Alphabet-free desugaring that keeps `true` primitive.
[[nodiscard]] Formula desugar_keep_true(const Formula& phi);

/// Distinct subformulas of a core formula, children before parents.
[[nodiscard]] std::vector<Formula> subformulas(const Formula& phi);

} // namespace fltl

template <>
struct std::hash<fltl::Formula> {
    std::size_t operator()(const fltl::Formula& f) const noexcept { return f.hash(); }
};
