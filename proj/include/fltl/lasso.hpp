#pragma once

#include <fltl/alphabet.hpp>

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fltl {

using FiniteWord = std::vector<Letter>;

/// Ultimately periodic word u v v v ... with a nonempty loop v.
///
/// No canonical form is imposed: ("", "ab") and ("a", "ba") are different
/// values denoting the same infinite word. Use `same_word` to compare
/// denotations.
class LassoWord {
public:
    /// Throws std::invalid_argument when `loop` is empty.
    LassoWord(FiniteWord prefix, FiniteWord loop);

    [[nodiscard]] const FiniteWord& prefix() const noexcept { return prefix_; }
    [[nodiscard]] const FiniteWord& loop() const noexcept { return loop_; }
    [[nodiscard]] std::size_t prefix_length() const noexcept { return prefix_.size(); }
    [[nodiscard]] std::size_t loop_length() const noexcept { return loop_.size(); }
    /// |u| + |v|: positions below this index are pairwise distinct suffixes.
    [[nodiscard]] std::size_t period_span() const noexcept { return prefix_.size() + loop_.size(); }

    [[nodiscard]] const Letter& letter_at(std::size_t i) const;

    /// Maps any position to its representative in [0, period_span()).
    [[nodiscard]] std::size_t fold(std::size_t i) const noexcept;

    /// A lasso for the suffix starting at position i.
    [[nodiscard]] LassoWord suffix(std::size_t i) const;

    [[nodiscard]] std::set<Letter> letters() const;

    friend bool operator==(const LassoWord&, const LassoWord&) = default;

private:
    FiniteWord prefix_;
    FiniteWord loop_;
};

/// True iff both lassos denote the same infinite word.
[[nodiscard]] bool same_word(const LassoWord& lhs, const LassoWord& rhs);

[[nodiscard]] std::size_t occ(const FiniteWord& w, const std::set<Letter>& letters);

/// Whitespace-separated letter tokens.
[[nodiscard]] FiniteWord parse_finite_word(std::string_view text);

/// `tok ... ; tok ...`, the segment after `;` being the (nonempty) loop.
/// Throws ParseError with a byte offset.
[[nodiscard]] LassoWord parse_lasso(std::string_view text);

[[nodiscard]] std::string render(const FiniteWord& w);
[[nodiscard]] std::string render(const LassoWord& w);

} // namespace fltl
