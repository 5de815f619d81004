#pragma once

#include <compare>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace fltl {

class Letter {
public:
    Letter() = default;
    explicit Letter(std::string name) : name_(std::move(name)) {}

    [[nodiscard]] const std::string& name() const noexcept { return name_; }

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;

private:
    std::string name_;
};

/// Nonempty ordered set of letters. Order is declaration order.
class Alphabet {
public:
    /// Throws AlphabetError on an empty list or duplicate names.
    explicit Alphabet(std::vector<Letter> letters);
    Alphabet(std::initializer_list<const char*> names);

    [[nodiscard]] const std::vector<Letter>& letters() const noexcept { return letters_; }
    [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
    [[nodiscard]] bool contains(const Letter& l) const { return index_.contains(l.name()); }
    [[nodiscard]] std::optional<std::size_t> index_of(const Letter& l) const;

private:
    std::vector<Letter> letters_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Identifier syntax shared by formulas, words and machine files:
/// `[A-Za-z_][A-Za-z0-9_]*` or one of the reserved tokens `#`, `$0`, `$1`, `$z`.
[[nodiscard]] bool is_letter_token(std::string_view text);

/// Words reserved by the formula grammar; they cannot name letters.
[[nodiscard]] bool is_keyword(std::string_view text);

} // namespace fltl

template <>
struct std::hash<fltl::Letter> {
    std::size_t operator()(const fltl::Letter& l) const noexcept { return std::hash<std::string>{}(l.name()); }
};
