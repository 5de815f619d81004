#pragma once

#include <fltl/alphabet.hpp>
#include <fltl/formula.hpp>

#include <string>
#include <string_view>

namespace fltl {

/// Parses the formula grammar
///
///     phi ::= true | false | ident | [ident+] | X phi | F phi | G phi | !phi
///           | phi U phi | phi U{p/q} phi | phi & phi | phi | phi | phi -> phi | (phi)
///
/// with unary operators binding tightest, then the right-associative until
/// operators, then `&`, then `|`, then the right-associative `->`. Throws ParseError (with byte offset) on
/// malformed input or a frequency outside [0, 1], AlphabetError on letters
/// missing from `alphabet`.
[[nodiscard]] Formula parse_formula(std::string_view text, const Alphabet& alphabet);

/// Same grammar without alphabet checking.
[[nodiscard]] Formula parse_formula(std::string_view text);

/// Minimal-parenthesis rendering; `parse_formula(render(f)) == f`.
[[nodiscard]] std::string render(const Formula& phi);

} // namespace fltl
