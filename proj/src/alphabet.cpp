#include <fltl/alphabet.hpp>
#include <fltl/error.hpp>

#include <array>
#include <cctype>

namespace fltl {

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters))
{
    if (letters_.empty()) {
        throw AlphabetError("alphabet must be nonempty");
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (!index_.emplace(letters_[i].name(), i).second) {
            throw AlphabetError("duplicate letter '" + letters_[i].name() + "' in alphabet");
        }
    }
}

Alphabet::Alphabet(std::initializer_list<const char*> names)
    : Alphabet([&] {
          std::vector<Letter> ls;
          for (const char* n : names) ls.emplace_back(n);
          return ls;
      }())
{
}

std::optional<std::size_t> Alphabet::index_of(const Letter& l) const
{
    if (auto it = index_.find(l.name()); it != index_.end()) return it->second;
    return std::nullopt;
}

bool is_letter_token(std::string_view text)
{
    if (text == "#" || text == "$0" || text == "$1" || text == "$z") return true;
    if (text.empty()) return false;
    const auto head = static_cast<unsigned char>(text.front());
    if (!(std::isalpha(head) || head == '_')) return false;
    for (char c : text.substr(1)) {
        const auto u = static_cast<unsigned char>(c);
        if (!(std::isalnum(u) || u == '_')) return false;
    }
    return true;
}

bool is_keyword(std::string_view text)
{
    static constexpr std::array<std::string_view, 6> keywords{"true", "false", "X", "F", "G", "U"};
    for (auto k : keywords) {
        if (text == k) return true;
    }
    return false;
}

} // namespace fltl
