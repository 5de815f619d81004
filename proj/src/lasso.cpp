#include <fltl/error.hpp>
#include <fltl/lasso.hpp>

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace fltl {

LassoWord::LassoWord(FiniteWord prefix, FiniteWord loop) : prefix_(std::move(prefix)), loop_(std::move(loop))
{
    if (loop_.empty()) {
        throw std::invalid_argument("lasso loop must be nonempty");
    }
}

const Letter& LassoWord::letter_at(std::size_t i) const
{
    if (i < prefix_.size()) return prefix_[i];
    return loop_[(i - prefix_.size()) % loop_.size()];
}

std::size_t LassoWord::fold(std::size_t i) const noexcept
{
    if (i < prefix_.size()) return i;
    return prefix_.size() + (i - prefix_.size()) % loop_.size();
}

LassoWord LassoWord::suffix(std::size_t i) const
{
    if (i <= prefix_.size()) {
        return {FiniteWord(prefix_.begin() + static_cast<std::ptrdiff_t>(i), prefix_.end()), loop_};
    }
    const std::size_t shift = (i - prefix_.size()) % loop_.size();
    FiniteWord rotated(loop_.begin() + static_cast<std::ptrdiff_t>(shift), loop_.end());
    rotated.insert(rotated.end(), loop_.begin(), loop_.begin() + static_cast<std::ptrdiff_t>(shift));
    return {FiniteWord{}, std::move(rotated)};
}

std::set<Letter> LassoWord::letters() const
{
    std::set<Letter> out(prefix_.begin(), prefix_.end());
    out.insert(loop_.begin(), loop_.end());
    return out;
}

bool same_word(const LassoWord& lhs, const LassoWord& rhs)
{
    const std::size_t horizon = lhs.prefix_length() + rhs.prefix_length() +
                                std::lcm(lhs.loop_length(), rhs.loop_length());
    for (std::size_t i = 0; i < horizon; ++i) {
        if (lhs.letter_at(i) != rhs.letter_at(i)) return false;
    }
    return true;
}

std::size_t occ(const FiniteWord& w, const std::set<Letter>& letters)
{
    std::size_t n = 0;
    for (const auto& l : w) {
        if (letters.contains(l)) ++n;
    }
    return n;
}

namespace {

FiniteWord tokenize(std::string_view text, std::size_t base)
{
    FiniteWord out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t end = i;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        const std::string_view tok = text.substr(i, end - i);
        if (!is_letter_token(tok) || is_keyword(tok)) {
            throw ParseError("invalid letter token '" + std::string(tok) + "'", base + i);
        }
        out.emplace_back(std::string(tok));
        i = end;
    }
    return out;
}

} // namespace

FiniteWord parse_finite_word(std::string_view text)
{
    return tokenize(text, 0);
}

LassoWord parse_lasso(std::string_view text)
{
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) throw ParseError("missing ';' between prefix and loop", text.size());
    if (text.find(';', semi + 1) != std::string_view::npos) {
        throw ParseError("more than one ';'", text.find(';', semi + 1));
    }
    FiniteWord prefix = tokenize(text.substr(0, semi), 0);
    FiniteWord loop = tokenize(text.substr(semi + 1), semi + 1);
    if (loop.empty()) throw ParseError("loop must be nonempty", semi + 1);
    return {std::move(prefix), std::move(loop)};
}

std::string render(const FiniteWord& w)
{
    std::string out;
    for (const auto& l : w) {
        if (!out.empty()) out += ' ';
        out += l.name();
    }
    return out;
}

std::string render(const LassoWord& w)
{
    std::string out = render(w.prefix());
    out += out.empty() ? "; " : " ; ";
    out += render(w.loop());
    return out;
}

} // namespace fltl
