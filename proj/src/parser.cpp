#include <fltl/error.hpp>
#include <fltl/parser.hpp>

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace fltl {

namespace {

enum class Tok { End, Ident, True, False, LBracket, RBracket, LParen, RParen, Next, Eventually, Always, Not, Until, FreqUntil, And, Or, Implies };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    Rational frequency;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        Token t;
        t.pos = pos_;
        if (pos_ >= text_.size()) return t;
        const char c = text_[pos_];
        switch (c) {
        case '[': ++pos_; t.kind = Tok::LBracket; return t;
        case ']': ++pos_; t.kind = Tok::RBracket; return t;
        case '(': ++pos_; t.kind = Tok::LParen; return t;
        case ')': ++pos_; t.kind = Tok::RParen; return t;
        case '!': ++pos_; t.kind = Tok::Not; return t;
        case '&': ++pos_; t.kind = Tok::And; return t;
        case '|': ++pos_; t.kind = Tok::Or; return t;
        case '-':
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
                pos_ += 2;
                t.kind = Tok::Implies;
                return t;
            }
            throw ParseError("expected '->'", pos_);
        case '#':
            ++pos_;
            t.kind = Tok::Ident;
            t.text = "#";
            return t;
        case '$':
            if (pos_ + 1 < text_.size() && (text_[pos_ + 1] == '0' || text_[pos_ + 1] == '1' || text_[pos_ + 1] == 'z')) {
                t.kind = Tok::Ident;
                t.text = std::string(text_.substr(pos_, 2));
                pos_ += 2;
                return t;
            }
            throw ParseError("unknown token '$'", pos_);
        default:
            break;
        }
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) {
            throw ParseError(std::string("unexpected character '") + c + "'", pos_);
        }
        std::size_t end = pos_ + 1;
        while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
        const std::string_view word = text_.substr(pos_, end - pos_);
        pos_ = end;
        if (word == "true") {
            t.kind = Tok::True;
        } else if (word == "false") {
            t.kind = Tok::False;
        } else if (word == "X") {
            t.kind = Tok::Next;
        } else if (word == "F") {
            t.kind = Tok::Eventually;
        } else if (word == "G") {
            t.kind = Tok::Always;
        } else if (word == "U") {
            t.kind = Tok::Until;
            if (pos_ < text_.size() && text_[pos_] == '{') {
                t.kind = Tok::FreqUntil;
                t.frequency = read_frequency(t.pos);
            }
        } else {
            t.kind = Tok::Ident;
            t.text = std::string(word);
        }
        return t;
    }

private:
    std::int64_t read_int()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc() || pos_ == start) throw ParseError("expected integer", start);
        return value;
    }

    void expect(char c)
    {
        if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    Rational read_frequency(std::size_t op_pos)
    {
        expect('{');
        const std::int64_t num = read_int();
        expect('/');
        const std::int64_t den = read_int();
        expect('}');
        if (den == 0) throw ParseError("zero denominator in frequency", op_pos);
        Rational r(num, den);
        if (!r.in_unit_interval()) throw ParseError("frequency " + r.to_string() + " out of range [0,1]", op_pos);
        return r;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    Parser(std::string_view text, const Alphabet* alphabet) : lexer_(text), alphabet_(alphabet) { advance(); }

    Formula parse()
    {
        Formula f = parse_implies();
        if (cur_.kind != Tok::End) throw ParseError("trailing input", cur_.pos);
        return f;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    Formula parse_implies()
    {
        Formula lhs = parse_or();
        if (cur_.kind != Tok::Implies) return lhs;
        advance();
        return Formula::implies(lhs, parse_implies());
    }

    Formula parse_or()
    {
        Formula f = parse_and();
        while (cur_.kind == Tok::Or) {
            advance();
            f = Formula::disj(f, parse_and());
        }
        return f;
    }

    Formula parse_and()
    {
        Formula f = parse_until();
        while (cur_.kind == Tok::And) {
            advance();
            f = Formula::conj(f, parse_until());
        }
        return f;
    }

    Formula parse_until()
    {
        Formula lhs = parse_unary();
        if (cur_.kind == Tok::Until) {
            advance();
            return Formula::until(lhs, parse_until());
        }
        if (cur_.kind == Tok::FreqUntil) {
            const Rational r = cur_.frequency;
            advance();
            return Formula::freq_until(r, lhs, parse_until());
        }
        return lhs;
    }

    Formula parse_unary()
    {
        switch (cur_.kind) {
        case Tok::Next: advance(); return Formula::next(parse_unary());
        case Tok::Eventually: advance(); return Formula::eventually(parse_unary());
        case Tok::Always: advance(); return Formula::always(parse_unary());
        case Tok::Not: advance(); return Formula::negate(parse_unary());
        default: return parse_primary();
        }
    }

    Letter letter(const Token& t) const
    {
        Letter l(t.text);
        if (alphabet_ != nullptr && !alphabet_->contains(l)) {
            throw AlphabetError("unknown letter '" + t.text + "' at " + std::to_string(t.pos));
        }
        return l;
    }

    Formula parse_primary()
    {
        const Token t = cur_;
        switch (t.kind) {
        case Tok::True: advance(); return Formula::top();
        case Tok::False: advance(); return Formula::bottom();
        case Tok::Ident: advance(); return Formula::atom(letter(t));
        case Tok::LBracket: {
            advance();
            std::set<Letter> letters;
            while (cur_.kind == Tok::Ident) {
                letters.insert(letter(cur_));
                advance();
            }
            if (letters.empty()) throw ParseError("empty letter set", t.pos);
            if (cur_.kind != Tok::RBracket) throw ParseError("expected ']'", cur_.pos);
            advance();
            return Formula::letter_set(std::move(letters));
        }
        case Tok::LParen: {
            advance();
            Formula f = parse_implies();
            if (cur_.kind != Tok::RParen) throw ParseError("expected ')'", cur_.pos);
            advance();
            return f;
        }
        case Tok::End: throw ParseError("unexpected end of input", t.pos);
        default: throw ParseError("expected a formula", t.pos);
        }
    }

    Lexer lexer_;
    const Alphabet* alphabet_;
    Token cur_;
};

// Binding strength; higher binds tighter.
constexpr int kPrecImplies = 1;
constexpr int kPrecOr = 2;
constexpr int kPrecAnd = 3;
constexpr int kPrecUntil = 4;
constexpr int kPrecUnary = 5;
constexpr int kPrecAtom = 6;

int precedence(const Formula& f)
{
    switch (f.kind()) {
    case FormulaKind::Or: return kPrecOr;
    case FormulaKind::And: return kPrecAnd;
    case FormulaKind::Until:
    case FormulaKind::FreqUntil: return kPrecUntil;
    case FormulaKind::Next:
    case FormulaKind::Not:
    case FormulaKind::Eventually:
    case FormulaKind::Always: return kPrecUnary;
    case FormulaKind::Implies: return kPrecImplies;
    default: return kPrecAtom;
    }
}

void render_into(std::string& out, const Formula& f, int min_prec);

void render_child(std::string& out, const Formula& f, int min_prec)
{
    if (precedence(f) < min_prec) {
        out += '(';
        render_into(out, f, 0);
        out += ')';
    } else {
        render_into(out, f, min_prec);
    }
}

void render_into(std::string& out, const Formula& f, int /*min_prec*/)
{
    switch (f.kind()) {
    case FormulaKind::Atom: out += f.letter().name(); return;
    case FormulaKind::True: out += "true"; return;
    case FormulaKind::False: out += "false"; return;
    case FormulaKind::LetterSet: {
        out += '[';
        bool first = true;
        for (const auto& l : f.letters()) {
            if (!first) out += ' ';
            out += l.name();
            first = false;
        }
        out += ']';
        return;
    }
    case FormulaKind::Not:
        out += '!';
        render_child(out, f.lhs(), kPrecUnary);
        return;
    case FormulaKind::Next:
    case FormulaKind::Eventually:
    case FormulaKind::Always:
        out += f.kind() == FormulaKind::Next ? "X " : f.kind() == FormulaKind::Eventually ? "F " : "G ";
        render_child(out, f.lhs(), kPrecUnary);
        return;
    case FormulaKind::And:
    case FormulaKind::Or: {
        const int p = precedence(f);
        render_child(out, f.lhs(), p);
        out += f.kind() == FormulaKind::And ? " & " : " | ";
        render_child(out, f.rhs(), p + 1);
        return;
    }
    case FormulaKind::Until:
    case FormulaKind::FreqUntil:
        render_child(out, f.lhs(), kPrecUnary);
        out += f.kind() == FormulaKind::Until ? " U " : " U{" + f.frequency().to_string() + "} ";
        render_child(out, f.rhs(), kPrecUntil);
        return;
    case FormulaKind::Implies:
        render_child(out, f.lhs(), kPrecOr);
        out += " -> ";
        render_child(out, f.rhs(), kPrecImplies);
        return;
    }
    throw std::logic_error("unreachable formula kind");
}

} // namespace

Formula parse_formula(std::string_view text, const Alphabet& alphabet)
{
    return Parser(text, &alphabet).parse();
}

Formula parse_formula(std::string_view text)
{
    return Parser(text, nullptr).parse();
}

std::string render(const Formula& phi)
{
    std::string out;
    render_into(out, phi, 0);
    return out;
}

} // namespace fltl
