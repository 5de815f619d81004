#include <fltl/error.hpp>
#include <fltl/formula.hpp>

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace fltl {

struct Formula::Node {
    FormulaKind kind;
    Letter letter;
    Rational frequency;
    std::set<Letter> letters;
    std::vector<Formula> children;
    std::size_t hash = 0;
    std::size_t size = 1;
    std::size_t depth = 1;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value)
{
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

bool is_core_kind(FormulaKind k) noexcept
{
    switch (k) {
    case FormulaKind::Atom:
    case FormulaKind::Next:
    case FormulaKind::FreqUntil:
    case FormulaKind::Not:
    case FormulaKind::And:
        return true;
    default:
        return false;
    }
}

Formula Formula::make(Node node)
{
    std::size_t h = std::hash<int>{}(static_cast<int>(node.kind));
    switch (node.kind) {
    case FormulaKind::Atom:
        h = mix(h, std::hash<Letter>{}(node.letter));
        break;
    case FormulaKind::FreqUntil:
        h = mix(h, std::hash<Rational>{}(node.frequency));
        break;
    case FormulaKind::LetterSet:
        for (const auto& l : node.letters) h = mix(h, std::hash<Letter>{}(l));
        break;
    default:
        break;
    }
    std::size_t child_depth = 0;
    for (const auto& c : node.children) {
        h = mix(h, c.hash());
        node.size += c.size();
        child_depth = std::max(child_depth, c.depth());
    }
    node.depth = 1 + child_depth;
    node.hash = h;
    return Formula(std::make_shared<const Node>(std::move(node)));
}

Formula Formula::atom(Letter letter)
{
    return make(Node{FormulaKind::Atom, std::move(letter), {}, {}, {}});
}

Formula Formula::next(Formula f)
{
    return make(Node{FormulaKind::Next, {}, {}, {}, {std::move(f)}});
}

Formula Formula::freq_until(Rational r, Formula lhs, Formula rhs)
{
    if (!r.in_unit_interval()) {
        throw std::invalid_argument("frequency " + r.to_string() + " outside [0,1]");
    }
    return make(Node{FormulaKind::FreqUntil, {}, r, {}, {std::move(lhs), std::move(rhs)}});
}

Formula Formula::negate(Formula f)
{
    return make(Node{FormulaKind::Not, {}, {}, {}, {std::move(f)}});
}

Formula Formula::conj(Formula lhs, Formula rhs)
{
    return make(Node{FormulaKind::And, {}, {}, {}, {std::move(lhs), std::move(rhs)}});
}

Formula Formula::top()
{
    static const Formula t = make(Node{FormulaKind::True, {}, {}, {}, {}});
    return t;
}

Formula Formula::bottom()
{
    static const Formula f = make(Node{FormulaKind::False, {}, {}, {}, {}});
    return f;
}

Formula Formula::disj(Formula lhs, Formula rhs)
{
    return make(Node{FormulaKind::Or, {}, {}, {}, {std::move(lhs), std::move(rhs)}});
}

Formula Formula::implies(Formula lhs, Formula rhs)
{
    return make(Node{FormulaKind::Implies, {}, {}, {}, {std::move(lhs), std::move(rhs)}});
}

Formula Formula::eventually(Formula f)
{
    return make(Node{FormulaKind::Eventually, {}, {}, {}, {std::move(f)}});
}

Formula Formula::always(Formula f)
{
    return make(Node{FormulaKind::Always, {}, {}, {}, {std::move(f)}});
}

Formula Formula::until(Formula lhs, Formula rhs)
{
    return make(Node{FormulaKind::Until, {}, {}, {}, {std::move(lhs), std::move(rhs)}});
}

Formula Formula::letter_set(std::set<Letter> letters)
{
    return make(Node{FormulaKind::LetterSet, {}, {}, std::move(letters), {}});
}

Formula Formula::conj_all(const std::vector<Formula>& fs)
{
    if (fs.empty()) return top();
    Formula acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
    return acc;
}

Formula Formula::disj_all(const std::vector<Formula>& fs)
{
    if (fs.empty()) return bottom();
    Formula acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = disj(acc, fs[i]);
    return acc;
}

Formula Formula::any_of(const std::set<Letter>& letters)
{
    if (letters.empty()) return bottom();
    return letter_set(letters);
}

FormulaKind Formula::kind() const noexcept { return node_->kind; }

const Letter& Formula::letter() const
{
    if (kind() != FormulaKind::Atom) throw std::logic_error("letter() of a non-atom formula");
    return node_->letter;
}

const Rational& Formula::frequency() const
{
    if (kind() != FormulaKind::FreqUntil) throw std::logic_error("frequency() of a formula that is not U{r}");
    return node_->frequency;
}

const std::set<Letter>& Formula::letters() const
{
    if (kind() != FormulaKind::LetterSet) throw std::logic_error("letters() of a formula that is not a letter set");
    return node_->letters;
}

const Formula& Formula::lhs() const
{
    if (node_->children.empty()) throw std::logic_error("lhs() of a formula without operands");
    return node_->children.front();
}

const Formula& Formula::rhs() const
{
    if (node_->children.size() != 2) throw std::logic_error("rhs() of a formula that is not binary");
    return node_->children.back();
}

std::size_t Formula::arity() const noexcept { return node_->children.size(); }
std::size_t Formula::hash() const noexcept { return node_->hash; }
std::size_t Formula::size() const noexcept { return node_->size; }
std::size_t Formula::depth() const noexcept { return node_->depth; }

bool Formula::is_core(bool allow_true) const
{
    const bool here = is_core_kind(kind()) || (allow_true && kind() == FormulaKind::True);
    if (!here) return false;
    for (const auto& c : node_->children) {
        if (!c.is_core(allow_true)) return false;
    }
    return true;
}

std::set<Letter> Formula::mentioned_letters() const
{
    std::set<Letter> out;
    std::vector<const Formula*> stack{this};
    while (!stack.empty()) {
        const Formula* f = stack.back();
        stack.pop_back();
        if (f->kind() == FormulaKind::Atom) out.insert(f->letter());
        if (f->kind() == FormulaKind::LetterSet) out.insert(f->letters().begin(), f->letters().end());
        for (const auto& c : f->node_->children) stack.push_back(&c);
    }
    return out;
}

bool operator==(const Formula& lhs, const Formula& rhs)
{
    if (lhs.node_ == rhs.node_) return true;
    const auto& a = *lhs.node_;
    const auto& b = *rhs.node_;
    if (a.hash != b.hash || a.kind != b.kind || a.size != b.size) return false;
    if (a.letter != b.letter || a.frequency != b.frequency || a.letters != b.letters) return false;
    return a.children == b.children;
}

namespace {

class Desugarer {
public:
    Desugarer(const Alphabet* alphabet, DesugarOptions options) : alphabet_(alphabet), options_(options) {}

    Formula run(const Formula& f)
    {
        if (auto it = memo_.find(f); it != memo_.end()) return it->second;
        Formula out = rewrite(f);
        memo_.emplace(f, out);
        return out;
    }

private:
    static Formula core_or(Formula l, Formula r)
    {
        return Formula::negate(Formula::conj(Formula::negate(std::move(l)), Formula::negate(std::move(r))));
    }

    Formula check_letter(const Letter& l) const
    {
        if (alphabet_ != nullptr && !alphabet_->contains(l)) {
            throw AlphabetError("letter '" + l.name() + "' not in alphabet");
        }
        return Formula::atom(l);
    }

    Formula core_top()
    {
        if (!options_.expand_true || alphabet_ == nullptr) return Formula::top();
        return core_letter_set(std::set<Letter>(alphabet_->letters().begin(), alphabet_->letters().end()));
    }

    Formula core_letter_set(const std::set<Letter>& letters)
    {
        if (letters.empty()) return Formula::negate(core_top());
        // !(!a & !b & ...) with the conjunction nested to the left
        auto it = letters.begin();
        Formula acc = check_letter(*it);
        if (letters.size() == 1) return acc;
        acc = Formula::negate(acc);
        for (++it; it != letters.end(); ++it) {
            acc = Formula::conj(acc, Formula::negate(check_letter(*it)));
        }
        return Formula::negate(acc);
    }

    Formula rewrite(const Formula& f)
    {
        switch (f.kind()) {
        case FormulaKind::Atom:
            return check_letter(f.letter());
        case FormulaKind::Next:
            return Formula::next(run(f.lhs()));
        case FormulaKind::FreqUntil:
            return Formula::freq_until(f.frequency(), run(f.lhs()), run(f.rhs()));
        case FormulaKind::Not:
            return Formula::negate(run(f.lhs()));
        case FormulaKind::And:
            return Formula::conj(run(f.lhs()), run(f.rhs()));
        case FormulaKind::True:
            return core_top();
        case FormulaKind::False:
            return Formula::negate(core_top());
        case FormulaKind::Or:
            return core_or(run(f.lhs()), run(f.rhs()));
        case FormulaKind::Implies:
            return core_or(Formula::negate(run(f.lhs())), run(f.rhs()));
        case FormulaKind::Eventually:
            return Formula::freq_until(Rational(1), core_top(), run(f.lhs()));
        case FormulaKind::Always:
            return Formula::negate(
                Formula::freq_until(Rational(1), core_top(), Formula::negate(run(f.lhs()))));
        case FormulaKind::Until:
            return Formula::freq_until(Rational(1), run(f.lhs()), run(f.rhs()));
        case FormulaKind::LetterSet:
            return core_letter_set(f.letters());
        }
        throw std::logic_error("unreachable formula kind");
    }

    const Alphabet* alphabet_;
    DesugarOptions options_;
    std::unordered_map<Formula, Formula> memo_;
};

} // namespace

Formula desugar(const Formula& phi, const Alphabet& alphabet, DesugarOptions options)
{
    return Desugarer(&alphabet, options).run(phi);
}

Formula desugar_keep_true(const Formula& phi)
{
    return Desugarer(nullptr, DesugarOptions{false}).run(phi);
}

std::vector<Formula> subformulas(const Formula& phi)
{
    std::vector<Formula> order;
    std::unordered_set<Formula> seen;
    // iterative post-order; formulas from the reduction are deep
    struct Frame {
        Formula f;
        std::size_t next_child;
    };
    std::vector<Frame> stack;
    stack.push_back({phi, 0});
    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next_child == 0 && seen.contains(top.f)) {
            stack.pop_back();
            continue;
        }
        if (top.next_child < top.f.arity()) {
            const Formula child = top.next_child == 0 ? top.f.lhs() : top.f.rhs();
            ++top.next_child;
            if (!seen.contains(child)) stack.push_back({child, 0});
            continue;
        }
        if (seen.insert(top.f).second) order.push_back(top.f);
        stack.pop_back();
    }
    return order;
}

} // namespace fltl
