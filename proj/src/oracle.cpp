// Reference semantics for cross-checking the evaluator. Deliberately shares
// no code with evaluator.cpp beyond the formula and word types.

#include <fltl/evaluator.hpp>

#include <stdexcept>
#include <unordered_map>

namespace fltl {

std::size_t brute_force_bound(const LassoWord& w, std::size_t start, const Rational& r)
{
    const std::size_t p = w.loop_length();
    const std::size_t transient = start < w.prefix_length() ? w.prefix_length() - start : 0;
    const std::size_t t = transient + p;
    return t + p * (static_cast<std::size_t>(r.den()) * t + 1);
}

namespace {

class Oracle {
public:
    explicit Oracle(const LassoWord& w) : w_(w) {}

    bool holds(const Formula& f, std::size_t pos)
    {
        // suffixes at i and i + |v| coincide once inside the loop
        const std::size_t key = w_.fold(pos);
        auto& cache = memo_[f];
        if (cache.empty()) cache.assign(w_.period_span(), -1);
        if (cache[key] < 0) cache[key] = compute(f, key) ? 1 : 0;
        return cache[key] == 1;
    }

private:
    bool search(const Rational& r, const Formula* phi, const Formula& psi, std::size_t pos)
    {
        const std::size_t bound = brute_force_bound(w_, pos, r);
        std::int64_t count = 0;
        for (std::size_t j = 0; j <= bound; ++j) {
            if (holds(psi, pos + j) && count * r.den() >= r.num() * static_cast<std::int64_t>(j)) return true;
            if (phi == nullptr || holds(*phi, pos + j)) ++count;
        }
        return false;
    }

    bool compute(const Formula& f, std::size_t pos)
    {
        switch (f.kind()) {
        case FormulaKind::Atom: return w_.letter_at(pos) == f.letter();
        case FormulaKind::True: return true;
        case FormulaKind::False: return false;
        case FormulaKind::LetterSet: return f.letters().contains(w_.letter_at(pos));
        case FormulaKind::Next: return holds(f.lhs(), pos + 1);
        case FormulaKind::Not: return !holds(f.lhs(), pos);
        case FormulaKind::And: return holds(f.lhs(), pos) && holds(f.rhs(), pos);
        case FormulaKind::Or: return holds(f.lhs(), pos) || holds(f.rhs(), pos);
        case FormulaKind::Implies: return !holds(f.lhs(), pos) || holds(f.rhs(), pos);
        case FormulaKind::FreqUntil: return search(f.frequency(), &f.lhs(), f.rhs(), pos);
        case FormulaKind::Until: return search(Rational(1), &f.lhs(), f.rhs(), pos);
        case FormulaKind::Eventually: return search(Rational(0), nullptr, f.lhs(), pos);
        case FormulaKind::Always: return !search(Rational(0), nullptr, Formula::negate(f.lhs()), pos);
        }
        throw std::logic_error("unreachable formula kind");
    }

    const LassoWord& w_;
    std::unordered_map<Formula, std::vector<int>> memo_;
};

} // namespace

bool brute_force_models(const LassoWord& w, const Formula& phi)
{
    return Oracle(w).holds(phi, 0);
}

} // namespace fltl
