#include <fltl/error.hpp>
#include <fltl/evaluator.hpp>

#include <stdexcept>

namespace fltl {

namespace {

struct Geometry {
    std::size_t prefix;
    std::size_t loop;

    [[nodiscard]] std::size_t fold(std::size_t i) const noexcept { return i < prefix ? i : prefix + (i - prefix) % loop; }
};

/// Visits j = 0 .. transient+loop-1 from the start position, which covers
/// every residue class once after entering the loop. Calls
/// visit(j, count_before_j, psi_at_j) in order until it returns true.
template <typename Visit>
void scan(const FreqWitnessQuery& q, Visit&& visit)
{
    const Geometry g{q.prefix_length, q.loop_length};
    const std::size_t transient = q.start < g.prefix ? g.prefix - q.start : 0;
    const std::size_t horizon = transient + g.loop;
    std::int64_t count = 0;
    for (std::size_t j = 0; j < horizon; ++j) {
        const std::size_t pos = g.fold(q.start + j);
        if (visit(j, count, q.psi_row[pos] != 0)) return;
        count += q.phi_row[pos] != 0;
    }
}

std::int64_t loop_count(const FreqWitnessQuery& q)
{
    std::int64_t c = 0;
    for (std::size_t i = q.prefix_length; i < q.prefix_length + q.loop_length; ++i) c += q.phi_row[i] != 0;
    return c;
}

/// Growth of den*(count - r*j) per additional loop traversal.
std::int64_t slope(const FreqWitnessQuery& q, std::int64_t per_loop)
{
    return per_loop * q.r.den() - q.r.num() * static_cast<std::int64_t>(q.loop_length);
}

} // namespace

bool freq_until_decide(const FreqWitnessQuery& q)
{
    bool found = false;
    bool psi_in_loop = false;
    const std::size_t transient = q.start < q.prefix_length ? q.prefix_length - q.start : 0;
    scan(q, [&](std::size_t j, std::int64_t count, bool psi) {
        if (!psi) return false;
        if (j >= transient) psi_in_loop = true;
        if (meets_frequency(count, static_cast<std::int64_t>(j), q.r)) {
            found = true;
            return true;
        }
        return false;
    });
    if (found) return true;
    // Along residue class j0 + m*p the surplus is affine in m; with positive
    // slope any psi-position in the loop eventually becomes a witness.
    return psi_in_loop && slope(q, loop_count(q)) > 0;
}

std::optional<UntilWitness> freq_until_witness(const FreqWitnessQuery& q)
{
    std::optional<UntilWitness> best;
    struct Candidate {
        std::size_t j;
        std::int64_t count;
    };
    std::vector<Candidate> loop_candidates;
    const std::size_t transient = q.start < q.prefix_length ? q.prefix_length - q.start : 0;
    scan(q, [&](std::size_t j, std::int64_t count, bool psi) {
        if (!psi) return false;
        if (meets_frequency(count, static_cast<std::int64_t>(j), q.r)) {
            best = UntilWitness{j, count};
            return true;
        }
        if (j >= transient) loop_candidates.push_back({j, count});
        return false;
    });
    if (best) return best;
    const std::int64_t per_loop = loop_count(q);
    const std::int64_t s = slope(q, per_loop);
    if (s <= 0) return std::nullopt;
    const auto p = static_cast<std::int64_t>(q.loop_length);
    for (const auto& c : loop_candidates) {
        const std::int64_t deficit = q.r.num() * static_cast<std::int64_t>(c.j) - q.r.den() * c.count;  // > 0
        const std::int64_t loops = (deficit + s - 1) / s;
        const UntilWitness w{c.j + static_cast<std::size_t>(loops * p), c.count + loops * per_loop};
        if (!best || w.j < best->j) best = w;
    }
    return best;
}

SatTable::SatTable(std::vector<Formula> formulas, std::vector<std::uint8_t> cells, std::size_t prefix_length,
                   std::size_t loop_length)
    : formulas_(std::move(formulas)), cells_(std::move(cells)), prefix_length_(prefix_length), loop_length_(loop_length)
{
    for (std::size_t i = 0; i < formulas_.size(); ++i) index_.emplace(formulas_[i], i);
}

std::span<const std::uint8_t> SatTable::row(const Formula& f) const
{
    auto it = index_.find(f);
    if (it == index_.end() && !f.is_core(true)) it = index_.find(desugar_keep_true(f));
    if (it == index_.end()) throw std::out_of_range("formula is not part of this table");
    return std::span<const std::uint8_t>(cells_).subspan(it->second * width(), width());
}

bool SatTable::holds(const Formula& f, std::size_t position) const
{
    const Geometry g{prefix_length_, loop_length_};
    return row(f)[g.fold(position)] != 0;
}

EvaluationPlan::EvaluationPlan(const Formula& phi) : core_(desugar_keep_true(phi))
{
    order_ = subformulas(core_);
    std::unordered_map<Formula, std::size_t> index;
    nodes_.reserve(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) {
        const Formula& f = order_[i];
        Node n;
        n.kind = f.kind();
        if (f.kind() == FormulaKind::Atom) n.letter = f.letter();
        if (f.kind() == FormulaKind::FreqUntil) n.r = f.frequency();
        if (f.arity() >= 1) n.lhs = index.at(f.lhs());
        if (f.arity() == 2) n.rhs = index.at(f.rhs());
        nodes_.push_back(std::move(n));
        index.emplace(f, i);
    }
}

EvaluationPlan::EvaluationPlan(const Formula& phi, const Alphabet& alphabet) : EvaluationPlan(phi)
{
    for (const auto& l : phi.mentioned_letters()) {
        if (!alphabet.contains(l)) throw AlphabetError("formula letter '" + l.name() + "' not in alphabet");
    }
    alphabet_ = alphabet;
}

void EvaluationPlan::check_word(const LassoWord& w) const
{
    if (!alphabet_) return;
    for (const auto& l : w.letters()) {
        if (!alphabet_->contains(l)) throw AlphabetError("word letter '" + l.name() + "' not in alphabet");
    }
}

void EvaluationPlan::fill(const LassoWord& w, std::vector<std::uint8_t>& cells) const
{
    const std::size_t n = w.period_span();
    const std::size_t u = w.prefix_length();
    cells.assign(nodes_.size() * n, 0);
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        const Node& node = nodes_[k];
        std::uint8_t* out = cells.data() + k * n;
        const std::uint8_t* a = cells.data() + node.lhs * n;
        const std::uint8_t* b = cells.data() + node.rhs * n;
        switch (node.kind) {
        case FormulaKind::Atom:
            for (std::size_t i = 0; i < n; ++i) out[i] = w.letter_at(i) == node.letter;
            break;
        case FormulaKind::True:
            for (std::size_t i = 0; i < n; ++i) out[i] = 1;
            break;
        case FormulaKind::Not:
            for (std::size_t i = 0; i < n; ++i) out[i] = !a[i];
            break;
        case FormulaKind::And:
            for (std::size_t i = 0; i < n; ++i) out[i] = a[i] && b[i];
            break;
        case FormulaKind::Next:
            for (std::size_t i = 0; i + 1 < n; ++i) out[i] = a[i + 1];
            out[n - 1] = a[u];
            break;
        case FormulaKind::FreqUntil: {
            FreqWitnessQuery q{0, {a, n}, {b, n}, node.r, u, w.loop_length()};
            for (std::size_t i = 0; i < n; ++i) {
                q.start = i;
                out[i] = freq_until_decide(q);
            }
            break;
        }
        default:
            throw std::logic_error("evaluation plan contains a non-core formula");
        }
    }
}

bool EvaluationPlan::models(const LassoWord& w) const
{
    check_word(w);
    thread_local std::vector<std::uint8_t> cells;
    fill(w, cells);
    return cells[(nodes_.size() - 1) * w.period_span()] != 0;
}

SatTable EvaluationPlan::table(const LassoWord& w) const
{
    check_word(w);
    std::vector<std::uint8_t> cells;
    fill(w, cells);
    return SatTable(order_, std::move(cells), w.prefix_length(), w.loop_length());
}

SatTable sat_table(const LassoWord& w, const Formula& phi)
{
    return EvaluationPlan(phi).table(w);
}

bool models(const LassoWord& w, const Formula& phi)
{
    return EvaluationPlan(phi).models(w);
}

bool models(const LassoWord& w, const Formula& phi, const Alphabet& alphabet)
{
    return EvaluationPlan(phi, alphabet).models(w);
}

Rational observed_frequency(const LassoWord& w, const Formula& phi, std::size_t start, std::size_t j)
{
    if (j == 0) throw std::invalid_argument("observed frequency over an empty interval");
    const SatTable t = sat_table(w, phi);
    const Formula core = desugar_keep_true(phi);
    std::int64_t count = 0;
    for (std::size_t k = start; k < start + j; ++k) count += t.holds(core, k);
    return {count, static_cast<std::int64_t>(j)};
}

std::vector<UntilReport> until_witnesses(const LassoWord& w, const Formula& phi)
{
    const SatTable t = sat_table(w, phi);
    std::vector<UntilReport> out;
    for (const auto& f : t.formulas()) {
        if (f.kind() != FormulaKind::FreqUntil) continue;
        const FreqWitnessQuery q{0, t.row(f.lhs()), t.row(f.rhs()), f.frequency(), w.prefix_length(), w.loop_length()};
        out.push_back({f, freq_until_witness(q)});
    }
    return out;
}

} // namespace fltl
