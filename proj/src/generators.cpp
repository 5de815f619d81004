#include <fltl/generators.hpp>

#include <unordered_set>

namespace fltl::gen {

using minsky::MinskyMachine;
using minsky::Operation;
using minsky::Transition;

std::vector<Letter> letters(std::initializer_list<const char*> names)
{
    std::vector<Letter> out;
    for (const char* n : names) out.emplace_back(n);
    return out;
}

Formula random_core_formula(Rng& rng, const std::vector<Letter>& letters, std::size_t max_depth,
                            const std::vector<Rational>& ratios)
{
    if (max_depth <= 1 || rng.below(4) == 0) return Formula::atom(rng.pick(letters));
    const std::size_t d = max_depth - 1;
    switch (rng.below(4)) {
    case 0: return Formula::next(random_core_formula(rng, letters, d, ratios));
    case 1: return Formula::negate(random_core_formula(rng, letters, d, ratios));
    case 2: return Formula::conj(random_core_formula(rng, letters, d, ratios), random_core_formula(rng, letters, d, ratios));
    default:
        return Formula::freq_until(rng.pick(ratios), random_core_formula(rng, letters, d, ratios),
                                   random_core_formula(rng, letters, d, ratios));
    }
}

Formula random_formula(Rng& rng, const std::vector<Letter>& letters, std::size_t max_depth,
                       const std::vector<Rational>& ratios)
{
    if (max_depth <= 1 || rng.below(4) == 0) {
        switch (rng.below(6)) {
        case 0: return Formula::top();
        case 1: return Formula::bottom();
        case 2: {
            std::set<Letter> set;
            const std::size_t n = rng.between(1, letters.size());
            while (set.size() < n) set.insert(rng.pick(letters));
            return Formula::letter_set(std::move(set));
        }
        default: return Formula::atom(rng.pick(letters));
        }
    }
    const std::size_t d = max_depth - 1;
    auto sub = [&] { return random_formula(rng, letters, d, ratios); };
    switch (rng.below(11)) {
    case 0: return Formula::next(sub());
    case 1: return Formula::negate(sub());
    case 2: return Formula::conj(sub(), sub());
    case 3: return Formula::freq_until(rng.pick(ratios), sub(), sub());
    case 4: return Formula::disj(sub(), sub());
    case 5: return Formula::implies(sub(), sub());
    case 6: return Formula::eventually(sub());
    case 7: return Formula::always(sub());
    case 8: return Formula::until(sub(), sub());
    case 9: {
        // exercise association of chained binary operators
        Formula a = sub();
        return Formula::conj(Formula::conj(a, sub()), sub());
    }
    default: return Formula::freq_until(rng.pick(ratios), sub(), Formula::freq_until(rng.pick(ratios), sub(), sub()));
    }
}

std::vector<Formula> all_core_formulas(const std::vector<Letter>& letters, std::size_t max_depth,
                                       const std::vector<Rational>& ratios)
{
    std::vector<Formula> all;
    std::unordered_set<Formula> seen;
    auto add = [&](Formula f) {
        if (seen.insert(f).second) all.push_back(std::move(f));
    };
    for (const auto& l : letters) add(Formula::atom(l));
    for (std::size_t depth = 2; depth <= max_depth; ++depth) {
        const std::vector<Formula> below = all;  // every formula of depth < depth
        for (const auto& f : below) {
            if (f.depth() != depth - 1) continue;
            add(Formula::next(f));
            add(Formula::negate(f));
        }
        for (const auto& f : below) {
            for (const auto& g : below) {
                if (f.depth() != depth - 1 && g.depth() != depth - 1) continue;
                add(Formula::conj(f, g));
                for (const auto& r : ratios) add(Formula::freq_until(r, f, g));
            }
        }
    }
    return all;
}

FiniteWord random_word(Rng& rng, const std::vector<Letter>& letters, std::size_t min_length, std::size_t max_length)
{
    FiniteWord w(rng.between(min_length, max_length));
    for (auto& l : w) l = rng.pick(letters);
    return w;
}

LassoWord random_lasso(Rng& rng, const std::vector<Letter>& letters, std::size_t max_prefix, std::size_t max_loop)
{
    FiniteWord prefix = random_word(rng, letters, 0, max_prefix);
    FiniteWord loop = random_word(rng, letters, 1, max_loop);
    return {std::move(prefix), std::move(loop)};
}

std::vector<LassoWord> all_lassos(const std::vector<Letter>& letters, std::size_t max_span)
{
    // all words of each length, built up by extension
    std::vector<std::vector<FiniteWord>> words_of_length{{FiniteWord{}}};
    for (std::size_t len = 1; len <= max_span; ++len) {
        std::vector<FiniteWord> next;
        for (const auto& w : words_of_length.back()) {
            for (const auto& l : letters) {
                FiniteWord x = w;
                x.push_back(l);
                next.push_back(std::move(x));
            }
        }
        words_of_length.push_back(std::move(next));
    }
    std::vector<LassoWord> out;
    for (std::size_t u = 0; u < max_span; ++u) {
        for (std::size_t v = 1; u + v <= max_span; ++v) {
            for (const auto& prefix : words_of_length[u]) {
                for (const auto& loop : words_of_length[v]) out.emplace_back(prefix, loop);
            }
        }
    }
    return out;
}

MinskyMachine reference_machine()
{
    return MinskyMachine({"l0", "l1", "l2", "l3", "l4", "l5", "l6"},
                         {
                             {"t1", "l0", "l1", Operation::Inc1},
                             {"t2", "l1", "l2", Operation::Inc1},
                             {"t3", "l2", "l3", Operation::Zero2},
                             {"t4", "l3", "l4", Operation::Inc2},
                             {"t5", "l4", "l5", Operation::Dec1},
                             {"t6", "l5", "l6", Operation::Inc2},
                         },
                         "t1", "t6");
}

MinskyMachine random_machine(Rng& rng, std::size_t max_transitions)
{
    static const std::vector<Operation> all_ops{Operation::Inc1, Operation::Inc2, Operation::Dec1,
                                                Operation::Dec2, Operation::Zero1, Operation::Zero2};
    static const std::vector<Operation> non_zero{Operation::Inc1, Operation::Inc2, Operation::Dec1, Operation::Dec2};

    const std::size_t n_trans = rng.between(2, std::max<std::size_t>(2, max_transitions));
    const std::size_t n_locs = rng.between(1, 4);
    std::vector<std::string> locs;
    for (std::size_t i = 0; i < n_locs; ++i) locs.push_back("l" + std::to_string(i));
    const std::string sink = "lf";

    std::vector<Transition> ts;
    for (std::size_t i = 1; i <= n_trans; ++i) {
        const bool is_init = i == 1;
        const bool is_final = i == n_trans;
        Transition t;
        t.id = "t" + std::to_string(i);
        t.src = is_init ? locs.front() : rng.pick(locs);
        t.trg = is_final ? sink : rng.pick(locs);
        if (is_init) {
            // a leading decrement always blocks; keep it rare
            t.op = rng.below(8) == 0 ? rng.pick(non_zero) : (rng.coin() ? Operation::Inc1 : Operation::Inc2);
        } else {
            t.op = is_final ? rng.pick(non_zero) : rng.pick(all_ops);
        }
        ts.push_back(std::move(t));
    }
    locs.push_back(sink);
    return MinskyMachine(std::move(locs), std::move(ts), "t1", "t" + std::to_string(n_trans));
}

std::string Mutation::to_string() const
{
    switch (kind) {
    case Kind::Substitute: return "substitute@" + std::to_string(position) + "->" + letter.name();
    case Kind::Insert: return "insert@" + std::to_string(position) + ":" + letter.name();
    case Kind::Delete: return "delete@" + std::to_string(position);
    }
    return "?";
}

LassoWord apply(const LassoWord& w, const Mutation& m)
{
    FiniteWord prefix = w.prefix();
    const auto at = prefix.begin() + static_cast<std::ptrdiff_t>(m.position);
    switch (m.kind) {
    case Mutation::Kind::Substitute: prefix.at(m.position) = m.letter; break;
    case Mutation::Kind::Insert: prefix.insert(at, m.letter); break;
    case Mutation::Kind::Delete: prefix.erase(at); break;
    }
    return {std::move(prefix), w.loop()};
}

std::vector<Mutation> all_mutations(const LassoWord& w, const std::vector<Letter>& letters)
{
    std::vector<Mutation> out;
    const std::size_t n = w.prefix_length();
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& l : letters) {
            if (l != w.prefix()[i]) out.push_back({Mutation::Kind::Substitute, i, l});
        }
        out.push_back({Mutation::Kind::Delete, i, Letter{}});
    }
    for (std::size_t i = 0; i <= n; ++i) {
        for (const auto& l : letters) out.push_back({Mutation::Kind::Insert, i, l});
    }
    return out;
}

Mutation random_mutation(Rng& rng, const LassoWord& w, const std::vector<Letter>& letters)
{
    const std::size_t n = w.prefix_length();
    for (;;) {
        switch (n == 0 ? 1 : rng.below(3)) {
        case 0: {
            const std::size_t i = rng.below(n);
            const Letter& l = rng.pick(letters);
            if (l != w.prefix()[i]) return {Mutation::Kind::Substitute, i, l};
            break;
        }
        case 1: return {Mutation::Kind::Insert, rng.below(n + 1), rng.pick(letters)};
        default: return {Mutation::Kind::Delete, rng.below(n), Letter{}};
        }
    }
}

} // namespace fltl::gen
