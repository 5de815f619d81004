#pragma once

#include <fltl/formula.hpp>
#include <fltl/lasso.hpp>
#include <fltl/minsky.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace fltl::gen {

/// Seeded generator whose draws are identical on every platform
/// (std::uniform_int_distribution is implementation defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n), n > 0.
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
    /// Uniform in [lo, hi].
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
    bool coin() { return (engine_() & 1U) != 0; }

    template <typename T>
    const T& pick(const std::vector<T>& xs)
    {
        return xs[below(xs.size())];
    }

private:
    std::mt19937_64 engine_;
};

[[nodiscard]] std::vector<Letter> letters(std::initializer_list<const char*> names);

/// Random formula over the five core constructors; atoms have depth 1.
[[nodiscard]] Formula random_core_formula(Rng& rng, const std::vector<Letter>& letters, std::size_t max_depth,
                                          const std::vector<Rational>& ratios);

/// Random formula drawing from every constructor, sugar included.
[[nodiscard]] Formula random_formula(Rng& rng, const std::vector<Letter>& letters, std::size_t max_depth,
                                     const std::vector<Rational>& ratios);

/// Every core formula of depth <= max_depth (atoms have depth 1), without
/// duplicates, shallower formulas first.
[[nodiscard]] std::vector<Formula> all_core_formulas(const std::vector<Letter>& letters, std::size_t max_depth,
                                                     const std::vector<Rational>& ratios);

[[nodiscard]] FiniteWord random_word(Rng& rng, const std::vector<Letter>& letters, std::size_t min_length,
                                     std::size_t max_length);
[[nodiscard]] LassoWord random_lasso(Rng& rng, const std::vector<Letter>& letters, std::size_t max_prefix,
                                     std::size_t max_loop);
/// Every (prefix, loop) pair with |prefix| + |loop| <= max_span and a nonempty loop.
[[nodiscard]] std::vector<LassoWord> all_lassos(const std::vector<Letter>& letters, std::size_t max_span);

/// The six-transition machine l0 -inc1-> l1 -inc1-> l2 -zero2-> l3 -inc2->
/// l4 -dec1-> l5 -inc2-> l6 with transitions t1 .. t6.
[[nodiscard]] minsky::MinskyMachine reference_machine();

/// A valid machine with 2..max_transitions transitions named t1, t2, ...;
/// t1 is initial and the last transition is final.
[[nodiscard]] minsky::MinskyMachine random_machine(Rng& rng, std::size_t max_transitions);

struct Mutation {
    enum class Kind { Substitute, Insert, Delete };
    Kind kind;
    std::size_t position;
    Letter letter;  // unused for Delete

    [[nodiscard]] std::string to_string() const;
};

/// Applies a prefix mutation; the loop is left untouched.
[[nodiscard]] LassoWord apply(const LassoWord& w, const Mutation& m);

/// Every substitution (by a different letter), insertion and deletion.
[[nodiscard]] std::vector<Mutation> all_mutations(const LassoWord& w, const std::vector<Letter>& letters);
[[nodiscard]] Mutation random_mutation(Rng& rng, const LassoWord& w, const std::vector<Letter>& letters);

} // namespace fltl::gen
