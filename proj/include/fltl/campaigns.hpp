#pragma once

#include <fltl/generators.hpp>
#include <fltl/minsky.hpp>
#include <fltl/rational.hpp>
#include <fltl/reduction.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

/// Property campaigns over the evaluator and the reduction. Each returns an
/// Outcome carrying the number of instances checked and the first
/// counterexample found, if any. They back both the acceptance suite and
/// the `selftest` command.
namespace fltl::campaigns {

struct Outcome {
    explicit Outcome(std::string name_) : name(std::move(name_)) {}

    std::string name;
    std::size_t checked = 0;
    std::optional<std::string> counterexample;
    std::string note;  // extra tallies, e.g. how many instances met a hypothesis

    [[nodiscard]] bool passed() const noexcept { return !counterexample.has_value(); }
    [[nodiscard]] std::string summary() const;
};

/// A machine with a successful computation and its encoding.
struct Sample {
    minsky::MinskyMachine machine;
    minsky::Computation computation;
    reduction::EncodedComputation encoding;
};

struct SearchBounds {
    std::size_t max_steps = 14;
    std::uint64_t max_counter = 5;
};

/// The reference machine with its shortest successful computation.
[[nodiscard]] Sample reference_sample();

/// Random machines (at most `max_transitions` transitions) for which the
/// bounded search succeeds, until `count` are collected.
[[nodiscard]] std::vector<Sample> sample_computations(std::size_t count, std::uint64_t seed,
                                                      std::size_t max_transitions = 6, SearchBounds bounds = {});

// -- reduction -------------------------------------------------------------

/// Every encoding satisfies phi_symb & phi_count.
[[nodiscard]] Outcome check_encodings_are_models(const std::vector<Sample>& samples);

/// decode(encode(pi)) == pi, replay reproduces pi, and the machine validates.
[[nodiscard]] Outcome check_decode_round_trip(const std::vector<Sample>& samples);

/// models(w, phi_symb) == in_Lsymb(w) on the encodings, on `mutations`
/// random single-token mutations of them, and on `random_words` random
/// `#`-looped words with prefixes of length <= max_prefix.
[[nodiscard]] Outcome check_symb_oracle(const std::vector<Sample>& samples, std::size_t mutations,
                                        std::size_t random_words, std::size_t max_prefix, std::uint64_t seed);

/// Balance property of both partitions of the machine's alphabet without
/// `#`: whenever every tuple sum reaches half the word length,
/// complementary classes occur equally often. Exhaustive over all words up
/// to `max_length`, or `count` random words up to `max_length`.
[[nodiscard]] Outcome check_balance_exhaustive(const minsky::MinskyMachine& machine, std::size_t max_length);
[[nodiscard]] Outcome check_balance_random(const minsky::MinskyMachine& machine, std::size_t count,
                                           std::size_t max_length, std::uint64_t seed);

/// Calls `visit` on every word of L_symb for `machine` whose prefix has at
/// most `max_prefix` letters (loop `#`).
void enumerate_lsymb(const minsky::MinskyMachine& machine, std::size_t max_prefix,
                     const std::function<void(const LassoWord&)>& visit);

/// On every enumerated L_symb word, phi_count holds iff decode yields a
/// valid successful computation.
[[nodiscard]] Outcome check_count_enumeration(const minsky::MinskyMachine& machine, std::size_t max_prefix);

/// Every L_symb-preserving single-token mutation of an encoding that alters a
/// counter block is rejected by phi_count, and decode reports an update
/// violation at i for a changed hatted block v_i and a carryover violation
/// at i for a changed plain block u_i. Other L_symb-preserving mutations
/// must still have phi_count agree with decode.
[[nodiscard]] Outcome check_mutation_kill(const std::vector<Sample>& samples);

// -- evaluator -------------------------------------------------------------

/// models == brute_force_models over all lassos with |u|+|v| <= max_span
/// and all core formulas of depth <= max_depth.
[[nodiscard]] Outcome check_evaluator_exhaustive(const std::vector<Letter>& letters, std::size_t max_span,
                                                 std::size_t max_depth, const std::vector<Rational>& ratios);
[[nodiscard]] Outcome check_evaluator_random(std::size_t count, std::uint64_t seed);

[[nodiscard]] Outcome check_until_zero_is_eventually(std::size_t count, std::uint64_t seed);
[[nodiscard]] Outcome check_until_one_is_classical(std::size_t count, std::uint64_t seed);
[[nodiscard]] Outcome check_frequency_monotonicity(std::size_t count, std::uint64_t seed);
[[nodiscard]] Outcome check_suffix_congruence(std::size_t count, std::uint64_t seed);

// -- logic core ------------------------------------------------------------

[[nodiscard]] Outcome check_parse_render(std::size_t count, std::uint64_t seed);
/// Evaluator verdicts agree on phi and its fully expanded desugaring.
[[nodiscard]] Outcome check_desugar_preserves(std::size_t count, std::uint64_t seed);

/// l0 -inc1-> l1 -dec1-> l2.
[[nodiscard]] minsky::MinskyMachine two_transition_machine();
/// l0 -inc1-> l1 -zero2-> l2 -dec1-> l3.
[[nodiscard]] minsky::MinskyMachine three_transition_machine();
/// l0 -inc1-> l1 -dec2-> l2; increments and decrements land in different counters.
[[nodiscard]] minsky::MinskyMachine inc_dec_machine();

} // namespace fltl::campaigns
