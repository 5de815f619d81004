#include <fltl/campaigns.hpp>
#include <fltl/error.hpp>
#include <fltl/evaluator.hpp>
#include <fltl/parser.hpp>

#include <algorithm>
#include <stdexcept>

namespace fltl::campaigns {

using minsky::Computation;
using minsky::CounterConfig;
using minsky::MinskyMachine;
using minsky::Operation;
using reduction::DecodeResult;
using reduction::Violation;

namespace {

const std::vector<Rational>& small_ratios()
{
    static const std::vector<Rational> ratios{Rational(0), Rational(1, 3), Rational(1, 2), Rational(2, 3),
                                              Rational(1)};
    return ratios;
}

const std::vector<Rational>& wide_ratios()
{
    static const std::vector<Rational> ratios{Rational(0),    Rational(1, 4), Rational(1, 3), Rational(2, 5),
                                              Rational(1, 2), Rational(3, 5), Rational(2, 3), Rational(3, 4),
                                              Rational(1)};
    return ratios;
}

std::string verdict(bool b) { return b ? "true" : "false"; }

std::string instance(const LassoWord& w, const Formula& phi)
{
    return "word '" + render(w) + "' formula '" + render(phi) + "'";
}

std::vector<Letter> letters_without_pad(const MinskyMachine& machine)
{
    std::vector<Letter> out;
    const Alphabet alphabet = reduction::build_alphabet(machine);
    for (const auto& l : alphabet.letters()) {
        if (l != reduction::kPad) out.push_back(l);
    }
    return out;
}

std::string machine_line(const MinskyMachine& machine)
{
    std::string out;
    for (const auto& t : machine.transitions()) {
        if (!out.empty()) out += ", ";
        out += t.id + ":" + t.src + "-" + std::string(to_string(t.op)) + "->" + t.trg;
    }
    return "machine [" + out + "] init " + machine.t_init() + " final " + machine.t_final();
}

MinskyMachine chain_machine(const std::vector<Operation>& ops)
{
    std::vector<std::string> locs;
    std::vector<minsky::Transition> ts;
    for (std::size_t i = 0; i <= ops.size(); ++i) locs.push_back("l" + std::to_string(i));
    for (std::size_t i = 0; i < ops.size(); ++i) {
        ts.push_back({"t" + std::to_string(i + 1), locs[i], locs[i + 1], ops[i]});
    }
    return MinskyMachine(locs, ts, "t1", "t" + std::to_string(ops.size()));
}

template <typename Report>
std::optional<std::string> balance_failure(const Report& report, const char* partition)
{
    if (report.hypothesis && !report.complements_equal) {
        return std::string("partition ") + partition + " hypothesis holds but complements differ";
    }
    return std::nullopt;
}

/// Balance check of one word against both partitions; returns how many
/// partitions met their hypothesis.
std::size_t check_balance_word(const FiniteWord& w, const reduction::PartitionTable& table, Outcome& out)
{
    const auto a = reduction::balance_check_a(w, table);
    const auto b = reduction::balance_check_b(w, table);
    if (auto f = balance_failure(a, "A")) out.counterexample = *f + " on '" + render(w) + "'";
    if (auto f = balance_failure(b, "B")) out.counterexample = *f + " on '" + render(w) + "'";
    return (a.hypothesis ? 1U : 0U) + (b.hypothesis ? 1U : 0U);
}

/// A random word shaped like an encoding but with random transitions,
/// block sizes and separators, so that both members and non-members of
/// L_symb turn up often.
LassoWord structured_word(gen::Rng& rng, const MinskyMachine& machine)
{
    const auto& ts = machine.transitions();
    const std::vector<Letter> seps{reduction::kSep0, reduction::kSep1, reduction::kSepZero};
    std::vector<const minsky::Transition*> seq;
    const minsky::Transition* cur = &machine.transition(machine.t_init());
    if (rng.below(8) == 0) cur = &rng.pick(ts);
    seq.push_back(cur);
    const std::size_t k = rng.between(1, 4);
    while (seq.size() < k) {
        std::vector<const minsky::Transition*> next;
        for (const auto& t : ts) {
            if (t.src == seq.back()->trg || rng.below(6) == 0) next.push_back(&t);
        }
        if (next.empty()) break;
        seq.push_back(next[rng.below(next.size())]);
    }
    if (rng.below(4) != 0) seq.back() = &machine.transition(machine.t_final());

    FiniteWord prefix;
    auto put = [&](const Letter& l, std::size_t n) { prefix.insert(prefix.end(), n, l); };
    std::size_t non_zero = 0;
    prefix.push_back(rng.below(6) == 0 ? rng.pick(seps) : reduction::kSep0);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i > 0 || rng.below(6) == 0) {
            put(reduction::kA, rng.below(3));
            put(reduction::kB, rng.below(3));
        }
        prefix.emplace_back(seq[i]->id);
        put(reduction::kAHat, rng.below(3));
        put(reduction::kBHat, rng.below(3));
        Letter sep = reduction::kSepZero;
        if (!is_zero_test(seq[i]->op)) sep = (++non_zero % 2 == 1) ? reduction::kSep1 : reduction::kSep0;
        prefix.push_back(rng.below(6) == 0 ? rng.pick(seps) : sep);
    }
    put(reduction::kPad, rng.below(3));
    return {std::move(prefix), {reduction::kPad}};
}

/// phi U psi at position 0 read off its definition: psi eventually holds and
/// phi holds everywhere before. Positions are scanned up to the transient
/// plus one loop, after which every suffix has been seen.
bool classical_until(const LassoWord& w, const Formula& phi, const Formula& psi)
{
    for (std::size_t j = 0; j < w.period_span(); ++j) {
        const LassoWord s = w.suffix(j);
        if (brute_force_models(s, psi)) return true;
        if (!brute_force_models(s, phi)) return false;
    }
    return false;
}

struct IdentityInstance {
    LassoWord word;
    Formula phi;
    Formula psi;
};

IdentityInstance random_instance(gen::Rng& rng)
{
    static const auto abc = gen::letters({"a", "b", "c"});
    return {gen::random_lasso(rng, abc, 6, 6), gen::random_core_formula(rng, abc, 3, wide_ratios()),
            gen::random_core_formula(rng, abc, 3, wide_ratios())};
}

} // namespace

std::string Outcome::summary() const
{
    std::string out = name + ": checked " + std::to_string(checked);
    if (!note.empty()) out += " (" + note + ")";
    if (counterexample) out += "; counterexample: " + *counterexample;
    return out;
}

Sample reference_sample()
{
    MinskyMachine machine = gen::reference_machine();
    auto pi = minsky::find_successful_computation(machine, 14, 5);
    if (!pi) throw std::logic_error("reference machine has no bounded successful computation");
    auto enc = reduction::encode(*pi, machine);
    return {std::move(machine), std::move(*pi), std::move(enc)};
}

std::vector<Sample> sample_computations(std::size_t count, std::uint64_t seed, std::size_t max_transitions,
                                        SearchBounds bounds)
{
    gen::Rng rng(seed);
    std::vector<Sample> out;
    for (std::size_t attempt = 0; out.size() < count; ++attempt) {
        if (attempt > 1000 * count + 1000) throw std::runtime_error("too few machines with a bounded computation");
        MinskyMachine machine = gen::random_machine(rng, max_transitions);
        if (!minsky::validate(machine).empty()) continue;
        auto pi = minsky::find_successful_computation(machine, bounds.max_steps, bounds.max_counter);
        if (!pi) continue;
        auto enc = reduction::encode(*pi, machine);
        out.push_back({std::move(machine), std::move(*pi), std::move(enc)});
    }
    return out;
}

Outcome check_encodings_are_models(const std::vector<Sample>& samples)
{
    Outcome out{"encodings satisfy phi_symb & phi_count"};
    for (const auto& s : samples) {
        const EvaluationPlan plan(reduction::reduce(s.machine), reduction::build_alphabet(s.machine));
        ++out.checked;
        if (!plan.models(s.encoding.word)) {
            out.counterexample = machine_line(s.machine) + " word '" + render(s.encoding.word) + "' is rejected";
            return out;
        }
    }
    return out;
}

Outcome check_decode_round_trip(const std::vector<Sample>& samples)
{
    Outcome out{"decode(encode(pi)) == pi"};
    for (const auto& s : samples) {
        ++out.checked;
        const auto fail = [&](const std::string& why) { out.counterexample = machine_line(s.machine) + ": " + why; };
        if (!minsky::validate(s.machine).empty()) {
            fail("machine does not validate");
            return out;
        }
        if (minsky::run(s.machine, s.computation.transitions) != s.computation) {
            fail("replay differs from the computation");
            return out;
        }
        if (!reduction::in_Lsymb(s.encoding.word, s.machine)) {
            fail("encoding '" + render(s.encoding.word) + "' is outside L_symb");
            return out;
        }
        const DecodeResult d = reduction::decode(s.encoding.word, s.machine);
        if (!d.valid() || *d.computation != s.computation || d.segments != s.encoding.segments) {
            fail("decoding '" + render(s.encoding.word) + "' does not reproduce the computation");
            return out;
        }
    }
    return out;
}

Outcome check_symb_oracle(const std::vector<Sample>& samples, std::size_t mutations, std::size_t random_words,
                          std::size_t max_prefix, std::uint64_t seed)
{
    Outcome out{"phi_symb agrees with L_symb"};
    if (samples.empty()) return out;
    gen::Rng rng(seed);
    std::vector<EvaluationPlan> plans;
    std::vector<std::vector<Letter>> alphabets;
    for (const auto& s : samples) {
        plans.emplace_back(reduction::phi_symb(s.machine));
        alphabets.push_back(reduction::build_alphabet(s.machine).letters());
    }
    std::size_t members = 0;
    auto compare = [&](std::size_t which, const LassoWord& w, const char* origin) {
        ++out.checked;
        const bool member = reduction::in_Lsymb(w, samples[which].machine);
        const bool verdict_symb = plans[which].models(w);
        if (member) ++members;
        if (member != verdict_symb) {
            out.counterexample = std::string(origin) + " " + machine_line(samples[which].machine) + " word '" +
                                 render(w) + "' in_Lsymb=" + verdict(member) + " phi_symb=" + verdict(verdict_symb);
        }
        return !out.counterexample;
    };

    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!compare(i, samples[i].encoding.word, "encoding")) return out;
    }
    for (std::size_t i = 0; i < mutations; ++i) {
        const std::size_t which = i % samples.size();
        const auto& w = samples[which].encoding.word;
        if (!compare(which, gen::apply(w, gen::random_mutation(rng, w, alphabets[which])), "mutation")) return out;
    }
    for (std::size_t i = 0; i < random_words; ++i) {
        const std::size_t which = i % samples.size();
        LassoWord w(gen::random_word(rng, alphabets[which], 0, max_prefix), {reduction::kPad});
        if (!compare(which, w, "random")) return out;
    }
    for (std::size_t i = 0; i < random_words; ++i) {
        const std::size_t which = i % samples.size();
        if (!compare(which, structured_word(rng, samples[which].machine), "structured")) return out;
    }
    out.note = std::to_string(members) + " members";
    return out;
}

Outcome check_balance_exhaustive(const MinskyMachine& machine, std::size_t max_length)
{
    Outcome out{"complement balance, exhaustive"};
    const reduction::PartitionTable table(machine);
    const auto letters = letters_without_pad(machine);
    std::size_t hypotheses = 0;
    for (std::size_t len = 0; len <= max_length; ++len) {
        std::vector<std::size_t> digits(len, 0);
        FiniteWord w(len, letters.front());
        for (;;) {
            ++out.checked;
            hypotheses += check_balance_word(w, table, out);
            if (out.counterexample) return out;
            std::size_t i = 0;
            while (i < len && ++digits[i] == letters.size()) {
                digits[i] = 0;
                w[i] = letters.front();
                ++i;
            }
            if (i == len) break;
            w[i] = letters[digits[i]];
        }
    }
    out.note = std::to_string(hypotheses) + " hypotheses met";
    return out;
}

Outcome check_balance_random(const MinskyMachine& machine, std::size_t count, std::size_t max_length,
                             std::uint64_t seed)
{
    Outcome out{"complement balance, random"};
    const reduction::PartitionTable table(machine);
    const auto letters = letters_without_pad(machine);
    gen::Rng rng(seed);
    std::size_t hypotheses = 0;
    for (std::size_t i = 0; i < count; ++i) {
        FiniteWord w;
        if (i % 2 == 0) {
            w = gen::random_word(rng, letters, 0, max_length);
        } else {
            // pair every letter with one of its complementary class so that
            // the hypothesis is met regularly
            const std::size_t half = rng.between(0, max_length / 2);
            for (std::size_t k = 0; k < half; ++k) {
                const Letter& l = rng.pick(letters);
                const auto t = table.a_type_of(l);
                w.push_back(l);
                if (!t) continue;
                const auto& cls = table.a_class(reduction::complement(*t));
                if (cls.empty()) continue;
                w.push_back(*std::next(cls.begin(), static_cast<std::ptrdiff_t>(rng.below(cls.size()))));
            }
            for (std::size_t k = w.size(); k > 1; --k) std::swap(w[k - 1], w[rng.below(k)]);
        }
        ++out.checked;
        hypotheses += check_balance_word(w, table, out);
        if (out.counterexample) return out;
    }
    out.note = std::to_string(hypotheses) + " hypotheses met";
    return out;
}

void enumerate_lsymb(const MinskyMachine& machine, std::size_t max_prefix,
                     const std::function<void(const LassoWord&)>& visit)
{
    using reduction::kA;
    using reduction::kAHat;
    using reduction::kB;
    using reduction::kBHat;
    const auto& ts = machine.transitions();

    // counter blocks in word order: v_1, u_1, v_2, u_2, ..., v_k
    struct Block {
        bool hatted;
        std::size_t step;  // 0-based transition index
    };

    auto emit_all = [&](const std::vector<const minsky::Transition*>& seq) {
        const std::size_t k = seq.size();
        const std::size_t fixed = 1 + 2 * k;
        if (fixed > max_prefix) return;
        std::vector<Block> blocks;
        for (std::size_t i = 0; i < k; ++i) {
            blocks.push_back({true, i});
            if (i + 1 < k) blocks.push_back({false, i + 1});
        }
        std::vector<Letter> seps{reduction::kSep0};
        std::size_t non_zero = 0;
        for (const auto* t : seq) {
            if (is_zero_test(t->op)) seps.push_back(reduction::kSepZero);
            else seps.push_back(++non_zero % 2 == 1 ? reduction::kSep1 : reduction::kSep0);
        }
        std::vector<CounterConfig> sizes(blocks.size());

        auto build = [&] {
            FiniteWord prefix{seps[0]};
            std::size_t b = 0;
            for (std::size_t i = 0; i < k; ++i) {
                if (i > 0) {
                    prefix.insert(prefix.end(), sizes[b].m, kA);
                    prefix.insert(prefix.end(), sizes[b].n, kB);
                    ++b;
                }
                prefix.emplace_back(seq[i]->id);
                prefix.insert(prefix.end(), sizes[b].m, kAHat);
                prefix.insert(prefix.end(), sizes[b].n, kBHat);
                ++b;
                prefix.push_back(seps[i + 1]);
            }
            visit(LassoWord(std::move(prefix), {reduction::kPad}));
        };

        // distribute the remaining letters over the blocks
        auto fill = [&](auto&& self, std::size_t b, std::size_t budget) -> void {
            if (b == blocks.size()) {
                build();
                return;
            }
            const Operation op = seq[blocks[b].step]->op;
            const bool m_zero = blocks[b].hatted && op == Operation::Zero1;
            const bool n_zero = blocks[b].hatted && op == Operation::Zero2;
            for (std::size_t m = 0; m <= (m_zero ? 0 : budget); ++m) {
                for (std::size_t n = 0; n <= (n_zero ? 0 : budget - m); ++n) {
                    sizes[b] = {m, n};
                    self(self, b + 1, budget - m - n);
                }
            }
        };
        fill(fill, 0, max_prefix - fixed);
    };

    // transition sequences from t_init chained by location, ending in t_final
    std::vector<const minsky::Transition*> seq{&machine.transition(machine.t_init())};
    auto walk = [&](auto&& self) -> void {
        if (1 + 2 * seq.size() > max_prefix) return;
        if (seq.back()->id == machine.t_final()) emit_all(seq);
        for (const auto& t : ts) {
            if (t.src != seq.back()->trg) continue;
            seq.push_back(&t);
            self(self);
            seq.pop_back();
        }
    };
    walk(walk);
}

Outcome check_count_enumeration(const MinskyMachine& machine, std::size_t max_prefix)
{
    Outcome out{"phi_count agrees with decode on L_symb"};
    const EvaluationPlan plan(reduction::phi_count(machine));
    std::size_t valid = 0;
    enumerate_lsymb(machine, max_prefix, [&](const LassoWord& w) {
        if (out.counterexample) return;
        ++out.checked;
        bool decoded = false;
        try {
            decoded = reduction::decode(w, machine).valid();
        } catch (const reduction::ReductionError&) {
            out.counterexample = "enumerated word '" + render(w) + "' is outside L_symb";
            return;
        }
        const bool counted = plan.models(w);
        if (decoded) ++valid;
        if (counted != decoded) {
            out.counterexample = machine_line(machine) + " word '" + render(w) + "' phi_count=" + verdict(counted) +
                                 " decode valid=" + verdict(decoded);
        }
    });
    out.note = std::to_string(valid) + " valid computations";
    return out;
}

Outcome check_mutation_kill(const std::vector<Sample>& samples)
{
    Outcome out{"counter-block mutations are rejected"};
    std::size_t killed = 0;
    for (const auto& s : samples) {
        const EvaluationPlan plan(reduction::phi_count(s.machine));
        const auto letters = reduction::build_alphabet(s.machine).letters();
        const auto& original = s.encoding.segments;
        for (const auto& mutation : gen::all_mutations(s.encoding.word, letters)) {
            const LassoWord w = gen::apply(s.encoding.word, mutation);
            if (!reduction::in_Lsymb(w, s.machine)) continue;
            ++out.checked;
            const DecodeResult d = reduction::decode(w, s.machine);
            const bool counted = plan.models(w);
            const auto fail = [&](const std::string& why) {
                out.counterexample = machine_line(s.machine) + " " + mutation.to_string() + " of '" +
                                     render(s.encoding.word) + "': " + why;
            };

            std::optional<Violation::Kind> kind;
            std::size_t index = 0;
            const auto& seg = d.segments;
            if (seg.transitions == original.transitions) {
                for (std::size_t i = 1; i <= seg.length() && !kind; ++i) {
                    if (seg.hatted[i - 1] != original.hatted[i - 1]) {
                        kind = Violation::Kind::Update;
                        index = i;
                    } else if (i < seg.length() && seg.plain[i] != original.plain[i]) {
                        kind = Violation::Kind::Carryover;
                        index = i;
                    }
                }
            }

            if (!kind) {
                if (counted != d.valid()) {
                    fail("phi_count=" + verdict(counted) + " but decode valid=" + verdict(d.valid()));
                    return out;
                }
                continue;
            }
            if (counted) {
                fail("phi_count accepts a changed counter block");
                return out;
            }
            if (!d.violation || d.violation->kind != *kind || d.violation->index != index) {
                fail("decode reports " + (d.violation ? d.violation->to_string() : std::string("no violation")) +
                     ", expected " + (*kind == Violation::Kind::Update ? "update" : "carryover") +
                     " at i=" + std::to_string(index));
                return out;
            }
            ++killed;
        }
    }
    out.note = std::to_string(killed) + " block mutations killed";
    return out;
}

Outcome check_evaluator_exhaustive(const std::vector<Letter>& letters, std::size_t max_span, std::size_t max_depth,
                                   const std::vector<Rational>& ratios)
{
    Outcome out{"models == brute_force_models, exhaustive"};
    const auto words = gen::all_lassos(letters, max_span);
    const auto formulas = gen::all_core_formulas(letters, max_depth, ratios);
    std::size_t satisfied = 0;
    for (const auto& f : formulas) {
        const EvaluationPlan plan(f);
        for (const auto& w : words) {
            ++out.checked;
            const bool fast = plan.models(w);
            const bool slow = brute_force_models(w, f);
            if (fast) ++satisfied;
            if (fast != slow) {
                out.counterexample = instance(w, f) + " models=" + verdict(fast) + " brute_force=" + verdict(slow);
                return out;
            }
        }
    }
    out.note = std::to_string(formulas.size()) + " formulas x " + std::to_string(words.size()) + " words, " +
               std::to_string(satisfied) + " satisfied";
    return out;
}

Outcome check_evaluator_random(std::size_t count, std::uint64_t seed)
{
    Outcome out{"models == brute_force_models, random"};
    static const auto abc = gen::letters({"a", "b", "c"});
    gen::Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const LassoWord w = gen::random_lasso(rng, abc, 8, 6);
        const Formula f = i % 2 == 0 ? gen::random_core_formula(rng, abc, 5, wide_ratios())
                                     : gen::random_formula(rng, abc, 4, wide_ratios());
        ++out.checked;
        const bool fast = models(w, f);
        const bool slow = brute_force_models(w, f);
        if (fast != slow) {
            out.counterexample = instance(w, f) + " models=" + verdict(fast) + " brute_force=" + verdict(slow);
            return out;
        }
    }
    return out;
}

Outcome check_until_zero_is_eventually(std::size_t count, std::uint64_t seed)
{
    Outcome out{"U{0} == F"};
    gen::Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const auto [w, phi, psi] = random_instance(rng);
        const Formula lhs = Formula::freq_until(Rational(0), phi, psi);
        const Formula rhs = Formula::eventually(psi);
        const SatTable tl = sat_table(w, lhs);
        const SatTable tr = sat_table(w, rhs);
        ++out.checked;
        for (std::size_t p = 0; p < w.period_span(); ++p) {
            if (tl.holds(lhs, p) != tr.holds(rhs, p)) {
                out.counterexample = instance(w, lhs) + " differs from F at position " + std::to_string(p);
                return out;
            }
        }
    }
    return out;
}

Outcome check_until_one_is_classical(std::size_t count, std::uint64_t seed)
{
    Outcome out{"U{1} == classical until"};
    gen::Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const auto [w, phi, psi] = random_instance(rng);
        const Formula f = Formula::freq_until(Rational(1), phi, psi);
        ++out.checked;
        const bool freq = models(w, f);
        const bool classical = classical_until(w, phi, psi);
        if (freq != classical) {
            out.counterexample = instance(w, f) + " models=" + verdict(freq) + " classical=" + verdict(classical);
            return out;
        }
    }
    return out;
}

Outcome check_frequency_monotonicity(std::size_t count, std::uint64_t seed)
{
    Outcome out{"U{r} is antitone in r"};
    gen::Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const auto [w, phi, psi] = random_instance(rng);
        Rational r1 = rng.pick(wide_ratios());
        Rational r2 = rng.pick(wide_ratios());
        if (r2 < r1) std::swap(r1, r2);
        const Formula weak = Formula::freq_until(r1, phi, psi);
        const Formula strong = Formula::freq_until(r2, phi, psi);
        ++out.checked;
        if (models(w, strong) && !models(w, weak)) {
            out.counterexample = instance(w, strong) + " holds but '" + render(weak) + "' does not";
            return out;
        }
    }
    return out;
}

Outcome check_suffix_congruence(std::size_t count, std::uint64_t seed)
{
    Outcome out{"suffixes |v| apart agree"};
    gen::Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const auto [w, phi, psi] = random_instance(rng);
        const Formula f = Formula::freq_until(rng.pick(wide_ratios()), phi, psi);
        const std::size_t p = w.prefix_length() + rng.below(3 * w.loop_length());
        ++out.checked;
        const bool here = models(w.suffix(p), f);
        const bool there = models(w.suffix(p + w.loop_length()), f);
        if (here != there) {
            out.counterexample = instance(w, f) + " differs between positions " + std::to_string(p) + " and " +
                                 std::to_string(p + w.loop_length());
            return out;
        }
    }
    return out;
}

Outcome check_parse_render(std::size_t count, std::uint64_t seed)
{
    Outcome out{"parse(render(phi)) round trip"};
    static const auto abc = gen::letters({"a", "b", "c"});
    gen::Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const Formula f = gen::random_formula(rng, abc, 5, wide_ratios());
        const std::string text = render(f);
        ++out.checked;
        Formula back = Formula::top();
        try {
            back = parse_formula(text);
        } catch (const ParseError& e) {
            out.counterexample = "'" + text + "' does not parse: " + e.what();
            return out;
        }
        if (back != f || render(back) != text) {
            out.counterexample = "'" + text + "' reparses as '" + render(back) + "'";
            return out;
        }
    }
    return out;
}

Outcome check_desugar_preserves(std::size_t count, std::uint64_t seed)
{
    Outcome out{"desugaring preserves models"};
    static const auto abc = gen::letters({"a", "b", "c"});
    static const Alphabet alphabet(abc);
    gen::Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const Formula f = gen::random_formula(rng, abc, 4, small_ratios());
        const Formula core = desugar(f, alphabet);
        const LassoWord w = gen::random_lasso(rng, abc, 5, 4);
        ++out.checked;
        if (!core.is_core(false)) {
            out.counterexample = "'" + render(core) + "' is not in core form";
            return out;
        }
        const bool direct = brute_force_models(w, f);
        const bool expanded = brute_force_models(w, core);
        const bool fast = models(w, f);
        if (direct != expanded || direct != fast) {
            out.counterexample = instance(w, f) + " sugar=" + verdict(direct) + " core=" + verdict(expanded) +
                                 " models=" + verdict(fast);
            return out;
        }
    }
    return out;
}

MinskyMachine two_transition_machine()
{
    return chain_machine({Operation::Inc1, Operation::Dec1});
}

MinskyMachine three_transition_machine()
{
    return chain_machine({Operation::Inc1, Operation::Zero2, Operation::Dec1});
}

MinskyMachine inc_dec_machine()
{
    return chain_machine({Operation::Inc1, Operation::Dec2});
}

} // namespace fltl::campaigns
