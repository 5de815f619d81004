#include <fltl/reduction.hpp>

#include <functional>
#include <stdexcept>

namespace fltl::reduction {

using minsky::Computation;
using minsky::CounterConfig;
using minsky::MinskyMachine;
using minsky::Operation;

namespace {

bool is_separator(const Letter& l)
{
    return l == kSep0 || l == kSep1 || l == kSepZero;
}

/// Separator expected after each transition: `$z` after zero tests, the
/// others alternate starting from `$1`.
std::vector<Letter> expected_separators(const MinskyMachine& machine, const std::vector<std::string>& ids)
{
    std::vector<Letter> out{kSep0};
    std::size_t non_zero = 0;
    for (const auto& id : ids) {
        if (is_zero_test(machine.transition(id).op)) {
            out.push_back(kSepZero);
        } else {
            ++non_zero;
            out.push_back(non_zero % 2 == 1 ? kSep1 : kSep0);
        }
    }
    return out;
}

} // namespace

std::optional<Segmentation> segment(const LassoWord& w, const MinskyMachine& machine)
{
    for (const auto& l : w.loop()) {
        if (l != kPad) return std::nullopt;
    }
    std::size_t end = w.prefix_length();
    while (end > 0 && w.prefix()[end - 1] == kPad) --end;
    const FiniteWord& p = w.prefix();

    Segmentation seg;
    std::size_t i = 0;
    auto run_of = [&](const Letter& l) {
        std::uint64_t n = 0;
        while (i < end && p[i] == l) {
            ++n;
            ++i;
        }
        return n;
    };

    if (end == 0 || !is_separator(p[0])) return std::nullopt;
    seg.separators.push_back(p[0]);
    seg.separator_positions.push_back(0);
    i = 1;
    while (i < end) {
        const std::uint64_t m = run_of(kA);
        const std::uint64_t n = run_of(kB);
        if (i >= end || !machine.index_of(p[i].name())) return std::nullopt;
        seg.plain.push_back({m, n});
        seg.transitions.push_back(p[i].name());
        seg.transition_positions.push_back(i);
        ++i;
        const std::uint64_t mh = run_of(kAHat);
        const std::uint64_t nh = run_of(kBHat);
        if (i >= end || !is_separator(p[i])) return std::nullopt;
        seg.hatted.push_back({mh, nh});
        seg.separators.push_back(p[i]);
        seg.separator_positions.push_back(i);
        ++i;
    }
    if (seg.transitions.empty()) return std::nullopt;
    return seg;
}

bool in_Lsymb(const LassoWord& w, const MinskyMachine& machine)
{
    const auto seg = segment(w, machine);
    if (!seg) return false;
    const std::size_t k = seg->length();

    // (P1)
    if (seg->plain.front() != CounterConfig{0, 0}) return false;
    if (seg->transitions.front() != machine.t_init() || seg->transitions.back() != machine.t_final()) return false;
    // (P2)
    for (std::size_t i = 1; i < k; ++i) {
        if (machine.transition(seg->transitions[i - 1]).trg != machine.transition(seg->transitions[i]).src) return false;
    }
    // (P3), (P4)
    for (std::size_t i = 0; i < k; ++i) {
        const Operation op = machine.transition(seg->transitions[i]).op;
        if (op == Operation::Zero1 && seg->hatted[i].m != 0) return false;
        if (op == Operation::Zero2 && seg->hatted[i].n != 0) return false;
    }
    // (P5)
    return seg->separators == expected_separators(machine, seg->transitions);
}

EncodedComputation encode(const Computation& pi, const MinskyMachine& machine)
{
    if (!pi.successful) throw ReductionError("only successful computations can be encoded");
    Computation replay;
    try {
        replay = run(machine, pi.transitions);
    } catch (const minsky::RunError& e) {
        throw ReductionError(std::string("computation is not valid for the machine: ") + e.what());
    }
    if (replay != pi) throw ReductionError("computation does not match its replay");

    const auto seps = expected_separators(machine, pi.transitions);
    FiniteWord prefix;
    Segmentation seg;
    auto put = [&](const Letter& l, std::uint64_t times) {
        for (std::uint64_t r = 0; r < times; ++r) prefix.push_back(l);
    };

    seg.separators.push_back(seps[0]);
    seg.separator_positions.push_back(0);
    prefix.push_back(seps[0]);
    for (std::size_t i = 1; i <= pi.length(); ++i) {
        const CounterConfig& before = pi.configs[i - 1];
        const CounterConfig& after = pi.configs[i];
        put(kA, before.m);
        put(kB, before.n);
        seg.plain.push_back(before);
        seg.transition_positions.push_back(prefix.size());
        seg.transitions.push_back(pi.transitions[i - 1]);
        prefix.emplace_back(pi.transitions[i - 1]);
        put(kAHat, after.m);
        put(kBHat, after.n);
        seg.hatted.push_back(after);
        seg.separator_positions.push_back(prefix.size());
        seg.separators.push_back(seps[i]);
        prefix.push_back(seps[i]);
    }
    return {LassoWord(std::move(prefix), {kPad}), std::move(seg)};
}

std::string Violation::to_string() const
{
    return std::string("kind=") + (kind == Kind::Carryover ? "carryover" : "update") + " i=" + std::to_string(index) +
           " expected=" + (expected ? minsky::to_string(*expected) : std::string("blocked")) +
           " actual=" + minsky::to_string(actual);
}

DecodeResult decode(const LassoWord& w, const MinskyMachine& machine)
{
    if (!in_Lsymb(w, machine)) throw ReductionError("word is not in L_symb");
    DecodeResult result{*segment(w, machine), std::nullopt, std::nullopt};
    const Segmentation& seg = result.segments;
    const std::size_t k = seg.length();

    for (std::size_t i = 1; i <= k; ++i) {
        const auto expected = step(seg.plain[i - 1], machine.transition(seg.transitions[i - 1]).op);
        if (!expected || *expected != seg.hatted[i - 1]) {
            result.violation = Violation{Violation::Kind::Update, i, expected, seg.hatted[i - 1]};
            return result;
        }
        if (i < k && seg.plain[i] != seg.hatted[i - 1]) {
            result.violation = Violation{Violation::Kind::Carryover, i, seg.hatted[i - 1], seg.plain[i]};
            return result;
        }
    }

    Computation pi;
    pi.configs.push_back({0, 0});
    pi.configs.insert(pi.configs.end(), seg.hatted.begin(), seg.hatted.end());
    pi.transitions = seg.transitions;
    pi.successful = true;
    result.computation = std::move(pi);
    return result;
}

namespace {

template <std::size_t N, std::size_t K>
BalanceReport<N> balance(const FiniteWord& w, const std::array<Type, N>& types,
                         const std::vector<std::array<Type, K>>& tuples,
                         const std::function<std::optional<Type>(const Letter&)>& type_of)
{
    BalanceReport<N> report;
    for (const auto& l : w) {
        const auto t = type_of(l);
        if (!t) throw std::invalid_argument("letter '" + l.name() + "' is outside the partition");
        ++report.counts.at(static_cast<std::size_t>(*t));
    }
    // sum >= |w|/2  <=>  2*sum >= |w|
    report.hypothesis = true;
    for (const auto& tuple : tuples) {
        std::size_t sum = 0;
        for (Type t : tuple) sum += report.count(t);
        if (2 * sum < w.size()) report.hypothesis = false;
    }
    report.complements_equal = true;
    for (Type t : types) {
        if (report.count(t) != report.count(complement(t))) report.complements_equal = false;
    }
    return report;
}

} // namespace

BalanceReport<8> balance_check_a(const FiniteWord& w, const PartitionTable& table)
{
    return balance(w, kTypesA, PartitionTable::tuples_a(), [&](const Letter& l) { return table.a_type_of(l); });
}

BalanceReport<6> balance_check_b(const FiniteWord& w, const PartitionTable& table)
{
    return balance(w, kTypesB, PartitionTable::tuples_b(), [&](const Letter& l) { return table.b_type_of(l); });
}

} // namespace fltl::reduction
