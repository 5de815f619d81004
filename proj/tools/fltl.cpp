// Command-line front end: evaluation of fLTL formulas on lasso words, the
// counter machine reduction, and the self-test campaigns.
//
// Exit codes: 0 true / success, 1 false / failure, 2 usage or input error,
// 3 a self-test campaign found a counterexample.

#include <fltl/campaigns.hpp>
#include <fltl/error.hpp>
#include <fltl/evaluator.hpp>
#include <fltl/parser.hpp>
#include <fltl/reduction.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace fltl;
using minsky::MinskyMachine;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;
constexpr int kCounterexample = 3;

MinskyMachine load_machine(const std::string& path)
{
    std::stringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw Error("cannot open machine file '" + path + "'");
        buffer << in.rdbuf();
    }
    MinskyMachine machine = minsky::parse_machine(buffer.str());
    const auto problems = minsky::validate(machine);
    if (!problems.empty()) {
        std::string msg = "invalid machine:";
        for (const auto& p : problems) msg += "\n  " + p;
        throw MachineError(msg);
    }
    return machine;
}

std::vector<std::string> split_ids(const std::string& text)
{
    std::vector<std::string> ids;
    std::string cur;
    for (char c : text) {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) ids.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) ids.push_back(cur);
    return ids;
}

struct EvalArgs {
    std::string formula;
    std::string word;
    std::string alphabet;
    bool table = false;
    bool witness = false;
};

int run_eval(const EvalArgs& args)
{
    const LassoWord w = parse_lasso(args.word);
    std::optional<Alphabet> alphabet;
    if (!args.alphabet.empty()) alphabet = Alphabet(parse_finite_word(args.alphabet));
    const Formula phi = alphabet ? parse_formula(args.formula, *alphabet) : parse_formula(args.formula);
    const bool result = alphabet ? models(w, phi, *alphabet) : models(w, phi);

    if (args.table) {
        const SatTable t = sat_table(w, phi);
        for (const auto& f : t.formulas()) {
            std::string bits;
            for (auto c : t.row(f)) bits += c ? '1' : '0';
            std::cout << bits.substr(0, t.prefix_length()) << '|' << bits.substr(t.prefix_length()) << "  "
                      << render(f) << '\n';
        }
    }
    if (args.witness) {
        for (const auto& report : until_witnesses(w, phi)) {
            std::cout << render(report.until) << ": ";
            if (report.witness) {
                std::cout << "j=" << report.witness->j << " count=" << report.witness->count << '\n';
            } else {
                std::cout << "no witness\n";
            }
        }
    }
    std::cout << (result ? "true" : "false") << '\n';
    return result ? kTrue : kFalse;
}

int run_reduce(const std::string& path, const std::string& part, bool sizes)
{
    const MinskyMachine machine = load_machine(path);
    Formula phi = reduction::reduce(machine);
    if (part == "symb") phi = reduction::phi_symb(machine);
    if (part == "count") phi = reduction::phi_count(machine);
    if (sizes) {
        std::cout << "size " << phi.size() << "\ndepth " << phi.depth() << '\n';
    } else {
        std::cout << render(phi) << '\n';
    }
    return kTrue;
}

minsky::Computation computation_for(const MinskyMachine& machine, const std::string& ids, std::size_t steps,
                                    std::uint64_t counter)
{
    if (!ids.empty()) return minsky::run(machine, split_ids(ids));
    auto pi = minsky::find_successful_computation(machine, steps, counter);
    if (!pi) {
        throw Error("no successful computation within " + std::to_string(steps) + " steps and counters <= " +
                    std::to_string(counter));
    }
    return *pi;
}

int run_encode(const std::string& path, const std::string& ids, std::size_t steps, std::uint64_t counter)
{
    const MinskyMachine machine = load_machine(path);
    const auto enc = reduction::encode(computation_for(machine, ids, steps, counter), machine);
    std::cout << render(enc.word) << '\n';
    return kTrue;
}

int run_simulate(const std::string& path, const std::string& ids, std::size_t steps, std::uint64_t counter)
{
    const MinskyMachine machine = load_machine(path);
    try {
        const auto pi = computation_for(machine, ids, steps, counter);
        std::cout << minsky::render_trace(machine, pi);
        return pi.successful ? kTrue : kFalse;
    } catch (const minsky::RunError& e) {
        std::cout << "error at step " << e.index() << ": " << e.what() << '\n';
        return kFalse;
    }
}

int run_decode(const std::string& path, const std::string& word)
{
    const MinskyMachine machine = load_machine(path);
    const LassoWord w = parse_lasso(word);
    const auto result = reduction::decode(w, machine);
    if (result.valid()) {
        std::cout << minsky::render_trace(machine, *result.computation);
        return kTrue;
    }
    std::cout << result.violation->to_string() << '\n';
    return kFalse;
}

int run_check(const std::string& path, const std::string& word)
{
    const MinskyMachine machine = load_machine(path);
    const Alphabet alphabet = reduction::build_alphabet(machine);
    const LassoWord w = parse_lasso(word);
    const bool symb = models(w, reduction::phi_symb(machine), alphabet);
    const bool count = models(w, reduction::phi_count(machine), alphabet);
    const bool member = reduction::in_Lsymb(w, machine);
    std::cout << "phi_symb " << (symb ? "true" : "false") << '\n'
              << "phi_count " << (count ? "true" : "false") << '\n'
              << "in_Lsymb " << (member ? "true" : "false") << '\n';
    if (member) {
        const auto d = reduction::decode(w, machine);
        std::cout << "decode " << (d.valid() ? std::string("valid") : d.violation->to_string()) << '\n';
    }
    return symb && count ? kTrue : kFalse;
}

int run_selftest(std::uint64_t seed, const std::string& budget)
{
    using namespace fltl::campaigns;
    const bool full = budget == "full";
    const auto started = std::chrono::steady_clock::now();

    std::vector<Sample> samples{reference_sample()};
    for (auto& s : sample_computations(full ? 50 : 10, seed)) samples.push_back(std::move(s));

    std::vector<std::function<Outcome()>> suites{
        [&] { return check_parse_render(full ? 10000 : 500, seed); },
        [&] { return check_desugar_preserves(full ? 10000 : 500, seed); },
        [&] { return check_evaluator_exhaustive(gen::letters({"a", "b"}), full ? 5 : 4, full ? 3 : 2,
                                                {Rational(0), Rational(1, 3), Rational(1, 2), Rational(2, 3),
                                                 Rational(1)}); },
        [&] { return check_evaluator_random(full ? 10000 : 500, seed); },
        [&] { return check_until_zero_is_eventually(full ? 1000 : 200, seed); },
        [&] { return check_until_one_is_classical(full ? 1000 : 200, seed); },
        [&] { return check_frequency_monotonicity(full ? 1000 : 200, seed); },
        [&] { return check_suffix_congruence(full ? 1000 : 200, seed); },
        [&] { return check_decode_round_trip(samples); },
        [&] { return check_encodings_are_models(samples); },
        [&] { return check_symb_oracle(samples, full ? 1000 : 200, full ? 1000 : 200, 20, seed); },
        [&] { return check_balance_exhaustive(inc_dec_machine(), full ? 6 : 4); },
        [&] { return check_balance_random(inc_dec_machine(), full ? 10000 : 1000, 40, seed); },
        [&] { return check_count_enumeration(two_transition_machine(), full ? 24 : 14); },
        [&] { return check_mutation_kill(samples); },
    };

    bool ok = true;
    for (const auto& suite : suites) {
        const Outcome outcome = suite();
        std::cout << (outcome.passed() ? "ok   " : "FAIL ") << outcome.summary() << '\n';
        ok = ok && outcome.passed();
    }
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::cout << (ok ? "all campaigns passed" : "counterexample found") << " in " << elapsed << "s\n";
    return ok ? kTrue : kCounterexample;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Frequency LTL on lasso words and the counter machine reduction"};
    app.require_subcommand(1);

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Decide whether a lasso word satisfies a formula");
    eval->add_option("formula", eval_args.formula, "Formula, e.g. 'a U{1/2} b'")->required();
    eval->add_option("word", eval_args.word, "Lasso word 'prefix ; loop', e.g. 'c b a a b b ; c'")->required();
    eval->add_option("--alphabet", eval_args.alphabet, "Space separated letters to check against");
    eval->add_flag("--table", eval_args.table, "Print the satisfaction table");
    eval->add_flag("--witness", eval_args.witness, "Print the minimal witness of every until at position 0");

    std::string machine_path;
    std::string part = "all";
    bool sizes = false;
    auto* reduce = app.add_subcommand("reduce", "Print the formula of the reduction for a machine");
    reduce->add_option("machine", machine_path, "Machine file, '-' for stdin")->required();
    reduce->add_option("--part", part, "symb, count or all")->check(CLI::IsMember({"symb", "count", "all"}));
    reduce->add_flag("--size", sizes, "Print size and depth instead of the formula");

    std::string ids;
    std::size_t steps = 14;
    std::uint64_t counter = 5;
    auto add_computation_options = [&](CLI::App* cmd) {
        cmd->add_option("machine", machine_path, "Machine file, '-' for stdin")->required();
        cmd->add_option("--ids", ids, "Comma separated transition ids; default searches for a computation");
        cmd->add_option("--steps", steps, "Search bound on the number of steps");
        cmd->add_option("--counter", counter, "Search bound on both counters");
    };
    auto* encode = app.add_subcommand("encode", "Encode a successful computation as a lasso word");
    add_computation_options(encode);
    auto* simulate = app.add_subcommand("simulate", "Replay or search a computation and print its trace");
    add_computation_options(simulate);

    std::string word;
    auto* decode = app.add_subcommand("decode", "Read a computation back out of an encoding");
    decode->add_option("machine", machine_path, "Machine file, '-' for stdin")->required();
    decode->add_option("word", word, "Lasso word")->required();
    auto* check = app.add_subcommand("check", "Evaluate both reduction formulas and the direct checks on a word");
    check->add_option("machine", machine_path, "Machine file, '-' for stdin")->required();
    check->add_option("word", word, "Lasso word")->required();

    std::uint64_t seed = 1;
    std::string budget = "small";
    auto* selftest = app.add_subcommand("selftest", "Run the property campaigns");
    selftest->add_option("--seed", seed, "Random seed");
    selftest->add_option("--budget", budget, "small or full")->check(CLI::IsMember({"small", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kTrue : kInputError;
    }

    try {
        if (*eval) return run_eval(eval_args);
        if (*reduce) return run_reduce(machine_path, part, sizes);
        if (*encode) return run_encode(machine_path, ids, steps, counter);
        if (*simulate) return run_simulate(machine_path, ids, steps, counter);
        if (*decode) return run_decode(machine_path, word);
        if (*check) return run_check(machine_path, word);
        if (*selftest) return run_selftest(seed, budget);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
