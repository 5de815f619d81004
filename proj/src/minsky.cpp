#include <fltl/error.hpp>
#include <fltl/minsky.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace fltl::minsky {

std::string_view to_string(Operation op) noexcept
{
    switch (op) {
    case Operation::Inc1: return "inc1";
    case Operation::Inc2: return "inc2";
    case Operation::Dec1: return "dec1";
    case Operation::Dec2: return "dec2";
    case Operation::Zero1: return "zero1";
    case Operation::Zero2: return "zero2";
    }
    return "?";
}

std::optional<Operation> parse_operation(std::string_view text) noexcept
{
    for (Operation op : {Operation::Inc1, Operation::Inc2, Operation::Dec1, Operation::Dec2, Operation::Zero1,
                         Operation::Zero2}) {
        if (to_string(op) == text) return op;
    }
    return std::nullopt;
}

bool is_zero_test(Operation op) noexcept
{
    return op == Operation::Zero1 || op == Operation::Zero2;
}

std::string to_string(const CounterConfig& c)
{
    return "(" + std::to_string(c.m) + "," + std::to_string(c.n) + ")";
}

std::optional<CounterConfig> step(const CounterConfig& c, Operation op) noexcept
{
    switch (op) {
    case Operation::Inc1: return CounterConfig{c.m + 1, c.n};
    case Operation::Inc2: return CounterConfig{c.m, c.n + 1};
    case Operation::Dec1:
        if (c.m == 0) return std::nullopt;
        return CounterConfig{c.m - 1, c.n};
    case Operation::Dec2:
        if (c.n == 0) return std::nullopt;
        return CounterConfig{c.m, c.n - 1};
    case Operation::Zero1:
        if (c.m != 0) return std::nullopt;
        return c;
    case Operation::Zero2:
        if (c.n != 0) return std::nullopt;
        return c;
    }
    return std::nullopt;
}

MinskyMachine::MinskyMachine(std::vector<std::string> locations, std::vector<Transition> transitions,
                             std::string t_init, std::string t_final)
    : locations_(std::move(locations)),
      transitions_(std::move(transitions)),
      t_init_(std::move(t_init)),
      t_final_(std::move(t_final))
{
}

std::optional<std::size_t> MinskyMachine::index_of(std::string_view id) const
{
    for (std::size_t i = 0; i < transitions_.size(); ++i) {
        if (transitions_[i].id == id) return i;
    }
    return std::nullopt;
}

const Transition& MinskyMachine::transition(std::string_view id) const
{
    const auto i = index_of(id);
    if (!i) throw MachineError("unknown transition '" + std::string(id) + "'");
    return transitions_[*i];
}

std::vector<std::string> validate(const MinskyMachine& machine)
{
    std::vector<std::string> out;
    const std::set<std::string> locs(machine.locations().begin(), machine.locations().end());
    if (locs.size() != machine.locations().size()) out.emplace_back("duplicate location name");
    std::set<std::string> ids;
    for (const auto& t : machine.transitions()) {
        if (!ids.insert(t.id).second) out.push_back("duplicate transition id '" + t.id + "'");
        if (!locs.contains(t.src)) out.push_back("transition '" + t.id + "' has unknown source '" + t.src + "'");
        if (!locs.contains(t.trg)) out.push_back("transition '" + t.id + "' has unknown target '" + t.trg + "'");
    }
    const auto init = machine.index_of(machine.t_init());
    const auto final = machine.index_of(machine.t_final());
    if (!init) out.push_back("initial transition '" + machine.t_init() + "' is missing");
    if (!final) out.push_back("final transition '" + machine.t_final() + "' is missing");
    if (machine.t_init() == machine.t_final()) out.emplace_back("initial and final transition coincide");
    if (init && is_zero_test(machine.transitions()[*init].op)) out.emplace_back("initial transition is a zero test");
    if (final && is_zero_test(machine.transitions()[*final].op)) out.emplace_back("final transition is a zero test");
    if (final) {
        const std::string& sink = machine.transitions()[*final].trg;
        for (const auto& t : machine.transitions()) {
            if (t.src == sink) out.push_back("transition '" + t.id + "' leaves the target of the final transition");
        }
    }
    return out;
}

Computation run(const MinskyMachine& machine, const std::vector<std::string>& ids)
{
    if (ids.empty()) throw RunError("empty transition sequence", 0);
    Computation pi;
    pi.configs.push_back({0, 0});
    const Transition* prev = nullptr;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const std::size_t index = i + 1;
        const auto pos = machine.index_of(ids[i]);
        if (!pos) throw RunError("unknown transition '" + ids[i] + "' at step " + std::to_string(index), index);
        const Transition& t = machine.transitions()[*pos];
        if (i == 0 && t.id != machine.t_init()) {
            throw RunError("t1 != t_init: computation starts with '" + t.id + "'", index);
        }
        if (prev != nullptr && prev->trg != t.src) {
            throw RunError("location mismatch at step " + std::to_string(index) + ": trg(" + prev->id +
                               ") = " + prev->trg + " but src(" + t.id + ") = " + t.src,
                           index);
        }
        const auto next = step(pi.configs.back(), t.op);
        if (!next) {
            throw RunError("blocked at step " + std::to_string(index) + ": " + std::string(to_string(t.op)) +
                               " on " + to_string(pi.configs.back()),
                           index);
        }
        pi.configs.push_back(*next);
        pi.transitions.push_back(t.id);
        prev = &t;
    }
    pi.successful = pi.transitions.back() == machine.t_final();
    return pi;
}

std::optional<Computation> find_successful_computation(const MinskyMachine& machine, std::size_t max_steps,
                                                       std::uint64_t max_counter)
{
    const auto init = machine.index_of(machine.t_init());
    if (!init || max_steps == 0) return std::nullopt;

    struct State {
        std::size_t via;     // transition taken last
        CounterConfig config;
        std::size_t parent;  // index into `states`, npos for the root
        std::size_t depth;
    };
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    const auto& ts = machine.transitions();

    std::vector<State> states;
    std::set<std::tuple<std::string, std::uint64_t, std::uint64_t>> visited;
    std::deque<std::size_t> queue;

    const auto first = step({0, 0}, ts[*init].op);
    if (!first || first->m > max_counter || first->n > max_counter) return std::nullopt;
    states.push_back({*init, *first, npos, 1});
    visited.emplace(ts[*init].trg, first->m, first->n);
    queue.push_back(0);

    auto assemble = [&](std::size_t leaf) {
        std::vector<std::size_t> chain;
        for (std::size_t s = leaf; s != npos; s = states[s].parent) chain.push_back(s);
        std::reverse(chain.begin(), chain.end());
        Computation pi;
        pi.configs.push_back({0, 0});
        for (std::size_t s : chain) {
            pi.configs.push_back(states[s].config);
            pi.transitions.push_back(ts[states[s].via].id);
        }
        pi.successful = true;
        return pi;
    };

    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        const State here = states[cur];
        if (here.depth >= max_steps) continue;
        const std::string& loc = ts[here.via].trg;
        for (std::size_t k = 0; k < ts.size(); ++k) {
            if (ts[k].src != loc) continue;
            const auto next = step(here.config, ts[k].op);
            if (!next || next->m > max_counter || next->n > max_counter) continue;
            if (ts[k].id == machine.t_final()) {
                states.push_back({k, *next, cur, here.depth + 1});
                return assemble(states.size() - 1);
            }
            if (!visited.emplace(ts[k].trg, next->m, next->n).second) continue;
            states.push_back({k, *next, cur, here.depth + 1});
            queue.push_back(states.size() - 1);
        }
    }
    return std::nullopt;
}

namespace {

std::vector<std::string> split_words(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

} // namespace

MinskyMachine parse_machine(std::string_view text)
{
    std::vector<std::string> locations;
    std::vector<Transition> transitions;
    std::optional<std::string> init;
    std::optional<std::string> final;

    std::istringstream in{std::string(text)};
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto words = split_words(line);
        if (words.empty()) continue;
        const std::string& kw = words.front();
        if (kw == "loc") {
            locations.insert(locations.end(), words.begin() + 1, words.end());
        } else if (kw == "trans") {
            if (words.size() != 5) throw ParseError("expected 'trans <id> <src> <op> <trg>'", line_no);
            const auto op = parse_operation(words[3]);
            if (!op) throw ParseError("unknown operation '" + words[3] + "'", line_no);
            transitions.push_back({words[1], words[2], words[4], *op});
        } else if (kw == "init" || kw == "final") {
            if (words.size() != 2) throw ParseError("expected '" + kw + " <id>'", line_no);
            auto& slot = kw == "init" ? init : final;
            if (slot) throw ParseError("duplicate '" + kw + "' line", line_no);
            slot = words[1];
        } else {
            throw ParseError("unknown directive '" + kw + "'", line_no);
        }
    }
    if (!init) throw ParseError("missing 'init' line", line_no);
    if (!final) throw ParseError("missing 'final' line", line_no);
    return {std::move(locations), std::move(transitions), *init, *final};
}

std::string render(const MinskyMachine& machine)
{
    std::string out = "loc";
    for (const auto& l : machine.locations()) out += " " + l;
    out += "\n";
    for (const auto& t : machine.transitions()) {
        out += "trans " + t.id + " " + t.src + " " + std::string(to_string(t.op)) + " " + t.trg + "\n";
    }
    out += "init " + machine.t_init() + "\nfinal " + machine.t_final() + "\n";
    return out;
}

std::string render_trace(const MinskyMachine& machine, const Computation& pi)
{
    std::string out;
    for (std::size_t i = 0; i < pi.transitions.size(); ++i) {
        const auto& t = machine.transition(pi.transitions[i]);
        out += to_string(pi.configs[i]) + " --" + t.id + "(" + t.src + "," + std::string(to_string(t.op)) + "," +
               t.trg + ")--> " + to_string(pi.configs[i + 1]) + "\n";
    }
    out += pi.successful ? "successful\n" : "not successful\n";
    return out;
}

} // namespace fltl::minsky
