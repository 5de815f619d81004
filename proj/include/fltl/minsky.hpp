#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fltl::minsky {

enum class Operation { Inc1, Inc2, Dec1, Dec2, Zero1, Zero2 };

[[nodiscard]] std::string_view to_string(Operation op) noexcept;
[[nodiscard]] std::optional<Operation> parse_operation(std::string_view text) noexcept;
[[nodiscard]] bool is_zero_test(Operation op) noexcept;

struct CounterConfig {
    std::uint64_t m = 0;
    std::uint64_t n = 0;

    friend bool operator==(const CounterConfig&, const CounterConfig&) = default;
};

[[nodiscard]] std::string to_string(const CounterConfig& c);

/// Effect of one operation; std::nullopt when the operation is blocked
/// (decrement of a zero counter, zero test of a nonzero counter).
[[nodiscard]] std::optional<CounterConfig> step(const CounterConfig& c, Operation op) noexcept;

struct Transition {
    std::string id;
    std::string src;
    std::string trg;
    Operation op;

    friend bool operator==(const Transition&, const Transition&) = default;
};

class MinskyMachine {
public:
    MinskyMachine(std::vector<std::string> locations, std::vector<Transition> transitions, std::string t_init,
                  std::string t_final);

    [[nodiscard]] const std::vector<std::string>& locations() const noexcept { return locations_; }
    [[nodiscard]] const std::vector<Transition>& transitions() const noexcept { return transitions_; }
    [[nodiscard]] const std::string& t_init() const noexcept { return t_init_; }
    [[nodiscard]] const std::string& t_final() const noexcept { return t_final_; }

    /// Declaration-order index of a transition id.
    [[nodiscard]] std::optional<std::size_t> index_of(std::string_view id) const;
    /// Throws MachineError for an unknown id.
    [[nodiscard]] const Transition& transition(std::string_view id) const;

private:
    std::vector<std::string> locations_;
    std::vector<Transition> transitions_;
    std::string t_init_;
    std::string t_final_;
};

/// Every violated convention or dangling reference, in a fixed order.
/// An empty result means the machine is well formed.
[[nodiscard]] std::vector<std::string> validate(const MinskyMachine& machine);

struct Computation {
    std::vector<CounterConfig> configs;    // C_0 .. C_k
    std::vector<std::string> transitions;  // t_1 .. t_k
    bool successful = false;

    [[nodiscard]] std::size_t length() const noexcept { return transitions.size(); }

    friend bool operator==(const Computation&, const Computation&) = default;
};

/// Replay failure; `index` is the 1-based position of the offending transition.
class RunError : public std::runtime_error {
public:
    RunError(const std::string& what, std::size_t index) : std::runtime_error(what), index_(index) {}
    [[nodiscard]] std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// Replays `ids` from (0,0). Throws RunError on the first violated
/// condition: empty input, unknown id, t_1 != t_init, broken location
/// chaining, or a blocked step.
[[nodiscard]] Computation run(const MinskyMachine& machine, const std::vector<std::string>& ids);

/// Breadth-first search over (location, counters) for a shortest successful
/// computation of at most `max_steps` transitions with both counters kept
/// at or below `max_counter`. Among shortest ones, the first in
/// transition-declaration order wins.
[[nodiscard]] std::optional<Computation> find_successful_computation(const MinskyMachine& machine,
                                                                     std::size_t max_steps,
                                                                     std::uint64_t max_counter);

/// Line format: `loc l0 l1 ...`, `trans <id> <src> <op> <trg>`, `init <id>`,
/// `final <id>`; `#` starts a comment. Throws ParseError with a 1-based line.
[[nodiscard]] MinskyMachine parse_machine(std::string_view text);
[[nodiscard]] std::string render(const MinskyMachine& machine);

/// One line per step: `C_{i-1} --t_i(op)--> C_i`.
[[nodiscard]] std::string render_trace(const MinskyMachine& machine, const Computation& pi);

} // namespace fltl::minsky
