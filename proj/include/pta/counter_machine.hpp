#ifndef PTA_COUNTER_MACHINE_HPP
#define PTA_COUNTER_MACHINE_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace pta {

// Deterministic two-counter machine: per state either an increment, a
// test-decrement, or nothing (the halt state).
struct CounterMachine {
    struct Inc {
        unsigned counter;  // 0 or 1
        unsigned target;
    };
    struct TDec {
        unsigned counter;
        unsigned zero_target;
        unsigned dec_target;
    };
    using Op = std::variant<std::monostate, Inc, TDec>;

    std::vector<std::string> state_names;
    std::vector<Op> ops;  // one per state
    unsigned initial = 0;
    unsigned halt = 0;
};

// Text format, one statement per state:
//   state s0 ; inc c1 goto s1 ;
//   state s1 ; tdec c2 zero s2 else s3 ;
//   halt s4 ;
// The first declared state is initial; exactly one halt state.
CounterMachine parse_counter_machine(const std::string& text);
std::string render_counter_machine(const CounterMachine& cm);

struct MachineConfig {
    unsigned state = 0;
    std::uint64_t c1 = 0, c2 = 0;
};

struct SimulationResult {
    bool halted = false;
    std::size_t steps = 0;
    std::uint64_t max_counter = 0;
    std::vector<MachineConfig> trace;  // configs, trace.front() initial
};

// Direct interpreter; the ground-truth oracle for the encodings.
SimulationResult simulate(const CounterMachine& cm, std::size_t max_steps);

}  // namespace pta

#endif
