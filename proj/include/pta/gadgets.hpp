#ifndef PTA_GADGETS_HPP
#define PTA_GADGETS_HPP

#include <optional>
#include <string>
#include <vector>

#include "pta/counter_machine.hpp"
#include "pta/model.hpp"

namespace pta {

enum class EncodingKind { Basic, LanguageWrapper, OneLocation, Robust, BoundedTime };

std::optional<EncodingKind> encoding_kind_from_string(const std::string& s);

// Compiles a two-counter machine into a PTA.
//
//   Basic          4 clocks (t, x1, x2, z), one parameter p; three location
//                  copies per machine state; counters live in x1, x2 with
//                  x_i = c_i whenever t = 0.
//   LanguageWrapper  Basic plus an initial p=0 / p>0 branch and an
//                  all-accepting sink reached from the halt location.
//   Robust         3 clocks, one rational parameter in (0,1); counters kept
//                  as x_i = 1 - p*c_i whenever t = 0.
//   BoundedTime    3 clocks, parameters p1, p2; counters kept as
//                  x_i = p1 - p2*c_i; every module takes p1 or p1+p2 time.
//
// OneLocation is a model transform, not a machine encoding; use
// one_location_transform.
PtaModel compile_machine(const CounterMachine& cm, EncodingKind kind);

struct EncodingReport {
    bool machine_ground_truth_ok = false;
    bool concrete_reachable = false;
    bool correspondence_ok = false;
    bool symbolic_reachable = false;
    bool projection_contains_valuation = false;
    bool within_time_bound = true;   // BoundedTime only
    Rat total_elapsed;
    std::vector<Rat> valuation_used;
    std::string detail;

    bool ok() const {
        return machine_ground_truth_ok && concrete_reachable && correspondence_ok &&
               symbolic_reachable && projection_contains_valuation && within_time_bound;
    }
};

// End-to-end validation of an encoding against the machine interpreter:
// the caller asserts the machine halts within `run_length` steps with
// counters bounded by `max_counter`. Checks concrete reachability of the
// halt location at the valuation given by the paper's witness formula, the
// counter correspondence along the refined run, and the symbolic lift of
// that run (nonempty halt-state parameter projection containing the
// valuation).
EncodingReport validate_encoding(const CounterMachine& cm, EncodingKind kind,
                                 std::size_t run_length, std::uint64_t max_counter);

// Collapses a model into a single location with k*|L|+2 extra clocks
// (diagonal constraints), preserving timed words for models whose runs
// start with a positive delay and never take more than k transitions in
// zero delay. The positive-delay disjunction becomes one edge per
// disjunct. k must be at least 1.
PtaModel one_location_transform(const PtaModel& ta, unsigned k);

}  // namespace pta

#endif
