#ifndef PTA_CONCRETE_HPP
#define PTA_CONCRETE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pta/model.hpp"

namespace pta {

// Languages and trace sets are taken over maximal runs (infinite, or
// finite ending in a deadlock) unless the prefix-closed alternative is
// requested, which collects the words of all finite runs.
enum class RunSemantics { Maximal, PrefixClosed };

// Difference bound matrix over n clocks plus the reference clock 0.
// Bounds are stored in raw encoding: (value << 1) | (1 if weak), with
// int64 max as infinity. Nonempty zones are kept closed, which makes the
// raw matrix a canonical key.
class ClockZone {
  public:
    static ClockZone zero(unsigned nclocks);

    unsigned clocks() const { return n_; }
    bool empty() const;

    void up();                  // remove upper bounds on all clocks
    void reset(unsigned clock); // clock := 0
    // x_i - x_j (rel) bound, indices 0..n with 0 the reference clock.
    void constrain(unsigned i, unsigned j, std::int64_t bound, bool strict);
    void close();
    void extrapolate(std::int64_t max_const);

    std::string key() const;
    // Constraint text with bounds scaled back down by `scale`.
    std::string to_string(const std::vector<std::string>& clock_names, const Int& scale) const;

  private:
    unsigned n_ = 0;
    std::vector<std::int64_t> raw_;  // (n+1)^2
    std::int64_t& at(unsigned i, unsigned j) { return raw_[i * (n_ + 1) + j]; }
    std::int64_t at(unsigned i, unsigned j) const { return raw_[i * (n_ + 1) + j]; }
};

struct TraceState {
    unsigned location = 0;
    ClockZone zone;
    bool deadlock = false;
};

struct TraceTransition {
    unsigned from = 0;
    unsigned action = 0;
    unsigned model_edge = 0;
    unsigned to = 0;
};

// Reachable zone graph of a valuated (parameter-free) model: the finite
// object that carries its untimed traces and language.
struct TraceAutomaton {
    std::vector<std::string> location_names;
    std::vector<std::string> action_names;
    std::vector<std::string> clock_names;
    std::vector<TraceState> states;
    std::vector<TraceTransition> transitions;
    std::vector<std::vector<unsigned>> outgoing;  // per state, transition ids in edge order
    unsigned initial = 0;
    bool no_states = false;  // initial symbolic constraint was empty
    bool truncated = false;
    std::string truncation_reason;
    Int scale = 1;  // constants were multiplied by this before zone construction

    std::string state_label(unsigned s) const;
};

struct BuildOptions {
    std::size_t max_depth = 4096;
    std::size_t max_states = 200000;
};

// Zone-graph exploration with maximal-constant extrapolation (skipped when
// the model carries diagonal constraints, where it would be unsound; the
// state ceiling then guards termination). Rational constants are rescaled
// to integers first; untimed traces are unaffected.
TraceAutomaton build_trace_automaton(const PtaModel& ta, const BuildOptions& opts = {});

struct TraceLabel {
    std::string action;
    std::string target_location;
    bool operator==(const TraceLabel&) const = default;
};

struct TraceComparison {
    bool equal = false;
    // When unequal: the shortest label sequence on which the two differ,
    // ending with the first divergent label (or the deadlock point).
    std::vector<TraceLabel> witness;
    std::string reason;
    // The synchronized walk decides equality exactly iff both automata are
    // action-deterministic per state; otherwise a positive answer is still
    // sound but a negative one is not conclusive.
    bool exact = true;
};

TraceComparison trace_sets_equal(const TraceAutomaton& a, const TraceAutomaton& b,
                                 RunSemantics semantics = RunSemantics::Maximal);

struct InclusionResult {
    bool included = false;
    std::vector<std::string> witness_word;
    std::string reason;
};

// Untimed-language inclusion L(a) <= L(b) via a product of a's zone graph
// with subsets of b's. Exact for finite zone graphs regardless of
// nondeterminism in a; b is tracked as a subset so nondeterministic b is
// handled as well.
InclusionResult untimed_language_included(const TraceAutomaton& a, const TraceAutomaton& b,
                                          RunSemantics semantics = RunSemantics::Maximal);
InclusionResult untimed_language_included(const PtaModel& a, const PtaModel& b,
                                          RunSemantics semantics = RunSemantics::Maximal,
                                          const BuildOptions& opts = {});

// One concrete transition of a refined run.
struct ConcreteStep {
    unsigned edge = 0;
    Rat delay;
    std::vector<Rat> clocks_after;  // after delay and reset
};

// Shortest zone-graph path to `target_location`, refined into an exact
// rational run (guards and invariants re-checked with exact arithmetic).
std::optional<std::vector<ConcreteStep>> find_concrete_run(const PtaModel& ta,
                                                           unsigned target_location,
                                                           const BuildOptions& opts = {});

// All timed words (delay/action sequences, delays drawn from `grid`) of
// runs with at most `max_len` transitions, rendered as strings. Built by
// direct simulation on exact rationals; the zone machinery is not
// involved, so this doubles as an independent oracle.
std::set<std::string> enumerate_timed_words(const PtaModel& ta, const std::vector<Rat>& grid,
                                            unsigned max_len);

}  // namespace pta

#endif
