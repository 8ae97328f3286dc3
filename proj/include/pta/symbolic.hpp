#ifndef PTA_SYMBOLIC_HPP
#define PTA_SYMBOLIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "pta/model.hpp"

namespace pta {

struct SymbolicState {
    unsigned location = 0;
    Polyhedron constraint;  // over clocks and parameters, canonical, nonempty

    std::string key() const { return std::to_string(location) + "#" + constraint.key(); }
};

struct SymbolicEdge {
    unsigned from = 0;
    unsigned model_edge = 0;
    unsigned to = 0;
};

struct ParametricZoneGraph {
    std::vector<SymbolicState> states;
    std::vector<SymbolicEdge> edges;
    unsigned initial = 0;
    bool complete = false;
    std::string truncation_reason;
    std::size_t depth_reached = 0;
};

struct ExploreOptions {
    // nullopt = unbounded.
    std::optional<std::size_t> max_depth = 256;
    std::optional<std::size_t> max_states = 100000;
    // Evaluate the successor operator across a BFS layer with OpenMP.
    // Output is byte-identical to the serial path: results are merged in
    // declaration order.
    bool parallel = false;
    // Assert, on every expanded edge, that the parameter projection of the
    // successor is included in that of the predecessor.
    bool check_monotonicity = false;
    // Stop as soon as a state at this location has been discovered.
    std::optional<unsigned> stop_at_location;
};

// (l_init, (X = 0)^up ∧ I(l_init)); throws std::invalid_argument when the
// constraint is empty.
SymbolicState initial_state(const PtaModel& m);

// C' = ((C ∧ g)[R])^up ∧ I(l'); nullopt when empty.
std::optional<SymbolicState> succ(const SymbolicState& s, unsigned edge_id, const PtaModel& m);

// Breadth-first exploration deduplicated on (location, canonical
// constraint). Deterministic: states are numbered in frontier order with
// edges in declaration order, independent of the parallel switch.
ParametricZoneGraph explore(const PtaModel& m, const ExploreOptions& opts = {});

}  // namespace pta

#endif
