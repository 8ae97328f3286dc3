#include "pta/symbolic.hpp"

#include <stdexcept>
#include <unordered_map>

namespace pta {

SymbolicState initial_state(const PtaModel& m) {
    VarContext ctx = m.ctx();
    std::vector<Inequality> zeros;
    for (unsigned x = 0; x < ctx.clocks; ++x) {
        LinearTerm t(ctx);
        t.coeff(x) = 1;
        zeros.push_back(Inequality{std::move(t), Rel::Eq});
    }
    Polyhedron c = Polyhedron::make(ctx, std::move(zeros))
                       .time_elapse()
                       .intersect(m.locations[m.initial].invariant);
    if (c.is_empty())
        throw std::invalid_argument("model rejected: initial symbolic constraint is empty");
    return SymbolicState{m.initial, std::move(c)};
}

std::optional<SymbolicState> succ(const SymbolicState& s, unsigned edge_id, const PtaModel& m) {
    const Edge& e = m.edges[edge_id];
    if (e.source != s.location) return std::nullopt;
    Polyhedron c = s.constraint.intersect(e.guard);
    if (c.is_empty()) return std::nullopt;
    c = c.reset(e.resets).time_elapse().intersect(m.locations[e.target].invariant);
    if (c.is_empty()) return std::nullopt;
    return SymbolicState{e.target, std::move(c)};
}

ParametricZoneGraph explore(const PtaModel& m, const ExploreOptions& opts) {
    ParametricZoneGraph g;
    g.states.push_back(initial_state(m));
    std::unordered_map<std::string, unsigned> seen;
    seen.emplace(g.states[0].key(), 0u);

    std::vector<std::vector<unsigned>> edges_by_loc(m.locations.size());
    for (unsigned e = 0; e < m.edges.size(); ++e) edges_by_loc[m.edges[e].source].push_back(e);

    auto found_target = [&](unsigned loc) {
        return opts.stop_at_location && *opts.stop_at_location == loc;
    };
    if (found_target(g.states[0].location)) {
        g.complete = false;
        g.truncation_reason = "stopped at target location";
        return g;
    }

    std::vector<unsigned> frontier{0};
    std::size_t depth = 0;
    while (!frontier.empty()) {
        if (opts.max_depth && depth >= *opts.max_depth) {
            g.complete = false;
            g.truncation_reason = "depth cap";
            return g;
        }
        ++depth;
        g.depth_reached = depth;

        // Tasks of this layer, in the canonical (frontier, declared edge)
        // order that defines the output numbering.
        std::vector<std::pair<unsigned, unsigned>> tasks;  // (state id, model edge)
        for (unsigned s : frontier)
            for (unsigned e : edges_by_loc[g.states[s].location]) tasks.emplace_back(s, e);

        std::vector<std::optional<SymbolicState>> results(tasks.size());
        if (opts.parallel) {
#ifdef PTA_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
            for (long i = 0; i < static_cast<long>(tasks.size()); ++i)
                results[i] = succ(g.states[tasks[i].first], tasks[i].second, m);
        } else {
            for (std::size_t i = 0; i < tasks.size(); ++i)
                results[i] = succ(g.states[tasks[i].first], tasks[i].second, m);
        }

        std::vector<unsigned> next;
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            if (!results[i]) continue;
            SymbolicState& st = *results[i];
            if (opts.check_monotonicity) {
                Polyhedron from = g.states[tasks[i].first].constraint.project_params();
                Polyhedron to = st.constraint.project_params();
                if (!from.includes(to))
                    throw std::logic_error(
                        "monotonicity violated: successor parameter projection is not included "
                        "in the predecessor's");
            }
            std::string k = st.key();
            auto it = seen.find(k);
            unsigned id;
            if (it != seen.end()) {
                id = it->second;
            } else {
                if (opts.max_states && g.states.size() >= *opts.max_states) {
                    g.complete = false;
                    g.truncation_reason = "state cap";
                    return g;
                }
                id = static_cast<unsigned>(g.states.size());
                g.states.push_back(std::move(st));
                seen.emplace(std::move(k), id);
                next.push_back(id);
            }
            g.edges.push_back({tasks[i].first, tasks[i].second, id});
            if (found_target(g.states[id].location)) {
                g.complete = false;
                g.truncation_reason = "stopped at target location";
                return g;
            }
        }
        frontier = std::move(next);
    }
    g.complete = true;
    return g;
}

}  // namespace pta
