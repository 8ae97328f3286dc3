#include "pta/synthesis.hpp"

#include <map>
#include <stdexcept>

namespace pta {

std::string answer_to_string(Answer a) {
    switch (a) {
        case Answer::Yes: return "yes";
        case Answer::No: return "no";
        default: return "unknown";
    }
}

TpsResult tps(const PtaModel& m, std::span<const Rat> valuation, const TpsOptions& opts) {
    VarContext ctx = m.ctx();
    VarContext pctx{0, ctx.params};
    if (valuation.size() != ctx.params)
        throw std::invalid_argument("valuation arity does not match the parameter list");
    for (const Rat& q : valuation)
        if (q < 0) throw std::invalid_argument("negative parameter valuation");

    TpsResult r;
    r.k_good = Polyhedron::top(pctx);
    r.k_bad = DisjunctiveConstraint::false_(pctx);
    r.complete_for_model = classify(m).deterministic;

    std::vector<std::vector<unsigned>> edges_by_loc(m.locations.size());
    for (unsigned e = 0; e < m.edges.size(); ++e) edges_by_loc[m.edges[e].source].push_back(e);

    std::map<std::string, unsigned> explored;  // key -> id in `all`
    std::vector<SymbolicState> all;
    auto known = [&](const SymbolicState& s) { return explored.count(s.key()) != 0; };

    std::vector<SymbolicState> s_new{initial_state(m)};
    for (;;) {
        // Classify this wave; incompatible states are pruned before their
        // successors are taken.
        std::vector<SymbolicState> kept;
        for (SymbolicState& s : s_new) {
            Polyhedron proj = s.constraint.project_params();
            if (proj.satisfies(valuation)) {
                r.k_good = r.k_good.intersect(proj);
                kept.push_back(std::move(s));
            } else {
                r.k_bad = r.k_bad.add(proj);
            }
        }
        s_new = std::move(kept);

        bool all_known = true;
        for (const SymbolicState& s : s_new) all_known &= known(s);
        if (all_known) {
            r.result = DisjunctiveConstraint::of(r.k_good).intersect(r.k_bad.complement());
            r.terminated = true;
            r.states_explored = all.size();
            return r;
        }
        for (SymbolicState& s : s_new) {
            if (!known(s)) {
                explored.emplace(s.key(), static_cast<unsigned>(all.size()));
                all.push_back(s);
            }
        }
        ++r.iterations;
        if ((opts.max_depth && r.iterations > *opts.max_depth) ||
            (opts.max_states && all.size() > *opts.max_states)) {
            r.result = DisjunctiveConstraint::of(r.k_good).intersect(r.k_bad.complement());
            r.terminated = false;
            r.states_explored = all.size();
            return r;
        }

        std::vector<SymbolicState> next;
        std::map<std::string, bool> in_next;
        for (const SymbolicState& s : s_new) {
            for (unsigned e : edges_by_loc[s.location]) {
                auto t = succ(s, e, m);
                if (!t) continue;
                std::string k = t->key();
                if (in_next.emplace(k, true).second) next.push_back(std::move(*t));
            }
        }
        s_new = std::move(next);
    }
}

namespace {

// result minus the reference point, as an exact set difference.
DisjunctiveConstraint result_without_reference(const DisjunctiveConstraint& result,
                                               std::span<const Rat> valuation) {
    Polyhedron point = point_polyhedron(result.context(), valuation);
    return result.intersect(DisjunctiveConstraint::of(point).complement());
}

std::string question_name(PreservationQuestion q) {
    return q == PreservationQuestion::Trace ? "trace" : "language";
}

}  // namespace

PreservationVerdict preserve_1c(const PtaModel& m, std::span<const Rat> valuation,
                                PreservationQuestion question) {
    if (m.clocks.size() != 1)
        throw std::invalid_argument("preserve_1c requires a one-clock model");
    ModelClass mc = classify(m);
    PreservationVerdict v;
    v.question = question;
    v.method = "tps-1clock";

    TpsOptions uncapped;
    uncapped.max_depth.reset();
    uncapped.max_states.reset();
    TpsResult t = tps(m, valuation, uncapped);
    v.states_explored = t.states_explored;
    v.terminated = t.terminated;
    v.synthesized = t.result;

    DisjunctiveConstraint others = result_without_reference(t.result, valuation);
    if (!others.is_false()) {
        v.answer = Answer::Yes;
        v.witness = others.disjuncts().front().sample_point();
    } else {
        v.answer = mc.deterministic ? Answer::No : Answer::Unknown;
    }
    if (!mc.deterministic) {
        v.caveat = "sound, not complete: model is nondeterministic, the synthesized set may be "
                   "a strict under-approximation";
    }
    return v;
}

PreservationVerdict preserve_robust_1c(const PtaModel& m, std::span<const Rat> valuation) {
    if (m.clocks.size() != 1)
        throw std::invalid_argument("preserve_robust_1c requires a one-clock model");
    ModelClass mc = classify(m);
    PreservationVerdict v;
    v.question = PreservationQuestion::Trace;
    v.method = "tps-1clock-robust";

    TpsOptions uncapped;
    uncapped.max_depth.reset();
    uncapped.max_states.reset();
    TpsResult t = tps(m, valuation, uncapped);
    v.states_explored = t.states_explored;
    v.terminated = t.terminated;
    v.synthesized = t.result;

    auto other = contains_other_point(t.result, valuation);
    if (other) {
        v.answer = Answer::Yes;
        v.witness = other;
    } else {
        v.answer = mc.deterministic ? Answer::No : Answer::Unknown;
    }
    if (!mc.deterministic) {
        v.caveat = "sound, not complete: model is nondeterministic, the synthesized set may be "
                   "a strict under-approximation";
    }
    return v;
}

PreservationVerdict preserve_lu_1ip(const PtaModel& m, std::span<const Rat> valuation,
                                    PreservationQuestion question) {
    ModelClass mc = classify(m);
    if (!mc.deterministic)
        throw std::invalid_argument("preserve_lu_1ip requires a deterministic model");
    if (mc.lu_status == LuStatus::Neither)
        throw std::invalid_argument("preserve_lu_1ip requires an L-PTA or U-PTA");
    if (!mc.lower_params.empty() && !mc.upper_params.empty())
        throw std::invalid_argument("preserve_lu_1ip requires a pure L-PTA or U-PTA");
    if (m.parameters.size() != 1)
        throw std::invalid_argument("preserve_lu_1ip requires exactly one parameter");
    if (valuation.size() != 1 || den(valuation[0]) != 1)
        throw std::invalid_argument("preserve_lu_1ip requires an integer valuation");

    PreservationVerdict v;
    v.question = question;
    v.method = "lu-plus-minus-one";

    TraceAutomaton at_v = build_trace_automaton(valuate(m, valuation));
    auto check_neighbor = [&](const Rat& w) -> bool {
        std::vector<Rat> nv{w};
        TraceAutomaton at_w = build_trace_automaton(valuate(m, nv));
        TraceComparison cmp = trace_sets_equal(at_v, at_w);
        return cmp.equal;
    };

    Rat up = valuation[0] + 1;
    if (check_neighbor(up)) {
        v.answer = Answer::Yes;
        v.witness = std::vector<Rat>{up};
        return v;
    }
    if (valuation[0] >= 1) {
        Rat down = valuation[0] - 1;
        if (check_neighbor(down)) {
            v.answer = Answer::Yes;
            v.witness = std::vector<Rat>{down};
            return v;
        }
    }
    v.answer = Answer::No;
    return v;
}

PreservationVerdict preserve_general(const PtaModel& m, std::span<const Rat> valuation,
                                     PreservationQuestion question, const TpsOptions& opts) {
    ModelClass mc = classify(m);
    PreservationVerdict v;
    v.question = question;
    v.method = "tps-sound";

    TpsResult t = tps(m, valuation, opts);
    v.states_explored = t.states_explored;
    v.terminated = t.terminated;
    v.synthesized = t.result;
    if (!t.terminated) {
        v.answer = Answer::Unknown;
        v.caveat = "exploration hit its caps before the fixpoint; no verdict";
        return v;
    }
    DisjunctiveConstraint others = result_without_reference(t.result, valuation);
    if (!others.is_false()) {
        v.answer = Answer::Yes;
        v.witness = others.disjuncts().front().sample_point();
        if (!mc.deterministic)
            v.caveat = "sound: every valuation in the synthesized set preserves the " +
                       question_name(question) + " sets";
    } else {
        v.answer = mc.deterministic ? Answer::No : Answer::Unknown;
        if (!mc.deterministic)
            v.caveat = "sound, not complete: the synthesized set may be a strict "
                       "under-approximation";
    }
    return v;
}

}  // namespace pta
