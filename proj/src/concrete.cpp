#include "pta/concrete.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace pta {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

std::int64_t raw_bound(std::int64_t value, bool strict) {
    return (value << 1) | (strict ? 0 : 1);
}
std::int64_t raw_value(std::int64_t raw) { return raw >> 1; }
bool raw_strict(std::int64_t raw) { return (raw & 1) == 0; }

std::int64_t raw_add(std::int64_t a, std::int64_t b) {
    if (a == kInf || b == kInf) return kInf;
    return raw_bound(raw_value(a) + raw_value(b), raw_strict(a) || raw_strict(b));
}

}  // namespace

ClockZone ClockZone::zero(unsigned nclocks) {
    ClockZone z;
    z.n_ = nclocks;
    z.raw_.assign((nclocks + 1) * (nclocks + 1), raw_bound(0, false));
    return z;
}

bool ClockZone::empty() const {
    for (unsigned i = 0; i <= n_; ++i)
        if (at(i, i) < raw_bound(0, false)) return true;
    return false;
}

void ClockZone::up() {
    for (unsigned i = 1; i <= n_; ++i) at(i, 0) = kInf;
}

void ClockZone::reset(unsigned clock) {
    unsigned r = clock + 1;
    for (unsigned j = 0; j <= n_; ++j) {
        at(r, j) = at(0, j);
        at(j, r) = at(j, 0);
    }
    at(r, r) = raw_bound(0, false);
}

void ClockZone::constrain(unsigned i, unsigned j, std::int64_t bound, bool strict) {
    std::int64_t rb = raw_bound(bound, strict);
    if (rb < at(i, j)) at(i, j) = rb;
}

void ClockZone::close() {
    for (unsigned k = 0; k <= n_; ++k)
        for (unsigned i = 0; i <= n_; ++i) {
            if (at(i, k) == kInf) continue;
            for (unsigned j = 0; j <= n_; ++j) {
                std::int64_t via = raw_add(at(i, k), at(k, j));
                if (via < at(i, j)) at(i, j) = via;
            }
        }
}

void ClockZone::extrapolate(std::int64_t max_const) {
    bool changed = false;
    for (unsigned i = 0; i <= n_; ++i)
        for (unsigned j = 0; j <= n_; ++j) {
            if (i == j) continue;
            std::int64_t r = at(i, j);
            if (r == kInf) continue;
            if (raw_value(r) > max_const) {
                at(i, j) = kInf;
                changed = true;
            } else if (raw_value(r) < -max_const) {
                at(i, j) = raw_bound(-max_const, true);
                changed = true;
            }
        }
    if (changed) close();
}

std::string ClockZone::key() const {
    return std::string(reinterpret_cast<const char*>(raw_.data()),
                       raw_.size() * sizeof(std::int64_t));
}

std::string ClockZone::to_string(const std::vector<std::string>& clock_names,
                                 const Int& scale) const {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const std::string& lhs, std::int64_t raw) {
        Rat b(raw_value(raw));
        b /= Rat(scale);
        b.canonicalize();
        if (!first) out << " & ";
        out << lhs << (raw_strict(raw) ? " < " : " <= ") << rat_to_string(b);
        first = false;
    };
    for (unsigned i = 1; i <= n_; ++i) {
        if (at(i, 0) != kInf) emit(clock_names[i - 1], at(i, 0));
        if (at(0, i) != raw_bound(0, false)) {
            Rat b(-raw_value(at(0, i)));
            b /= Rat(scale);
            b.canonicalize();
            if (!first) out << " & ";
            out << clock_names[i - 1] << (raw_strict(at(0, i)) ? " > " : " >= ")
                << rat_to_string(b);
            first = false;
        }
    }
    for (unsigned i = 1; i <= n_; ++i)
        for (unsigned j = 1; j <= n_; ++j) {
            if (i == j || at(i, j) == kInf) continue;
            emit(clock_names[i - 1] + " - " + clock_names[j - 1], at(i, j));
        }
    if (first) out << "true";
    return out.str();
}

namespace {

struct ScaledAtom {
    unsigned i = 0, j = 0;  // DBM indices
    std::int64_t bound = 0;
    bool strict = false;
};

struct CompiledConstraint {
    bool unsat = false;
    std::vector<ScaledAtom> atoms;
};

struct RatAtom {
    unsigned i = 0, j = 0;
    Rat bound;
    bool strict = false;
};

// Breaks a clock-only polyhedron into DBM atoms with rational bounds.
std::optional<std::vector<RatAtom>> rational_atoms(const Polyhedron& poly) {
    if (poly.is_empty()) return std::nullopt;
    std::vector<RatAtom> out;
    for (const Inequality& row : poly.inequalities()) {
        std::vector<unsigned> vars;
        for (unsigned v = 0; v < row.term.size(); ++v)
            if (row.term.coeff(v) != 0) vars.push_back(v);
        if (vars.empty()) throw std::logic_error("constant row in canonical polyhedron");
        unsigned i, j;
        Int a;
        if (vars.size() == 1) {
            a = row.term.coeff(vars[0]);
            if (a > 0) {
                i = vars[0] + 1;
                j = 0;
            } else {
                i = 0;
                j = vars[0] + 1;
            }
        } else if (vars.size() == 2 && row.term.coeff(vars[0]) == -row.term.coeff(vars[1])) {
            a = row.term.coeff(vars[0]);
            if (a > 0) {
                i = vars[0] + 1;
                j = vars[1] + 1;
            } else {
                i = vars[1] + 1;
                j = vars[0] + 1;
                a = -a;
            }
        } else {
            throw std::runtime_error(
                "guard is not expressible with clock bounds and differences");
        }
        Rat q(-row.term.constant());
        q /= Rat(abs(a));
        q.canonicalize();
        if (row.rel == Rel::Eq) {
            out.push_back({i, j, q, false});
            Rat nq(-q);
            out.push_back({j, i, nq, false});
        } else {
            out.push_back({i, j, q, row.rel == Rel::Lt});
        }
    }
    return out;
}

struct CompiledTa {
    unsigned n = 0;
    Int scale = 1;
    std::int64_t max_const = 1;
    bool diagonals = false;
    std::vector<CompiledConstraint> invariants;
    std::vector<CompiledConstraint> guards;
};

CompiledTa compile(const PtaModel& m) {
    if (!m.parameters.empty())
        throw std::invalid_argument("model still has parameters; valuate it first");
    CompiledTa c;
    c.n = static_cast<unsigned>(m.clocks.size());

    std::vector<std::optional<std::vector<RatAtom>>> inv_atoms, guard_atoms;
    Int denom_lcm = 1;
    auto gather = [&](const Polyhedron& poly) {
        auto atoms = rational_atoms(poly);
        if (atoms)
            for (const RatAtom& a : *atoms) denom_lcm = lcm(denom_lcm, den(a.bound));
        return atoms;
    };
    for (const Location& l : m.locations) inv_atoms.push_back(gather(l.invariant));
    for (const Edge& e : m.edges) guard_atoms.push_back(gather(e.guard));
    c.scale = denom_lcm;

    auto finish = [&](const std::optional<std::vector<RatAtom>>& atoms) {
        CompiledConstraint cc;
        if (!atoms) {
            cc.unsat = true;
            return cc;
        }
        for (const RatAtom& a : *atoms) {
            Rat scaled = a.bound * Rat(denom_lcm);
            scaled.canonicalize();
            assert(den(scaled) == 1);
            Int v = num(scaled);
            if (!v.fits_slong_p())
                throw std::runtime_error("scaled constant exceeds the machine bound range");
            std::int64_t b = v.get_si();
            if (a.i != 0 && a.j != 0) c.diagonals = true;
            std::int64_t mag = b >= 0 ? b : -b;
            if (mag > c.max_const) c.max_const = mag;
            cc.atoms.push_back({a.i, a.j, b, a.strict});
        }
        return cc;
    };
    for (const auto& a : inv_atoms) c.invariants.push_back(finish(a));
    for (const auto& a : guard_atoms) c.guards.push_back(finish(a));
    return c;
}

bool apply_constraint(ClockZone& z, const CompiledConstraint& cc) {
    if (cc.unsat) return false;
    for (const ScaledAtom& a : cc.atoms) z.constrain(a.i, a.j, a.bound, a.strict);
    z.close();
    return !z.empty();
}

// Ceiling on distinct reachable zones, from the classical region count:
// |L| * n! * 2^n * (2M+2)^n. Clamped to `cap`.
std::size_t state_ceiling(std::size_t locations, unsigned n, std::int64_t max_const,
                          std::size_t cap) {
    Int total(static_cast<unsigned long>(locations));
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), n);
    total *= fact;
    Int two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n);
    total *= two_n;
    Int base(2 * max_const + 2);
    Int pow;
    mpz_pow_ui(pow.get_mpz_t(), base.get_mpz_t(), n);
    total *= pow;
    if (total > Int(static_cast<unsigned long>(cap))) return cap;
    return static_cast<std::size_t>(total.get_ui());
}

}  // namespace

std::string TraceAutomaton::state_label(unsigned s) const {
    return location_names[states[s].location] + " | " +
           states[s].zone.to_string(clock_names, scale);
}

TraceAutomaton build_trace_automaton(const PtaModel& ta, const BuildOptions& opts) {
    CompiledTa c = compile(ta);
    TraceAutomaton out;
    for (const Location& l : ta.locations) out.location_names.push_back(l.name);
    out.action_names = ta.actions;
    out.clock_names = ta.clocks;
    out.scale = c.scale;

    ClockZone init = ClockZone::zero(c.n);
    init.up();
    if (!apply_constraint(init, c.invariants[ta.initial])) {
        out.no_states = true;
        return out;
    }
    if (!c.diagonals) init.extrapolate(c.max_const);

    std::size_t cap = state_ceiling(ta.locations.size(), c.n, c.max_const, opts.max_states);

    std::unordered_map<std::string, unsigned> seen;
    auto intern = [&](unsigned loc, ClockZone z) -> std::pair<int, bool> {
        std::string k = std::to_string(loc) + "#" + z.key();
        auto it = seen.find(k);
        if (it != seen.end()) return {static_cast<int>(it->second), false};
        if (out.states.size() >= cap) return {-1, false};
        unsigned id = static_cast<unsigned>(out.states.size());
        out.states.push_back({loc, std::move(z), false});
        out.outgoing.emplace_back();
        seen.emplace(std::move(k), id);
        return {static_cast<int>(id), true};
    };

    intern(ta.initial, std::move(init));
    out.initial = 0;

    std::deque<std::pair<unsigned, std::size_t>> frontier;  // (state, depth)
    frontier.emplace_back(0, 0);
    while (!frontier.empty()) {
        auto [s, depth] = frontier.front();
        frontier.pop_front();
        if (depth >= opts.max_depth) {
            out.truncated = true;
            out.truncation_reason = "depth cap";
            continue;
        }
        unsigned loc = out.states[s].location;
        for (unsigned e = 0; e < ta.edges.size(); ++e) {
            if (ta.edges[e].source != loc) continue;
            ClockZone z = out.states[s].zone;
            if (!apply_constraint(z, c.guards[e])) continue;
            for (unsigned r : ta.edges[e].resets) z.reset(r);
            z.up();
            if (!apply_constraint(z, c.invariants[ta.edges[e].target])) continue;
            if (!c.diagonals) z.extrapolate(c.max_const);
            auto [t, fresh] = intern(ta.edges[e].target, std::move(z));
            if (t < 0) {
                out.truncated = true;
                out.truncation_reason = "state ceiling";
                continue;
            }
            unsigned tid = static_cast<unsigned>(out.transitions.size());
            out.transitions.push_back({s, ta.edges[e].action, e, static_cast<unsigned>(t)});
            out.outgoing[s].push_back(tid);
            if (fresh) frontier.emplace_back(static_cast<unsigned>(t), depth + 1);
        }
    }
    for (unsigned s = 0; s < out.states.size(); ++s)
        out.states[s].deadlock = out.outgoing[s].empty();
    return out;
}

namespace {

std::vector<TraceLabel> labels_of(const TraceAutomaton& a, unsigned s) {
    std::vector<TraceLabel> out;
    for (unsigned t : a.outgoing[s]) {
        out.push_back({a.action_names[a.transitions[t].action],
                       a.location_names[a.states[a.transitions[t].to].location]});
    }
    std::sort(out.begin(), out.end(), [](const TraceLabel& x, const TraceLabel& y) {
        return std::tie(x.action, x.target_location) < std::tie(y.action, y.target_location);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool action_deterministic(const TraceAutomaton& a) {
    for (unsigned s = 0; s < a.states.size(); ++s) {
        std::set<unsigned> acts;
        for (unsigned t : a.outgoing[s])
            if (!acts.insert(a.transitions[t].action).second) return false;
    }
    return true;
}

void require_complete(const TraceAutomaton& a) {
    if (a.truncated)
        throw std::invalid_argument("trace automaton is truncated (" + a.truncation_reason +
                                    "); refusing unsound comparison");
}

}  // namespace

TraceComparison trace_sets_equal(const TraceAutomaton& a, const TraceAutomaton& b,
                                 RunSemantics semantics) {
    require_complete(a);
    require_complete(b);
    TraceComparison res;
    res.exact = action_deterministic(a) && action_deterministic(b);
    if (a.no_states || b.no_states) {
        res.equal = a.no_states == b.no_states;
        if (!res.equal) res.reason = "one side has no valid initial configuration";
        return res;
    }

    struct Joint {
        unsigned ua, wb;
        int parent;
        TraceLabel via;
    };
    std::vector<Joint> joints;
    std::map<std::pair<unsigned, unsigned>, unsigned> seen;
    std::deque<unsigned> queue;
    joints.push_back({a.initial, b.initial, -1, {}});
    seen[{a.initial, b.initial}] = 0;
    queue.push_back(0);

    auto path_to = [&](unsigned j) {
        std::vector<TraceLabel> path;
        for (int cur = static_cast<int>(j); cur > 0; cur = joints[cur].parent)
            path.push_back(joints[cur].via);
        std::reverse(path.begin(), path.end());
        return path;
    };

    while (!queue.empty()) {
        unsigned j = queue.front();
        queue.pop_front();
        unsigned ua = joints[j].ua, wb = joints[j].wb;
        auto la = labels_of(a, ua);
        auto lb = labels_of(b, wb);
        if (la != lb) {
            res.equal = false;
            res.witness = path_to(j);
            // First label present on exactly one side.
            std::vector<TraceLabel> diff;
            std::set_symmetric_difference(
                la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(diff),
                [](const TraceLabel& x, const TraceLabel& y) {
                    return std::tie(x.action, x.target_location) <
                           std::tie(y.action, y.target_location);
                });
            res.witness.push_back(diff.front());
            res.reason = "enabled (action, location) labels differ";
            return res;
        }
        if (semantics == RunSemantics::Maximal &&
            a.states[ua].deadlock != b.states[wb].deadlock) {
            res.equal = false;
            res.witness = path_to(j);
            res.reason = "deadlock flags differ";
            return res;
        }
        for (const TraceLabel& lab : la) {
            for (unsigned ta : a.outgoing[ua]) {
                if (a.action_names[a.transitions[ta].action] != lab.action) continue;
                if (a.location_names[a.states[a.transitions[ta].to].location] !=
                    lab.target_location)
                    continue;
                for (unsigned tb : b.outgoing[wb]) {
                    if (b.action_names[b.transitions[tb].action] != lab.action) continue;
                    if (b.location_names[b.states[b.transitions[tb].to].location] !=
                        lab.target_location)
                        continue;
                    auto key = std::make_pair(a.transitions[ta].to, b.transitions[tb].to);
                    if (seen.count(key)) continue;
                    seen[key] = static_cast<unsigned>(joints.size());
                    joints.push_back({key.first, key.second, static_cast<int>(j), lab});
                    queue.push_back(static_cast<unsigned>(joints.size() - 1));
                }
            }
        }
    }
    res.equal = true;
    return res;
}

InclusionResult untimed_language_included(const TraceAutomaton& a, const TraceAutomaton& b,
                                          RunSemantics semantics) {
    require_complete(a);
    require_complete(b);
    InclusionResult res;
    if (a.no_states) {
        res.included = true;
        return res;
    }

    using Subset = std::vector<unsigned>;
    struct Joint {
        unsigned ua;
        Subset sb;
        int parent;
        std::string via;
    };
    std::vector<Joint> joints;
    std::map<std::pair<unsigned, std::string>, bool> seen;
    std::deque<unsigned> queue;

    auto subset_key = [](const Subset& s) {
        std::string k;
        for (unsigned x : s) k += std::to_string(x) + ",";
        return k;
    };
    Subset init;
    if (!b.no_states) init.push_back(b.initial);
    joints.push_back({a.initial, init, -1, ""});
    seen[{a.initial, subset_key(init)}] = true;
    queue.push_back(0);

    auto path_to = [&](unsigned j) {
        std::vector<std::string> path;
        for (int cur = static_cast<int>(j); cur > 0; cur = joints[cur].parent)
            path.push_back(joints[cur].via);
        std::reverse(path.begin(), path.end());
        return path;
    };

    while (!queue.empty()) {
        unsigned j = queue.front();
        queue.pop_front();
        unsigned ua = joints[j].ua;
        const Subset sb = joints[j].sb;

        if (semantics == RunSemantics::Maximal && a.states[ua].deadlock) {
            bool any_deadlock = false;
            for (unsigned w : sb) any_deadlock |= b.states[w].deadlock;
            if (!any_deadlock) {
                res.included = false;
                res.witness_word = path_to(j);
                res.reason = "maximal finite word of the first automaton is not maximal in the second";
                return res;
            }
        }
        // Group a's transitions by action name.
        std::map<std::string, std::vector<unsigned>> by_action;
        for (unsigned t : a.outgoing[ua])
            by_action[a.action_names[a.transitions[t].action]].push_back(t);
        for (auto& [act, ts] : by_action) {
            Subset nb;
            for (unsigned w : sb) {
                for (unsigned tb : b.outgoing[w]) {
                    if (b.action_names[b.transitions[tb].action] == act)
                        nb.push_back(b.transitions[tb].to);
                }
            }
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
            if (nb.empty()) {
                res.included = false;
                res.witness_word = path_to(j);
                res.witness_word.push_back(act);
                res.reason = "word enabled in the first automaton but not in the second";
                return res;
            }
            std::string nbk = subset_key(nb);
            for (unsigned t : ts) {
                auto key = std::make_pair(a.transitions[t].to, nbk);
                if (seen.count(key)) continue;
                seen[key] = true;
                joints.push_back({a.transitions[t].to, nb, static_cast<int>(j), act});
                queue.push_back(static_cast<unsigned>(joints.size() - 1));
            }
        }
    }
    res.included = true;
    return res;
}

InclusionResult untimed_language_included(const PtaModel& a, const PtaModel& b,
                                          RunSemantics semantics, const BuildOptions& opts) {
    TraceAutomaton ta = build_trace_automaton(a, opts);
    TraceAutomaton tb = build_trace_automaton(b, opts);
    return untimed_language_included(ta, tb, semantics);
}

namespace {

// Feasible delay interval at clock valuation `w` for a clock-only
// polyhedron: {d >= 0 | w + d satisfies poly}.
struct DelayInterval {
    bool empty = false;
    Rat lo;  // >= 0
    bool lo_strict = false;
    bool has_hi = false;
    Rat hi;
    bool hi_strict = false;

    void tighten_lo(const Rat& v, bool strict) {
        if (v > lo || (v == lo && strict)) {
            lo = v;
            lo_strict = strict;
        }
    }
    void tighten_hi(const Rat& v, bool strict) {
        if (!has_hi || v < hi || (v == hi && strict)) {
            has_hi = true;
            hi = v;
            hi_strict = strict;
        }
    }
    void finalize() {
        if (has_hi && (lo > hi || (lo == hi && (lo_strict || hi_strict)))) empty = true;
    }
};

DelayInterval delay_interval(const Polyhedron& poly, const std::vector<Rat>& w) {
    DelayInterval iv;
    if (poly.is_empty()) {
        iv.empty = true;
        return iv;
    }
    for (const Inequality& row : poly.inequalities()) {
        Int slope = 0;
        for (unsigned v = 0; v < row.term.size(); ++v) slope += row.term.coeff(v);
        Rat val = row.term.eval(w);
        if (slope == 0) {
            bool ok = row.rel == Rel::Lt ? val < 0 : row.rel == Rel::Le ? val <= 0 : val == 0;
            if (!ok) iv.empty = true;
            continue;
        }
        Rat bound = -val / Rat(slope);
        bound.canonicalize();
        if (row.rel == Rel::Eq) {
            iv.tighten_lo(bound, false);
            iv.tighten_hi(bound, false);
        } else if (slope > 0) {
            iv.tighten_hi(bound, row.rel == Rel::Lt);
        } else {
            iv.tighten_lo(bound, row.rel == Rel::Lt);
        }
    }
    iv.finalize();
    return iv;
}

}  // namespace

std::optional<std::vector<ConcreteStep>> find_concrete_run(const PtaModel& ta,
                                                           unsigned target_location,
                                                           const BuildOptions& opts) {
    TraceAutomaton aut = build_trace_automaton(ta, opts);
    if (aut.no_states) return std::nullopt;
    // Shortest transition path to the target location.
    std::vector<int> parent(aut.states.size(), -2);
    parent[aut.initial] = -1;
    std::deque<unsigned> q{aut.initial};
    int goal = aut.states[aut.initial].location == target_location ? static_cast<int>(aut.initial) : -1;
    std::vector<int> via(aut.states.size(), -1);
    while (!q.empty() && goal < 0) {
        unsigned s = q.front();
        q.pop_front();
        for (unsigned t : aut.outgoing[s]) {
            unsigned to = aut.transitions[t].to;
            if (parent[to] != -2) continue;
            parent[to] = static_cast<int>(s);
            via[to] = static_cast<int>(t);
            if (aut.states[to].location == target_location) {
                goal = static_cast<int>(to);
                break;
            }
            q.push_back(to);
        }
    }
    if (goal < 0) return std::nullopt;
    std::vector<unsigned> edges;
    for (int cur = goal; parent[cur] >= 0; cur = parent[cur])
        edges.push_back(aut.transitions[via[cur]].model_edge);
    std::reverse(edges.begin(), edges.end());

    // Refine the symbolic path into an exact run, greedily taking the
    // earliest feasible delay (guards in the bundled models pin the delay
    // with equalities, so greed is safe here).
    std::vector<Rat> w(ta.clocks.size(), Rat(0));
    std::vector<ConcreteStep> run;
    for (unsigned e : edges) {
        const Edge& edge = ta.edges[e];
        DelayInterval gi = delay_interval(ta.edges[e].guard, w);
        DelayInterval ii = delay_interval(ta.locations[edge.source].invariant, w);
        DelayInterval iv;
        iv.lo = gi.lo;
        iv.lo_strict = gi.lo_strict;
        iv.tighten_lo(ii.lo, ii.lo_strict);
        if (gi.has_hi) iv.tighten_hi(gi.hi, gi.hi_strict);
        if (ii.has_hi) iv.tighten_hi(ii.hi, ii.hi_strict);
        iv.empty = gi.empty || ii.empty;
        iv.finalize();
        if (iv.empty) return std::nullopt;
        Rat d;
        if (!iv.lo_strict)
            d = iv.lo;
        else if (iv.has_hi)
            d = (iv.lo + iv.hi) / 2;
        else
            d = iv.lo + 1;
        std::vector<Rat> next = w;
        for (Rat& x : next) x += d;
        if (!edge.guard.satisfies(next) || !ta.locations[edge.source].invariant.satisfies(next))
            return std::nullopt;
        for (unsigned r : edge.resets) next[r] = 0;
        run.push_back({e, d, next});
        w = std::move(next);
    }
    return run;
}

std::set<std::string> enumerate_timed_words(const PtaModel& ta, const std::vector<Rat>& grid,
                                            unsigned max_len) {
    std::set<std::string> words;
    struct Node {
        unsigned loc;
        std::vector<Rat> w;
        std::string word;
        unsigned len;
    };
    std::deque<Node> stack;
    stack.push_back({ta.initial, std::vector<Rat>(ta.clocks.size(), Rat(0)), "", 0});
    words.insert("");
    while (!stack.empty()) {
        Node n = std::move(stack.back());
        stack.pop_back();
        if (n.len >= max_len) continue;
        for (const Rat& d : grid) {
            std::vector<Rat> moved = n.w;
            for (Rat& x : moved) x += d;
            if (!ta.locations[n.loc].invariant.satisfies(moved)) continue;
            for (unsigned e = 0; e < ta.edges.size(); ++e) {
                if (ta.edges[e].source != n.loc) continue;
                if (!ta.edges[e].guard.satisfies(moved)) continue;
                std::vector<Rat> next = moved;
                for (unsigned r : ta.edges[e].resets) next[r] = 0;
                std::string word =
                    n.word + rat_to_string(d) + ":" + ta.actions[ta.edges[e].action] + " ";
                words.insert(word);
                stack.push_back({ta.edges[e].target, std::move(next), std::move(word), n.len + 1});
            }
        }
    }
    return words;
}

}  // namespace pta
