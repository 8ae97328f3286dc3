#include "pta/gadgets.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pta/concrete.hpp"
#include "pta/symbolic.hpp"

namespace pta {

std::optional<EncodingKind> encoding_kind_from_string(const std::string& s) {
    if (s == "basic") return EncodingKind::Basic;
    if (s == "wrapper") return EncodingKind::LanguageWrapper;
    if (s == "one-location") return EncodingKind::OneLocation;
    if (s == "robust") return EncodingKind::Robust;
    if (s == "bounded") return EncodingKind::BoundedTime;
    return std::nullopt;
}

namespace {

// Small builder for guard/invariant rows over a model context.
class RowSet {
  public:
    explicit RowSet(const VarContext& ctx) : ctx_(ctx) {}

    // coefficient list (flat index, coeff), constant, relation
    RowSet& add(std::vector<std::pair<unsigned, int>> cs, int k, Rel rel) {
        LinearTerm t(ctx_);
        for (auto [v, c] : cs) t.coeff(v) += c;
        t.constant() = k;
        rows_.push_back(Inequality{std::move(t), rel});
        return *this;
    }
    Polyhedron poly() const { return Polyhedron::make(ctx_, rows_); }

  private:
    VarContext ctx_;
    std::vector<Inequality> rows_;
};

std::string unique_name(std::set<std::string>& used, std::string base) {
    while (used.count(base)) base += "_";
    used.insert(base);
    return base;
}

// ---- Basic / wrapper encoding (clocks t, x1, x2, z; parameter p) -------

constexpr unsigned kT = 0, kX1 = 1, kX2 = 2, kZ = 3;

PtaModel compile_basic(const CounterMachine& cm, bool wrapper) {
    PtaModel m;
    m.name = wrapper ? "cm_wrapper" : "cm_basic";
    m.actions = {"a"};
    m.clocks = {"t", "x1", "x2", "z"};
    m.parameters = {"p"};
    VarContext ctx = m.ctx();
    const unsigned kP = ctx.param_flat(0);

    std::set<std::string> used(cm.state_names.begin(), cm.state_names.end());
    unsigned n = static_cast<unsigned>(cm.state_names.size());

    // Location layout: mains [0, n), bars [n, 2n), copies [2n, 3n).
    Polyhedron cap = RowSet(ctx)
                         .add({{kT, 1}, {kP, -1}}, 0, Rel::Le)
                         .add({{kX1, 1}, {kP, -1}}, 0, Rel::Le)
                         .add({{kX2, 1}, {kP, -1}}, 0, Rel::Le)
                         .add({{kZ, 1}, {kP, -1}}, 0, Rel::Le)
                         .poly();
    for (unsigned s = 0; s < n; ++s) m.locations.push_back({cm.state_names[s], cap});
    for (unsigned s = 0; s < n; ++s)
        m.locations.push_back({unique_name(used, cm.state_names[s] + "_bar"), cap});
    for (unsigned s = 0; s < n; ++s)
        m.locations.push_back({unique_name(used, cm.state_names[s] + "_cp"), cap});
    auto main_of = [&](unsigned s) { return s; };
    auto bar_of = [&](unsigned s) { return n + s; };
    auto cp_of = [&](unsigned s) { return 2 * n + s; };
    m.initial = main_of(cm.initial);

    auto self_reset_at_p = [&](unsigned loc, unsigned clock) {
        m.edges.push_back(
            {loc, RowSet(ctx).add({{clock, 1}, {kP, -1}}, 0, Rel::Eq).poly(), 0, {clock}, loc});
    };

    for (unsigned s = 0; s < n; ++s) {
        // step counter tick: main -> bar on z = p - 1, resetting z
        if (s != cm.halt) {
            m.edges.push_back({main_of(s),
                               RowSet(ctx).add({{kZ, 1}, {kP, -1}}, 1, Rel::Eq).poly(),
                               0,
                               {kZ},
                               bar_of(s)});
        }
        // bar self-loops reset x1, x2, t at value p
        self_reset_at_p(bar_of(s), kX1);
        self_reset_at_p(bar_of(s), kX2);
        self_reset_at_p(bar_of(s), kT);
        // copy self-loops reset x1, x2, z at value p
        self_reset_at_p(cp_of(s), kX1);
        self_reset_at_p(cp_of(s), kX2);
        self_reset_at_p(cp_of(s), kZ);
        // copy -> main exit: x1 < p & x2 < p & t = p & z < p, reset t
        m.edges.push_back({cp_of(s),
                           RowSet(ctx)
                               .add({{kX1, 1}, {kP, -1}}, 0, Rel::Lt)
                               .add({{kX2, 1}, {kP, -1}}, 0, Rel::Lt)
                               .add({{kT, 1}, {kP, -1}}, 0, Rel::Eq)
                               .add({{kZ, 1}, {kP, -1}}, 0, Rel::Lt)
                               .poly(),
                           0,
                           {kT},
                           main_of(s)});
        // machine operation wiring out of bar_s
        unsigned xk;
        if (auto* inc = std::get_if<CounterMachine::Inc>(&cm.ops[s])) {
            xk = inc->counter == 0 ? kX1 : kX2;
            m.edges.push_back({bar_of(s),
                               RowSet(ctx).add({{xk, 1}, {kP, -1}}, 1, Rel::Eq).poly(),
                               0,
                               {xk},
                               cp_of(inc->target)});
        } else if (auto* td = std::get_if<CounterMachine::TDec>(&cm.ops[s])) {
            xk = td->counter == 0 ? kX1 : kX2;
            // zero test: t = 0 & x_k = 0
            m.edges.push_back({bar_of(s),
                               RowSet(ctx)
                                   .add({{kT, 1}}, 0, Rel::Eq)
                                   .add({{xk, 1}}, 0, Rel::Eq)
                                   .poly(),
                               0,
                               {},
                               cp_of(td->zero_target)});
            // decrement: t != 1 & x_k = 1, desugared into the two strict sides
            m.edges.push_back({bar_of(s),
                               RowSet(ctx)
                                   .add({{kT, 1}}, -1, Rel::Lt)
                                   .add({{xk, 1}}, -1, Rel::Eq)
                                   .poly(),
                               0,
                               {xk},
                               cp_of(td->dec_target)});
            m.edges.push_back({bar_of(s),
                               RowSet(ctx)
                                   .add({{kT, -1}}, 1, Rel::Lt)
                                   .add({{xk, 1}}, -1, Rel::Eq)
                                   .poly(),
                               0,
                               {xk},
                               cp_of(td->dec_target)});
        }
    }

    if (wrapper) {
        unsigned start = static_cast<unsigned>(m.locations.size());
        m.locations.push_back({unique_name(used, "start"), Polyhedron::top(ctx)});
        unsigned inf = static_cast<unsigned>(m.locations.size());
        m.locations.push_back({unique_name(used, "inf"), Polyhedron::top(ctx)});
        // p = 0, encoded as t = 0 & t = p
        m.edges.push_back({start,
                           RowSet(ctx)
                               .add({{kT, 1}}, 0, Rel::Eq)
                               .add({{kT, 1}, {kP, -1}}, 0, Rel::Eq)
                               .poly(),
                           0,
                           {},
                           inf});
        // p > 0, encoded as t = 0 & t < p
        m.edges.push_back({start,
                           RowSet(ctx)
                               .add({{kT, 1}}, 0, Rel::Eq)
                               .add({{kT, 1}, {kP, -1}}, 0, Rel::Lt)
                               .poly(),
                           0,
                           {},
                           main_of(cm.initial)});
        m.edges.push_back({inf, Polyhedron::top(ctx), 0, {}, inf});
        m.edges.push_back({main_of(cm.halt), Polyhedron::top(ctx), 0, {}, inf});
        m.initial = start;
    }
    return m;
}

// ---- Robust / bounded-time encodings (clocks t, x1, x2) ----------------

// Diamond module around one rewrite of the counter clocks: the rewritten
// clock resets on `special`, the other on `plain`, and the module exits on
// t = `exit_bound`, resetting t. Both reset orders are present.
struct DiamondSpec {
    unsigned xk;                 // clock being rewritten
    Polyhedron special;          // guard resetting xk
    Polyhedron plain;            // guard resetting the other counter clock
    Polyhedron exit;             // guard of the final edge (resets t)
};

void add_diamond(PtaModel& m, std::set<std::string>& used, unsigned from, unsigned to,
                 const std::string& base, const DiamondSpec& d) {
    VarContext ctx = m.ctx();
    unsigned other = d.xk == 1 ? 2u : 1u;
    unsigned u = static_cast<unsigned>(m.locations.size());
    m.locations.push_back({unique_name(used, base + "_u"), Polyhedron::top(ctx)});
    unsigned w = static_cast<unsigned>(m.locations.size());
    m.locations.push_back({unique_name(used, base + "_w"), Polyhedron::top(ctx)});
    unsigned j = static_cast<unsigned>(m.locations.size());
    m.locations.push_back({unique_name(used, base + "_j"), Polyhedron::top(ctx)});
    m.edges.push_back({from, d.special, 0, {d.xk}, u});
    m.edges.push_back({from, d.plain, 0, {other}, w});
    m.edges.push_back({u, d.plain, 0, {other}, j});
    m.edges.push_back({w, d.special, 0, {d.xk}, j});
    m.edges.push_back({j, d.exit, 0, {0}, to});
}

PtaModel compile_robust(const CounterMachine& cm) {
    PtaModel m;
    m.name = "cm_robust";
    m.actions = {"a"};
    m.clocks = {"t", "x1", "x2"};
    m.parameters = {"p"};
    VarContext ctx = m.ctx();
    const unsigned kP = ctx.param_flat(0);

    std::set<std::string> used(cm.state_names.begin(), cm.state_names.end());
    unsigned n = static_cast<unsigned>(cm.state_names.size());
    for (unsigned s = 0; s < n; ++s)
        m.locations.push_back({cm.state_names[s], Polyhedron::top(ctx)});
    unsigned init0 = static_cast<unsigned>(m.locations.size());
    m.locations.push_back({unique_name(used, "init0"), Polyhedron::top(ctx)});
    m.initial = init0;

    // delay exactly 1, require 0 < p < 1; x1 = x2 = 1 afterwards
    m.edges.push_back({init0,
                       RowSet(ctx)
                           .add({{0, 1}}, -1, Rel::Eq)
                           .add({{kP, -1}}, 0, Rel::Lt)
                           .add({{kP, 1}}, -1, Rel::Lt)
                           .poly(),
                       0,
                       {0},
                       cm.initial});

    for (unsigned s = 0; s < n; ++s) {
        std::string base = cm.state_names[s];
        auto plain_guard = [&](unsigned other) {
            return RowSet(ctx).add({{other, 1}}, -1, Rel::Eq).poly();  // x_other = 1
        };
        if (auto* inc = std::get_if<CounterMachine::Inc>(&cm.ops[s])) {
            unsigned xk = inc->counter == 0 ? 1u : 2u;
            DiamondSpec d{
                xk,
                RowSet(ctx)  // x_k = 1 + p & t <= 1
                    .add({{xk, 1}, {kP, -1}}, -1, Rel::Eq)
                    .add({{0, 1}}, -1, Rel::Le)
                    .poly(),
                plain_guard(xk == 1 ? 2u : 1u),
                RowSet(ctx).add({{0, 1}}, -1, Rel::Eq).poly(),  // t = 1
            };
            add_diamond(m, used, s, inc->target, base + "_inc", d);
        } else if (auto* td = std::get_if<CounterMachine::TDec>(&cm.ops[s])) {
            unsigned xk = td->counter == 0 ? 1u : 2u;
            // zero branch: t = 0 & x_k = 1, zero time
            m.edges.push_back({s,
                               RowSet(ctx)
                                   .add({{0, 1}}, 0, Rel::Eq)
                                   .add({{xk, 1}}, -1, Rel::Eq)
                                   .poly(),
                               0,
                               {},
                               td->zero_target});
            DiamondSpec d{
                xk,
                RowSet(ctx)  // x_k = 1 - p & t <= 1
                    .add({{xk, 1}, {kP, 1}}, -1, Rel::Eq)
                    .add({{0, 1}}, -1, Rel::Le)
                    .poly(),
                plain_guard(xk == 1 ? 2u : 1u),
                RowSet(ctx).add({{0, 1}}, -1, Rel::Eq).poly(),
            };
            add_diamond(m, used, s, td->dec_target, base + "_dec", d);
        }
    }
    return m;
}

PtaModel compile_bounded(const CounterMachine& cm) {
    PtaModel m;
    m.name = "cm_bounded";
    m.actions = {"a"};
    m.clocks = {"t", "x1", "x2"};
    m.parameters = {"p1", "p2"};
    VarContext ctx = m.ctx();
    const unsigned kP1 = ctx.param_flat(0), kP2 = ctx.param_flat(1);

    std::set<std::string> used(cm.state_names.begin(), cm.state_names.end());
    unsigned n = static_cast<unsigned>(cm.state_names.size());
    for (unsigned s = 0; s < n; ++s)
        m.locations.push_back({cm.state_names[s], Polyhedron::top(ctx)});
    unsigned init0 = static_cast<unsigned>(m.locations.size());
    m.locations.push_back({unique_name(used, "init0"), Polyhedron::top(ctx)});
    m.initial = init0;

    // delay exactly p1 > 0; x1 = x2 = p1 afterwards
    m.edges.push_back({init0,
                       RowSet(ctx)
                           .add({{0, 1}, {kP1, -1}}, 0, Rel::Eq)
                           .add({{0, -1}}, 0, Rel::Lt)
                           .poly(),
                       0,
                       {0},
                       cm.initial});

    auto at_p1 = [&](unsigned clock) {
        return RowSet(ctx).add({{clock, 1}, {kP1, -1}}, 0, Rel::Eq).poly();
    };
    auto at_p1p2 = [&](unsigned clock) {
        return RowSet(ctx).add({{clock, 1}, {kP1, -1}, {kP2, -1}}, 0, Rel::Eq).poly();
    };

    for (unsigned s = 0; s < n; ++s) {
        std::string base = cm.state_names[s];
        if (auto* inc = std::get_if<CounterMachine::Inc>(&cm.ops[s])) {
            unsigned xk = inc->counter == 0 ? 1u : 2u;
            unsigned other = xk == 1 ? 2u : 1u;
            DiamondSpec d{xk, at_p1p2(xk), at_p1(other), at_p1(0)};
            add_diamond(m, used, s, inc->target, base + "_inc", d);
        } else if (auto* td = std::get_if<CounterMachine::TDec>(&cm.ops[s])) {
            unsigned xk = td->counter == 0 ? 1u : 2u;
            unsigned other = xk == 1 ? 2u : 1u;
            // zero-test module: both counter clocks rewind at p1, exit
            // requires t = p1 & x_k = p1
            DiamondSpec z{xk, at_p1(xk), at_p1(other),
                          RowSet(ctx)
                              .add({{0, 1}, {kP1, -1}}, 0, Rel::Eq)
                              .add({{xk, 1}, {kP1, -1}}, 0, Rel::Eq)
                              .poly()};
            add_diamond(m, used, s, td->zero_target, base + "_zero", z);
            // decrement module: x_k rewinds at p1, the other at p1 + p2,
            // exit at t = p1 + p2
            DiamondSpec d{xk, at_p1(xk), at_p1p2(other), at_p1p2(0)};
            add_diamond(m, used, s, td->dec_target, base + "_dec", d);
        }
    }
    return m;
}

}  // namespace

PtaModel compile_machine(const CounterMachine& cm, EncodingKind kind) {
    switch (kind) {
        case EncodingKind::Basic: return compile_basic(cm, false);
        case EncodingKind::LanguageWrapper: return compile_basic(cm, true);
        case EncodingKind::Robust: return compile_robust(cm);
        case EncodingKind::BoundedTime: return compile_bounded(cm);
        case EncodingKind::OneLocation:
            throw std::invalid_argument(
                "one-location is a model transform, not a machine encoding; use "
                "one_location_transform");
    }
    throw std::invalid_argument("unknown encoding kind");
}

EncodingReport validate_encoding(const CounterMachine& cm, EncodingKind kind,
                                 std::size_t run_length, std::uint64_t max_counter) {
    EncodingReport rep;
    SimulationResult sim = simulate(cm, run_length);
    rep.machine_ground_truth_ok =
        sim.halted && sim.steps <= run_length && sim.max_counter <= max_counter;
    if (!rep.machine_ground_truth_ok) {
        rep.detail = "machine interpreter disagrees with the supplied run length / counter bound";
        return rep;
    }

    PtaModel model = compile_machine(cm, kind);

    std::vector<Rat> val;
    Rat p1, p2;
    switch (kind) {
        case EncodingKind::Basic:
        case EncodingKind::LanguageWrapper:
            val = {Rat(static_cast<unsigned long>(run_length + 1))};
            break;
        case EncodingKind::Robust:
            val = {max_counter > 0 ? Rat(1, static_cast<unsigned long>(max_counter))
                                   : Rat(1, 2)};
            break;
        case EncodingKind::BoundedTime: {
            unsigned long l = static_cast<unsigned long>(run_length);
            unsigned long c = static_cast<unsigned long>(max_counter);
            if (c > 0) {
                p2 = Rat(1, (c + 1) * l);
                p1 = Rat(c, (c + 1) * l);
            } else {
                p1 = p2 = Rat(1, l);
            }
            val = {p1, p2};
            break;
        }
        default: throw std::invalid_argument("unsupported encoding kind for validation");
    }
    rep.valuation_used = val;
    if (kind == EncodingKind::Robust) p1 = val[0];

    PtaModel ta = valuate(model, val);
    unsigned halt_loc = *ta.location_id(cm.state_names[cm.halt]);
    auto run = find_concrete_run(ta, halt_loc);
    rep.concrete_reachable = run.has_value();
    if (!run) {
        rep.detail = "no concrete run to the halt location at the witness valuation";
        return rep;
    }

    // Counter correspondence along the refined run, checked at every entry
    // into a machine-state location (t = 0 there by construction).
    std::map<unsigned, unsigned> machine_state_of_loc;
    for (unsigned s = 0; s < cm.state_names.size(); ++s)
        machine_state_of_loc[*ta.location_id(cm.state_names[s])] = s;
    // Under the basic encoding the initial location is already the first
    // machine state; elsewhere the first machine location is entered by an
    // initialization edge.
    std::size_t visit = (kind == EncodingKind::Basic) ? 1 : 0;
    rep.correspondence_ok = true;
    Rat total(0);
    for (const ConcreteStep& step : *run) {
        total += step.delay;
        unsigned target = ta.edges[step.edge].target;
        auto it = machine_state_of_loc.find(target);
        if (it == machine_state_of_loc.end()) continue;
        if (visit >= sim.trace.size()) {
            rep.correspondence_ok = false;
            rep.detail = "run visits more machine locations than the interpreter trace";
            break;
        }
        const MachineConfig& cfg = sim.trace[visit];
        ++visit;
        if (it->second != cfg.state) {
            rep.correspondence_ok = false;
            rep.detail = "machine-state sequence mismatch";
            break;
        }
        const Rat& t = step.clocks_after[0];
        const Rat& x1 = step.clocks_after[1];
        const Rat& x2 = step.clocks_after[2];
        if (t != 0) {
            rep.correspondence_ok = false;
            rep.detail = "tick clock nonzero at a machine location";
            break;
        }
        Rat e1, e2;
        switch (kind) {
            case EncodingKind::Basic:
            case EncodingKind::LanguageWrapper:
                e1 = Rat(static_cast<unsigned long>(cfg.c1));
                e2 = Rat(static_cast<unsigned long>(cfg.c2));
                break;
            case EncodingKind::Robust:
                e1 = Rat(1) - p1 * Rat(static_cast<unsigned long>(cfg.c1));
                e2 = Rat(1) - p1 * Rat(static_cast<unsigned long>(cfg.c2));
                break;
            default:  // BoundedTime
                e1 = p1 - p2 * Rat(static_cast<unsigned long>(cfg.c1));
                e2 = p1 - p2 * Rat(static_cast<unsigned long>(cfg.c2));
                break;
        }
        if (x1 != e1 || x2 != e2) {
            rep.correspondence_ok = false;
            rep.detail = "counter correspondence violated at a machine location";
            break;
        }
    }
    rep.total_elapsed = total;
    if (kind == EncodingKind::BoundedTime) rep.within_time_bound = total <= 1;

    // Symbolic lift of the same edge path: a symbolic run to a halt-state
    // whose parameter projection must contain the witness valuation.
    SymbolicState s = initial_state(model);
    for (const ConcreteStep& step : *run) {
        auto nxt = succ(s, step.edge, model);
        if (!nxt) {
            rep.symbolic_reachable = false;
            rep.detail = "symbolic lift of the concrete run died";
            return rep;
        }
        s = std::move(*nxt);
    }
    rep.symbolic_reachable =
        machine_state_of_loc.count(s.location) && machine_state_of_loc[s.location] == cm.halt &&
        !s.constraint.is_empty();
    Polyhedron proj = s.constraint.project_params();
    rep.projection_contains_valuation = proj.satisfies(val);
    return rep;
}

PtaModel one_location_transform(const PtaModel& ta, unsigned k) {
    if (k < 1) throw std::invalid_argument("one_location_transform requires k >= 1");
    VarContext octx = ta.ctx();
    unsigned nloc = static_cast<unsigned>(ta.locations.size());

    PtaModel m;
    m.name = ta.name + "_oneloc";
    m.allow_diagonals = true;
    m.actions = ta.actions;
    m.parameters = ta.parameters;
    m.clocks = ta.clocks;
    std::set<std::string> used(ta.clocks.begin(), ta.clocks.end());
    for (const std::string& p : ta.parameters) used.insert(p);
    unsigned x0 = static_cast<unsigned>(m.clocks.size());
    m.clocks.push_back(unique_name(used, "u0"));
    unsigned xinit = static_cast<unsigned>(m.clocks.size());
    m.clocks.push_back(unique_name(used, "uinit"));
    // k copies per location, indexed 0..k-1
    std::vector<std::vector<unsigned>> copy(nloc, std::vector<unsigned>(k));
    for (unsigned l = 0; l < nloc; ++l)
        for (unsigned i = 0; i < k; ++i) {
            copy[l][i] = static_cast<unsigned>(m.clocks.size());
            m.clocks.push_back(
                unique_name(used, "u_" + ta.locations[l].name + "_" + std::to_string(i)));
        }
    VarContext ctx = m.ctx();

    m.locations.push_back({"hub", Polyhedron::top(ctx)});
    m.initial = 0;

    // Re-embeds a guard over the original context into the wider one.
    auto widen_guard = [&](const Polyhedron& g) {
        std::vector<Inequality> rows;
        for (const Inequality& q : g.inequalities()) {
            LinearTerm t(ctx);
            for (unsigned c = 0; c < octx.clocks; ++c) t.coeff(c) = q.term.coeff(c);
            for (unsigned pj = 0; pj < octx.params; ++pj)
                t.coeff(ctx.param_flat(pj)) = q.term.coeff(octx.param_flat(pj));
            t.constant() = q.term.constant();
            rows.push_back(Inequality{std::move(t), q.rel});
        }
        return rows;
    };

    for (const Edge& e : ta.edges) {
        std::vector<Inequality> base = widen_guard(
            e.guard.intersect(ta.locations[e.source].invariant));
        auto push_edge = [&](std::vector<Inequality> rows, std::vector<unsigned> resets) {
            std::sort(resets.begin(), resets.end());
            resets.erase(std::unique(resets.begin(), resets.end()), resets.end());
            Polyhedron g = Polyhedron::make(ctx, std::move(rows));
            m.edges.push_back({0, std::move(g), e.action, std::move(resets), 0});
        };
        std::vector<unsigned> resets = e.resets;  // original clocks keep flat indices

        if (e.source == ta.initial) {
            // First transition of the run: x0 > 0 and x0 = xinit.
            std::vector<Inequality> rows = base;
            LinearTerm pos(ctx);
            pos.coeff(x0) = -1;
            rows.push_back(Inequality{pos, Rel::Lt});  // x0 > 0
            LinearTerm eq(ctx);
            eq.coeff(x0) = 1;
            eq.coeff(xinit) = -1;
            rows.push_back(Inequality{eq, Rel::Eq});
            std::vector<unsigned> rs = resets;
            rs.push_back(x0);
            rs.push_back(copy[e.target][0]);
            push_edge(std::move(rows), std::move(rs));
        }
        // Transition after a positive delay, as the (i+1)-th member of a
        // block that began i transitions ago: one edge per disjunct.
        for (unsigned i = 0; i < k; ++i) {
            std::vector<Inequality> rows = base;
            LinearTerm pos(ctx);
            pos.coeff(x0) = -1;
            rows.push_back(Inequality{pos, Rel::Lt});  // x0 > 0
            LinearTerm notfirst(ctx);
            notfirst.coeff(x0) = 1;
            notfirst.coeff(xinit) = -1;
            rows.push_back(Inequality{notfirst, Rel::Lt});  // x0 < xinit
            LinearTerm here(ctx);
            here.coeff(copy[e.source][i]) = 1;
            here.coeff(x0) = -1;
            rows.push_back(Inequality{here, Rel::Eq});  // copy_i(source) = x0
            if (i + 1 < k) {
                for (unsigned l = 0; l < nloc; ++l) {
                    LinearTerm deeper(ctx);
                    deeper.coeff(x0) = 1;
                    deeper.coeff(copy[l][i + 1]) = -1;
                    rows.push_back(Inequality{deeper, Rel::Lt});  // copy_{i+1}(l) > x0
                }
            }
            std::vector<unsigned> rs = resets;
            rs.push_back(x0);
            rs.push_back(copy[e.target][0]);
            push_edge(std::move(rows), std::move(rs));
        }
        // Zero-delay follower, position i in the block.
        for (unsigned i = 1; i < k; ++i) {
            std::vector<Inequality> rows = base;
            LinearTerm z(ctx);
            z.coeff(x0) = 1;
            rows.push_back(Inequality{z, Rel::Eq});  // x0 = 0
            LinearTerm here(ctx);
            here.coeff(copy[e.source][i - 1]) = 1;
            rows.push_back(Inequality{here, Rel::Eq});  // copy_{i-1}(source) = 0
            for (unsigned l = 0; l < nloc; ++l) {
                LinearTerm deeper(ctx);
                deeper.coeff(copy[l][i]) = -1;
                rows.push_back(Inequality{deeper, Rel::Lt});  // copy_i(l) > 0
            }
            std::vector<unsigned> rs = resets;
            rs.push_back(copy[e.target][i]);
            push_edge(std::move(rows), std::move(rs));
        }
    }
    return m;
}

}  // namespace pta
