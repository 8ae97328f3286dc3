#include "pta/model.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pta {

VarNamer PtaModel::namer() const {
    std::vector<std::string> names = clocks;
    names.insert(names.end(), parameters.begin(), parameters.end());
    return [names](unsigned flat) { return names.at(flat); };
}

std::optional<unsigned> PtaModel::location_id(const std::string& loc_name) const {
    for (unsigned i = 0; i < locations.size(); ++i)
        if (locations[i].name == loc_name) return i;
    return std::nullopt;
}

std::vector<unsigned> PtaModel::edges_from(unsigned loc) const {
    std::vector<unsigned> out;
    for (unsigned i = 0; i < edges.size(); ++i)
        if (edges[i].source == loc) out.push_back(i);
    return out;
}

namespace {

enum Side : unsigned { SideLower = 1, SideUpper = 2 };

// Accumulates the bound side on which each parameter occurs in one
// canonical inequality row.
void lu_sides_of_row(const VarContext& ctx, const Inequality& row, std::vector<unsigned>& sides) {
    bool has_clock = false;
    for (unsigned i = 0; i < ctx.clocks; ++i) has_clock |= (row.term.coeff(i) != 0);
    if (!has_clock) {
        // A pure parameter comparison pins parameters on both sides.
        for (unsigned j = 0; j < ctx.params; ++j)
            if (row.term.coeff(ctx.param_flat(j)) != 0) sides[j] |= SideLower | SideUpper;
        return;
    }
    // Orient the row so the (first) clock appears positively; the row then
    // reads  clock-expr REL param-expr  with param-expr = -(params + const).
    int clock_sign = 0;
    for (unsigned i = 0; i < ctx.clocks && clock_sign == 0; ++i) {
        if (row.term.coeff(i) > 0) clock_sign = 1;
        else if (row.term.coeff(i) < 0) clock_sign = -1;
    }
    bool upper_rel = clock_sign > 0;  // clock-expr <(=) param-expr
    for (unsigned j = 0; j < ctx.params; ++j) {
        Int b = row.term.coeff(ctx.param_flat(j));
        if (b == 0) continue;
        if (clock_sign < 0) b = -b;
        // Coefficient of the parameter on the comparison side is -b.
        bool positive_coeff = b < 0;
        unsigned side;
        if (row.rel == Rel::Eq)
            side = SideLower | SideUpper;
        else if (upper_rel)
            side = positive_coeff ? SideUpper : SideLower;
        else
            side = positive_coeff ? SideLower : SideUpper;
        sides[j] |= side;
    }
}

bool row_is_plain(const VarContext& ctx, const Inequality& row) {
    // Plain atoms per the base PTA definition: x rel p + c, x rel c,
    // p rel c, and their diagonal variants, all with unit coefficients.
    unsigned nclocks = 0, nparams = 0;
    for (unsigned i = 0; i < ctx.clocks; ++i) {
        const Int& c = row.term.coeff(i);
        if (c == 0) continue;
        if (c != 1 && c != -1) return false;
        ++nclocks;
    }
    for (unsigned j = 0; j < ctx.params; ++j) {
        const Int& c = row.term.coeff(ctx.param_flat(j));
        if (c == 0) continue;
        if (c != 1 && c != -1) return false;
        ++nparams;
    }
    return nparams <= 1;
}

}  // namespace

ModelClass classify(const PtaModel& m) {
    ModelClass mc;
    VarContext ctx = m.ctx();
    mc.clock_count = ctx.clocks;
    mc.parameter_count = ctx.params;

    mc.deterministic = true;
    std::set<std::pair<unsigned, unsigned>> seen;
    for (const Edge& e : m.edges) {
        if (!seen.insert({e.source, e.action}).second) mc.deterministic = false;
    }

    std::vector<unsigned> sides(ctx.params, 0);
    std::set<unsigned> parametric;
    auto scan = [&](const Polyhedron& poly) {
        for (const Inequality& row : poly.inequalities()) {
            unsigned clocks_in_row = 0;
            bool params_in_row = false;
            for (unsigned i = 0; i < ctx.clocks; ++i)
                if (row.term.coeff(i) != 0) ++clocks_in_row;
            for (unsigned j = 0; j < ctx.params; ++j)
                if (row.term.coeff(ctx.param_flat(j)) != 0) params_in_row = true;
            if (clocks_in_row >= 2) mc.has_diagonal_guards = true;
            if (clocks_in_row >= 1 && params_in_row) {
                for (unsigned i = 0; i < ctx.clocks; ++i)
                    if (row.term.coeff(i) != 0) parametric.insert(i);
            }
            if (!row_is_plain(ctx, row)) mc.extended_guards = true;
            lu_sides_of_row(ctx, row, sides);
        }
    };
    for (const Location& l : m.locations) scan(l.invariant);
    for (const Edge& e : m.edges) scan(e.guard);

    mc.parametric_clocks.assign(parametric.begin(), parametric.end());
    bool any_both = false;
    for (unsigned j = 0; j < ctx.params; ++j) {
        bool lo = sides[j] & SideLower, up = sides[j] & SideUpper;
        if (lo && up) any_both = true;
        if (lo && !up) mc.lower_params.push_back(j);
        if (up && !lo) mc.upper_params.push_back(j);
    }
    if (any_both)
        mc.lu_status = LuStatus::Neither;
    else if (!mc.lower_params.empty() && mc.upper_params.empty())
        mc.lu_status = LuStatus::Lower;
    else if (mc.lower_params.empty() && !mc.upper_params.empty())
        mc.lu_status = LuStatus::Upper;
    else
        mc.lu_status = LuStatus::LowerUpper;
    return mc;
}

PtaModel valuate(const PtaModel& m, std::span<const Rat> valuation) {
    VarContext ctx = m.ctx();
    if (valuation.size() != ctx.params)
        throw std::invalid_argument("valuation arity does not match the parameter list");
    for (const Rat& q : valuation)
        if (q < 0) throw std::invalid_argument("negative parameter valuation");

    VarContext cctx{ctx.clocks, 0};
    auto subst = [&](const Polyhedron& poly) {
        std::vector<Inequality> out;
        for (const Inequality& row : poly.inequalities()) {
            Rat constant(row.term.constant());
            for (unsigned j = 0; j < ctx.params; ++j) {
                const Int& b = row.term.coeff(ctx.param_flat(j));
                if (b != 0) constant += Rat(b) * valuation[j];
            }
            LinearTerm t(cctx);
            Int d = den(constant);
            for (unsigned i = 0; i < ctx.clocks; ++i) t.coeff(i) = row.term.coeff(i) * d;
            t.constant() = num(constant);
            out.push_back(Inequality{std::move(t), row.rel});
        }
        return Polyhedron::make(cctx, std::move(out));
    };

    PtaModel r;
    r.name = m.name;
    r.allow_diagonals = m.allow_diagonals;
    r.actions = m.actions;
    r.clocks = m.clocks;
    r.initial = m.initial;
    for (const Location& l : m.locations) r.locations.push_back({l.name, subst(l.invariant)});
    for (const Edge& e : m.edges)
        r.edges.push_back({e.source, subst(e.guard), e.action, e.resets, e.target});
    return r;
}

std::string render(const PtaModel& m) {
    std::ostringstream out;
    VarNamer nm = m.namer();
    out << "pta " << m.name << " ;\n";
    if (m.allow_diagonals) out << "allow-diagonals ;\n";
    auto list = [&](const char* kw, const std::vector<std::string>& xs) {
        if (xs.empty()) return;
        out << kw << " ";
        for (unsigned i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
        out << " ;\n";
    };
    list("clocks", m.clocks);
    list("parameters", m.parameters);
    list("actions", m.actions);
    for (unsigned i = 0; i < m.locations.size(); ++i) {
        const Location& l = m.locations[i];
        out << "location " << l.name << " {";
        if (i == m.initial) out << " initial ;";
        out << " invariant " << l.invariant.to_string(nm) << " ; }\n";
    }
    for (const Edge& e : m.edges) {
        out << "edge " << m.locations[e.source].name << " -> " << m.locations[e.target].name
            << " { sync " << m.actions[e.action] << " ; guard " << e.guard.to_string(nm) << " ;";
        if (!e.resets.empty()) {
            out << " reset ";
            for (unsigned i = 0; i < e.resets.size(); ++i)
                out << (i ? ", " : "") << m.clocks[e.resets[i]];
            out << " ;";
        }
        out << " }\n";
    }
    return out.str();
}

std::vector<LinearTerm> model_linear_terms(const PtaModel& m) {
    VarContext ctx = m.ctx();
    VarContext pctx{0, ctx.params};
    std::vector<LinearTerm> terms;
    auto push = [&](LinearTerm t) {
        for (const LinearTerm& u : terms)
            if (u == t) return;
        terms.push_back(std::move(t));
    };
    push(LinearTerm(pctx));  // the zero term
    auto scan = [&](const Polyhedron& poly) {
        for (const Inequality& row : poly.inequalities()) {
            int clock_flat = -1;
            unsigned nclocks = 0;
            for (unsigned i = 0; i < ctx.clocks; ++i)
                if (row.term.coeff(i) != 0) { clock_flat = static_cast<int>(i); ++nclocks; }
            if (nclocks > 1) continue;
            LinearTerm t(pctx);
            if (nclocks == 1) {
                const Int& a = row.term.coeff(static_cast<unsigned>(clock_flat));
                if (a != 1 && a != -1) continue;
                // x rel plt with plt = -(params + const)/a
                for (unsigned j = 0; j < ctx.params; ++j)
                    t.coeff(j) = (a == 1) ? Int(-row.term.coeff(ctx.param_flat(j)))
                                          : row.term.coeff(ctx.param_flat(j));
                t.constant() = (a == 1) ? Int(-row.term.constant()) : row.term.constant();
            } else {
                for (unsigned j = 0; j < ctx.params; ++j) t.coeff(j) = row.term.coeff(ctx.param_flat(j));
                t.constant() = row.term.constant();
            }
            push(std::move(t));
        }
    };
    for (const Location& l : m.locations) scan(l.invariant);
    for (const Edge& e : m.edges) scan(e.guard);
    return terms;
}

namespace {

LinearTerm widen(const VarContext& ctx, const LinearTerm& param_term) {
    LinearTerm t(ctx);
    for (unsigned j = 0; j < ctx.params; ++j) t.coeff(ctx.param_flat(j)) = param_term.coeff(j);
    t.constant() = param_term.constant();
    return t;
}

// True when `row` is a positive rational multiple of `shape`.
bool positive_multiple(const LinearTerm& row, const LinearTerm& shape) {
    if (shape.is_zero()) return row.is_zero();
    // Find the scale from the first nonzero shape entry.
    Int sn, sd;  // row = (sn/sd) * shape
    unsigned i = shape.leading_var();
    if (i < shape.size()) {
        sn = row.coeff(i);
        sd = shape.coeff(i);
    } else {
        sn = row.constant();
        sd = shape.constant();
    }
    if (sn == 0 || (sn > 0) != (sd > 0)) return false;
    for (unsigned v = 0; v < row.size(); ++v)
        if (row.coeff(v) * sd != shape.coeff(v) * sn) return false;
    return row.constant() * sd == shape.constant() * sn;
}

}  // namespace

bool is_one_clock_shape(const Polyhedron& constraint, const PtaModel& m,
                        const std::vector<LinearTerm>& terms) {
    VarContext ctx = m.ctx();
    if (ctx.clocks != 1) return false;
    if (constraint.is_empty()) return false;
    for (const Inequality& row : constraint.inequalities()) {
        bool matched = false;
        if (row.term.coeff(0) != 0) {
            // candidate shapes: +-(x - t)
            for (const LinearTerm& t : terms) {
                LinearTerm base(ctx);
                base.coeff(0) = 1;
                base -= widen(ctx, t);
                if (positive_multiple(row.term, base) || positive_multiple(row.term, -base)) {
                    matched = true;
                    break;
                }
            }
        } else {
            for (const LinearTerm& t1 : terms) {
                for (const LinearTerm& t2 : terms) {
                    if (&t1 == &t2) continue;
                    LinearTerm d = widen(ctx, t1) - widen(ctx, t2);
                    if (positive_multiple(row.term, d)) { matched = true; break; }
                }
                if (matched) break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

}  // namespace pta
