#include "pta/polyhedron.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pta {

namespace {

enum class Norm { Keep, True, False };

// Constant-only inequalities evaluate to a truth value; everything else
// is gcd-reduced, with equalities flipped to a positive leading
// coefficient.
Norm normalize(Inequality& q) {
    if (q.term.is_constant()) {
        const Int& c = q.term.constant();
        bool holds = (q.rel == Rel::Lt) ? (c < 0) : (q.rel == Rel::Le) ? (c <= 0) : (c == 0);
        return holds ? Norm::True : Norm::False;
    }
    q.term.reduce_gcd();
    if (q.rel == Rel::Eq && q.term.coeff(q.term.leading_var()) < 0) q.term = -q.term;
    return Norm::Keep;
}

void sort_dedup(std::vector<Inequality>& rows) {
    std::sort(rows.begin(), rows.end(),
              [](const Inequality& a, const Inequality& b) { return a.compare(b) < 0; });
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

// Rows sharing a coefficient ray are collapsed to the tightest bound.
// Detects direct contradictions between an equality and a bound on the
// same ray. Returns false when the system is plainly infeasible.
bool tighten_same_ray(std::vector<Inequality>& rows) {
    struct Best {
        bool has_upper = false;
        Rat upper;  // unit_coeffs . v  (rel)  upper
        bool upper_strict = false;
        bool has_eq = false;
        Rat eq;
    };
    std::map<std::vector<Int>, Best> byray;
    for (const Inequality& q : rows) {
        Int g = 0;
        for (const Int& c : q.term.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        assert(g > 0);
        std::vector<Int> ray = q.term.coeffs();
        for (Int& c : ray) c /= g;
        Rat bound(-q.term.constant(), g);
        bound.canonicalize();
        Best& b = byray[std::move(ray)];
        if (q.rel == Rel::Eq) {
            if (b.has_eq && b.eq != bound) return false;
            b.has_eq = true;
            b.eq = bound;
        } else {
            bool strict = q.rel == Rel::Lt;
            if (!b.has_upper || bound < b.upper || (bound == b.upper && strict)) {
                b.has_upper = true;
                b.upper = bound;
                b.upper_strict = strict;
            }
        }
    }
    std::vector<Inequality> out;
    out.reserve(byray.size());
    for (auto& [ray, b] : byray) {
        if (b.has_eq) {
            if (b.has_upper && (b.eq > b.upper || (b.eq == b.upper && b.upper_strict)))
                return false;
            LinearTerm t(ray, Int(0));
            t *= den(b.eq);
            t.constant() = -num(b.eq);
            Inequality q{std::move(t), Rel::Eq};
            if (normalize(q) == Norm::Keep) out.push_back(std::move(q));
            continue;
        }
        LinearTerm t(ray, Int(0));
        t *= den(b.upper);
        t.constant() = -num(b.upper);
        Inequality q{std::move(t), b.upper_strict ? Rel::Lt : Rel::Le};
        if (normalize(q) == Norm::Keep) out.push_back(std::move(q));
    }
    rows = std::move(out);
    return true;
}

// Eliminates variable `x` from `target` using the equality `eq`
// (a*x + t = 0). The target is scaled by |a| > 0, preserving its relation.
Inequality substitute_eq(const Inequality& target, const LinearTerm& eq, unsigned x) {
    const Int& a = eq.coeff(x);
    const Int& b = target.term.coeff(x);
    Int absa = abs(a);
    Int factor = (a > 0) ? b : -b;
    LinearTerm t = target.term * absa - eq * factor;
    assert(t.coeff(x) == 0);
    return Inequality{std::move(t), target.rel};
}

// One Fourier-Motzkin step: removes `x` from the system. The caller is
// responsible for having added `x >= 0` if the variable's implicit
// nonnegativity matters. Returns false when a contradiction appears.
bool fm_step(std::vector<Inequality>& rows, unsigned x) {
    {
        std::vector<Inequality> clean;
        clean.reserve(rows.size());
        for (Inequality& q : rows) {
            switch (normalize(q)) {
                case Norm::False: return false;
                case Norm::True: break;
                case Norm::Keep: clean.push_back(std::move(q));
            }
        }
        rows = std::move(clean);
    }
    // An equality containing x doubles as a definition: substitution is
    // cheaper and exact.
    int eq_idx = -1;
    for (unsigned i = 0; i < rows.size(); ++i) {
        if (rows[i].rel == Rel::Eq && rows[i].term.coeff(x) != 0) {
            if (eq_idx < 0 || cmp(abs(rows[i].term.coeff(x)), abs(rows[eq_idx].term.coeff(x))) < 0)
                eq_idx = static_cast<int>(i);
        }
    }
    std::vector<Inequality> out;
    if (eq_idx >= 0) {
        LinearTerm eq = rows[eq_idx].term;
        for (unsigned i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == eq_idx) continue;
            Inequality q = rows[i].term.coeff(x) != 0 ? substitute_eq(rows[i], eq, x) : rows[i];
            switch (normalize(q)) {
                case Norm::False: return false;
                case Norm::True: break;
                case Norm::Keep: out.push_back(std::move(q));
            }
        }
    } else {
        std::vector<const Inequality*> uppers, lowers;
        for (const Inequality& q : rows) {
            const Int& a = q.term.coeff(x);
            if (a == 0)
                out.push_back(q);
            else if (a > 0)
                uppers.push_back(&q);
            else
                lowers.push_back(&q);
        }
        for (const Inequality* u : uppers) {
            for (const Inequality* l : lowers) {
                const Int& au = u->term.coeff(x);
                const Int& al = l->term.coeff(x);
                LinearTerm t = u->term * (-al) + l->term * au;
                assert(t.coeff(x) == 0);
                Rel rel = (u->rel == Rel::Lt || l->rel == Rel::Lt) ? Rel::Lt : Rel::Le;
                Inequality q{std::move(t), rel};
                switch (normalize(q)) {
                    case Norm::False: return false;
                    case Norm::True: break;
                    case Norm::Keep: out.push_back(std::move(q));
                }
            }
        }
    }
    if (!tighten_same_ray(out)) return false;
    sort_dedup(out);
    rows = std::move(out);
    return true;
}

Inequality nonneg_row(const VarContext& ctx, unsigned flat) {
    LinearTerm t(ctx);
    t.coeff(flat) = -1;
    return Inequality{std::move(t), Rel::Le};
}

// Feasibility over the nonnegative orthant.
bool system_is_empty(const VarContext& ctx, std::vector<Inequality> rows) {
    for (unsigned v = 0; v < ctx.size(); ++v) rows.push_back(nonneg_row(ctx, v));
    for (unsigned v = 0; v < ctx.size(); ++v) {
        if (!fm_step(rows, v)) return true;
    }
    return false;
}

}  // namespace

std::string rel_to_string(Rel r) {
    switch (r) {
        case Rel::Lt: return "<";
        case Rel::Le: return "<=";
        default: return "=";
    }
}

int Inequality::compare(const Inequality& o) const {
    int c = term.compare(o.term);
    if (c != 0) return c;
    return static_cast<int>(rel) - static_cast<int>(o.rel);
}

bool Inequality::holds(std::span<const Rat> valuation) const {
    Rat v = term.eval(valuation);
    switch (rel) {
        case Rel::Lt: return v < 0;
        case Rel::Le: return v <= 0;
        default: return v == 0;
    }
}

std::string Inequality::to_string(const VarNamer& namer) const {
    // Positive monomials stay on the left, everything else moves right.
    LinearTerm lhs = term, rhs = -term;
    for (unsigned i = 0; i < term.size(); ++i) {
        if (term.coeff(i) > 0)
            rhs.coeff(i) = 0;
        else
            lhs.coeff(i) = 0;
    }
    if (term.constant() > 0)
        rhs.constant() = 0;
    else
        lhs.constant() = 0;
    std::string l = lhs.is_zero() ? "0" : lhs.to_string(namer);
    std::string r = rhs.is_zero() ? "0" : rhs.to_string(namer);
    return l + " " + rel_to_string(rel) + " " + r;
}

std::vector<Inequality> negate(const Inequality& ineq) {
    switch (ineq.rel) {
        case Rel::Le: return {Inequality{-ineq.term, Rel::Lt}};
        case Rel::Lt: return {Inequality{-ineq.term, Rel::Le}};
        default: return {Inequality{ineq.term, Rel::Lt}, Inequality{-ineq.term, Rel::Lt}};
    }
}

Polyhedron Polyhedron::top(const VarContext& ctx) {
    Polyhedron p;
    p.ctx_ = ctx;
    p.empty_cache_.store(0, std::memory_order_relaxed);
    return p;
}

Polyhedron Polyhedron::bottom(const VarContext& ctx) {
    Polyhedron p;
    p.ctx_ = ctx;
    LinearTerm t(ctx);
    t.constant() = 1;
    p.ineqs_.push_back(Inequality{std::move(t), Rel::Le});
    p.empty_cache_.store(1, std::memory_order_relaxed);
    return p;
}

Polyhedron Polyhedron::make(const VarContext& ctx, std::vector<Inequality> ineqs) {
    Polyhedron p;
    p.ctx_ = ctx;
    p.ineqs_ = std::move(ineqs);
    p.canonicalize();
    return p;
}

Polyhedron::Polyhedron(const Polyhedron& o)
    : ctx_(o.ctx_), ineqs_(o.ineqs_), empty_cache_(o.empty_cache_.load(std::memory_order_relaxed)) {}

Polyhedron::Polyhedron(Polyhedron&& o) noexcept
    : ctx_(o.ctx_),
      ineqs_(std::move(o.ineqs_)),
      empty_cache_(o.empty_cache_.load(std::memory_order_relaxed)) {}

Polyhedron& Polyhedron::operator=(const Polyhedron& o) {
    ctx_ = o.ctx_;
    ineqs_ = o.ineqs_;
    empty_cache_.store(o.empty_cache_.load(std::memory_order_relaxed), std::memory_order_relaxed);
    return *this;
}

Polyhedron& Polyhedron::operator=(Polyhedron&& o) noexcept {
    ctx_ = o.ctx_;
    ineqs_ = std::move(o.ineqs_);
    empty_cache_.store(o.empty_cache_.load(std::memory_order_relaxed), std::memory_order_relaxed);
    return *this;
}

void Polyhedron::canonicalize() {
    std::vector<Inequality> rows;
    rows.reserve(ineqs_.size());
    bool contradiction = false;
    for (Inequality& q : ineqs_) {
        switch (normalize(q)) {
            case Norm::False: contradiction = true; break;
            case Norm::True: break;
            case Norm::Keep: rows.push_back(std::move(q)); break;
        }
        if (contradiction) break;
    }
    if (!contradiction) contradiction = !tighten_same_ray(rows);
    if (contradiction || system_is_empty(ctx_, rows)) {
        *this = bottom(ctx_);
        return;
    }
    sort_dedup(rows);

    // Promote inequalities whose strict version is infeasible: these hold
    // with equality on the whole point set.
    for (unsigned i = 0; i < rows.size(); ++i) {
        if (rows[i].rel != Rel::Le) continue;
        std::vector<Inequality> probe = rows;
        probe[i].rel = Rel::Lt;
        if (system_is_empty(ctx_, probe)) {
            rows[i].rel = Rel::Eq;
            normalize(rows[i]);
        }
    }
    // Variables pinned to zero by the orthant become explicit equalities,
    // so that e.g. {x + y = 0} and {x = 0, y = 0} canonicalize alike.
    for (unsigned v = 0; v < ctx_.size(); ++v) {
        bool mentioned = false;
        for (const Inequality& q : rows) mentioned |= (q.term.coeff(v) != 0);
        if (!mentioned) continue;
        std::vector<Inequality> probe = rows;
        LinearTerm t(ctx_);
        t.coeff(v) = -1;
        probe.push_back(Inequality{std::move(t), Rel::Lt});  // v > 0
        if (system_is_empty(ctx_, probe)) {
            LinearTerm z(ctx_);
            z.coeff(v) = 1;
            rows.push_back(Inequality{std::move(z), Rel::Eq});
        }
    }

    // Reduced row echelon form of the equality system, then substitution
    // into the inequalities. This gives every inequality a unique
    // representative modulo the affine hull.
    std::vector<LinearTerm> eqs;
    std::vector<Inequality> ineq_rows;
    for (Inequality& q : rows) {
        if (q.rel == Rel::Eq)
            eqs.push_back(std::move(q.term));
        else
            ineq_rows.push_back(std::move(q));
    }
    std::vector<std::pair<unsigned, LinearTerm>> pivots;  // (leading var, row)
    for (unsigned col = 0; col < ctx_.size(); ++col) {
        int found = -1;
        for (unsigned i = 0; i < eqs.size(); ++i) {
            if (eqs[i].coeff(col) != 0) { found = static_cast<int>(i); break; }
        }
        if (found < 0) continue;
        LinearTerm pivot = std::move(eqs[found]);
        eqs.erase(eqs.begin() + found);
        if (pivot.coeff(col) < 0) pivot = -pivot;
        pivot.reduce_gcd();
        for (LinearTerm& other : eqs) {
            if (other.coeff(col) == 0) continue;
            other = other * pivot.coeff(col) - pivot * other.coeff(col);
            other.reduce_gcd();
        }
        for (auto& [pcol, prow] : pivots) {
            if (prow.coeff(col) == 0) continue;
            prow = prow * pivot.coeff(col) - pivot * prow.coeff(col);
            if (prow.coeff(pcol) < 0) prow = -prow;
            prow.reduce_gcd();
        }
        pivots.emplace_back(col, std::move(pivot));
    }
    // Leftover equality rows are constant-only; a nonzero one means empty,
    // which the feasibility check above already excluded.
    rows.clear();
    for (auto& [col, prow] : pivots) rows.push_back(Inequality{prow, Rel::Eq});
    for (Inequality& q : ineq_rows) {
        for (auto& [col, prow] : pivots) {
            if (q.term.coeff(col) != 0) q = substitute_eq(q, prow, col);
        }
        switch (normalize(q)) {
            case Norm::False: *this = bottom(ctx_); return;
            case Norm::True: break;
            case Norm::Keep: rows.push_back(std::move(q)); break;
        }
    }
    if (!tighten_same_ray(rows)) { *this = bottom(ctx_); return; }
    sort_dedup(rows);

    // Drop redundant inequalities: a row implied by the rest (within the
    // orthant) contributes nothing to the point set.
    for (unsigned i = 0; i < rows.size();) {
        if (rows[i].rel == Rel::Eq) { ++i; continue; }
        std::vector<Inequality> probe;
        probe.reserve(rows.size());
        for (unsigned j = 0; j < rows.size(); ++j)
            if (j != i) probe.push_back(rows[j]);
        bool redundant = true;
        for (const Inequality& neg : negate(rows[i])) {
            std::vector<Inequality> sys = probe;
            sys.push_back(neg);
            if (!system_is_empty(ctx_, sys)) { redundant = false; break; }
        }
        if (redundant)
            rows.erase(rows.begin() + i);
        else
            ++i;
    }
    sort_dedup(rows);
    ineqs_ = std::move(rows);
    empty_cache_.store(0, std::memory_order_relaxed);
}

bool Polyhedron::satisfies(std::span<const Rat> valuation) const {
    if (valuation.size() < ctx_.size())
        throw std::invalid_argument("valuation does not cover the variable context");
    for (const Inequality& q : ineqs_)
        if (!q.holds(valuation)) return false;
    return true;
}

bool Polyhedron::is_empty() const {
    std::int8_t c = empty_cache_.load(std::memory_order_relaxed);
    if (c >= 0) return c == 1;
    bool e = system_is_empty(ctx_, ineqs_);
    empty_cache_.store(e ? 1 : 0, std::memory_order_relaxed);
    return e;
}

Polyhedron Polyhedron::eliminate(const std::vector<unsigned>& flat_vars) const {
    std::vector<Inequality> rows = ineqs_;
    for (unsigned v : flat_vars) rows.push_back(nonneg_row(ctx_, v));
    for (unsigned v : flat_vars) {
        if (!fm_step(rows, v)) return bottom(ctx_);
    }
    return make(ctx_, std::move(rows));
}

Polyhedron Polyhedron::project_params() const {
    std::vector<unsigned> clocks(ctx_.clocks);
    for (unsigned i = 0; i < ctx_.clocks; ++i) clocks[i] = i;
    std::vector<Inequality> rows = ineqs_;
    for (unsigned v : clocks) rows.push_back(nonneg_row(ctx_, v));
    for (unsigned v : clocks) {
        if (!fm_step(rows, v)) return bottom(VarContext{0, ctx_.params});
    }
    VarContext pctx{0, ctx_.params};
    std::vector<Inequality> shifted;
    shifted.reserve(rows.size());
    for (Inequality& q : rows) {
        LinearTerm t(pctx);
        for (unsigned j = 0; j < ctx_.params; ++j) t.coeff(j) = q.term.coeff(ctx_.clocks + j);
        t.constant() = q.term.constant();
        shifted.push_back(Inequality{std::move(t), q.rel});
    }
    return make(pctx, std::move(shifted));
}

Polyhedron Polyhedron::time_elapse() const {
    if (is_empty()) return *this;
    // Fresh delay variable d: substitute every clock x by x - d, require
    // the pre-delay point to be a valid (nonnegative) valuation, then
    // eliminate d.
    VarContext ext{ctx_.clocks, ctx_.params + 1};
    unsigned d = ext.size() - 1;
    std::vector<Inequality> rows;
    rows.reserve(ineqs_.size() + ctx_.clocks);
    for (const Inequality& q : ineqs_) {
        LinearTerm t(ext);
        Int dcoeff = 0;
        for (unsigned i = 0; i < ctx_.size(); ++i) {
            t.coeff(i) = q.term.coeff(i);
            if (ctx_.is_clock(i)) dcoeff -= q.term.coeff(i);
        }
        t.coeff(d) = dcoeff;
        t.constant() = q.term.constant();
        rows.push_back(Inequality{std::move(t), q.rel});
    }
    for (unsigned x = 0; x < ctx_.clocks; ++x) {
        LinearTerm t(ext);  // -(x - d) <= 0
        t.coeff(x) = -1;
        t.coeff(d) = 1;
        rows.push_back(Inequality{std::move(t), Rel::Le});
    }
    rows.push_back(nonneg_row(ext, d));
    if (!fm_step(rows, d)) return bottom(ctx_);
    std::vector<Inequality> shrunk;
    shrunk.reserve(rows.size());
    for (Inequality& q : rows) {
        assert(q.term.coeff(d) == 0);
        LinearTerm t(ctx_);
        for (unsigned i = 0; i < ctx_.size(); ++i) t.coeff(i) = q.term.coeff(i);
        t.constant() = q.term.constant();
        shrunk.push_back(Inequality{std::move(t), q.rel});
    }
    return make(ctx_, std::move(shrunk));
}

Polyhedron Polyhedron::reset(const std::vector<unsigned>& clock_flats) const {
    std::vector<Inequality> rows = ineqs_;
    for (unsigned v : clock_flats) {
        assert(ctx_.is_clock(v));
        rows.push_back(nonneg_row(ctx_, v));
    }
    for (unsigned v : clock_flats) {
        if (!fm_step(rows, v)) return bottom(ctx_);
    }
    for (unsigned v : clock_flats) {
        LinearTerm t(ctx_);
        t.coeff(v) = 1;
        rows.push_back(Inequality{std::move(t), Rel::Eq});
    }
    return make(ctx_, std::move(rows));
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const {
    assert(ctx_ == other.ctx_);
    std::vector<Inequality> rows = ineqs_;
    rows.insert(rows.end(), other.ineqs_.begin(), other.ineqs_.end());
    return make(ctx_, std::move(rows));
}

Polyhedron Polyhedron::intersect(const Inequality& ineq) const {
    std::vector<Inequality> rows = ineqs_;
    rows.push_back(ineq);
    return make(ctx_, std::move(rows));
}

bool Polyhedron::includes(const Polyhedron& other) const {
    assert(ctx_ == other.ctx_);
    for (const Inequality& q : ineqs_) {
        for (const Inequality& neg : negate(q)) {
            std::vector<Inequality> sys = other.ineqs_;
            sys.push_back(neg);
            if (!system_is_empty(ctx_, sys)) return false;
        }
    }
    return true;
}

std::optional<std::vector<Rat>> Polyhedron::sample_point() const {
    if (is_empty()) return std::nullopt;
    unsigned n = ctx_.size();
    std::vector<std::vector<Inequality>> stages(n + 1);
    stages[n] = ineqs_;
    for (unsigned v = 0; v < n; ++v) stages[n].push_back(nonneg_row(ctx_, v));
    for (unsigned v = n; v-- > 0;) {
        stages[v] = stages[v + 1];
        if (!fm_step(stages[v], v)) return std::nullopt;  // cannot happen: nonempty
    }
    std::vector<Rat> point(n, Rat(0));
    for (unsigned v = 0; v < n; ++v) {
        // Bounds on variable v from the stage where variables > v are gone.
        bool has_hi = false, hi_strict = false, has_eq = false;
        Rat lo(0), hi(0), eqv(0);
        bool lo_strict = false;
        for (const Inequality& q : stages[v + 1]) {
            const Int& a = q.term.coeff(v);
            if (a == 0) continue;
            Rat rest(q.term.constant());
            for (unsigned j = 0; j < v; ++j)
                if (q.term.coeff(j) != 0) rest += Rat(q.term.coeff(j)) * point[j];
            Rat bound = -rest / Rat(a);
            bound.canonicalize();
            if (q.rel == Rel::Eq) {
                has_eq = true;
                eqv = bound;
            } else if (a > 0) {
                if (!has_hi || bound < hi || (bound == hi && q.rel == Rel::Lt)) {
                    has_hi = true;
                    hi = bound;
                    hi_strict = q.rel == Rel::Lt;
                }
            } else {
                if (bound > lo || (bound == lo && q.rel == Rel::Lt)) {
                    lo = bound;
                    lo_strict = q.rel == Rel::Lt;
                }
            }
        }
        if (has_eq)
            point[v] = eqv;
        else if (!has_hi)
            point[v] = lo_strict ? Rat(lo + 1) : lo;
        else if (!lo_strict && (lo < hi || (lo == hi && !hi_strict)))
            point[v] = lo;
        else
            point[v] = Rat(lo + hi) / 2;
    }
    return point;
}

std::string Polyhedron::to_string(const VarNamer& namer) const {
    if (ineqs_.empty()) return "true";
    if (is_empty()) return "false";
    std::ostringstream out;
    for (unsigned i = 0; i < ineqs_.size(); ++i) {
        if (i) out << " & ";
        out << ineqs_[i].to_string(namer);
    }
    return out.str();
}

std::string Polyhedron::key() const {
    std::ostringstream out;
    for (const Inequality& q : ineqs_) {
        out << static_cast<int>(q.rel) << ':';
        for (unsigned i = 0; i < q.term.size(); ++i) {
            const Int& c = q.term.coeff(i);
            if (c != 0) out << i << '*' << c.get_str() << ',';
        }
        out << 'k' << q.term.constant().get_str() << ';';
    }
    return out.str();
}

DisjunctiveConstraint DisjunctiveConstraint::false_(const VarContext& ctx) {
    return DisjunctiveConstraint(ctx);
}

DisjunctiveConstraint DisjunctiveConstraint::true_(const VarContext& ctx) {
    return of(Polyhedron::top(ctx));
}

DisjunctiveConstraint DisjunctiveConstraint::of(Polyhedron poly) {
    DisjunctiveConstraint d(poly.context());
    if (!poly.is_empty()) d.disjuncts_.push_back(std::move(poly));
    return d;
}

DisjunctiveConstraint DisjunctiveConstraint::make(const VarContext& ctx,
                                                  std::vector<Polyhedron> disjuncts) {
    DisjunctiveConstraint d(ctx);
    for (Polyhedron& p : disjuncts) {
        assert(p.context() == ctx);
        if (!p.is_empty()) d.disjuncts_.push_back(std::move(p));
    }
    std::sort(d.disjuncts_.begin(), d.disjuncts_.end(),
              [](const Polyhedron& a, const Polyhedron& b) { return a.key() < b.key(); });
    d.disjuncts_.erase(std::unique(d.disjuncts_.begin(), d.disjuncts_.end()),
                       d.disjuncts_.end());
    return d;
}

bool DisjunctiveConstraint::satisfies(std::span<const Rat> valuation) const {
    for (const Polyhedron& p : disjuncts_)
        if (p.satisfies(valuation)) return true;
    return false;
}

DisjunctiveConstraint DisjunctiveConstraint::add(const Polyhedron& poly) const {
    std::vector<Polyhedron> all = disjuncts_;
    all.push_back(poly);
    return make(ctx_, std::move(all));
}

DisjunctiveConstraint DisjunctiveConstraint::intersect(const DisjunctiveConstraint& other) const {
    assert(ctx_ == other.ctx_);
    std::vector<Polyhedron> out;
    for (const Polyhedron& a : disjuncts_)
        for (const Polyhedron& b : other.disjuncts_) out.push_back(a.intersect(b));
    return make(ctx_, std::move(out));
}

DisjunctiveConstraint DisjunctiveConstraint::intersect(const Polyhedron& poly) const {
    std::vector<Polyhedron> out;
    for (const Polyhedron& a : disjuncts_) out.push_back(a.intersect(poly));
    return make(ctx_, std::move(out));
}

DisjunctiveConstraint DisjunctiveConstraint::complement() const {
    DisjunctiveConstraint acc = true_(ctx_);
    for (const Polyhedron& d : disjuncts_) {
        std::vector<Polyhedron> negd;
        for (const Inequality& q : d.inequalities())
            for (const Inequality& neg : negate(q))
                negd.push_back(Polyhedron::make(ctx_, {neg}));
        acc = acc.intersect(make(ctx_, std::move(negd)));
        if (acc.is_false()) break;
    }
    return acc;
}

bool DisjunctiveConstraint::included_in(const DisjunctiveConstraint& other) const {
    return intersect(other.complement()).is_false();
}

std::string DisjunctiveConstraint::to_string(const VarNamer& namer) const {
    if (disjuncts_.empty()) return "false";
    std::ostringstream out;
    for (unsigned i = 0; i < disjuncts_.size(); ++i) {
        if (i) out << " | ";
        if (disjuncts_.size() > 1) out << "(" << disjuncts_[i].to_string(namer) << ")";
        else out << disjuncts_[i].to_string(namer);
    }
    return out.str();
}

Polyhedron point_polyhedron(const VarContext& ctx, std::span<const Rat> valuation) {
    assert(valuation.size() >= ctx.size());
    std::vector<Inequality> rows;
    for (unsigned v = 0; v < ctx.size(); ++v) {
        LinearTerm t(ctx);
        t.coeff(v) = den(valuation[v]);
        t.constant() = -num(valuation[v]);
        rows.push_back(Inequality{std::move(t), Rel::Eq});
    }
    return Polyhedron::make(ctx, std::move(rows));
}

std::optional<std::vector<Rat>> contains_other_point(const DisjunctiveConstraint& d,
                                                     std::span<const Rat> valuation) {
    if (!d.satisfies(valuation))
        throw std::invalid_argument("reference valuation does not satisfy the constraint");
    const VarContext& ctx = d.context();
    for (const Polyhedron& disjunct : d.disjuncts()) {
        if (!disjunct.satisfies(valuation)) continue;
        for (unsigned v = 0; v < ctx.size(); ++v) {
            // v-coordinate strictly above, then strictly below the reference.
            for (int dir = 0; dir < 2; ++dir) {
                LinearTerm t(ctx);
                if (dir == 0) {  // x_v > c  <=>  -den*x + num < 0
                    t.coeff(v) = -den(valuation[v]);
                    t.constant() = num(valuation[v]);
                } else {  // x_v < c
                    t.coeff(v) = den(valuation[v]);
                    t.constant() = -num(valuation[v]);
                }
                Polyhedron cut = disjunct.intersect(Inequality{std::move(t), Rel::Lt});
                if (auto w = cut.sample_point()) return w;
            }
        }
    }
    return std::nullopt;
}

}  // namespace pta
