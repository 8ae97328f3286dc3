#ifndef PTA_POLYHEDRON_HPP
#define PTA_POLYHEDRON_HPP

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pta/linear_term.hpp"
#include "pta/rational.hpp"
#include "pta/variables.hpp"

namespace pta {

// Relation of an inequality `term REL 0`. `>=`/`>` are normalized away by
// negating the term; `=` keeps its leading nonzero coefficient positive.
enum class Rel : std::uint8_t { Lt, Le, Eq };

std::string rel_to_string(Rel r);

struct Inequality {
    LinearTerm term;
    Rel rel = Rel::Le;

    int compare(const Inequality& o) const;
    bool operator==(const Inequality& o) const { return compare(o) == 0; }
    bool holds(std::span<const Rat> valuation) const;
    std::string to_string(const VarNamer& namer) const;
};

// Negation of a single inequality. `= ` splits, hence up to two results.
std::vector<Inequality> negate(const Inequality& ineq);

// Finite conjunction of inequalities over clocks and parameters, exact
// rational semantics, kept in a canonical form that is unique for a given
// point set. All variables are implicitly nonnegative: the point set is
// the set of nonnegative valuations satisfying every inequality, and
// nonnegativity constraints are materialized only while eliminating a
// variable. The empty polyhedron is canonically the single inequality
// `1 <= 0`.
class Polyhedron {
  public:
    Polyhedron() = default;

    static Polyhedron top(const VarContext& ctx);
    static Polyhedron bottom(const VarContext& ctx);
    // Canonicalizes (normalization, implied equalities, row reduction,
    // redundancy elimination, sorting).
    static Polyhedron make(const VarContext& ctx, std::vector<Inequality> ineqs);

    Polyhedron(const Polyhedron& o);
    Polyhedron(Polyhedron&& o) noexcept;
    Polyhedron& operator=(const Polyhedron& o);
    Polyhedron& operator=(Polyhedron&& o) noexcept;

    const VarContext& context() const { return ctx_; }
    const std::vector<Inequality>& inequalities() const { return ineqs_; }
    bool is_top() const { return ineqs_.empty(); }

    bool satisfies(std::span<const Rat> valuation) const;
    bool is_empty() const;

    // Fourier-Motzkin elimination of `vars` (flat indices). The result is
    // over the same context; eliminated variables are unconstrained. Their
    // implicit nonnegativity participates in the elimination.
    Polyhedron eliminate(const std::vector<unsigned>& flat_vars) const;

    // Eliminates every clock and reindexes into a parameter-only context.
    Polyhedron project_params() const;

    // {(w + d, v) | (w, v) in this, d >= 0}
    Polyhedron time_elapse() const;

    // Eliminates the given clocks, then pins them to zero.
    Polyhedron reset(const std::vector<unsigned>& clock_flats) const;

    Polyhedron intersect(const Polyhedron& other) const;
    Polyhedron intersect(const Inequality& ineq) const;

    // True iff every point of `other` satisfies this polyhedron.
    bool includes(const Polyhedron& other) const;
    bool equals_set(const Polyhedron& other) const {
        return includes(other) && other.includes(*this);
    }

    // Some rational point of the polyhedron, or nullopt when empty.
    std::optional<std::vector<Rat>> sample_point() const;

    // Syntactic equality of canonical forms.
    bool operator==(const Polyhedron& o) const {
        return ctx_ == o.ctx_ && ineqs_ == o.ineqs_;
    }

    std::string to_string(const VarNamer& namer) const;
    std::string to_string() const { return to_string(default_namer(ctx_)); }
    // Compact deterministic key for state deduplication.
    std::string key() const;

  private:
    VarContext ctx_;
    std::vector<Inequality> ineqs_;
    // -1 unknown, 0 nonempty, 1 empty. Idempotent write, safe to race.
    mutable std::atomic<std::int8_t> empty_cache_{-1};

    void canonicalize();
};

// Finite union of nonempty polyhedra over one context, canonically
// ordered and deduplicated. FALSE is the empty union.
class DisjunctiveConstraint {
  public:
    DisjunctiveConstraint() = default;
    explicit DisjunctiveConstraint(const VarContext& ctx) : ctx_(ctx) {}

    static DisjunctiveConstraint false_(const VarContext& ctx);
    static DisjunctiveConstraint true_(const VarContext& ctx);
    static DisjunctiveConstraint of(Polyhedron poly);
    static DisjunctiveConstraint make(const VarContext& ctx, std::vector<Polyhedron> disjuncts);

    const VarContext& context() const { return ctx_; }
    const std::vector<Polyhedron>& disjuncts() const { return disjuncts_; }
    bool is_false() const { return disjuncts_.empty(); }

    bool satisfies(std::span<const Rat> valuation) const;

    DisjunctiveConstraint add(const Polyhedron& poly) const;
    DisjunctiveConstraint intersect(const DisjunctiveConstraint& other) const;
    DisjunctiveConstraint intersect(const Polyhedron& poly) const;

    // Set complement within the nonnegative orthant.
    DisjunctiveConstraint complement() const;

    // Exact: this \ other is empty.
    bool included_in(const DisjunctiveConstraint& other) const;
    bool equals_set(const DisjunctiveConstraint& other) const {
        return included_in(other) && other.included_in(*this);
    }

    std::string to_string(const VarNamer& namer) const;
    std::string to_string() const { return to_string(default_namer(ctx_)); }

  private:
    VarContext ctx_;
    std::vector<Polyhedron> disjuncts_;
};

// The singleton {v} as a polyhedron over a parameter-only context.
Polyhedron point_polyhedron(const VarContext& ctx, std::span<const Rat> valuation);

// Some v' != v lying in a disjunct of `d` that contains `v`, or nullopt
// when every disjunct through `v` is the singleton {v}. Requires v in d.
std::optional<std::vector<Rat>> contains_other_point(const DisjunctiveConstraint& d,
                                                     std::span<const Rat> valuation);

}  // namespace pta

#endif
