#ifndef PTA_MODEL_HPP
#define PTA_MODEL_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pta/polyhedron.hpp"

namespace pta {

struct Location {
    std::string name;
    Polyhedron invariant;  // over clocks and parameters
};

struct Edge {
    unsigned source = 0;
    Polyhedron guard;
    unsigned action = 0;
    std::vector<unsigned> resets;  // clock flat indices, sorted
    unsigned target = 0;
};

struct PtaModel {
    std::string name;
    bool allow_diagonals = false;
    std::vector<std::string> actions;
    std::vector<std::string> clocks;
    std::vector<std::string> parameters;
    std::vector<Location> locations;
    unsigned initial = 0;
    std::vector<Edge> edges;

    VarContext ctx() const {
        return VarContext{static_cast<unsigned>(clocks.size()),
                          static_cast<unsigned>(parameters.size())};
    }
    VarNamer namer() const;
    std::optional<unsigned> location_id(const std::string& loc_name) const;
    std::vector<unsigned> edges_from(unsigned loc) const;
};

// Which side of a comparison each parameter is used on, per the
// lower/upper-bound discipline of L/U-PTA.
enum class LuStatus { LowerUpper, Lower, Upper, Neither };

struct ModelClass {
    bool deterministic = false;
    LuStatus lu_status = LuStatus::Neither;
    std::vector<unsigned> lower_params;  // parameter ordinals used as lower bounds
    std::vector<unsigned> upper_params;
    unsigned clock_count = 0;
    unsigned parameter_count = 0;
    std::vector<unsigned> parametric_clocks;
    bool has_diagonal_guards = false;
    // False when every atom fits the plain `x rel p + c` shape; true when
    // some guard or invariant needs general linear parameter terms.
    bool extended_guards = false;

    bool is_l_or_u() const { return lu_status != LuStatus::Neither; }
};

ModelClass classify(const PtaModel& m);

// Substitutes a nonnegative rational value for every parameter. The result
// has the same structure and an empty parameter list.
PtaModel valuate(const PtaModel& m, std::span<const Rat> valuation);

// Canonical text form in the model grammar; parse(render(m)) == m.
std::string render(const PtaModel& m);

// Distinct parametric linear terms compared against the clock or against
// each other in guards and invariants, plus the zero term, in a
// parameter-only context. Meaningful for one-clock models.
std::vector<LinearTerm> model_linear_terms(const PtaModel& m);

// Shape check for symbolic states of one-clock models: every inequality is
// (a positive multiple of) either `x rel t` or `t1 rel t2` with t, t1, t2
// drawn from `terms`.
bool is_one_clock_shape(const Polyhedron& constraint, const PtaModel& m,
                        const std::vector<LinearTerm>& terms);

}  // namespace pta

#endif
