#ifndef PTA_EXPORTS_HPP
#define PTA_EXPORTS_HPP

#include <string>

#include <json.hpp>

#include "pta/concrete.hpp"
#include "pta/model.hpp"
#include "pta/symbolic.hpp"
#include "pta/synthesis.hpp"

namespace pta {

using Json = nlohmann::json;

// {lhs: {var: coeff, ..., const: c}, rel: "<" | "<=" | "="}
Json to_json(const Inequality& q, const VarNamer& namer);
// list of inequalities
Json to_json(const Polyhedron& p, const VarNamer& namer);
// list of disjuncts
Json to_json(const DisjunctiveConstraint& d, const VarNamer& namer);

std::string to_dot(const TraceAutomaton& a);
Json to_json(const TraceAutomaton& a);

std::string to_dot(const ParametricZoneGraph& g, const PtaModel& m);
Json to_json(const ParametricZoneGraph& g, const PtaModel& m);

Json to_json(const PreservationVerdict& v, const PtaModel& m, std::size_t time_ms);
Json to_json(const TpsResult& r, const PtaModel& m, std::size_t time_ms);

}  // namespace pta

#endif
