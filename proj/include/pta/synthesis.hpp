#ifndef PTA_SYNTHESIS_HPP
#define PTA_SYNTHESIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "pta/concrete.hpp"
#include "pta/model.hpp"
#include "pta/symbolic.hpp"

namespace pta {

struct TpsOptions {
    // nullopt = unbounded. Bounded by default: general exploration may
    // diverge, and truncation has to be explicit.
    std::optional<std::size_t> max_depth = 256;
    std::optional<std::size_t> max_states = 100000;
};

// Output of the trace-preservation synthesis loop: K_good is the
// intersection of the parameter projections of the compatible states,
// K_bad the union over the incompatible ones, and the result their
// difference K_good ∧ ¬K_bad.
struct TpsResult {
    Polyhedron k_good;              // parameter-only context
    DisjunctiveConstraint k_bad;
    DisjunctiveConstraint result;
    bool terminated = false;        // fixpoint reached (result is usable)
    std::size_t states_explored = 0;
    std::size_t iterations = 0;
    bool complete_for_model = false;  // model is deterministic
};

// Breadth-first synthesis: compatible states feed K_good, incompatible
// ones feed K_bad and are pruned before their successors are computed; at
// the fixpoint K_good ∧ ¬K_bad is returned.
TpsResult tps(const PtaModel& m, std::span<const Rat> valuation, const TpsOptions& opts = {});

enum class Answer { Yes, No, Unknown };

std::string answer_to_string(Answer a);

enum class PreservationQuestion { Trace, Language };

struct PreservationVerdict {
    PreservationQuestion question = PreservationQuestion::Trace;
    Answer answer = Answer::Unknown;
    std::optional<std::vector<Rat>> witness;          // some other preserving valuation
    std::optional<DisjunctiveConstraint> synthesized; // when computed via tps
    std::string caveat;                               // soundness/completeness notes
    std::string method;
    std::size_t states_explored = 0;
    bool terminated = true;
};

// Deterministic one-clock models: runs tps without caps (the parametric
// zone graph is finite), answers over the synthesized set exactly. A
// nondeterministic one-clock model falls back to the sound-only reading.
PreservationVerdict preserve_1c(const PtaModel& m, std::span<const Rat> valuation,
                                PreservationQuestion question);

// Robust variant: asks for a distinct valuation in the synthesized set
// whose whole segment to the reference lies inside one convex disjunct.
PreservationVerdict preserve_robust_1c(const PtaModel& m, std::span<const Rat> valuation);

// Deterministic L- or U-PTA with one integer parameter: compares the trace
// automata at v-1, v and v+1.
PreservationVerdict preserve_lu_1ip(const PtaModel& m, std::span<const Rat> valuation,
                                    PreservationQuestion question);

// Fallback for models outside the decidable classes: capped tps, sound
// answers only, with an explicit caveat.
PreservationVerdict preserve_general(const PtaModel& m, std::span<const Rat> valuation,
                                     PreservationQuestion question, const TpsOptions& opts = {});

}  // namespace pta

#endif
