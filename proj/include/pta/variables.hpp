#ifndef PTA_VARIABLES_HPP
#define PTA_VARIABLES_HPP

#include <cstdint>
#include <functional>
#include <string>

namespace pta {

enum class VarKind : std::uint8_t { Clock, Parameter };

// Variables live in a declaration context: `clocks` clock variables
// followed by `params` parameter variables. Constraint code works on the
// flat index [0, clocks + params); names are owned by the model layer.
struct VarContext {
    unsigned clocks = 0;
    unsigned params = 0;

    unsigned size() const { return clocks + params; }
    bool is_clock(unsigned flat) const { return flat < clocks; }
    bool is_param(unsigned flat) const { return flat >= clocks && flat < size(); }
    unsigned param_flat(unsigned param_index) const { return clocks + param_index; }

    bool operator==(const VarContext&) const = default;
};

struct Variable {
    VarKind kind;
    unsigned index;  // ordinal within its kind

    unsigned flat(const VarContext& ctx) const {
        return kind == VarKind::Clock ? index : ctx.clocks + index;
    }
    static Variable clock(unsigned i) { return {VarKind::Clock, i}; }
    static Variable param(unsigned i) { return {VarKind::Parameter, i}; }

    bool operator==(const Variable&) const = default;
};

// Maps a flat variable index to a display name.
using VarNamer = std::function<std::string(unsigned)>;

// Fallback namer: x0..x{H-1} for clocks, p0..p{M-1} for parameters.
VarNamer default_namer(const VarContext& ctx);

}  // namespace pta

#endif
