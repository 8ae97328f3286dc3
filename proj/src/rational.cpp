#include "pta/rational.hpp"

#include "pta/variables.hpp"

namespace pta {

std::optional<Rat> parse_rat(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(text, 10);
            return Rat(n);
        }
        std::string ns = text.substr(0, slash);
        std::string ds = text.substr(slash + 1);
        if (ns.empty() || ds.empty()) return std::nullopt;
        Int n(ns, 10), d(ds, 10);
        if (d == 0) return std::nullopt;
        Rat q(n, d);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

VarNamer default_namer(const VarContext& ctx) {
    return [ctx](unsigned flat) {
        if (ctx.is_clock(flat)) return "x" + std::to_string(flat);
        return "p" + std::to_string(flat - ctx.clocks);
    };
}

}  // namespace pta
