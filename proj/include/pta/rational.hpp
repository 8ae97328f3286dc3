#ifndef PTA_RATIONAL_HPP
#define PTA_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace pta {

// Arbitrary-precision integers and rationals. GMP keeps rationals in
// lowest terms with a positive denominator, which is exactly the
// representation the rest of the toolkit relies on.
using Int = mpz_class;
using Rat = mpq_class;

inline Int num(const Rat& q) { return q.get_num(); }
inline Int den(const Rat& q) { return q.get_den(); }

// Renders `3` instead of `3/1`.
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts `7`, `-2`, `3/4`. Returns nullopt on malformed input.
std::optional<Rat> parse_rat(const std::string& text);

Int lcm(const Int& a, const Int& b);

}  // namespace pta

#endif
