#ifndef PTA_LINEAR_TERM_HPP
#define PTA_LINEAR_TERM_HPP

#include <span>
#include <string>
#include <vector>

#include "pta/rational.hpp"
#include "pta/variables.hpp"

namespace pta {

// Integer-coefficient affine expression over the variables of one
// context: sum(coeff[i] * var_i) + constant. Stored densely; a zero
// coefficient and an absent one are the same thing.
class LinearTerm {
  public:
    LinearTerm() = default;
    explicit LinearTerm(const VarContext& ctx) : coeffs_(ctx.size(), Int(0)) {}
    LinearTerm(std::vector<Int> coeffs, Int constant)
        : coeffs_(std::move(coeffs)), constant_(std::move(constant)) {}

    unsigned size() const { return static_cast<unsigned>(coeffs_.size()); }
    const Int& coeff(unsigned flat) const { return coeffs_[flat]; }
    Int& coeff(unsigned flat) { return coeffs_[flat]; }
    const Int& constant() const { return constant_; }
    Int& constant() { return constant_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool is_constant() const;
    bool is_zero() const;
    // Index of the first nonzero coefficient, or size() if constant.
    unsigned leading_var() const;

    LinearTerm& operator+=(const LinearTerm& o);
    LinearTerm& operator-=(const LinearTerm& o);
    LinearTerm& operator*=(const Int& k);
    LinearTerm operator-() const;
    friend LinearTerm operator+(LinearTerm a, const LinearTerm& b) { return a += b; }
    friend LinearTerm operator-(LinearTerm a, const LinearTerm& b) { return a -= b; }
    friend LinearTerm operator*(LinearTerm a, const Int& k) { return a *= k; }

    Rat eval(std::span<const Rat> valuation) const;

    // Divides every coefficient and the constant by their (positive) gcd.
    void reduce_gcd();

    // Lexicographic order on (coefficients, constant).
    int compare(const LinearTerm& o) const;
    bool operator==(const LinearTerm& o) const { return compare(o) == 0; }

    std::string to_string(const VarNamer& namer) const;

  private:
    std::vector<Int> coeffs_;
    Int constant_ = 0;
};

}  // namespace pta

#endif
