#include "pta/linear_term.hpp"

#include <cassert>
#include <sstream>

namespace pta {

bool LinearTerm::is_constant() const {
    for (const Int& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool LinearTerm::is_zero() const { return constant_ == 0 && is_constant(); }

unsigned LinearTerm::leading_var() const {
    for (unsigned i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return i;
    return size();
}

LinearTerm& LinearTerm::operator+=(const LinearTerm& o) {
    assert(coeffs_.size() == o.coeffs_.size());
    for (unsigned i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    constant_ += o.constant_;
    return *this;
}

LinearTerm& LinearTerm::operator-=(const LinearTerm& o) {
    assert(coeffs_.size() == o.coeffs_.size());
    for (unsigned i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    constant_ -= o.constant_;
    return *this;
}

LinearTerm& LinearTerm::operator*=(const Int& k) {
    for (Int& c : coeffs_) c *= k;
    constant_ *= k;
    return *this;
}

LinearTerm LinearTerm::operator-() const {
    LinearTerm r = *this;
    for (Int& c : r.coeffs_) c = -c;
    r.constant_ = -r.constant_;
    return r;
}

Rat LinearTerm::eval(std::span<const Rat> valuation) const {
    assert(valuation.size() >= coeffs_.size());
    Rat acc(constant_);
    for (unsigned i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) acc += Rat(coeffs_[i]) * valuation[i];
    }
    return acc;
}

void LinearTerm::reduce_gcd() {
    Int g = 0;
    for (const Int& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), constant_.get_mpz_t());
    if (g > 1) {
        for (Int& c : coeffs_) c /= g;
        constant_ /= g;
    }
}

int LinearTerm::compare(const LinearTerm& o) const {
    assert(coeffs_.size() == o.coeffs_.size());
    for (unsigned i = 0; i < coeffs_.size(); ++i) {
        int c = cmp(coeffs_[i], o.coeffs_[i]);
        if (c != 0) return c;
    }
    return cmp(constant_, o.constant_);
}

std::string LinearTerm::to_string(const VarNamer& namer) const {
    std::ostringstream out;
    bool first = true;
    for (unsigned i = 0; i < coeffs_.size(); ++i) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        if (first) {
            if (c == -1)
                out << "-";
            else if (c != 1)
                out << c.get_str() << " ";
        } else {
            out << (c > 0 ? " + " : " - ");
            Int a(abs(c));
            if (a != 1) out << a.get_str() << " ";
        }
        out << namer(i);
        first = false;
    }
    if (first) {
        out << constant_.get_str();
    } else if (constant_ != 0) {
        Int a(abs(constant_));
        out << (constant_ > 0 ? " + " : " - ") << a.get_str();
    }
    return out.str();
}

}  // namespace pta
