#pragma once

#include <string>
#include <vector>

#include "fermatinv/rational.hpp"

namespace fermatinv {

/*
 * Element of Q(zeta_p) in the power basis 1, zeta, ..., zeta^(p-2), with
 * products reduced modulo Phi_p(X) = 1 + X + ... + X^(p-1).
 */
class CycFieldElem
{
    int p_ = 5;
    std::vector<Rat> c_ = std::vector<Rat>(4);

    void check_same(CycFieldElem const & o) const;
    /* Fold a length-p vector (coefficients of 1..zeta^(p-1)) into the basis. */
    static CycFieldElem from_cyclic(int p, std::vector<Rat> v);
    std::vector<Rat> cyclic() const;

  public:
    CycFieldElem() = default;
    CycFieldElem(int p, std::vector<Rat> coeffs);
    CycFieldElem(int p, Rat const & r);

    /* zeta^k for any integer k. */
    static CycFieldElem zeta_pow(int p, long k);

    int p() const { return p_; }
    std::vector<Rat> const & coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    CycFieldElem zero() const { return CycFieldElem(p_, Rat()); }
    CycFieldElem one() const { return CycFieldElem(p_, Rat(1)); }
    CycFieldElem from_integer(Integer const & n) const { return CycFieldElem(p_, Rat(n)); }

    /* Automorphism zeta -> zeta^a, gcd(a, p) = 1. */
    CycFieldElem galois(long a) const;
    /* Complex conjugation zeta -> zeta^(p-1). */
    CycFieldElem conj() const { return galois(p_ - 1); }
    CycFieldElem inverse() const;

    CycFieldElem operator-() const;
    CycFieldElem & operator+=(CycFieldElem const & o);
    CycFieldElem & operator-=(CycFieldElem const & o);
    CycFieldElem & operator*=(CycFieldElem const & o);
    CycFieldElem & operator/=(CycFieldElem const & o) { return *this *= o.inverse(); }

    friend CycFieldElem operator+(CycFieldElem x, CycFieldElem const & y) { return x += y; }
    friend CycFieldElem operator-(CycFieldElem x, CycFieldElem const & y) { return x -= y; }
    friend CycFieldElem operator*(CycFieldElem x, CycFieldElem const & y) { return x *= y; }
    friend CycFieldElem operator/(CycFieldElem x, CycFieldElem const & y) { return x /= y; }
    friend bool operator==(CycFieldElem const & x, CycFieldElem const & y)
    {
        return x.p_ == y.p_ && x.c_ == y.c_;
    }

    std::string to_string() const;
};

CycFieldElem cyc_mul(CycFieldElem const & x, CycFieldElem const & y);

/* Product of the p-1 conjugates. */
Rat cyc_norm(CycFieldElem const & x);

} // namespace fermatinv
