#pragma once

#include <string>

#include "fermatinv/rational.hpp"

namespace fermatinv {

/* a + b sqrt(d) in Q(sqrt d), d squarefree and != 1. */
class QuadFieldElem
{
    Integer d_ = -1;
    Rat a_;
    Rat b_;

    void check_same(QuadFieldElem const & o) const;

  public:
    QuadFieldElem() = default;
    QuadFieldElem(Integer d, Rat a, Rat b = Rat());

    static QuadFieldElem sqrt_d(Integer const & d) { return {d, Rat(), Rat(1)}; }
    /* Integral basis element (d + sqrt d)/2 for d = 1 mod 4, else sqrt d.
     * Matches omega = (D + sqrt D)/2 for the field discriminant D. */
    static QuadFieldElem omega(Integer const & d);

    Integer const & d() const { return d_; }
    Rat const & a() const { return a_; }
    Rat const & b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }
    QuadFieldElem zero() const { return {d_, Rat(), Rat()}; }
    QuadFieldElem one() const { return {d_, Rat(1), Rat()}; }
    QuadFieldElem from_integer(Integer const & n) const { return {d_, Rat(n), Rat()}; }
    QuadFieldElem from_rat(Rat const & r) const { return {d_, r, Rat()}; }

    QuadFieldElem conj() const { return {d_, a_, -b_}; }
    Rat norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }
    Rat trace() const { return a_ + a_; }
    QuadFieldElem inverse() const;

    QuadFieldElem operator-() const { return {d_, -a_, -b_}; }
    QuadFieldElem & operator+=(QuadFieldElem const & o);
    QuadFieldElem & operator-=(QuadFieldElem const & o);
    QuadFieldElem & operator*=(QuadFieldElem const & o);
    QuadFieldElem & operator/=(QuadFieldElem const & o) { return *this *= o.inverse(); }

    friend QuadFieldElem operator+(QuadFieldElem x, QuadFieldElem const & y) { return x += y; }
    friend QuadFieldElem operator-(QuadFieldElem x, QuadFieldElem const & y) { return x -= y; }
    friend QuadFieldElem operator*(QuadFieldElem x, QuadFieldElem const & y) { return x *= y; }
    friend QuadFieldElem operator/(QuadFieldElem x, QuadFieldElem const & y) { return x /= y; }
    friend bool operator==(QuadFieldElem const & x, QuadFieldElem const & y)
    {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    /* True iff the element lies in the maximal order of Q(sqrt d). */
    bool is_integral() const;

    /* "a+b*sqrt(d)" with exact rational a, b. */
    std::string to_string() const;
};

struct NormTrace
{
    Rat norm;
    Rat trace;
};

NormTrace quad_norm_trace(QuadFieldElem const & x);

} // namespace fermatinv
