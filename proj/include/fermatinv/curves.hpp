#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fermatinv/finite_field.hpp"
#include "fermatinv/poly.hpp"
#include "fermatinv/quadfield.hpp"
#include "fermatinv/rational.hpp"

namespace fermatinv {

/* Affine point, or the unique point at infinity. */
template <ExactField F>
struct AffinePoint
{
    bool at_infinity = false;
    F x;
    F y;

    static AffinePoint infinity(F const & any) { return {true, any.zero(), any.zero()}; }
    friend bool operator==(AffinePoint const &, AffinePoint const &) = default;

    std::string to_string() const
    {
        return at_infinity ? "P_inf" : "(" + x.to_string() + ", " + y.to_string() + ")";
    }
};

/* Imaginary hyperelliptic curve y^2 = f(x), deg f = 2g+1, f squarefree. */
template <ExactField F>
class HyperellipticCurve
{
    Poly<F> f_;
    int genus_;

  public:
    explicit HyperellipticCurve(Poly<F> f) : f_(std::move(f)), genus_(0)
    {
        int n = f_.degree();
        if (n < 3 || n % 2 == 0)
            throw input_error("hyperelliptic model needs odd degree >= 3, got " + std::to_string(n));
        if (!is_squarefree(f_))
            throw input_error("f is not squarefree: gcd(f, f') != 1");
        genus_ = (n - 1) / 2;
    }

    Poly<F> const & f() const { return f_; }
    int genus() const { return genus_; }
    F field_zero() const { return f_.field_zero(); }

    bool contains(F const & x, F const & y) const { return y * y == f_(x); }
    bool contains(AffinePoint<F> const & pt) const { return pt.at_infinity || contains(pt.x, pt.y); }
};

/* Formal sum of points with integer multiplicities. */
template <ExactField F>
struct FormalDivisor
{
    std::vector<std::pair<AffinePoint<F>, long>> terms;

    long degree() const
    {
        long s = 0;
        for (auto const & t : terms)
            s += t.second;
        return s;
    }
    long multiplicity(AffinePoint<F> const & pt) const
    {
        for (auto const & t : terms)
            if (t.first == pt)
                return t.second;
        return 0;
    }
};

/*
 * The curve y^p = x(1-x) and its hyperelliptic model v^2 = u^p + 1/4 via
 * (u, v) = (-y, x - 1/2). The cleared model w^2 = 4u^p + 1 (w = 2v) has
 * integral coefficients and is what reductions modulo primes use.
 */
struct FermatQuotientModel
{
    int p = 5;
    HyperellipticCurve<Rat> hyper;
    HyperellipticCurve<Rat> cleared;

    int genus() const { return hyper.genus(); }
};

FermatQuotientModel fermat_model(int p);

/* Hyperelliptic Fermat model over the field of `any`: v^2 = u^p + 1/4. */
template <ExactField F>
HyperellipticCurve<F> fermat_hyper_over(int p, F const & any)
{
    std::vector<F> c(static_cast<std::size_t>(p + 1), any.zero());
    c[0] = any.one() / any.from_integer(4);
    c[static_cast<std::size_t>(p)] = any.one();
    return HyperellipticCurve<F>(Poly<F>(any, std::move(c)));
}

/* Cleared Fermat model over the field of `any`: w^2 = 4u^p + 1. */
template <ExactField F>
HyperellipticCurve<F> fermat_cleared_over(int p, F const & any)
{
    std::vector<F> c(static_cast<std::size_t>(p + 1), any.zero());
    c[0] = any.one();
    c[static_cast<std::size_t>(p)] = any.from_integer(4);
    return HyperellipticCurve<F>(Poly<F>(any, std::move(c)));
}

/* Points on the plane model y^p = x(1 - x). */
template <ExactField F>
bool on_fermat_original(int p, F const & x, F const & y)
{
    F yp = y.one();
    for (int i = 0; i < p; ++i)
        yp = yp * y;
    return yp == x * (x.one() - x);
}

template <ExactField F>
AffinePoint<F> to_hyper(int p, AffinePoint<F> const & pt)
{
    if (pt.at_infinity)
        return pt;
    if (!on_fermat_original(p, pt.x, pt.y))
        throw input_error("point " + pt.to_string() + " is not on y^p = x(1-x)");
    F half = pt.x.one() / pt.x.from_integer(2);
    return {false, -pt.y, pt.x - half};
}

template <ExactField F>
AffinePoint<F> from_hyper(int p, AffinePoint<F> const & pt)
{
    if (pt.at_infinity)
        return pt;
    F half = pt.x.one() / pt.x.from_integer(2);
    AffinePoint<F> out{false, pt.y + half, -pt.x};
    if (!on_fermat_original(p, out.x, out.y))
        throw input_error("point " + pt.to_string() + " is not on v^2 = u^p + 1/4");
    return out;
}

/* Roots of f lying in the coefficient field, with multiplicities. */
std::vector<std::pair<Rat, int>> field_roots(Poly<Rat> const & f);
std::vector<std::pair<ModInt, int>> field_roots(Poly<ModInt> const & f);
std::vector<std::pair<Fq2Elem, int>> field_roots(Poly<Fq2Elem> const & f);

std::optional<Rat> field_sqrt(Rat const & x);
std::optional<QuadFieldElem> field_sqrt(QuadFieldElem const & x);

/* All (t, 0) with t in the field and f(t) = 0, then P_inf. */
template <ExactField F>
std::vector<AffinePoint<F>> weierstrass_points(HyperellipticCurve<F> const & c)
{
    std::vector<AffinePoint<F>> out;
    for (auto const & [t, mult] : field_roots(c.f()))
        out.push_back({false, t, t.zero()});
    out.push_back(AffinePoint<F>::infinity(c.field_zero()));
    return out;
}

/* div(x - c): 2(c,0) - 2P_inf at a Weierstrass root, else (c,y) + (c,-y) - 2P_inf. */
template <ExactField F>
FormalDivisor<F> divisor_of_x_minus_c(HyperellipticCurve<F> const & curve, F const & c)
{
    FormalDivisor<F> div;
    F fc = curve.f()(c);
    if (fc.is_zero()) {
        div.terms.push_back({{false, c, c.zero()}, 2});
    } else {
        auto y = field_sqrt(fc);
        if (!y)
            throw point_not_rational("f(" + c.to_string() + ") is not a square in the field");
        div.terms.push_back({{false, c, *y}, 1});
        div.terms.push_back({{false, c, -*y}, 1});
    }
    div.terms.push_back({AffinePoint<F>::infinity(c), -2});
    return div;
}

/*
 * div(y - c): zeros at the affine points (t, c) with f(t) = c^2, counted
 * with the multiplicity of t as a root of f - c^2; pole of order 2g+1 at
 * P_inf. Requires c != 0 and all such t to lie in the field.
 */
template <ExactField F>
FormalDivisor<F> divisor_of_y_minus_c(HyperellipticCurve<F> const & curve, F const & c)
{
    if (c.is_zero())
        throw input_error("divisor_of_y_minus_c needs c != 0");
    Poly<F> g = curve.f() - Poly<F>::constant(c * c);
    FormalDivisor<F> div;
    int total = 0;
    for (auto const & [t, mult] : field_roots(g)) {
        div.terms.push_back({{false, t, c}, mult});
        total += mult;
    }
    if (total != g.degree())
        throw point_not_rational("zeros of y - c are not all rational");
    div.terms.push_back({AffinePoint<F>::infinity(c), -g.degree()});
    return div;
}

/* div(x) on y^p = x(1-x), returned in original-model coordinates: p P0 - p P_inf. */
FormalDivisor<Rat> fermat_divisor_of_x(FermatQuotientModel const & model);

} // namespace fermatinv
