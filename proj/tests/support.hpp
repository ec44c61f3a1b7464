#pragma once

// Shared helpers for the test binaries: random field elements, random
// curves with known points, and random divisor classes.

#include <initializer_list>
#include <random>
#include <vector>

#include "fermatinv/finite_field.hpp"
#include "fermatinv/jacobian.hpp"

namespace testing_support {

using namespace fermatinv;

using Rng = std::mt19937_64;

inline long small(Rng & rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rat random_elem(Rat const &, Rng & rng)
{
    return Rat(Integer(small(rng, -9, 9)), Integer(small(rng, 1, 4)));
}

inline ModInt random_elem(ModInt const & z, Rng & rng)
{
    return ModInt(small(rng, 0, z.modulus() - 1), z.modulus());
}

inline Fq2Elem random_elem(Fq2Elem const & z, Rng & rng)
{
    Integer q = field_size(z);
    return field_element(z, static_cast<std::uint64_t>(small(rng, 0, q.get_si() - 1)));
}

inline QuadFieldElem random_elem(QuadFieldElem const & z, Rng & rng)
{
    return QuadFieldElem(z.d(), random_elem(Rat(), rng), random_elem(Rat(), rng));
}

inline CycFieldElem random_elem(CycFieldElem const & z, Rng & rng)
{
    std::vector<Rat> c;
    for (int i = 0; i < z.p() - 1; ++i)
        c.push_back(small(rng, 0, 2) == 0 ? Rat(small(rng, -3, 3)) : Rat());
    return CycFieldElem(z.p(), std::move(c));
}

template <ExactField F>
F random_nonzero(F const & z, Rng & rng)
{
    for (;;) {
        F x = random_elem(z, rng);
        if (!x.is_zero())
            return x;
    }
}

inline std::int64_t field_characteristic_or_zero(Rat const &) { return 0; }
inline std::int64_t field_characteristic_or_zero(QuadFieldElem const &) { return 0; }
inline std::int64_t field_characteristic_or_zero(CycFieldElem const &) { return 0; }
inline std::int64_t field_characteristic_or_zero(ModInt const & z) { return field_characteristic(z); }
inline std::int64_t field_characteristic_or_zero(Fq2Elem const & z) { return field_characteristic(z); }

/* Genus-2 curve y^2 = f through 5 chosen points (a_i, b_i). */
template <ExactField F>
struct FuzzCurve
{
    HyperellipticCurve<F> curve;
    std::vector<F> xs;
    std::vector<F> ys;
};

template <ExactField F>
FuzzCurve<F> random_curve(F const & z, Rng & rng, int npoints = 5)
{
    for (;;) {
        std::vector<F> xs, ys;
        while (static_cast<int>(xs.size()) < npoints) {
            F a = random_elem(z, rng);
            bool dup = false;
            for (auto const & x : xs)
                dup = dup || x == a;
            if (!dup) {
                xs.push_back(a);
                ys.push_back(random_elem(z, rng));
            }
        }
        // f = prod (X - a_i) + Lagrange interpolant of b_i^2
        Poly<F> prod = Poly<F>::constant(z.one());
        for (auto const & a : xs)
            prod = prod * Poly<F>::x_minus(a);
        Poly<F> interp(z);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            Poly<F> li = Poly<F>::constant(ys[i] * ys[i]);
            for (std::size_t j = 0; j < xs.size(); ++j)
                if (j != i)
                    li = li * Poly<F>::x_minus(xs[j]) * Poly<F>::constant((xs[i] - xs[j]).inverse());
            interp = interp + li;
        }
        Poly<F> f = prod + interp;
        if (field_characteristic_or_zero(z) == 2 || !is_squarefree(f))
            continue;
        return {HyperellipticCurve<F>(f), xs, ys};
    }
}

/* Random sum of +-[P_i - P_inf] over the chosen points. */
template <ExactField F>
MumfordDivisor<F> random_divisor(FuzzCurve<F> const & fc, Rng & rng)
{
    F z = fc.curve.field_zero();
    auto D = MumfordDivisor<F>::identity(z);
    for (std::size_t i = 0; i < fc.xs.size(); ++i) {
        long e = small(rng, -1, 1);
        if (e == 0)
            continue;
        F y = small(rng, 0, 1) ? fc.ys[i] : -fc.ys[i];
        auto P = MumfordDivisor<F>::from_point(fc.xs[i], y);
        D = cantor_add(fc.curve, D, e > 0 ? P : negate(P));
    }
    return D;
}

/* Associativity, commutativity, identity, inverse and validity on one triple. */
template <ExactField F>
bool group_axioms_hold(HyperellipticCurve<F> const & c, MumfordDivisor<F> const & a, MumfordDivisor<F> const & b,
                       MumfordDivisor<F> const & d)
{
    auto id = MumfordDivisor<F>::identity(c.field_zero());
    auto ab = cantor_add(c, a, b);
    auto bd = cantor_add(c, b, d);
    auto lhs = cantor_add(c, ab, d);
    auto rhs = cantor_add(c, a, bd);
    bool ok = lhs == rhs;
    ok = ok && ab == cantor_add(c, b, a);
    ok = ok && cantor_add(c, a, id) == a;
    ok = ok && cantor_add(c, a, negate(a)).is_identity();
    for (MumfordDivisor<F> const * x : std::initializer_list<MumfordDivisor<F> const *>{&a, &b, &d, &ab, &bd, &lhs})
        ok = ok && is_valid(c, *x);
    return ok;
}

} // namespace testing_support
