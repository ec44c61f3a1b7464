#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fermatinv/curves.hpp"
#include "fermatinv/cycfield.hpp"

namespace fermatinv {

/* Divisor class in Mumford form: U monic, deg V < deg U <= g, U | V^2 - f. */
template <ExactField F>
struct MumfordDivisor
{
    Poly<F> U;
    Poly<F> V;

    static MumfordDivisor identity(F const & any)
    {
        return {Poly<F>::constant(any.one()), Poly<F>(any)};
    }
    /* [P - P_inf] for an affine point P = (x, y). */
    static MumfordDivisor from_point(F const & x, F const & y)
    {
        return {Poly<F>::x_minus(x), Poly<F>::constant(y)};
    }

    bool is_identity() const { return U.is_one(); }
    int weight() const { return U.degree(); }
    friend bool operator==(MumfordDivisor const &, MumfordDivisor const &) = default;
};

/* Mumford validity on the given curve. */
template <ExactField F>
bool is_valid(HyperellipticCurve<F> const & c, MumfordDivisor<F> const & D)
{
    if (D.U.is_zero() || !(D.U.leading() == D.U.field_one()))
        return false;
    if (D.U.degree() > c.genus() || D.V.degree() >= D.U.degree())
        return false;
    return ((D.V * D.V - c.f()) % D.U).is_zero();
}

template <ExactField F>
MumfordDivisor<F> negate(MumfordDivisor<F> const & D)
{
    return {D.U, (-D.V) % D.U};
}

/* Cantor composition followed by reduction to weight <= g. */
template <ExactField F>
MumfordDivisor<F> cantor_add(HyperellipticCurve<F> const & c, MumfordDivisor<F> const & D1,
                             MumfordDivisor<F> const & D2)
{
    Poly<F> const & f = c.f();
    Xgcd<F> e = xgcd(D1.U, D2.U);          // e.s U1 + e.t U2 = d1
    Xgcd<F> h = xgcd(e.g, D1.V + D2.V);    // h.s d1 + h.t (V1 + V2) = d
    Poly<F> const & d = h.g;
    Poly<F> s1 = h.s * e.s;
    Poly<F> s2 = h.s * e.t;
    Poly<F> const & s3 = h.t;

    Poly<F> U = (D1.U * D2.U) / (d * d);
    Poly<F> V = (s1 * D1.U * D2.V + s2 * D2.U * D1.V + s3 * (D1.V * D2.V + f)) / d;
    V = V % U;
    while (U.degree() > c.genus()) {
        Poly<F> Un = (f - V * V) / U;
        V = (-V) % Un;
        U = std::move(Un);
    }
    U = U.monic();
    V = V % U;
    return {std::move(U), std::move(V)};
}

template <ExactField F>
MumfordDivisor<F> scalar_mul(HyperellipticCurve<F> const & c, Integer n, MumfordDivisor<F> D)
{
    if (n < 0) {
        n = -n;
        D = negate(D);
    }
    MumfordDivisor<F> acc = MumfordDivisor<F>::identity(c.field_zero());
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t()))
            acc = cantor_add(c, acc, D);
        n >>= 1;
        if (n > 0)
            D = cantor_add(c, D, D);
    }
    return acc;
}

/* Least n <= bound with nD = 0, by repeated addition. */
template <ExactField F>
std::optional<long> order_of(HyperellipticCurve<F> const & c, MumfordDivisor<F> const & D, long bound)
{
    if (bound < 1)
        throw input_error("order_of bound must be >= 1");
    MumfordDivisor<F> acc = D;
    for (long n = 1; n <= bound; ++n) {
        if (acc.is_identity())
            return n;
        acc = cantor_add(c, acc, D);
    }
    return std::nullopt;
}

template <ExactField F>
struct TwoTorsionBasis
{
    std::vector<F> roots;
    std::vector<MumfordDivisor<F>> points; // D_i = [(t_i, 0) - P_inf]
};

template <ExactField F>
TwoTorsionBasis<F> two_torsion_basis(HyperellipticCurve<F> const & c)
{
    TwoTorsionBasis<F> basis;
    auto roots = field_roots(c.f());
    if (static_cast<int>(roots.size()) != c.f().degree())
        throw roots_not_rational("f does not split over the coefficient field");
    for (auto const & [t, mult] : roots) {
        basis.roots.push_back(t);
        basis.points.push_back(MumfordDivisor<F>::from_point(t, t.zero()));
    }
    return basis;
}

/* Fermat model over Q(zeta_p): pushforward of (u, v) -> (zeta u, v). */
MumfordDivisor<CycFieldElem> cm_action(MumfordDivisor<CycFieldElem> const & D);

/* The order-p point Q = [(0, -1/2) - P_inf] on v^2 = u^p + 1/4. */
template <ExactField F>
MumfordDivisor<F> fermat_torsion_point(F const & any)
{
    return MumfordDivisor<F>::from_point(any.zero(), -(any.one() / any.from_integer(2)));
}

// ---- finite fields

struct FiniteFieldCountOptions
{
    /* Refuse when (field size)^g exceeds this. */
    Integer max_search = 1000000;
};

/*
 * #Pic^0 over a finite field of odd characteristic. Counts Mumford pairs:
 * for each monic U of degree <= g, the number of V mod U with V^2 = f mod U.
 * That count is multiplicative over the irreducible factors P^e of U, equal
 * to 1 + chi(f mod P) for P not dividing f, and to 1 (e = 1) or 0 (e >= 2)
 * for P | f; the sum is read off a truncated product over monic irreducibles.
 */
template <ExactField F>
Integer jacobian_order_finite_field(HyperellipticCurve<F> const & c,
                                    FiniteFieldCountOptions const & opt = {});

/* Direct enumeration of every (U, V) pair; small fields only. */
template <ExactField F>
Integer jacobian_order_brute_force(HyperellipticCurve<F> const & c);

/* Exact order of D given #J, from the factorization of #J. */
template <ExactField F>
Integer order_given_group_order(HyperellipticCurve<F> const & c, MumfordDivisor<F> const & D,
                                Integer const & group_order);

// ---- non-torsion certificates

enum class OrderVerdict
{
    proven_infinite,
    inconclusive,
};

struct ReductionData
{
    Integer q;
    int residue_degree = 1; // 1: F_q, 2: F_{q^2}
    Integer root_of_d;      // residue chosen for sqrt(d) (split case)
    Integer jacobian_order;
    Integer point_order;
};

struct NonTorsionCertificate
{
    std::string point;
    ReductionData first;
    ReductionData second;
    OrderVerdict verdict = OrderVerdict::inconclusive;
};

std::string to_string(OrderVerdict v);

/*
 * True when no torsion order m is compatible with reduction orders n1, n2 at
 * distinct good primes q1, q2: for every prime l outside {q1, q2} the l-parts
 * of n1 and n2 must agree, and the q1-part of n2 must be at least that of n1
 * (resp. q2, n1, n2), because reduction is injective on prime-to-q torsion.
 */
bool orders_incompatible(Integer const & q1, Integer const & n1, Integer const & q2, Integer const & n2);

/* D on a curve over Q(sqrt d) with integral coefficients. */
NonTorsionCertificate certify_infinite_order(HyperellipticCurve<QuadFieldElem> const & c,
                                             MumfordDivisor<QuadFieldElem> const & D,
                                             Integer const & q1, Integer const & q2,
                                             FiniteFieldCountOptions const & opt = {});
NonTorsionCertificate certify_infinite_order(HyperellipticCurve<Rat> const & c,
                                             MumfordDivisor<Rat> const & D,
                                             Integer const & q1, Integer const & q2,
                                             FiniteFieldCountOptions const & opt = {});

/* Reduction data at one prime above q: F_q with the least root of d when q
 * splits, F_{q^2} when q is inert. */
ReductionData reduce_at_prime(HyperellipticCurve<QuadFieldElem> const & c, MumfordDivisor<QuadFieldElem> const & D,
                              Integer const & q, FiniteFieldCountOptions const & opt = {});

/* Reduction of a Q(sqrt d)-divisor modulo a split prime q, sending sqrt d
 * to the residue `root` (root^2 = d mod q). */
HyperellipticCurve<ModInt> reduce_curve(HyperellipticCurve<QuadFieldElem> const & c, Integer const & q,
                                        Integer const & root);
MumfordDivisor<ModInt> reduce_divisor(MumfordDivisor<QuadFieldElem> const & D, Integer const & q,
                                      Integer const & root);
ModInt reduce_rat(Rat const & r, std::int64_t q);

} // namespace fermatinv

#include "fermatinv/jacobian_impl.hpp"
