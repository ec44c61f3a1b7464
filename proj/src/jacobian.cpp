#include "fermatinv/jacobian.hpp"

#include <map>

namespace fermatinv {

MumfordDivisor<CycFieldElem> cm_action(MumfordDivisor<CycFieldElem> const & D)
{
    if (D.U.is_zero())
        throw input_error("cm_action: malformed divisor");
    int p = D.U.field_zero().p();
    int n = D.U.degree();
    // U(X) -> zeta^n U(X/zeta): coefficient of X^i picks up zeta^(n-i)
    Poly<CycFieldElem> U = D.U.map_coeffs(
        [&](CycFieldElem const & a, std::size_t i) { return a * CycFieldElem::zeta_pow(p, n - static_cast<long>(i)); });
    Poly<CycFieldElem> V = D.V.map_coeffs(
        [&](CycFieldElem const & a, std::size_t i) { return a * CycFieldElem::zeta_pow(p, -static_cast<long>(i)); });
    return {std::move(U), std::move(V)};
}

std::string to_string(OrderVerdict v)
{
    return v == OrderVerdict::proven_infinite ? "proven" : "inconclusive";
}

bool orders_incompatible(Integer const & q1, Integer const & n1, Integer const & q2, Integer const & n2)
{
    if (q1 == q2)
        throw input_error("certificate primes must be distinct");
    std::map<Integer, std::pair<unsigned, unsigned>> vals;
    for (auto const & [l, e] : factor(n1))
        vals[l].first = e;
    for (auto const & [l, e] : factor(n2))
        vals[l].second = e;
    for (auto const & [l, v] : vals) {
        auto [v1, v2] = v;
        if (l == q1) {
            if (v2 < v1)
                return true;
        } else if (l == q2) {
            if (v1 < v2)
                return true;
        } else if (v1 != v2) {
            return true;
        }
    }
    return false;
}

ModInt reduce_rat(Rat const & r, std::int64_t q)
{
    Integer Q(static_cast<long>(q));
    if (mpz_divisible_p(r.den().get_mpz_t(), Q.get_mpz_t()))
        throw bad_reduction("denominator of " + r.to_string() + " divisible by " + Q.get_str());
    return ModInt(r.num(), q) / ModInt(r.den(), q);
}

namespace {

std::int64_t small_prime(Integer const & q)
{
    if (q < 3 || q > Integer(1L << 30) || !is_prime(q))
        throw input_error("reduction prime must be an odd prime below 2^30, got " + q.get_str());
    return q.get_si();
}

template <ExactField To, typename Map>
Poly<To> map_poly(Poly<QuadFieldElem> const & P, To const & z, Map m)
{
    std::vector<To> c;
    for (auto const & a : P.coeffs())
        c.push_back(m(a));
    return Poly<To>(z, std::move(c));
}

template <ExactField To>
HyperellipticCurve<To> checked_curve(Poly<To> f, Integer const & q, int expected_degree)
{
    if (f.degree() != expected_degree)
        throw bad_reduction("leading coefficient of f vanishes mod " + q.get_str());
    try {
        return HyperellipticCurve<To>(std::move(f));
    } catch (input_error const &) {
        throw bad_reduction("f has a repeated root mod " + q.get_str());
    }
}

Fq2Elem reduce_to_fq2(QuadFieldElem const & a, std::int64_t q)
{
    ModInt d(a.d(), q);
    return {q, d.residue(), reduce_rat(a.a(), q).residue(), reduce_rat(a.b(), q).residue()};
}

template <ExactField Fld>
ReductionData reduction_data(HyperellipticCurve<Fld> const & c, MumfordDivisor<Fld> const & D,
                             Integer const & q, int degree, FiniteFieldCountOptions const & opt)
{
    if (!is_valid(c, D))
        throw bad_reduction("reduced divisor is not a valid Mumford pair mod " + q.get_str());
    ReductionData r;
    r.q = q;
    r.residue_degree = degree;
    r.jacobian_order = jacobian_order_finite_field(c, opt);
    r.point_order = order_given_group_order(c, D, r.jacobian_order);
    return r;
}

} // namespace

ReductionData reduce_at_prime(HyperellipticCurve<QuadFieldElem> const & c, MumfordDivisor<QuadFieldElem> const & D,
                              Integer const & q, FiniteFieldCountOptions const & opt)
{
    std::int64_t qs = small_prime(q);
    Integer const d = c.field_zero().d();
    Integer disc = d % 4 == 1 || d % 4 == -3 ? d : 4 * d;
    int k = kronecker(disc, q);
    if (k == 0)
        throw ramified_prime(q.get_str() + " ramifies in Q(sqrt(" + d.get_str() + "))");
    if (k == 1) {
        Integer root = sqrt_mod_prime(d, q);
        auto cr = reduce_curve(c, q, root);
        auto Dr = reduce_divisor(D, q, root);
        ReductionData r = reduction_data(cr, Dr, q, 1, opt);
        r.root_of_d = root;
        return r;
    }
    Fq2Elem z = reduce_to_fq2(c.field_zero(), qs);
    auto m = [&](QuadFieldElem const & a) { return reduce_to_fq2(a, qs); };
    auto cr = checked_curve(map_poly(c.f(), z, m), q, c.f().degree());
    MumfordDivisor<Fq2Elem> Dr{map_poly(D.U, z, m), map_poly(D.V, z, m)};
    return reduction_data(cr, Dr, q, 2, opt);
}

HyperellipticCurve<ModInt> reduce_curve(HyperellipticCurve<QuadFieldElem> const & c, Integer const & q,
                                        Integer const & root)
{
    std::int64_t qs = small_prime(q);
    ModInt z(0, qs);
    ModInt s(root, qs);
    if (s * s != ModInt(c.field_zero().d(), qs))
        throw input_error("residue is not a square root of d mod q");
    auto m = [&](QuadFieldElem const & a) { return reduce_rat(a.a(), qs) + reduce_rat(a.b(), qs) * s; };
    return checked_curve(map_poly(c.f(), z, m), q, c.f().degree());
}

MumfordDivisor<ModInt> reduce_divisor(MumfordDivisor<QuadFieldElem> const & D, Integer const & q,
                                      Integer const & root)
{
    std::int64_t qs = small_prime(q);
    ModInt z(0, qs);
    ModInt s(root, qs);
    auto m = [&](QuadFieldElem const & a) { return reduce_rat(a.a(), qs) + reduce_rat(a.b(), qs) * s; };
    return {map_poly(D.U, z, m), map_poly(D.V, z, m)};
}

NonTorsionCertificate certify_infinite_order(HyperellipticCurve<QuadFieldElem> const & c,
                                             MumfordDivisor<QuadFieldElem> const & D,
                                             Integer const & q1, Integer const & q2,
                                             FiniteFieldCountOptions const & opt)
{
    if (q1 == q2)
        throw input_error("certificate primes must be distinct");
    NonTorsionCertificate cert;
    cert.point = "(" + D.U.to_string() + ", " + D.V.to_string() + ")";
    cert.first = reduce_at_prime(c, D, q1, opt);
    cert.second = reduce_at_prime(c, D, q2, opt);
    cert.verdict = orders_incompatible(q1, cert.first.point_order, q2, cert.second.point_order)
                       ? OrderVerdict::proven_infinite
                       : OrderVerdict::inconclusive;
    return cert;
}

NonTorsionCertificate certify_infinite_order(HyperellipticCurve<Rat> const & c, MumfordDivisor<Rat> const & D,
                                             Integer const & q1, Integer const & q2,
                                             FiniteFieldCountOptions const & opt)
{
    if (q1 == q2)
        throw input_error("certificate primes must be distinct");
    auto reduce_at = [&](Integer const & q) {
        std::int64_t qs = small_prime(q);
        ModInt z(0, qs);
        auto m = [&](Rat const & a) { return reduce_rat(a, qs); };
        auto mp = [&](Poly<Rat> const & P) {
            std::vector<ModInt> v;
            for (auto const & a : P.coeffs())
                v.push_back(m(a));
            return Poly<ModInt>(z, std::move(v));
        };
        auto cr = checked_curve(mp(c.f()), q, c.f().degree());
        MumfordDivisor<ModInt> Dr{mp(D.U), mp(D.V)};
        return reduction_data(cr, Dr, q, 1, opt);
    };
    NonTorsionCertificate cert;
    cert.point = "(" + D.U.to_string() + ", " + D.V.to_string() + ")";
    cert.first = reduce_at(q1);
    cert.second = reduce_at(q2);
    cert.verdict = orders_incompatible(q1, cert.first.point_order, q2, cert.second.point_order)
                       ? OrderVerdict::proven_infinite
                       : OrderVerdict::inconclusive;
    return cert;
}

} // namespace fermatinv
