#include "fermatinv/padic.hpp"

#include <optional>

#include "fermatinv/errors.hpp"

namespace fermatinv {

Integer IntPoly::operator()(Integer const & x) const
{
    Integer r = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        r = r * x + *it;
    return r;
}

IntPoly IntPoly::derivative() const
{
    IntPoly d;
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        d.coeffs.push_back(coeffs[i] * static_cast<unsigned long>(i));
    return d;
}

int IntPoly::degree() const
{
    int d = static_cast<int>(coeffs.size()) - 1;
    while (d >= 0 && coeffs[static_cast<std::size_t>(d)] == 0)
        --d;
    return d;
}

PadicApprox::PadicApprox(Integer p_, unsigned precision_, Integer const & v)
    : p(std::move(p_)), precision(precision_)
{
    if (!is_prime(p))
        throw input_error("p-adic approximation needs a prime, got " + p.get_str());
    if (precision < 1)
        throw input_error("p-adic precision must be >= 1");
    Integer m = modulus();
    value = v % m;
    if (value < 0)
        value += m;
}

Integer PadicApprox::modulus() const
{
    return ipow(p, precision);
}

namespace {

/* v_p(n), with "infinity" for n == 0 capped at cap. */
unsigned val_capped(Integer const & n, Integer const & p, unsigned cap)
{
    if (n == 0)
        return cap;
    unsigned v = valuation(n, p);
    return v < cap ? v : cap;
}

struct Seed
{
    Integer x;
    unsigned k;
};

std::optional<Seed> hypothesis_holds(IntPoly const & f, IntPoly const & df,
                                     Integer const & x, Integer const & p)
{
    Integer fx = f(x);
    Integer dfx = df(x);
    if (dfx == 0)
        return std::nullopt;
    unsigned k = valuation(dfx, p);
    if (fx != 0 && valuation(fx, p) < 2 * k + 1)
        return std::nullopt;
    return Seed{x, k};
}

} // namespace

PadicApprox hensel_lift(IntPoly const & f, PadicApprox const & x0, unsigned target_precision)
{
    if (target_precision < x0.precision)
        throw input_error("target precision below starting precision");
    if (f.degree() < 1)
        throw input_error("hensel_lift needs a non-constant polynomial");
    Integer const & p = x0.p;
    IntPoly df = f.derivative();

    std::optional<Seed> seed = hypothesis_holds(f, df, x0.value, p);
    if (!seed) {
        // search the coset x0 + p^N Z modulo p^(2k+1), k taken at x0; each
        // candidate is rechecked with its own k
        Integer dfx = df(x0.value);
        if (dfx != 0) {
            unsigned k = valuation(dfx, p);
            Integer step = x0.modulus();
            Integer count = 2 * k + 1 > x0.precision ? ipow(p, 2 * k + 1 - x0.precision) : Integer(1);
            if (count > 1000000)
                throw computation_error("hensel_lift: coset search over " + count.get_str() + " residues");
            for (Integer j = 0; j < count && !seed; ++j)
                seed = hypothesis_holds(f, df, x0.value + j * step, p);
        }
    }
    if (!seed)
        throw hensel_hypothesis_fails("no lift of " + x0.value.get_str() + " mod " + p.get_str() + "^" +
                                      std::to_string(x0.precision) + " has v_p(f) >= 2 v_p(f') + 1");

    unsigned k = seed->k;
    Integer x = seed->x;
    Integer target_mod = ipow(p, target_precision);
    // work modulo p^(target + k) so the quotient f/f' stays exact to target
    Integer work_mod = ipow(p, target_precision + k + 1);
    Integer pk = ipow(p, k);
    x %= work_mod;
    if (x < 0)
        x += work_mod;
    for (int iter = 0; iter < 256; ++iter) {
        Integer fx = f(x) % work_mod;
        if (val_capped(fx, p, target_precision) >= target_precision)
            break;
        Integer dfx = df(x);
        // f(x)/f'(x) = (f(x)/p^k) * (f'(x)/p^k)^{-1}; both divisions are exact
        Integer num = fx / pk;
        Integer unit = dfx / pk;
        Integer inv;
        Integer m = work_mod;
        if (mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), m.get_mpz_t()) == 0)
            throw computation_error("hensel_lift: derivative lost its valuation");
        x = (x - num * inv) % work_mod;
        if (x < 0)
            x += work_mod;
    }
    Integer y = x % target_mod;
    if (f(y) % target_mod != 0)
        throw computation_error("hensel_lift: Newton iteration did not converge");
    return PadicApprox(p, target_precision, y);
}

bool is_wieferich_pair(Integer const & l, Integer const & p)
{
    if (!is_prime(l) || !is_prime(p))
        throw input_error("is_wieferich_pair needs primes, got l=" + l.get_str() + ", p=" + p.get_str());
    if (l == p)
        throw input_error("is_wieferich_pair needs l != p");
    return pow_mod(l, p - 1, p * p) == 1;
}

std::vector<std::uint64_t> wieferich_scan(std::uint64_t l, std::uint64_t bound)
{
    if (bound < 3)
        throw input_error("wieferich_scan bound must be >= 3");
    if (!is_prime(Integer(static_cast<unsigned long>(l))))
        throw input_error("wieferich_scan base must be prime");
    std::vector<std::uint64_t> out;
    for (std::uint64_t p : primes_up_to(bound)) {
        if (p == l)
            continue;
        unsigned __int128 m = static_cast<unsigned __int128>(p) * p;
        unsigned __int128 base = l % m, r = 1;
        std::uint64_t e = p - 1;
        while (e) {
            if (e & 1)
                r = r * base % m;
            base = base * base % m;
            e >>= 1;
        }
        if (r == 1)
            out.push_back(p);
    }
    return out;
}

RamificationReport ramification_report(Integer const & p, Integer const & l)
{
    if (p < 5 || !is_prime(p))
        throw input_error("ramification_report needs a prime p >= 5");
    RamificationReport r;
    r.p = p;
    r.l = l;
    r.wieferich = is_wieferich_pair(l, p);
    r.p_unramified_in_N = r.wieferich;
    r.shape_in_L = r.wieferich ? ShapeInL::split_shape : ShapeInL::totally_ramified;
    r.num_primes_above_p_in_N = r.wieferich ? p : Integer(1);
    return r;
}

GoodReductionField good_reduction_field(Integer const & p)
{
    if (p < 5 || !is_prime(p))
        throw input_error("good_reduction_field needs a prime p >= 5");
    return is_wieferich_pair(2, p) ? GoodReductionField::K : GoodReductionField::K_adjoin_2_root_p;
}

std::string to_string(ShapeInL s)
{
    return s == ShapeInL::split_shape ? "split_shape" : "totally_ramified";
}

std::string to_string(GoodReductionField f)
{
    return f == GoodReductionField::K ? "K" : "K(2^(1/p))";
}

} // namespace fermatinv
