#include "fermatinv/cycunits.hpp"

#include <set>

#include "fermatinv/errors.hpp"
#include "fermatinv/modint.hpp"

namespace fermatinv {

namespace {

void check_p(int p, int min)
{
    if (p < min || !is_prime(Integer(p)))
        throw input_error("p must be a prime >= " + std::to_string(min) + ", got " + std::to_string(p));
}

long mod_p(Integer const & x, int p)
{
    Integer r = x % p;
    if (r < 0)
        r += p;
    return r.get_si();
}

CycFieldElem cyc_pow(CycFieldElem base, Integer e)
{
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    CycFieldElem acc = base.one();
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            acc *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return acc;
}

} // namespace

CycFieldElem cyclotomic_xi(int p, int a)
{
    check_p(p, 5);
    if (a < 2 || a > (p - 1) / 2)
        throw input_error("xi_a needs 2 <= a <= (p-1)/2");
    long half = (p + 1) / 2; // inverse of 2 mod p
    long shift = ((1 - a) % p + p) % p * half % p;
    CycFieldElem sum(p, Rat());
    for (int i = 0; i < a; ++i)
        sum += CycFieldElem::zeta_pow(p, i);
    return CycFieldElem::zeta_pow(p, shift) * sum;
}

CyclotomicUnit cyclotomic_unit(int p, std::vector<Integer> expvec)
{
    check_p(p, 5);
    if (expvec.size() != static_cast<std::size_t>((p - 3) / 2))
        throw input_error("exponent vector must have length (p-3)/2");
    CycFieldElem e(p, Rat(1));
    for (std::size_t i = 0; i < expvec.size(); ++i)
        if (expvec[i] != 0)
            e *= cyc_pow(cyclotomic_xi(p, static_cast<int>(i) + 2), expvec[i]);
    return {p, std::move(expvec), std::move(e)};
}

std::vector<CyclotomicUnit> cyclotomic_unit_generators(int p)
{
    check_p(p, 5);
    std::size_t t = static_cast<std::size_t>((p - 3) / 2);
    std::vector<CyclotomicUnit> out;
    for (std::size_t i = 0; i < t; ++i) {
        std::vector<Integer> v(t, Integer(0));
        v[i] = 1;
        CyclotomicUnit u = cyclotomic_unit(p, std::move(v));
        Rat n = cyc_norm(u.element);
        if (!(n == Rat(1) || n == Rat(-1)))
            throw computation_error("xi_" + std::to_string(i + 2) + " is not a unit");
        if (!(u.element.conj() == u.element))
            throw computation_error("xi_" + std::to_string(i + 2) + " is not real");
        out.push_back(std::move(u));
    }
    return out;
}

std::optional<KummerEquivalence> kummer_equivalent(std::vector<Integer> const & alpha,
                                                   std::vector<Integer> const & beta, int p)
{
    check_p(p, 5);
    if (alpha.size() != beta.size())
        throw input_error("exponent vectors of different length");
    for (long k = 1; k < p; ++k) {
        bool ok = true;
        for (std::size_t i = 0; i < alpha.size() && ok; ++i)
            ok = mod_p(beta[i] - k * alpha[i], p) == 0;
        if (!ok)
            continue;
        KummerEquivalence r{k, {}};
        for (std::size_t i = 0; i < alpha.size(); ++i)
            r.gamma.push_back((beta[i] - k * alpha[i]) / p);
        return r;
    }
    return std::nullopt;
}

std::optional<KummerEquivalence> kummer_equivalent(CyclotomicUnit const & alpha, CyclotomicUnit const & beta)
{
    if (alpha.p != beta.p)
        throw input_error("units over different cyclotomic fields");
    return kummer_equivalent(alpha.expvec, beta.expvec, alpha.p);
}

KummerSubextensionCount subextension_count(int p, bool vandiver_assumed)
{
    check_p(p, 5);
    if (!vandiver_assumed)
        throw vandiver_not_assumed("t is only available under the Vandiver assumption");
    int t = (p - 3) / 2;
    Integer P(p);
    return {p, t, (ipow(P, static_cast<unsigned long>(t)) - 1) / (P - 1)};
}

Integer count_kummer_classes(int p, int t)
{
    check_p(p, 5);
    if (t < 1 || ipow(Integer(p), static_cast<unsigned long>(t)) > 1000000)
        throw input_error("exhaustive class count needs 1 <= t and p^t <= 10^6");
    std::uint64_t total = ipow(Integer(p), static_cast<unsigned long>(t)).get_ui();
    auto vec = [&](std::uint64_t idx) {
        std::vector<Integer> v;
        for (int i = 0; i < t; ++i) {
            v.push_back(Integer(static_cast<unsigned long>(idx % p)));
            idx /= p;
        }
        return v;
    };
    std::vector<std::vector<Integer>> reps;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        auto v = vec(idx);
        bool found = false;
        for (auto const & r : reps)
            if (kummer_equivalent(r, v, p)) {
                found = true;
                break;
            }
        if (!found)
            reps.push_back(std::move(v));
    }
    return Integer(static_cast<unsigned long>(reps.size()));
}

std::vector<Rat> bernoulli_numbers_exact(int max_index)
{
    if (max_index < 0 || max_index > 200)
        throw input_error("Bernoulli index must be in [0, 200]");
    std::vector<Rat> B{Rat(1)};
    for (int m = 1; m <= max_index; ++m) {
        Rat s;
        for (int j = 0; j < m; ++j) {
            Integer c;
            mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m + 1), static_cast<unsigned long>(j));
            s += Rat(c) * B[static_cast<std::size_t>(j)];
        }
        B.push_back(-s / Rat(m + 1));
    }
    return B;
}

IrregularityReport irregularity(int p)
{
    check_p(p, 5);
    if (p > 200)
        throw input_error("irregularity test is limited to p <= 200");
    auto B = bernoulli_numbers_exact(p - 3);

    // B_0..B_{p-3} are p-integral, so the recurrence also runs in F_p
    std::vector<ModInt> Bp{ModInt(1, p)};
    for (int m = 1; m <= p - 3; ++m) {
        ModInt s(0, p);
        for (int j = 0; j < m; ++j) {
            Integer c;
            mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m + 1), static_cast<unsigned long>(j));
            s += ModInt(c, p) * Bp[static_cast<std::size_t>(j)];
        }
        Bp.push_back(-s / ModInt(m + 1, p));
    }

    IrregularityReport r{p, false, {}};
    for (int k = 2; k <= p - 3; k += 2) {
        auto const & b = B[static_cast<std::size_t>(k)];
        bool exact = mpz_divisible_ui_p(b.num().get_mpz_t(), static_cast<unsigned long>(p)) != 0;
        bool modular = Bp[static_cast<std::size_t>(k)].is_zero();
        if (exact != modular)
            throw computation_error("Bernoulli cross-check failed at k = " + std::to_string(k));
        if (exact)
            r.witnesses.push_back(k);
    }
    r.irregular = !r.witnesses.empty();
    return r;
}

} // namespace fermatinv
