#include "fermatinv/integer.hpp"

#include <algorithm>
#include <mutex>

#include "fermatinv/errors.hpp"

namespace fermatinv {

Integer parse_integer(std::string const & s)
{
    Integer n;
    std::string t = s;
    if (!t.empty() && t[0] == '+')
        t.erase(0, 1);
    if (t.empty() || n.set_str(t, 10) != 0)
        throw input_error("not an integer: '" + s + "'");
    return n;
}

std::string to_string(Integer const & n)
{
    return n.get_str();
}

Integer pow_mod(Integer const & base, Integer const & exp, Integer const & mod)
{
    if (exp < 0)
        throw input_error("pow_mod: negative exponent");
    Integer r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

Integer ipow(Integer const & base, unsigned long exp)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

namespace {

bool miller_rabin_round(Integer const & n, Integer const & a,
                        Integer const & d, unsigned s)
{
    Integer x = pow_mod(a, d, n);
    Integer nm1 = n - 1;
    if (x == 1 || x == nm1)
        return true;
    for (unsigned r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == nm1)
            return true;
    }
    return false;
}

} // namespace

bool is_prime(Integer const & n)
{
    if (n < 2)
        return false;
    static unsigned const small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned q : small) {
        if (n == q)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), q))
            return false;
    }
    Integer d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    for (unsigned q : small)
        if (!miller_rabin_round(n, Integer(q), d, s))
            return false;
    static Integer const deterministic_limit("3317044064679887385961981");
    if (n < deterministic_limit)
        return true;
    for (unsigned q : {43u, 47u, 53u, 59u, 61u, 67u, 71u, 73u, 79u, 83u, 89u, 97u})
        if (!miller_rabin_round(n, Integer(q), d, s))
            return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound)
{
    std::vector<std::uint64_t> out;
    if (bound < 2)
        return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i)
            composite[j] = true;
    }
    return out;
}

namespace {

std::vector<std::uint64_t> const & cached_primes(std::uint64_t bound)
{
    static std::mutex mu;
    static std::vector<std::uint64_t> cache;
    static std::uint64_t cached_bound = 0;
    std::lock_guard lock(mu);
    if (bound > cached_bound) {
        cache = primes_up_to(bound);
        cached_bound = bound;
    }
    return cache;
}

struct TrialResult
{
    Factorization small;
    Integer cofactor;
};

TrialResult trial_divide(Integer n, std::uint64_t bound)
{
    if (n == 0)
        throw input_error("cannot factor zero");
    if (n < 0)
        n = -n;
    TrialResult r;
    auto const & primes = cached_primes(bound);
    for (std::uint64_t q : primes) {
        if (q > bound)
            break;
        if (Integer(q) * q > n)
            break;
        if (!mpz_divisible_ui_p(n.get_mpz_t(), q))
            continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), q);
            ++e;
        }
        r.small.emplace_back(Integer(q), e);
    }
    r.cofactor = n;
    return r;
}

} // namespace

Factorization factor(Integer const & n, std::uint64_t bound)
{
    TrialResult t = trial_divide(n, bound);
    Factorization out = std::move(t.small);
    Integer const & r = t.cofactor;
    if (r == 1)
        return out;
    Integer b(static_cast<unsigned long>(bound));
    if (r < b * b || is_prime(r)) {
        out.emplace_back(r, 1);
    } else if (mpz_perfect_square_p(r.get_mpz_t())) {
        Integer s = sqrt(r);
        if (!is_prime(s))
            throw factorization_incomplete("cofactor " + r.get_str() + " is the square of a composite");
        out.emplace_back(s, 2);
    } else {
        throw factorization_incomplete("composite cofactor " + r.get_str() +
                                       " exceeds trial-division bound " + b.get_str());
    }
    std::sort(out.begin(), out.end());
    return out;
}

SquarefreePart squarefree_part(Integer const & n, std::uint64_t bound)
{
    if (n == 0)
        throw input_error("squarefree_part: zero input");
    TrialResult t = trial_divide(n, bound);
    Integer m = 1;
    Integer d = 1;
    for (auto const & [q, e] : t.small) {
        m *= ipow(q, e / 2);
        if (e % 2)
            d *= q;
    }
    Integer const & r = t.cofactor;
    Integer b(static_cast<unsigned long>(bound));
    if (r == 1 || r < b * b || is_prime(r)) {
        d *= r;
    } else if (mpz_perfect_square_p(r.get_mpz_t())) {
        Integer s = sqrt(r);
        // s has no factor <= bound; composite s would need r >= bound^4
        if (s >= b * b && !is_prime(s))
            throw factorization_incomplete("cannot classify cofactor " + r.get_str());
        m *= s;
    } else if (r < b * b * b) {
        // two prime factors > bound, and not a square: both to the first power
        d *= r;
    } else {
        throw factorization_incomplete("composite cofactor " + r.get_str() +
                                       " exceeds trial-division bound " + b.get_str());
    }
    if (n < 0)
        d = -d;
    return {m, d};
}

int kronecker(Integer const & a, Integer const & n)
{
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

Integer sqrt_mod_prime(Integer const & a0, Integer const & q)
{
    Integer a = a0 % q;
    if (a < 0)
        a += q;
    if (a == 0)
        return 0;
    if (q == 2)
        return a;
    if (kronecker(a, q) != 1)
        throw input_error(a.get_str() + " is not a square modulo " + q.get_str());
    Integer s = q - 1;
    unsigned e = 0;
    while (mpz_even_p(s.get_mpz_t())) {
        s /= 2;
        ++e;
    }
    Integer z = 2;
    while (kronecker(z, q) != -1)
        ++z;
    Integer x = pow_mod(a, (s + 1) / 2, q);
    Integer b = pow_mod(a, s, q);
    Integer g = pow_mod(z, s, q);
    unsigned r = e;
    while (b != 1) {
        unsigned m = 0;
        Integer t = b;
        while (t != 1) {
            t = t * t % q;
            ++m;
        }
        Integer gs = pow_mod(g, Integer(1) << (r - m - 1), q);
        x = x * gs % q;
        g = gs * gs % q;
        b = b * g % q;
        r = m;
    }
    Integer other = q - x;
    return x < other ? x : other;
}

unsigned valuation(Integer n, Integer const & p)
{
    if (n == 0)
        throw input_error("valuation of zero");
    unsigned v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++v;
    }
    return v;
}

} // namespace fermatinv
