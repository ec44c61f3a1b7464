#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace fermatinv {

using Integer = mpz_class;

inline constexpr std::uint64_t default_factor_bound = 1000000;

Integer parse_integer(std::string const & s);
std::string to_string(Integer const & n);

Integer pow_mod(Integer const & base, Integer const & exp, Integer const & mod);
Integer ipow(Integer const & base, unsigned long exp);

/* Miller-Rabin with the first thirteen prime bases; deterministic below
 * 3.3e24. Larger inputs get extra bases plus GMP's BPSW test. */
bool is_prime(Integer const & n);

/* All primes <= bound, via a sieve of Eratosthenes. */
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

using Factorization = std::vector<std::pair<Integer, unsigned>>;

/* Full factorization of |n| by trial division to `bound` and a primality
 * test on the cofactor. Throws factorization_incomplete otherwise. */
Factorization factor(Integer const & n,
                     std::uint64_t bound = default_factor_bound);

struct SquarefreePart
{
    Integer m; // positive
    Integer d; // squarefree, sign of n
};

/* n = m^2 d. Cofactors left after trial division are classified as
 * prime, prime square, or (below bound^3) a product of two distinct primes;
 * anything else is factorization_incomplete. */
SquarefreePart squarefree_part(Integer const & n,
                               std::uint64_t bound = default_factor_bound);

/* Kronecker symbol (a/n). */
int kronecker(Integer const & a, Integer const & n);

/* Square root of a modulo an odd prime q (Tonelli-Shanks); the smaller
 * of the two roots in [0, q). Throws input_error if a is a non-residue. */
Integer sqrt_mod_prime(Integer const & a, Integer const & q);

/* Valuation v_p(n); n != 0. */
unsigned valuation(Integer n, Integer const & p);

/* Order of g given an exponent multiple `n` and a power function. */
template <typename Elem, typename Pow, typename IsOne>
Integer order_from_multiple(Elem const & g, Integer n,
                            Factorization const & n_factors, Pow pow,
                            IsOne is_one)
{
    for (auto const & [ell, e] : n_factors) {
        for (unsigned i = 0; i < e; ++i) {
            Integer trial = n / ell;
            if (!is_one(pow(g, trial)))
                break;
            n = trial;
        }
    }
    return n;
}

} // namespace fermatinv
