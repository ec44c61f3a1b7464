#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fermatinv/errors.hpp"
#include "support.hpp"

using namespace fermatinv;
using testing_support::Rng;

namespace {

template <ExactField F>
void check_field_axioms(F const & z, Rng & rng, int rounds)
{
    for (int i = 0; i < rounds; ++i) {
        F a = testing_support::random_elem(z, rng);
        F b = testing_support::random_elem(z, rng);
        F c = testing_support::random_elem(z, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + z.zero() == a);
        CHECK(a * z.one() == a);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == z.one());
            CHECK((b / a) * a == b);
        }
    }
}

bool squarefree_by_trial(Integer n)
{
    if (n < 0)
        n = -n;
    for (Integer q = 2; q * q <= n; ++q)
        if (n % (q * q) == 0)
            return false;
    return true;
}

} // namespace

TEST_CASE("rationals are canonical")
{
    CHECK(Rat(Integer(2), Integer(4)) == Rat(Integer(1), Integer(2)));
    Rat r(Integer(3), Integer(-6));
    CHECK(r.num() == -1);
    CHECK(r.den() == 2);
    CHECK(Rat().num() == 0);
    CHECK(Rat().den() == 1);
    CHECK(Rat::parse("-3/6") == Rat(Integer(-1), Integer(2)));
    CHECK(Rat::parse("7").to_string() == "7");
    CHECK(Rat::parse("10/4").to_string() == "5/2");
    CHECK_THROWS_AS(Rat::parse("1/0"), input_error);
    CHECK_THROWS_AS(Rat::parse("x"), input_error);
}

TEST_CASE("quad_norm_trace examples")
{
    auto a = quad_norm_trace(QuadFieldElem::sqrt_d(-3));
    CHECK(a.norm == Rat(3));
    CHECK(a.trace == Rat(0));
    auto b = quad_norm_trace(QuadFieldElem(-127, Rat(Integer(1), Integer(2)), Rat(Integer(1), Integer(2))));
    CHECK(b.norm == Rat(32));
    CHECK(b.trace == Rat(1));
    auto c = quad_norm_trace(QuadFieldElem(-5, Rat(1)));
    CHECK(c.norm == Rat(1));
    CHECK(c.trace == Rat(2));
}

TEST_CASE("quadratic norm and conjugation properties")
{
    Rng rng(11);
    for (Integer d : {Integer(-127), Integer(-3), Integer(5), Integer(-1)}) {
        QuadFieldElem z(d, Rat());
        check_field_axioms(z, rng, 50);
        for (int i = 0; i < 100; ++i) {
            auto x = testing_support::random_elem(z, rng);
            auto y = testing_support::random_elem(z, rng);
            CHECK(x * x.conj() == z.from_rat(x.norm()));
            CHECK(x.conj().conj() == x);
            CHECK((x * y).norm() == x.norm() * y.norm());
        }
    }
    CHECK_THROWS_AS(QuadFieldElem(-12, Rat(1)), input_error);
    CHECK_THROWS(QuadFieldElem(-3, Rat(1)) + QuadFieldElem(-7, Rat(1)));
}

TEST_CASE("integrality in the maximal order")
{
    CHECK(QuadFieldElem(-127, Rat(Integer(1), Integer(2)), Rat(Integer(1), Integer(2))).is_integral());
    CHECK_FALSE(QuadFieldElem(-127, Rat(Integer(1), Integer(2)), Rat(0)).is_integral());
    CHECK_FALSE(QuadFieldElem(-5, Rat(Integer(1), Integer(2)), Rat(Integer(1), Integer(2))).is_integral());
    CHECK(QuadFieldElem::omega(-127).is_integral());
    CHECK(QuadFieldElem::omega(-5) == QuadFieldElem::sqrt_d(-5));
}

TEST_CASE("cyc_mul examples")
{
    for (int p : {5, 7, 11}) {
        auto zeta = CycFieldElem::zeta_pow(p, 1);
        CHECK(cyc_mul(zeta, CycFieldElem::zeta_pow(p, p - 1)) == CycFieldElem(p, Rat(1)));
        CHECK(CycFieldElem::zeta_pow(p, p) == CycFieldElem(p, Rat(1)));
        CHECK(CycFieldElem::zeta_pow(p, -1) == CycFieldElem::zeta_pow(p, p - 1));
    }
    // prod (1 - zeta^i) = Phi_5(1) = 5
    CycFieldElem prod(5, Rat(1));
    for (int i = 1; i <= 4; ++i)
        prod = cyc_mul(prod, CycFieldElem(5, Rat(1)) - CycFieldElem::zeta_pow(5, i));
    CHECK(prod == CycFieldElem(5, Rat(5)));
    Rng rng(5);
    auto x = testing_support::random_elem(CycFieldElem(7, Rat()), rng);
    CHECK(cyc_mul(x, CycFieldElem(7, Rat(1))) == x);
    CHECK_THROWS(cyc_mul(CycFieldElem(5, Rat(1)), CycFieldElem(7, Rat(1))));
}

TEST_CASE("cyc_norm examples and multiplicativity")
{
    for (int p : {5, 7, 11, 13}) {
        CHECK(cyc_norm(CycFieldElem(p, Rat(1)) - CycFieldElem::zeta_pow(p, 1)) == Rat(p));
        CHECK(cyc_norm(CycFieldElem::zeta_pow(p, 1)) == Rat(1));
        CHECK(cyc_norm(CycFieldElem(p, Rat(2))) == Rat(ipow(2, static_cast<unsigned long>(p - 1))));
    }
    Rng rng(3);
    for (int p : {5, 7}) {
        CycFieldElem z(p, Rat());
        check_field_axioms(z, rng, 30);
        for (int i = 0; i < 30; ++i) {
            auto x = testing_support::random_elem(z, rng);
            auto y = testing_support::random_elem(z, rng);
            CHECK(cyc_norm(x * y) == cyc_norm(x) * cyc_norm(y));
            CHECK(x.conj().conj() == x);
        }
    }
}

TEST_CASE("field axioms over Q, F_101 and F_{q^2}")
{
    Rng rng(7);
    check_field_axioms(Rat(), rng, 100);
    check_field_axioms(ModInt(0, 101), rng, 200);
    check_field_axioms(Fq2Elem(7, 3, 0, 0), rng, 200);
    check_field_axioms(Fq2Elem(101, 2, 0, 0), rng, 200);
    CHECK_THROWS_AS(ModInt(0, 101).inverse(), field_error);
    CHECK_THROWS(ModInt(1, 7) + ModInt(1, 11));
}

TEST_CASE("squarefree_part examples")
{
    auto a = squarefree_part(-12);
    CHECK(a.m == 2);
    CHECK(a.d == -3);
    auto b = squarefree_part(-127);
    CHECK(b.m == 1);
    CHECK(b.d == -127);
    auto c = squarefree_part(1);
    CHECK(c.m == 1);
    CHECK(c.d == 1);
    CHECK_THROWS_AS(squarefree_part(0), input_error);
}

TEST_CASE("squarefree_part property against trial division")
{
    Rng rng(99);
    for (int i = 0; i < 300; ++i) {
        Integer n = testing_support::small(rng, -2000000, 2000000);
        if (n == 0)
            continue;
        auto s = squarefree_part(n);
        CHECK(s.m * s.m * s.d == n);
        CHECK(s.m > 0);
        CHECK(squarefree_by_trial(s.d));
    }
    // cofactors beyond trial division: p^2 and p*q with large primes
    Integer P("1000000007"), Q("1000000009");
    auto s1 = squarefree_part(-3 * P * P, 1000);
    CHECK(s1.m == P);
    CHECK(s1.d == -3);
    Integer P2("1000003"), Q2("1000033");
    auto s2 = squarefree_part(P2 * Q2, 1000000);
    CHECK(s2.m == 1);
    CHECK(s2.d == P2 * Q2);
    // two large primes above bound^3 cannot be told apart from a prime cube
    CHECK_THROWS_AS(squarefree_part(P * Q, 1000), factorization_incomplete);
}

TEST_CASE("factorization beyond the bound is an error")
{
    CHECK_THROWS_AS(factor(Integer(101) * 103 * 107, 100), factorization_incomplete);
    auto f = factor(Integer(2 * 2 * 3 * 101), 100);
    REQUIRE(f.size() == 3);
    CHECK(f[2].first == 101);
}

TEST_CASE("primality agrees with the sieve")
{
    auto ps = primes_up_to(100000);
    std::vector<bool> is(100001, false);
    for (auto q : ps)
        is[q] = true;
    for (unsigned long n = 0; n <= 100000; ++n)
        CHECK_MESSAGE(is_prime(Integer(n)) == is[n], n);
    CHECK(is_prime(Integer("170141183460469231731687303715884105727")));
    CHECK_FALSE(is_prime(Integer("3825123056546413051"))); // strong pseudoprime to bases 2..23
}

TEST_CASE("Kronecker symbol and square roots modulo primes")
{
    for (auto q : primes_up_to(200)) {
        if (q == 2)
            continue;
        Integer Q(static_cast<unsigned long>(q));
        for (long a = -50; a <= 50; ++a) {
            Integer A(a);
            Integer r = A % Q;
            if (r < 0)
                r += Q;
            int euler = r == 0 ? 0 : (pow_mod(r, (Q - 1) / 2, Q) == 1 ? 1 : -1);
            CHECK(kronecker(A, Q) == euler);
            if (euler == 1) {
                Integer s = sqrt_mod_prime(A, Q);
                CHECK((s * s - A) % Q == 0);
                CHECK(2 * s <= Q);
            }
        }
    }
}
