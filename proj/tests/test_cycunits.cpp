#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fermatinv/cycunits.hpp"
#include "fermatinv/errors.hpp"

using namespace fermatinv;

namespace {

std::vector<Integer> vec(std::initializer_list<long> xs)
{
    std::vector<Integer> v;
    for (long x : xs)
        v.push_back(x);
    return v;
}

// (1 - zeta^a)/(1 - zeta), computed by division in the field
CycFieldElem ratio(int p, int a)
{
    CycFieldElem one(p, Rat(1));
    return (one - CycFieldElem::zeta_pow(p, a)) / (one - CycFieldElem::zeta_pow(p, 1));
}

} // namespace

TEST_CASE("cyclotomic_unit_generators")
{
    CHECK(cyclotomic_unit_generators(5).size() == 1);
    auto g7 = cyclotomic_unit_generators(7);
    CHECK(g7.size() == 2);
    for (int p : {5, 7, 11, 13, 17}) {
        auto gens = cyclotomic_unit_generators(p);
        CHECK(gens.size() == static_cast<std::size_t>((p - 3) / 2));
        for (std::size_t i = 0; i < gens.size(); ++i) {
            auto const & x = gens[i].element;
            Rat n = cyc_norm(x);
            CHECK((n == Rat(1) || n == Rat(-1)));
            CHECK(x.galois(p - 1) == x);
            int a = static_cast<int>(i) + 2;
            // xi_a^2 = zeta^(1-a) ((1 - zeta^a)/(1 - zeta))^2
            auto r = ratio(p, a);
            CHECK(x * x == CycFieldElem::zeta_pow(p, 1 - a) * r * r);
        }
    }
    CHECK_THROWS_AS(cyclotomic_unit_generators(3), input_error);
    CHECK_THROWS_AS(cyclotomic_unit_generators(9), input_error);
}

TEST_CASE("units from exponent vectors")
{
    auto u = cyclotomic_unit(7, vec({2, -1}));
    CHECK(u.element == cyclotomic_xi(7, 2) * cyclotomic_xi(7, 2) / cyclotomic_xi(7, 3));
    Rat n = cyc_norm(u.element);
    CHECK((n == Rat(1) || n == Rat(-1)));
    CHECK(u.element.conj() == u.element);
    CHECK_THROWS_AS(cyclotomic_unit(7, vec({1})), input_error);
}

TEST_CASE("kummer_equivalent examples")
{
    // beta = alpha^2
    auto e1 = kummer_equivalent(vec({1, 0}), vec({2, 0}), 7);
    REQUIRE(e1);
    CHECK(e1->k == 2);
    CHECK(e1->gamma == vec({0, 0}));
    // beta = alpha xi_2^p
    auto e2 = kummer_equivalent(vec({0, 1}), vec({7, 1}), 7);
    REQUIRE(e2);
    CHECK(e2->k == 1);
    CHECK(e2->gamma == vec({1, 0}));
    // xi_2 and xi_3 for p = 7
    auto g = cyclotomic_unit_generators(7);
    CHECK_FALSE(kummer_equivalent(g[0], g[1]));

    // the same relation at the level of field elements, p = 5
    auto alpha = cyclotomic_unit(5, vec({1}));
    auto beta = cyclotomic_unit(5, vec({13}));
    auto r = kummer_equivalent(alpha, beta);
    REQUIRE(r);
    CHECK(r->k == 3);
    auto gamma = cyclotomic_unit(5, r->gamma);
    auto lhs = gamma.element;
    for (int i = 1; i < 5; ++i)
        lhs = lhs * gamma.element;
    for (long i = 0; i < r->k; ++i)
        lhs = lhs * alpha.element;
    CHECK(lhs == beta.element);
}

TEST_CASE("Kummer equivalence is an equivalence relation")
{
    std::mt19937_64 rng(5);
    for (int p : {5, 7, 11}) {
        std::size_t t = static_cast<std::size_t>((p - 3) / 2);
        auto rnd = [&] {
            std::vector<Integer> v;
            for (std::size_t i = 0; i < t; ++i)
                v.push_back(std::uniform_int_distribution<long>(-20, 20)(rng));
            return v;
        };
        for (int i = 0; i < 200; ++i) {
            auto a = rnd();
            CHECK(kummer_equivalent(a, a, p));
            // b = a^k gamma^p, so a ~ b
            long k = std::uniform_int_distribution<long>(1, p - 1)(rng);
            auto gm = rnd();
            std::vector<Integer> b;
            for (std::size_t j = 0; j < t; ++j)
                b.push_back(k * a[j] + p * gm[j]);
            auto ab = kummer_equivalent(a, b, p);
            auto ba = kummer_equivalent(b, a, p);
            CHECK(ab.has_value() == ba.has_value());
            if (ab && ba)
                CHECK((ab->k * ba->k) % p == 1);
            auto c = rnd();
            auto bc = kummer_equivalent(b, c, p);
            auto ac = kummer_equivalent(a, c, p);
            if (ab && bc)
                CHECK(ac);
        }
    }
}

TEST_CASE("subextension_count")
{
    auto a = subextension_count(5, true);
    CHECK(a.t == 1);
    CHECK(a.n_p == 1);
    auto b = subextension_count(7, true);
    CHECK(b.t == 2);
    CHECK(b.n_p == 8);
    auto c = subextension_count(11, true);
    CHECK(c.t == 4);
    CHECK(c.n_p == 1464);
    CHECK_THROWS_AS(subextension_count(7, false), vandiver_not_assumed);
    CHECK(count_kummer_classes(5, 1) == 1);
    CHECK(count_kummer_classes(7, 2) == 8);
    CHECK(count_kummer_classes(5, 3) == 31);
}

TEST_CASE("Bernoulli numbers")
{
    auto B = bernoulli_numbers_exact(200);
    CHECK(B[1] == Rat(Integer(-1), Integer(2)));
    CHECK(B[2] == Rat(Integer(1), Integer(6)));
    CHECK(B[4] == Rat(Integer(-1), Integer(30)));
    CHECK(B[12] == Rat(Integer(-691), Integer(2730)));
    for (int k = 3; k <= 200; k += 2)
        CHECK(B[static_cast<std::size_t>(k)].is_zero());
    // the recurrence, re-verified
    for (int n = 1; n <= 200; ++n) {
        Rat s;
        for (int j = 0; j <= n; ++j) {
            Integer c;
            mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(j));
            s += Rat(c) * B[static_cast<std::size_t>(j)];
        }
        CHECK(s.is_zero());
    }
    // von Staudt-Clausen: B_{2k} + sum_{(q-1) | 2k} 1/q is an integer
    for (int k = 2; k <= 200; k += 2) {
        Rat s = B[static_cast<std::size_t>(k)];
        for (auto q : primes_up_to(static_cast<std::uint64_t>(k + 1)))
            if (k % static_cast<int>(q - 1) == 0)
                s += Rat(Integer(1), Integer(static_cast<unsigned long>(q)));
        CHECK(s.is_integer());
    }
    CHECK_THROWS_AS(bernoulli_numbers_exact(202), input_error);
}

TEST_CASE("irregularity")
{
    auto r37 = irregularity(37);
    CHECK(r37.irregular);
    CHECK(r37.witnesses == std::vector<int>{32});
    CHECK_FALSE(irregularity(31).irregular);
    std::vector<int> irr;
    for (auto q : primes_up_to(150))
        if (q >= 5 && irregularity(static_cast<int>(q)).irregular)
            irr.push_back(static_cast<int>(q));
    CHECK(irr == std::vector<int>{37, 59, 67, 101, 103, 131, 149});
    CHECK(irregularity(157).witnesses == std::vector<int>{62, 110}); // index of irregularity 2
    CHECK_THROWS_AS(irregularity(211), input_error);
}
