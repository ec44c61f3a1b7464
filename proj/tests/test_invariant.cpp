#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fermatinv/errors.hpp"
#include "fermatinv/invariant.hpp"
#include "fermatinv/json.hpp"

using namespace fermatinv;

TEST_CASE("make_candidate examples")
{
    auto c1 = make_candidate(5, -1);
    CHECK(c1.d_raw == -3);
    CHECK(c1.d == -3);
    CHECK(c1.degenerate);
    CHECK(quad_norm_trace(c1.x0).norm == Rat(1));

    auto c2 = make_candidate(5, -2);
    CHECK(c2.d_raw == -127);
    CHECK(c2.m == 1);
    CHECK(c2.d == -127);
    CHECK_FALSE(c2.degenerate);
    CHECK(c2.x0 == QuadFieldElem(-127, Rat(Integer(1), Integer(2)), Rat(Integer(1), Integer(2))));
    CHECK(quad_norm_trace(c2.x0).norm == Rat(32));

    // 4 * (-4)^5 + 1 = -4095 = -(3^2 * 5 * 7 * 13)
    auto c4 = make_candidate(5, -4);
    CHECK(c4.m == 3);
    CHECK(c4.d == -455);

    CHECK_THROWS_AS(make_candidate(5, 0), input_error);
    CHECK_THROWS_AS(make_candidate(4, -2), input_error);
    CHECK_THROWS_AS(make_candidate(5, Integer("-1000000000000"), 100), factorization_incomplete);
}

TEST_CASE("candidate invariants")
{
    for (int p : {5, 7}) {
        for (long u = -1; u >= -30; --u) {
            auto c = make_candidate(p, u);
            CHECK(c.d < 0);
            CHECK(((c.d % 4) + 4) % 4 == 1);
            CHECK(c.x0.is_integral());
            CHECK(c.x0 + c.x0.conj() == c.x0.one());
            CHECK(c.x0 * c.x0.conj() == c.x0.from_integer(ipow(-u, static_cast<unsigned long>(p))));
            CHECK(c.m * c.m * c.d == c.d_raw);
            auto curve = fermat_hyper_over(p, c.x0);
            auto P = c.point();
            CHECK(on_fermat_original(p, P.x, P.y));
            CHECK(curve.contains(to_hyper(p, P)));
            CHECK(is_valid(curve, c.divisor()));
        }
    }
}

TEST_CASE("divide_ideal")
{
    auto a1 = divide_ideal(make_candidate(5, -1));
    CHECK(a1.is_unit());
    auto c2 = make_candidate(5, -2);
    auto a2 = divide_ideal(c2);
    CHECK(a2.norm() == 2);
    CHECK(a2 == primes_above(2, -127).ideals[0]);
    CHECK(a2.pow(5) == QuadIdeal::principal(c2.x0));
    for (int p : {5, 7})
        for (long u = -2; u >= -25; --u) {
            auto c = make_candidate(p, u);
            auto a = divide_ideal(c);
            CHECK(a.norm() == -u);
            CHECK(ipow(a.norm(), static_cast<unsigned long>(p)) == c.x0.norm().num());
        }
}

TEST_CASE("psi examples")
{
    auto r1 = psi(make_candidate(5, -1));
    CHECK(r1.c_order == 1);
    CHECK_FALSE(r1.nonvanishing);
    // the point over Q(sqrt -3) is still certified: orders 50 and 101 at q = 7, 11
    REQUIRE(r1.certificate);
    CHECK(r1.infinite_order() == OrderVerdict::proven_infinite);
    CHECK(r1.certificate->first.q == 7);
    CHECK(r1.certificate->first.jacobian_order == 50);
    CHECK(r1.certificate->first.point_order == 50);
    CHECK(r1.certificate->second.jacobian_order % r1.certificate->second.point_order == 0);
    auto const & c1 = r1.certificate->first;
    auto const & c2 = r1.certificate->second;
    CHECK(orders_incompatible(c1.q, c1.point_order, c2.q, c2.point_order));

    auto r2 = psi(make_candidate(5, -2));
    CHECK(r2.class_group.h == 5);
    CHECK(r2.class_group.structure == std::vector<Integer>{5});
    CHECK(r2.p_splitting == Splitting::inert);
    CHECK(r2.s_quotient_order == 5);
    CHECK(r2.class_of_a == QuadForm{2, 1, 16});
    CHECK_FALSE(r2.class_of_a == principal_form(-127));
    CHECK(r2.c_order == 5);
    CHECK(r2.nonvanishing);
    CHECK(r2.a_power_verified);
    CHECK(r2.psi_tuple_orders == std::vector<Integer>{1, 5, 5, 5, 5});
    CHECK(r2.infinite_order() == OrderVerdict::proven_infinite);

    // no element of norm 2: t^2 + 127 s^2 = 8 has no integer solution
    for (long s = -1; s <= 1; ++s)
        for (long t = -3; t <= 3; ++t)
            CHECK(t * t + 127 * s * s != 8);
}

TEST_CASE("psi invariants along the u-line")
{
    for (int p : {5, 7}) {
        long lo = p == 5 ? -30 : -10;
        for (long u = -1; u >= lo; --u) {
            auto c = make_candidate(p, u);
            PsiOptions opt;
            opt.certify = false;
            auto r = psi(c, opt);
            CHECK(r.psi_tuple_orders.size() == static_cast<std::size_t>(p));
            CHECK(r.psi_tuple_orders[0] == 1);
            for (int i = 1; i < p; ++i) {
                Integer g;
                mpz_gcd_ui(g.get_mpz_t(), r.c_order.get_mpz_t(), static_cast<unsigned long>(i));
                CHECK(r.psi_tuple_orders[static_cast<std::size_t>(i)] == r.c_order / g);
            }
            CHECK(r.nonvanishing == (r.c_order > 1));
            CHECK((r.c_order == 1 || r.c_order == p));
            if (r.class_group.h % p != 0)
                CHECK_FALSE(r.nonvanishing);
            for (auto const & [q, e] : factor(-u))
                CHECK(kronecker(c.D, q) == 1);
            // the conjugate construction gives the inverse class and the same verdict
            auto abar = QuadIdeal::from_generators(c.d, {c.x0.from_integer(u), c.x0.conj()});
            CHECK(abar == r.a.conj());
            CHECK(ideal_to_class(abar) == opposite(r.class_of_a));
            SQuotient quot = s_class_group(r.class_group, r.s_classes);
            CHECK((quot.order_of(ideal_to_class(abar)) > 1) == r.nonvanishing);
        }
    }
}

TEST_CASE("InvariantReport JSON layout")
{
    auto j = invariant_json(psi(make_candidate(5, -2)));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
        keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"p", "u", "d", "h", "a", "class_of_a", "p_splitting", "s_quotient_order",
                                           "c_order", "psi_tuple_orders", "nonvanishing", "infinite_order"});
    CHECK(j["d"] == "-127");
    CHECK(j["class_of_a"] == Json::array({"2", "1", "16"}));
    CHECK(j["nonvanishing"] == true);
    CHECK(j["infinite_order"] == "proven");
    CHECK(j["a"]["norm"] == "2");
}

TEST_CASE("search_nonvanishing")
{
    auto run = [](Integer umin, Integer umax, unsigned workers, std::optional<Integer> resume = {}) {
        SearchOptions opt;
        opt.p = 5;
        opt.umin = umin;
        opt.umax = umax;
        opt.workers = workers;
        opt.resume_from = resume;
        std::vector<std::string> lines;
        auto sum = search_nonvanishing(opt, [&](SearchOutcome const & s) {
            if (s.report && s.report->nonvanishing)
                lines.push_back(invariant_json(*s.report).dump());
            else if (!s.report)
                lines.push_back("skipped " + s.u.get_str());
        });
        return std::pair{sum, lines};
    };
    auto [s1, l1] = run(-2, -2, 1);
    CHECK(s1.tested == 1);
    CHECK(s1.witnesses == 1);
    REQUIRE(l1.size() == 1);
    CHECK(l1[0].find("\"d\":\"-127\"") != std::string::npos);

    auto [s0, l0] = run(-1, -1, 1);
    CHECK(s0.tested == 1);
    CHECK(l0.empty());

    auto [sa, la] = run(-20, -1, 1);
    auto [sb, lb] = run(-20, -1, 4);
    CHECK(la == lb);
    CHECK(sa.tested == 20);
    CHECK(sa.witnesses == sb.witnesses);
    CHECK(sa.distinct_d.size() >= 5);

    auto [sr, lr] = run(-20, -1, 2, Integer(-11));
    CHECK(sr.tested == 10);
    REQUIRE(lr.size() <= la.size());
    CHECK(std::equal(lr.begin(), lr.end(), la.end() - static_cast<long>(lr.size())));

    SearchOptions bad;
    bad.umin = -1;
    bad.umax = 3;
    CHECK_THROWS_AS(search_nonvanishing(bad, [](SearchOutcome const &) {}), input_error);

    SearchOptions tiny;
    tiny.umin = -60;
    tiny.umax = -58;
    tiny.factor_bound = 10;
    auto st = search_nonvanishing(tiny, [](SearchOutcome const &) {});
    CHECK(st.tested == 3);
    CHECK(st.skipped + st.witnesses <= 3);
}
