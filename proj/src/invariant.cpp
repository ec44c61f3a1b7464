#include "fermatinv/invariant.hpp"

#include <atomic>
#include <condition_variable>
#include <mutex>
#include <set>
#include <thread>

#include "fermatinv/errors.hpp"

namespace fermatinv {

AffinePoint<QuadFieldElem> PointCandidate::point() const
{
    return {false, x0, x0.from_integer(-u)};
}

MumfordDivisor<QuadFieldElem> PointCandidate::divisor() const
{
    QuadFieldElem uu = x0.from_integer(u);
    QuadFieldElem v(d, Rat(), Rat(m) / Rat(2));
    return MumfordDivisor<QuadFieldElem>::from_point(uu, v);
}

PointCandidate make_candidate(int p, Integer const & u, std::uint64_t factor_bound)
{
    if (p < 5 || !is_prime(Integer(p)))
        throw input_error("p must be a prime >= 5, got " + std::to_string(p));
    if (u > -1)
        throw input_error("u must be a negative integer, got " + u.get_str());
    PointCandidate c;
    c.p = p;
    c.u = u;
    c.d_raw = 4 * ipow(u, static_cast<unsigned long>(p)) + 1;
    SquarefreePart sf = squarefree_part(c.d_raw, factor_bound);
    c.m = sf.m;
    c.d = sf.d;
    c.D = fundamental_discriminant(c.d);
    c.degenerate = c.d == -3;
    c.x0 = QuadFieldElem(c.d, Rat(1, 2), Rat(c.m) / Rat(2));

    Integer r = c.d % 4;
    if (c.d >= 0 || !(r == 1 || r == -3))
        throw computation_error("squarefree part " + c.d.get_str() + " is not negative and 1 mod 4");
    if (!c.x0.is_integral())
        throw computation_error("x0 is not integral");
    auto nt = quad_norm_trace(c.x0);
    if (!(nt.trace == Rat(1)) || !(nt.norm == Rat(ipow(-u, static_cast<unsigned long>(p)))))
        throw computation_error("x0 fails trace 1 / norm |u|^p");
    if (!on_fermat_original(p, c.x0, c.x0.from_integer(-u)))
        throw computation_error("candidate point is not on y^p = x(1-x)");
    return c;
}

QuadIdeal divide_ideal(PointCandidate const & c)
{
    QuadIdeal a = QuadIdeal::from_generators(c.d, {c.x0.from_integer(c.u), c.x0});
    if (!(a.pow(static_cast<unsigned long>(c.p)) == QuadIdeal::principal(c.x0)))
        throw computation_error("a^p != (x0) for u = " + c.u.get_str());
    return a;
}

std::optional<NonTorsionCertificate> find_certificate(PointCandidate const & c, PsiOptions const & opt)
{
    auto curve = fermat_hyper_over(c.p, c.x0);
    auto D = c.divisor();
    int g = curve.genus();
    std::vector<ReductionData> data;
    std::optional<NonTorsionCertificate> last;
    for (Integer q = 3; static_cast<int>(data.size()) < opt.certificate_primes; q = q + 2) {
        if (!is_prime(q) || q == c.p || c.d % q == 0)
            continue;
        int k = kronecker(c.D, q);
        Integer size = ipow(q, static_cast<unsigned long>(g * (k == 1 ? 1 : 2)));
        if (size > opt.count.max_search) {
            if (ipow(q, static_cast<unsigned long>(g)) > opt.count.max_search)
                break;
            continue;
        }
        ReductionData r;
        try {
            r = reduce_at_prime(curve, D, q, opt.count);
        } catch (bad_reduction const &) {
            continue;
        }
        for (auto const & prev : data) {
            NonTorsionCertificate cert;
            cert.point = "(" + D.U.to_string() + ", " + D.V.to_string() + ")";
            cert.first = prev;
            cert.second = r;
            cert.verdict = orders_incompatible(prev.q, prev.point_order, r.q, r.point_order)
                               ? OrderVerdict::proven_infinite
                               : OrderVerdict::inconclusive;
            if (cert.verdict == OrderVerdict::proven_infinite)
                return cert;
            last = cert;
        }
        data.push_back(r);
    }
    return last;
}

InvariantReport psi(PointCandidate const & c, PsiOptions const & opt)
{
    InvariantReport r;
    r.candidate = c;
    Integer absu = -c.u;

    for (auto const & [q, e] : factor(absu))
        if (kronecker(c.D, q) != 1)
            throw computation_error("prime " + q.get_str() + " | u does not split in Q(sqrt(" + c.d.get_str() + "))");

    QuadIdeal X0 = QuadIdeal::principal(c.x0);
    QuadIdeal X1 = QuadIdeal::principal(c.x0.one() - c.x0);
    if (!(X0 + X1).is_unit())
        throw computation_error("(x0) and (1 - x0) are not coprime");
    if (!(X0 * X1 == QuadIdeal::principal(c.x0.from_integer(ipow(absu, static_cast<unsigned long>(c.p))))))
        throw computation_error("(x0)(1 - x0) != (|u|^p)");

    r.a = divide_ideal(c);
    r.a_power_verified = true;
    if (r.a.norm() != absu)
        throw computation_error("N(a) != |u|");
    r.class_of_a = ideal_to_class(r.a);

    r.class_group = class_group(c.D, opt.class_group);
    PrimesAbove S = primes_above(Integer(c.p), c.d);
    r.p_splitting = S.splitting;
    for (auto const & P : S.ideals)
        r.s_classes.push_back(ideal_to_class(P));
    SQuotient quot = s_class_group(r.class_group, r.s_classes);
    r.s_quotient_order = quot.order;
    r.c_order = quot.order_of(r.class_of_a);
    for (int i = 0; i < c.p; ++i)
        r.psi_tuple_orders.push_back(quot.order_of(form_pow(r.class_of_a, i)));
    r.nonvanishing = r.c_order > 1;

    Integer g;
    mpz_gcd_ui(g.get_mpz_t(), r.class_group.h.get_mpz_t(), static_cast<unsigned long>(c.p));
    if (g == 1 && r.nonvanishing)
        throw computation_error("nonvanishing class although p does not divide h");

    if (opt.certify)
        r.certificate = find_certificate(c, opt);
    return r;
}

SearchSummary search_nonvanishing(SearchOptions const & opt, std::function<void(SearchOutcome const &)> const & sink)
{
    if (opt.p < 5 || !is_prime(Integer(opt.p)))
        throw input_error("p must be a prime >= 5");
    if (!(opt.umin <= opt.umax && opt.umax <= -1))
        throw input_error("need umin <= umax <= -1");
    Integer start = opt.umax;
    if (opt.resume_from) {
        if (*opt.resume_from > -1)
            throw input_error("--resume-from must be negative");
        if (*opt.resume_from < start)
            start = *opt.resume_from;
    }
    std::vector<Integer> us;
    for (Integer u = start; u >= opt.umin; --u)
        us.push_back(u);

    std::vector<std::optional<SearchOutcome>> slots(us.size());
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};

    PsiOptions popt = opt.psi;
    popt.certify = false;
    auto work = [&] {
        for (;;) {
            std::size_t i = next++;
            if (i >= us.size())
                return;
            SearchOutcome out;
            out.u = us[i];
            try {
                PointCandidate c = make_candidate(opt.p, us[i], opt.factor_bound);
                InvariantReport rep = psi(c, popt);
                if (rep.nonvanishing && opt.psi.certify)
                    rep.certificate = find_certificate(c, opt.psi);
                out.report = std::move(rep);
            } catch (factorization_incomplete const & e) {
                out.skipped = e.what();
            } catch (bound_exceeded const & e) {
                out.skipped = e.what();
            }
            std::lock_guard lock(mu);
            slots[i] = std::move(out);
            cv.notify_all();
        }
    };

    unsigned n = std::max(1u, opt.workers);
    std::vector<std::thread> threads;
    std::exception_ptr failure;
    for (unsigned t = 0; t < n; ++t)
        threads.emplace_back([&] {
            try {
                work();
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure)
                    failure = std::current_exception();
                next = us.size();
                cv.notify_all();
            }
        });

    SearchSummary sum;
    std::set<Integer> ds;
    for (std::size_t i = 0; i < us.size(); ++i) {
        SearchOutcome out;
        {
            std::unique_lock lock(mu);
            cv.wait(lock, [&] { return slots[i].has_value() || failure; });
            if (failure)
                break;
            out = std::move(*slots[i]);
            slots[i].reset();
        }
        ++sum.tested;
        if (!out.report) {
            ++sum.skipped;
        } else if (out.report->nonvanishing) {
            ++sum.witnesses;
            ds.insert(out.report->candidate.d);
        }
        sink(out);
    }
    for (auto & t : threads)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    sum.distinct_d.assign(ds.begin(), ds.end());
    return sum;
}

} // namespace fermatinv
