#pragma once

// Template definitions for jacobian.hpp (finite-field counting).

namespace fermatinv {

namespace detail {

template <ExactField F>
Poly<F> monic_from_index(F const & z, std::uint64_t index, int degree, std::uint64_t q)
{
    std::vector<F> c;
    c.reserve(static_cast<std::size_t>(degree + 1));
    for (int i = 0; i < degree; ++i) {
        c.push_back(field_element(z, index % q));
        index /= q;
    }
    c.push_back(z.one());
    return Poly<F>(z, std::move(c));
}

template <ExactField F>
bool is_irreducible(Poly<F> const & P, Integer const & q)
{
    int k = P.degree();
    if (k <= 0)
        return false;
    F z = P.field_zero();
    Poly<F> X = Poly<F>::monomial(z.one(), 1);
    Poly<F> h = X % P;
    for (int i = 1; i <= k / 2; ++i) {
        h = powmod(h, q, P);
        if (gcd(h - X, P).degree() > 0)
            return false;
    }
    return true;
}

template <ExactField F>
std::uint64_t checked_size(F const & z, int g, Integer const & max_search)
{
    Integer q = field_size(z);
    if (ipow(q, static_cast<unsigned long>(g)) > max_search)
        throw bound_exceeded("field size " + q.get_str() + " to the genus " + std::to_string(g) +
                             " exceeds the search bound " + max_search.get_str());
    return q.get_ui();
}

template <ExactField F>
void require_good_reduction(HyperellipticCurve<F> const & c)
{
    if (field_characteristic(c.field_zero()) == 2)
        throw bad_reduction("characteristic 2 is not supported");
}

} // namespace detail

template <ExactField F>
Integer jacobian_order_finite_field(HyperellipticCurve<F> const & c, FiniteFieldCountOptions const & opt)
{
    detail::require_good_reduction(c);
    int g = c.genus();
    F z = c.field_zero();
    std::uint64_t q = detail::checked_size(z, g, opt.max_search);
    Integer Q(static_cast<unsigned long>(q));
    std::vector<Integer> series(static_cast<std::size_t>(g + 1), Integer(0));
    series[0] = 1;
    for (int k = 1; k <= g; ++k) {
        std::uint64_t count = ipow(Integer(static_cast<unsigned long>(q)), static_cast<unsigned long>(k)).get_ui();
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly<F> P = detail::monic_from_index(z, idx, k, q);
            if (!detail::is_irreducible(P, Q))
                continue;
            Poly<F> fm = c.f() % P;
            std::vector<Integer> local(static_cast<std::size_t>(g + 1), Integer(0));
            local[0] = 1;
            if (fm.is_zero()) {
                local[static_cast<std::size_t>(k)] = 1;
            } else {
                Integer e = (ipow(Q, static_cast<unsigned long>(k)) - 1) / 2;
                if (powmod(fm, e, P).is_one())
                    for (int j = k; j <= g; j += k)
                        local[static_cast<std::size_t>(j)] = 2;
            }
            std::vector<Integer> next(static_cast<std::size_t>(g + 1), Integer(0));
            for (int i = 0; i <= g; ++i)
                for (int j = 0; i + j <= g; ++j)
                    next[static_cast<std::size_t>(i + j)] +=
                        series[static_cast<std::size_t>(i)] * local[static_cast<std::size_t>(j)];
            series = std::move(next);
        }
    }
    Integer total = 0;
    for (auto const & s : series)
        total += s;
    return total;
}

template <ExactField F>
Integer jacobian_order_brute_force(HyperellipticCurve<F> const & c)
{
    detail::require_good_reduction(c);
    int g = c.genus();
    F z = c.field_zero();
    std::uint64_t q = field_size(z).get_ui();
    Integer total = 1; // U = 1
    for (int k = 1; k <= g; ++k) {
        std::uint64_t count = 1;
        for (int i = 0; i < k; ++i)
            count *= q;
        for (std::uint64_t iu = 0; iu < count; ++iu) {
            Poly<F> U = detail::monic_from_index(z, iu, k, q);
            Poly<F> target = c.f() % U;
            for (std::uint64_t iv = 0; iv < count; ++iv) {
                std::vector<F> vc;
                std::uint64_t t = iv;
                for (int i = 0; i < k; ++i) {
                    vc.push_back(field_element(z, t % q));
                    t /= q;
                }
                Poly<F> V(z, std::move(vc));
                if (((V * V) % U) == target)
                    ++total;
            }
        }
    }
    return total;
}

template <ExactField F>
Integer order_given_group_order(HyperellipticCurve<F> const & c, MumfordDivisor<F> const & D,
                                Integer const & group_order)
{
    Factorization fac = factor(group_order);
    return order_from_multiple(
        D, group_order, fac,
        [&](MumfordDivisor<F> const & x, Integer const & n) { return scalar_mul(c, n, x); },
        [](MumfordDivisor<F> const & x) { return x.is_identity(); });
}

} // namespace fermatinv
