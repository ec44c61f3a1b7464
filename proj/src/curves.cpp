#include "fermatinv/curves.hpp"

#include <algorithm>
#include <set>

namespace fermatinv {

FermatQuotientModel fermat_model(int p)
{
    if (p < 5 || !is_prime(Integer(p)))
        throw input_error("Fermat quotient model needs a prime p >= 5");
    return FermatQuotientModel{p, fermat_hyper_over(p, Rat()), fermat_cleared_over(p, Rat())};
}

namespace {

std::vector<Integer> positive_divisors(Integer n)
{
    if (n < 0)
        n = -n;
    std::vector<Integer> divs{1};
    for (auto const & [q, e] : factor(n)) {
        std::vector<Integer> next;
        for (auto const & d : divs) {
            Integer pw = 1;
            for (unsigned i = 0; i <= e; ++i, pw *= q)
                next.push_back(d * pw);
        }
        divs = std::move(next);
    }
    return divs;
}

template <ExactField F>
int root_multiplicity(Poly<F> f, F const & t)
{
    int m = 0;
    Poly<F> lin = Poly<F>::x_minus(t);
    while (!f.is_zero()) {
        auto [q, r] = f.divmod(lin);
        if (!r.is_zero())
            break;
        f = std::move(q);
        ++m;
    }
    return m;
}

template <ExactField F>
std::vector<std::pair<F, int>> roots_by_enumeration(Poly<F> const & f)
{
    std::vector<std::pair<F, int>> out;
    if (f.is_zero())
        throw input_error("roots of the zero polynomial");
    F z = f.field_zero();
    Integer n = field_size(z);
    for (std::uint64_t i = 0; Integer(static_cast<unsigned long>(i)) < n; ++i) {
        F t = field_element(z, i);
        if (f(t).is_zero())
            out.emplace_back(t, root_multiplicity(f, t));
    }
    return out;
}

} // namespace

std::vector<std::pair<Rat, int>> field_roots(Poly<Rat> const & f)
{
    if (f.is_zero())
        throw input_error("roots of the zero polynomial");
    std::vector<std::pair<Rat, int>> out;
    // clear denominators, strip powers of X
    Integer lcm = 1;
    for (auto const & c : f.coeffs())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<Integer> ic;
    for (auto const & c : f.coeffs())
        ic.push_back(c.num() * (lcm / c.den()));
    std::size_t low = 0;
    while (ic[low] == 0)
        ++low;
    if (low > 0)
        out.emplace_back(Rat(), static_cast<int>(low));
    std::set<Rat> candidates;
    for (auto const & a : positive_divisors(ic[low]))
        for (auto const & b : positive_divisors(ic.back())) {
            candidates.insert(Rat(a, b));
            candidates.insert(Rat(-a, b));
        }
    for (auto const & t : candidates)
        if (f(t).is_zero())
            out.emplace_back(t, root_multiplicity(f, t));
    std::sort(out.begin(), out.end(), [](auto const & x, auto const & y) { return x.first < y.first; });
    return out;
}

std::vector<std::pair<ModInt, int>> field_roots(Poly<ModInt> const & f)
{
    return roots_by_enumeration(f);
}

std::vector<std::pair<Fq2Elem, int>> field_roots(Poly<Fq2Elem> const & f)
{
    return roots_by_enumeration(f);
}

std::optional<Rat> field_sqrt(Rat const & x)
{
    if (x.sign() < 0)
        return std::nullopt;
    Integer n = x.num(), d = x.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    return Rat(Integer(sqrt(n)), Integer(sqrt(d)));
}

std::optional<QuadFieldElem> field_sqrt(QuadFieldElem const & x)
{
    // (s + t sqrt d)^2 = x; with n = N(x) a rational square r^2,
    // s^2 = (a +- r)/2 and t = b / (2s) (or s = 0, t^2 = a/d).
    if (x.is_zero())
        return x;
    auto r = field_sqrt(x.norm());
    if (!r)
        return std::nullopt;
    for (Rat const & sign : {Rat(1), Rat(-1)}) {
        Rat s2 = (x.a() + sign * *r) / Rat(2);
        if (auto s = field_sqrt(s2); s && !s->is_zero()) {
            QuadFieldElem cand(x.d(), *s, x.b() / (Rat(2) * *s));
            if (cand * cand == x)
                return cand;
        }
    }
    if (auto t = field_sqrt(x.a() / Rat(x.d())); t) {
        QuadFieldElem cand(x.d(), Rat(), *t);
        if (cand * cand == x)
            return cand;
    }
    return std::nullopt;
}

FormalDivisor<Rat> fermat_divisor_of_x(FermatQuotientModel const & model)
{
    // x = v + 1/2 on the hyperelliptic model, i.e. the function v - (-1/2)
    FormalDivisor<Rat> hyper_div = divisor_of_y_minus_c(model.hyper, Rat(-1, 2));
    FormalDivisor<Rat> out;
    for (auto const & [pt, mult] : hyper_div.terms)
        out.terms.push_back({from_hyper(model.p, pt), mult});
    return out;
}

} // namespace fermatinv
