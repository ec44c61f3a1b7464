#include "fermatinv/quadclass.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "fermatinv/errors.hpp"

namespace fermatinv {

namespace {

Integer mod_pos(Integer const & x, Integer const & m)
{
    Integer r = x % m;
    if (r < 0)
        r += m;
    return r;
}

Integer igcd(Integer const & a, Integer const & b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/* g = s a + t b */
void igcdext(Integer & g, Integer & s, Integer & t, Integer const & a, Integer const & b)
{
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

void normalize_b(QuadForm & f, Integer const & D)
{
    Integer two_a = 2 * f.a;
    Integer r = mod_pos(f.b, two_a);
    if (r > f.a)
        r -= two_a;
    f.b = r;
    f.c = (f.b * f.b - D) / (4 * f.a);
}

} // namespace

bool QuadForm::is_reduced() const
{
    if (a <= 0)
        return false;
    if (!(-a < b && b <= a && a <= c))
        return false;
    if (a == c && b < 0)
        return false;
    return true;
}

std::strong_ordering operator<=>(QuadForm const & x, QuadForm const & y)
{
    for (auto [u, v] : {std::pair{&x.a, &y.a}, std::pair{&x.b, &y.b}, std::pair{&x.c, &y.c}}) {
        int s = cmp(*u, *v);
        if (s < 0)
            return std::strong_ordering::less;
        if (s > 0)
            return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string QuadForm::to_string() const
{
    return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")";
}

Integer fundamental_discriminant(Integer const & d)
{
    Integer r = mod_pos(d, 4);
    return r == 1 ? d : 4 * d;
}

void check_discriminant(Integer const & D)
{
    if (D >= 0)
        throw input_error("discriminant must be negative, got " + D.get_str());
    Integer r = mod_pos(D, 4);
    if (r != 0 && r != 1)
        throw input_error("discriminant must be 0 or 1 mod 4, got " + D.get_str());
}

QuadForm principal_form(Integer const & D)
{
    check_discriminant(D);
    Integer b = mod_pos(D, 2);
    return {1, b, (b * b - D) / 4};
}

QuadForm opposite(QuadForm const & F)
{
    return reduce_form({F.a, -F.b, F.c});
}

QuadForm reduce_form(QuadForm const & F)
{
    Integer D = F.discriminant();
    if (D >= 0)
        throw input_error("reduce_form needs a negative discriminant");
    if (F.a <= 0)
        throw input_error("reduce_form needs a > 0");
    QuadForm f = F;
    if (!(-f.a < f.b && f.b <= f.a))
        normalize_b(f, D);
    while (f.a > f.c) {
        f = {f.c, -f.b, f.a};
        normalize_b(f, D);
    }
    if (f.a == f.c && f.b < 0)
        f.b = -f.b;
    return f;
}

QuadForm compose(QuadForm const & F1, QuadForm const & F2)
{
    Integer D = F1.discriminant();
    if (D != F2.discriminant())
        throw input_error("compose: discriminant mismatch " + D.get_str() + " vs " + F2.discriminant().get_str());
    QuadForm f1 = F1, f2 = F2;
    if (f1.a > f2.a)
        std::swap(f1, f2);
    Integer s = (f1.b + f2.b) / 2;
    Integer n = f2.b - s;
    Integer y1, d;
    if (mpz_divisible_p(f2.a.get_mpz_t(), f1.a.get_mpz_t())) {
        y1 = 0;
        d = f1.a;
    } else {
        Integer u, v;
        igcdext(d, u, v, f2.a, f1.a);
        y1 = u;
    }
    Integer x2, y2, d1;
    if (mpz_divisible_p(s.get_mpz_t(), d.get_mpz_t())) {
        y2 = -1;
        x2 = 0;
        d1 = d;
    } else {
        igcdext(d1, x2, y2, s, d);
        y2 = -y2;
    }
    Integer v1 = f1.a / d1;
    Integer v2 = f2.a / d1;
    Integer r = mod_pos(y1 * y2 * n - x2 * f2.c, v1);
    Integer b3 = f2.b + 2 * v2 * r;
    Integer a3 = v1 * v2;
    Integer c3 = (f2.c * d1 + r * (f2.b + v2 * r)) / v1;
    return reduce_form({a3, b3, c3});
}

QuadForm form_pow(QuadForm const & F, Integer n)
{
    QuadForm base = reduce_form(F);
    if (n < 0) {
        n = -n;
        base = opposite(base);
    }
    QuadForm acc = principal_form(F.discriminant());
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t()))
            acc = compose(acc, base);
        n >>= 1;
        if (n > 0)
            base = compose(base, base);
    }
    return acc;
}

ClassGroup class_group(Integer const & D, ClassGroupOptions const & opt)
{
    check_discriminant(D);
    if (-D > opt.max_abs_disc)
        throw bound_exceeded("|D| = " + Integer(-D).get_str() + " exceeds the class group bound " +
                             opt.max_abs_disc.get_str());
    ClassGroup cg;
    cg.D = D;
    // every reduced form has a <= sqrt(|D|/3)
    Integer amax = sqrt(Integer(-D / 3));
    std::int64_t const Dl = D.get_si();
    std::int64_t const A = amax.get_si();
    std::int64_t const parity = (Dl % 2 == 0) ? 0 : 1;
    for (std::int64_t a = 1; a <= A; ++a) {
        std::int64_t const four_a = 4 * a;
        std::int64_t b = -a + 1;
        if (((b % 2) + 2) % 2 != parity)
            ++b;
        for (; b <= a; b += 2) {
            std::int64_t num = b * b - Dl;
            if (num % four_a != 0)
                continue;
            std::int64_t c = num / four_a;
            if (c < a)
                continue;
            if ((a == c || a == -b) && b < 0)
                continue;
            if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1)
                continue;
            cg.forms.push_back({a, b, c});
        }
    }
    std::sort(cg.forms.begin(), cg.forms.end());
    cg.h = static_cast<unsigned long>(cg.forms.size());
    if (cg.h <= opt.structure_limit)
        compute_structure(cg);
    return cg;
}

Integer form_order(QuadForm const & F, Integer const & h)
{
    QuadForm one = principal_form(F.discriminant());
    return order_from_multiple(
        reduce_form(F), h, factor(h), [](QuadForm const & x, Integer const & n) { return form_pow(x, n); },
        [&](QuadForm const & x) { return x == one; });
}

void compute_structure(ClassGroup & cg)
{
    Factorization hf = factor(cg.h);
    std::vector<Integer> orders;
    orders.reserve(cg.forms.size());
    QuadForm one = principal_form(cg.D);
    for (auto const & f : cg.forms)
        orders.push_back(order_from_multiple(
            f, cg.h, hf, [](QuadForm const & x, Integer const & n) { return form_pow(x, n); },
            [&](QuadForm const & x) { return x == one; }));

    // |G_l[l^k]| from the count of elements whose order has l-adic valuation <= k
    std::vector<std::vector<unsigned>> parts; // per prime: exponents, descending
    std::vector<Integer> primes;
    for (auto const & [l, e] : hf) {
        Integer cofactor = cg.h / ipow(l, e);
        std::vector<unsigned> s(e + 1, 0); // s[k] = log_l |G_l[l^k]|
        for (unsigned k = 0; k <= e; ++k) {
            unsigned long count = 0;
            for (auto const & o : orders)
                if (valuation(o, l) <= k)
                    ++count;
            Integer size = Integer(count) / cofactor;
            unsigned lg = 0;
            while (size > 1) {
                size /= l;
                ++lg;
            }
            s[k] = lg;
        }
        // number of cyclic factors of exponent >= k is s[k] - s[k-1]
        std::vector<unsigned> exps;
        for (unsigned k = e; k >= 1; --k) {
            unsigned ge_k = s[k] - s[k - 1];
            unsigned ge_k1 = k < e ? s[k + 1] - s[k] : 0;
            for (unsigned i = 0; i < ge_k - ge_k1; ++i)
                exps.push_back(k);
        }
        primes.push_back(l);
        parts.push_back(std::move(exps));
    }
    std::size_t rank = 0;
    for (auto const & p : parts)
        rank = std::max(rank, p.size());
    std::vector<Integer> factors(rank, Integer(1));
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = 0; j < parts[i].size(); ++j)
            factors[j] *= ipow(primes[i], parts[i][j]);
    std::reverse(factors.begin(), factors.end());
    cg.structure = std::move(factors);

    cg.generators.clear();
    std::set<QuadForm> H{one};
    for (auto const & f : cg.forms) {
        if (H.count(f))
            continue;
        cg.generators.push_back(f);
        H = generated_subgroup(cg.generators, cg.D);
        if (Integer(static_cast<unsigned long>(H.size())) == cg.h)
            break;
    }
    cg.structure_computed = true;
}

std::set<QuadForm> generated_subgroup(std::vector<QuadForm> const & gens, Integer const & D)
{
    QuadForm one = principal_form(D);
    std::set<QuadForm> H{one};
    std::deque<QuadForm> queue{one};
    while (!queue.empty()) {
        QuadForm x = queue.front();
        queue.pop_front();
        for (auto const & g : gens) {
            QuadForm y = compose(x, g);
            if (H.insert(y).second)
                queue.push_back(y);
        }
    }
    return H;
}

Integer SQuotient::order_of(QuadForm const & F) const
{
    QuadForm f = reduce_form(F);
    QuadForm acc = f;
    for (Integer k = 1;; ++k) {
        if (subgroup.count(acc))
            return k;
        acc = compose(acc, f);
    }
}

SQuotient s_class_group(ClassGroup const & cg, std::vector<QuadForm> const & S_classes)
{
    std::vector<QuadForm> gens;
    for (auto const & s : S_classes) {
        if (s.discriminant() != cg.D)
            throw input_error("S class " + s.to_string() + " has the wrong discriminant");
        gens.push_back(reduce_form(s));
    }
    SQuotient q;
    q.subgroup = generated_subgroup(gens, cg.D);
    Integer hs(static_cast<unsigned long>(q.subgroup.size()));
    if (cg.h % hs != 0)
        throw computation_error("subgroup order does not divide h");
    q.order = cg.h / hs;
    return q;
}

// ---- ideals

std::pair<Integer, Integer> omega_coordinates(QuadFieldElem const & x)
{
    QuadFieldElem w = QuadFieldElem::omega(x.d());
    Rat y = x.b() / w.b();
    Rat xx = x.a() - y * w.a();
    if (!y.is_integer() || !xx.is_integer())
        throw input_error(x.to_string() + " is not an algebraic integer");
    return {xx.num(), y.num()};
}

QuadIdeal::QuadIdeal(Integer d, Integer n, Integer b, Integer c)
    : d_(std::move(d)), n_(std::move(n)), b_(std::move(b)), c_(std::move(c))
{
    if (n_ <= 0 || c_ <= 0)
        throw input_error("ideal Hermite form needs n, c > 0");
    b_ = mod_pos(b_, n_);
}

QuadIdeal QuadIdeal::from_generators(Integer const & d, std::vector<QuadFieldElem> const & gens)
{
    QuadFieldElem w = QuadFieldElem::omega(d);
    Integer N = 0;
    bool have_pivot = false;
    Integer X = 0, Y = 0;
    auto add = [&](QuadFieldElem const & g) {
        auto [x, y] = omega_coordinates(g);
        if (y == 0) {
            N = igcd(N, x);
            return;
        }
        if (!have_pivot) {
            X = y < 0 ? Integer(-x) : x;
            Y = y < 0 ? Integer(-y) : y;
            have_pivot = true;
            return;
        }
        Integer gg, s, t;
        igcdext(gg, s, t, Y, y);
        Integer nx = s * X + t * x;
        Integer zero_x = (y / gg) * X - (Y / gg) * x;
        N = igcd(N, zero_x);
        X = nx;
        Y = gg;
    };
    for (auto const & g : gens) {
        if (g.d() != d)
            throw input_error("ideal generator from the wrong field");
        add(g);
        add(g * w);
    }
    if (N == 0 || !have_pivot)
        throw input_error("degenerate ideal basis (zero ideal)");
    return QuadIdeal(d, abs(N), X, Y);
}

std::vector<QuadFieldElem> QuadIdeal::basis() const
{
    QuadFieldElem w = QuadFieldElem::omega(d_);
    return {w.from_integer(n_), w.from_integer(b_) + w.from_integer(c_) * w};
}

QuadIdeal QuadIdeal::conj() const
{
    auto bs = basis();
    return from_generators(d_, {bs[0].conj(), bs[1].conj()});
}

QuadIdeal operator*(QuadIdeal const & x, QuadIdeal const & y)
{
    if (x.d_ != y.d_)
        throw input_error("ideal product across different fields");
    auto bx = x.basis();
    auto by = y.basis();
    std::vector<QuadFieldElem> gens;
    for (auto const & u : bx)
        for (auto const & v : by)
            gens.push_back(u * v);
    return QuadIdeal::from_generators(x.d_, gens);
}

QuadIdeal operator+(QuadIdeal const & x, QuadIdeal const & y)
{
    if (x.d_ != y.d_)
        throw input_error("ideal sum across different fields");
    auto gens = x.basis();
    for (auto const & v : y.basis())
        gens.push_back(v);
    return QuadIdeal::from_generators(x.d_, gens);
}

QuadIdeal QuadIdeal::pow(unsigned long e) const
{
    QuadIdeal acc = unit(d_);
    QuadIdeal base = *this;
    while (e) {
        if (e & 1)
            acc = acc * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return acc;
}

bool QuadIdeal::contains(QuadFieldElem const & alpha) const
{
    auto [x, y] = omega_coordinates(alpha);
    if (!mpz_divisible_p(y.get_mpz_t(), c_.get_mpz_t()))
        return false;
    Integer k = y / c_;
    Integer rest = x - k * b_;
    return mpz_divisible_p(rest.get_mpz_t(), n_.get_mpz_t()) != 0;
}

std::string QuadIdeal::to_string() const
{
    auto bs = basis();
    return "[" + bs[0].to_string() + ", " + bs[1].to_string() + "]";
}

QuadForm ideal_to_class(QuadIdeal const & I)
{
    Integer D = fundamental_discriminant(I.d());
    // I = c * (a Z + (s + omega) Z)
    if (!mpz_divisible_p(I.n().get_mpz_t(), I.c().get_mpz_t()) ||
        !mpz_divisible_p(I.b().get_mpz_t(), I.c().get_mpz_t()))
        throw input_error("not an O_L-ideal in Hermite form: " + I.to_string());
    Integer a = I.n() / I.c();
    Integer s = I.b() / I.c();
    QuadFieldElem w = QuadFieldElem::omega(I.d());
    Rat B = Rat(2) * (Rat(s) + w.a());
    if (!B.is_integer())
        throw computation_error("ideal_to_class: non-integral middle coefficient");
    Integer b = B.num();
    Integer num = b * b - D;
    if (!mpz_divisible_p(num.get_mpz_t(), Integer(4 * a).get_mpz_t()))
        throw input_error("not an O_L-ideal: " + I.to_string());
    return reduce_form({a, b, num / (4 * a)});
}

std::string to_string(Splitting s)
{
    switch (s) {
    case Splitting::split:
        return "split";
    case Splitting::inert:
        return "inert";
    case Splitting::ramified:
        return "ramified";
    }
    return "?";
}

PrimesAbove primes_above(Integer const & q, Integer const & d)
{
    if (!is_prime(q))
        throw input_error("primes_above needs a prime, got " + q.get_str());
    Integer D = fundamental_discriminant(d);
    check_discriminant(D);
    int k = kronecker(D, q);
    PrimesAbove out;
    if (k == -1) {
        out.splitting = Splitting::inert;
        out.ideals.emplace_back(d, q, 0, q);
        return out;
    }
    out.splitting = k == 0 ? Splitting::ramified : Splitting::split;
    Integer B;
    if (q == 2) {
        if (mpz_odd_p(D.get_mpz_t()))
            B = 1;
        else
            B = mod_pos(D, 16) == 8 ? 0 : 2;
    } else {
        B = sqrt_mod_prime(mod_pos(D, q), q);
        if (mod_pos(B, 2) != mod_pos(D, 2))
            B += q;
    }
    QuadFieldElem w = QuadFieldElem::omega(d);
    auto ideal_for = [&](Integer const & b) {
        // (b + sqrt D)/2 = (b - 2 Re(omega))/2 + omega
        Rat s = (Rat(b) - Rat(2) * w.a()) / Rat(2);
        return QuadIdeal(d, q, s.num(), 1);
    };
    out.ideals.push_back(ideal_for(B));
    if (k == 1)
        out.ideals.push_back(ideal_for(-B));
    return out;
}

} // namespace fermatinv
