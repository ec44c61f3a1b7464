#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fermatinv/errors.hpp"
#include "fermatinv/field.hpp"

namespace fermatinv {

/*
 * Dense univariate polynomial over an exact field. c_[i] is the coefficient
 * of X^i; trailing zeros are always stripped, so the zero polynomial has no
 * coefficients and degree -1. A zero element is kept so the polynomial
 * knows its field even when empty.
 */
template <ExactField F>
class Poly
{
    F zero_;
    std::vector<F> c_;

    void normalize()
    {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

  public:
    explicit Poly(F const & any) : zero_(any.zero()) {}
    Poly(F const & any, std::vector<F> coeffs) : zero_(any.zero()), c_(std::move(coeffs)) { normalize(); }

    static Poly constant(F const & a) { return Poly(a, {a}); }
    /* a X^k */
    static Poly monomial(F const & a, std::size_t k)
    {
        std::vector<F> v(k + 1, a.zero());
        v[k] = a;
        return Poly(a, std::move(v));
    }
    static Poly x_minus(F const & a) { return Poly(a, {-a, a.one()}); }

    F const & field_zero() const { return zero_; }
    F field_one() const { return zero_.one(); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == zero_.one(); }
    std::vector<F> const & coeffs() const { return c_; }
    F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
    F leading() const { return c_.empty() ? zero_ : c_.back(); }

    F operator()(F const & x) const
    {
        F r = zero_;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = r * x + *it;
        return r;
    }

    Poly monic() const
    {
        if (c_.empty())
            return *this;
        F inv = c_.back().inverse();
        Poly r = *this;
        for (auto & a : r.c_)
            a = a * inv;
        return r;
    }

    Poly derivative() const
    {
        std::vector<F> v;
        for (std::size_t i = 1; i < c_.size(); ++i)
            v.push_back(c_[i] * zero_.from_integer(Integer(static_cast<unsigned long>(i))));
        return Poly(zero_, std::move(v));
    }

    /* Apply a coefficientwise map that keeps the field. */
    template <typename Fn>
    Poly map_coeffs(Fn fn) const
    {
        std::vector<F> v;
        v.reserve(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i)
            v.push_back(fn(c_[i], i));
        return Poly(zero_, std::move(v));
    }

    Poly operator-() const
    {
        return map_coeffs([](F const & a, std::size_t) { return -a; });
    }

    Poly & operator+=(Poly const & o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), zero_);
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] = c_[i] + o.c_[i];
        normalize();
        return *this;
    }

    Poly & operator-=(Poly const & o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), zero_);
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] = c_[i] - o.c_[i];
        normalize();
        return *this;
    }

    friend Poly operator*(Poly const & a, Poly const & b)
    {
        if (a.c_.empty() || b.c_.empty())
            return Poly(a.zero_);
        std::vector<F> v(a.c_.size() + b.c_.size() - 1, a.zero_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(a.zero_, std::move(v));
    }

    friend Poly operator*(F const & s, Poly const & a)
    {
        return a.map_coeffs([&](F const & x, std::size_t) { return s * x; });
    }

    Poly & operator*=(Poly const & o) { return *this = *this * o; }
    friend Poly operator+(Poly a, Poly const & b) { return a += b; }
    friend Poly operator-(Poly a, Poly const & b) { return a -= b; }
    friend bool operator==(Poly const & a, Poly const & b) { return a.c_ == b.c_; }

    /* Euclidean division; returns (quotient, remainder). */
    std::pair<Poly, Poly> divmod(Poly const & d) const
    {
        if (d.is_zero())
            throw field_error("polynomial division by zero");
        Poly q(zero_);
        Poly r = *this;
        if (r.degree() < d.degree())
            return {q, r};
        q.c_.assign(static_cast<std::size_t>(r.degree() - d.degree() + 1), zero_);
        F inv = d.leading().inverse();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            auto shift = static_cast<std::size_t>(r.degree() - d.degree());
            F t = r.leading() * inv;
            q.c_[shift] = t;
            for (std::size_t i = 0; i < d.c_.size(); ++i)
                r.c_[i + shift] = r.c_[i + shift] - t * d.c_[i];
            r.c_.pop_back(); // leading term cancels exactly
            r.normalize();
        }
        q.normalize();
        return {q, r};
    }

    friend Poly operator/(Poly const & a, Poly const & b) { return a.divmod(b).first; }
    friend Poly operator%(Poly const & a, Poly const & b) { return a.divmod(b).second; }

    std::vector<std::string> to_strings() const
    {
        std::vector<std::string> out;
        for (auto const & a : c_)
            out.push_back(a.to_string());
        return out;
    }

    std::string to_string(std::string const & var = "X") const
    {
        if (c_.empty())
            return "0";
        std::string s;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k].is_zero())
                continue;
            std::string a = c_[k].to_string();
            bool compound = a.find_first_of("+*", 0) != std::string::npos || a.find('-', 1) != std::string::npos;
            std::string term;
            if (k == 0)
                term = compound && !s.empty() ? "(" + a + ")" : a;
            else {
                std::string mono = var + (k > 1 ? "^" + std::to_string(k) : "");
                if (a == "1")
                    term = mono;
                else if (a == "-1")
                    term = "-" + mono;
                else
                    term = (compound ? "(" + a + ")" : a) + "*" + mono;
            }
            if (s.empty())
                s = term;
            else if (term[0] == '-')
                s += " - " + term.substr(1);
            else
                s += " + " + term;
        }
        return s;
    }
};

/* Monic gcd. */
template <ExactField F>
Poly<F> gcd(Poly<F> a, Poly<F> b)
{
    while (!b.is_zero()) {
        Poly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <ExactField F>
struct Xgcd
{
    Poly<F> g; // monic
    Poly<F> s;
    Poly<F> t; // s a + t b = g
};

template <ExactField F>
Xgcd<F> xgcd(Poly<F> const & a, Poly<F> const & b)
{
    F z = a.field_zero();
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0 = Poly<F>::constant(z.one()), s1(z);
    Poly<F> t0(z), t1 = Poly<F>::constant(z.one());
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<F> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly<F> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero())
        return {r0, s0, t0};
    F inv = r0.leading().inverse();
    return {inv * r0, inv * s0, inv * t0};
}

/* base^e mod m, e >= 0. */
template <ExactField F>
Poly<F> powmod(Poly<F> base, Integer e, Poly<F> const & m)
{
    Poly<F> r = Poly<F>::constant(m.field_one()) % m;
    base = base % m;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            r = (r * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return r;
}

template <ExactField F>
bool is_squarefree(Poly<F> const & f)
{
    return gcd(f, f.derivative()).degree() == 0;
}

} // namespace fermatinv
