#include <cstdlib>

#include "fermatinv/cycfield.hpp"
#include "fermatinv/errors.hpp"
#include "fermatinv/modint.hpp"
#include "fermatinv/quadfield.hpp"
#include "fermatinv/rational.hpp"

namespace fermatinv {

// ---- Rat

Rat::Rat(Integer const & num, Integer const & den)
{
    if (den == 0)
        throw input_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::parse(std::string const & s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rat(parse_integer(s));
    return Rat(parse_integer(s.substr(0, slash)), parse_integer(s.substr(slash + 1)));
}

Rat Rat::inverse() const
{
    if (is_zero())
        throw field_error("inverse of zero rational");
    return Rat(mpq_class(1 / v_));
}

Rat & Rat::operator/=(Rat const & o)
{
    if (o.is_zero())
        throw field_error("division by zero rational");
    v_ /= o.v_;
    return *this;
}

// ---- ModInt

ModInt::ModInt(std::int64_t value, std::int64_t modulus) : m_(modulus)
{
    if (modulus < 2 || modulus >= (std::int64_t(1) << 62))
        throw input_error("modulus out of range: " + std::to_string(modulus));
    r_ = reduce(value, modulus);
}

ModInt::ModInt(Integer const & value, std::int64_t modulus) : m_(modulus)
{
    if (modulus < 2 || modulus >= (std::int64_t(1) << 62))
        throw input_error("modulus out of range: " + std::to_string(modulus));
    Integer r = value % Integer(static_cast<long>(modulus));
    if (r < 0)
        r += static_cast<long>(modulus);
    r_ = r.get_si();
}

void ModInt::check_same(ModInt const & o) const
{
    if (m_ != o.m_)
        throw input_error("ModInt modulus mismatch");
}

ModInt & ModInt::operator+=(ModInt const & o)
{
    check_same(o);
    r_ += o.r_;
    if (r_ >= m_)
        r_ -= m_;
    return *this;
}

ModInt & ModInt::operator-=(ModInt const & o)
{
    check_same(o);
    r_ -= o.r_;
    if (r_ < 0)
        r_ += m_;
    return *this;
}

ModInt & ModInt::operator*=(ModInt const & o)
{
    check_same(o);
    r_ = reduce(static_cast<__int128>(r_) * o.r_, m_);
    return *this;
}

ModInt ModInt::inverse() const
{
    // extended Euclid on (r, m)
    std::int64_t a = r_, b = m_;
    std::int64_t x0 = 1, x1 = 0;
    while (b != 0) {
        std::int64_t q = a / b;
        std::int64_t t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    if (a != 1)
        throw field_error("residue " + std::to_string(r_) + " not invertible mod " + std::to_string(m_));
    return ModInt(x0, m_);
}

ModInt ModInt::pow(Integer e) const
{
    if (e < 0)
        return inverse().pow(-e);
    Integer r = pow_mod(Integer(static_cast<long>(r_)), e, Integer(static_cast<long>(m_)));
    return ModInt(r, m_);
}

// ---- QuadFieldElem

QuadFieldElem::QuadFieldElem(Integer d, Rat a, Rat b) : d_(std::move(d)), a_(std::move(a)), b_(std::move(b))
{
    if (d_ == 0 || d_ == 1)
        throw input_error("quadratic field parameter must be squarefree and != 0, 1");
    // full factoring here would dominate every arithmetic path; small squares only
    for (unsigned long q : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul})
        if (mpz_divisible_ui_p(d_.get_mpz_t(), q * q))
            throw input_error("quadratic field parameter " + d_.get_str() + " is not squarefree");
}

QuadFieldElem QuadFieldElem::omega(Integer const & d)
{
    Integer r = d % 4;
    if (r < 0)
        r += 4;
    if (r == 1)
        return {d, Rat(d, 2), Rat(1, 2)};
    return {d, Rat(), Rat(1)};
}

void QuadFieldElem::check_same(QuadFieldElem const & o) const
{
    if (d_ != o.d_)
        throw input_error("quadratic field mismatch: sqrt(" + d_.get_str() + ") vs sqrt(" + o.d_.get_str() + ")");
}

QuadFieldElem & QuadFieldElem::operator+=(QuadFieldElem const & o)
{
    check_same(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadFieldElem & QuadFieldElem::operator-=(QuadFieldElem const & o)
{
    check_same(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadFieldElem & QuadFieldElem::operator*=(QuadFieldElem const & o)
{
    check_same(o);
    Rat na = a_ * o.a_ + Rat(d_) * b_ * o.b_;
    Rat nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

QuadFieldElem QuadFieldElem::inverse() const
{
    Rat n = norm();
    if (n.is_zero())
        throw field_error("inverse of zero in Q(sqrt(" + d_.get_str() + "))");
    return {d_, a_ / n, -b_ / n};
}

bool QuadFieldElem::is_integral() const
{
    // integral iff trace and norm are integers
    return trace().is_integer() && norm().is_integer();
}

std::string QuadFieldElem::to_string() const
{
    if (b_.is_zero())
        return a_.to_string();
    std::string r = "sqrt(" + d_.get_str() + ")";
    if (b_ == Rat(1))
        ;
    else if (b_ == Rat(-1))
        r = "-" + r;
    else
        r = b_.to_string() + "*" + r;
    if (a_.is_zero())
        return r;
    return a_.to_string() + (b_.sign() > 0 ? "+" : "") + r;
}

NormTrace quad_norm_trace(QuadFieldElem const & x)
{
    return {x.norm(), x.trace()};
}

// ---- CycFieldElem

namespace {

void check_cyc_prime(int p)
{
    if (p < 3 || !is_prime(Integer(p)))
        throw input_error("cyclotomic field needs an odd prime, got " + std::to_string(p));
}

} // namespace

CycFieldElem::CycFieldElem(int p, std::vector<Rat> coeffs) : p_(p), c_(std::move(coeffs))
{
    check_cyc_prime(p);
    if (c_.size() != static_cast<std::size_t>(p - 1))
        throw input_error("cyclotomic element needs p-1 coefficients");
}

CycFieldElem::CycFieldElem(int p, Rat const & r) : p_(p), c_(static_cast<std::size_t>(p - 1))
{
    check_cyc_prime(p);
    c_[0] = r;
}

CycFieldElem CycFieldElem::zeta_pow(int p, long k)
{
    std::vector<Rat> v(static_cast<std::size_t>(p));
    long e = ((k % p) + p) % p;
    v[static_cast<std::size_t>(e)] = Rat(1);
    return from_cyclic(p, std::move(v));
}

CycFieldElem CycFieldElem::from_cyclic(int p, std::vector<Rat> v)
{
    // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
    Rat top = v[static_cast<std::size_t>(p - 1)];
    v.pop_back();
    if (!top.is_zero())
        for (auto & x : v)
            x -= top;
    return CycFieldElem(p, std::move(v));
}

std::vector<Rat> CycFieldElem::cyclic() const
{
    std::vector<Rat> v = c_;
    v.emplace_back();
    return v;
}

void CycFieldElem::check_same(CycFieldElem const & o) const
{
    if (p_ != o.p_)
        throw input_error("cyclotomic field mismatch");
}

bool CycFieldElem::is_zero() const
{
    for (auto const & x : c_)
        if (!x.is_zero())
            return false;
    return true;
}

bool CycFieldElem::is_rational() const
{
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero())
            return false;
    return true;
}

CycFieldElem CycFieldElem::galois(long a) const
{
    long am = ((a % p_) + p_) % p_;
    if (am == 0)
        throw input_error("galois exponent must be coprime to p");
    std::vector<Rat> src = cyclic();
    std::vector<Rat> dst(static_cast<std::size_t>(p_));
    for (long i = 0; i < p_; ++i)
        dst[static_cast<std::size_t>(i * am % p_)] += src[static_cast<std::size_t>(i)];
    return from_cyclic(p_, std::move(dst));
}

CycFieldElem CycFieldElem::operator-() const
{
    CycFieldElem r = *this;
    for (auto & x : r.c_)
        x = -x;
    return r;
}

CycFieldElem & CycFieldElem::operator+=(CycFieldElem const & o)
{
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

CycFieldElem & CycFieldElem::operator-=(CycFieldElem const & o)
{
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] -= o.c_[i];
    return *this;
}

CycFieldElem & CycFieldElem::operator*=(CycFieldElem const & o)
{
    check_same(o);
    auto const p = static_cast<std::size_t>(p_);
    std::vector<Rat> v(p);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (!o.c_[j].is_zero())
                v[(i + j) % p] += c_[i] * o.c_[j];
    }
    *this = from_cyclic(p_, std::move(v));
    return *this;
}

CycFieldElem CycFieldElem::inverse() const
{
    if (is_zero())
        throw field_error("inverse of zero in Q(zeta_" + std::to_string(p_) + ")");
    // x^{-1} = (product of the nontrivial conjugates) / N(x)
    CycFieldElem prod = one();
    for (long a = 2; a < p_; ++a)
        prod *= galois(a);
    CycFieldElem n = prod * *this;
    if (!n.is_rational())
        throw field_error("norm computation did not land in Q");
    Rat inv = n.c_[0].inverse();
    for (auto & x : prod.c_)
        x *= inv;
    return prod;
}

std::string CycFieldElem::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        std::string term = c_[i].to_string();
        if (i > 0)
            term += "*z^" + std::to_string(i);
        if (!s.empty() && c_[i].sign() > 0)
            s += "+";
        s += term;
    }
    return s.empty() ? "0" : s;
}

CycFieldElem cyc_mul(CycFieldElem const & x, CycFieldElem const & y)
{
    return x * y;
}

Rat cyc_norm(CycFieldElem const & x)
{
    CycFieldElem prod = x;
    for (long a = 2; a < x.p(); ++a)
        prod *= x.galois(a);
    if (!prod.is_rational())
        throw field_error("cyclotomic norm not rational");
    return prod.coeffs()[0];
}

} // namespace fermatinv
