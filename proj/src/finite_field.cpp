#include "fermatinv/finite_field.hpp"

#include "fermatinv/errors.hpp"

namespace fermatinv {

Fq2Elem::Fq2Elem(std::int64_t q, std::int64_t nonresidue, std::int64_t a, std::int64_t b)
    : q_(q), n_(((nonresidue % q) + q) % q), a_(((a % q) + q) % q), b_(((b % q) + q) % q)
{
    if (q < 3 || q > (std::int64_t(1) << 31))
        throw input_error("F_{q^2}: q out of range");
}

void Fq2Elem::check_same(Fq2Elem const & o) const
{
    if (q_ != o.q_ || n_ != o.n_)
        throw input_error("F_{q^2} field mismatch");
}

Fq2Elem Fq2Elem::from_integer(Integer const & k) const
{
    ModInt x(k, q_);
    return {q_, n_, x.residue(), 0};
}

Fq2Elem Fq2Elem::operator-() const
{
    return {q_, n_, a_ == 0 ? 0 : q_ - a_, b_ == 0 ? 0 : q_ - b_};
}

Fq2Elem & Fq2Elem::operator+=(Fq2Elem const & o)
{
    check_same(o);
    a_ = (a_ + o.a_) % q_;
    b_ = (b_ + o.b_) % q_;
    return *this;
}

Fq2Elem & Fq2Elem::operator-=(Fq2Elem const & o)
{
    check_same(o);
    a_ = (a_ - o.a_ + q_) % q_;
    b_ = (b_ - o.b_ + q_) % q_;
    return *this;
}

Fq2Elem & Fq2Elem::operator*=(Fq2Elem const & o)
{
    check_same(o);
    std::int64_t na = (mul(a_, o.a_) + mul(mul(b_, o.b_), n_)) % q_;
    std::int64_t nb = (mul(a_, o.b_) + mul(b_, o.a_)) % q_;
    a_ = na;
    b_ = nb;
    return *this;
}

Fq2Elem Fq2Elem::inverse() const
{
    // (a + bt)^{-1} = (a - bt) / (a^2 - n b^2)
    std::int64_t norm = (mul(a_, a_) - mul(mul(b_, b_), n_) + q_) % q_;
    if (norm == 0)
        throw field_error("inverse of zero in F_{q^2}");
    std::int64_t inv = ModInt(norm, q_).inverse().residue();
    return {q_, n_, mul(a_, inv), mul(q_ - b_, inv)};
}

Fq2Elem Fq2Elem::pow(Integer e) const
{
    if (e < 0)
        return inverse().pow(-e);
    Fq2Elem r = one();
    Fq2Elem b = *this;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string Fq2Elem::to_string() const
{
    return std::to_string(a_) + "+" + std::to_string(b_) + "*t";
}

Integer field_size(ModInt const & proto)
{
    return Integer(static_cast<long>(proto.modulus()));
}

Integer field_size(Fq2Elem const & proto)
{
    return Integer(static_cast<long>(proto.q())) * static_cast<long>(proto.q());
}

std::int64_t field_characteristic(ModInt const & proto)
{
    return proto.modulus();
}

std::int64_t field_characteristic(Fq2Elem const & proto)
{
    return proto.q();
}

ModInt field_element(ModInt const & proto, std::uint64_t i)
{
    return ModInt(static_cast<std::int64_t>(i), proto.modulus());
}

Fq2Elem field_element(Fq2Elem const & proto, std::uint64_t i)
{
    auto q = static_cast<std::uint64_t>(proto.q());
    return {proto.q(), proto.nonresidue(), static_cast<std::int64_t>(i % q),
            static_cast<std::int64_t>(i / q)};
}

std::optional<ModInt> field_sqrt(ModInt const & x)
{
    Integer q(static_cast<long>(x.modulus()));
    if (x.is_zero())
        return x;
    if (kronecker(Integer(static_cast<long>(x.residue())), q) != 1)
        return std::nullopt;
    return ModInt(sqrt_mod_prime(Integer(static_cast<long>(x.residue())), q), x.modulus());
}

std::optional<Fq2Elem> field_sqrt(Fq2Elem const & x)
{
    if (x.is_zero())
        return x;
    Integer q(static_cast<long>(x.q()));
    Integer order = q * q - 1;
    if (x.pow(order / 2) != x.one())
        return std::nullopt;
    // Tonelli-Shanks in the cyclic group F_{q^2}^*
    Integer s = order;
    unsigned e = 0;
    while (mpz_even_p(s.get_mpz_t())) {
        s /= 2;
        ++e;
    }
    Fq2Elem z = x.generator_t();
    for (std::uint64_t i = 1;; ++i) {
        z = field_element(x, i);
        if (!z.is_zero() && z.pow(order / 2) != z.one())
            break;
    }
    Fq2Elem r = x.pow((s + 1) / 2);
    Fq2Elem b = x.pow(s);
    Fq2Elem g = z.pow(s);
    unsigned m = e;
    while (b != b.one()) {
        unsigned k = 0;
        Fq2Elem t = b;
        while (t != t.one()) {
            t *= t;
            ++k;
        }
        Fq2Elem gs = g.pow(Integer(1) << (m - k - 1));
        r *= gs;
        g = gs * gs;
        b *= g;
        m = k;
    }
    return r;
}

} // namespace fermatinv
