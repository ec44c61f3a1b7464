#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fermatinv/modint.hpp"

namespace fermatinv {

/* F_{q^2} = F_q[t]/(t^2 - n) for a fixed non-residue n mod the odd prime q. */
class Fq2Elem
{
    std::int64_t q_ = 3;
    std::int64_t n_ = 2;
    std::int64_t a_ = 0;
    std::int64_t b_ = 0;

    void check_same(Fq2Elem const & o) const;
    std::int64_t mul(std::int64_t x, std::int64_t y) const
    {
        return static_cast<std::int64_t>(static_cast<__int128>(x) * y % q_);
    }

  public:
    Fq2Elem() = default;
    Fq2Elem(std::int64_t q, std::int64_t nonresidue, std::int64_t a, std::int64_t b);

    std::int64_t q() const { return q_; }
    std::int64_t nonresidue() const { return n_; }
    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    Fq2Elem zero() const { return {q_, n_, 0, 0}; }
    Fq2Elem one() const { return {q_, n_, 1, 0}; }
    Fq2Elem from_integer(Integer const & k) const;
    Fq2Elem from_base(ModInt const & x) const { return {q_, n_, x.residue(), 0}; }
    Fq2Elem generator_t() const { return {q_, n_, 0, 1}; }
    Fq2Elem frobenius() const { return {q_, n_, a_, b_ == 0 ? 0 : q_ - b_}; }
    Fq2Elem inverse() const;
    Fq2Elem pow(Integer e) const;

    Fq2Elem operator-() const;
    Fq2Elem & operator+=(Fq2Elem const & o);
    Fq2Elem & operator-=(Fq2Elem const & o);
    Fq2Elem & operator*=(Fq2Elem const & o);
    Fq2Elem & operator/=(Fq2Elem const & o) { return *this *= o.inverse(); }

    friend Fq2Elem operator+(Fq2Elem x, Fq2Elem const & y) { return x += y; }
    friend Fq2Elem operator-(Fq2Elem x, Fq2Elem const & y) { return x -= y; }
    friend Fq2Elem operator*(Fq2Elem x, Fq2Elem const & y) { return x *= y; }
    friend Fq2Elem operator/(Fq2Elem x, Fq2Elem const & y) { return x /= y; }
    friend bool operator==(Fq2Elem const & x, Fq2Elem const & y)
    {
        return x.q_ == y.q_ && x.n_ == y.n_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    std::string to_string() const;
};

/* Finite-field helpers, overloaded per element type. */
Integer field_size(ModInt const & proto);
Integer field_size(Fq2Elem const & proto);
std::int64_t field_characteristic(ModInt const & proto);
std::int64_t field_characteristic(Fq2Elem const & proto);
/* Element number i in a fixed enumeration, 0 <= i < field_size. */
ModInt field_element(ModInt const & proto, std::uint64_t i);
Fq2Elem field_element(Fq2Elem const & proto, std::uint64_t i);

std::optional<ModInt> field_sqrt(ModInt const & x);
std::optional<Fq2Elem> field_sqrt(Fq2Elem const & x);

} // namespace fermatinv
