#pragma once

#include <cstdint>
#include <string>

#include "fermatinv/integer.hpp"

namespace fermatinv {

/* Residue modulo m, 2 <= m < 2^62. Prime moduli give the field F_m. */
class ModInt
{
    std::int64_t r_ = 0;
    std::int64_t m_ = 2;

    static std::int64_t reduce(__int128 x, std::int64_t m)
    {
        __int128 r = x % m;
        return static_cast<std::int64_t>(r < 0 ? r + m : r);
    }
    void check_same(ModInt const & o) const;

  public:
    ModInt() = default;
    ModInt(std::int64_t value, std::int64_t modulus);
    ModInt(Integer const & value, std::int64_t modulus);

    std::int64_t residue() const { return r_; }
    std::int64_t modulus() const { return m_; }

    bool is_zero() const { return r_ == 0; }
    ModInt zero() const { return ModInt(0, m_); }
    ModInt one() const { return ModInt(1, m_); }
    ModInt from_integer(Integer const & n) const { return ModInt(n, m_); }
    ModInt inverse() const;
    ModInt pow(Integer e) const;

    ModInt operator-() const { return ModInt(r_ == 0 ? 0 : m_ - r_, m_); }
    ModInt & operator+=(ModInt const & o);
    ModInt & operator-=(ModInt const & o);
    ModInt & operator*=(ModInt const & o);
    ModInt & operator/=(ModInt const & o) { return *this *= o.inverse(); }

    friend ModInt operator+(ModInt a, ModInt const & b) { return a += b; }
    friend ModInt operator-(ModInt a, ModInt const & b) { return a -= b; }
    friend ModInt operator*(ModInt a, ModInt const & b) { return a *= b; }
    friend ModInt operator/(ModInt a, ModInt const & b) { return a /= b; }
    friend bool operator==(ModInt const & a, ModInt const & b)
    {
        return a.r_ == b.r_ && a.m_ == b.m_;
    }

    std::string to_string() const { return std::to_string(r_); }
};

} // namespace fermatinv
