#pragma once

#include <compare>
#include <functional>
#include <string>

#include "fermatinv/integer.hpp"

namespace fermatinv {

/* Exact rational, always in lowest terms with positive denominator. */
class Rat
{
    mpq_class v_;

  public:
    Rat() = default;
    Rat(long n) : v_(n) {}
    Rat(Integer const & n) : v_(n) {}
    Rat(Integer const & num, Integer const & den);
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /* Accepts "n" or "n/d". */
    static Rat parse(std::string const & s);

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }
    mpq_class const & value() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat zero() const { return Rat(); }
    Rat one() const { return Rat(1); }
    Rat from_integer(Integer const & n) const { return Rat(n); }
    Rat inverse() const;

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat & operator+=(Rat const & o) { v_ += o.v_; return *this; }
    Rat & operator-=(Rat const & o) { v_ -= o.v_; return *this; }
    Rat & operator*=(Rat const & o) { v_ *= o.v_; return *this; }
    Rat & operator/=(Rat const & o);

    friend Rat operator+(Rat a, Rat const & b) { return a += b; }
    friend Rat operator-(Rat a, Rat const & b) { return a -= b; }
    friend Rat operator*(Rat a, Rat const & b) { return a *= b; }
    friend Rat operator/(Rat a, Rat const & b) { return a /= b; }

    friend bool operator==(Rat const & a, Rat const & b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(Rat const & a, Rat const & b)
    {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /* "n" for integers, "n/d" otherwise. */
    std::string to_string() const { return v_.get_str(); }
};

} // namespace fermatinv
