#pragma once

#include <concepts>
#include <string>

#include "fermatinv/integer.hpp"

namespace fermatinv {

/*
 * Contract shared by every coefficient field (Rat, ModInt, Fq2Elem,
 * QuadFieldElem, CycFieldElem). Elements carry their own field parameters,
 * so zero(), one() and from_integer() build elements of the same field.
 */
template <typename F>
concept ExactField = std::regular<F> && requires(F const & a, F const & b, Integer const & n) {
    { a + b } -> std::same_as<F>;
    { a - b } -> std::same_as<F>;
    { a * b } -> std::same_as<F>;
    { a / b } -> std::same_as<F>;
    { -a } -> std::same_as<F>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.zero() } -> std::same_as<F>;
    { a.one() } -> std::same_as<F>;
    { a.from_integer(n) } -> std::same_as<F>;
    { a.inverse() } -> std::same_as<F>;
    { a.to_string() } -> std::same_as<std::string>;
};

} // namespace fermatinv
