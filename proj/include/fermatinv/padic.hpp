#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fermatinv/integer.hpp"

namespace fermatinv {

/* Integer polynomial, coefficients lowest degree first. */
struct IntPoly
{
    std::vector<Integer> coeffs;

    Integer operator()(Integer const & x) const;
    IntPoly derivative() const;
    int degree() const;
};

/* The coset value + p^precision Z_p. */
struct PadicApprox
{
    Integer p;
    unsigned precision = 1;
    Integer value;

    PadicApprox() = default;
    PadicApprox(Integer p, unsigned precision, Integer const & v);
    Integer modulus() const;
};

/*
 * Newton lift of a simple-enough root: needs v_p(f(x)) >= 2k+1 with
 * k = v_p(f'(x)). The representative x0.value is tried first; if it fails,
 * the other lifts of the coset modulo p^(2k+1) are searched, keeping k. Each
 * Newton step roughly doubles the precision and the iteration stops at
 * `target_precision` exactly.
 */
PadicApprox hensel_lift(IntPoly const & f, PadicApprox const & x0, unsigned target_precision);

/* l^(p-1) == 1 mod p^2. Both arguments must be distinct primes. */
bool is_wieferich_pair(Integer const & l, Integer const & p);

/* Primes p <= bound, p != l, with l^(p-1) == 1 mod p^2, ascending. */
std::vector<std::uint64_t> wieferich_scan(std::uint64_t l, std::uint64_t bound);

enum class ShapeInL
{
    split_shape,      // p O_L = s t^(p-1)
    totally_ramified,
};

struct RamificationReport
{
    Integer p;
    Integer l;
    bool wieferich = false;
    bool p_unramified_in_N = false;
    ShapeInL shape_in_L = ShapeInL::totally_ramified;
    Integer num_primes_above_p_in_N;
};

/* Decides everything from the single congruence l^(p-1) mod p^2. */
RamificationReport ramification_report(Integer const & p, Integer const & l);

enum class GoodReductionField
{
    K,                  // Q(zeta_p)
    K_adjoin_2_root_p,  // Q(zeta_p, 2^(1/p))
};

GoodReductionField good_reduction_field(Integer const & p);

std::string to_string(ShapeInL s);
std::string to_string(GoodReductionField f);

} // namespace fermatinv
