#pragma once

#include <optional>
#include <vector>

#include "fermatinv/cycfield.hpp"

namespace fermatinv {

/* Real cyclotomic unit prod xi_a^(e_a), a = 2..(p-1)/2, where
 * xi_a = zeta^((1-a)/2) (1 - zeta^a)/(1 - zeta), exponent taken mod p. */
struct CyclotomicUnit
{
    int p = 5;
    std::vector<Integer> expvec; // length (p-3)/2
    CycFieldElem element;
};

/* xi_a as a field element. */
CycFieldElem cyclotomic_xi(int p, int a);

/* Realizes the product of generator powers. */
CyclotomicUnit cyclotomic_unit(int p, std::vector<Integer> expvec);

std::vector<CyclotomicUnit> cyclotomic_unit_generators(int p);

struct KummerEquivalence
{
    long k;                      // beta = gamma^p alpha^k
    std::vector<Integer> gamma;  // exponent vector of gamma
};

/* Solves expvec(beta) = k expvec(alpha) mod p for k in 1..p-1. Works on
 * exponent vectors, assuming the generators independent mod p-th powers. */
std::optional<KummerEquivalence> kummer_equivalent(std::vector<Integer> const & alpha,
                                                   std::vector<Integer> const & beta, int p);
std::optional<KummerEquivalence> kummer_equivalent(CyclotomicUnit const & alpha, CyclotomicUnit const & beta);

struct KummerSubextensionCount
{
    int p;
    int t;
    Integer n_p;
};

/* t = (p-3)/2 holds under Vandiver's conjecture; without the flag t is not
 * computed and vandiver_not_assumed is thrown. */
KummerSubextensionCount subextension_count(int p, bool vandiver_assumed);

/* Classes of nonzero vectors of F_p^t under Kummer equivalence, by
 * exhaustive enumeration. */
Integer count_kummer_classes(int p, int t);

/* B_0 .. B_max from sum_{j<=m} C(m+1, j) B_j = 0; max <= 200. */
std::vector<Rat> bernoulli_numbers_exact(int max_index);

struct IrregularityReport
{
    int p;
    bool irregular;
    std::vector<int> witnesses; // even k in [2, p-3] with p | num(B_k)
};

/* Kummer's criterion, exact; cross-checked against the recurrence mod p. */
IrregularityReport irregularity(int p);

} // namespace fermatinv
