#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fermatinv/jacobian.hpp"
#include "fermatinv/quadclass.hpp"

namespace fermatinv {

/*
 * Point of y^p = x(1-x) over L = Q(sqrt d) with y = -u, u < 0:
 * 4u^p + 1 = m^2 d and x0 = (1 + m sqrt d)/2, so x0 (1 - x0) = (-u)^p.
 */
struct PointCandidate
{
    int p = 5;
    Integer u;
    Integer d_raw;
    Integer m;
    Integer d; // squarefree, = 1 mod 4, negative
    Integer D; // field discriminant (= d)
    QuadFieldElem x0;
    bool degenerate = false; // d = -3: extra roots of unity in L

    /* (x, y) on the plane model. */
    AffinePoint<QuadFieldElem> point() const;
    /* [P - P_inf] on v^2 = u^p + 1/4: (X - u, m sqrt(d)/2). */
    MumfordDivisor<QuadFieldElem> divisor() const;
};

PointCandidate make_candidate(int p, Integer const & u, std::uint64_t factor_bound = default_factor_bound);

/* The ideal a = (u, x0), checked against a^p = (x0). */
QuadIdeal divide_ideal(PointCandidate const & c);

struct PsiOptions
{
    ClassGroupOptions class_group;
    FiniteFieldCountOptions count;
    bool certify = true;
    /* Number of small primes tried for the non-torsion certificate. */
    int certificate_primes = 8;
};

struct InvariantReport
{
    PointCandidate candidate;
    QuadIdeal a = QuadIdeal::unit(-1);
    bool a_power_verified = false; // a^p == (x0) as Hermite bases
    QuadForm class_of_a;
    ClassGroup class_group;
    Splitting p_splitting = Splitting::inert;
    std::vector<QuadForm> s_classes;
    Integer s_quotient_order;
    Integer c_order;
    std::vector<Integer> psi_tuple_orders; // orders of c^0 .. c^(p-1) in the S-quotient
    bool nonvanishing = false;
    std::optional<NonTorsionCertificate> certificate;

    OrderVerdict infinite_order() const
    {
        return certificate ? certificate->verdict : OrderVerdict::inconclusive;
    }
};

InvariantReport psi(PointCandidate const & c, PsiOptions const & opt = {});

/* Tries pairs of small good primes until the orders are incompatible;
 * returns the last attempt otherwise (nullopt if fewer than two primes fit). */
std::optional<NonTorsionCertificate> find_certificate(PointCandidate const & c, PsiOptions const & opt = {});

struct SearchOutcome
{
    Integer u;
    std::optional<InvariantReport> report; // set when computed
    std::string skipped;                   // reason when not computed
};

struct SearchSummary
{
    unsigned long tested = 0; // candidates examined, skipped ones included
    unsigned long witnesses = 0;
    unsigned long skipped = 0;
    std::vector<Integer> distinct_d;
};

struct SearchOptions
{
    int p = 5;
    Integer umin = -50;
    Integer umax = -2;
    /* Restart point: only u with |u| >= |resume_from| are examined. */
    std::optional<Integer> resume_from;
    unsigned workers = 1;
    std::uint64_t factor_bound = default_factor_bound;
    PsiOptions psi;
};

/*
 * Runs psi on u = umax, umax - 1, ..., umin. Every outcome is passed to
 * `sink` in that order (increasing |u|) regardless of worker count;
 * certificates are attached to nonvanishing reports only.
 */
SearchSummary search_nonvanishing(SearchOptions const & opt, std::function<void(SearchOutcome const &)> const & sink);

} // namespace fermatinv
