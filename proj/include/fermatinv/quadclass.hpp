#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "fermatinv/quadfield.hpp"

namespace fermatinv {

/* Positive definite binary quadratic form a x^2 + b xy + c y^2. */
struct QuadForm
{
    Integer a, b, c;

    Integer discriminant() const { return b * b - 4 * a * c; }
    /* -a < b <= a <= c, and b >= 0 when a == c. */
    bool is_reduced() const;
    friend bool operator==(QuadForm const &, QuadForm const &) = default;
    friend std::strong_ordering operator<=>(QuadForm const & x, QuadForm const & y);
    std::string to_string() const;
};

/* Field discriminant of Q(sqrt d), d squarefree. */
Integer fundamental_discriminant(Integer const & d);
void check_discriminant(Integer const & D);

QuadForm principal_form(Integer const & D);
QuadForm opposite(QuadForm const & F);
QuadForm reduce_form(QuadForm const & F);
/* Reduced composite (Cohen, Algorithm 5.4.7 followed by reduction). */
QuadForm compose(QuadForm const & F1, QuadForm const & F2);
QuadForm form_pow(QuadForm const & F, Integer n);

struct ClassGroupOptions
{
    /* Largest |D| accepted. */
    Integer max_abs_disc{"100000000000"};
    /* Structure and generators are computed only when h is at most this. */
    std::uint64_t structure_limit = 5000;
};

struct ClassGroup
{
    Integer D;
    std::vector<QuadForm> forms; // reduced, primitive, sorted
    Integer h;
    bool structure_computed = false;
    std::vector<Integer> structure;   // invariant factors, each dividing the next
    std::vector<QuadForm> generators; // greedy generating set
};

/* Enumerates reduced primitive forms of discriminant D < 0. */
ClassGroup class_group(Integer const & D, ClassGroupOptions const & opt = {});

/* Invariant factors and a generating set, from element orders. */
void compute_structure(ClassGroup & cg);

/* Order of F in the form class group. */
Integer form_order(QuadForm const & F, Integer const & h);

/* The subgroup generated by `gens`, by closure under composition. */
std::set<QuadForm> generated_subgroup(std::vector<QuadForm> const & gens, Integer const & D);

struct SQuotient
{
    std::set<QuadForm> subgroup; // H = <classes of S>
    Integer order;               // h / |H|

    bool is_trivial(QuadForm const & F) const { return subgroup.count(reduce_form(F)) > 0; }
    /* Order of the image of F in Cl / H. */
    Integer order_of(QuadForm const & F) const;
};

SQuotient s_class_group(ClassGroup const & cg, std::vector<QuadForm> const & S_classes);

// ---- ideals of the maximal order

/*
 * Integral ideal n Z + (b + c omega) Z of the maximal order of Q(sqrt d) in
 * Hermite normal form: n, c > 0, 0 <= b < n, c | n, c | b; omega is
 * QuadFieldElem::omega(d).
 */
class QuadIdeal
{
    Integer d_;
    Integer n_, b_, c_;

  public:
    QuadIdeal(Integer d, Integer n, Integer b, Integer c);

    /* O_L-module generated by the given integral elements. */
    static QuadIdeal from_generators(Integer const & d, std::vector<QuadFieldElem> const & gens);
    static QuadIdeal principal(QuadFieldElem const & alpha) { return from_generators(alpha.d(), {alpha}); }
    static QuadIdeal unit(Integer const & d) { return QuadIdeal(d, 1, 0, 1); }

    Integer const & d() const { return d_; }
    Integer const & n() const { return n_; }
    Integer const & b() const { return b_; }
    Integer const & c() const { return c_; }
    Integer norm() const { return n_ * c_; }
    /* The two Z-basis elements n and b + c omega. */
    std::vector<QuadFieldElem> basis() const;
    bool is_unit() const { return n_ == 1 && c_ == 1; }

    QuadIdeal conj() const;
    QuadIdeal pow(unsigned long e) const;
    /* True iff alpha (integral) lies in the ideal. */
    bool contains(QuadFieldElem const & alpha) const;

    friend QuadIdeal operator*(QuadIdeal const & x, QuadIdeal const & y);
    friend QuadIdeal operator+(QuadIdeal const & x, QuadIdeal const & y);
    friend bool operator==(QuadIdeal const &, QuadIdeal const &) = default;
    std::string to_string() const;
};

/* Integer coordinates of an integral element in the basis (1, omega). */
std::pair<Integer, Integer> omega_coordinates(QuadFieldElem const & x);

/* Class of I as a reduced form; aZ + ((b + sqrt D)/2)Z maps to (a, b, c). */
QuadForm ideal_to_class(QuadIdeal const & I);

enum class Splitting
{
    split,
    inert,
    ramified,
};

std::string to_string(Splitting s);

struct PrimesAbove
{
    Splitting splitting;
    std::vector<QuadIdeal> ideals; // two for split, one otherwise
};

/* Primes of Q(sqrt d) above the rational prime q, decided by (D/q). */
PrimesAbove primes_above(Integer const & q, Integer const & d);

} // namespace fermatinv
