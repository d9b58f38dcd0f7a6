#pragma once

#include "kummer/intmatrix.hpp"
#include "kummer/qpoly.hpp"
#include "kummer/ratfunc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kummer {

// A rationally parametrised curve t -> (b_1(t), ..., b_k(t)) inside the
// k-dimensional multiplicative torus. Coordinates are nonzero rational
// functions in lowest terms; an all-constant tuple (a point) is permitted
// and reported non-free.
class TorusCurve {
public:
    explicit TorusCurve(std::vector<QRatFunc> coords);

    std::size_t dimension() const { return coords_.size(); }
    const std::vector<QRatFunc>& coords() const { return coords_; }
    const QRatFunc& coord(std::size_t i) const { return coords_[i]; }

private:
    std::vector<QRatFunc> coords_;
};

// Exponents of the coordinates over a gcd-free basis of finite places.
// exponents[i][j] is the order of basis[j] in coordinate i (numerator
// positive, denominator negative); prod_j basis[j]^M[i][j] equals coordinate
// i up to a nonzero rational scalar. The place at infinity is omitted: its
// order is forced by the finite ones (divisors of degree zero), and scalars
// are absorbed because every constant is an n-th power over the algebraic
// closure.
struct ValuationMatrix {
    std::vector<QPoly> basis;
    IntMatrix exponents;

    ValuationMatrix() : exponents(0, 0) {}
};

ValuationMatrix valuation_matrix(const TorusCurve& x);

// Structure of the finite quotients cut out by the curve's multiplicative
// relations: elementary divisors d_1 | ... | d_k of the valuation matrix and
// everything derived from them.
struct KummerReport {
    std::size_t k = 0;
    std::vector<Integer> divisors;          // length k, zeros trailing
    bool free = false;                      // all divisors nonzero
    std::optional<Integer> index;           // prod d_i; empty iff not free
    std::optional<Integer> exponent;        // d_k when free
    std::vector<Integer> obstruction_primes; // prime divisors of d_k when free
    bool kummer_generic = false;            // free and d_k == 1
    std::optional<Integer> stabilizing_level; // = exponent when free

    friend bool operator==(const KummerReport&, const KummerReport&) = default;
};

KummerReport analyze(const TorusCurve& x);

// Freeness through the valuation matrix: full row rank means no nonzero
// integer vector a with prod coords_i^{a_i} constant.
bool is_free_rank(const TorusCurve& x);

// Independent route: the coordinates' logarithmic derivatives are linearly
// independent over the constants iff the summation map is dominant. Decided
// by exact linear algebra on coefficient vectors, no integer matrices.
bool is_free_alternant(const TorusCurve& x);

// n >= 1; true iff gcd(d_i, n) = 1 for all i.
bool is_n_kummer_generic(const KummerReport& r, const Integer& n);

// true iff free and d_k = 1.
bool is_kummer_generic(const KummerReport& r);

// Number of irreducible components of the degree-n isogeny pullback:
// prod_i gcd(d_i, n) with gcd(0, n) = n.
Integer component_count(const KummerReport& r, const Integer& n);

// Least m >= 1 with m T <= Z, i.e. the exponent d_k; from level m on every
// pullback component is Kummer-generic. Domain error when not free.
Integer stabilizing_level(const KummerReport& r);

// Checks component_count(m*n) == component_count(m) for all 1 <= n <= N.
bool verify_stabilizing(const KummerReport& r, const Integer& m, unsigned n_max);

// True iff f = c * g^n for a constant c and a rational function g over the
// algebraic closure: every multiplicity in the squarefree decompositions of
// numerator and denominator is divisible by n. Uses neither the gcd-free
// basis nor any integer-matrix machinery.
bool oracle_is_nth_power(const QRatFunc& f, const Integer& n);

struct OracleOptions {
    Integer cap = Integer(kDefaultCap);
    // Accepted exponent vectors are re-verified literally (product expansion
    // + oracle_is_nth_power) up to this many times per call, skipping
    // expansions whose estimated degree exceeds recheck_degree_limit.
    unsigned recheck_budget = 2;
    long long recheck_degree_limit = 600;
};

// Brute-force dual count: the number of a in (Z/n)^k whose monomial
// prod coords_i^{a_i} is an n-th power up to constant. Fully independent of
// the lattice module; must equal component_count(analyze(x), n).
Integer oracle_component_count(const TorusCurve& x, const Integer& n,
                               const OracleOptions& opts = {});

std::string signature(const KummerReport& r);

} // namespace kummer
