#pragma once

#include "kummer/fppoly.hpp"
#include "kummer/ratfunc.hpp"

#include <vector>

namespace kummer {

// A rationally parametrised curve inside the k-dimensional additive group
// over F_p. Zero coordinates and all-constant tuples (points) are permitted.
class AdditiveCurve {
public:
    AdditiveCurve(std::uint64_t p, std::vector<FpRatFunc> coords);

    std::uint64_t characteristic() const { return p_; }
    std::size_t dimension() const { return coords_.size(); }
    const std::vector<FpRatFunc>& coords() const { return coords_; }
    const FpRatFunc& coord(std::size_t i) const { return coords_[i]; }

private:
    std::uint64_t p_;
    std::vector<FpRatFunc> coords_;
};

// Certificate pair for reduction modulo the image of x -> x^p - x:
// f = wp(g) + r exactly, and in r every polynomial exponent >= 1 and every
// pole order is prime to p.
struct WpReducedForm {
    FpRatFunc certificate; // g
    FpRatFunc remainder;   // r
};

// x^p - x applied to a rational function.
FpRatFunc wp_apply(const FpRatFunc& g);

WpReducedForm wp_reduce(const FpRatFunc& f, std::uint64_t seed = kDefaultSeed);

// f lies in wp(F) + constants iff its reduced remainder is a constant.
bool is_wp_member(const FpRatFunc& f, std::uint64_t seed = kDefaultSeed);

// Number of irreducible components of the level-1 Artin-Schreier pullback:
// #{a in F_p^k : sum a_i coords_i in wp(F) + constants}. Always a power of p.
Integer as_component_count(const AdditiveCurve& x, const Integer& cap = Integer(kDefaultCap),
                           std::uint64_t seed = kDefaultSeed);

bool is_as_generic_level1(const AdditiveCurve& x, const Integer& cap = Integer(kDefaultCap),
                          std::uint64_t seed = kDefaultSeed);

// Dominance of the summation map, decided by linear independence of the
// coordinate derivatives over the constants (exact linear algebra mod p).
// Derivatives kill p-th powers, so Frobenius graphs come out non-free.
bool is_free_additive(const AdditiveCurve& x);

} // namespace kummer
