#pragma once

#include "kummer/fppoly.hpp"
#include "kummer/ratfunc.hpp"

#include <vector>

namespace kummer {

struct PoleTerm {
    unsigned order;  // >= 1
    FpPoly coeff;    // nonzero, deg < deg place
};

struct PolePart {
    FpPoly place; // monic irreducible
    std::vector<PoleTerm> terms; // orders strictly descending
};

// f = poly_part + sum_j sum_m coeff_{j,m} / place_j^m, exactly.
struct PartialFractions {
    FpPoly poly_part;
    std::vector<PolePart> poles;

    FpRatFunc recombine(std::uint64_t p) const;
};

PartialFractions partial_fractions(const FpRatFunc& f, std::uint64_t seed = kDefaultSeed);

} // namespace kummer
