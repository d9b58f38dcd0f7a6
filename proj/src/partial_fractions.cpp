#include "kummer/partial_fractions.hpp"

#include "kummer/errors.hpp"

namespace kummer {

FpRatFunc PartialFractions::recombine(std::uint64_t p) const {
    FpRatFunc acc(poly_part);
    for (const auto& pole : poles)
        for (const auto& term : pole.terms)
            acc += FpRatFunc(term.coeff, pole.place.pow(term.order));
    (void)p;
    return acc;
}

PartialFractions partial_fractions(const FpRatFunc& f, std::uint64_t seed) {
    const std::uint64_t p = f.num().modulus();
    auto [quot, rem] = FpPoly::divmod(f.num(), f.den());
    PartialFractions out{std::move(quot), {}};
    if (rem.is_zero() || f.den().degree() == 0)
        return out;

    for (const auto& [q, e] : factor_fp(f.den(), seed)) {
        const FpPoly qe = q.pow(e);
        const FpPoly rest = f.den().div_exact(qe);
        // component of rem/den over q^e via the inverse of the cofactor
        const FpPoly inv = FpPoly::modinv(rest, qe);
        FpPoly part = FpPoly::mulmod(rem, inv, qe);
        // base-q digits give the terms of order e, e-1, ..., 1
        PolePart pole{q, {}};
        for (unsigned i = 0; i < e && !part.is_zero(); ++i) {
            auto [next, digit] = FpPoly::divmod(part, q);
            if (!digit.is_zero())
                pole.terms.push_back({e - i, std::move(digit)});
            part = std::move(next);
        }
        if (!pole.terms.empty())
            out.poles.push_back(std::move(pole));
    }
    return out;
}

} // namespace kummer
