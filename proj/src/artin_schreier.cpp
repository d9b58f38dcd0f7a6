#include "kummer/artin_schreier.hpp"

#include "kummer/errors.hpp"
#include "kummer/partial_fractions.hpp"

#include <algorithm>
#include <map>

namespace kummer {

AdditiveCurve::AdditiveCurve(std::uint64_t p, std::vector<FpRatFunc> coords)
    : p_(p), coords_(std::move(coords)) {
    if (!fp::is_prime(p_))
        throw domain_error("characteristic must be prime");
    if (coords_.empty())
        throw domain_error("an additive curve needs at least one coordinate");
    for (const auto& f : coords_)
        if (f.num().modulus() != p_)
            throw domain_error("coordinate modulus does not match the curve characteristic");
}

FpRatFunc wp_apply(const FpRatFunc& g) {
    const std::uint64_t p = g.num().modulus();
    return g.pow(static_cast<long long>(p)) - g;
}

WpReducedForm wp_reduce(const FpRatFunc& f, std::uint64_t seed) {
    const std::uint64_t p = f.num().modulus();
    PartialFractions pf = partial_fractions(f, seed);

    FpRatFunc cert(FpPoly(p));

    // Polynomial part: cancel c*t^(p*m) against wp(c*t^m); on the prime
    // field c^(1/p) = c. Replacements land at strictly smaller exponents, so
    // one descending sweep suffices.
    std::vector<std::uint64_t> poly(pf.poly_part.coeffs());
    std::vector<std::uint64_t> cert_poly;
    for (std::size_t j = poly.size(); j-- > 1;) {
        if (poly[j] == 0 || j % p != 0)
            continue;
        const std::uint64_t c = poly[j];
        const std::size_t m = j / p;
        poly[j] = 0;
        if (cert_poly.size() <= m)
            cert_poly.resize(m + 1, 0);
        cert_poly[m] = fp::add(cert_poly[m], c, p);
        poly[m] = fp::add(poly[m], c, p);
    }
    cert += FpRatFunc(FpPoly(p, std::move(cert_poly)));
    FpRatFunc rem(FpPoly(p, std::move(poly)));

    // Pole parts, place by place. Subtracting wp(e/q^m) with e^p = c mod q
    // kills the order-pm coefficient c, spills h = (e^p - c)/q into orders
    // below pm, and re-adds e at order m; the top order divisible by p
    // strictly decreases.
    for (const auto& pole : pf.poles) {
        const FpPoly& q = pole.place;
        std::map<unsigned, FpPoly> terms;
        for (const auto& t : pole.terms)
            terms.emplace(t.order, t.coeff);

        while (true) {
            auto it = std::find_if(terms.rbegin(), terms.rend(), [&](const auto& kv) {
                return kv.first % p == 0 && !kv.second.is_zero();
            });
            if (it == terms.rend())
                break;
            const unsigned order = it->first;
            const FpPoly c = it->second;
            terms.erase(order);

            const unsigned m = order / p;
            const FpPoly e = pth_root_mod(c, q);
            cert += FpRatFunc(e, q.pow(m));

            // e^p = c + q*h exactly
            const FpPoly h = (e.pow(p) - c).div_exact(q);
            FpPoly carry = h;
            unsigned at = order - 1;
            while (!carry.is_zero()) {
                auto [next, digit] = FpPoly::divmod(carry, q);
                if (!digit.is_zero()) {
                    auto [slot, inserted] = terms.emplace(at, FpPoly(p));
                    (void)inserted;
                    slot->second -= digit;
                    if (slot->second.is_zero())
                        terms.erase(at);
                }
                carry = std::move(next);
                --at;
            }
            auto [slot, inserted] = terms.emplace(m, FpPoly(p));
            (void)inserted;
            slot->second += e;
            if (slot->second.is_zero())
                terms.erase(m);
        }

        for (const auto& [order, coeff] : terms)
            rem += FpRatFunc(coeff, q.pow(order));
    }

    return {cert, rem};
}

bool is_wp_member(const FpRatFunc& f, std::uint64_t seed) {
    const FpRatFunc r = wp_reduce(f, seed).remainder;
    return r.is_constant();
}

Integer as_component_count(const AdditiveCurve& x, const Integer& cap, std::uint64_t seed) {
    const std::uint64_t p = x.characteristic();
    const std::size_t k = x.dimension();
    const Integer total = boost::multiprecision::pow(Integer(p), static_cast<unsigned>(k));
    if (total > cap)
        throw resource_error("additive enumeration of size " + total.str() +
                             " exceeds the cap of " + cap.str());

    Integer count = 0;
    std::vector<std::uint64_t> a(k, 0);
    while (true) {
        FpRatFunc h(FpPoly(p));
        for (std::size_t i = 0; i < k; ++i)
            if (a[i] != 0)
                h += FpRatFunc(x.coord(i).num().scale(a[i]), x.coord(i).den());
        if (is_wp_member(h, seed))
            count += 1;
        std::size_t pos = 0;
        while (pos < k) {
            a[pos] += 1;
            if (a[pos] < p)
                break;
            a[pos] = 0;
            ++pos;
        }
        if (pos == k)
            break;
    }
    return count;
}

bool is_as_generic_level1(const AdditiveCurve& x, const Integer& cap, std::uint64_t seed) {
    return as_component_count(x, cap, seed) == 1;
}

bool is_free_additive(const AdditiveCurve& x) {
    const std::uint64_t p = x.characteristic();
    const std::size_t k = x.dimension();
    std::vector<FpRatFunc> ders;
    ders.reserve(k);
    for (const auto& f : x.coords())
        ders.push_back(f.derivative());

    FpPoly common = FpPoly::constant(p, 1);
    for (const auto& d : ders)
        if (!d.is_zero())
            common = FpPoly::lcm(common, d.den());
    int width = 0;
    std::vector<FpPoly> nums;
    nums.reserve(k);
    for (const auto& d : ders) {
        FpPoly n = d.is_zero() ? FpPoly(p) : d.num() * common.div_exact(d.den());
        width = std::max(width, n.degree() + 1);
        nums.push_back(std::move(n));
    }
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(k);
    for (const auto& n : nums) {
        std::vector<std::uint64_t> row(static_cast<std::size_t>(std::max(width, 1)), 0);
        for (int i = 0; i <= n.degree(); ++i)
            row[static_cast<std::size_t>(i)] = n.coeff(static_cast<std::size_t>(i));
        rows.push_back(std::move(row));
    }
    return fp_rank(std::move(rows), p) == k;
}

} // namespace kummer
