#include "kummer/rational.hpp"

#include "kummer/errors.hpp"

namespace kummer {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw domain_error("rational with zero denominator");
    return Rational(num) / Rational(den);
}

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& q) {
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty())
        return std::nullopt;
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(text));
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty())
            return std::nullopt;
        Integer d(den);
        if (d == 0)
            return std::nullopt;
        return make_rational(Integer(num), d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

bool fits_int64(const Integer& n) {
    static const Integer lo = std::numeric_limits<std::int64_t>::min();
    static const Integer hi = std::numeric_limits<std::int64_t>::max();
    return n >= lo && n <= hi;
}

std::vector<Integer> prime_divisors(Integer n) {
    std::vector<Integer> out;
    n = abs(n);
    if (n <= 1)
        return out;
    Integer d = 2;
    while (d * d <= n) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
        d += (d == 2) ? 1 : 2;
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

} // namespace kummer
