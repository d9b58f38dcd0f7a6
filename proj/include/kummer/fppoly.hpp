#pragma once

#include "kummer/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kummer {

// Scalar arithmetic mod a word-sized prime p (p < 2^31 in practice; products
// go through 128-bit intermediates).
namespace fp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    if (s >= p)
        s -= p;
    return s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint64_t neg(std::uint64_t a, std::uint64_t p) { return a == 0 ? 0 : p - a; }

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1)
            acc = mul(acc, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return acc;
}

inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return pow(a, p - 2, p); }

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

} // namespace fp

// Univariate polynomial over F_p, p a word-sized prime. Coefficients are in
// [0, p), constant-term first, no trailing zeros.
class FpPoly {
public:
    explicit FpPoly(std::uint64_t p);
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

    static FpPoly variable(std::uint64_t p);
    static FpPoly constant(std::uint64_t p, std::uint64_t value);
    static FpPoly one_like(const FpPoly& f) { return constant(f.modulus(), 1); }
    static FpPoly from_integer_coeffs(std::uint64_t p, const std::vector<Integer>& constant_first);

    std::uint64_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint64_t lead() const;
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    FpPoly operator-() const;
    friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    FpPoly& operator+=(const FpPoly& o) { return *this = *this + o; }
    FpPoly& operator-=(const FpPoly& o) { return *this = *this - o; }
    FpPoly& operator*=(const FpPoly& o) { return *this = *this * o; }
    friend bool operator==(const FpPoly& a, const FpPoly& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }

    FpPoly scale(std::uint64_t s) const;
    FpPoly div_scalar(std::uint64_t s) const;
    FpPoly monic() const;

    FpPoly derivative() const;
    std::uint64_t eval(std::uint64_t x) const;
    FpPoly pow(unsigned long long e) const;

    // Requires f' == 0, i.e. f in F_p[t^p]; on the prime field the p-th root
    // just contracts exponents.
    FpPoly pth_root() const;

    static std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
    FpPoly div_exact(const FpPoly& b) const;
    friend FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }

    static FpPoly gcd(const FpPoly& a, const FpPoly& b);
    static FpPoly lcm(const FpPoly& a, const FpPoly& b);

    static FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m);
    static FpPoly powmod(const FpPoly& a, const Integer& e, const FpPoly& m);

    // Inverse of a mod m; requires gcd(a, m) = 1.
    static FpPoly modinv(const FpPoly& a, const FpPoly& m);

    static int compare(const FpPoly& a, const FpPoly& b);

    std::string str(const std::string& var = "t") const;

private:
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
    void trim();
    void check_field(const FpPoly& o) const;
};

struct FpSquarefreeFactor {
    FpPoly factor;
    unsigned multiplicity;
};

struct FpSquarefreeDecomposition {
    std::uint64_t scalar;
    std::vector<FpSquarefreeFactor> factors;
    FpPoly recombine(std::uint64_t p) const;
};

// Characteristic-aware squarefree decomposition: the Musser peel handles
// multiplicities prime to p, and p-th-power parts are contracted through the
// Frobenius and recursed on.
FpSquarefreeDecomposition squarefree_decompose(const FpPoly& f);

// Full factorisation into monic irreducibles: squarefree decomposition, then
// distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting.
// Output sorted by (degree, coefficient order); the leading scalar of f is
// dropped. The seed drives the equal-degree randomisation only; the result is
// canonical regardless.
std::vector<std::pair<FpPoly, unsigned>> factor_fp(const FpPoly& f,
                                                   std::uint64_t seed = kDefaultSeed);

bool is_irreducible(const FpPoly& f);

// Solves e^p = c in F_p[t]/(q), q irreducible, deg c < deg q, by inverting
// the Frobenius matrix on the power basis.
FpPoly pth_root_mod(const FpPoly& c, const FpPoly& q);

// Dense linear algebra mod p on small matrices.
std::size_t fp_rank(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p);
std::optional<std::vector<std::uint64_t>> fp_solve(std::vector<std::vector<std::uint64_t>> a,
                                                   std::vector<std::uint64_t> rhs,
                                                   std::uint64_t p);

} // namespace kummer
