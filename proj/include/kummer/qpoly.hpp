#pragma once

#include "kummer/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace kummer {

// Univariate polynomial over Q. Coefficients are stored constant-term first
// with no trailing zeros; the zero polynomial has an empty coefficient list.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(Rational constant);
    explicit QPoly(std::vector<Rational> coeffs);

    static QPoly variable();
    static QPoly one();
    static QPoly from_ints(std::initializer_list<long long> constant_first);

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& lead() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    QPoly operator-() const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    QPoly scale(const Rational& s) const;
    QPoly div_scalar(const Rational& s) const;
    QPoly monic() const;

    QPoly derivative() const;
    Rational eval(const Rational& x) const;
    QPoly pow(unsigned long long e) const;
    // f(g)
    QPoly compose(const QPoly& g) const;
    // t^deg(f) * f(1/t)
    QPoly reversed() const;

    // Field-coefficient long division.
    static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
    // Division known to be exact; throws domain_error on a nonzero remainder.
    QPoly div_exact(const QPoly& b) const;

    // Monic gcd, computed on primitive integer images with a primitive
    // polynomial remainder sequence so coefficients stay small. gcd(0, 0) is
    // a domain error.
    static QPoly gcd(const QPoly& a, const QPoly& b);
    static QPoly lcm(const QPoly& a, const QPoly& b);

    // Largest e with b^e dividing f (b nonconstant).
    static unsigned multiplicity(const QPoly& f, const QPoly& b);

    // Total order used for all deterministic output: degree first, then the
    // coefficient sequence compared from the constant term upward.
    static int compare(const QPoly& a, const QPoly& b);

    // Integer-coefficient scalar multiple with content 1 and positive lead.
    QPoly primitive_integer_form() const;

    std::string str(const std::string& var = "t") const;

private:
    std::vector<Rational> c_;
    void trim();
};

struct SquarefreeFactor {
    QPoly factor;          // monic, squarefree, nonconstant
    unsigned multiplicity; // >= 1
};

// scalar * prod factor^multiplicity reproduces the input exactly; the factors
// are pairwise coprime, listed by ascending multiplicity then compare().
struct SquarefreeDecomposition {
    Rational scalar;
    std::vector<SquarefreeFactor> factors;
    QPoly recombine() const;
};

// Yun's algorithm. f == 0 is a domain error.
SquarefreeDecomposition squarefree_decompose(const QPoly& f);

// Pairwise-coprime squarefree refinement of a family of polynomials.
// basis[j] are monic, squarefree, pairwise coprime and nonconstant, sorted by
// QPoly::compare; exponents[i][j] is the multiplicity of basis[j] in input i,
// and monic(input_i) == prod_j basis[j]^exponents[i][j] exactly. Constant
// inputs contribute a zero row. A zero input is a domain error.
struct GcdFreeBasis {
    std::vector<QPoly> basis;
    std::vector<std::vector<long long>> exponents;
};

GcdFreeBasis gcdfree_basis(const std::vector<QPoly>& polys);

} // namespace kummer
