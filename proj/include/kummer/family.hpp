#pragma once

#include "kummer/curve.hpp"
#include "kummer/qpoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kummer {

// Polynomial in t whose coefficients are polynomials in one parameter.
class ParamPoly {
public:
    ParamPoly() = default;
    explicit ParamPoly(QPoly constant_in_t); // a polynomial in the parameter only
    explicit ParamPoly(std::vector<QPoly> coeffs_constant_first);

    static ParamPoly variable_t();
    static ParamPoly variable_param();
    static ParamPoly rational_const(const Rational& v);

    int degree_t() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    QPoly coeff(std::size_t i) const { return i < c_.size() ? c_[i] : QPoly(); }
    const std::vector<QPoly>& coeffs() const { return c_; }

    ParamPoly operator-() const;
    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.c_ == b.c_; }

    ParamPoly pow(unsigned long long e) const;
    ParamPoly derivative_t() const;
    QPoly eval_param(const Rational& value) const;

    // gcd of the t-coefficients as polynomials in the parameter (monic).
    QPoly content_param() const;
    // Divides every t-coefficient exactly by a polynomial in the parameter.
    ParamPoly div_coeffs_exact(const QPoly& g) const;

    std::string str(const std::string& tvar, const std::string& param) const;

private:
    std::vector<QPoly> c_;
    void trim();
};

// Resultant with respect to t of two parametric polynomials: a polynomial in
// the parameter (Sylvester determinant, fraction-free elimination).
QPoly resultant_t(const ParamPoly& a, const ParamPoly& b);

// Fraction in t over Q[parameter]; kept unreduced in t, with the common
// parameter-only content cancelled.
struct ParamRatFunc {
    ParamPoly num;
    ParamPoly den;

    ParamRatFunc(ParamPoly n, ParamPoly d);

    friend ParamRatFunc operator+(const ParamRatFunc& a, const ParamRatFunc& b);
    friend ParamRatFunc operator-(const ParamRatFunc& a, const ParamRatFunc& b);
    friend ParamRatFunc operator*(const ParamRatFunc& a, const ParamRatFunc& b);
    friend ParamRatFunc operator/(const ParamRatFunc& a, const ParamRatFunc& b);
    ParamRatFunc operator-() const;
    ParamRatFunc pow(unsigned long long e) const;
};

// One-parameter family of torus curves.
struct FamilySpec {
    std::string param_name;
    std::vector<ParamRatFunc> coords;

    std::size_t dimension() const { return coords.size(); }
};

// Substitutes the parameter value and normalises to lowest terms. Domain
// error (naming the coordinate) when a denominator vanishes identically or a
// coordinate becomes zero.
TorusCurve specialize(const FamilySpec& f, const Rational& value);

struct ScanRow {
    Rational value;
    std::optional<KummerReport> report; // empty on specialisation failure
    std::string signature;              // "error: ..." on failure
};

struct ScanResult {
    std::vector<ScanRow> rows;                          // sorted by value
    std::map<std::string, std::vector<Rational>> strata; // signature -> witnesses
    std::optional<Integer> max_index;                   // over free fibers
};

// Per-value reports; specialisation failures become per-row error records.
// Duplicate values are a domain error.
ScanResult scan(const FamilySpec& f, std::vector<Rational> values);

// Finite set of nonzero nonconstant polynomials in the parameter whose roots
// contain every value where the place structure of the fibers can change:
// parameter contents, leading t-coefficients, discriminants, and pairwise
// resultants of all numerators and denominators. Sound, not minimal.
std::vector<QPoly> degeneration_candidates(const FamilySpec& f);

} // namespace kummer
