#pragma once

#include "kummer/errors.hpp"
#include "kummer/fppoly.hpp"
#include "kummer/qpoly.hpp"

#include <string>
#include <utility>

namespace kummer {

namespace detail {

inline QPoly poly_one_like(const QPoly&) { return QPoly::one(); }
inline FpPoly poly_one_like(const FpPoly& f) { return FpPoly::constant(f.modulus(), 1); }

} // namespace detail

// Rational function in lowest terms: den != 0, gcd(num, den) = 1, den monic;
// zero is 0/1. Immutable after construction.
template <class P>
class RatFuncT {
public:
    explicit RatFuncT(P num) : num_(std::move(num)), den_(detail::poly_one_like(num_)) {
        reduce();
    }

    RatFuncT(P num, P den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    static RatFuncT zero_like(const RatFuncT& f) {
        return RatFuncT(detail::poly_one_like(f.num_).scale(0) /* zero in the same field */,
                        detail::poly_one_like(f.num_));
    }

    const P& num() const { return num_; }
    const P& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }

    friend RatFuncT operator+(const RatFuncT& a, const RatFuncT& b) {
        return RatFuncT(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFuncT operator-(const RatFuncT& a, const RatFuncT& b) {
        return RatFuncT(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFuncT operator-() const { return RatFuncT(-num_, den_, reduced_tag{}); }
    friend RatFuncT operator*(const RatFuncT& a, const RatFuncT& b) {
        return RatFuncT(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFuncT operator/(const RatFuncT& a, const RatFuncT& b) {
        if (b.is_zero())
            throw domain_error("division by the zero rational function");
        return RatFuncT(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFuncT& operator+=(const RatFuncT& o) { return *this = *this + o; }
    RatFuncT& operator-=(const RatFuncT& o) { return *this = *this - o; }
    RatFuncT& operator*=(const RatFuncT& o) { return *this = *this * o; }

    friend bool operator==(const RatFuncT& a, const RatFuncT& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Powers of a reduced fraction stay reduced, so no gcd is needed here.
    RatFuncT pow(long long e) const {
        if (e == 0)
            return RatFuncT(detail::poly_one_like(num_));
        if (e < 0) {
            if (is_zero())
                throw domain_error("negative power of zero");
            return RatFuncT(den_, num_, unreduced_monic_tag{}).pow(-e);
        }
        const auto ue = static_cast<unsigned long long>(e);
        return RatFuncT(num_.pow(ue), den_.pow(ue), unreduced_monic_tag{});
    }

    RatFuncT derivative() const {
        return RatFuncT(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    std::string str(const std::string& var = "t") const {
        if (is_polynomial())
            return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    struct reduced_tag {};
    struct unreduced_monic_tag {};

    RatFuncT(P num, P den, reduced_tag) : num_(std::move(num)), den_(std::move(den)) {}

    // Numerator/denominator already coprime; only the monic normalisation of
    // the denominator is (re)established.
    RatFuncT(P num, P den, unreduced_monic_tag) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero())
            throw domain_error("division by the zero polynomial");
        normalize_monic();
    }

    void reduce() {
        if (den_.is_zero())
            throw domain_error("division by the zero polynomial");
        if (num_.is_zero()) {
            den_ = detail::poly_one_like(den_);
            return;
        }
        const P g = P::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.div_exact(g);
            den_ = den_.div_exact(g);
        }
        normalize_monic();
    }

    void normalize_monic() {
        const auto l = den_.lead();
        num_ = num_.div_scalar(l);
        den_ = den_.div_scalar(l);
    }

    P num_, den_;
};

using QRatFunc = RatFuncT<QPoly>;
using FpRatFunc = RatFuncT<FpPoly>;

// f'/f in lowest terms; f == 0 is a domain error.
inline QRatFunc log_derivative(const QRatFunc& f) {
    if (f.is_zero())
        throw domain_error("logarithmic derivative of zero");
    return QRatFunc(f.num().derivative() * f.den() - f.num() * f.den().derivative(),
                    f.den() * f.num());
}

} // namespace kummer
