#include "kummer/qpoly.hpp"

#include "kummer/errors.hpp"

#include <algorithm>
#include <sstream>

namespace kummer {

QPoly::QPoly(Rational constant) {
    if (constant != 0)
        c_.push_back(std::move(constant));
}

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::variable() { return QPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

QPoly QPoly::one() { return QPoly(Rational(1)); }

QPoly QPoly::from_ints(std::initializer_list<long long> constant_first) {
    std::vector<Rational> c;
    c.reserve(constant_first.size());
    for (long long v : constant_first)
        c.emplace_back(v);
    return QPoly(std::move(c));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

const Rational& QPoly::lead() const {
    if (c_.empty())
        throw domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& x : r.c_)
        x = -x;
    return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        c[i] += b.c_[i];
    return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero())
        return QPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(c));
}

QPoly QPoly::scale(const Rational& s) const {
    if (s == 0)
        return QPoly();
    QPoly r = *this;
    for (auto& x : r.c_)
        x *= s;
    return r;
}

QPoly QPoly::div_scalar(const Rational& s) const {
    if (s == 0)
        throw domain_error("division by zero scalar");
    return scale(Rational(1) / s);
}

QPoly QPoly::monic() const {
    if (is_zero())
        throw domain_error("monic form of the zero polynomial");
    return div_scalar(lead());
}

QPoly QPoly::derivative() const {
    if (c_.size() <= 1)
        return QPoly();
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        c[i - 1] = c_[i] * Rational(static_cast<long long>(i));
    return QPoly(std::move(c));
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * x + c_[i];
    return acc;
}

QPoly QPoly::pow(unsigned long long e) const {
    QPoly base = *this;
    QPoly acc = QPoly::one();
    while (e > 0) {
        if (e & 1)
            acc *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return acc;
}

QPoly QPoly::compose(const QPoly& g) const {
    QPoly acc;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * g + QPoly(c_[i]);
    return acc;
}

QPoly QPoly::reversed() const {
    std::vector<Rational> c(c_.rbegin(), c_.rend());
    return QPoly(std::move(c));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero())
        throw domain_error("polynomial division by zero");
    if (a.degree() < b.degree())
        return {QPoly(), a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1, Rational(0));
    const Rational inv_lead = Rational(1) / b.lead();
    for (std::size_t shift = quo.size(); shift-- > 0;) {
        const std::size_t i = shift + b.c_.size() - 1;
        if (rem[i] == 0)
            continue;
        const Rational q = rem[i] * inv_lead;
        quo[shift] = q;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            rem[shift + j] -= q * b.c_[j];
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly QPoly::div_exact(const QPoly& b) const {
    auto [q, r] = divmod(*this, b);
    if (!r.is_zero())
        throw domain_error("inexact polynomial division");
    return q;
}

namespace {

// Integer image used by the gcd kernel: constant-first, no trailing zeros.
using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

Integer zcontent(const ZPoly& f) {
    Integer g = 0;
    for (const auto& c : f)
        g = gcd(g, c);
    return g;
}

void zmake_primitive(ZPoly& f) {
    ztrim(f);
    if (f.empty())
        return;
    Integer ct = zcontent(f);
    if (f.back() < 0)
        ct = -ct;
    for (auto& c : f)
        c /= ct;
}

ZPoly to_primitive_z(const QPoly& f) {
    Integer den_lcm = 1;
    for (const auto& c : f.coeffs())
        den_lcm = lcm(den_lcm, denominator(c));
    ZPoly z;
    z.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs())
        z.push_back(numerator(c) * (den_lcm / denominator(c)));
    zmake_primitive(z);
    return z;
}

// Pseudo-remainder: repeatedly scale by lc(b) and cancel the top term.
ZPoly zprem(ZPoly a, const ZPoly& b) {
    const Integer& lb = b.back();
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const Integer la = a.back();
        const std::size_t shift = a.size() - b.size();
        for (auto& c : a)
            c *= lb;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] -= la * b[j];
        ztrim(a);
        if (a.empty())
            break;
    }
    return a;
}

QPoly from_z(const ZPoly& z) {
    std::vector<Rational> c;
    c.reserve(z.size());
    for (const auto& v : z)
        c.emplace_back(v);
    return QPoly(std::move(c));
}

} // namespace

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero() && b.is_zero())
        throw domain_error("gcd of two zero polynomials");
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    ZPoly A = to_primitive_z(a);
    ZPoly B = to_primitive_z(b);
    if (A.size() < B.size())
        std::swap(A, B);
    while (!B.empty()) {
        ZPoly R = zprem(A, B);
        zmake_primitive(R);
        A = std::move(B);
        B = std::move(R);
    }
    return from_z(A).monic();
}

QPoly QPoly::lcm(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero())
        throw domain_error("lcm with a zero polynomial");
    return (a * b).div_exact(gcd(a, b)).monic();
}

unsigned QPoly::multiplicity(const QPoly& f, const QPoly& b) {
    if (f.is_zero() || b.is_constant())
        throw domain_error("multiplicity needs a nonzero input and a nonconstant divisor");
    unsigned e = 0;
    QPoly cur = f;
    while (true) {
        auto [q, r] = divmod(cur, b);
        if (!r.is_zero())
            return e;
        cur = std::move(q);
        ++e;
    }
}

int QPoly::compare(const QPoly& a, const QPoly& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] != b.c_[i])
            return a.c_[i] < b.c_[i] ? -1 : 1;
    }
    return 0;
}

QPoly QPoly::primitive_integer_form() const {
    if (is_zero())
        return QPoly();
    return from_z(to_primitive_z(*this));
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c == 0)
            continue;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg)
                out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        const bool unit = (mag == 1);
        if (i == 0) {
            out << to_string(mag);
        } else {
            if (!unit)
                out << to_string(mag) << "*";
            out << var;
            if (i > 1)
                out << "^" << i;
        }
    }
    return out.str();
}

QPoly SquarefreeDecomposition::recombine() const {
    QPoly acc(scalar);
    for (const auto& [g, e] : factors)
        acc *= g.pow(e);
    return acc;
}

SquarefreeDecomposition squarefree_decompose(const QPoly& f) {
    if (f.is_zero())
        throw domain_error("squarefree decomposition of the zero polynomial");
    SquarefreeDecomposition out;
    out.scalar = f.lead();
    if (f.is_constant())
        return out;
    const QPoly F = f.monic();
    QPoly g = QPoly::gcd(F, F.derivative());
    QPoly c = F.div_exact(g);
    QPoly d = F.derivative().div_exact(g) - c.derivative();
    unsigned i = 1;
    while (!c.is_constant()) {
        QPoly p = QPoly::gcd(c, d);
        if (!p.is_constant())
            out.factors.push_back({p, i});
        c = c.div_exact(p);
        d = d.div_exact(p) - c.derivative();
        ++i;
    }
    return out;
}

GcdFreeBasis gcdfree_basis(const std::vector<QPoly>& polys) {
    for (const auto& f : polys)
        if (f.is_zero())
            throw domain_error("gcd-free basis of a zero polynomial");

    // Coprime refinement: insert each squarefree part, splitting existing
    // basis elements on a common divisor. Since every participant is
    // squarefree, one pass per insertion suffices.
    std::vector<QPoly> basis;
    auto insert = [&basis](QPoly g) {
        for (std::size_t i = 0; i < basis.size() && !g.is_constant(); ++i) {
            QPoly d = QPoly::gcd(g, basis[i]);
            if (d.is_constant())
                continue;
            if (QPoly::compare(d, basis[i]) != 0) {
                QPoly rest = basis[i].div_exact(d);
                basis[i] = d;
                basis.push_back(rest);
            }
            g = g.div_exact(d);
        }
        if (!g.is_constant())
            basis.push_back(g);
    };

    for (const auto& f : polys) {
        if (f.is_constant())
            continue;
        for (const auto& part : squarefree_decompose(f).factors)
            insert(part.factor);
    }

    std::sort(basis.begin(), basis.end(),
              [](const QPoly& a, const QPoly& b) { return QPoly::compare(a, b) < 0; });

    GcdFreeBasis out;
    out.basis = std::move(basis);
    out.exponents.reserve(polys.size());
    for (const auto& f : polys) {
        std::vector<long long> row(out.basis.size(), 0);
        if (!f.is_constant()) {
            for (std::size_t j = 0; j < out.basis.size(); ++j)
                row[j] = QPoly::multiplicity(f, out.basis[j]);
        }
        out.exponents.push_back(std::move(row));
    }
    return out;
}

} // namespace kummer
