#include "kummer/family.hpp"

#include "kummer/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kummer {

ParamPoly::ParamPoly(QPoly constant_in_t) {
    if (!constant_in_t.is_zero())
        c_.push_back(std::move(constant_in_t));
}

ParamPoly::ParamPoly(std::vector<QPoly> coeffs_constant_first)
    : c_(std::move(coeffs_constant_first)) {
    trim();
}

ParamPoly ParamPoly::variable_t() {
    return ParamPoly(std::vector<QPoly>{QPoly(), QPoly::one()});
}

ParamPoly ParamPoly::variable_param() { return ParamPoly(QPoly::variable()); }

ParamPoly ParamPoly::rational_const(const Rational& v) { return ParamPoly(QPoly(v)); }

void ParamPoly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r = *this;
    for (auto& x : r.c_)
        x = -x;
    return r;
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
    std::vector<QPoly> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        c[i] += b.c_[i];
    return ParamPoly(std::move(c));
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero() || b.is_zero())
        return ParamPoly();
    std::vector<QPoly> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    }
    return ParamPoly(std::move(c));
}

ParamPoly ParamPoly::pow(unsigned long long e) const {
    ParamPoly base = *this;
    ParamPoly acc = ParamPoly(QPoly::one());
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return acc;
}

ParamPoly ParamPoly::derivative_t() const {
    if (c_.size() <= 1)
        return ParamPoly();
    std::vector<QPoly> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        c[i - 1] = c_[i].scale(Rational(static_cast<long long>(i)));
    return ParamPoly(std::move(c));
}

QPoly ParamPoly::eval_param(const Rational& value) const {
    std::vector<Rational> c;
    c.reserve(c_.size());
    for (const auto& coeff : c_)
        c.push_back(coeff.eval(value));
    return QPoly(std::move(c));
}

QPoly ParamPoly::content_param() const {
    QPoly g;
    for (const auto& coeff : c_) {
        if (coeff.is_zero())
            continue;
        g = g.is_zero() ? coeff.monic() : QPoly::gcd(g, coeff);
        if (g.is_constant())
            return QPoly::one();
    }
    return g.is_zero() ? QPoly() : g;
}

ParamPoly ParamPoly::div_coeffs_exact(const QPoly& g) const {
    std::vector<QPoly> c;
    c.reserve(c_.size());
    for (const auto& coeff : c_)
        c.push_back(coeff.is_zero() ? QPoly() : coeff.div_exact(g));
    return ParamPoly(std::move(c));
}

std::string ParamPoly::str(const std::string& tvar, const std::string& param) const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero())
            continue;
        if (!first)
            out << " + ";
        first = false;
        out << "(" << c_[i].str(param) << ")";
        if (i >= 1) {
            out << "*" << tvar;
            if (i > 1)
                out << "^" << i;
        }
    }
    return out.str();
}

namespace {

// Fraction-free determinant over Q[param] (Bareiss with exact division).
QPoly det_bareiss(std::vector<std::vector<QPoly>> a) {
    const std::size_t n = a.size();
    if (n == 0)
        return QPoly::one();
    Rational sign(1);
    QPoly prev = QPoly::one();
    for (std::size_t t = 0; t + 1 < n; ++t) {
        if (a[t][t].is_zero()) {
            std::size_t piv = t + 1;
            while (piv < n && a[piv][t].is_zero())
                ++piv;
            if (piv == n)
                return QPoly();
            std::swap(a[t], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = t + 1; i < n; ++i)
            for (std::size_t j = t + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]).div_exact(prev);
        prev = a[t][t];
    }
    return a[n - 1][n - 1].scale(sign);
}

} // namespace

QPoly resultant_t(const ParamPoly& a, const ParamPoly& b) {
    const int m = a.degree_t();
    const int n = b.degree_t();
    if (m < 0 || n < 0)
        return QPoly();
    if (m == 0 && n == 0)
        return QPoly::one();
    if (m == 0)
        return a.coeff(0).pow(static_cast<unsigned>(n));
    if (n == 0)
        return b.coeff(0).pow(static_cast<unsigned>(m));
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<QPoly>> syl(size, std::vector<QPoly>(size));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j)
            syl[row][row + j] = a.coeff(static_cast<std::size_t>(m - j));
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j)
            syl[n + row][row + j] = b.coeff(static_cast<std::size_t>(n - j));
    return det_bareiss(std::move(syl));
}

ParamRatFunc::ParamRatFunc(ParamPoly n, ParamPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero())
        throw domain_error("division by the zero polynomial");
    if (num.is_zero()) {
        den = ParamPoly(QPoly::one());
        return;
    }
    // cancel the parameter-only content shared by numerator and denominator
    const QPoly cn = num.content_param();
    const QPoly cd = den.content_param();
    if (!cn.is_constant() && !cd.is_constant()) {
        const QPoly g = QPoly::gcd(cn, cd);
        if (!g.is_constant()) {
            num = num.div_coeffs_exact(g);
            den = den.div_coeffs_exact(g);
        }
    }
}

ParamRatFunc operator+(const ParamRatFunc& a, const ParamRatFunc& b) {
    return ParamRatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
}

ParamRatFunc operator-(const ParamRatFunc& a, const ParamRatFunc& b) {
    return ParamRatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
}

ParamRatFunc operator*(const ParamRatFunc& a, const ParamRatFunc& b) {
    return ParamRatFunc(a.num * b.num, a.den * b.den);
}

ParamRatFunc operator/(const ParamRatFunc& a, const ParamRatFunc& b) {
    if (b.num.is_zero())
        throw domain_error("division by the zero rational function");
    return ParamRatFunc(a.num * b.den, a.den * b.num);
}

ParamRatFunc ParamRatFunc::operator-() const { return ParamRatFunc(-num, den); }

ParamRatFunc ParamRatFunc::pow(unsigned long long e) const {
    return ParamRatFunc(num.pow(e), den.pow(e));
}

TorusCurve specialize(const FamilySpec& f, const Rational& value) {
    std::vector<QRatFunc> coords;
    coords.reserve(f.dimension());
    for (std::size_t i = 0; i < f.dimension(); ++i) {
        const QPoly num = f.coords[i].num.eval_param(value);
        const QPoly den = f.coords[i].den.eval_param(value);
        if (den.is_zero())
            throw domain_error("coordinate " + std::to_string(i + 1) +
                               ": denominator vanishes at " + f.param_name + " = " +
                               to_string(value));
        if (num.is_zero())
            throw domain_error("coordinate " + std::to_string(i + 1) +
                               " is identically zero at " + f.param_name + " = " +
                               to_string(value));
        coords.emplace_back(num, den);
    }
    return TorusCurve(std::move(coords));
}

ScanResult scan(const FamilySpec& f, std::vector<Rational> values) {
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end())
        throw domain_error("scan values must be pairwise distinct");

    ScanResult out;
    for (const auto& v : values) {
        ScanRow row;
        row.value = v;
        try {
            const TorusCurve x = specialize(f, v);
            row.report = analyze(x);
            row.signature = signature(*row.report);
        } catch (const domain_error& e) {
            row.signature = std::string("error: ") + e.what();
        }
        out.strata[row.signature].push_back(v);
        if (row.report && row.report->free) {
            if (!out.max_index || *row.report->index > *out.max_index)
                out.max_index = row.report->index;
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::vector<QPoly> degeneration_candidates(const FamilySpec& f) {
    std::vector<QPoly> raw;
    std::vector<ParamPoly> in_t; // numerators and denominators with t-degree >= 1

    for (const auto& coord : f.coords) {
        for (const ParamPoly* part : {&coord.num, &coord.den}) {
            const QPoly content = part->content_param();
            if (!content.is_zero() && !content.is_constant())
                raw.push_back(content);
            if (part->degree_t() >= 1) {
                const QPoly lead = part->coeff(static_cast<std::size_t>(part->degree_t()));
                if (!lead.is_constant())
                    raw.push_back(lead);
                in_t.push_back(*part);
            }
        }
    }
    for (const auto& g : in_t) {
        const QPoly disc = resultant_t(g, g.derivative_t());
        if (!disc.is_zero() && !disc.is_constant())
            raw.push_back(disc);
    }
    for (std::size_t i = 0; i < in_t.size(); ++i)
        for (std::size_t j = i + 1; j < in_t.size(); ++j) {
            const QPoly res = resultant_t(in_t[i], in_t[j]);
            if (!res.is_zero() && !res.is_constant())
                raw.push_back(res);
        }

    std::vector<QPoly> out;
    for (const auto& g : raw)
        out.push_back(g.primitive_integer_form());
    std::sort(out.begin(), out.end(),
              [](const QPoly& a, const QPoly& b) { return QPoly::compare(a, b) < 0; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace kummer
