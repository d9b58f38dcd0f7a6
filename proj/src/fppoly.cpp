#include "kummer/fppoly.hpp"

#include "kummer/errors.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace kummer {

namespace fp {

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                                29ull, 31ull, 37ull}) {
        if (n == small)
            return true;
        if (n % small == 0)
            return false;
    }
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This witness set is deterministic for all 64-bit integers.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                            29ull, 31ull, 37ull}) {
        std::uint64_t x = pow(a % n, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mul(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

} // namespace fp

FpPoly::FpPoly(std::uint64_t p) : p_(p) {
    if (p_ < 2)
        throw domain_error("modulus must be a prime >= 2");
}

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (p_ < 2)
        throw domain_error("modulus must be a prime >= 2");
    for (auto& x : c_)
        x %= p_;
    trim();
}

FpPoly FpPoly::variable(std::uint64_t p) { return FpPoly(p, {0, 1}); }

FpPoly FpPoly::constant(std::uint64_t p, std::uint64_t value) { return FpPoly(p, {value}); }

FpPoly FpPoly::from_integer_coeffs(std::uint64_t p, const std::vector<Integer>& constant_first) {
    std::vector<std::uint64_t> c;
    c.reserve(constant_first.size());
    const Integer ip(p);
    for (const auto& v : constant_first) {
        Integer r = v % ip;
        if (r < 0)
            r += ip;
        c.push_back(r.convert_to<std::uint64_t>());
    }
    return FpPoly(p, std::move(c));
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

void FpPoly::check_field(const FpPoly& o) const {
    if (p_ != o.p_)
        throw domain_error("mixed moduli in F_p arithmetic");
}

std::uint64_t FpPoly::lead() const {
    if (c_.empty())
        throw domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

FpPoly FpPoly::operator-() const {
    FpPoly r = *this;
    for (auto& x : r.c_)
        x = fp::neg(x, p_);
    return r;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    a.check_field(b);
    std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        c[i] = fp::add(c[i], b.c_[i], a.p_);
    return FpPoly(a.p_, std::move(c));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) { return a + (-b); }

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    a.check_field(b);
    if (a.is_zero() || b.is_zero())
        return FpPoly(a.p_);
    std::vector<std::uint64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = fp::add(c[i + j], fp::mul(a.c_[i], b.c_[j], a.p_), a.p_);
    }
    return FpPoly(a.p_, std::move(c));
}

FpPoly FpPoly::scale(std::uint64_t s) const {
    s %= p_;
    if (s == 0)
        return FpPoly(p_);
    FpPoly r = *this;
    for (auto& x : r.c_)
        x = fp::mul(x, s, p_);
    return r;
}

FpPoly FpPoly::div_scalar(std::uint64_t s) const {
    s %= p_;
    if (s == 0)
        throw domain_error("division by zero scalar");
    return scale(fp::inv(s, p_));
}

FpPoly FpPoly::monic() const {
    if (is_zero())
        throw domain_error("monic form of the zero polynomial");
    return div_scalar(lead());
}

FpPoly FpPoly::derivative() const {
    if (c_.size() <= 1)
        return FpPoly(p_);
    std::vector<std::uint64_t> c(c_.size() - 1, 0);
    for (std::size_t i = 1; i < c_.size(); ++i)
        c[i - 1] = fp::mul(c_[i], i % p_, p_);
    return FpPoly(p_, std::move(c));
}

std::uint64_t FpPoly::eval(std::uint64_t x) const {
    x %= p_;
    std::uint64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = fp::add(fp::mul(acc, x, p_), c_[i], p_);
    return acc;
}

FpPoly FpPoly::pow(unsigned long long e) const {
    FpPoly base = *this;
    FpPoly acc = FpPoly::constant(p_, 1);
    while (e > 0) {
        if (e & 1)
            acc *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return acc;
}

FpPoly FpPoly::pth_root() const {
    if (is_zero())
        return *this;
    std::vector<std::uint64_t> c;
    c.resize(c_.size() / p_ + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        if (i % p_ != 0)
            throw domain_error("p-th root of a polynomial outside F_p[t^p]");
        // a^(1/p) = a on the prime field
        c[i / p_] = c_[i];
    }
    return FpPoly(p_, std::move(c));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& a, const FpPoly& b) {
    a.check_field(b);
    if (b.is_zero())
        throw domain_error("polynomial division by zero");
    if (a.degree() < b.degree())
        return {FpPoly(a.p_), a};
    const std::uint64_t p = a.p_;
    std::vector<std::uint64_t> rem = a.c_;
    std::vector<std::uint64_t> quo(a.c_.size() - b.c_.size() + 1, 0);
    const std::uint64_t inv_lead = fp::inv(b.lead(), p);
    for (std::size_t shift = quo.size(); shift-- > 0;) {
        const std::size_t i = shift + b.c_.size() - 1;
        if (rem[i] == 0)
            continue;
        const std::uint64_t q = fp::mul(rem[i], inv_lead, p);
        quo[shift] = q;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            rem[shift + j] = fp::sub(rem[shift + j], fp::mul(q, b.c_[j], p), p);
    }
    return {FpPoly(p, std::move(quo)), FpPoly(p, std::move(rem))};
}

FpPoly FpPoly::div_exact(const FpPoly& b) const {
    auto [q, r] = divmod(*this, b);
    if (!r.is_zero())
        throw domain_error("inexact polynomial division");
    return q;
}

FpPoly FpPoly::gcd(const FpPoly& a, const FpPoly& b) {
    a.check_field(b);
    if (a.is_zero() && b.is_zero())
        throw domain_error("gcd of two zero polynomials");
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

FpPoly FpPoly::lcm(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero())
        throw domain_error("lcm with a zero polynomial");
    return (a * b).div_exact(gcd(a, b)).monic();
}

FpPoly FpPoly::mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m) {
    return (a * b) % m;
}

FpPoly FpPoly::powmod(const FpPoly& a, const Integer& e, const FpPoly& m) {
    if (e < 0)
        throw domain_error("negative exponent in powmod");
    FpPoly base = a % m;
    FpPoly acc = FpPoly::constant(a.modulus(), 1) % m;
    Integer k = e;
    while (k > 0) {
        if ((k & 1) != 0)
            acc = mulmod(acc, base, m);
        k >>= 1;
        if (k > 0)
            base = mulmod(base, base, m);
    }
    return acc;
}

FpPoly FpPoly::modinv(const FpPoly& a, const FpPoly& m) {
    a.check_field(m);
    // extended Euclid
    FpPoly r0 = m, r1 = a % m;
    FpPoly s0 = FpPoly(a.modulus()), s1 = FpPoly::constant(a.modulus(), 1);
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        FpPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0)
        throw domain_error("modinv of a non-unit");
    return s0.div_scalar(r0.lead()) % m;
}

int FpPoly::compare(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] != b.c_[i])
            return a.c_[i] < b.c_[i] ? -1 : 1;
    }
    return 0;
}

std::string FpPoly::str(const std::string& var) const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0)
            continue;
        if (!first)
            out << " + ";
        first = false;
        if (i == 0) {
            out << c_[i];
        } else {
            if (c_[i] != 1)
                out << c_[i] << "*";
            out << var;
            if (i > 1)
                out << "^" << i;
        }
    }
    return out.str();
}

FpPoly FpSquarefreeDecomposition::recombine(std::uint64_t p) const {
    FpPoly acc = FpPoly::constant(p, scalar);
    for (const auto& [g, e] : factors)
        acc *= g.pow(e);
    return acc;
}

namespace {

void squarefree_rec(const FpPoly& F, unsigned multiplier,
                    std::vector<FpSquarefreeFactor>& out) {
    if (F.is_constant())
        return;
    const FpPoly Fd = F.derivative();
    if (Fd.is_zero()) {
        squarefree_rec(F.pth_root(), multiplier * static_cast<unsigned>(F.modulus()), out);
        return;
    }
    // s carries every factor of multiplicity m as q^(m-1) when p does not
    // divide m and as q^m when it does; w = F/s is the product of the
    // p-coprime-multiplicity factors, each once.
    FpPoly s = FpPoly::gcd(F, Fd);
    FpPoly w = F.div_exact(s);
    unsigned i = 1;
    FpPoly y = w;
    FpPoly c = s;
    while (!y.is_constant()) {
        FpPoly ynext = FpPoly::gcd(c, y);
        FpPoly part = y.div_exact(ynext);
        if (!part.is_constant())
            out.push_back({part, multiplier * i});
        c = c.div_exact(ynext);
        y = std::move(ynext);
        ++i;
    }
    // what remains of c is the p-th-power portion
    if (!c.is_constant())
        squarefree_rec(c, multiplier, out);
}

} // namespace

FpSquarefreeDecomposition squarefree_decompose(const FpPoly& f) {
    if (f.is_zero())
        throw domain_error("squarefree decomposition of the zero polynomial");
    FpSquarefreeDecomposition out;
    out.scalar = f.lead();
    squarefree_rec(f.monic(), 1, out.factors);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const FpSquarefreeFactor& a, const FpSquarefreeFactor& b) {
                  if (a.multiplicity != b.multiplicity)
                      return a.multiplicity < b.multiplicity;
                  return FpPoly::compare(a.factor, b.factor) < 0;
              });
    return out;
}

namespace {

void equal_degree_split(const FpPoly& f, unsigned d, std::mt19937_64& rng,
                        std::vector<FpPoly>& out) {
    if (static_cast<unsigned>(f.degree()) == d) {
        out.push_back(f.monic());
        return;
    }
    const std::uint64_t p = f.modulus();
    const int n = f.degree();
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    while (true) {
        std::vector<std::uint64_t> rc(static_cast<std::size_t>(n), 0);
        for (auto& x : rc)
            x = dist(rng);
        FpPoly a(p, std::move(rc));
        if (a.is_constant())
            continue;
        FpPoly g(p);
        if (p == 2) {
            // trace map sum a^(2^i), i < d
            FpPoly tr = a;
            FpPoly cur = a;
            for (unsigned i = 1; i < d; ++i) {
                cur = FpPoly::mulmod(cur, cur, f);
                tr += cur;
            }
            g = FpPoly::gcd(f, tr.is_zero() ? f : tr);
        } else {
            const Integer e = (boost::multiprecision::pow(Integer(p), d) - 1) / 2;
            FpPoly b = FpPoly::powmod(a, e, f) - FpPoly::constant(p, 1);
            g = FpPoly::gcd(f, b.is_zero() ? f : b);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(f.div_exact(g), d, rng, out);
            return;
        }
    }
}

// f monic squarefree, deg >= 1
std::vector<FpPoly> factor_squarefree(const FpPoly& f, std::mt19937_64& rng) {
    std::vector<FpPoly> out;
    const std::uint64_t p = f.modulus();
    FpPoly v = f;
    FpPoly x = FpPoly::variable(p);
    FpPoly h = x;
    unsigned d = 0;
    while (v.degree() >= 2 * static_cast<int>(d + 1)) {
        ++d;
        h = FpPoly::powmod(h, Integer(p), v);
        FpPoly w = FpPoly::gcd(v, (h - x).is_zero() ? v : (h - x));
        if (w.degree() > 0) {
            equal_degree_split(w, d, rng, out);
            v = v.div_exact(w);
            if (v.is_constant())
                break;
            h = h % v;
        }
    }
    if (v.degree() > 0)
        out.push_back(v);
    return out;
}

} // namespace

std::vector<std::pair<FpPoly, unsigned>> factor_fp(const FpPoly& f, std::uint64_t seed) {
    if (f.is_zero())
        throw domain_error("factorisation of the zero polynomial");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<FpPoly, unsigned>> out;
    for (const auto& [g, e] : squarefree_decompose(f).factors)
        for (const auto& irr : factor_squarefree(g, rng))
            out.emplace_back(irr, e);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        const int c = FpPoly::compare(a.first, b.first);
        if (c != 0)
            return c < 0;
        return a.second < b.second;
    });
    return out;
}

bool is_irreducible(const FpPoly& f) {
    if (f.degree() < 1)
        return false;
    const std::uint64_t p = f.modulus();
    const unsigned n = static_cast<unsigned>(f.degree());
    const FpPoly x = FpPoly::variable(p);
    // Rabin: t^(p^n) == t mod f, and t^(p^(n/r)) - t is a unit mod f for
    // every prime r | n.
    FpPoly h = FpPoly::powmod(x, boost::multiprecision::pow(Integer(p), n), f);
    if (!((h - x) % f).is_zero())
        return false;
    for (const auto& r : prime_divisors(Integer(n))) {
        const unsigned m = n / r.convert_to<unsigned>();
        FpPoly hm = FpPoly::powmod(x, boost::multiprecision::pow(Integer(p), m), f);
        FpPoly diff = (hm - x) % f;
        if (diff.is_zero())
            return false;
        if (FpPoly::gcd(f, diff).degree() > 0)
            return false;
    }
    return true;
}

FpPoly pth_root_mod(const FpPoly& c, const FpPoly& q) {
    if (c.modulus() != q.modulus())
        throw domain_error("mixed moduli in pth_root_mod");
    if (!is_irreducible(q))
        throw domain_error("pth_root_mod requires an irreducible modulus");
    if (c.degree() >= q.degree())
        throw domain_error("pth_root_mod requires deg c < deg q");
    if (c.is_zero())
        return c;
    const std::uint64_t p = q.modulus();
    const std::size_t d = static_cast<std::size_t>(q.degree());
    // Frobenius matrix columns: (t^i)^p mod q on the power basis.
    const FpPoly fr = FpPoly::powmod(FpPoly::variable(p), Integer(p), q);
    std::vector<std::vector<std::uint64_t>> mat(d, std::vector<std::uint64_t>(d, 0));
    FpPoly col = FpPoly::constant(p, 1);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i)
            mat[i][j] = col.coeff(i);
        if (j + 1 < d)
            col = FpPoly::mulmod(col, fr, q);
    }
    std::vector<std::uint64_t> rhs(d, 0);
    for (std::size_t i = 0; i < d; ++i)
        rhs[i] = c.coeff(i);
    auto sol = fp_solve(std::move(mat), std::move(rhs), p);
    if (!sol)
        throw domain_error("Frobenius matrix unexpectedly singular");
    return FpPoly(p, std::move(*sol));
}

std::size_t fp_rank(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
    if (rows.empty())
        return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] % p == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[rank], rows[piv]);
        const std::uint64_t inv = fp::inv(rows[rank][col] % p, p);
        for (auto& x : rows[rank])
            x = fp::mul(x % p, inv, p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank)
                continue;
            const std::uint64_t factor = rows[i][col] % p;
            if (factor == 0)
                continue;
            for (std::size_t j = 0; j < ncols; ++j)
                rows[i][j] = fp::sub(rows[i][j] % p, fp::mul(factor, rows[rank][j], p), p);
        }
        ++rank;
    }
    return rank;
}

std::optional<std::vector<std::uint64_t>> fp_solve(std::vector<std::vector<std::uint64_t>> a,
                                                   std::vector<std::uint64_t> rhs,
                                                   std::uint64_t p) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        a[i].push_back(rhs[i]);
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && a[piv][col] % p == 0)
            ++piv;
        if (piv == n)
            continue;
        std::swap(a[rank], a[piv]);
        const std::uint64_t inv = fp::inv(a[rank][col] % p, p);
        for (auto& x : a[rank])
            x = fp::mul(x % p, inv, p);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank)
                continue;
            const std::uint64_t factor = a[i][col] % p;
            if (factor == 0)
                continue;
            for (std::size_t j = col; j <= n; ++j)
                a[i][j] = fp::sub(a[i][j] % p, fp::mul(factor, a[rank][j], p), p);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t i = rank; i < n; ++i)
        if (a[i][n] % p != 0)
            return std::nullopt;
    std::vector<std::uint64_t> x(n, 0);
    for (std::size_t i = 0; i < rank; ++i)
        x[pivot_col[i]] = a[i][n];
    return x;
}

} // namespace kummer
