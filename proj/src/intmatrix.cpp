#include "kummer/intmatrix.hpp"

#include "kummer/errors.hpp"

#include <algorithm>
#include <sstream>

namespace kummer {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw domain_error("matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& v = a.at(i, k);
            if (v == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) += v * b.at(k, j);
        }
    return c;
}

std::string IntMatrix::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j)
                out << " ";
            out << at(i, j).str();
        }
        out << "]";
        if (i + 1 < rows_)
            out << "\n";
    }
    return out.str();
}

namespace {

struct SnfState {
    IntMatrix a, u, v;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t c = 0; c < a.cols(); ++c)
            std::swap(a.at(i, c), a.at(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c)
            std::swap(u.at(i, c), u.at(j, c));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t r = 0; r < a.rows(); ++r)
            std::swap(a.at(r, i), a.at(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r)
            std::swap(v.at(r, i), v.at(r, j));
    }

    // row i -= q * row j
    void row_sub(std::size_t i, std::size_t j, const Integer& q) {
        if (q == 0)
            return;
        for (std::size_t c = 0; c < a.cols(); ++c)
            a.at(i, c) -= q * a.at(j, c);
        for (std::size_t c = 0; c < u.cols(); ++c)
            u.at(i, c) -= q * u.at(j, c);
    }

    // col i -= q * col j
    void col_sub(std::size_t i, std::size_t j, const Integer& q) {
        if (q == 0)
            return;
        for (std::size_t r = 0; r < a.rows(); ++r)
            a.at(r, i) -= q * a.at(r, j);
        for (std::size_t r = 0; r < v.rows(); ++r)
            v.at(r, i) -= q * v.at(r, j);
    }

    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            a.at(i, c) = -a.at(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c)
            u.at(i, c) = -u.at(i, c);
    }
};

// Brings the trailing submatrix at (t, t) to a state where a(t, t) is the
// only nonzero entry in its row and column. Pivots on the entry of minimal
// absolute value to keep coefficients small.
void clear_pivot(SnfState& s, std::size_t t) {
    const std::size_t k = s.a.rows(), n = s.a.cols();
    while (true) {
        // locate a minimal-absolute-value nonzero entry in the submatrix
        bool found = false;
        std::size_t bi = t, bj = t;
        Integer best;
        for (std::size_t i = t; i < k; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (s.a.at(i, j) == 0)
                    continue;
                Integer m = abs(s.a.at(i, j));
                if (!found || m < best) {
                    found = true;
                    best = m;
                    bi = i;
                    bj = j;
                }
            }
        if (!found)
            return;
        s.swap_rows(t, bi);
        s.swap_cols(t, bj);

        bool dirty = false;
        for (std::size_t i = t + 1; i < k; ++i) {
            if (s.a.at(i, t) == 0)
                continue;
            const Integer q = s.a.at(i, t) / s.a.at(t, t);
            s.row_sub(i, t, q);
            if (s.a.at(i, t) != 0)
                dirty = true; // remainder smaller than the pivot; re-pivot
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (s.a.at(t, j) == 0)
                continue;
            const Integer q = s.a.at(t, j) / s.a.at(t, t);
            s.col_sub(j, t, q);
            if (s.a.at(t, j) != 0)
                dirty = true;
        }
        if (!dirty)
            return;
    }
}

} // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
    const std::size_t k = m.rows(), n = m.cols();
    SnfState s{m, IntMatrix::identity(k), IntMatrix::identity(n)};

    const std::size_t bound = std::min(k, n);
    for (std::size_t t = 0; t < bound; ++t) {
        clear_pivot(s, t);
        if (s.a.at(t, t) == 0)
            break;
    }

    for (std::size_t i = 0; i < bound; ++i)
        if (s.a.at(i, i) < 0)
            s.negate_row(i);

    // Enforce the divisibility chain: merge offending adjacent pairs back
    // into a 2x2 block and rediagonalise until stable.
    bool stable = false;
    while (!stable) {
        stable = true;
        for (std::size_t i = 0; i + 1 < bound; ++i) {
            const Integer a = s.a.at(i, i);
            const Integer b = s.a.at(i + 1, i + 1);
            if (b == 0)
                continue;
            if (a == 0 || b % a != 0) {
                s.col_sub(i, i + 1, Integer(-1)); // brings b into column i
                clear_pivot(s, i);
                if (s.a.at(i, i) < 0)
                    s.negate_row(i);
                if (s.a.at(i + 1, i + 1) < 0)
                    s.negate_row(i + 1);
                stable = false;
            }
        }
    }

    SmithNormalForm out{std::vector<Integer>(k, Integer(0)), std::move(s.u), std::move(s.v)};
    for (std::size_t i = 0; i < bound; ++i)
        out.divisors[i] = s.a.at(i, i);
    return out;
}

std::size_t rank(const IntMatrix& m) {
    // fraction-free row echelon
    std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            a[i][j] = m.at(i, j);
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t piv = r;
        while (piv < m.rows() && a[piv][col] == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (a[i][col] == 0)
                continue;
            const Integer g = gcd(a[i][col], a[r][col]);
            const Integer fi = a[r][col] / g;
            const Integer fr = a[i][col] / g;
            for (std::size_t j = col; j < m.cols(); ++j)
                a[i][j] = a[i][j] * fi - a[r][j] * fr;
        }
        ++r;
    }
    return r;
}

Integer det(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw domain_error("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    // Bareiss fraction-free elimination
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m.at(i, j);
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t t = 0; t + 1 < n; ++t) {
        if (a[t][t] == 0) {
            std::size_t piv = t + 1;
            while (piv < n && a[piv][t] == 0)
                ++piv;
            if (piv == n)
                return 0;
            std::swap(a[t], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = t + 1; i < n; ++i)
            for (std::size_t j = t + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) / prev;
        prev = a[t][t];
    }
    return sign * a[n - 1][n - 1];
}

Integer kernel_size_mod_n(const IntMatrix& m, const Integer& n) {
    if (n < 1)
        throw domain_error("kernel modulus must be >= 1");
    const auto snf = smith_normal_form(m);
    Integer size = 1;
    for (const auto& d : snf.divisors)
        size *= gcd(d, n); // gcd(0, n) = n
    return size;
}

std::vector<std::vector<std::uint64_t>> enumerate_kernel_mod_n(const IntMatrix& m,
                                                               const Integer& n,
                                                               const Integer& cap) {
    if (n < 1)
        throw domain_error("kernel modulus must be >= 1");
    const auto snf = smith_normal_form(m);
    Integer size = 1;
    for (const auto& d : snf.divisors)
        size *= gcd(d, n);
    if (size > cap)
        throw resource_error("kernel of size " + size.str() + " exceeds the cap of " +
                             cap.str());

    const std::size_t k = m.rows();
    // a M = 0 mod n iff b D = 0 mod n where b = a U^{-1}; enumerate the
    // product-form solutions b and map back through a = b U.
    std::vector<Integer> step(k), count(k);
    for (std::size_t i = 0; i < k; ++i) {
        const Integer g = gcd(snf.divisors[i], n);
        count[i] = g;
        step[i] = n / g;
    }

    std::vector<std::vector<std::uint64_t>> out;
    out.reserve(size.convert_to<std::size_t>());
    std::vector<Integer> idx(k, Integer(0));
    while (true) {
        std::vector<std::uint64_t> a(k, 0);
        for (std::size_t j = 0; j < k; ++j) {
            Integer acc = 0;
            for (std::size_t i = 0; i < k; ++i)
                acc += idx[i] * step[i] * snf.left.at(i, j);
            acc %= n;
            if (acc < 0)
                acc += n;
            a[j] = acc.convert_to<std::uint64_t>();
        }
        out.push_back(std::move(a));
        // odometer over the b-indices
        std::size_t pos = 0;
        while (pos < k) {
            idx[pos] += 1;
            if (idx[pos] < count[pos])
                break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == k)
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace kummer
