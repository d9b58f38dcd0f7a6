#pragma once

#include "kummer/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kummer {

// Dense integer matrix, row-major, exact entries.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Integer(0)) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Integer> a_;
};

// left * M * right is diagonal with the elementary divisors on the diagonal;
// left and right are unimodular. divisors has length rows(M), satisfies
// d_1 | d_2 | ... (every integer divides 0), entries >= 0, nonzero entries
// first.
struct SmithNormalForm {
    std::vector<Integer> divisors;
    IntMatrix left;
    IntMatrix right;
};

SmithNormalForm smith_normal_form(const IntMatrix& m);

// Rank over the rationals (fraction-free elimination, no SNF involved).
std::size_t rank(const IntMatrix& m);

// Determinant of a square matrix (Bareiss).
Integer det(const IntMatrix& m);

// #{a in (Z/n)^k : a M = 0 mod n} = prod_i gcd(d_i, n) with gcd(0, n) = n.
Integer kernel_size_mod_n(const IntMatrix& m, const Integer& n);

// All kernel vectors, lexicographically sorted, entries in [0, n). Throws
// resource_error when the kernel has more than cap elements.
std::vector<std::vector<std::uint64_t>> enumerate_kernel_mod_n(
    const IntMatrix& m, const Integer& n, const Integer& cap = Integer(kDefaultCap));

} // namespace kummer
