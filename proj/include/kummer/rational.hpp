#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kummer {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

// Canonical: lowest terms, denominator > 0. Built through field arithmetic so
// canonicalisation never depends on the constructor's behaviour.
Rational make_rational(const Integer& num, const Integer& den);

std::string to_string(const Integer& n);

// "a" when the denominator is 1, else "a/b".
std::string to_string(const Rational& q);

// Accepts "a" or "a/b" with an optional leading sign. Empty on malformed
// input or a zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

bool fits_int64(const Integer& n);

// Distinct prime divisors of |n|, ascending. Trial division; meant for the
// small invariants that appear in reports.
std::vector<Integer> prime_divisors(Integer n);

constexpr std::uint64_t kDefaultCap = 1000000;
constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ull;

} // namespace kummer
