#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace wordmap {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
// Distances and bounds; denominators stay small (n, k, products of those).
using Fraction = boost::rational<std::int64_t>;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);  // least prime >= n

// Trial division; returns (prime, exponent) pairs in increasing order.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

// q = p^e with p prime, or nullopt.
std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t q);

// Throws std::overflow_error past 2^64.
std::uint64_t checked_pow(std::uint64_t base, int e);

std::int64_t mod_inverse(std::int64_t a, std::int64_t m);  // throws if not a unit
std::uint64_t isqrt(std::uint64_t n);

double to_double(const Fraction& f);

}  // namespace wordmap
