#include "doctest.h"

#include <numeric>

#include "wordmap/number_theory.hpp"

using namespace wordmap;

namespace {

bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("is_prime agrees with trial division below 20000") {
  for (std::uint64_t n = 0; n < 20000; ++n) CHECK(is_prime(n) == trial_prime(n));
}

TEST_CASE("is_prime on large values") {
  CHECK(is_prime(1000000007ULL));
  CHECK(is_prime(18446744073709551557ULL));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to 2,3,5,7
  CHECK_FALSE(is_prime(18446744073709551615ULL));
}

TEST_CASE("factorize recomposes") {
  for (std::uint64_t n = 1; n < 3000; ++n) {
    std::uint64_t prod = 1;
    for (auto [p, e] : factorize(n)) {
      CHECK(trial_prime(p));
      for (int i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("divisors and prime powers") {
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(prime_power(49) == std::make_pair(std::uint64_t{7}, 2));
  CHECK_FALSE(prime_power(12).has_value());
  CHECK_FALSE(prime_power(1).has_value());
}

TEST_CASE("modular helpers") {
  CHECK(pow_mod(3, 200, 1000003) == pow_mod(9, 100, 1000003));
  CHECK(mod_inverse(3, 7) == 5);
  CHECK_THROWS_AS(mod_inverse(2, 4), std::domain_error);
  CHECK_THROWS_AS(checked_pow(2, 64), std::overflow_error);
  CHECK(checked_pow(3, 4) == 81);
  CHECK(isqrt(99) == 9);
  CHECK(isqrt(100) == 10);
  CHECK(next_prime(90) == 97);
}
