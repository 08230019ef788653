#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "dpcert/combinat.hpp"
#include "helpers.hpp"

using namespace dpcert;
using dpcert::test::Rng;

namespace {

// Independent oracle: Pascal's recurrence.
std::vector<std::vector<mpz_class>> pascal_table(std::size_t max_m) {
  std::vector<std::vector<mpz_class>> t(max_m + 1);
  for (std::size_t m = 0; m <= max_m; ++m) {
    t[m].resize(m + 1);
    t[m][0] = 1;
    t[m][m] = 1;
    for (std::size_t k = 1; k < m; ++k) t[m][k] = t[m - 1][k - 1] + t[m - 1][k];
  }
  return t;
}

}  // namespace

TEST_CASE("binom_exact against the Pascal recurrence") {
  auto pascal = pascal_table(40);
  for (std::size_t m = 0; m <= 40; ++m)
    for (std::size_t k = 0; k <= m; ++k) CHECK(binom_exact(m, k) == pascal[m][k]);
  CHECK(binom_exact(7, 3) == 35);
  CHECK(binom_exact(12, 0) == 1);
  CHECK(binom_exact(2, 5) == 0);
}

TEST_CASE("binom_mod_p basics") {
  CHECK(binom_mod_p(7, 3, 2) == Scalar(std::uint64_t{1}));  // 35 is odd
  CHECK(binom_mod_p(5, 2, 2) == Scalar(std::uint64_t{0}));  // 10 is even
  CHECK_THROWS_WITH_AS(binom_mod_p(5, 2, 6), doctest::Contains("InvalidPrime"), Error);
}

TEST_CASE("binom(2p-1, p) = 1 mod p") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    CHECK(binom_mod_p(2 * p - 1, p, p) == Scalar(std::uint64_t{1}));
    // bignum cross-check
    mpz_class exact = binom_exact(2 * p - 1, p);
    CHECK(mpz_fdiv_ui(exact.get_mpz_t(), static_cast<unsigned long>(p)) == 1);
  }
}

TEST_CASE("multinomials mod p") {
  CHECK(multinomial_mod_p(3, {1, 1, 1}, 3) == Scalar(std::uint64_t{0}));  // 6 = 0 mod 3
  for (std::uint64_t p : {2ull, 5ull})
    for (std::uint64_t n : {1ull, 4ull, 9ull})
      CHECK(multinomial_mod_p(n, {n}, p) == Scalar(std::uint64_t{1}));
  CHECK(multinomial_mod_p(4, {2, 2}, 2) == Scalar(std::uint64_t{0}));  // binom(4,2) = 6
  CHECK_THROWS_WITH_AS(multinomial_mod_p(5, {2, 2}, 3), doctest::Contains("InvalidPartition"),
                       Error);
}

TEST_CASE("Lucas agreement with the arbitrary-precision oracle") {
  Rng rng(2024);
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t m = rng.below(1000000);
    std::uint64_t n = rng.below(1000000);
    mpz_class exact = binom_exact(m, n);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
      std::uint64_t expected = mpz_fdiv_ui(exact.get_mpz_t(), static_cast<unsigned long>(p));
      CHECK(binom_mod_p(m, n, p).fp() == expected);
    }
  }
}

TEST_CASE("Vandermonde identity, exact") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t m = rng.below(51), n = rng.below(51), l = rng.below(51);
    mpz_class sum = 0;
    for (std::uint64_t k = 0; k <= l; ++k) sum += binom_exact(m, k) * binom_exact(n, l - k);
    CHECK(binom_exact(m + n, l) == sum);
  }
}

TEST_CASE("a digit with b > a kills the Lucas product") {
  // m = 1 + 0*p, n = 0 + 1*p: digit pair (0, 1) forces 0.
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    CHECK(binom_mod_p(1, p, p) == Scalar(std::uint64_t{0}));
    CHECK(binom_mod_p(p - 1, p, p) == Scalar(std::uint64_t{0}));
  }
}

TEST_CASE("p-adic digits") {
  PAdicDigits d = PAdicDigits::expand(0, 5);
  CHECK(d.digits == std::vector<std::uint32_t>{0});
  d = PAdicDigits::expand(38, 3);  // 38 = 2 + 0*3 + 1*9 + 1*27
  CHECK(d.digits == std::vector<std::uint32_t>{2, 0, 1, 1});
  CHECK(d.digits.back() != 0);
  CHECK(d.value() == 38);
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    std::uint64_t v = rng.below(1 << 30);
    for (std::uint64_t p : {2ull, 7ull}) {
      PAdicDigits e = PAdicDigits::expand(v, p);
      CHECK(e.value() == v);
      for (auto digit : e.digits) CHECK(digit < p);
      if (v > 0) CHECK(e.digits.back() != 0);
    }
  }
  CHECK_THROWS_AS(PAdicDigits::expand(5, 4), Error);
}
