#include "dpcert/combinat.hpp"

#include <numeric>

namespace dpcert {

PAdicDigits PAdicDigits::expand(std::uint64_t value, std::uint64_t p) {
  if (!is_prime_u64(p)) fail(Errc::InvalidPrime, std::to_string(p) + " is not prime");
  PAdicDigits out{p, {}};
  if (value == 0) {
    out.digits.push_back(0);
    return out;
  }
  while (value > 0) {
    out.digits.push_back(static_cast<std::uint32_t>(value % p));
    value /= p;
  }
  return out;
}

std::uint64_t PAdicDigits::value() const {
  std::uint64_t v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * base + *it;
  return v;
}

mpz_class binom_exact(std::uint64_t m, std::uint64_t n) {
  if (n > m) return mpz_class(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(n));
  return r;
}

namespace {

// binom(a, b) mod p for digits a, b < p, by the multiplicative formula.
std::uint64_t small_binom_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 1; i <= b; ++i) {
    num = (num * ((a - b + i) % p)) % p;
    den = (den * (i % p)) % p;
  }
  return (num * inv_mod(den, p)) % p;
}

}  // namespace

Scalar binom_mod_p(std::uint64_t m, std::uint64_t n, std::uint64_t p) {
  if (!is_prime_u64(p)) fail(Errc::InvalidPrime, std::to_string(p) + " is not prime");
  std::uint64_t acc = 1;
  // Digitwise product over base-p expansions; any digit pair with b > a kills
  // the whole product.
  while ((m > 0 || n > 0) && acc != 0) {
    std::uint64_t a = m % p, b = n % p;
    acc = (acc * small_binom_mod(a, b, p)) % p;
    m /= p;
    n /= p;
  }
  return Scalar(acc);
}

Scalar multinomial_mod_p(std::uint64_t top, const std::vector<std::uint64_t>& parts,
                         std::uint64_t p) {
  if (!is_prime_u64(p)) fail(Errc::InvalidPrime, std::to_string(p) + " is not prime");
  std::uint64_t sum = std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
  if (sum != top)
    fail(Errc::InvalidPartition, "parts sum to " + std::to_string(sum) + ", expected " +
                                     std::to_string(top));
  std::uint64_t rest = top;
  std::uint64_t acc = 1;
  for (std::uint64_t k : parts) {
    acc = (acc * binom_mod_p(rest, k, p).fp()) % p;
    if (acc == 0) break;
    rest -= k;
  }
  return Scalar(acc);
}

}  // namespace dpcert
