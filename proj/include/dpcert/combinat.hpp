#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "dpcert/arith.hpp"

namespace dpcert {

// Base-p expansion, least significant digit first.
struct PAdicDigits {
  std::uint64_t base;
  std::vector<std::uint32_t> digits;

  static PAdicDigits expand(std::uint64_t value, std::uint64_t p);
  std::uint64_t value() const;
};

// Exact binomial coefficient; 0 when n > m.
mpz_class binom_exact(std::uint64_t m, std::uint64_t n);

// binom(m, n) mod p computed digitwise (Lucas). Result lives in F_p.
Scalar binom_mod_p(std::uint64_t m, std::uint64_t n, std::uint64_t p);

// top! / prod(parts_i!) mod p, via nested binomials. Requires sum(parts) == top.
Scalar multinomial_mod_p(std::uint64_t top, const std::vector<std::uint64_t>& parts,
                         std::uint64_t p);

}  // namespace dpcert
