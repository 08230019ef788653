#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dpcert/parse.hpp"
#include "dpcert/poly.hpp"

namespace dpcert::test {

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
};

inline Polynomial rand_poly(const Domain& dom, std::size_t n, Rng& rng, std::size_t max_terms,
                            std::uint32_t max_exp, long coeff_range = 9) {
  Polynomial f(dom, n);
  std::size_t terms = 1 + rng.below(max_terms);
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m(n);
    for (std::size_t j = 0; j < n; ++j) m[j] = static_cast<std::uint32_t>(rng.below(max_exp + 1));
    long c = static_cast<long>(rng.below(2 * static_cast<std::uint64_t>(coeff_range) + 1)) -
             coeff_range;
    f.add_term(m, dom.from_int(c));
  }
  return f;
}

// Reduces a rational-coefficient polynomial modulo p.
inline Polynomial poly_mod_p(const Polynomial& f, std::uint64_t p) {
  Domain fp = Domain::prime_field(p);
  Polynomial out(fp, f.nvars());
  for (const auto& [m, c] : f.terms()) out.add_term(m, fp.from_rational(c.rat()));
  return out;
}

inline Polynomial P(const std::string& text, std::size_t n, const Domain& dom) {
  return parse_poly(text, n, dom);
}

}  // namespace dpcert::test
