#pragma once

#include <cstdint>
#include <string_view>

#include "dpcert/instance.hpp"

namespace dpcert {

enum class Family { HypersurfaceQ, Quadratic, DirectSystem, GorensteinWitness };

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view s);

struct FamilyParams {
  std::uint64_t p = 2;
  std::uint32_t r = 1;      // hypersurface-q, gorenstein-witness
  std::uint32_t index = 1;  // direct-system stage
};

// Instance constructions:
//   hypersurface-q      x_1..x_q + x_{q+1}..x_{2q} + x_{2q+1}..x_{3q} with
//                       n = 3q and bounds q, context (p, r, q-1)
//   quadratic           one quadratic generator in 6(p-1) square-zero
//                       variables, context (p, 1, p-2); needs p >= 3
//   direct-system       stage N of the tower: each stage k < N contributes
//                       3p^k variables with bounds p^k and a product-triple
//                       summand; context (p, N-1, p^(N-1) - 1) once N >= 2
//   gorenstein-witness  the linked algebra B_0/(0 : f0) of the hypersurface
//                       instance, presented by annihilator generators
Instance gen_family(Family family, const FamilyParams& params);

struct KoblitzReport {
  bool dp_absent = false;           // no divided power structure (expected true)
  Verdict obstruction = Verdict::Unobstructed;  // expected Obstructed
  std::uint64_t len_char2_degrevlex = 0;
  std::uint64_t len_char2_lex = 0;
  std::uint64_t len_char0_degrevlex = 0;
  std::uint64_t len_char0_lex = 0;
  bool pass = false;
};

// The length-36 example: checks (a) no divided power structure over F_2,
// (b) obstructed at p=2, r=1, e=1, (c)/(d) quotient length 36 over F_2 and
// over Q(sqrt 2), each under both monomial orders.
KoblitzReport verify_koblitz();

// The two fibers of the example as instances (t specializes to 0 resp. sqrt 2).
Instance koblitz_instance();
Instance koblitz_char0_instance();

}  // namespace dpcert
