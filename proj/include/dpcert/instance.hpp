#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dpcert/groebner.hpp"
#include "dpcert/lift.hpp"

namespace dpcert {

// Text instance format, one key per line:
//   domain <fp:p | q | qsqrt:d>
//   vars <n>
//   bounds i1 ... in          (0 = no pure power for that variable)
//   gen <polynomial>          (repeatable)
//   order <degrevlex | lex>   (optional, read by `length`)
//   context <p> <r> <e>       (optional lifting context)
// Lines starting with '#' are comments.
struct Instance {
  std::string name;
  Domain domain;
  std::size_t nvars = 0;
  std::vector<std::uint32_t> bounds;
  std::vector<Polynomial> gens;
  std::optional<MonomialOrder> order;
  std::optional<LiftingContext> context;
  std::vector<std::string> notes;

  Instance() : domain(Domain::rationals()) {}

  bool framed() const {  // every variable carries a pure power
    for (auto b : bounds)
      if (b == 0) return false;
    return true;
  }
};

Instance read_instance(std::istream& in, const std::string& name);
Instance read_instance_file(const std::string& path);
std::string write_instance(const Instance& inst);

// Builds the quotient frame; InvalidInstance when some variable is unbounded.
FramePtr frame_of(const Instance& inst, std::uint64_t basis_cap = kDefaultBasisCap);

// Pure powers (where bounded) plus the extra generators, for Groebner runs.
std::vector<Polynomial> full_ideal_generators(const Instance& inst);

// Lift input with f0 = the first generator.
LiftInput lift_input_of(const Instance& inst);

}  // namespace dpcert
