#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpcert/artin.hpp"
#include "dpcert/poly.hpp"

namespace dpcert {

// Target ring data for the lifting obstruction: R local with residue field
// of characteristic p, p m_R = 0, m_R^{e+1} = 0, and q = p^r bounding the
// frame exponents. Nothing else about R matters.
struct LiftingContext {
  std::uint64_t p;
  std::uint32_t r;
  std::uint64_t e;

  LiftingContext(std::uint64_t p_, std::uint32_t r_, std::uint64_t e_);

  std::uint64_t q() const;             // p^r
  std::uint64_t half_step() const;     // p^(r-1)
};

enum class Verdict { Obstructed, Unobstructed, HypothesisNotMet };
enum class Method { Membership, Certificate, Auto };

const char* verdict_name(Verdict v);
const char* method_name(Method m);
std::optional<Method> method_from_name(std::string_view s);

struct FloorBreakdown {
  Monomial monomial;
  std::uint64_t floor_sum;
  bool ok;  // floor_sum >= e + 1
};

struct FloorHypothesisResult {
  bool ok = true;
  std::vector<FloorBreakdown> rows;
};

// The per-monomial hypothesis sum_j floor(q l_j / i_j) >= e + 1. Unbounded
// variables (bound 0) contribute nothing to the sum; lift_obstruction
// rejects such inputs anyway since the criterion needs i_j <= q throughout.
FloorHypothesisResult check_floor_hypothesis(const Polynomial& f0,
                                             const std::vector<std::uint32_t>& bounds,
                                             const LiftingContext& ctx);

// Coefficient certificate from the trinomial expansion: writes f0 = y1+y2+y3
// in three symbols, expands (p-1)! f0^{q-1} w_p(f0^{p^{r-1}}) in the
// truncation k[y]/(y^(q+1)) and extracts the coefficient at
// y1^{q-h} y2^{q-h} y3^{2h-1} with h = p^{r-1}.
struct AlphaCertificate {
  Scalar alpha;                                  // element of F_p
  Monomial target;                               // in the ambient x-variables
  std::array<std::uint64_t, 3> symbol_exponents; // (q-h, q-h, 2h-1)
  std::array<std::size_t, 3> roles;              // input monomial index playing y1, y2, y3
};

// Symbolic version: three unit-coefficient monomial symbols.
AlphaCertificate certificate_alpha(const LiftingContext& ctx);

// Concrete version: f0 must be a sum of exactly three monomials with
// pairwise disjoint variable supports, and some labeling must keep every
// variable's degree in y1^{q-h} y2^{q-h} y3^{2h-1} below q
// (CertificateInapplicable otherwise).
AlphaCertificate certificate_alpha(const Polynomial& f0, const LiftingContext& ctx);

struct ObstructionReport {
  Verdict verdict = Verdict::Unobstructed;
  Method method_used = Method::Membership;
  LiftingContext ctx;
  FloorHypothesisResult floor;
  std::optional<MembershipCertificate> membership;
  std::optional<AlphaCertificate> alpha;
  std::string instance;

  explicit ObstructionReport(const LiftingContext& c) : ctx(c) {}
};

struct LiftInput {
  Domain domain;
  std::size_t nvars = 0;
  std::vector<std::uint32_t> bounds;
  std::vector<Polynomial> gens;  // must include f0
  Polynomial f0;
  std::string name;

  LiftInput() : domain(Domain::rationals()), f0(Domain::rationals(), 0) {}
};

// Tests whether w_p(f0^{p^(r-1)}) lies in (x^i) + I. Obstructed = not a
// member: the quotient then admits no flat lift to any R matching ctx.
// The membership method builds the frame (ResourceCap past `basis_cap`);
// the certificate method works in three symbols and needs bounds all q,
// gens = {f0}. Auto picks membership when the basis fits the cap.
ObstructionReport lift_obstruction(const LiftInput& input, const LiftingContext& ctx,
                                   Method method = Method::Auto,
                                   std::uint64_t basis_cap = kDefaultBasisCap);

// Frame-level convenience wrapper.
ObstructionReport lift_obstruction(const Polynomial& f0, const QuotientFrame& frame,
                                   const LiftingContext& ctx, Method method = Method::Auto,
                                   std::uint64_t basis_cap = kDefaultBasisCap);

}  // namespace dpcert
