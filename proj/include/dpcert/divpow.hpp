#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpcert/artin.hpp"
#include "dpcert/poly.hpp"

namespace dpcert {

// A divided power structure on the augmentation ideal of a framed quotient
// in characteristic p with bounds <= p, encoded by the values gamma_p(x_j).
// Everything else is induced: gamma_p is zero on monomials of degree >= 2
// (x^p = 0 under the bound hypothesis), so on f = sum a_j x_j + (higher part)
//   gamma_p(f) = sum a_j^p gamma_p(x_j) + w_p(f)   (computed modulo the frame ideal).
class DPStructure {
 public:
  // Validates: characteristic p > 0, bounds <= p, assignments inside the
  // augmentation ideal. Empty assignment list means all zero.
  static DPStructure canonical(FramePtr frame, std::vector<Polynomial> assignments = {});
  // No validation; for negative controls in tests.
  static DPStructure unchecked(FramePtr frame, std::vector<Polynomial> assignments);

  const FramePtr& frame() const { return frame_; }
  const Polynomial& gamma_p(std::size_t j) const { return gamma_[j]; }
  std::uint64_t p() const { return frame_->domain().characteristic(); }

  // gamma_p evaluated on an algebra element (normal-formed internally).
  // NotInIdeal when the element has a constant term.
  Polynomial delta(const Polynomial& f, std::size_t wp_term_cap = kDefaultWpTermCap) const;

 private:
  DPStructure(FramePtr frame, std::vector<Polynomial> gamma)
      : frame_(std::move(frame)), gamma_(std::move(gamma)) {}

  FramePtr frame_;
  std::vector<Polynomial> gamma_;
};

struct AxiomReport {
  bool ok = true;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::string failure;  // first violation, with witness
};

// Randomized sweep of the three gamma_p axioms (plus closure into the
// augmentation ideal) on `sample_count` random pairs and scalars.
AxiomReport check_delta_axioms(const DPStructure& dp, std::size_t sample_count,
                               std::uint64_t seed);

struct DpExistenceReport {
  bool exists = true;
  std::string generator;  // first failing generator, printed
  Polynomial remainder;   // nonzero normal form of w_p(generator)
  DpExistenceReport() : remainder(Domain::rationals(), 0) {}
};

// Existence of a divided power structure on the augmentation ideal:
// w_p(g) must lie in (x^i) + I for every generator g. Requires bounds <= p
// and generators inside the square of the maximal ideal.
DpExistenceReport dp_exists(const QuotientFrame& frame,
                            std::size_t wp_term_cap = kDefaultWpTermCap);

// Substitutes frame variables by `images` (elements of the target frame).
Polynomial eval_subst(const Polynomial& f, const std::vector<Polynomial>& images,
                      const QuotientFrame& target);

struct HomReport {
  bool dp_compatible = true;
  std::string detail;
};

// Checks that x_j -> images[j] defines an algebra map (relations go to zero;
// NotAHomomorphism otherwise) and whether it commutes with gamma_p on the
// frame variables.
HomReport check_dp_hom(const std::vector<Polynomial>& images, const DPStructure& source,
                       const DPStructure& target);

struct SymEmbedResult {
  FramePtr source;                 // k[x]/(x^{i_l})
  FramePtr target;                 // k[y_{l,j}]/(y^2)
  std::vector<Polynomial> images;  // x_l -> sum_j y_{l,j}
  bool injective = false;
  bool delta_zero = false;
};

// The symmetric-power embedding x_l -> y_{l,1} + ... + y_{l,i_l-1} into an
// exterior-style square-zero frame; bounds must lie in [2, p].
SymEmbedResult sym_embed(std::uint64_t p, const std::vector<std::uint32_t>& bounds);

// Truncated divided power polynomial algebra over F_p: basis symbols
// x^{[m_1]}...x^{[m_n]} with m_j < cap_j and product rule
//   x^{[m]} x^{[m']} = prod_j binom(m_j + m'_j, m_j) x^{[m + m']},
// zero past the caps. Elements reuse the sparse Polynomial container, with
// exponent vectors read as divided-power indices.
class TruncatedDPAlgebra {
 public:
  using Element = Polynomial;

  TruncatedDPAlgebra(std::uint64_t p, std::vector<std::uint32_t> caps);

  const Domain& domain() const { return dom_; }
  const std::vector<std::uint32_t>& caps() const { return caps_; }
  std::size_t nvars() const { return caps_.size(); }

  Element zero() const { return Polynomial::zero(dom_, caps_.size()); }
  Element one() const { return Polynomial::constant(dom_, caps_.size(), dom_.one()); }
  // x_j^{[m]}; zero once m >= cap_j.
  Element sym(std::size_t j, std::uint32_t m) const;

  Element mul(const Element& a, const Element& b) const;

  // The algebra map sending x^{[m]} to x^m / m! in a framed quotient with
  // the same caps; needs caps <= p so the factorials invert.
  Polynomial to_quotient(const Element& a, const QuotientFrame& frame) const;

 private:
  Domain dom_;
  std::vector<std::uint32_t> caps_;
};

// Monomial pair (a, x), both of degree >= 1, whose axiom-2 defect
// gamma_p(NF(a*x)) - a^p gamma_p(x) is nonzero. Under bounds <= p every
// element of the augmentation ideal has a^p = 0 and NF(a*x) has no linear
// part, so the defect is the same for every gamma assignment: one witness
// rules out all candidate structures.
std::optional<std::pair<Monomial, Monomial>> assignment_free_defect(
    const QuotientFrame& frame, std::size_t max_pairs = 1 << 20);

}  // namespace dpcert
