#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "dpcert/echelon.hpp"
#include "dpcert/poly.hpp"

namespace dpcert {

inline constexpr std::uint64_t kDefaultBasisCap = 1ull << 20;

struct MembershipCertificate {
  bool member;
  Polynomial remainder;
};

// The algebra k[x_1..x_n] / ((x_1^{i_1}, ..., x_n^{i_n}) + I), presented by
// the monomial basis {x^e : e_j < i_j} and the ideal image of I in reduced
// row echelon form. Basis monomials are indexed lexicographically by
// exponent vector. Immutable after construction.
class QuotientFrame {
 public:
  static std::shared_ptr<const QuotientFrame> build(Domain dom, std::size_t n,
                                                    std::vector<std::uint32_t> bounds,
                                                    const std::vector<Polynomial>& extra_gens,
                                                    std::uint64_t basis_cap = kDefaultBasisCap);

  const Domain& domain() const { return dom_; }
  std::size_t nvars() const { return n_; }
  const std::vector<std::uint32_t>& bounds() const { return bounds_; }
  // Generators of I, reduced modulo the pure powers; zero reductions dropped.
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::uint64_t basis_size() const { return basis_size_; }
  const Echelon& ideal() const { return ideal_; }

  std::uint64_t length() const { return basis_size_ - ideal_.rank(); }

  std::uint64_t index_of(const Monomial& m) const;
  Monomial monomial_at(std::uint64_t idx) const;

  SparseVec to_vec(const Polynomial& f) const;  // f must be reduced mod pure powers
  Polynomial from_vec(const SparseVec& v) const;

  // Drops every term with some exponent >= bound (those lie in (x^i)).
  Polynomial reduce_pure_powers(const Polynomial& f) const;

  // Canonical representative modulo (x^i) + I.
  Polynomial normal_form(const Polynomial& f) const;

  MembershipCertificate is_member(const Polynomial& f) const;

 private:
  QuotientFrame(Domain dom, std::size_t n, std::vector<std::uint32_t> bounds)
      : dom_(std::move(dom)), n_(n), bounds_(std::move(bounds)), ideal_(dom_, 0) {}

  Domain dom_;
  std::size_t n_;
  std::vector<std::uint32_t> bounds_;
  std::vector<Polynomial> gens_;
  std::uint64_t basis_size_ = 0;
  std::vector<std::uint64_t> strides_;
  Echelon ideal_;
};

using FramePtr = std::shared_ptr<const QuotientFrame>;

// Vector-space basis of (0 :_B f), in echelon form. B must be a complete
// intersection frame (no extra generators).
std::vector<Polynomial> annihilator(const QuotientFrame& frame, const Polynomial& f);

// Basis of the simultaneous annihilator (0 :_B J) for J spanned by `gens`.
std::vector<Polynomial> annihilator_of_set(const QuotientFrame& frame,
                                           const std::vector<Polynomial>& gens);

// RREF rows spanning f*B inside B (for subspace comparisons).
std::vector<Polynomial> principal_ideal_rows(const QuotientFrame& frame, const Polynomial& f);

// Dimension of {a : a x_j in ideal for all j} modulo the ideal subspace.
std::uint64_t socle_dim(const QuotientFrame& frame);

struct LinkageResult {
  FramePtr linked;                               // C_0 = B_0 / (0 : f)
  std::vector<Polynomial> annihilator_basis;     // vector-space basis of (0 : f)
  std::vector<Polynomial> annihilator_gens;      // ideal generators, lowest degree first
  std::uint64_t dim_linked;                      // dim C_0
  std::uint64_t dim_quotient;                    // dim B_0 / f B_0
  bool gorenstein;                               // socle of C_0 is one-dimensional
};

LinkageResult link(const QuotientFrame& frame, const Polynomial& f);

}  // namespace dpcert
