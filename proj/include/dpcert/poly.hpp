#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dpcert/arith.hpp"

namespace dpcert {

// Exponent vector with one slot per ambient variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : e_(n, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

  static Monomial var(std::size_t n, std::size_t j, std::uint32_t k = 1) {
    Monomial m(n);
    m.e_[j] = k;
    return m;
  }

  std::size_t nvars() const { return e_.size(); }
  std::uint32_t operator[](std::size_t j) const { return e_[j]; }
  std::uint32_t& operator[](std::size_t j) { return e_[j]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (auto e : e_) d += e;
    return d;
  }

  bool is_one() const {
    for (auto e : e_)
      if (e) return false;
    return true;
  }

  Monomial mul(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t j = 0; j < e_.size(); ++j) r.e_[j] += o.e_[j];
    return r;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t j = 0; j < e_.size(); ++j)
      if (e_[j] > o.e_[j]) return false;
    return true;
  }

  Monomial div(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t j = 0; j < e_.size(); ++j) r.e_[j] -= o.e_[j];
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t j = 0; j < e_.size(); ++j)
      if (o.e_[j] > r.e_[j]) r.e_[j] = o.e_[j];
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (std::size_t j = 0; j < e_.size(); ++j)
      if (e_[j] && o.e_[j]) return false;
    return true;
  }

  Monomial pow(std::uint64_t k) const {
    Monomial r = *this;
    for (auto& e : r.e_) e = static_cast<std::uint32_t>(e * k);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  std::vector<std::uint32_t> e_;
};

// Graded lexicographic: total degree first, ties broken from x1 (a larger
// exponent on an earlier variable makes the monomial larger).
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    std::uint64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (std::size_t j = 0; j < a.nvars(); ++j) {
      if (a[j] != b[j]) return a[j] < b[j];
    }
    return false;
  }
};

// Sparse multivariate polynomial with exact coefficients. Terms are kept in
// canonical form: no zero coefficients, monomials pairwise distinct.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, GrlexLess>;

  Polynomial(Domain dom, std::size_t n) : dom_(std::move(dom)), n_(n) {}

  static Polynomial zero(const Domain& dom, std::size_t n) { return Polynomial(dom, n); }
  static Polynomial constant(const Domain& dom, std::size_t n, const Scalar& c) {
    Polynomial p(dom, n);
    p.add_term(Monomial(n), c);
    return p;
  }
  static Polynomial term(const Domain& dom, std::size_t n, const Monomial& m, const Scalar& c) {
    Polynomial p(dom, n);
    p.add_term(m, c);
    return p;
  }

  const Domain& domain() const { return dom_; }
  std::size_t nvars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_)
      if (m.total_degree() > d) d = m.total_degree();
    return d;
  }

  Scalar coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? dom_.zero() : it->second;
  }

  Scalar constant_coeff() const { return coeff(Monomial(n_)); }

  void add_term(const Monomial& m, const Scalar& c) {
    if (dom_.is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second = dom_.add(it->second, c);
      if (dom_.is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial add(const Polynomial& o) const;
  Polynomial sub(const Polynomial& o) const;
  Polynomial neg() const;
  Polynomial mul(const Polynomial& o) const;
  Polynomial scale(const Scalar& c) const;
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(std::uint64_t k) const;

  // Canonical text form: grlex-descending terms, parser-compatible.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dom_ == b.dom_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  Domain dom_;
  std::size_t n_;
  TermMap terms_;
};

inline constexpr std::size_t kDefaultWpTermCap = 16;

// w_p(f) = sum over compositions (l_1..l_m) of p with every l_j < p of
// (1/(l_1! ... l_m!)) * prod_j (a_j x^{J_j})^{l_j}, where f = sum a_j x^{J_j}
// is the decomposition into distinct monomials. Requires (p-1)! invertible:
// characteristic 0 or characteristic p.
Polynomial wp(const Polynomial& f, std::uint64_t p, std::size_t term_cap = kDefaultWpTermCap);

// f^(p^s) in characteristic p: coefficients to the p^s, exponents scaled.
Polynomial frobenius_power(const Polynomial& f, std::uint32_t s);

}  // namespace dpcert
