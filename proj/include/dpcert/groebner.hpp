#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dpcert/poly.hpp"

namespace dpcert {

enum class MonomialOrder { Degrevlex, Lex };

const char* order_name(MonomialOrder o);
std::optional<MonomialOrder> order_from_name(std::string_view s);

bool order_less(const Monomial& a, const Monomial& b, MonomialOrder o);

// Reduced Groebner basis over a field: elements monic and interreduced,
// sorted by increasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(Domain dom, std::size_t n, MonomialOrder order)
      : dom_(std::move(dom)), n_(n), order_(order) {}

  const Domain& domain() const { return dom_; }
  std::size_t nvars() const { return n_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elems_; }
  const std::vector<Monomial>& leading_monomials() const { return lms_; }

  void set_elements(std::vector<Polynomial> elems, std::vector<Monomial> lms) {
    elems_ = std::move(elems);
    lms_ = std::move(lms);
  }

 private:
  Domain dom_;
  std::size_t n_;
  MonomialOrder order_;
  std::vector<Polynomial> elems_;
  std::vector<Monomial> lms_;
};

// Buchberger with the coprimality and chain criteria; pair selection is the
// normal strategy (lowest lcm degree first, ties by creation index), so the
// result is deterministic in the input order.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, MonomialOrder order);

// Unique remainder modulo the basis; zero iff f lies in the ideal.
Polynomial gb_normal_form(const Polynomial& f, const GroebnerBasis& gb);

// Standard-monomial count; nullopt when the quotient is infinite-dimensional
// (some variable has no pure-power leading monomial).
std::optional<std::uint64_t> quotient_length(const GroebnerBasis& gb);

// Post-hoc check that every S-polynomial reduces to zero.
bool verify_spolys(const GroebnerBasis& gb);

}  // namespace dpcert
