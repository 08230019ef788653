#include "dpcert/poly.hpp"

#include <sstream>

namespace dpcert {

Polynomial Polynomial::add(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::sub(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, dom_.neg(c));
  return r;
}

Polynomial Polynomial::neg() const {
  Polynomial r(dom_, n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, dom_.neg(c));
  return r;
}

Polynomial Polynomial::mul(const Polynomial& o) const {
  Polynomial r(dom_, n_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma.mul(mb), dom_.mul(ca, cb));
  return r;
}

Polynomial Polynomial::scale(const Scalar& c) const {
  Polynomial r(dom_, n_);
  if (dom_.is_zero(c)) return r;
  for (const auto& [m, a] : terms_) r.add_term(m, dom_.mul(a, c));
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  Polynomial r(dom_, n_);
  if (dom_.is_zero(c)) return r;
  for (const auto& [mm, a] : terms_) r.add_term(mm.mul(m), dom_.mul(a, c));
  return r;
}

Polynomial Polynomial::pow(std::uint64_t k) const {
  Polynomial result = Polynomial::constant(dom_, n_, dom_.one());
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result.mul(base);
    if (k >>= 1) base = base.mul(base);
  }
  return result;
}

namespace {

void append_monomial(std::ostringstream& out, const Monomial& m, bool leading_star) {
  bool first = !leading_star;
  for (std::size_t j = 0; j < m.nvars(); ++j) {
    if (m[j] == 0) continue;
    if (!first) out << "*";
    first = false;
    out << "x" << (j + 1);
    if (m[j] > 1) out << "^" << m[j];
  }
}

// One printable piece: rational magnitude, optional sqrt factor, monomial.
void append_piece(std::ostringstream& out, bool is_first, const mpq_class& coeff, bool with_t,
                  const Monomial& m) {
  mpq_class mag = coeff < 0 ? mpq_class(-coeff) : coeff;
  if (coeff < 0)
    out << (is_first ? "-" : " - ");
  else if (!is_first)
    out << " + ";
  bool unit = (mag == 1);
  bool printed_coeff = false;
  if (!unit || (!with_t && m.is_one())) {
    out << mag.get_str();
    printed_coeff = true;
  }
  if (with_t) {
    if (printed_coeff) out << "*";
    out << "t";
    printed_coeff = true;
  }
  append_monomial(out, m, printed_coeff);
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending grlex; quadratic coefficients split into a rational piece and
  // a sqrt piece so the output stays inside the input grammar.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& m = it->first;
    const Scalar& c = it->second;
    switch (dom_.kind()) {
      case Domain::Kind::PrimeField:
        append_piece(out, first, mpq_class(static_cast<unsigned long>(c.fp())), false, m);
        first = false;
        break;
      case Domain::Kind::Rationals:
        append_piece(out, first, c.rat(), false, m);
        first = false;
        break;
      case Domain::Kind::QuadraticField: {
        const Quad& q = c.quad();
        if (q.a != 0) {
          append_piece(out, first, q.a, false, m);
          first = false;
        }
        if (q.b != 0) {
          append_piece(out, first, q.b, true, m);
          first = false;
        }
        break;
      }
    }
  }
  return out.str();
}

namespace {

std::size_t composition_count(std::size_t m, std::uint64_t p) {
  // (m + p - 1 choose p), saturating; only used for the cap message.
  long double v = 1;
  for (std::uint64_t i = 1; i <= p; ++i) v = v * (m + p - i) / i;
  return v > 1e18 ? ~std::size_t{0} : static_cast<std::size_t>(v);
}

}  // namespace

Polynomial wp(const Polynomial& f, std::uint64_t p, std::size_t term_cap) {
  const Domain& dom = f.domain();
  if (!is_prime_u64(p)) fail(Errc::InvalidPrime, std::to_string(p) + " is not prime");
  std::uint64_t ch = dom.characteristic();
  if (ch != 0 && ch != p)
    fail(Errc::WrongCharacteristic,
         "w_p needs characteristic 0 or " + std::to_string(p) + ", domain has " +
             std::to_string(ch));
  std::size_t m = f.term_count();
  if (m > term_cap)
    fail(Errc::TermCapExceeded, "w_p over " + std::to_string(m) + " terms (cap " +
                                    std::to_string(term_cap) + ", ~" +
                                    std::to_string(composition_count(m, p)) + " compositions)");

  std::vector<const Monomial*> mons;
  std::vector<const Scalar*> coeffs;
  mons.reserve(m);
  coeffs.reserve(m);
  for (const auto& [mon, c] : f.terms()) {
    mons.push_back(&mon);
    coeffs.push_back(&c);
  }

  // Precompute 1/i! for i < p.
  std::vector<Scalar> fact_unit(p);
  for (std::uint64_t i = 0; i < p; ++i) fact_unit[i] = dom.factorial_unit(i);

  Polynomial out(dom, f.nvars());
  std::vector<std::uint32_t> comp(m, 0);

  // Backtracking over compositions of p into m parts, each part < p.
  auto rec = [&](auto&& self, std::size_t idx, std::uint64_t remaining, const Monomial& mon_acc,
                 const Scalar& coeff_acc) -> void {
    if (idx + 1 == m) {
      // Last slot takes the remainder; l_j = p is excluded.
      if (remaining >= p) return;
      Scalar c = dom.mul(coeff_acc, fact_unit[remaining]);
      c = dom.mul(c, dom.pow(*coeffs[idx], remaining));
      out.add_term(mon_acc.mul(mons[idx]->pow(remaining)), c);
      return;
    }
    std::uint64_t top = std::min<std::uint64_t>(remaining, p - 1);
    for (std::uint64_t l = 0; l <= top; ++l) {
      Scalar c = dom.mul(coeff_acc, fact_unit[l]);
      c = dom.mul(c, dom.pow(*coeffs[idx], l));
      self(self, idx + 1, remaining - l, mon_acc.mul(mons[idx]->pow(l)), c);
    }
  };

  if (m == 0) return out;          // w_p(0) = 0
  if (m == 1) return out;          // single monomial: l_1 = p excluded, empty index set
  rec(rec, 0, p, Monomial(f.nvars()), dom.one());
  return out;
}

Polynomial frobenius_power(const Polynomial& f, std::uint32_t s) {
  const Domain& dom = f.domain();
  std::uint64_t p = dom.characteristic();
  if (p == 0) fail(Errc::WrongCharacteristic, "Frobenius powering needs characteristic p > 0");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < s; ++i) {
    if (q > (1ull << 31) / p) fail(Errc::ResourceCap, "p^s exponent overflow");
    q *= p;
  }
  Polynomial out(dom, f.nvars());
  for (const auto& [m, c] : f.terms()) out.add_term(m.pow(q), dom.pow(c, q));
  return out;
}

}  // namespace dpcert
