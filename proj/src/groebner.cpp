#include "dpcert/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dpcert {

const char* order_name(MonomialOrder o) {
  return o == MonomialOrder::Degrevlex ? "degrevlex" : "lex";
}

std::optional<MonomialOrder> order_from_name(std::string_view s) {
  if (s == "degrevlex") return MonomialOrder::Degrevlex;
  if (s == "lex") return MonomialOrder::Lex;
  return std::nullopt;
}

bool order_less(const Monomial& a, const Monomial& b, MonomialOrder o) {
  if (o == MonomialOrder::Lex) {
    for (std::size_t j = 0; j < a.nvars(); ++j)
      if (a[j] != b[j]) return a[j] < b[j];
    return false;
  }
  std::uint64_t da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  for (std::size_t j = a.nvars(); j-- > 0;)
    if (a[j] != b[j]) return a[j] > b[j];
  return false;
}

namespace {

// Order-maximal term; f must be nonzero.
std::pair<Monomial, Scalar> leading_term(const Polynomial& f, MonomialOrder o) {
  auto it = f.terms().begin();
  const Monomial* best = &it->first;
  const Scalar* c = &it->second;
  for (++it; it != f.terms().end(); ++it) {
    if (order_less(*best, it->first, o)) {
      best = &it->first;
      c = &it->second;
    }
  }
  return {*best, *c};
}

Polynomial make_monic(const Polynomial& f, MonomialOrder o) {
  if (f.is_zero()) return f;
  auto [lm, lc] = leading_term(f, o);
  return f.scale(f.domain().inv(lc));
}

Polynomial normal_form_impl(const Polynomial& f, const std::vector<Polynomial>& basis,
                            const std::vector<Monomial>& lms, MonomialOrder order) {
  const Domain& dom = f.domain();
  Polynomial rest = f;
  Polynomial result(dom, f.nvars());
  while (!rest.is_zero()) {
    auto [m, c] = leading_term(rest, order);
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!lms[i].divides(m)) continue;
      Scalar factor = dom.div(c, leading_term(basis[i], order).second);
      rest = rest.sub(basis[i].mul_term(m.div(lms[i]), factor));
      reduced = true;
      break;
    }
    if (!reduced) {
      // Irreducible leading term moves to the result; everything left in
      // rest is order-smaller.
      result.add_term(m, c);
      rest.add_term(m, dom.neg(c));
    }
  }
  return result;
}

Polynomial spoly(const Polynomial& f, const Monomial& lmf, const Polynomial& g,
                 const Monomial& lmg, MonomialOrder order) {
  const Domain& dom = f.domain();
  Monomial l = lmf.lcm(lmg);
  Scalar cf = leading_term(f, order).second;
  Scalar cg = leading_term(g, order).second;
  Polynomial a = f.mul_term(l.div(lmf), dom.inv(cf));
  Polynomial b = g.mul_term(l.div(lmg), dom.inv(cg));
  return a.sub(b);
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, MonomialOrder order) {
  Domain dom = gens.empty() ? Domain::rationals() : gens.front().domain();
  std::size_t n = gens.empty() ? 0 : gens.front().nvars();
  GroebnerBasis gb(dom, n, order);

  std::vector<Polynomial> basis;
  std::vector<Monomial> lms;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial m = make_monic(g, order);
    basis.push_back(m);
    lms.push_back(leading_term(m, order).first);
  }
  if (basis.empty()) return gb;

  struct Pair {
    std::uint64_t lcm_deg;
    std::uint64_t seq;
    std::size_t i, j;
    bool operator<(const Pair& o) const {
      return lcm_deg != o.lcm_deg ? lcm_deg < o.lcm_deg : seq < o.seq;
    }
  };

  std::set<Pair> queue;
  std::map<std::pair<std::size_t, std::size_t>, bool> treated;
  std::uint64_t seq = 0;
  auto push_pair = [&](std::size_t i, std::size_t j) {
    queue.insert(Pair{lms[i].lcm(lms[j]).total_degree(), seq++, i, j});
  };
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

  auto is_treated = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    auto it = treated.find({a, b});
    return it != treated.end() && it->second;
  };

  while (!queue.empty()) {
    Pair pr = *queue.begin();
    queue.erase(queue.begin());
    std::size_t i = pr.i, j = pr.j;
    treated[{i, j}] = true;

    if (lms[i].coprime(lms[j])) continue;  // first criterion

    Monomial l = lms[i].lcm(lms[j]);
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (lms[k].divides(l) && is_treated(i, k) && is_treated(j, k)) chain = true;
    }
    if (chain) continue;  // second criterion

    Polynomial s = spoly(basis[i], lms[i], basis[j], lms[j], order);
    Polynomial nf = normal_form_impl(s, basis, lms, order);
    if (nf.is_zero()) continue;
    nf = make_monic(nf, order);
    basis.push_back(nf);
    lms.push_back(leading_term(nf, order).first);
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) push_pair(k, basis.size() - 1);
  }

  // Interreduce to the reduced basis.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<Polynomial> others;
      std::vector<Monomial> other_lms;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (k == i) continue;
        others.push_back(basis[k]);
        other_lms.push_back(lms[k]);
      }
      Polynomial nf = normal_form_impl(basis[i], others, other_lms, order);
      if (nf != basis[i]) {
        changed = true;
        if (nf.is_zero()) {
          basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
          lms.erase(lms.begin() + static_cast<std::ptrdiff_t>(i));
          --i;
        } else {
          basis[i] = make_monic(nf, order);
          lms[i] = leading_term(basis[i], order).first;
        }
      }
    }
  }

  std::vector<std::size_t> perm(basis.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return order_less(lms[a], lms[b], order);
  });
  std::vector<Polynomial> sorted_basis;
  std::vector<Monomial> sorted_lms;
  for (auto idx : perm) {
    sorted_basis.push_back(std::move(basis[idx]));
    sorted_lms.push_back(std::move(lms[idx]));
  }
  gb.set_elements(std::move(sorted_basis), std::move(sorted_lms));
  return gb;
}

Polynomial gb_normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form_impl(f, gb.elements(), gb.leading_monomials(), gb.order());
}

std::optional<std::uint64_t> quotient_length(const GroebnerBasis& gb) {
  const std::size_t n = gb.nvars();
  const auto& lms = gb.leading_monomials();
  if (n == 0) return lms.empty() ? std::optional<std::uint64_t>(1) : std::optional<std::uint64_t>(0);

  // Each variable needs a pure-power leading monomial to bound the staircase.
  std::vector<std::uint64_t> box(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::uint64_t best = 0;
    for (const auto& lm : lms) {
      if (lm[j] == 0) continue;
      bool pure = true;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j && lm[k] != 0) pure = false;
      if (pure && (best == 0 || lm[j] < best)) best = lm[j];
    }
    if (best == 0) return std::nullopt;
    box[j] = best;
  }

  std::uint64_t total = 1;
  for (auto b : box) {
    if (total > (1ull << 26) / b) fail(Errc::ResourceCap, "standard monomial box too large");
    total *= b;
  }

  std::uint64_t count = 0;
  std::vector<std::uint32_t> e(n, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Monomial m(n);
    for (std::size_t j = 0; j < n; ++j) m[j] = e[j];
    bool standard = true;
    for (const auto& lm : lms) {
      if (lm.divides(m)) {
        standard = false;
        break;
      }
    }
    if (standard) ++count;
    for (std::size_t j = n; j-- > 0;) {
      if (++e[j] < box[j]) break;
      e[j] = 0;
    }
  }
  return count;
}

bool verify_spolys(const GroebnerBasis& gb) {
  const auto& basis = gb.elements();
  const auto& lms = gb.leading_monomials();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Polynomial s = spoly(basis[i], lms[i], basis[j], lms[j], gb.order());
      if (!normal_form_impl(s, basis, lms, gb.order()).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace dpcert
