#include "dpcert/parse.hpp"

#include <cctype>

namespace dpcert {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t n, const Domain& dom)
      : text_(text), n_(n), dom_(dom) {}

  Polynomial run() {
    Polynomial acc(dom_, n_);
    skip_ws();
    bool negate = consume('-');
    acc = acc.add(term(negate));
    skip_ws();
    while (!at_end()) {
      if (consume('+'))
        acc = acc.add(term(false));
      else if (consume('-'))
        acc = acc.add(term(true));
      else
        err("expected '+' or '-'");
      skip_ws();
    }
    return acc;
  }

 private:
  [[noreturn]] void err(const std::string& what) {
    fail(Errc::ParseError, what + " at position " + std::to_string(pos_));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::uint64_t nat() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) err("expected a number");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::uint64_t digit = static_cast<std::uint64_t>(peek() - '0');
      if (v > (~std::uint64_t{0} - digit) / 10) err("number literal too large");
      v = v * 10 + digit;
      ++pos_;
    }
    return v;
  }

  // A factor is either a variable power contributing to the monomial or a
  // power of t contributing to the coefficient.
  void factor(Monomial& mon, Scalar& coeff) {
    skip_ws();
    char c = peek();
    if (c == 'x') {
      ++pos_;
      std::uint64_t idx = nat();
      if (idx < 1 || idx > n_)
        err("variable index " + std::to_string(idx) + " outside 1.." + std::to_string(n_));
      std::uint64_t e = 1;
      if (consume('^')) e = nat();
      if (mon[idx - 1] > (1u << 30) - e) err("exponent too large");
      mon[idx - 1] += static_cast<std::uint32_t>(e);
    } else if (c == 't') {
      ++pos_;
      if (dom_.kind() != Domain::Kind::QuadraticField)
        err("'t' is only valid in quadratic domains");
      std::uint64_t e = 1;
      if (consume('^')) e = nat();
      coeff = dom_.mul(coeff, dom_.pow(dom_.sqrt_gen(), e));
    } else {
      err("expected a factor");
    }
  }

  Polynomial term(bool negate) {
    skip_ws();
    Scalar coeff = dom_.one();
    Monomial mon(n_);
    bool saw_anything = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::uint64_t num = nat();
      if (consume('/')) {
        std::size_t den_pos = pos_;
        std::uint64_t den = nat();
        if (den == 0) {
          pos_ = den_pos;
          err("zero denominator");
        }
        mpq_class q(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
        q.canonicalize();
        try {
          coeff = dom_.from_rational(q);
        } catch (const Error& e) {
          pos_ = den_pos;
          err(e.what());
        }
      } else {
        coeff = dom_.from_integer(mpz_class(static_cast<unsigned long>(num)));
      }
      saw_anything = true;
      while (consume('*')) factor(mon, coeff);
    } else {
      factor(mon, coeff);
      saw_anything = true;
      while (consume('*')) factor(mon, coeff);
    }
    if (!saw_anything) err("empty term");
    if (negate) coeff = dom_.neg(coeff);
    return Polynomial::term(dom_, n_, mon, coeff);
  }

  std::string_view text_;
  std::size_t n_;
  Domain dom_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, std::size_t n, const Domain& dom) {
  Parser p(text, n, dom);
  return p.run();
}

}  // namespace dpcert
