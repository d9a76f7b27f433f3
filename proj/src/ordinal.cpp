#include "omw/ordinal.hpp"

#include <cctype>

#include "omw/errors.hpp"

namespace omw {

Ordinal::Ordinal() = default;
Ordinal::Ordinal(const Ordinal&) = default;
Ordinal::Ordinal(Ordinal&&) noexcept = default;
Ordinal& Ordinal::operator=(const Ordinal&) = default;
Ordinal& Ordinal::operator=(Ordinal&&) noexcept = default;
Ordinal::~Ordinal() = default;

Ordinal Ordinal::nat(std::uint64_t n) {
  Ordinal a;
  if (n > 0) a.terms_.push_back(Term{Ordinal(), n});
  return a;
}

Ordinal Ordinal::omega() { return omega_power(nat(1)); }

Ordinal Ordinal::omega_power(const Ordinal& exponent) {
  return single_term(exponent, 1);
}

Ordinal Ordinal::single_term(const Ordinal& exponent, std::uint64_t coeff) {
  if (coeff == 0) throw domain_error("ordinal term coefficient must be >= 1");
  Ordinal a;
  a.terms_.push_back(Term{exponent, coeff});
  return a;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff == 0)
      throw domain_error("ordinal term coefficient must be >= 1");
    if (i + 1 < terms.size() && terms[i].exp.compare(terms[i + 1].exp) <= 0)
      throw domain_error("ordinal exponents must be strictly decreasing");
  }
  Ordinal a;
  a.terms_ = std::move(terms);
  return a;
}

const std::vector<Ordinal::Term>& Ordinal::cnf_terms() const { return terms_; }

bool Ordinal::is_zero() const { return terms_.empty(); }

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero());
}

std::uint64_t Ordinal::finite_value() const {
  if (!is_finite()) throw domain_error("ordinal is not finite");
  return terms_.empty() ? 0 : terms_[0].coeff;
}

OrdinalKind Ordinal::kind() const {
  if (terms_.empty()) return OrdinalKind::Zero;
  return terms_.back().exp.is_zero() ? OrdinalKind::Successor
                                     : OrdinalKind::Limit;
}

Ordinal Ordinal::predecessor() const {
  if (kind() != OrdinalKind::Successor)
    throw domain_error("predecessor requires a successor ordinal");
  Ordinal a = *this;
  if (--a.terms_.back().coeff == 0) a.terms_.pop_back();
  return a;
}

int Ordinal::compare(const Ordinal& other) const {
  std::size_t n = std::min(terms_.size(), other.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = terms_[i].exp.compare(other.terms_[i].exp);
    if (c != 0) return c;
    if (terms_[i].coeff != other.terms_[i].coeff)
      return terms_[i].coeff < other.terms_[i].coeff ? -1 : 1;
  }
  if (terms_.size() != other.terms_.size())
    return terms_.size() < other.terms_.size() ? -1 : 1;
  return 0;
}

bool Ordinal::operator==(const Ordinal& o) const { return compare(o) == 0; }
bool Ordinal::operator!=(const Ordinal& o) const { return compare(o) != 0; }
bool Ordinal::operator<(const Ordinal& o) const { return compare(o) < 0; }
bool Ordinal::operator<=(const Ordinal& o) const { return compare(o) <= 0; }
bool Ordinal::operator>(const Ordinal& o) const { return compare(o) > 0; }
bool Ordinal::operator>=(const Ordinal& o) const { return compare(o) >= 0; }

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw domain_error("ordinal parse error at position " +
                       std::to_string(pos) + ": " + what);
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }

  std::uint64_t nat() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a number");
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::uint64_t d = static_cast<std::uint64_t>(text[pos] - '0');
      if (v > (UINT64_MAX - d) / 10) fail("number too large");
      v = v * 10 + d;
      ++pos;
    }
    return v;
  }

  // Returns the parsed term; a bare "0" yields coeff 0 with exponent 0 and is
  // only legal as the entire ordinal.
  Ordinal::Term term() {
    skip_ws();
    if (pos >= text.size()) fail("expected a term");
    if (text[pos] == 'w') {
      ++pos;
      Ordinal exponent = Ordinal::nat(1);
      if (eat('^')) {
        if (eat('(')) {
          exponent = ordinal();
          if (!eat(')')) fail("expected ')'");
        } else if (eat('w')) {
          // Bare "w^w" is accepted; deeper towers need parentheses.
          if (peek('^')) fail("nested exponents need parentheses");
          exponent = Ordinal::omega();
        } else {
          exponent = Ordinal::nat(nat());
        }
      }
      std::uint64_t coeff = 1;
      if (eat('*')) {
        coeff = nat();
        if (coeff == 0) fail("coefficient must be >= 1");
      }
      if (exponent.is_zero()) fail("exponent 0 spells a plain number");
      return Ordinal::Term{exponent, coeff};
    }
    std::uint64_t v = nat();
    return Ordinal::Term{Ordinal(), v};
  }

  Ordinal ordinal() {
    std::vector<Ordinal::Term> terms;
    bool saw_zero = false;
    terms.push_back(term());
    if (terms[0].coeff == 0) saw_zero = true;
    while (eat('+')) terms.push_back(term());
    if (saw_zero) {
      if (terms.size() > 1) fail("'0' cannot appear inside a sum");
      return Ordinal();
    }
    for (const auto& t : terms)
      if (t.coeff == 0) fail("'0' cannot appear inside a sum");
    for (std::size_t i = 0; i + 1 < terms.size(); ++i)
      if (terms[i].exp.compare(terms[i + 1].exp) <= 0)
        fail("sum is not in canonical form");
    return Ordinal::from_terms(std::move(terms));
  }
};

}  // namespace

Ordinal Ordinal::parse(std::string_view text) {
  Parser p{text};
  Ordinal a = p.ordinal();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return a;
}

std::string Ordinal::format() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += '+';
    const Term& t = terms_[i];
    if (t.exp.is_zero()) {
      out += std::to_string(t.coeff);
      continue;
    }
    out += 'w';
    if (t.exp != nat(1)) {
      out += '^';
      if (t.exp.is_finite()) {
        out += std::to_string(t.exp.finite_value());
      } else {
        out += '(';
        out += t.exp.format();
        out += ')';
      }
    }
    if (t.coeff > 1) {
      out += '*';
      out += std::to_string(t.coeff);
    }
  }
  return out;
}

namespace {

Ordinal fund_step(const Ordinal& lam, std::uint64_t n);

// F(w^e)[n] for e >= 1.
Ordinal fund_omega_power(const Ordinal& e, std::uint64_t n) {
  if (e.kind() == OrdinalKind::Successor) {
    Ordinal b = e.predecessor();
    return n == 0 ? Ordinal() : Ordinal::single_term(b, n);
  }
  return Ordinal::omega_power(fund_step(e, n));
}

// F(lam)[n] for lam a limit ordinal.
Ordinal fund_step(const Ordinal& lam, std::uint64_t n) {
  std::vector<Ordinal::Term> terms = lam.cnf_terms();
  Ordinal::Term last = terms.back();
  terms.pop_back();
  if (last.coeff >= 2) terms.push_back(Ordinal::Term{last.exp, last.coeff - 1});
  Ordinal tail = fund_omega_power(last.exp, n);
  for (const auto& t : tail.cnf_terms()) terms.push_back(t);
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace

Ordinal fundamental_successor_seq(const Ordinal& lam, std::uint64_t n) {
  if (lam.kind() != OrdinalKind::Limit)
    throw domain_error("fundamental_successor_seq requires a limit ordinal");
  Ordinal f = fund_step(lam, n);
  std::vector<Ordinal::Term> terms = f.cnf_terms();
  if (!terms.empty() && terms.back().exp.is_zero())
    terms.back().coeff += 1;
  else
    terms.push_back(Ordinal::Term{Ordinal(), 1});
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace omw
