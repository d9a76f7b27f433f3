#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace omw {

enum class OrdinalKind { Zero, Successor, Limit };

// Ordinal below epsilon_0 in Cantor normal form: a finite sum
// w^e1*c1 + ... + w^er*cr with e1 > ... > er and every ci >= 1.
// The empty sum is 0; finite ordinals are the single term with exponent 0.
class Ordinal {
 public:
  struct Term;

  Ordinal();  // 0
  Ordinal(const Ordinal&);
  Ordinal(Ordinal&&) noexcept;
  Ordinal& operator=(const Ordinal&);
  Ordinal& operator=(Ordinal&&) noexcept;
  ~Ordinal();

  static Ordinal nat(std::uint64_t n);
  static Ordinal omega();
  static Ordinal omega_power(const Ordinal& exponent);
  static Ordinal single_term(const Ordinal& exponent, std::uint64_t coeff);
  static Ordinal from_terms(std::vector<Term> terms);

  // Grammar:  ordinal := term ('+' term)*
  //           term    := nat | 'w' ['^' (nat | '(' ordinal ')')] ['*' nat]
  // Whitespace is allowed between tokens. Sums must be in canonical form
  // (strictly decreasing exponents); a plain nat term can only close the sum.
  static Ordinal parse(std::string_view text);

  // Canonical rendering, no spaces: "0", "3", "w", "w*2", "w^2*3+w+5",
  // "w^(w+1)". parse(format(a)) == a for every a.
  std::string format() const;

  OrdinalKind kind() const;
  bool is_zero() const;
  bool is_finite() const;
  std::uint64_t finite_value() const;  // pre: is_finite()
  Ordinal predecessor() const;         // pre: kind() == Successor

  const std::vector<Term>& cnf_terms() const;

  int compare(const Ordinal& other) const;  // -1, 0, +1
  bool operator==(const Ordinal& other) const;
  bool operator!=(const Ordinal& other) const;
  bool operator<(const Ordinal& other) const;
  bool operator<=(const Ordinal& other) const;
  bool operator>(const Ordinal& other) const;
  bool operator>=(const Ordinal& other) const;

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exp;
  std::uint64_t coeff;
};

// The n-th step of the successor sequence converging to the limit ordinal
// lam: F(lam)[n] + 1, where F is the standard fundamental sequence on
// Cantor normal forms,
//   F(g + w^(b+1)*1)[n] = g + w^b*n
//   F(g + w^b*(c+1))[n] = g + w^b*c + F(w^b)[n]   for c >= 1
//   F(g + w^l*1)[n]     = g + w^(F(l)[n])         for l a limit.
// pre: lam is a limit ordinal.
Ordinal fundamental_successor_seq(const Ordinal& lam, std::uint64_t n);

}  // namespace omw
