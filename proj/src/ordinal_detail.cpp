#include "omw/ordinal_detail.hpp"

#include "omw/errors.hpp"

namespace omw::detail {

Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.cnf_terms().front().exp;
  std::vector<Ordinal::Term> terms;
  for (const auto& t : a.cnf_terms()) {
    if (t.exp.compare(lead) < 0) break;  // absorbed by b's leading term
    terms.push_back(t);
  }
  std::size_t i = 0;
  if (!terms.empty() && terms.back().exp.compare(lead) == 0) {
    terms.back().coeff += b.cnf_terms()[0].coeff;
    i = 1;
  }
  for (; i < b.cnf_terms().size(); ++i) terms.push_back(b.cnf_terms()[i]);
  return Ordinal::from_terms(std::move(terms));
}

Ordinal ord_left_diff(const Ordinal& a, const Ordinal& b) {
  int cmp = a.compare(b);
  if (cmp > 0) throw domain_error("ord_left_diff requires a <= b");
  if (cmp == 0) return Ordinal();
  const auto& ta = a.cnf_terms();
  const auto& tb = b.cnf_terms();
  std::size_t i = 0;
  while (i < ta.size() && i < tb.size() && ta[i].exp == tb[i].exp &&
         ta[i].coeff == tb[i].coeff)
    ++i;
  // a < b, so either a ran out or the terms diverge in b's favour.
  std::vector<Ordinal::Term> terms;
  if (i < ta.size() && i < tb.size() && ta[i].exp == tb[i].exp) {
    terms.push_back(Ordinal::Term{tb[i].exp, tb[i].coeff - ta[i].coeff});
    ++i;
    for (; i < tb.size(); ++i) terms.push_back(tb[i]);
  } else {
    for (; i < tb.size(); ++i) terms.push_back(tb[i]);
  }
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace omw::detail
