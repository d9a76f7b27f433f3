#include "omw/semigroup.hpp"

#include <algorithm>

#include "omw/errors.hpp"

namespace omw {

std::string sg_value_to_string(const SgValue& v) {
  if (std::holds_alternative<std::int64_t>(v))
    return std::to_string(std::get<std::int64_t>(v));
  return std::get<std::string>(v);
}

SemigroupSpec SemigroupSpec::integers_add() { return SemigroupSpec{}; }

SemigroupSpec SemigroupSpec::integers_max() {
  SemigroupSpec s;
  s.carrier_ = Carrier::IntegersMax;
  return s;
}

SemigroupSpec SemigroupSpec::strings_concat() {
  SemigroupSpec s;
  s.carrier_ = Carrier::StringsConcat;
  return s;
}

SemigroupSpec SemigroupSpec::integers_mod_add(std::uint64_t m) {
  if (m < 1) throw domain_error("modulus must be >= 1");
  SemigroupSpec s;
  s.carrier_ = Carrier::IntegersModAdd;
  s.modulus_ = m;
  return s;
}

SemigroupSpec& SemigroupSpec::with_y_pow(std::int64_t base) {
  y_rule_ = YRule::Pow;
  base_ = base;
  return *this;
}

SemigroupSpec& SemigroupSpec::with_y_affine(std::int64_t c) {
  y_rule_ = YRule::Affine;
  c_ = c;
  return *this;
}

SemigroupSpec& SemigroupSpec::with_y_table(
    std::map<std::pair<std::uint64_t, std::uint64_t>, SgValue> table) {
  y_rule_ = YRule::Table;
  table_ = std::move(table);
  return *this;
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw domain_error("semigroup value overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw domain_error("semigroup value overflow");
  return r;
}

std::int64_t as_int(const SgValue& v) {
  if (!std::holds_alternative<std::int64_t>(v))
    throw domain_error("integer semigroup fed a string value");
  return std::get<std::int64_t>(v);
}

}  // namespace

SgValue SemigroupSpec::op(const SgValue& a, const SgValue& b) const {
  switch (carrier_) {
    case Carrier::IntegersAdd:
      return checked_add(as_int(a), as_int(b));
    case Carrier::IntegersMax:
      return std::max(as_int(a), as_int(b));
    case Carrier::StringsConcat: {
      if (!std::holds_alternative<std::string>(a) ||
          !std::holds_alternative<std::string>(b))
        throw domain_error("string semigroup fed an integer value");
      return std::get<std::string>(a) + std::get<std::string>(b);
    }
    case Carrier::IntegersModAdd: {
      std::int64_t m = static_cast<std::int64_t>(modulus_);
      std::int64_t r = (as_int(a) + as_int(b)) % m;
      return r < 0 ? r + m : r;
    }
  }
  throw domain_error("bad semigroup carrier");
}

SgValue SemigroupSpec::y(std::uint64_t l, std::uint64_t n) const {
  switch (y_rule_) {
    case YRule::Pow: {
      std::int64_t v = 1;
      for (std::uint64_t i = 0; i < n; ++i) v = checked_mul(v, base_);
      v = checked_mul(v, static_cast<std::int64_t>(l));
      if (carrier_ == Carrier::IntegersModAdd) {
        std::int64_t m = static_cast<std::int64_t>(modulus_);
        v %= m;
        if (v < 0) v += m;
      }
      return v;
    }
    case YRule::Affine: {
      std::int64_t v = checked_add(static_cast<std::int64_t>(l),
                                   checked_mul(c_, static_cast<std::int64_t>(n)));
      if (carrier_ == Carrier::IntegersModAdd) {
        std::int64_t m = static_cast<std::int64_t>(modulus_);
        v %= m;
        if (v < 0) v += m;
      }
      return v;
    }
    case YRule::Table: {
      auto it = table_.find({l, n});
      if (it == table_.end())
        throw domain_error("y table has no entry for letter " +
                           std::to_string(l) + " at position " +
                           std::to_string(n));
      return it->second;
    }
  }
  throw domain_error("bad y rule");
}

namespace search {

SgValue g_eval(const LocatedWord& w, const SemigroupSpec& sg) {
  if (w.is_variable())
    throw domain_error("g is defined on constant words");
  SgValue acc;
  bool first = true;
  for (const auto& [n, l] : w.entries()) {
    SgValue v = sg.y(l, n);
    acc = first ? v : sg.op(acc, v);
    first = false;
  }
  return acc;
}

GroupedValue g_grouped_noncommutative(const LocatedWord& w, std::uint64_t p,
                                      const SemigroupSpec& sg,
                                      const DominationSeq& k) {
  const auto& entries = w.entries();
  if (entries.front().second == 0 || entries.back().second == 0)
    throw domain_error("grouped evaluation needs constant ends");
  if (p < 1 || p > k.at(w.min_pos()))
    throw domain_error("exponent outside [1..k at min dom]");

  GroupedValue out;
  GroupedBlock cur;
  bool in_variables = false;
  for (const auto& [n, l] : entries) {
    if (l == 0) {
      in_variables = true;
      cur.e.push_back(n);
      cur.h.push_back(n);
    } else {
      if (in_variables) {  // a constant after variables closes the block
        out.blocks.push_back(std::move(cur));
        cur = GroupedBlock{};
        in_variables = false;
      }
      cur.e.push_back(n);
    }
  }
  out.blocks.push_back(std::move(cur));  // trailing constants

  SgValue acc;
  bool first = true;
  auto fold = [&](const SgValue& v) {
    acc = first ? v : sg.op(acc, v);
    first = false;
  };
  std::map<std::uint64_t, std::uint64_t> letter_at;
  for (const auto& [n, l] : entries) letter_at[n] = l;
  for (const auto& block : out.blocks) {
    std::size_t hi = 0;
    for (std::uint64_t t : block.e) {
      bool is_h = hi < block.h.size() && block.h[hi] == t;
      if (is_h) {
        fold(sg.y(p, t));
        ++hi;
      } else {
        fold(sg.y(letter_at[t], t));
      }
    }
  }
  out.value = acc;
  return out;
}

std::vector<SgValue> fs_set(const std::vector<SgValue>& xs,
                            const SemigroupSpec& sg, std::size_t lambda_cap) {
  if (xs.size() > 20) throw budget_error("fs_set over 20 elements");
  std::vector<SgValue> out;
  const std::size_t n = xs.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > lambda_cap)
      continue;
    SgValue acc;
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      acc = first ? xs[i] : sg.op(acc, xs[i]);
      first = false;
    }
    out.push_back(std::move(acc));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace search
}  // namespace omw
