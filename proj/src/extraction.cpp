#include "omw/extraction.hpp"

#include <algorithm>

#include "omw/errors.hpp"
#include "omw/schreier.hpp"

namespace omw {

OrderlyTuple OrderlyTuple::from_words(std::vector<LocatedWord> words) {
  for (std::size_t i = 1; i < words.size(); ++i)
    if (!words::less(words[i - 1], words[i]))
      throw domain_error("tuple words must be strictly increasing");
  OrderlyTuple t;
  t.words_ = std::move(words);
  return t;
}

bool OrderlyTuple::operator<(const OrderlyTuple& o) const {
  return std::lexicographical_compare(words_.begin(), words_.end(),
                                      o.words_.begin(), o.words_.end());
}

namespace extraction {
namespace {

// Largest useful exponent for one word: beyond the cap at its last variable
// slot every T_p image coincides.
std::uint64_t exponent_ceiling(const LocatedWord& w, const DominationSeq& k) {
  std::uint64_t top = 0;
  bool variable = false;
  for (const auto& [n, l] : w.entries()) {
    if (l == 0) {
      variable = true;
      top = k.at(n);
    }
  }
  if (!variable)
    throw domain_error("extracted words need variable building blocks");
  return top;
}

void extracted_rec(const std::vector<LocatedWord>& ws, const DominationSeq& k,
                   bool need_zero, std::size_t i,
                   std::vector<LocatedWord::Entry>& acc, bool picked,
                   bool has_zero, std::vector<LocatedWord>& out) {
  if (i == ws.size()) {
    if (picked && (!need_zero || has_zero))
      out.push_back(LocatedWord::from_entries(acc));
    return;
  }
  extracted_rec(ws, k, need_zero, i + 1, acc, picked, has_zero, out);
  const std::uint64_t top = exponent_ceiling(ws[i], k);
  const std::size_t mark = acc.size();
  for (std::uint64_t p = need_zero ? 0 : 1; p <= top; ++p) {
    const LocatedWord img = words::t_p(ws[i], p, k);
    acc.insert(acc.end(), img.entries().begin(), img.entries().end());
    extracted_rec(ws, k, need_zero, i + 1, acc, true, has_zero || p == 0, out);
    acc.resize(mark);
  }
}

std::vector<LocatedWord> extracted(const OrderlyTuple& tuple,
                                   const DominationSeq& k, bool need_zero) {
  if (tuple.empty()) throw domain_error("extracted words need a nonempty tuple");
  std::vector<LocatedWord> out;
  std::vector<LocatedWord::Entry> acc;
  extracted_rec(tuple.words(), k, need_zero, 0, acc, false, false, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<LocatedWord> ev(const OrderlyTuple& tuple,
                            const DominationSeq& k) {
  return extracted(tuple, k, true);
}

std::vector<LocatedWord> e(const OrderlyTuple& tuple, const DominationSeq& k) {
  return extracted(tuple, k, false);
}

bool is_extraction(const OrderlyTuple& u, const OrderlyTuple& w,
                   const DominationSeq& k) {
  if (u.empty()) return true;
  if (w.empty()) return false;
  const auto pool = ev(w, k);
  for (const auto& word : u.words())
    if (!std::binary_search(pool.begin(), pool.end(), word)) return false;
  return true;
}

bool in_L_xi(const Ordinal& xi, const OrderlyTuple& tuple,
             bool variable_flag) {
  schreier::FiniteSet mins;
  for (const auto& w : tuple.words()) {
    if (w.is_variable() != variable_flag) return false;
    mins.push_back(w.min_pos());
  }
  return schreier::member(xi, mins);
}

namespace {

void l_xi_rec(const std::vector<LocatedWord>& pool,
              const schreier::SchreierState& state, std::size_t from,
              std::size_t cap, std::vector<LocatedWord>& acc,
              std::vector<OrderlyTuple>& out) {
  if (acc.size() >= cap) return;
  for (std::size_t i = from; i < pool.size(); ++i) {
    if (!acc.empty() && !words::less(acc.back(), pool[i])) continue;
    auto next = state;
    next.feed(pool[i].min_pos());
    acc.push_back(pool[i]);
    if (next.status() == schreier::FeedStatus::JustCompleted) {
      // Thinness: no member extends another, so this branch is done.
      out.push_back(OrderlyTuple::from_words(acc));
    } else {
      l_xi_rec(pool, next, i + 1, cap, acc, out);
    }
    acc.pop_back();
  }
}

}  // namespace

std::vector<OrderlyTuple> enumerate_L_xi_ev(const Ordinal& xi,
                                            const OrderlyTuple& generators,
                                            const DominationSeq& k,
                                            std::size_t cap) {
  if (xi.is_zero()) return {OrderlyTuple{}};
  if (generators.empty()) return {};
  const auto pool = ev(generators, k);
  std::vector<OrderlyTuple> out;
  std::vector<LocatedWord> acc;
  l_xi_rec(pool, schreier::start(xi), 0, cap, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void reduced_block_rec(const std::vector<OmegaWord>& gens,
                       const DominationSeq& k, bool variable_flag,
                       std::size_t lo, std::size_t hi,
                       const OmegaWord* prefix, bool has_zero,
                       std::vector<OmegaWord>& tuple, std::size_t blocks_left,
                       std::vector<std::vector<OmegaWord>>& out);

void reduced_boundary_rec(const std::vector<OmegaWord>& gens,
                          const DominationSeq& k, bool variable_flag,
                          std::size_t lo, std::vector<OmegaWord>& tuple,
                          std::size_t blocks_left,
                          std::vector<std::vector<OmegaWord>>& out) {
  if (blocks_left == 0) {
    out.push_back(tuple);
    return;
  }
  // Need one generator per remaining block.
  for (std::size_t hi = lo + 1; hi + (blocks_left - 1) <= gens.size(); ++hi)
    reduced_block_rec(gens, k, variable_flag, lo, hi, nullptr, false, tuple,
                      blocks_left, out);
}

// Expands one block gens[lo..hi), exponent per generator, then recurses on
// the boundary choice for the rest.
void reduced_block_rec(const std::vector<OmegaWord>& gens,
                       const DominationSeq& k, bool variable_flag,
                       std::size_t lo, std::size_t hi, const OmegaWord* prefix,
                       bool has_zero, std::vector<OmegaWord>& tuple,
                       std::size_t blocks_left,
                       std::vector<std::vector<OmegaWord>>& out) {
  if (lo == hi) {
    if (variable_flag && !has_zero) return;
    tuple.push_back(*prefix);
    reduced_boundary_rec(gens, k, variable_flag, hi, tuple, blocks_left - 1,
                         out);
    tuple.pop_back();
    return;
  }
  const std::uint64_t top = k.at(lo + 1);  // exponent index is the 1-based slot
  for (std::uint64_t p = variable_flag ? 0 : 1; p <= top; ++p) {
    const OmegaWord img = words::t_p(gens[lo], p, k);
    const OmegaWord merged =
        prefix ? words::wconcat(*prefix, img) : img;
    reduced_block_rec(gens, k, variable_flag, lo + 1, hi, &merged,
                      has_zero || p == 0, tuple, blocks_left, out);
  }
}

}  // namespace

std::vector<std::vector<OmegaWord>> reduced_sequences(
    std::size_t m, const std::vector<OmegaWord>& generators,
    const DominationSeq& k, bool variable_flag) {
  if (m < 1) throw domain_error("reduced sequences need m >= 1");
  if (generators.size() < m)
    throw domain_error("fewer generators than blocks");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (!generators[i].is_variable())
      throw domain_error("reduced sequences need variable generators");
    if (i > 0 && !words::wless(generators[i - 1], generators[i]))
      throw domain_error("generators must be increasing");
  }
  std::vector<std::vector<OmegaWord>> out;
  std::vector<OmegaWord> tuple;
  reduced_boundary_rec(generators, k, variable_flag, 0, tuple, m, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool initial_segment(const OrderlyTuple& prefix, const OrderlyTuple& whole) {
  if (prefix.size() > whole.size()) return false;
  return std::equal(prefix.words().begin(), prefix.words().end(),
                    whole.words().begin());
}

OrderlyTuple subtract(const OrderlyTuple& whole, const OrderlyTuple& prefix) {
  if (!initial_segment(prefix, whole))
    throw domain_error("subtract needs an initial segment");
  return OrderlyTuple::from_words(std::vector<LocatedWord>(
      whole.words().begin() + prefix.size(), whole.words().end()));
}

OrderlyTuple odot(const OrderlyTuple& t, const OrderlyTuple& s) {
  if (!t.empty() && !s.empty() &&
      !words::less(t.words().back(), s.words().front()))
    throw domain_error("odot requires ordered tuples");
  auto ws = t.words();
  ws.insert(ws.end(), s.words().begin(), s.words().end());
  return OrderlyTuple::from_words(std::move(ws));
}

}  // namespace extraction
}  // namespace omw
