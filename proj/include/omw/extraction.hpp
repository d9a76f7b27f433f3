#pragma once

#include <cstdint>
#include <vector>

#include "omw/ordinal.hpp"
#include "omw/words.hpp"

namespace omw {

// Finite list w_1 < w_2 < ... < w_l under `less`; may be empty.
class OrderlyTuple {
 public:
  OrderlyTuple() = default;
  static OrderlyTuple from_words(std::vector<LocatedWord> words);

  const std::vector<LocatedWord>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  bool operator==(const OrderlyTuple& o) const { return words_ == o.words_; }
  bool operator<(const OrderlyTuple& o) const;

 private:
  std::vector<LocatedWord> words_;
};

namespace extraction {

// Variable extracted words: every T_{p_1}(w_{n_1}) * ... * T_{p_m}(w_{n_m})
// over nonempty subsequences, one exponent per chosen word, with some
// exponent 0. Deduplicated and sorted.
std::vector<LocatedWord> ev(const OrderlyTuple& tuple,
                            const DominationSeq& k);

// Constant extracted words: same shape with every exponent >= 1.
std::vector<LocatedWord> e(const OrderlyTuple& tuple, const DominationSeq& k);

// True iff u is orderly and every entry lies in ev(w).
bool is_extraction(const OrderlyTuple& u, const OrderlyTuple& w,
                   const DominationSeq& k);

// Min-dom projection lands in the xi-th Schreier family and every word has
// the selected kind (variable_flag: all variable, else all constant).
bool in_L_xi(const Ordinal& xi, const OrderlyTuple& tuple, bool variable_flag);

// All orderly tuples with entries drawn from ev(generators) whose min-dom
// projection is a Schreier member, up to `cap` words per tuple.
std::vector<OrderlyTuple> enumerate_L_xi_ev(const Ordinal& xi,
                                            const OrderlyTuple& generators,
                                            const DominationSeq& k,
                                            std::size_t cap);

// All reduced m-tuples built from consecutive blocks of a prefix of the
// generators: block i spans generator indices lambda_i+1..lambda_{i+1} for
// boundaries 0 = lambda_1 < ... < lambda_{m+1} <= #generators, the j-th
// generator carrying one exponent p_j <= k_j. variable_flag keeps a zero
// exponent inside every block; otherwise all exponents are >= 1.
std::vector<std::vector<OmegaWord>> reduced_sequences(
    std::size_t m, const std::vector<OmegaWord>& generators,
    const DominationSeq& k, bool variable_flag);

bool initial_segment(const OrderlyTuple& prefix, const OrderlyTuple& whole);

// pre: initial_segment(prefix, whole)
OrderlyTuple subtract(const OrderlyTuple& whole, const OrderlyTuple& prefix);

// pre: last of t is below first of s.
OrderlyTuple odot(const OrderlyTuple& t, const OrderlyTuple& s);

}  // namespace extraction
}  // namespace omw
