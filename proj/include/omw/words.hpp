#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace omw {

// Per-position alphabet cap k_n (n >= 1). Always >= 1 and non-decreasing.
class DominationSeq {
 public:
  static DominationSeq constant(std::uint64_t c);
  static DominationSeq affine(std::uint64_t a, std::uint64_t b);  // k_n = a*n + b
  // Explicit leading values; the last value extends to all later positions.
  static DominationSeq table(std::vector<std::uint64_t> values);

  std::uint64_t at(std::uint64_t n) const;  // pre: n >= 1

 private:
  enum class Kind { Constant, Affine, Table } kind_;
  std::uint64_t a_ = 0, b_ = 0;
  std::vector<std::uint64_t> values_;
};

// Letter 0 is the variable slot; letter i >= 1 is the i-th alphabet symbol.
using Letter = std::uint64_t;

// Finite nonempty map position -> letter, kept sorted by position.
class LocatedWord {
 public:
  using Entry = std::pair<std::uint64_t, Letter>;

  static LocatedWord from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  std::uint64_t min_pos() const { return entries_.front().first; }
  std::uint64_t max_pos() const { return entries_.back().first; }
  std::size_t size() const { return entries_.size(); }

  bool is_variable() const;  // has at least one variable slot
  bool is_constant() const { return !is_variable(); }

  // Every constant letter obeys its positional cap.
  bool valid_under(const DominationSeq& k) const;

  int compare(const LocatedWord& other) const;  // entry-list lexicographic
  bool operator==(const LocatedWord& o) const { return compare(o) == 0; }
  bool operator!=(const LocatedWord& o) const { return compare(o) != 0; }
  bool operator<(const LocatedWord& o) const { return compare(o) < 0; }

 private:
  std::vector<Entry> entries_;
};

// Word over an initial segment of positions; letters_[i] sits at position
// i+1. Nonempty.
class OmegaWord {
 public:
  static OmegaWord from_letters(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_variable() const;

  bool operator==(const OmegaWord& o) const { return letters_ == o.letters_; }
  bool operator<(const OmegaWord& o) const { return letters_ < o.letters_; }

 private:
  std::vector<Letter> letters_;
};

namespace words {

// Substitution: for p >= 1 every variable slot at position n becomes letter
// p when k_n >= p and letter k_n otherwise; constants are untouched. T_0 is
// the identity.
LocatedWord t_p(const LocatedWord& w, std::uint64_t p, const DominationSeq& k);

// max dom(w) < min dom(u)
bool less(const LocatedWord& w, const LocatedWord& u);

// pre: less(w, u)
LocatedWord concat(const LocatedWord& w, const LocatedWord& u);

// Merge: on overlapping positions the letter is the larger constant, or the
// variable slot when either side is variable. Agrees with concat on
// non-overlapping ordered words.
LocatedWord plus(const LocatedWord& w, const LocatedWord& u);

// Forget locations: length max dom(w), gaps filled with letter 1.
OmegaWord to_unlocated(const LocatedWord& w);

// w < u: w is shorter and u carries letter 1 across w's whole span.
bool wless(const OmegaWord& w, const OmegaWord& u);

// w's letters, then u's tail beyond w's length.
OmegaWord wconcat(const OmegaWord& w, const OmegaWord& u);

OmegaWord t_p(const OmegaWord& w, std::uint64_t p, const DominationSeq& k);

// All words with domain inside [1..n_bound] that satisfy the caps, in a
// fixed position-major order. Throws budget_error past `cap` results.
std::vector<LocatedWord> enumerate_located(std::uint64_t n_bound,
                                           const DominationSeq& k,
                                           bool variable_only,
                                           std::uint64_t cap = 2'000'000);

}  // namespace words
}  // namespace omw
