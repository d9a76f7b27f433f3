#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "omw/extraction.hpp"
#include "omw/semigroup.hpp"
#include "omw/words.hpp"

namespace omw::search {

// Total coloring of words with colors in [1..arity]. The composed kind
// colors a word by its bridge value; variable slots contribute y_{0,n}.
class Coloring {
 public:
  enum class Kind {
    DomSizeParity,
    MinDomMod,
    LetterSumMod,
    MaxLetterMod,
    Table,
    ComposedViaG
  };

  static Coloring dom_size_parity();
  static Coloring min_dom_mod(std::uint64_t m);
  static Coloring letter_sum_mod(std::uint64_t m);
  static Coloring max_letter_mod(std::uint64_t m);
  static Coloring table(std::map<LocatedWord, std::uint64_t> entries,
                        std::uint64_t arity);
  static Coloring composed_via_g(SemigroupSpec sg, std::uint64_t r);

  Kind kind() const { return kind_; }
  std::uint64_t arity() const { return arity_; }
  std::uint64_t color(const LocatedWord& w) const;
  // Color of a raw semigroup value under the composed rule.
  std::uint64_t color_value(const SgValue& v) const;

 private:
  Kind kind_ = Kind::DomSizeParity;
  std::uint64_t arity_ = 2, m_ = 2;
  std::map<LocatedWord, std::uint64_t> table_;
  std::optional<SemigroupSpec> sg_;
};

struct Witness {
  std::vector<LocatedWord> words;
  std::uint64_t i0 = 0;  // shared color of every extracted variable word
  std::uint64_t j0 = 0;  // shared color of every extracted constant word
  // First-word candidates inspected before the witness (or in total when
  // none was found); independent of the worker count.
  std::uint64_t candidates = 0;
};

struct SearchResult {
  bool found = false;
  std::uint64_t bound = 0;  // N that was exhausted when !found
  Witness witness;
};

struct SearchOptions {
  std::size_t threads = 1;
  // Cap on first-word candidates streamed across all rounds; a pre-round
  // size estimate also refuses rounds that could not fit under it.
  std::uint64_t universe_budget = 50'000'000;
  // Restrict candidates to words whose first and last entries are constant.
  bool const_ends = false;
};

// Least witness, ordered by max position used and then lexicographically:
// an orderly m-tuple of variable words with domain in [1..N] whose extracted
// variable words share one col_var color and extracted constant words share
// one col_const color.
SearchResult find_homogeneous(std::size_t m, std::uint64_t N,
                              const DominationSeq& k, const Coloring& col_var,
                              const Coloring& col_const,
                              const SearchOptions& opts = {});

// Independent re-check: regenerates both extracted sets by naive nested
// loops over subsequences and exponent vectors, then compares colors.
bool verify_homogeneous(const std::vector<LocatedWord>& witness_words,
                        const DominationSeq& k, const Coloring& col_var,
                        const Coloring& col_const);

// Semigroup transfer of a witness: from each word take E_n = its domain,
// H_n = its variable positions, beta_n = the y-sum over the constant part.
// For every admissible f (1 <= f(n) <= k at every position of H_n) all
// finite sums of beta_n + sum_{t in H_n} y_{f(n),t} with at most lambda_cap
// summands must share one color class.
bool vdw_bridge_check(const std::vector<LocatedWord>& witness_words,
                      const DominationSeq& k, const SemigroupSpec& sg,
                      const Coloring& semigroup_coloring,
                      std::size_t lambda_cap);

}  // namespace omw::search
