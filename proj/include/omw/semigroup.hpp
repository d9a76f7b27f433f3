#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "omw/words.hpp"

namespace omw {

using SgValue = std::variant<std::int64_t, std::string>;

std::string sg_value_to_string(const SgValue& v);

// A concrete semigroup plus the table y_{l,n} feeding the bridge map g.
class SemigroupSpec {
 public:
  enum class Carrier { IntegersAdd, IntegersMax, StringsConcat, IntegersModAdd };
  enum class YRule { Pow, Affine, Table };

  static SemigroupSpec integers_add();
  static SemigroupSpec integers_max();
  static SemigroupSpec strings_concat();
  static SemigroupSpec integers_mod_add(std::uint64_t m);

  SemigroupSpec& with_y_pow(std::int64_t base);
  SemigroupSpec& with_y_affine(std::int64_t c);
  SemigroupSpec& with_y_table(std::map<std::pair<std::uint64_t, std::uint64_t>,
                                       SgValue> table);

  Carrier carrier() const { return carrier_; }
  std::uint64_t modulus() const { return modulus_; }
  bool commutative() const { return carrier_ != Carrier::StringsConcat; }

  SgValue op(const SgValue& a, const SgValue& b) const;
  // y_{l,n}: the table entry for letter l at position n.
  SgValue y(std::uint64_t l, std::uint64_t n) const;

 private:
  Carrier carrier_ = Carrier::IntegersAdd;
  std::uint64_t modulus_ = 0;
  YRule y_rule_ = YRule::Pow;
  std::int64_t base_ = 2, c_ = 1;
  std::map<std::pair<std::uint64_t, std::uint64_t>, SgValue> table_;
};

namespace search {

// Bridge map: fold of y_{letter, position} over the word in position order.
SgValue g_eval(const LocatedWord& w, const SemigroupSpec& sg);

struct GroupedBlock {
  std::vector<std::uint64_t> e;  // positions of the block
  std::vector<std::uint64_t> h;  // its variable positions (empty in the tail)
};

struct GroupedValue {
  SgValue value;
  std::vector<GroupedBlock> blocks;  // m variable blocks plus the tail
};

// Evaluates g(T_p(w)) by blocks: each maximal variable run, with the
// constant run before it, forms one block; the trailing constants form the
// tail. The value is assembled from the block sums, not from t_p.
GroupedValue g_grouped_noncommutative(const LocatedWord& w, std::uint64_t p,
                                      const SemigroupSpec& sg,
                                      const DominationSeq& k);

// All subsequence sums with at most lambda_cap summands; deduplicated,
// sorted. lambda_cap >= xs.size() means every nonempty subsequence.
std::vector<SgValue> fs_set(const std::vector<SgValue>& xs,
                            const SemigroupSpec& sg, std::size_t lambda_cap);

}  // namespace search
}  // namespace omw
