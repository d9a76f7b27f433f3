#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "omw/ordinal.hpp"

namespace omw::schreier {

// Strictly increasing positive integers; empty allowed.
using FiniteSet = std::vector<std::uint64_t>;

bool is_valid_set(const FiniteSet& s);

// Batch membership s in A_xi, by direct recursion on the defining cases:
//   A_0 = {{}}; A_1 = singletons
//   A_(z+1): one leading element, then a member of A_z
//   A_(w^(b+1)): s splits into (min s) consecutive members of A_(w^b)
//   A_(w^l), l limit: member of A_(w^l_n) for n = min s, l_n the successor
//     sequence step
//   other limits: reading the normal form w^a*p + w^a1*p1 + ... + w^am*pm,
//     blocks appear in increasing-exponent order: first pm members of
//     A_(w^am), ..., then p members of A_(w^a).
bool member(const Ordinal& xi, const FiniteSet& s);

enum class FeedStatus { Continue, JustCompleted, Dead };

// Incremental recognizer for A_xi prefixes. Obligations are the ordinals
// whose Schreier members remain to be consumed, in consumption order.
// Limit obligations expand lazily when their first element arrives, since
// the expansion depends on that element's value.
class SchreierState {
 public:
  // pre: xi >= 1
  explicit SchreierState(const Ordinal& xi);

  // pre: status() == Continue and n greater than every element fed so far.
  // Feeding a JustCompleted state is a domain error: members of a thin
  // family have no extensions inside the family.
  FeedStatus feed(std::uint64_t n);

  FeedStatus status() const { return status_; }
  const Ordinal& xi() const { return xi_; }

  // Pending obligations, deepest first; the back is consumed next. Exposed
  // for the residual bookkeeping in the families module.
  const std::vector<Ordinal>& obligations() const { return obligations_; }

  bool has_fed() const { return has_fed_; }
  std::uint64_t last_fed() const { return last_; }

 private:
  Ordinal xi_;
  std::vector<Ordinal> obligations_;  // back = next to consume
  std::uint64_t last_ = 0;
  bool has_fed_ = false;
  FeedStatus status_ = FeedStatus::Continue;
};

SchreierState start(const Ordinal& xi);

struct Decomposition {
  std::vector<FiniteSet> blocks;
  FiniteSet remainder;
};

// Greedy block cutting; thinness makes the greedy cut the unique one.
Decomposition canonical_decomposition(const Ordinal& xi, const FiniteSet& seq);

struct ThinnessReport {
  std::uint64_t sets_checked = 0;
  // Pairs (member, proper initial segment that is also a member).
  std::vector<std::pair<FiniteSet, FiniteSet>> violations;
};

// Exhaustive audit over all nonempty subsets of [1..bound].
ThinnessReport thinness_audit(const Ordinal& xi, std::uint64_t bound);

}  // namespace omw::schreier
