#pragma once

#include <cstdint>
#include <vector>

#include "omw/extraction.hpp"
#include "omw/ordinal.hpp"
#include "omw/words.hpp"

namespace omw::families {

// Symbolic AST of hereditary families of orderly tuples. Symbolic classes
// live over the unbounded universe of variable words; explicit sets are
// literal. SchreierHered carries an internal derivative stage so transfinite
// iteration never materializes a family.
class FamilySpec {
 public:
  enum class Kind { ExplicitFinite, LenAtMost, SchreierHered, Union, Intersect };

  static FamilySpec explicit_finite(std::vector<OrderlyTuple> members);
  static FamilySpec len_at_most(std::uint64_t m);
  static FamilySpec schreier_hered(const Ordinal& xi);
  static FamilySpec union_of(std::vector<FamilySpec> parts);
  static FamilySpec intersect_of(std::vector<FamilySpec> parts);

  Kind kind() const { return kind_; }
  const std::vector<OrderlyTuple>& members() const { return members_; }
  std::uint64_t len_bound() const { return len_; }
  const Ordinal& xi() const { return xi_; }
  const Ordinal& stage() const { return stage_; }
  const std::vector<FamilySpec>& parts() const { return parts_; }

 private:
  friend FamilySpec staged(const Ordinal& xi, const Ordinal& stage);
  Kind kind_ = Kind::ExplicitFinite;
  std::vector<OrderlyTuple> members_;
  std::uint64_t len_ = 0;
  Ordinal xi_, stage_;
  std::vector<FamilySpec> parts_;
};

// Tuple membership. Symbolic classes admit only all-variable tuples.
bool member(const FamilySpec& f, const OrderlyTuple& w);

bool is_empty_family(const FamilySpec& f);

// Every explicit node must contain the empty tuple and be closed under
// extracted subtuples; symbolic nodes are hereditary by construction.
bool is_hereditary(const FamilySpec& f, const DominationSeq& k);

// All initial segments of members, plus the empty tuple.
FamilySpec star_closure(const FamilySpec& explicit_f);

// True when the family equals its own star closure.
bool is_tree(const FamilySpec& explicit_f);

// All orderly tuples with entries from some member's extracted-word set,
// plus the empty tuple.
FamilySpec hered_closure(const FamilySpec& explicit_f, const DominationSeq& k);

// Largest hereditary subfamily, with the empty tuple adjoined.
FamilySpec f_h(const FamilySpec& f, const DominationSeq& k,
               std::uint64_t universe_bound);

// Removes tuples with only boundedly many one-word extensions inside the
// family. Extensions range over the unbounded variable-word universe, so
// explicit finite nodes always derive to the empty family.
FamilySpec derivative(const FamilySpec& f, const DominationSeq& k);

// Least stage at which the iterated derivative empties the family. Limit
// stages are reached by symbolic jumps on the AST.
Ordinal strong_cb_index(const FamilySpec& f, const DominationSeq& k,
                        std::uint64_t step_budget = 100000);

struct CanonicalRep {
  std::vector<OrderlyTuple> blocks;
  OrderlyTuple remainder;
};

// Lifts the Schreier decomposition of the min-dom projection back to the
// tuple: blocks land in L^xi, the remainder is a proper initial segment of
// a potential member.
CanonicalRep canonical_rep_L_xi(const Ordinal& xi, const OrderlyTuple& seq);

enum class ClosedBasis { Structural, ProbeBounded };

struct ClosedCheck {
  bool closed = false;
  ClosedBasis basis = ClosedBasis::Structural;
  // Nonempty when closed is false: a strictly growing prefix chain.
  std::vector<OrderlyTuple> witness_chain;
};

// Looks for an infinite-in-spirit chain w_1 (proper prefix of) w_2 ... of
// members. Structural verdicts are exact; probe verdicts only say no chain
// of the probe depth was found.
ClosedCheck pointwise_closed_check(const FamilySpec& f,
                                   const DominationSeq& k,
                                   std::size_t probe_depth);

}  // namespace omw::families
