#include <vector>

#include "doctest.h"
#include "omw/errors.hpp"
#include "omw/families.hpp"

using omw::DominationSeq;
using omw::LocatedWord;
using omw::Ordinal;
using omw::OrderlyTuple;
namespace fam = omw::families;
using fam::FamilySpec;

namespace {

LocatedWord lw(std::vector<LocatedWord::Entry> es) {
  return LocatedWord::from_entries(std::move(es));
}

OrderlyTuple tup(std::vector<LocatedWord> ws) {
  return OrderlyTuple::from_words(std::move(ws));
}

OrderlyTuple singletons(std::vector<std::uint64_t> mins) {
  std::vector<LocatedWord> ws;
  for (auto n : mins) ws.push_back(lw({{n, 0}}));
  return tup(std::move(ws));
}

}  // namespace

TEST_CASE("length-bounded families accept short all-variable tuples") {
  auto f = FamilySpec::len_at_most(2);
  CHECK(fam::member(f, OrderlyTuple{}));
  CHECK(fam::member(f, singletons({4})));
  CHECK(fam::member(f, singletons({4, 9})));
  CHECK_FALSE(fam::member(f, singletons({4, 9, 10})));
  CHECK_FALSE(fam::member(f, tup({lw({{1, 1}})})));  // constant word
}

TEST_CASE("hereditary level membership embeds into one member") {
  auto f = FamilySpec::schreier_hered(Ordinal::omega());
  CHECK(fam::member(f, OrderlyTuple{}));
  CHECK(fam::member(f, singletons({3, 5, 7})));
  CHECK(fam::member(f, singletons({2, 5})));
  CHECK(fam::member(f, singletons({17})));
  CHECK_FALSE(fam::member(f, singletons({1, 5})));
  CHECK_FALSE(fam::member(f, singletons({2, 3, 7})));
  // A word spanning several positions can split across placement chunks.
  CHECK(fam::member(f, tup({lw({{2, 0}, {5, 0}})})));
}

TEST_CASE("placement search refuses distant positions") {
  auto f = FamilySpec::schreier_hered(Ordinal::omega());
  CHECK_THROWS_AS(fam::member(f, singletons({30})), omw::budget_error);
}

TEST_CASE("union and intersection membership are pointwise") {
  auto u = FamilySpec::union_of(
      {FamilySpec::len_at_most(1), FamilySpec::schreier_hered(Ordinal::omega())});
  CHECK(fam::member(u, singletons({1})));       // short side
  CHECK(fam::member(u, singletons({2, 5})));    // level side
  CHECK_FALSE(fam::member(u, singletons({1, 5})));
  auto i = FamilySpec::intersect_of(
      {FamilySpec::len_at_most(1), FamilySpec::schreier_hered(Ordinal::omega())});
  CHECK(fam::member(i, singletons({4})));
  CHECK_FALSE(fam::member(i, singletons({2, 5})));
}

TEST_CASE("emptiness by structure") {
  CHECK(fam::is_empty_family(FamilySpec::explicit_finite({})));
  CHECK_FALSE(fam::is_empty_family(FamilySpec::len_at_most(0)));
  CHECK_FALSE(fam::is_empty_family(FamilySpec::schreier_hered(Ordinal::nat(1))));
  CHECK(fam::is_empty_family(
      FamilySpec::union_of({FamilySpec::explicit_finite({})})));
  CHECK_FALSE(fam::is_empty_family(FamilySpec::intersect_of({})));
}

TEST_CASE("star closure makes prefix trees") {
  auto w1 = lw({{1, 0}});
  auto w2 = lw({{2, 0}});
  auto f = FamilySpec::explicit_finite({tup({w1, w2})});
  CHECK_FALSE(fam::is_tree(f));
  auto star = fam::star_closure(f);
  CHECK(fam::is_tree(star));
  CHECK(fam::member(star, OrderlyTuple{}));
  CHECK(fam::member(star, tup({w1})));
  CHECK(fam::member(star, tup({w1, w2})));
  CHECK_FALSE(fam::member(star, tup({w2})));
}

TEST_CASE("hereditary closure contains extracted subtuples") {
  auto k = DominationSeq::constant(1);
  auto w1 = lw({{1, 0}});
  auto w2 = lw({{2, 0}});
  auto f = FamilySpec::explicit_finite({tup({w1, w2})});
  CHECK_FALSE(fam::is_hereditary(f, k));
  auto h = fam::hered_closure(f, k);
  CHECK(fam::is_hereditary(h, k));
  CHECK(fam::member(h, OrderlyTuple{}));
  CHECK(fam::member(h, tup({lw({{1, 0}, {2, 1}})})));
  CHECK(fam::member(h, tup({w1, w2})));
  CHECK(fam::member(h, tup({lw({{1, 0}}), lw({{2, 0}})})));
  CHECK_FALSE(fam::member(h, singletons({3})));
}

TEST_CASE("largest hereditary subfamily drops unsupported tuples") {
  auto k = DominationSeq::constant(1);
  auto w1 = lw({{1, 0}});
  auto w2 = lw({{2, 0}});
  auto f =
      FamilySpec::explicit_finite({OrderlyTuple{}, tup({w1, w2})});
  auto g = fam::f_h(f, k, 100000);
  CHECK(fam::member(g, OrderlyTuple{}));
  CHECK_FALSE(fam::member(g, tup({w1, w2})));
  CHECK_FALSE(fam::is_empty_family(g));
}

TEST_CASE("derivative requires a hereditary family") {
  auto k = DominationSeq::constant(1);
  auto bad = FamilySpec::explicit_finite({singletons({1, 2})});
  CHECK_THROWS_AS(fam::derivative(bad, k), omw::domain_error);
}

TEST_CASE("derivative tightens the residual requirement") {
  auto k = DominationSeq::constant(1);
  auto f = FamilySpec::schreier_hered(Ordinal::omega());
  auto d = fam::derivative(f, k);
  // One more extension must stay available.
  CHECK(fam::member(d, singletons({3, 5})));
  CHECK_FALSE(fam::member(d, singletons({2, 5})));
  CHECK(fam::member(d, OrderlyTuple{}));
  auto dd = fam::derivative(d, k);
  CHECK(fam::member(dd, singletons({4, 6})));
  CHECK_FALSE(fam::member(dd, singletons({3, 5})));
}

TEST_CASE("derivative of an explicit hereditary family empties it") {
  auto k = DominationSeq::constant(1);
  auto h = fam::hered_closure(
      FamilySpec::explicit_finite({singletons({1})}), k);
  auto d = fam::derivative(h, k);
  CHECK(fam::is_empty_family(d));
}

TEST_CASE("index of symbolic families") {
  auto k = DominationSeq::constant(1);
  CHECK(fam::strong_cb_index(FamilySpec::len_at_most(0), k) == Ordinal::nat(1));
  CHECK(fam::strong_cb_index(FamilySpec::len_at_most(2), k) == Ordinal::nat(3));
  CHECK(fam::strong_cb_index(FamilySpec::schreier_hered(Ordinal::nat(1)), k) ==
        Ordinal::nat(2));
  CHECK(fam::strong_cb_index(FamilySpec::schreier_hered(Ordinal::omega()), k) ==
        Ordinal::parse("w+1"));
  CHECK(fam::strong_cb_index(FamilySpec::explicit_finite({}), k) == Ordinal());
  auto u = FamilySpec::union_of({FamilySpec::len_at_most(3),
                                 FamilySpec::schreier_hered(Ordinal::nat(2))});
  CHECK(fam::strong_cb_index(u, k) == Ordinal::nat(4));
}

TEST_CASE("index iteration respects the step budget") {
  auto k = DominationSeq::constant(1);
  CHECK_THROWS_AS(fam::strong_cb_index(FamilySpec::intersect_of({}), k, 50),
                  omw::budget_error);
}

TEST_CASE("canonical representation lifts block cuts to tuples") {
  auto seq = singletons({1, 2, 3});
  auto rep = fam::canonical_rep_L_xi(Ordinal::omega(), seq);
  REQUIRE(rep.blocks.size() == 2);
  CHECK(rep.blocks[0] == singletons({1}));
  CHECK(rep.blocks[1] == singletons({2, 3}));
  CHECK(rep.remainder.empty());

  auto r2 = fam::canonical_rep_L_xi(Ordinal::omega(), singletons({5, 6}));
  CHECK(r2.blocks.empty());
  CHECK(r2.remainder == singletons({5, 6}));
}

TEST_CASE("closedness verdicts") {
  auto k = DominationSeq::constant(1);
  auto c1 = fam::pointwise_closed_check(FamilySpec::len_at_most(2), k, 4);
  CHECK(c1.closed);
  CHECK(c1.basis == fam::ClosedBasis::Structural);
  auto c2 = fam::pointwise_closed_check(FamilySpec::intersect_of({}), k, 3);
  CHECK_FALSE(c2.closed);
  CHECK(c2.basis == fam::ClosedBasis::ProbeBounded);
  CHECK(c2.witness_chain.size() >= 3);
  for (std::size_t i = 1; i < c2.witness_chain.size(); ++i)
    CHECK(omw::extraction::initial_segment(c2.witness_chain[i - 1],
                                           c2.witness_chain[i]));
}
