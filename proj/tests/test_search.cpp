#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "doctest.h"
#include "omw/errors.hpp"
#include "omw/search.hpp"
#include "oracles.hpp"

using omw::DominationSeq;
using omw::LocatedWord;
using omw::SemigroupSpec;
using omw::SgValue;
namespace search = omw::search;
using search::Coloring;

namespace {

LocatedWord lw(std::vector<LocatedWord::Entry> es) {
  return LocatedWord::from_entries(std::move(es));
}

}  // namespace

TEST_CASE("semigroup operations and overflow guards") {
  auto add = SemigroupSpec::integers_add();
  CHECK(add.op(SgValue{std::int64_t{2}}, SgValue{std::int64_t{5}}) ==
        SgValue{std::int64_t{7}});
  CHECK(add.commutative());
  CHECK_THROWS_AS(add.op(SgValue{std::int64_t{INT64_MAX}},
                         SgValue{std::int64_t{1}}),
                  omw::domain_error);
  auto mx = SemigroupSpec::integers_max();
  CHECK(mx.op(SgValue{std::int64_t{2}}, SgValue{std::int64_t{5}}) ==
        SgValue{std::int64_t{5}});
  auto sc = SemigroupSpec::strings_concat();
  CHECK_FALSE(sc.commutative());
  CHECK(sc.op(SgValue{std::string("ab")}, SgValue{std::string("c")}) ==
        SgValue{std::string("abc")});
  CHECK_THROWS_AS(sc.op(SgValue{std::int64_t{1}}, SgValue{std::string("x")}),
                  omw::domain_error);
  auto md = SemigroupSpec::integers_mod_add(5);
  CHECK(md.op(SgValue{std::int64_t{3}}, SgValue{std::int64_t{4}}) ==
        SgValue{std::int64_t{2}});
}

TEST_CASE("bridge table rules") {
  auto pw = SemigroupSpec::integers_add().with_y_pow(3);
  CHECK(pw.y(2, 1) == SgValue{std::int64_t{6}});
  CHECK(pw.y(1, 3) == SgValue{std::int64_t{27}});
  auto af = SemigroupSpec::integers_add().with_y_affine(10);
  CHECK(af.y(2, 3) == SgValue{std::int64_t{32}});
  auto tb = SemigroupSpec::strings_concat().with_y_table(
      {{{1, 1}, SgValue{std::string("a")}}});
  CHECK(tb.y(1, 1) == SgValue{std::string("a")});
  CHECK_THROWS_AS(tb.y(2, 1), omw::domain_error);
}

TEST_CASE("bridge map folds over constant words") {
  auto sg = SemigroupSpec::integers_add().with_y_pow(3);
  CHECK(search::g_eval(lw({{1, 2}, {3, 1}}), sg) == SgValue{std::int64_t{33}});
  CHECK_THROWS_AS(search::g_eval(lw({{1, 0}}), sg), omw::domain_error);
}

TEST_CASE("grouped evaluation matches direct substitution") {
  auto k = DominationSeq::constant(2);
  auto sg = SemigroupSpec::strings_concat().with_y_table({
      {{1, 1}, SgValue{std::string("a")}},
      {{1, 2}, SgValue{std::string("b")}},
      {{2, 2}, SgValue{std::string("B")}},
      {{1, 3}, SgValue{std::string("c")}},
  });
  auto w = lw({{1, 1}, {2, 0}, {3, 1}});
  auto gv = search::g_grouped_noncommutative(w, 2, sg, k);
  CHECK(gv.value == SgValue{std::string("aBc")});
  REQUIRE(gv.blocks.size() == 2);
  CHECK(gv.blocks[0].e == std::vector<std::uint64_t>{1, 2});
  CHECK(gv.blocks[0].h == std::vector<std::uint64_t>{2});
  CHECK(gv.blocks[1].e == std::vector<std::uint64_t>{3});
  CHECK(gv.blocks[1].h.empty());
  CHECK(gv.value == search::g_eval(omw::words::t_p(w, 2, k), sg));
  CHECK_THROWS_AS(search::g_grouped_noncommutative(lw({{1, 0}}), 1, sg, k),
                  omw::domain_error);
  CHECK_THROWS_AS(search::g_grouped_noncommutative(w, 0, sg, k),
                  omw::domain_error);
}

TEST_CASE("grouped evaluation agrees with substitution on random words") {
  auto k = DominationSeq::table({1, 2, 2, 3});
  auto sg = SemigroupSpec::integers_add().with_y_pow(2);
  std::mt19937_64 rng(21);
  int done = 0;
  while (done < 300) {
    std::vector<LocatedWord::Entry> es;
    std::uint64_t n = 0;
    int len = 2 + static_cast<int>(rng() % 4);
    for (int i = 0; i < len; ++i) {
      n += 1 + rng() % 2;
      es.emplace_back(n, rng() % (k.at(n) + 1));
    }
    es.front().second = 1 + rng() % k.at(es.front().first);
    es.back().second = 1 + rng() % k.at(es.back().first);
    auto w = lw(es);
    std::uint64_t p = 1 + rng() % k.at(w.min_pos());
    auto gv = search::g_grouped_noncommutative(w, p, sg, k);
    CHECK(gv.value == search::g_eval(omw::words::t_p(w, p, k), sg));
    ++done;
  }
}

TEST_CASE("finite sums collect subsequence folds") {
  auto sg = SemigroupSpec::integers_add();
  std::vector<SgValue> xs = {SgValue{std::int64_t{1}}, SgValue{std::int64_t{2}},
                             SgValue{std::int64_t{4}}};
  auto got = search::fs_set(xs, sg, 3);
  REQUIRE(got.size() == 7);
  for (std::int64_t v = 1; v <= 7; ++v)
    CHECK(got[static_cast<std::size_t>(v - 1)] == SgValue{v});
  CHECK(got == oracle::fs_sums(xs, sg, 3));
  auto capped = search::fs_set(xs, sg, 1);
  CHECK(capped == oracle::fs_sums(xs, sg, 1));
  CHECK(capped.size() == 3);
  std::vector<SgValue> big(21, SgValue{std::int64_t{1}});
  CHECK_THROWS_AS(search::fs_set(big, sg, 21), omw::budget_error);
}

TEST_CASE("coloring rules") {
  auto w1 = lw({{1, 0}});
  auto w12 = lw({{1, 0}, {2, 0}});
  CHECK(Coloring::dom_size_parity().color(w1) == 2);
  CHECK(Coloring::dom_size_parity().color(w12) == 1);
  CHECK(Coloring::min_dom_mod(2).color(lw({{3, 0}})) == 2);
  CHECK(Coloring::min_dom_mod(2).color(lw({{4, 0}})) == 1);
  CHECK(Coloring::letter_sum_mod(3).color(lw({{1, 2}, {2, 2}})) == 2);
  CHECK(Coloring::letter_sum_mod(3).color(w1) == 1);
  CHECK(Coloring::max_letter_mod(2).color(lw({{1, 2}, {3, 1}})) == 1);
  CHECK(Coloring::max_letter_mod(2).color(lw({{1, 1}})) == 2);
  auto tab = Coloring::table({{w1, 2}}, 2);
  CHECK(tab.color(w1) == 2);
  CHECK_THROWS_AS(tab.color(w12), omw::domain_error);
  auto sg = SemigroupSpec::integers_add().with_y_pow(3);
  auto cg = Coloring::composed_via_g(sg, 3);
  CHECK(cg.color(lw({{1, 2}, {3, 1}})) == 1);  // bridge value 33
  CHECK(cg.color_value(SgValue{std::int64_t{33}}) == 1);
  CHECK(cg.color_value(SgValue{std::int64_t{34}}) == 2);
  CHECK(Coloring::composed_via_g(sg, 2).color(lw({{1, 2}, {3, 1}})) == 2);
  // Variable slots read row zero of the bridge table.
  CHECK(cg.color(lw({{2, 0}})) == 1);
  CHECK_THROWS_AS(Coloring::dom_size_parity().color_value(SgValue{std::int64_t{1}}),
                  omw::domain_error);
}

TEST_CASE("homogeneous search finds the least witness") {
  auto k = DominationSeq::constant(1);
  auto par = Coloring::dom_size_parity();
  auto res1 = search::find_homogeneous(1, 4, k, par, par);
  REQUIRE(res1.found);
  CHECK(res1.witness.words == std::vector<LocatedWord>{lw({{1, 0}})});
  CHECK(res1.witness.candidates == 1);

  auto res2 = search::find_homogeneous(2, 6, k, par, par);
  REQUIRE(res2.found);
  CHECK(res2.witness.words ==
        std::vector<LocatedWord>{lw({{1, 0}, {2, 0}}), lw({{3, 0}, {4, 0}})});
  CHECK(res2.witness.i0 == 1);
  CHECK(res2.witness.j0 == 1);
  CHECK(res2.witness.candidates == 27);
  CHECK(search::verify_homogeneous(res2.witness.words, k, par, par));
}

TEST_CASE("homogeneous search reports exhaustion") {
  auto k = DominationSeq::constant(1);
  // Distinct colors everywhere: no pair can ever agree.
  std::map<LocatedWord, std::uint64_t> t;
  std::uint64_t c = 0;
  for (const auto& w : omw::words::enumerate_located(2, k, false))
    t[w] = ++c;
  auto tab = Coloring::table(t, c);
  auto res = search::find_homogeneous(2, 2, k, tab, tab);
  CHECK_FALSE(res.found);
  CHECK(res.bound == 2);
  CHECK(res.witness.candidates == 6);
}

TEST_CASE("homogeneous search respects the streaming budget") {
  auto k = DominationSeq::constant(1);
  auto par = Coloring::dom_size_parity();
  search::SearchOptions opts;
  opts.universe_budget = 5;
  std::map<LocatedWord, std::uint64_t> t;
  std::uint64_t c = 0;
  for (const auto& w : omw::words::enumerate_located(3, k, false))
    t[w] = ++c;
  auto tab = Coloring::table(t, c);
  CHECK_THROWS_AS(search::find_homogeneous(2, 3, k, tab, tab, opts),
                  omw::budget_error);
}

TEST_CASE("worker count does not change the outcome") {
  auto k = DominationSeq::constant(1);
  auto var = Coloring::dom_size_parity();
  auto con = Coloring::min_dom_mod(2);
  auto a = search::find_homogeneous(3, 20, k, var, con);
  search::SearchOptions opts;
  opts.threads = 4;
  auto b = search::find_homogeneous(3, 20, k, var, con, opts);
  REQUIRE(a.found);
  REQUIRE(b.found);
  CHECK(a.witness.words == b.witness.words);
  CHECK(a.witness.i0 == b.witness.i0);
  CHECK(a.witness.j0 == b.witness.j0);
  CHECK(a.witness.candidates == b.witness.candidates);
  CHECK(a.witness.words ==
        std::vector<LocatedWord>{lw({{1, 0}, {2, 0}}), lw({{3, 0}, {4, 0}}),
                                 lw({{5, 0}, {6, 0}})});
  CHECK(a.witness.i0 == 1);
  CHECK(a.witness.j0 == 2);
  CHECK(a.witness.candidates == 303);
}

TEST_CASE("verification is independent of the search path") {
  auto k = DominationSeq::constant(1);
  auto par = Coloring::dom_size_parity();
  CHECK_FALSE(search::verify_homogeneous({lw({{1, 0}}), lw({{2, 0}})}, k, par,
                                         par));
  CHECK(search::verify_homogeneous(
      {lw({{1, 0}, {2, 0}}), lw({{3, 0}, {4, 0}})}, k, par, par));
}

TEST_CASE("bridge transfer checks every admissible substitution") {
  auto k = DominationSeq::constant(1);
  auto sg = SemigroupSpec::integers_add().with_y_pow(2);
  std::vector<LocatedWord> ws = {lw({{1, 1}, {2, 0}, {3, 1}}),
                                 lw({{4, 1}, {5, 0}, {6, 1}})};
  // Sums are 14, 112, 126: one class mod 2, split mod 4.
  CHECK(search::vdw_bridge_check(ws, k, sg, Coloring::composed_via_g(sg, 2),
                                 2));
  CHECK_FALSE(search::vdw_bridge_check(ws, k, sg,
                                       Coloring::composed_via_g(sg, 4), 2));
  // Noncommutative carriers are out of scope for the transfer.
  auto sc = SemigroupSpec::strings_concat().with_y_table({});
  CHECK_THROWS_AS(search::vdw_bridge_check(ws, k, sc,
                                           Coloring::composed_via_g(sc, 2), 2),
                  omw::domain_error);
  // Variable ends are rejected.
  CHECK_THROWS_AS(search::vdw_bridge_check({lw({{1, 0}})}, k, sg,
                                           Coloring::composed_via_g(sg, 2), 2),
                  omw::domain_error);
}
