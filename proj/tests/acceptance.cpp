// Acceptance gate: one criterion per invocation, selected by argv[1].
// Prints exactly one [PASS]/[FAIL] line and exits 0/1. Bounds and runtime
// budgets are pinned here, not configurable.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "omw/errors.hpp"
#include "omw/extraction.hpp"
#include "omw/families.hpp"
#include "omw/json_io.hpp"
#include "omw/ordinal.hpp"
#include "omw/schreier.hpp"
#include "omw/search.hpp"
#include "omw/semigroup.hpp"
#include "omw/words.hpp"
#include "oracles.hpp"

using namespace omw;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

void fail(Outcome& o, const std::string& msg) {
  if (o.ok) {
    o.ok = false;
    o.note = msg;
  }
}

std::vector<Ordinal> levels() {
  std::vector<Ordinal> out;
  for (const char* s : {"1", "2", "3", "w", "w+1", "w*2", "w^2"})
    out.push_back(Ordinal::parse(s));
  return out;
}

LocatedWord lw(std::vector<LocatedWord::Entry> es) {
  return LocatedWord::from_entries(std::move(es));
}

// criterion 1: exhaustive thinness audit over [1..12] for every level.
Outcome thinness_audit_clean() {
  Outcome o;
  for (const auto& xi : levels()) {
    auto rep = schreier::thinness_audit(xi, 12);
    if (rep.sets_checked != 4095)
      fail(o, xi.format() + ": checked " + std::to_string(rep.sets_checked));
    if (!rep.violations.empty())
      fail(o, xi.format() + ": " + std::to_string(rep.violations.size()) +
                  " violations");
  }
  return o;
}

// criterion 2: incremental feed verdicts equal batch membership on every
// s inside (n, 12] for n <= 6.
bool feed_verdict(const Ordinal& xi, const schreier::FiniteSet& s) {
  schreier::SchreierState st(xi);
  for (auto v : s) {
    if (st.status() != schreier::FeedStatus::Continue) return false;
    if (st.feed(v) == schreier::FeedStatus::Dead) return false;
  }
  return st.status() == schreier::FeedStatus::JustCompleted;
}

Outcome feed_matches_batch() {
  Outcome o;
  for (const auto& xi : levels()) {
    for (std::uint64_t n = 0; n <= 6; ++n) {
      const std::uint64_t width = 12 - n;
      for (std::uint64_t mask = 0; mask < (1ull << width); ++mask) {
        schreier::FiniteSet s;
        for (std::uint64_t i = 0; i < width; ++i)
          if (mask >> i & 1) s.push_back(n + 1 + i);
        bool batch = schreier::member(xi, s);
        if (feed_verdict(xi, s) != batch) {
          std::string set;
          for (auto v : s) set += std::to_string(v) + ",";
          fail(o, xi.format() + " disagrees on {" + set + "}");
        }
      }
    }
  }
  return o;
}

// criterion 3: random decompositions exist and each block is the unique
// member prefix under an all-splits re-scan.
Outcome canonical_blocks_unique() {
  Outcome o;
  std::mt19937_64 rng(2026);
  std::vector<std::uint64_t> universe(40);
  std::iota(universe.begin(), universe.end(), 1);
  for (const auto& xi : levels()) {
    for (int trial = 0; trial < 200; ++trial) {
      std::shuffle(universe.begin(), universe.end(), rng);
      std::size_t len = 1 + rng() % 20;
      schreier::FiniteSet seq(universe.begin(),
                              universe.begin() + static_cast<long>(len));
      std::sort(seq.begin(), seq.end());
      auto dec = schreier::canonical_decomposition(xi, seq);
      schreier::FiniteSet rest = seq;
      for (const auto& block : dec.blocks) {
        std::size_t hits = 0;
        std::size_t hit_len = 0;
        for (std::size_t l = 1; l <= rest.size(); ++l) {
          schreier::FiniteSet pre(rest.begin(),
                                  rest.begin() + static_cast<long>(l));
          if (oracle::schreier_member(xi, pre)) {
            ++hits;
            hit_len = l;
          }
        }
        if (hits != 1 || hit_len != block.size()) {
          fail(o, xi.format() + ": block not the unique member prefix");
          break;
        }
        rest.erase(rest.begin(), rest.begin() + static_cast<long>(hit_len));
      }
      if (!o.ok) break;
      if (rest != dec.remainder) {
        fail(o, xi.format() + ": remainder mismatch");
        break;
      }
      for (std::size_t l = 1; l <= rest.size(); ++l) {
        schreier::FiniteSet pre(rest.begin(),
                                rest.begin() + static_cast<long>(l));
        if (oracle::schreier_member(xi, pre)) {
          fail(o, xi.format() + ": remainder holds a member prefix");
          break;
        }
      }
      if (!o.ok) break;
    }
  }
  return o;
}

// criterion 4: derivative index of the symbolic families, exactly.
Outcome derivative_index_exact() {
  Outcome o;
  auto k = DominationSeq::constant(1);
  const char* expected[] = {"2", "3", "4", "w+1", "w+2", "w*2+1", "w^2+1"};
  auto xs = levels();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    auto got = families::strong_cb_index(
        families::FamilySpec::schreier_hered(xs[i]), k);
    if (got != Ordinal::parse(expected[i]))
      fail(o, xs[i].format() + ": index " + got.format());
  }
  for (std::uint64_t m = 0; m <= 3; ++m) {
    auto got =
        families::strong_cb_index(families::FamilySpec::len_at_most(m), k);
    if (got != Ordinal::nat(m + 1))
      fail(o, "len bound " + std::to_string(m) + ": index " + got.format());
  }
  return o;
}

// criterion 5: algebraic identities, exhaustive on [1..4] and sampled.
Outcome identities_hold() {
  Outcome o;
  auto k = DominationSeq::table({1, 2, 2, 2});
  auto sg_add = SemigroupSpec::integers_add().with_y_pow(2);
  auto sg_max = SemigroupSpec::integers_max().with_y_affine(3);

  auto check_pair = [&](const LocatedWord& w, const LocatedWord& u,
                        const DominationSeq& kk) {
    if (!words::less(w, u)) return;
    auto cat = words::concat(w, u);
    for (std::uint64_t p = 0; p <= 3; ++p) {
      if (words::t_p(cat, p, kk) !=
          words::concat(words::t_p(w, p, kk), words::t_p(u, p, kk)))
        fail(o, "substitution does not distribute over concat");
    }
    if (words::plus(w, u) != cat) fail(o, "ordered merge differs from concat");
    if (!w.is_variable() && !u.is_variable()) {
      if (search::g_eval(cat, sg_add) !=
          sg_add.op(search::g_eval(w, sg_add), search::g_eval(u, sg_add)))
        fail(o, "bridge map not additive over concat");
      if (search::g_eval(cat, sg_max) !=
          sg_max.op(search::g_eval(w, sg_max), search::g_eval(u, sg_max)))
        fail(o, "bridge map not a fold under max");
    }
  };

  auto check_word = [&](const LocatedWord& w, const DominationSeq& kk) {
    for (std::uint64_t p = 0; p <= 3; ++p) {
      if (words::to_unlocated(words::t_p(w, p, kk)) !=
          words::t_p(words::to_unlocated(w), p, kk))
        fail(o, "substitution does not commute with unlocating");
    }
    const auto& es = w.entries();
    if (es.front().second != 0 && es.back().second != 0) {
      for (std::uint64_t p = 1; p <= kk.at(w.min_pos()); ++p) {
        auto gv = search::g_grouped_noncommutative(w, p, sg_add, kk);
        if (gv.value != search::g_eval(words::t_p(w, p, kk), sg_add))
          fail(o, "grouped value differs from direct substitution");
      }
    }
  };

  // Exhaustive universe over [1..4].
  auto pool = words::enumerate_located(4, k, false);
  for (const auto& w : pool) check_word(w, k);
  for (const auto& w : pool)
    for (const auto& u : pool) check_pair(w, u, k);

  // Sampled cases over wider spans.
  auto kw = DominationSeq::table({1, 2, 3, 3, 4});
  std::mt19937_64 rng(11);
  auto rand_word = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<LocatedWord::Entry> es;
    std::uint64_t n = lo - 1;
    do {
      n += 1 + rng() % 2;
      if (n > hi) n = lo + rng() % (hi - lo + 1);
      es.clear();
      std::uint64_t pos = n;
      int len = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < len && pos <= hi; ++i) {
        es.emplace_back(pos, rng() % (kw.at(pos) + 1));
        pos += 1 + rng() % 2;
      }
    } while (es.empty());
    return lw(es);
  };
  // Forcing letters constant keeps the bridge and grouped identities at
  // full sample counts; random words alone would hit them too rarely.
  auto force = [&](const LocatedWord& w, bool everywhere) {
    auto es = w.entries();
    if (everywhere)
      for (auto& [n, l] : es) {
        (void)n;
        if (l == 0) l = 1;
      }
    if (es.front().second == 0) es.front().second = 1;
    if (es.back().second == 0) es.back().second = 1;
    return lw(es);
  };
  for (int trial = 0; trial < 1200; ++trial) {
    auto w = rand_word(1, 5);
    auto u = rand_word(6, 12);
    check_pair(w, u, kw);
    check_word(w, kw);
    check_word(u, kw);
    check_pair(force(w, true), force(u, true), kw);
    check_word(force(w, false), kw);
    check_word(force(u, false), kw);
  }
  return o;
}

// criterion 6: extracted sets equal the raw enumeration on every orderly
// tuple of at most three variable words inside [1..6].
Outcome extraction_matches_oracle() {
  Outcome o;
  std::vector<DominationSeq> ks = {DominationSeq::constant(1),
                                   DominationSeq::constant(2),
                                   DominationSeq::affine(1, 0)};
  for (const auto& k : ks) {
    auto pool = words::enumerate_located(6, k, true);
    // Bucket by min position for ordered-pair scans.
    std::vector<std::vector<LocatedWord>> by_min(8);
    for (const auto& w : pool) by_min[w.min_pos()].push_back(w);

    auto check = [&](const std::vector<LocatedWord>& ws) {
      auto t = OrderlyTuple::from_words(ws);
      if (extraction::ev(t, k) != oracle::extracted_images(ws, k, true))
        fail(o, "variable extracted set mismatch");
      if (extraction::e(t, k) != oracle::extracted_images(ws, k, false))
        fail(o, "constant extracted set mismatch");
    };

    for (const auto& w1 : pool) {
      if (!o.ok) break;
      check({w1});
      for (std::uint64_t m2 = w1.max_pos() + 1; m2 <= 6; ++m2)
        for (const auto& w2 : by_min[m2]) {
          check({w1, w2});
          for (std::uint64_t m3 = w2.max_pos() + 1; m3 <= 6; ++m3)
            for (const auto& w3 : by_min[m3]) check({w1, w2, w3});
        }
    }
    if (!o.ok) break;
  }
  return o;
}

search::SearchResult hindman_run(std::size_t threads) {
  auto k = DominationSeq::constant(1);
  search::SearchOptions opts;
  opts.threads = threads;
  return search::find_homogeneous(3, 20, k, search::Coloring::dom_size_parity(),
                                  search::Coloring::min_dom_mod(2), opts);
}

// criterion 7: the finite sums instance yields a verified witness.
Outcome hindman_instance() {
  Outcome o;
  auto res = hindman_run(1);
  if (!res.found) {
    fail(o, "no witness up to N=20");
    return o;
  }
  if (!search::verify_homogeneous(res.witness.words,
                                  DominationSeq::constant(1),
                                  search::Coloring::dom_size_parity(),
                                  search::Coloring::min_dom_mod(2)))
    fail(o, "witness failed re-verification");
  return o;
}

search::SearchResult bridge_run(std::size_t threads) {
  auto k = DominationSeq::table({1, 2, 3});
  auto sg = SemigroupSpec::integers_add().with_y_pow(4);
  auto col = search::Coloring::composed_via_g(sg, 3);
  search::SearchOptions opts;
  opts.threads = threads;
  opts.const_ends = true;
  return search::find_homogeneous(2, 16, k, col, col, opts);
}

// criterion 8: the semigroup transfer instance yields a witness whose
// finite sums stay in one class for every admissible substitution.
Outcome bridge_instance() {
  Outcome o;
  auto k = DominationSeq::table({1, 2, 3});
  auto sg = SemigroupSpec::integers_add().with_y_pow(4);
  auto col = search::Coloring::composed_via_g(sg, 3);
  auto res = bridge_run(1);
  if (!res.found) {
    fail(o, "no witness up to N=16");
    return o;
  }
  if (!search::verify_homogeneous(res.witness.words, k, col, col))
    fail(o, "witness failed re-verification");
  if (!search::vdw_bridge_check(res.witness.words, k, sg, col, 2))
    fail(o, "finite sums split across classes");
  return o;
}

std::string witness_bytes(const search::SearchResult& res) {
  nlohmann::json j;
  j["found"] = res.found;
  auto arr = nlohmann::json::array();
  for (const auto& w : res.witness.words)
    arr.push_back(json_io::word_to_json(w));
  j["words"] = std::move(arr);
  j["i0"] = res.witness.i0;
  j["j0"] = res.witness.j0;
  j["candidates"] = res.witness.candidates;
  return j.dump();
}

// criterion 9: worker counts 1, 4, 8 give byte-identical witnesses.
Outcome determinism_across_workers() {
  Outcome o;
  auto h1 = witness_bytes(hindman_run(1));
  if (witness_bytes(hindman_run(4)) != h1)
    fail(o, "finite sums witness differs at 4 workers");
  if (witness_bytes(hindman_run(8)) != h1)
    fail(o, "finite sums witness differs at 8 workers");
  auto b1 = witness_bytes(bridge_run(1));
  if (witness_bytes(bridge_run(4)) != b1)
    fail(o, "bridge witness differs at 4 workers");
  if (witness_bytes(bridge_run(8)) != b1)
    fail(o, "bridge witness differs at 8 workers");
  return o;
}

struct Criterion {
  const char* label;
  Outcome (*run)();
  double budget_s;  // wall-clock bound; 0 means no explicit bound
};

const Criterion kCriteria[] = {
    {"thinness-audit", thinness_audit_clean, 30.0},
    {"feed-vs-batch", feed_matches_batch, 0.0},
    {"canonical-blocks", canonical_blocks_unique, 0.0},
    {"derivative-index", derivative_index_exact, 0.0},
    {"identities", identities_hold, 0.0},
    {"extraction-oracle", extraction_matches_oracle, 0.0},
    {"hindman-instance", hindman_instance, 60.0},
    {"semigroup-bridge", bridge_instance, 300.0},
    {"determinism", determinism_across_workers, 0.0},
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <criterion 1..9>\n", argv[0]);
    return 2;
  }
  int n = std::atoi(argv[1]);
  if (n < 1 || n > 9) {
    std::fprintf(stderr, "criterion out of range\n");
    return 2;
  }
  const Criterion& c = kCriteria[n - 1];
  auto t0 = Clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    fail(o, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (o.ok && c.budget_s > 0 && secs > c.budget_s)
    fail(o, "over the " + std::to_string(c.budget_s) + "s budget");
  if (o.ok)
    std::printf("[PASS] %d %s (%.1fs)\n", n, c.label, secs);
  else
    std::printf("[FAIL] %d %s: %s (%.1fs)\n", n, c.label, o.note.c_str(),
                secs);
  return o.ok ? 0 : 1;
}
