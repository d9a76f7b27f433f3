#include "omw/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <thread>

#include "omw/errors.hpp"

namespace omw::search {

Coloring Coloring::dom_size_parity() { return Coloring{}; }

Coloring Coloring::min_dom_mod(std::uint64_t m) {
  if (m < 1) throw domain_error("modulus must be >= 1");
  Coloring c;
  c.kind_ = Kind::MinDomMod;
  c.m_ = m;
  c.arity_ = m;
  return c;
}

Coloring Coloring::letter_sum_mod(std::uint64_t m) {
  if (m < 1) throw domain_error("modulus must be >= 1");
  Coloring c;
  c.kind_ = Kind::LetterSumMod;
  c.m_ = m;
  c.arity_ = m;
  return c;
}

Coloring Coloring::max_letter_mod(std::uint64_t m) {
  if (m < 1) throw domain_error("modulus must be >= 1");
  Coloring c;
  c.kind_ = Kind::MaxLetterMod;
  c.m_ = m;
  c.arity_ = m;
  return c;
}

Coloring Coloring::table(std::map<LocatedWord, std::uint64_t> entries,
                         std::uint64_t arity) {
  Coloring c;
  c.kind_ = Kind::Table;
  c.table_ = std::move(entries);
  c.arity_ = arity;
  return c;
}

Coloring Coloring::composed_via_g(SemigroupSpec sg, std::uint64_t r) {
  if (r < 1) throw domain_error("arity must be >= 1");
  Coloring c;
  c.kind_ = Kind::ComposedViaG;
  c.sg_ = std::move(sg);
  c.arity_ = r;
  return c;
}

std::uint64_t Coloring::color_value(const SgValue& v) const {
  if (kind_ != Kind::ComposedViaG)
    throw domain_error("only composed colorings rate semigroup values");
  if (!std::holds_alternative<std::int64_t>(v))
    throw domain_error("composed coloring needs integer semigroup values");
  std::int64_t r = static_cast<std::int64_t>(arity_);
  std::int64_t c = std::get<std::int64_t>(v) % r;
  if (c < 0) c += r;
  return 1 + static_cast<std::uint64_t>(c);
}

std::uint64_t Coloring::color(const LocatedWord& w) const {
  switch (kind_) {
    case Kind::DomSizeParity:
      return 1 + w.size() % 2;
    case Kind::MinDomMod:
      return 1 + w.min_pos() % m_;
    case Kind::LetterSumMod: {
      std::uint64_t s = 0;
      for (const auto& [n, l] : w.entries()) s += l;
      return 1 + s % m_;
    }
    case Kind::MaxLetterMod: {
      std::uint64_t mx = 0;
      for (const auto& [n, l] : w.entries()) mx = std::max(mx, l);
      return 1 + mx % m_;
    }
    case Kind::Table: {
      auto it = table_.find(w);
      if (it == table_.end())
        throw domain_error("table coloring has no entry for a word");
      return it->second;
    }
    case Kind::ComposedViaG: {
      // The bridge value of any word, variable slots read as letter 0.
      SgValue acc;
      bool first = true;
      for (const auto& [n, l] : w.entries()) {
        SgValue v = sg_->y(l, n);
        acc = first ? v : sg_->op(acc, v);
        first = false;
      }
      return color_value(acc);
    }
  }
  throw domain_error("bad coloring kind");
}

namespace {

// Largest exponent that still produces a new substitution image.
std::uint64_t exponent_top(const LocatedWord& w, const DominationSeq& k) {
  std::uint64_t top = 1;
  for (const auto& [n, l] : w.entries())
    if (l == 0) top = std::max(top, k.at(n));
  return top;
}

// Extracted-set state along one search branch, with the shared colors.
struct BranchSets {
  std::vector<LocatedWord> ev, e;
  std::uint64_t ev_color = 0, e_color = 0;  // 0 until the first element
};

bool paint(std::uint64_t& slot, std::uint64_t c) {
  if (slot == 0) slot = c;
  return slot == c;
}

// Folds the next word into the extracted sets; false on a color clash.
// The plain word is painted before any concatenation so that a clash
// between two bare words never has to color a composite image.
bool extend_sets(BranchSets& bs, const LocatedWord& w, const DominationSeq& k,
                 const Coloring& col_var, const Coloring& col_const) {
  std::vector<LocatedWord> const_images;
  for (std::uint64_t p = 1; p <= exponent_top(w, k); ++p)
    const_images.push_back(words::t_p(w, p, k));

  std::vector<LocatedWord> new_ev, new_e;
  new_ev.push_back(w);
  for (const auto& x : bs.ev) {
    new_ev.push_back(words::concat(x, w));
    for (const auto& c : const_images) new_ev.push_back(words::concat(x, c));
  }
  for (const auto& x : bs.e) new_ev.push_back(words::concat(x, w));
  for (const auto& c : const_images) {
    new_e.push_back(c);
    for (const auto& x : bs.e) new_e.push_back(words::concat(x, c));
  }

  for (const auto& x : new_ev)
    if (!paint(bs.ev_color, col_var.color(x))) return false;
  for (const auto& x : new_e)
    if (!paint(bs.e_color, col_const.color(x))) return false;

  auto merge = [](std::vector<LocatedWord>& into,
                  std::vector<LocatedWord>&& add) {
    into.insert(into.end(), std::make_move_iterator(add.begin()),
                std::make_move_iterator(add.end()));
    std::sort(into.begin(), into.end());
    into.erase(std::unique(into.begin(), into.end()), into.end());
  };
  merge(bs.ev, std::move(new_ev));
  merge(bs.e, std::move(new_e));
  return true;
}

// Streams every qualifying word extending cur with entries at positions
// [from..P], in entries-lex order (a word precedes its own extensions).
// The callback returns false to stop the stream; so does gen_words.
template <class CB>
bool gen_words(std::vector<LocatedWord::Entry>& cur, std::size_t n_var,
               std::uint64_t from, std::uint64_t P, const DominationSeq& k,
               bool const_ends, CB&& cb) {
  if (!cur.empty() && n_var > 0 &&
      (!const_ends || (cur.front().second != 0 && cur.back().second != 0))) {
    if (!cb(cur)) return false;
  }
  for (std::uint64_t n = from; n <= P; ++n) {
    for (std::uint64_t l = 0; l <= k.at(n); ++l) {
      if (const_ends && cur.empty() && l == 0) continue;
      cur.emplace_back(n, l);
      bool go =
          gen_words(cur, n_var + (l == 0), n + 1, P, k, const_ends, cb);
      cur.pop_back();
      if (!go) return false;
    }
  }
  return true;
}

struct RoundCtx {
  std::size_t m;
  std::uint64_t P;
  const DominationSeq& k;
  const Coloring& col_var;
  const Coloring& col_const;
  bool const_ends;
};

// Depth-first completion below an already-extended prefix; words stream
// lazily, so the first hit is the lexicographically least completion.
bool dfs_deeper(const RoundCtx& ctx, std::size_t depth,
                std::vector<LocatedWord>& out, const BranchSets& bs) {
  std::vector<LocatedWord::Entry> cur;
  bool found = false;
  std::uint64_t from = out.back().max_pos() + 1;
  gen_words(cur, 0, from, ctx.P, ctx.k, ctx.const_ends,
            [&](const std::vector<LocatedWord::Entry>& entries) {
              auto w = LocatedWord::from_entries(entries);
              if (depth == ctx.m) {
                if (w.max_pos() != ctx.P) return true;
              } else if (w.max_pos() + (ctx.m - depth) > ctx.P) {
                return true;
              }
              BranchSets next = bs;
              if (!extend_sets(next, w, ctx.k, ctx.col_var, ctx.col_const))
                return true;
              out.push_back(std::move(w));
              if (depth == ctx.m || dfs_deeper(ctx, depth + 1, out, next)) {
                found = true;
                return false;
              }
              out.pop_back();
              return true;
            });
  return found;
}

// One first-word candidate: extend the sets, then complete the tuple.
bool try_first(const RoundCtx& ctx, const LocatedWord& w1,
               std::vector<LocatedWord>& out) {
  if (ctx.m == 1) {
    if (w1.max_pos() != ctx.P) return false;
  } else if (w1.max_pos() + (ctx.m - 1) > ctx.P) {
    return false;
  }
  BranchSets bs;
  if (!extend_sets(bs, w1, ctx.k, ctx.col_var, ctx.col_const)) return false;
  out.push_back(w1);
  if (ctx.m == 1 || dfs_deeper(ctx, 2, out, bs)) return true;
  out.pop_back();
  return false;
}

struct BranchOutcome {
  std::uint64_t count = 0;  // qualifying first words streamed
  bool found = false;
  std::vector<LocatedWord> words;
  std::exception_ptr error;
};

// Product of the per-position digit counts, saturated far above any budget
// so the clamp itself cannot wrap.
std::uint64_t raw_round_estimate(std::uint64_t P, const DominationSeq& k) {
  const std::uint64_t lid = UINT64_MAX / 2;
  std::uint64_t est = 1;
  for (std::uint64_t n = 1; n <= P; ++n) {
    std::uint64_t f = 2 + k.at(n);
    if (est > lid / f) return lid;
    est *= f;
  }
  return est;
}

}  // namespace

SearchResult find_homogeneous(std::size_t m, std::uint64_t N,
                              const DominationSeq& k, const Coloring& col_var,
                              const Coloring& col_const,
                              const SearchOptions& opts) {
  if (m < 1) throw domain_error("tuple length must be >= 1");
  if (N < 1) throw domain_error("domain bound must be >= 1");
  SearchResult res;
  std::uint64_t inspected = 0;

  for (std::uint64_t P = 1; P <= N; ++P) {
    // The raw digit space bounds the stream; refuse rounds that cannot
    // fit under the budget before streaming anything.
    if (raw_round_estimate(P, k) / 16 > opts.universe_budget)
      throw budget_error("candidate universe over budget");
    RoundCtx ctx{m, P, k, col_var, col_const, opts.const_ends};

    // First-word candidates split into branches keyed by their first
    // entry; branch order refines entries-lex order, so the least witness
    // lives in the least branch that finds one.
    std::vector<LocatedWord::Entry> branches;
    for (std::uint64_t n = 1; n <= P; ++n)
      for (std::uint64_t l = 0; l <= k.at(n); ++l) {
        if (opts.const_ends && l == 0) continue;
        branches.emplace_back(n, l);
      }

    std::vector<BranchOutcome> outcomes(branches.size());
    std::atomic<std::size_t> next_branch{0};
    std::atomic<std::size_t> best_branch{branches.size()};

    auto run_branch = [&](std::size_t b) {
      BranchOutcome& oc = outcomes[b];
      std::vector<LocatedWord::Entry> cur{branches[b]};
      std::size_t n_var = branches[b].second == 0 ? 1 : 0;
      gen_words(cur, n_var, branches[b].first + 1, P, k, opts.const_ends,
                [&](const std::vector<LocatedWord::Entry>& entries) {
                  if (best_branch.load(std::memory_order_relaxed) < b)
                    return false;
                  ++oc.count;
                  std::vector<LocatedWord> out;
                  if (try_first(ctx, LocatedWord::from_entries(entries),
                                out)) {
                    oc.found = true;
                    oc.words = std::move(out);
                    return false;
                  }
                  return true;
                });
      if (oc.found) {
        std::size_t prev = best_branch.load();
        while (b < prev && !best_branch.compare_exchange_weak(prev, b)) {
        }
      }
    };

    auto worker = [&]() {
      for (;;) {
        std::size_t b = next_branch.fetch_add(1);
        if (b >= branches.size()) return;
        if (b > best_branch.load()) return;
        try {
          run_branch(b);
        } catch (...) {
          outcomes[b].error = std::current_exception();
        }
      }
    };
    if (opts.threads <= 1) {
      worker();
    } else {
      std::vector<std::thread> ts;
      for (std::size_t t = 0; t < opts.threads; ++t) ts.emplace_back(worker);
      for (auto& t : ts) t.join();
    }

    // Branches before the winner ran to completion, so a sequential run
    // would have hit any error recorded there first; replay that order.
    std::size_t win = best_branch.load();
    std::uint64_t round_total = 0;
    for (std::size_t b = 0; b < branches.size() && b <= win; ++b) {
      if (outcomes[b].error) std::rethrow_exception(outcomes[b].error);
      round_total += outcomes[b].count;
    }
    if (win < branches.size()) {
      // Rebuild the winning branch state to recover the shared colors.
      BranchSets bs;
      for (const auto& w : outcomes[win].words)
        extend_sets(bs, w, k, col_var, col_const);
      res.found = true;
      res.witness.words = std::move(outcomes[win].words);
      res.witness.i0 = bs.ev_color;
      res.witness.j0 = bs.e_color;
      res.witness.candidates = inspected + round_total;
      return res;
    }
    inspected += round_total;
    if (inspected > opts.universe_budget)
      throw budget_error("candidate universe over budget");
  }
  res.found = false;
  res.bound = N;
  res.witness.candidates = inspected;
  return res;
}

namespace {

// Naive regeneration of both extracted sets: every nonempty subsequence of
// the words, every exponent vector, images built entry by entry.
void naive_extracted(const std::vector<LocatedWord>& ws,
                     const DominationSeq& k,
                     std::set<std::vector<LocatedWord::Entry>>& ev_out,
                     std::set<std::vector<LocatedWord::Entry>>& e_out) {
  const std::size_t l = ws.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << l); ++mask) {
    std::vector<std::size_t> sel;
    for (std::size_t i = 0; i < l; ++i)
      if (mask >> i & 1) sel.push_back(i);
    std::vector<std::uint64_t> tops(sel.size());
    for (std::size_t j = 0; j < sel.size(); ++j) {
      std::uint64_t top = 0;
      for (const auto& [n, letter] : ws[sel[j]].entries())
        if (letter == 0) top = std::max(top, k.at(n));
      tops[j] = top;
    }
    std::vector<std::uint64_t> p(sel.size(), 0);
    for (;;) {
      std::vector<LocatedWord::Entry> img;
      bool has_zero = false;
      for (std::size_t j = 0; j < sel.size(); ++j) {
        if (p[j] == 0) has_zero = true;
        for (auto [n, letter] : ws[sel[j]].entries()) {
          if (letter == 0 && p[j] > 0) letter = std::min(p[j], k.at(n));
          img.emplace_back(n, letter);
        }
      }
      if (has_zero)
        ev_out.insert(img);
      else
        e_out.insert(img);
      std::size_t j = 0;
      while (j < sel.size()) {
        if (p[j] < tops[j]) {
          ++p[j];
          break;
        }
        p[j] = 0;
        ++j;
      }
      if (j == sel.size()) break;
    }
  }
}

}  // namespace

bool verify_homogeneous(const std::vector<LocatedWord>& witness_words,
                        const DominationSeq& k, const Coloring& col_var,
                        const Coloring& col_const) {
  if (witness_words.empty())
    throw domain_error("a witness holds at least one word");
  for (std::size_t i = 0; i < witness_words.size(); ++i) {
    if (!witness_words[i].is_variable())
      throw domain_error("witness words must be variable");
    if (i > 0 && !words::less(witness_words[i - 1], witness_words[i]))
      throw domain_error("witness words must be orderly");
  }
  std::set<std::vector<LocatedWord::Entry>> ev_set, e_set;
  naive_extracted(witness_words, k, ev_set, e_set);
  if (ev_set.empty() || e_set.empty())
    throw domain_error("extracted sets cannot be empty");

  std::uint64_t cv = 0, cc = 0;
  for (const auto& entries : ev_set) {
    auto w = LocatedWord::from_entries(entries);
    if (!paint(cv, col_var.color(w))) return false;
  }
  for (const auto& entries : e_set) {
    auto w = LocatedWord::from_entries(entries);
    if (!paint(cc, col_const.color(w))) return false;
  }
  return true;
}

bool vdw_bridge_check(const std::vector<LocatedWord>& witness_words,
                      const DominationSeq& k, const SemigroupSpec& sg,
                      const Coloring& semigroup_coloring,
                      std::size_t lambda_cap) {
  if (!sg.commutative())
    throw domain_error("the bridge check needs a commutative semigroup");
  if (witness_words.empty())
    throw domain_error("a witness holds at least one word");

  std::vector<SgValue> betas;
  std::vector<std::vector<std::uint64_t>> hs;
  std::vector<std::uint64_t> f_tops;
  for (const auto& w : witness_words) {
    const auto& entries = w.entries();
    if (entries.front().second == 0 || entries.back().second == 0)
      throw domain_error("bridge words need constant first and last entries");
    std::vector<std::uint64_t> h;
    SgValue beta;
    bool first = true;
    std::uint64_t top = UINT64_MAX;
    for (const auto& [n, l] : entries) {
      if (l == 0) {
        h.push_back(n);
        top = std::min(top, k.at(n));
      } else {
        SgValue v = sg.y(l, n);
        beta = first ? v : sg.op(beta, v);
        first = false;
      }
    }
    if (h.empty()) throw domain_error("bridge words must be variable");
    betas.push_back(std::move(beta));
    hs.push_back(std::move(h));
    f_tops.push_back(top);
  }

  const std::size_t m = witness_words.size();
  std::vector<std::uint64_t> f(m, 1);
  std::uint64_t ref_color = 0;
  for (;;) {
    std::vector<SgValue> xs;
    for (std::size_t n = 0; n < m; ++n) {
      SgValue x = betas[n];
      for (std::uint64_t t : hs[n]) x = sg.op(x, sg.y(f[n], t));
      xs.push_back(std::move(x));
    }
    for (const auto& s : fs_set(xs, sg, lambda_cap))
      if (!paint(ref_color, semigroup_coloring.color_value(s))) return false;
    std::size_t j = 0;
    while (j < m) {
      if (f[j] < f_tops[j]) {
        ++f[j];
        break;
      }
      f[j] = 1;
      ++j;
    }
    if (j == m) break;
  }
  return true;
}

}  // namespace omw::search
