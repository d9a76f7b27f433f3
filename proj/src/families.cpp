#include "omw/families.hpp"

#include <algorithm>
#include <set>

#include "omw/errors.hpp"
#include "omw/ordinal_detail.hpp"
#include "omw/schreier.hpp"

namespace omw::families {

FamilySpec FamilySpec::explicit_finite(std::vector<OrderlyTuple> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  FamilySpec f;
  f.kind_ = Kind::ExplicitFinite;
  f.members_ = std::move(members);
  return f;
}

FamilySpec FamilySpec::len_at_most(std::uint64_t m) {
  FamilySpec f;
  f.kind_ = Kind::LenAtMost;
  f.len_ = m;
  return f;
}

FamilySpec FamilySpec::schreier_hered(const Ordinal& xi) {
  FamilySpec f;
  f.kind_ = Kind::SchreierHered;
  f.xi_ = xi;
  return f;
}

FamilySpec FamilySpec::union_of(std::vector<FamilySpec> parts) {
  FamilySpec f;
  f.kind_ = Kind::Union;
  f.parts_ = std::move(parts);
  return f;
}

FamilySpec FamilySpec::intersect_of(std::vector<FamilySpec> parts) {
  FamilySpec f;
  f.kind_ = Kind::Intersect;
  f.parts_ = std::move(parts);
  return f;
}

FamilySpec staged(const Ordinal& xi, const Ordinal& stage) {
  FamilySpec f = FamilySpec::schreier_hered(xi);
  f.stage_ = stage;
  return f;
}

namespace {

bool all_variable(const OrderlyTuple& w) {
  for (const auto& word : w.words())
    if (!word.is_variable()) return false;
  return true;
}

// Remaining capacity of a feed state: ordinal sum of the pending
// obligations, deepest first. Zero exactly on JustCompleted states.
Ordinal residual(const schreier::SchreierState& st) {
  Ordinal r;
  for (const auto& ob : st.obligations()) r = detail::ord_add(r, ob);
  return r;
}

// Decides whether w embeds in a single Schreier member with residual at
// least beta left over. A placement P marks the min dom of every word of a
// witnessing orderly tuple: each marked position in a word's domain starts a
// chunk of it, unmarked domain positions must be governed by a mark in the
// same domain, and marks elsewhere are free fillers.
struct PlacementSearch {
  const std::vector<LocatedWord>& ws;
  const Ordinal& beta;
  std::vector<int> owner;  // word index owning each position, -1 otherwise
  std::uint64_t maxdom = 0;

  explicit PlacementSearch(const OrderlyTuple& w, const Ordinal& b)
      : ws(w.words()), beta(b) {
    maxdom = ws.back().max_pos();
    owner.assign(maxdom + 1, -1);
    for (std::size_t i = 0; i < ws.size(); ++i)
      for (const auto& [n, l] : ws[i].entries())
        owner[n] = static_cast<int>(i);
  }

  bool run(const Ordinal& xi) {
    if (maxdom > 26) throw budget_error("placement search bound exceeded");
    return rec(1, schreier::start(xi), -2);
  }

  // gov_owner: owner slot of the last marked position (-2 before any mark).
  bool rec(std::uint64_t pos, const schreier::SchreierState& st,
           int gov_owner) {
    if (pos > maxdom) return residual(st) >= beta;
    const int ow = owner[pos];
    if (st.status() == schreier::FeedStatus::Continue) {
      auto fed = st;
      fed.feed(pos);
      if (rec(pos + 1, fed, ow)) return true;
    }
    // Skipping a domain position needs its governor inside the same word.
    if (ow < 0 || gov_owner == ow)
      if (rec(pos + 1, st, gov_owner)) return true;
    return false;
  }
};

bool schreier_hered_member(const FamilySpec& f, const OrderlyTuple& w) {
  if (!all_variable(w)) return false;
  if (w.empty()) return f.stage() <= f.xi();
  if (f.stage() >= f.xi() || f.xi().is_zero()) return false;
  PlacementSearch search(w, f.stage());
  return search.run(f.xi());
}

}  // namespace

bool member(const FamilySpec& f, const OrderlyTuple& w) {
  switch (f.kind()) {
    case FamilySpec::Kind::ExplicitFinite:
      return std::binary_search(f.members().begin(), f.members().end(), w);
    case FamilySpec::Kind::LenAtMost:
      return all_variable(w) && w.size() <= f.len_bound();
    case FamilySpec::Kind::SchreierHered:
      return schreier_hered_member(f, w);
    case FamilySpec::Kind::Union:
      return std::any_of(f.parts().begin(), f.parts().end(),
                         [&](const FamilySpec& p) { return member(p, w); });
    case FamilySpec::Kind::Intersect:
      return std::all_of(f.parts().begin(), f.parts().end(),
                         [&](const FamilySpec& p) { return member(p, w); });
  }
  throw domain_error("bad family kind");
}

bool is_empty_family(const FamilySpec& f) {
  switch (f.kind()) {
    case FamilySpec::Kind::ExplicitFinite:
      return f.members().empty();
    case FamilySpec::Kind::LenAtMost:
      return false;
    case FamilySpec::Kind::SchreierHered:
      return f.stage() > f.xi();
    case FamilySpec::Kind::Union:
      return std::all_of(f.parts().begin(), f.parts().end(), is_empty_family);
    case FamilySpec::Kind::Intersect:
      return std::any_of(f.parts().begin(), f.parts().end(), is_empty_family);
  }
  throw domain_error("bad family kind");
}

namespace {

// All orderly tuples (the empty one included) with entries from the pool.
void pool_tuples_rec(const std::vector<LocatedWord>& pool, std::size_t from,
                     std::vector<LocatedWord>& acc,
                     std::vector<OrderlyTuple>& out, std::uint64_t cap) {
  out.push_back(OrderlyTuple::from_words(acc));
  if (out.size() > cap) throw budget_error("tuple enumeration exceeded cap");
  for (std::size_t i = from; i < pool.size(); ++i) {
    if (!acc.empty() && !words::less(acc.back(), pool[i])) continue;
    acc.push_back(pool[i]);
    pool_tuples_rec(pool, i + 1, acc, out, cap);
    acc.pop_back();
  }
}

std::vector<OrderlyTuple> tuples_over_ev(const OrderlyTuple& u,
                                         const DominationSeq& k,
                                         std::uint64_t cap = 200000) {
  if (u.empty()) return {OrderlyTuple{}};
  const auto pool = extraction::ev(u, k);
  std::vector<OrderlyTuple> out;
  std::vector<LocatedWord> acc;
  pool_tuples_rec(pool, 0, acc, out, cap);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require_explicit(const FamilySpec& f, const char* op) {
  if (f.kind() != FamilySpec::Kind::ExplicitFinite)
    throw domain_error(std::string(op) + " needs an explicit finite family");
}

}  // namespace

bool is_hereditary(const FamilySpec& f, const DominationSeq& k) {
  switch (f.kind()) {
    case FamilySpec::Kind::ExplicitFinite: {
      const auto& s = f.members();
      if (s.empty()) return true;
      if (!std::binary_search(s.begin(), s.end(), OrderlyTuple{}))
        return false;
      for (const auto& u : s)
        for (const auto& t : tuples_over_ev(u, k))
          if (!std::binary_search(s.begin(), s.end(), t)) return false;
      return true;
    }
    case FamilySpec::Kind::LenAtMost:
    case FamilySpec::Kind::SchreierHered:
      return true;
    case FamilySpec::Kind::Union:
    case FamilySpec::Kind::Intersect:
      return std::all_of(f.parts().begin(), f.parts().end(),
                         [&](const FamilySpec& p) {
                           return is_hereditary(p, k);
                         });
  }
  throw domain_error("bad family kind");
}

FamilySpec star_closure(const FamilySpec& explicit_f) {
  require_explicit(explicit_f, "star_closure");
  std::vector<OrderlyTuple> out;
  for (const auto& u : explicit_f.members())
    for (std::size_t l = 0; l <= u.size(); ++l)
      out.push_back(OrderlyTuple::from_words(std::vector<LocatedWord>(
          u.words().begin(), u.words().begin() + l)));
  out.push_back(OrderlyTuple{});
  return FamilySpec::explicit_finite(std::move(out));
}

bool is_tree(const FamilySpec& explicit_f) {
  require_explicit(explicit_f, "is_tree");
  return star_closure(explicit_f).members() == explicit_f.members();
}

FamilySpec hered_closure(const FamilySpec& explicit_f,
                         const DominationSeq& k) {
  require_explicit(explicit_f, "hered_closure");
  std::vector<OrderlyTuple> out;
  out.push_back(OrderlyTuple{});
  for (const auto& u : explicit_f.members()) {
    auto ts = tuples_over_ev(u, k);
    out.insert(out.end(), ts.begin(), ts.end());
  }
  return FamilySpec::explicit_finite(std::move(out));
}

namespace {

bool has_explicit_node(const FamilySpec& f) {
  if (f.kind() == FamilySpec::Kind::ExplicitFinite) return true;
  return std::any_of(f.parts().begin(), f.parts().end(), has_explicit_node);
}

FamilySpec filter_explicit_nodes(const FamilySpec& node,
                                 const FamilySpec& whole,
                                 const DominationSeq& k, std::uint64_t cap) {
  switch (node.kind()) {
    case FamilySpec::Kind::ExplicitFinite: {
      std::vector<OrderlyTuple> kept;
      for (const auto& w : node.members()) {
        bool ok = true;
        for (const auto& t : tuples_over_ev(w, k, cap))
          if (!member(whole, t)) {
            ok = false;
            break;
          }
        if (ok) kept.push_back(w);
      }
      return FamilySpec::explicit_finite(std::move(kept));
    }
    case FamilySpec::Kind::Union:
    case FamilySpec::Kind::Intersect: {
      std::vector<FamilySpec> ps;
      for (const auto& p : node.parts())
        ps.push_back(filter_explicit_nodes(p, whole, k, cap));
      return node.kind() == FamilySpec::Kind::Union
                 ? FamilySpec::union_of(std::move(ps))
                 : FamilySpec::intersect_of(std::move(ps));
    }
    default:
      return node;
  }
}

}  // namespace

FamilySpec f_h(const FamilySpec& f, const DominationSeq& k,
               std::uint64_t universe_bound) {
  if (is_empty_family(f))
    return FamilySpec::explicit_finite({OrderlyTuple{}});
  if (!has_explicit_node(f)) return f;  // hereditary by construction
  FamilySpec out = filter_explicit_nodes(f, f, k, universe_bound);
  if (!member(out, OrderlyTuple{}))
    out = FamilySpec::union_of(
        {std::move(out), FamilySpec::explicit_finite({OrderlyTuple{}})});
  return out;
}

namespace {

// Family at derivative stage xi is {empty tuple}; past it, empty.
FamilySpec normalize_stage(const Ordinal& xi, const Ordinal& stage) {
  int c = stage.compare(xi);
  if (c < 0) return staged(xi, stage);
  if (c == 0) return FamilySpec::explicit_finite({OrderlyTuple{}});
  return FamilySpec::explicit_finite({});
}

// Advances every node delta derivative stages at once. Exact because the
// stage semantics are pointwise per node and decreasing stage chains
// distribute intersections over finite unions and intersections.
FamilySpec jump(const FamilySpec& f, const Ordinal& delta) {
  switch (f.kind()) {
    case FamilySpec::Kind::ExplicitFinite:
      // Finitely many extensions can never be unbounded.
      return FamilySpec::explicit_finite({});
    case FamilySpec::Kind::LenAtMost: {
      if (!delta.is_finite() || delta.finite_value() > f.len_bound())
        return FamilySpec::explicit_finite({});
      return FamilySpec::len_at_most(f.len_bound() - delta.finite_value());
    }
    case FamilySpec::Kind::SchreierHered:
      return normalize_stage(f.xi(), detail::ord_add(f.stage(), delta));
    case FamilySpec::Kind::Union:
    case FamilySpec::Kind::Intersect: {
      std::vector<FamilySpec> ps;
      for (const auto& p : f.parts()) ps.push_back(jump(p, delta));
      return f.kind() == FamilySpec::Kind::Union
                 ? FamilySpec::union_of(std::move(ps))
                 : FamilySpec::intersect_of(std::move(ps));
    }
  }
  throw domain_error("bad family kind");
}

// Largest stage advance every live node tracks exactly in one symbolic step.
Ordinal stage_hint(const FamilySpec& f) {
  switch (f.kind()) {
    case FamilySpec::Kind::ExplicitFinite:
    case FamilySpec::Kind::LenAtMost:
      return Ordinal::nat(1);
    case FamilySpec::Kind::SchreierHered: {
      if (f.stage() >= f.xi()) return Ordinal::nat(1);
      Ordinal diff = detail::ord_left_diff(f.stage(), f.xi());
      const auto& lead = diff.cnf_terms().front();
      return Ordinal::single_term(lead.exp, lead.coeff);
    }
    case FamilySpec::Kind::Union:
    case FamilySpec::Kind::Intersect: {
      Ordinal best;
      bool any = false;
      for (const auto& p : f.parts()) {
        if (is_empty_family(p)) continue;
        Ordinal h = stage_hint(p);
        if (!any || h < best) best = h;
        any = true;
      }
      return any ? best : Ordinal::nat(1);
    }
  }
  throw domain_error("bad family kind");
}

void require_hereditary(const FamilySpec& f, const DominationSeq& k,
                        const char* op) {
  if (!is_hereditary(f, k))
    throw domain_error(std::string(op) + " requires a hereditary family");
}

}  // namespace

FamilySpec derivative(const FamilySpec& f, const DominationSeq& k) {
  require_hereditary(f, k, "derivative");
  return jump(f, Ordinal::nat(1));
}

Ordinal strong_cb_index(const FamilySpec& f, const DominationSeq& k,
                        std::uint64_t step_budget) {
  require_hereditary(f, k, "strong_cb_index");
  FamilySpec cur = f;
  Ordinal stage;
  std::uint64_t steps = 0;
  while (!is_empty_family(cur)) {
    if (++steps > step_budget)
      throw budget_error("derivative iteration exceeded the step budget");
    Ordinal delta = stage_hint(cur);
    cur = jump(cur, delta);
    stage = detail::ord_add(stage, delta);
  }
  return stage;
}

CanonicalRep canonical_rep_L_xi(const Ordinal& xi, const OrderlyTuple& seq) {
  schreier::FiniteSet mins;
  for (const auto& w : seq.words()) mins.push_back(w.min_pos());
  auto dec = schreier::canonical_decomposition(xi, mins);
  CanonicalRep rep;
  std::size_t used = 0;
  for (const auto& block : dec.blocks) {
    rep.blocks.push_back(OrderlyTuple::from_words(
        std::vector<LocatedWord>(seq.words().begin() + used,
                                 seq.words().begin() + used + block.size())));
    used += block.size();
  }
  rep.remainder = OrderlyTuple::from_words(std::vector<LocatedWord>(
      seq.words().begin() + used, seq.words().end()));
  return rep;
}

namespace {

bool structurally_closed(const FamilySpec& f) {
  switch (f.kind()) {
    case FamilySpec::Kind::ExplicitFinite:
    case FamilySpec::Kind::LenAtMost:
    case FamilySpec::Kind::SchreierHered:
      return true;
    case FamilySpec::Kind::Union:
      // The empty union is the empty family, closed outright.
      return std::all_of(f.parts().begin(), f.parts().end(),
                         structurally_closed);
    case FamilySpec::Kind::Intersect:
      // The empty intersection is the full tree, which is not closed.
      return !f.parts().empty() &&
             std::all_of(f.parts().begin(), f.parts().end(),
                         structurally_closed);
  }
  throw domain_error("bad family kind");
}

bool chain_probe(const FamilySpec& f, const std::vector<LocatedWord>& pool,
                 std::size_t from, std::vector<LocatedWord>& acc,
                 std::vector<OrderlyTuple>& chain, std::size_t depth) {
  if (chain.size() >= depth) return true;
  for (std::size_t i = from; i < pool.size(); ++i) {
    if (!acc.empty() && !words::less(acc.back(), pool[i])) continue;
    acc.push_back(pool[i]);
    OrderlyTuple t = OrderlyTuple::from_words(acc);
    if (member(f, t)) {
      chain.push_back(t);
      if (chain_probe(f, pool, i + 1, acc, chain, depth)) return true;
      chain.pop_back();
    }
    acc.pop_back();
  }
  return false;
}

}  // namespace

ClosedCheck pointwise_closed_check(const FamilySpec& f,
                                   const DominationSeq& k,
                                   std::size_t probe_depth) {
  ClosedCheck out;
  if (structurally_closed(f)) {
    out.closed = true;
    out.basis = ClosedBasis::Structural;
    return out;
  }
  out.basis = ClosedBasis::ProbeBounded;
  std::vector<OrderlyTuple> chain;
  if (member(f, OrderlyTuple{})) chain.push_back(OrderlyTuple{});
  const auto pool = words::enumerate_located(
      static_cast<std::uint64_t>(probe_depth), k, true);
  std::vector<LocatedWord> acc;
  if (chain_probe(f, pool, 0, acc, chain, probe_depth)) {
    out.closed = false;
    out.witness_chain = std::move(chain);
  } else {
    out.closed = true;
  }
  return out;
}

}  // namespace omw::families
