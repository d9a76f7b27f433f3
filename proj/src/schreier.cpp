#include "omw/schreier.hpp"

#include <algorithm>

#include "omw/errors.hpp"

namespace omw::schreier {

bool is_valid_set(const FiniteSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 0) return false;
    if (i > 0 && s[i] <= s[i - 1]) return false;
  }
  return true;
}

namespace {

void require_valid(const FiniteSet& s) {
  if (!is_valid_set(s))
    throw domain_error("set elements must be strictly increasing and >= 1");
}

using Span = std::pair<std::size_t, std::size_t>;  // [begin, end) into a set

bool member_span(const Ordinal& xi, const FiniteSet& s, Span span);

// Consumes exactly `count` consecutive members of A_theta from the front of
// span. A_theta is thin, so the leading member is unique when it exists:
// take the shortest member prefix and recurse on the rest.
bool strip_blocks(const Ordinal& theta, std::uint64_t count, const FiniteSet& s,
                  Span span) {
  if (count == 0) return span.first == span.second;
  for (std::size_t end = span.first + 1; end <= span.second; ++end) {
    if (member_span(theta, s, {span.first, end}))
      return strip_blocks(theta, count - 1, s, {end, span.second});
  }
  return false;
}

bool member_span(const Ordinal& xi, const FiniteSet& s, Span span) {
  std::size_t len = span.second - span.first;
  if (xi.is_zero()) return len == 0;
  if (len == 0) return false;
  if (xi.kind() == OrdinalKind::Successor)
    return member_span(xi.predecessor(), s, {span.first + 1, span.second});

  const auto& terms = xi.cnf_terms();
  if (terms.size() == 1 && terms[0].coeff == 1) {
    const Ordinal& e = terms[0].exp;  // xi = w^e, e >= 1
    if (e.kind() == OrdinalKind::Successor) {
      std::uint64_t n = s[span.first];
      return strip_blocks(Ordinal::omega_power(e.predecessor()), n, s, span);
    }
    Ordinal en = fundamental_successor_seq(e, s[span.first]);
    return member_span(Ordinal::omega_power(en), s, span);
  }

  // Composite limit: consume the normal-form terms smallest exponent first.
  // Each leading block is unique by thinness, so greedy stripping is
  // complete and needs no backtracking.
  Span rest = span;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const Ordinal block = Ordinal::omega_power(it->exp);
    for (std::uint64_t c = 0; c < it->coeff; ++c) {
      bool found = false;
      for (std::size_t end = rest.first + 1; end <= rest.second; ++end) {
        if (member_span(block, s, {rest.first, end})) {
          rest = {end, rest.second};
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return rest.first == rest.second;
}

}  // namespace

bool member(const Ordinal& xi, const FiniteSet& s) {
  require_valid(s);
  return member_span(xi, s, {0, s.size()});
}

SchreierState::SchreierState(const Ordinal& xi) : xi_(xi) {
  if (xi.is_zero()) throw domain_error("start requires xi >= 1");
  obligations_.push_back(xi);
}

SchreierState start(const Ordinal& xi) { return SchreierState(xi); }

FeedStatus SchreierState::feed(std::uint64_t n) {
  if (status_ == FeedStatus::JustCompleted)
    throw domain_error("feed past a completed member");
  if (status_ == FeedStatus::Dead) return status_;
  if (n == 0) throw domain_error("elements must be >= 1");
  if (has_fed_ && n <= last_) throw domain_error("elements must be strictly increasing");

  // Expand limit obligations until the active one is a successor; each
  // expansion may depend on n, the first element of the member it opens.
  while (obligations_.back().kind() == OrdinalKind::Limit) {
    Ordinal top = std::move(obligations_.back());
    obligations_.pop_back();
    const auto& terms = top.cnf_terms();
    if (terms.size() == 1 && terms[0].coeff == 1) {
      const Ordinal& e = terms[0].exp;
      if (e.kind() == OrdinalKind::Successor) {
        Ordinal block = Ordinal::omega_power(e.predecessor());
        for (std::uint64_t i = 0; i < n; ++i) obligations_.push_back(block);
      } else {
        obligations_.push_back(
            Ordinal::omega_power(fundamental_successor_seq(e, n)));
      }
    } else {
      // Blocks run smallest exponent first, so push largest first; the back
      // of the stack is consumed next.
      for (const auto& t : terms)
        for (std::uint64_t i = 0; i < t.coeff; ++i)
          obligations_.push_back(Ordinal::omega_power(t.exp));
    }
  }

  Ordinal pred = obligations_.back().predecessor();
  obligations_.pop_back();
  if (!pred.is_zero()) obligations_.push_back(pred);

  last_ = n;
  has_fed_ = true;
  status_ = obligations_.empty() ? FeedStatus::JustCompleted : FeedStatus::Continue;
  return status_;
}

Decomposition canonical_decomposition(const Ordinal& xi, const FiniteSet& seq) {
  require_valid(seq);
  if (xi.is_zero()) throw domain_error("decomposition requires xi >= 1");
  Decomposition out;
  FiniteSet current;
  SchreierState st = start(xi);
  for (std::uint64_t n : seq) {
    current.push_back(n);
    if (st.feed(n) == FeedStatus::JustCompleted) {
      out.blocks.push_back(std::move(current));
      current.clear();
      st = start(xi);
    }
  }
  out.remainder = std::move(current);
  return out;
}

ThinnessReport thinness_audit(const Ordinal& xi, std::uint64_t bound) {
  if (bound > 24) throw budget_error("thinness_audit bound too large");
  ThinnessReport report;
  std::vector<FiniteSet> members;
  for (std::uint64_t mask = 1; mask < (1ull << bound); ++mask) {
    FiniteSet s;
    for (std::uint64_t i = 0; i < bound; ++i)
      if (mask & (1ull << i)) s.push_back(i + 1);
    ++report.sets_checked;
    if (member(xi, s)) members.push_back(std::move(s));
  }
  // Sort members so proper prefixes precede their extensions.
  std::sort(members.begin(), members.end());
  for (const auto& a : members) {
    for (const auto& b : members) {
      if (a.size() < b.size() && std::equal(a.begin(), a.end(), b.begin()))
        report.violations.emplace_back(b, a);
    }
  }
  return report;
}

}  // namespace omw::schreier
