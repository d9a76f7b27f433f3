#include "omw/words.hpp"

#include <algorithm>

#include "omw/errors.hpp"

namespace omw {

DominationSeq DominationSeq::constant(std::uint64_t c) {
  if (c < 1) throw domain_error("domination values must be >= 1");
  DominationSeq k;
  k.kind_ = Kind::Constant;
  k.b_ = c;
  return k;
}

DominationSeq DominationSeq::affine(std::uint64_t a, std::uint64_t b) {
  if (a + b < 1) throw domain_error("domination values must be >= 1");
  DominationSeq k;
  k.kind_ = Kind::Affine;
  k.a_ = a;
  k.b_ = b;
  return k;
}

DominationSeq DominationSeq::table(std::vector<std::uint64_t> values) {
  if (values.empty()) throw domain_error("domination table must be nonempty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 1) throw domain_error("domination values must be >= 1");
    if (i > 0 && values[i] < values[i - 1])
      throw domain_error("domination sequence must be non-decreasing");
  }
  DominationSeq k;
  k.kind_ = Kind::Table;
  k.values_ = std::move(values);
  return k;
}

std::uint64_t DominationSeq::at(std::uint64_t n) const {
  if (n < 1) throw domain_error("positions start at 1");
  switch (kind_) {
    case Kind::Constant:
      return b_;
    case Kind::Affine:
      return a_ * n + b_;
    case Kind::Table:
      return n <= values_.size() ? values_[n - 1] : values_.back();
  }
  throw domain_error("bad domination kind");
}

LocatedWord LocatedWord::from_entries(std::vector<Entry> entries) {
  if (entries.empty()) throw domain_error("located words are nonempty");
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].first < 1) throw domain_error("positions start at 1");
    if (i > 0 && entries[i].first == entries[i - 1].first)
      throw domain_error("duplicate position in word");
  }
  LocatedWord w;
  w.entries_ = std::move(entries);
  return w;
}

bool LocatedWord::is_variable() const {
  for (const auto& [n, l] : entries_)
    if (l == 0) return true;
  return false;
}

bool LocatedWord::valid_under(const DominationSeq& k) const {
  for (const auto& [n, l] : entries_)
    if (l > k.at(n)) return false;
  return true;
}

int LocatedWord::compare(const LocatedWord& other) const {
  if (entries_ < other.entries_) return -1;
  if (other.entries_ < entries_) return 1;
  return 0;
}

OmegaWord OmegaWord::from_letters(std::vector<Letter> letters) {
  if (letters.empty()) throw domain_error("words are nonempty");
  OmegaWord w;
  w.letters_ = std::move(letters);
  return w;
}

bool OmegaWord::is_variable() const {
  return std::find(letters_.begin(), letters_.end(), Letter{0}) !=
         letters_.end();
}

namespace words {

LocatedWord t_p(const LocatedWord& w, std::uint64_t p,
                const DominationSeq& k) {
  if (p == 0) return w;
  auto entries = w.entries();
  for (auto& [n, l] : entries)
    if (l == 0) l = std::min(p, k.at(n));
  return LocatedWord::from_entries(std::move(entries));
}

bool less(const LocatedWord& w, const LocatedWord& u) {
  return w.max_pos() < u.min_pos();
}

LocatedWord concat(const LocatedWord& w, const LocatedWord& u) {
  if (!less(w, u)) throw domain_error("concat requires ordered words");
  auto entries = w.entries();
  entries.insert(entries.end(), u.entries().begin(), u.entries().end());
  return LocatedWord::from_entries(std::move(entries));
}

LocatedWord plus(const LocatedWord& w, const LocatedWord& u) {
  std::vector<LocatedWord::Entry> out;
  const auto& a = w.entries();
  const auto& b = u.entries();
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      Letter l = (a[i].second == 0 || b[j].second == 0)
                     ? Letter{0}
                     : std::max(a[i].second, b[j].second);
      out.emplace_back(a[i].first, l);
      ++i;
      ++j;
    }
  }
  return LocatedWord::from_entries(std::move(out));
}

OmegaWord to_unlocated(const LocatedWord& w) {
  std::vector<Letter> letters(w.max_pos(), Letter{1});
  for (const auto& [n, l] : w.entries()) letters[n - 1] = l;
  return OmegaWord::from_letters(std::move(letters));
}

bool wless(const OmegaWord& w, const OmegaWord& u) {
  if (w.length() >= u.length()) return false;
  for (std::size_t i = 0; i < w.length(); ++i)
    if (u.letters()[i] != Letter{1}) return false;
  return true;
}

OmegaWord wconcat(const OmegaWord& w, const OmegaWord& u) {
  if (!wless(w, u))
    throw domain_error("wconcat requires w below u");
  auto letters = w.letters();
  letters.insert(letters.end(), u.letters().begin() + w.length(),
                 u.letters().end());
  return OmegaWord::from_letters(std::move(letters));
}

OmegaWord t_p(const OmegaWord& w, std::uint64_t p, const DominationSeq& k) {
  if (p == 0) return w;
  auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size(); ++i)
    if (letters[i] == 0) letters[i] = std::min(p, k.at(i + 1));
  return OmegaWord::from_letters(std::move(letters));
}

std::vector<LocatedWord> enumerate_located(std::uint64_t n_bound,
                                           const DominationSeq& k,
                                           bool variable_only,
                                           std::uint64_t cap) {
  // Odometer over one digit per position: absent < variable < 1 < ... < k_n.
  if (n_bound < 1 || n_bound > 62)
    throw domain_error("enumeration bound out of range");
  std::vector<std::uint64_t> digit(n_bound, 0);  // 0 absent, 1 variable, 1+l
  std::vector<LocatedWord> out;
  for (;;) {
    std::size_t i = 0;
    while (i < n_bound) {
      if (digit[i] < 1 + k.at(i + 1)) {
        ++digit[i];
        break;
      }
      digit[i] = 0;
      ++i;
    }
    if (i == n_bound) break;
    std::vector<LocatedWord::Entry> entries;
    bool has_var = false;
    for (std::size_t n = 0; n < n_bound; ++n) {
      if (digit[n] == 0) continue;
      Letter l = digit[n] - 1;
      if (l == 0) has_var = true;
      entries.emplace_back(n + 1, l);
    }
    if (entries.empty()) continue;
    if (variable_only && !has_var) continue;
    out.push_back(LocatedWord::from_entries(std::move(entries)));
    if (out.size() > cap) throw budget_error("enumeration exceeded cap");
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace words
}  // namespace omw
