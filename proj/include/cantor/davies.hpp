#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cantor/budget.hpp"
#include "cantor/interval.hpp"

namespace cantor {

/// Finite truncation t_1..t_N of a sequence in G = (R, +), with a bound on
/// the omitted tail sum_{j > N} t_j.
class GoodSequence {
public:
  GoodSequence(std::vector<Rational> terms, Rational tail_bound)
      : terms_(std::move(terms)), tail_bound_(std::move(tail_bound)) {
    if (terms_.empty()) throw InvalidInput("sequence needs at least one term");
    if (tail_bound_ < 0) throw InvalidInput("tail bound must be nonnegative");
    std::set<Rational> seen;
    for (const auto& t : terms_) {
      if (t <= 0) throw InvalidInput("sequence terms must be positive");
      if (!seen.insert(t).second) throw InvalidInput("sequence terms must be distinct");
    }
  }

  int truncation() const { return static_cast<int>(terms_.size()); }
  /// t_k, 1-based.
  const Rational& term(int k) const {
    if (k < 1 || k > truncation())
      throw ResolutionError("t_" + std::to_string(k) + " is beyond the truncation", k);
    return terms_[static_cast<std::size_t>(k - 1)];
  }
  const std::vector<Rational>& terms() const { return terms_; }
  const Rational& tail_bound() const { return tail_bound_; }

  /// Upper bound on sum_{j >= k} t_j including the omitted tail.
  Rational tail_from(int k) const {
    Rational sum = tail_bound_;
    for (int j = std::max(k, 1); j <= truncation(); ++j) sum += term(j);
    return sum;
  }

  /// First k violating sum_{j > k} t_j < t_k / 2, if any.
  std::optional<int> half_domination_failure() const {
    for (int k = 1; k <= truncation(); ++k)
      if (!(tail_from(k + 1) < term(k) / 2)) return k;
    return std::nullopt;
  }

private:
  std::vector<Rational> terms_;
  Rational tail_bound_;
};

/// t_k = 4^{-k} with the exact tail 4^{-N} / 3.
inline GoodSequence default_good_sequence(int truncation) {
  if (truncation < 1) throw InvalidInput("truncation must be at least 1");
  std::vector<Rational> terms;
  Rational t = 1;
  for (int k = 1; k <= truncation; ++k) {
    t /= 4;
    terms.push_back(t);
  }
  return {std::move(terms), t / 3};
}

/// Bit k-1 of a word is sigma(k).
using Word = std::uint64_t;

/// p(sigma) = sum sigma(k) t_k over the first `length` letters.
inline Rational p_map(Word sigma, int length, const GoodSequence& t) {
  if (length < 0 || length > t.truncation() || length > 62)
    throw InvalidInput("word longer than the truncation");
  Rational sum = 0;
  for (int k = 1; k <= length; ++k)
    if (((sigma >> (k - 1)) & 1U) != 0) sum += t.term(k);
  return sum;
}

inline Rational p_map(const std::vector<int>& sigma, const GoodSequence& t) {
  if (sigma.size() > 62) throw InvalidInput("word too long");
  Word w = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] != 0 && sigma[i] != 1) throw InvalidInput("words are over {0, 1}");
    if (sigma[i] == 1) w |= Word{1} << i;
  }
  return p_map(w, static_cast<int>(sigma.size()), t);
}

/// All sums over subsets of {t_i : i in indices}, indexed by the subset mask
/// over `indices` (bit b selects indices[b]).
inline std::vector<Rational> subset_sums(const GoodSequence& t, const std::vector<int>& indices,
                                         std::uint64_t budget) {
  require_budget(static_cast<int>(indices.size()), budget, "subset enumeration");
  std::vector<Rational> sums(std::size_t{1} << indices.size());
  sums[0] = 0;
  for (std::size_t b = 0; b < indices.size(); ++b) {
    const std::size_t half = std::size_t{1} << b;
    const Rational& tb = t.term(indices[b]);
    for (std::size_t m = 0; m < half; ++m) sums[half + m] = sums[m] + tb;
  }
  return sums;
}

struct GoodReport {
  bool distinct = true;
  bool half_domination = true;
  std::optional<int> half_domination_failure;
  std::uint64_t enumerated = 0;
  std::optional<std::pair<Word, Word>> collision;

  bool good() const { return distinct && half_domination; }
  std::string criterion() const {
    return "exhaustive distinctness of p over {0,1}^N and half-domination sum_{j>k} t_j < t_k/2";
  }
};

/// Enumerates all 2^N sums p(sigma) and checks they are pairwise distinct,
/// and checks the half-domination inequality at every k <= N.
inline GoodReport check_good(const GoodSequence& t, int depth, std::uint64_t budget = enumeration_budget()) {
  if (depth < 0 || depth > t.truncation()) throw InvalidInput("depth exceeds the truncation");
  GoodReport r;
  std::vector<int> indices(static_cast<std::size_t>(depth));
  for (int k = 1; k <= depth; ++k) indices[static_cast<std::size_t>(k - 1)] = k;
  const auto sums = subset_sums(t, indices, budget);
  r.enumerated = sums.size();
  std::vector<Word> order(sums.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](Word a, Word b) { return sums[a] < sums[b]; });
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    if (sums[order[i]] == sums[order[i + 1]]) {
      r.distinct = false;
      r.collision = std::make_pair(std::min(order[i], order[i + 1]), std::max(order[i], order[i + 1]));
      break;
    }
  for (int k = 1; k <= depth; ++k) {
    Rational tail = t.tail_bound();
    for (int j = k + 1; j <= t.truncation(); ++j) tail += t.term(j);
    if (!(tail < t.term(k) / 2)) {
      r.half_domination = false;
      r.half_domination_failure = k;
      break;
    }
  }
  return r;
}

/// Decreasing family A_0 = N ⊇ A_1 ⊇ A_2 ⊇ ... of index sets. The default
/// rule is A_k = multiples of 2^k, whose differences A_k \ A_{k+1} (odd
/// multiples of 2^k) are infinite. Explicit families list A_1..A_K inside a
/// finite window.
class Filtration {
public:
  static Filtration powers_of_two() { return Filtration(); }

  static Filtration explicit_sets(std::vector<std::set<int>> sets, int window) {
    for (std::size_t k = 0; k + 1 < sets.size(); ++k)
      for (int i : sets[k + 1])
        if (!sets[k].contains(i))
          throw InvalidInput("filtration is not decreasing: " + std::to_string(i) + " is in A_" +
                             std::to_string(k + 2) + " but not in A_" + std::to_string(k + 1));
    for (const auto& s : sets)
      for (int i : s)
        if (i < 1 || i > window) throw InvalidInput("filtration index outside [1, window]");
    Filtration f;
    f.explicit_ = std::move(sets);
    f.window_ = window;
    return f;
  }

  bool is_default() const { return !explicit_.has_value(); }
  std::optional<int> window() const { return window_; }
  std::size_t explicit_levels() const { return explicit_ ? explicit_->size() : 0; }

  bool contains(int k, int i) const {
    if (k == 0) return true;
    if (!explicit_) return k < 62 && (static_cast<std::uint64_t>(i) % (std::uint64_t{1} << k)) == 0;
    if (static_cast<std::size_t>(k) > explicit_->size())
      throw ResolutionError("A_" + std::to_string(k) + " is not specified", k);
    return (*explicit_)[static_cast<std::size_t>(k - 1)].contains(i);
  }

  /// Levels k whose difference A_k \ A_{k+1} is empty inside [1, window];
  /// such a family cannot satisfy the infinite-difference requirement.
  std::vector<int> empty_differences() const {
    std::vector<int> out;
    if (!explicit_) return out;
    for (std::size_t k = 0; k + 1 < explicit_->size(); ++k)
      if ((*explicit_)[k].size() == (*explicit_)[k + 1].size()) out.push_back(static_cast<int>(k + 1));
    return out;
  }

private:
  Filtration() = default;
  std::optional<std::vector<std::set<int>>> explicit_;
  std::optional<int> window_;
};

/// Sorted distinct rationals with a free-form record of where they came from.
struct PointCloud {
  std::vector<Rational> points;
  std::map<std::string, std::string> provenance;
};

inline PointCloud make_cloud(std::vector<Rational> raw, std::map<std::string, std::string> provenance) {
  std::sort(raw.begin(), raw.end());
  if (std::adjacent_find(raw.begin(), raw.end()) != raw.end())
    throw InvalidInput("p is not injective on this support: repeated point");
  return {std::move(raw), std::move(provenance)};
}

/// Indices i in [first, last] with i not in A_k.
inline std::vector<int> support_outside(const Filtration& a, int k, int first, int last) {
  std::vector<int> out;
  for (int i = std::max(first, 1); i <= last; ++i)
    if (!a.contains(k, i)) out.push_back(i);
  return out;
}

/// Support of B_k truncated at N: {i : k <= i <= N, i not in A_k}.
inline std::vector<int> support_B(const Filtration& a, int k, int truncation) {
  return support_outside(a, k, k, truncation);
}

/// C_k = { p(sigma) : sigma in B_k } at truncation N. An empty support gives {0}.
inline PointCloud build_Bk_points(const GoodSequence& t, const Filtration& a, int k, int truncation,
                                  std::uint64_t budget = enumeration_budget()) {
  if (k < 1) throw InvalidInput("k must be at least 1");
  if (truncation < k) throw InvalidInput("truncation must be at least k");
  if (truncation > t.truncation()) throw InvalidInput("truncation exceeds the sequence length");
  const auto support = support_B(a, k, truncation);
  return make_cloud(subset_sums(t, support, budget),
                    {{"set", "C_k"},
                     {"k", std::to_string(k)},
                     {"truncation", std::to_string(truncation)},
                     {"support_size", std::to_string(support.size())}});
}

/// C0_{k,l} together with the translation sets U (first identity) and
/// D_{k,l} (second identity), each as raw subset-sum multisets.
struct RestrictedCloud {
  std::vector<int> c0_support;
  std::vector<int> u_support;
  std::vector<int> d_support;
  std::vector<Rational> c0;
  std::vector<Rational> u;
  std::vector<Rational> d;
};

inline RestrictedCloud restricted_cloud(const GoodSequence& t, const Filtration& a, int k, int l,
                                        int truncation, std::uint64_t budget = enumeration_budget()) {
  if (k < 1 || l < 1) throw InvalidInput("k and l must be at least 1");
  if (truncation < k + l) throw InvalidInput("truncation must be at least k + l");
  if (truncation > t.truncation()) throw InvalidInput("truncation exceeds the sequence length");
  RestrictedCloud r;
  // B0_{k,l}: B_k with sigma(k) = ... = sigma(k + l - 1) = 0.
  r.c0_support = support_outside(a, k, k + l, truncation);
  // u = sum_{i < l} alpha_i t_{k+i}, alpha_i = 0 when k + i is in A_k.
  r.u_support = support_outside(a, k, k, k + l - 1);
  // D_{k,l}: tau(s) = 0 unless s >= k + l and s in A_k \ A_{k+l}.
  for (int s = k + l; s <= truncation; ++s)
    if (a.contains(k, s) && !a.contains(k + l, s)) r.d_support.push_back(s);
  r.c0 = subset_sums(t, r.c0_support, budget);
  r.u = subset_sums(t, r.u_support, budget);
  r.d = subset_sums(t, r.d_support, budget);
  return r;
}

struct DecompositionReport {
  Verdict translates_of_ck = Verdict::True;   // C_k = disjoint union of C0 + u
  Verdict translates_of_ckl = Verdict::True;  // C_{k+l} = disjoint union of C0 + p(tau)
  bool supports_partition = true;             // supp B0 ⊔ supp D = supp B_{k+l}
  std::size_t c0_size = 0, u_size = 0, d_size = 0, ck_size = 0, ckl_size = 0;

  Verdict verdict() const { return translates_of_ck && translates_of_ckl; }
};

namespace detail {

// True iff the translates {base + s : s in shifts} are pairwise disjoint and
// together equal `whole`, as multisets.
inline bool disjoint_union_equals(const std::vector<Rational>& base, const std::vector<Rational>& shifts,
                                  std::vector<Rational> whole) {
  std::vector<Rational> sums;
  sums.reserve(base.size() * shifts.size());
  for (const auto& s : shifts)
    for (const auto& b : base) sums.push_back(b + s);
  std::sort(sums.begin(), sums.end());
  if (std::adjacent_find(sums.begin(), sums.end()) != sums.end()) return false;
  std::sort(whole.begin(), whole.end());
  return sums == whole;
}

}  // namespace detail

/// Checks both decompositions at truncation N as exact multiset identities.
inline DecompositionReport decomposition_check(const GoodSequence& t, const Filtration& a, int k, int l,
                                               int truncation, std::uint64_t budget = enumeration_budget()) {
  const auto rc = restricted_cloud(t, a, k, l, truncation, budget);
  const auto ck_support = support_B(a, k, truncation);
  const auto ckl_support = support_B(a, k + l, truncation);
  const auto ck = subset_sums(t, ck_support, budget);
  const auto ckl = subset_sums(t, ckl_support, budget);

  DecompositionReport r;
  r.c0_size = rc.c0.size();
  r.u_size = rc.u.size();
  r.d_size = rc.d.size();
  r.ck_size = ck.size();
  r.ckl_size = ckl.size();
  std::vector<int> joined = rc.c0_support;
  joined.insert(joined.end(), rc.d_support.begin(), rc.d_support.end());
  std::sort(joined.begin(), joined.end());
  r.supports_partition = std::adjacent_find(joined.begin(), joined.end()) == joined.end() &&
                         joined == ckl_support;
  r.translates_of_ck = detail::disjoint_union_equals(rc.c0, rc.u, ck) ? Verdict::True : Verdict::False;
  r.translates_of_ckl = detail::disjoint_union_equals(rc.c0, rc.d, ckl) ? Verdict::True : Verdict::False;
  return r;
}

/// Parameters of C = {0} ∪ ⋃_k (C_{n_k} + l_k): block k sits in the ball
/// (x_k - rho_k, x_k + rho_k).
struct DaviesConfig {
  GoodSequence sequence;
  Filtration filtration;
  int truncation;
  std::vector<Rational> anchors;  // x_k
  std::vector<Rational> radii;    // rho_k
  std::vector<int> indices;       // n_k
  std::vector<Rational> shifts;   // l_k

  std::size_t blocks() const { return anchors.size(); }
};

/// Upper bound on diam C_m: sum_{i >= m} t_i including the omitted tail.
inline Rational diameter_bound(const GoodSequence& t, int m) { return t.tail_from(m); }

/// x_k = 2^{-k}, rho_k = 2^{-k-2}, l_k = x_k, and n_k the least m > n_{k-1}
/// whose diameter bound is below rho_k.
inline DaviesConfig default_davies_config(int truncation, int blocks) {
  if (blocks < 1) throw InvalidInput("at least one block is required");
  DaviesConfig c{default_good_sequence(truncation), Filtration::powers_of_two(), truncation, {}, {}, {}, {}};
  int previous = 0;
  Rational x = 1;
  for (int k = 1; k <= blocks; ++k) {
    x /= 2;
    const Rational rho = x / 4;
    int m = previous + 1;
    while (m <= truncation && !(diameter_bound(c.sequence, m) < rho)) ++m;
    if (m > truncation)
      throw CapacityError("truncation " + std::to_string(truncation) + " cannot place block " +
                          std::to_string(k) + "; raise --truncation");
    c.anchors.push_back(x);
    c.radii.push_back(rho);
    c.indices.push_back(m);
    c.shifts.push_back(x);
    previous = m;
  }
  return c;
}

struct DaviesBlock {
  int k;
  int index;
  Rational shift;
  Rational ball_lo;
  Rational ball_hi;
  std::size_t size;
};

struct AssembledSet {
  PointCloud cloud;
  std::vector<DaviesBlock> blocks;
};

/// Checks the configuration's placement invariants; throws on violation.
inline void validate_config(const DaviesConfig& c) {
  const std::size_t n = c.blocks();
  if (n == 0) throw InvalidInput("configuration has no blocks");
  if (c.radii.size() != n || c.indices.size() != n || c.shifts.size() != n)
    throw InvalidInput("configuration vectors differ in length");
  if (c.truncation > c.sequence.truncation()) throw InvalidInput("truncation exceeds the sequence length");
  for (std::size_t i = 0; i < n; ++i) {
    if (c.radii[i] <= 0) throw InvalidInput("ball radii must be positive");
    if (c.anchors[i] - c.radii[i] <= 0) throw InvalidInput("balls must stay right of 0");
    if (i > 0 && !(c.anchors[i] < c.anchors[i - 1])) throw InvalidInput("anchors must decrease to 0");
    if (i > 0 && c.indices[i] <= c.indices[i - 1]) throw InvalidInput("indices n_k must increase");
    if (c.indices[i] < 1) throw InvalidInput("indices n_k must be positive");
    if (c.indices[i] > c.truncation)
      throw CapacityError("n_" + std::to_string(i + 1) + " = " + std::to_string(c.indices[i]) +
                          " exceeds truncation " + std::to_string(c.truncation));
    for (std::size_t j = 0; j < i; ++j) {
      const bool apart = c.anchors[i] + c.radii[i] < c.anchors[j] - c.radii[j] ||
                         c.anchors[j] + c.radii[j] < c.anchors[i] - c.radii[i];
      if (!apart)
        throw InvalidInput("balls " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " intersect");
    }
  }
}

/// {0} ∪ ⋃_k (C_{n_k} + l_k) at the configured truncation, with every block
/// certified inside its ball.
inline AssembledSet assemble_C(const DaviesConfig& c, std::uint64_t budget = enumeration_budget()) {
  validate_config(c);
  AssembledSet out;
  std::vector<Rational> all{Rational(0)};
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < c.blocks(); ++i) {
    const int k = static_cast<int>(i) + 1;
    const auto block = build_Bk_points(c.sequence, c.filtration, c.indices[i], c.truncation, budget);
    total += block.points.size();
    if (total > budget) throw BudgetError("assembled set exceeds the enumeration budget");
    const Rational lo = c.anchors[i] - c.radii[i];
    const Rational hi = c.anchors[i] + c.radii[i];
    const Rational first = block.points.front() + c.shifts[i];
    const Rational last = block.points.back() + c.shifts[i];
    if (!(lo < first && last < hi))
      throw InvalidInput("block " + std::to_string(k) + " does not fit inside its ball");
    for (const auto& p : block.points) all.push_back(p + c.shifts[i]);
    out.blocks.push_back({k, c.indices[i], c.shifts[i], lo, hi, block.points.size()});
  }
  out.cloud = make_cloud(std::move(all), {{"set", "C"},
                                          {"blocks", std::to_string(c.blocks())},
                                          {"truncation", std::to_string(c.truncation)}});
  return out;
}

}  // namespace cantor
