#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cantor/interval.hpp"

namespace cantor {

/// Decreasing positive sequence alpha(1), alpha(2), ... with total mass 1.
/// Two closed-form descriptors are supported:
///   - geometric: alpha(i) = (1 - r) r^{i-1}, 0 < r < 1;
///   - prefix: explicit alpha(1..P); the remaining mass 1 - sum(prefix) is
///     carried by an unspecified strictly decreasing tail below alpha(P).
class GapSequence {
public:
  struct Geometric {
    Rational ratio;
  };
  struct Prefix {
    std::vector<Rational> terms;
  };

  static GapSequence geometric(Rational ratio) {
    if (ratio <= 0 || ratio >= 1) throw InvalidInput("geometric ratio must lie in (0, 1)");
    return GapSequence(Geometric{std::move(ratio)});
  }

  static GapSequence prefix(std::vector<Rational> terms) {
    if (terms.empty()) throw InvalidInput("gap sequence prefix is empty");
    Rational sum = 0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (terms[i] <= 0) throw InvalidInput("gap sequence terms must be positive");
      if (i > 0 && terms[i] >= terms[i - 1])
        throw InvalidInput("gap sequence must be strictly decreasing (alpha(" + std::to_string(i + 1) +
                           ") >= alpha(" + std::to_string(i) + "))");
      sum += terms[i];
    }
    // An infinite positive tail must remain.
    if (sum >= 1) throw InvalidInput("gap sequence prefix mass " + to_string(sum) + " leaves no tail");
    return GapSequence(Prefix{std::move(terms)});
  }

  bool is_geometric() const { return std::holds_alternative<Geometric>(kind_); }
  const Rational& ratio() const { return std::get<Geometric>(kind_).ratio; }
  const std::vector<Rational>& prefix_terms() const { return std::get<Prefix>(kind_).terms; }

  /// Number of terms known exactly; 0 means unbounded.
  std::uint64_t known_terms() const { return is_geometric() ? 0 : prefix_terms().size(); }

  /// alpha(i), 1-based.
  Rational term(std::uint64_t i) const {
    if (i == 0) throw InvalidInput("gap sequence is indexed from 1");
    if (is_geometric()) {
      const Rational& r = ratio();
      return (1 - r) * pow(r, i - 1);
    }
    const auto& t = prefix_terms();
    if (i > t.size())
      throw ResolutionError("alpha(" + std::to_string(i) + ") is beyond the explicit prefix",
                            static_cast<int>(i));
    return t[i - 1];
  }

  /// Enclosure of the mass of all alpha-indices lying below leaf `leaf` of
  /// the depth-`depth` dyadic tree, i.e. the dyadics (2s+1)/2^j with j > depth
  /// inside (leaf/2^depth, (leaf+1)/2^depth).
  RatInterval leaf_tail(int depth, std::uint64_t leaf) const {
    return is_geometric() ? geometric_tail(depth, leaf) : prefix_tail(depth, leaf);
  }

  std::string describe() const {
    if (is_geometric()) return "geometric:" + to_string(ratio());
    std::string out = "prefix:";
    for (std::size_t i = 0; i < prefix_terms().size(); ++i)
      out += (i ? "," : "") + to_string(prefix_terms()[i]);
    return out;
  }

private:
  explicit GapSequence(std::variant<Geometric, Prefix> kind) : kind_(std::move(kind)) {}

  // Level j = depth + 1 + u contributes the 2^u consecutive indices starting
  // at 2^u (2^depth + leaf), whose mass telescopes to (x^{2^u} - y^{2^u}) / r
  // with x = r^{2^depth + leaf}, y = r x. The sum over u is lacunary, so the
  // first E levels are summed exactly and the rest is bounded by
  // sum_{u >= E} x^{2^u} / r <= x^{2^E} / (r (1 - x)). E grows until the
  // bound is below 2^-32 of the exact part, at most 12 levels.
  RatInterval geometric_tail(int depth, std::uint64_t leaf) const {
    const Rational& r = ratio();
    const Rational x = pow(r, (std::uint64_t{1} << depth) + leaf);
    const Rational y = x * r;
    Rational sum = 0;
    Rational xp = x;
    Rational yp = y;
    const Rational tolerance = pow2_inv(32);
    for (int u = 0; u < 12; ++u) {
      sum += xp - yp;
      xp *= xp;
      yp *= yp;
      if (u >= 1 && xp / (1 - x) <= sum * tolerance) break;
    }
    sum /= r;
    return {sum, sum + xp / (r * (1 - x))};
  }

  RatInterval prefix_tail(int depth, std::uint64_t leaf) const {
    const auto& t = prefix_terms();
    Rational known = 0;
    Rational listed = 0;
    for (const auto& a : t) listed += a;
    // Walk the levels below `depth` that the prefix still reaches.
    for (int j = depth + 1; j <= 62; ++j) {
      const std::uint64_t first_index = std::uint64_t{1} << (j - 1);
      if (first_index > t.size()) break;
      const std::uint64_t width = std::uint64_t{1} << (j - depth - 1);
      const std::uint64_t begin = first_index + leaf * width;
      for (std::uint64_t i = begin; i < begin + width && i <= t.size(); ++i) known += t[i - 1];
    }
    return {known, known + (1 - listed)};
  }

  std::variant<Geometric, Prefix> kind_;
};

}  // namespace cantor
