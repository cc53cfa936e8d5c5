#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cantor/rational.hpp"

namespace cantor {

/// Element of a formal Q-vector space, given by rational coordinates over a
/// fixed basis. Reals that are independent over Q are modelled as distinct
/// basis vectors.
using QPoint = std::vector<Rational>;

inline QPoint basis_vector(std::size_t dimension, std::size_t axis) {
  QPoint e(dimension, Rational(0));
  e.at(axis) = 1;
  return e;
}

inline std::size_t common_dimension(const std::vector<QPoint>& points) {
  if (points.empty()) throw InvalidInput("point list is empty");
  const std::size_t dim = points.front().size();
  for (const auto& p : points)
    if (p.size() != dim)
      throw InvalidInput("dimension mismatch: " + std::to_string(p.size()) + " vs " + std::to_string(dim));
  return dim;
}

/// Rank over Q by exact Gaussian elimination.
inline std::size_t rank(std::vector<QPoint> rows) {
  if (rows.empty()) return 0;
  const std::size_t dim = common_dimension(rows);
  std::size_t r = 0;
  for (std::size_t col = 0; col < dim && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      const Rational f = rows[i][col] / rows[r][col];
      for (std::size_t j = col; j < dim; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

inline bool is_independent(const std::vector<QPoint>& points) {
  common_dimension(points);
  return rank(points) == points.size();
}

/// (B + alpha) ∩ B, listed in the order of B.
inline std::vector<QPoint> translate_overlap(const std::vector<QPoint>& b, const QPoint& alpha) {
  const std::size_t dim = common_dimension(b);
  if (alpha.size() != dim) throw InvalidInput("translation has the wrong dimension");
  if (std::all_of(alpha.begin(), alpha.end(), [](const Rational& x) { return x == 0; }))
    throw PreconditionError("translation must be nonzero");
  std::vector<QPoint> out;
  for (const auto& y : b) {
    QPoint x(dim);
    for (std::size_t i = 0; i < dim; ++i) x[i] = y[i] - alpha[i];
    if (std::find(b.begin(), b.end(), x) != b.end() &&
        std::find(out.begin(), out.end(), y) == out.end())
      out.push_back(y);
  }
  return out;
}

}  // namespace cantor
