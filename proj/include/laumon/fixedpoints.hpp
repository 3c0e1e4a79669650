#pragma once

// Torus fixed points of the based Laumon spaces. A fixed point is a
// triangular array d_{ij} (1 <= j <= i <= n-1) with column monotonicity
// d_{kj} >= d_{ij} for j <= k <= i and row sums d_i.

#include <compare>
#include <cstdint>
#include <vector>

#include "laumon/json_io.hpp"

namespace laumon {

/// Multidegree (d_1, ..., d_{n-1}).
using Degree = std::vector<int>;

/// d_i with the conventions d_0 = d_n = 0.
int degree_at(const Degree& d, int i);
Degree degree_shift(const Degree& d, int i, int delta);
int degree_total(const Degree& d);
void check_degree(int n, const Degree& d);

class FixedPoint {
 public:
  FixedPoint() = default;
  /// rows[i-1] holds d_{i1}, ..., d_{ii}. Throws UsageError when invalid.
  FixedPoint(int n, std::vector<std::vector<int>> rows);
  static FixedPoint zero(int n);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  /// d_{ij}; zero outside 1 <= j <= i <= n-1 (so d_{0,j} = d_{n,k} = 0).
  int at(int i, int j) const;
  /// Row sum d_i, zero for i = 0 and i = n.
  int row_sum(int i) const;
  Degree degree() const;

  friend auto operator<=>(const FixedPoint&, const FixedPoint&) = default;
  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;

 private:
  friend FixedPoint with_entry(const FixedPoint& p, int i, int j, int delta);
  int n_ = 0;
  std::vector<std::vector<int>> rows_;
};

/// Independent check of nonnegativity and column monotonicity.
bool is_valid_fixed_point(int n, const std::vector<std::vector<int>>& rows);

/// All fixed points of degree d, strictly increasing in lexicographic order.
std::vector<FixedPoint> enumerate(int n, const Degree& d);

/// Number of multisets of positive roots of sl_n summing to sum d_i alpha_i.
std::uint64_t kostant_count(int n, const Degree& d);

struct Adjacent {
  FixedPoint point;
  int column;
};
/// Points with d'_{ij} = d_{ij} + 1 for some column j, ordered by j.
std::vector<Adjacent> raise(const FixedPoint& p, int i);
/// Points with d'_{ij} = d_{ij} - 1 for some column j, ordered by j.
std::vector<Adjacent> lower(const FixedPoint& p, int i);

/// Degrees with every entry in [0, box], in lexicographic order.
std::vector<Degree> box_degrees(int n, int box);

/// Degrees with d_1 + ... + d_{n-1} <= total, ordered by total then lexicographically.
std::vector<Degree> degrees_up_to(int n, int total);

Json to_json(const FixedPoint& p);
FixedPoint fixed_point_from_json(const Json& j);
Json to_json(const Degree& d);

}  // namespace laumon
