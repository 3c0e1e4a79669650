#include "laumon/fixedpoints.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "laumon/errors.hpp"

namespace laumon {

int degree_at(const Degree& d, int i) {
  if (i < 1 || i > static_cast<int>(d.size())) return 0;
  return d[static_cast<std::size_t>(i - 1)];
}

Degree degree_shift(const Degree& d, int i, int delta) {
  Degree r = d;
  r.at(static_cast<std::size_t>(i - 1)) += delta;
  return r;
}

int degree_total(const Degree& d) {
  int s = 0;
  for (int x : d) s += x;
  return s;
}

void check_degree(int n, const Degree& d) {
  if (n < 2) throw UsageError("rank must be at least 2");
  if (static_cast<int>(d.size()) != n - 1) throw UsageError("degree must have n-1 entries");
  for (int x : d) {
    if (x < 0) throw UsageError("degree entries must be nonnegative");
  }
}

bool is_valid_fixed_point(int n, const std::vector<std::vector<int>>& rows) {
  if (n < 2 || static_cast<int>(rows.size()) != n - 1) return false;
  for (int i = 1; i <= n - 1; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != i) return false;
    for (int j = 1; j <= i; ++j) {
      int x = row[static_cast<std::size_t>(j - 1)];
      if (x < 0) return false;
      for (int k = j; k < i; ++k) {
        if (rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)] < x) return false;
      }
    }
  }
  return true;
}

FixedPoint::FixedPoint(int n, std::vector<std::vector<int>> rows) : n_(n), rows_(std::move(rows)) {
  if (!is_valid_fixed_point(n_, rows_)) throw UsageError("invalid fixed point");
}

FixedPoint FixedPoint::zero(int n) {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= n - 1; ++i) rows.emplace_back(static_cast<std::size_t>(i), 0);
  return FixedPoint(n, std::move(rows));
}

int FixedPoint::at(int i, int j) const {
  if (i < 1 || i > n_ - 1 || j < 1 || j > i) return 0;
  return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

int FixedPoint::row_sum(int i) const {
  if (i < 1 || i > n_ - 1) return 0;
  int s = 0;
  for (int x : rows_[static_cast<std::size_t>(i - 1)]) s += x;
  return s;
}

Degree FixedPoint::degree() const {
  Degree d;
  for (int i = 1; i <= n_ - 1; ++i) d.push_back(row_sum(i));
  return d;
}

std::vector<FixedPoint> enumerate(int n, const Degree& d) {
  check_degree(n, d);
  // Columns are filled one at a time, top to bottom, each entry bounded by
  // the one above it; row sums are checked once the array is complete.
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= n - 1; ++i) rows.emplace_back(static_cast<std::size_t>(i), 0);
  std::vector<int> used(static_cast<std::size_t>(n - 1), 0);
  std::vector<FixedPoint> out;

  std::function<void(int, int)> fill = [&](int j, int i) {
    if (j == n) {
      for (int r = 1; r <= n - 1; ++r) {
        if (used[static_cast<std::size_t>(r - 1)] != d[static_cast<std::size_t>(r - 1)]) return;
      }
      out.emplace_back(n, rows);
      return;
    }
    if (i == n) {
      fill(j + 1, j + 1);
      return;
    }
    const auto ri = static_cast<std::size_t>(i - 1);
    const auto cj = static_cast<std::size_t>(j - 1);
    int cap = d[ri] - used[ri];
    if (i > j) cap = std::min(cap, rows[ri - 1][cj]);
    for (int x = 0; x <= cap; ++x) {
      rows[ri][cj] = x;
      used[ri] += x;
      fill(j, i + 1);
      used[ri] -= x;
    }
    rows[ri][cj] = 0;
  };
  fill(1, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t kostant_count(int n, const Degree& d) {
  check_degree(n, d);
  // Roots alpha_j + ... + alpha_i for 1 <= j <= i <= n-1, tried in a fixed
  // order; each root is used some number of times before moving on.
  std::vector<std::pair<int, int>> roots;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= i; ++j) roots.emplace_back(j, i);
  }
  std::map<std::pair<std::size_t, Degree>, std::uint64_t> memo;
  std::function<std::uint64_t(std::size_t, Degree&)> count = [&](std::size_t r, Degree& rest) {
    if (r == roots.size()) {
      for (int x : rest) {
        if (x != 0) return std::uint64_t{0};
      }
      return std::uint64_t{1};
    }
    auto key = std::make_pair(r, rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    auto [lo, hi] = roots[r];
    std::uint64_t total = 0;
    int used = 0;
    while (true) {
      total += count(r + 1, rest);
      bool ok = true;
      for (int k = lo; k <= hi; ++k) ok = ok && rest[static_cast<std::size_t>(k - 1)] > 0;
      if (!ok) break;
      for (int k = lo; k <= hi; ++k) --rest[static_cast<std::size_t>(k - 1)];
      ++used;
    }
    for (int k = lo; k <= hi; ++k) rest[static_cast<std::size_t>(k - 1)] += used;
    memo.emplace(std::move(key), total);
    return total;
  };
  Degree rest = d;
  return count(0, rest);
}

FixedPoint with_entry(const FixedPoint& p, int i, int j, int delta) {
  FixedPoint q;
  q.n_ = p.n_;
  q.rows_ = p.rows_;
  q.rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] += delta;
  return q;
}

namespace {

std::vector<Adjacent> adjacent(const FixedPoint& p, int i, int delta) {
  if (i < 1 || i > p.n() - 1) throw UsageError("simple root index out of range");
  std::vector<Adjacent> out;
  for (int j = 1; j <= i; ++j) {
    FixedPoint q = with_entry(p, i, j, delta);
    if (is_valid_fixed_point(q.n(), q.rows())) out.push_back({std::move(q), j});
  }
  return out;
}

}  // namespace

std::vector<Adjacent> raise(const FixedPoint& p, int i) { return adjacent(p, i, +1); }
std::vector<Adjacent> lower(const FixedPoint& p, int i) { return adjacent(p, i, -1); }

std::vector<Degree> box_degrees(int n, int box) {
  if (n < 2) throw UsageError("rank must be at least 2");
  if (box < 0) throw UsageError("box must be nonnegative");
  std::vector<Degree> out;
  Degree d(static_cast<std::size_t>(n - 1), 0);
  while (true) {
    out.push_back(d);
    int k = n - 2;
    while (k >= 0 && d[static_cast<std::size_t>(k)] == box) d[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
    ++d[static_cast<std::size_t>(k)];
  }
  return out;
}

std::vector<Degree> degrees_up_to(int n, int total) {
  std::vector<Degree> out;
  for (int s = 0; s <= total; ++s) {
    for (const Degree& d : box_degrees(n, s)) {
      if (degree_total(d) == s) out.push_back(d);
    }
  }
  return out;
}

Json to_json(const FixedPoint& p) {
  Json j;
  j["n"] = p.n();
  j["rows"] = p.rows();
  return j;
}

FixedPoint fixed_point_from_json(const Json& j) {
  try {
    return FixedPoint(j.at("n").get<int>(), j.at("rows").get<std::vector<std::vector<int>>>());
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed fixed point JSON: ") + e.what());
  }
}

Json to_json(const Degree& d) { return Json(d); }

}  // namespace laumon
