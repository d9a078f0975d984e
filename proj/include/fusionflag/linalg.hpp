#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fusionflag/rational.hpp"

namespace fusionflag {

/// Sparse rational vector: (index, value) pairs sorted by index, values nonzero.
using SparseVec = std::vector<std::pair<uint32_t, Rat>>;

inline SparseVec sparse_unit(uint32_t idx) { return {{idx, Rat(1)}}; }

inline void sparse_scale(SparseVec& v, const Rat& c) {
  if (c == 0) {
    v.clear();
    return;
  }
  for (auto& [i, x] : v) x *= c;
}

/// v += c * w (merge of sorted lists; zero results dropped).
inline void sparse_axpy(SparseVec& v, const Rat& c, const SparseVec& w) {
  if (c == 0 || w.empty()) return;
  SparseVec out;
  out.reserve(v.size() + w.size());
  size_t a = 0, b = 0;
  while (a < v.size() || b < w.size()) {
    if (b == w.size() || (a < v.size() && v[a].first < w[b].first)) {
      out.push_back(std::move(v[a++]));
    } else if (a == v.size() || w[b].first < v[a].first) {
      out.emplace_back(w[b].first, c * w[b].second);
      ++b;
    } else {
      Rat s = v[a].second + c * w[b].second;
      if (s != 0) out.emplace_back(v[a].first, std::move(s));
      ++a;
      ++b;
    }
  }
  v = std::move(out);
}

inline SparseVec sparse_from_map(std::map<uint32_t, Rat>&& m) {
  SparseVec v;
  v.reserve(m.size());
  for (auto& [i, x] : m)
    if (x != 0) v.emplace_back(i, std::move(x));
  return v;
}

/// Row echelon basis over exact rationals with degree labels.  Rows keep their
/// leading (smallest-index) entry as pivot, normalized to 1; pivots are
/// pairwise distinct.  Rows are appended with non-decreasing degree so that any
/// prefix {rows with degree <= d} is itself an echelon basis of the span V^d.
class EchelonBasis {
 public:
  struct Row {
    uint32_t pivot;
    int degree;
    SparseVec v;
  };

  size_t size() const { return rows_.size(); }
  const Row& row(size_t i) const { return rows_[i]; }
  const std::vector<Row>& rows() const { return rows_; }

  /// Forward-reduces v against rows with degree <= max_degree (all rows if
  /// max_degree < 0 is not allowed; pass a large value for "no limit").
  SparseVec reduce(SparseVec v, int max_degree) const {
    size_t pos = 0;
    while (pos < v.size()) {
      auto it = by_pivot_.find(v[pos].first);
      if (it != by_pivot_.end() && rows_[it->second].degree <= max_degree) {
        Rat c = -v[pos].second;
        sparse_axpy(v, c, rows_[it->second].v);  // cancels entry at pos
      } else {
        ++pos;
      }
    }
    return v;
  }

  SparseVec reduce_all(SparseVec v) const { return reduce(std::move(v), kNoLimit); }

  bool member(const SparseVec& v, int max_degree) const { return reduce(v, max_degree).empty(); }

  /// Reduces v fully and records the coefficients of the rows used:
  /// v = sum coords[i] * row_i + residual.
  SparseVec reduce_with_coords(SparseVec v, std::vector<std::pair<size_t, Rat>>& coords) const {
    coords.clear();
    size_t pos = 0;
    while (pos < v.size()) {
      auto it = by_pivot_.find(v[pos].first);
      if (it != by_pivot_.end()) {
        coords.emplace_back(it->second, v[pos].second);
        Rat c = -v[pos].second;
        sparse_axpy(v, c, rows_[it->second].v);
      } else {
        ++pos;
      }
    }
    return v;
  }

  /// Reduces and inserts if independent; returns the new row index or -1.
  /// Degrees must be non-decreasing across successful inserts.
  long insert(SparseVec v, int degree) {
    v = reduce_all(std::move(v));
    if (v.empty()) return -1;
    if (!rows_.empty() && degree < rows_.back().degree) throw std::logic_error("echelon degrees must be non-decreasing");
    Rat lead = v.front().second;
    if (lead != 1) {
      Rat inv = 1 / lead;
      sparse_scale(v, inv);
    }
    uint32_t piv = v.front().first;
    rows_.push_back({piv, degree, std::move(v)});
    by_pivot_[piv] = rows_.size() - 1;
    return static_cast<long>(rows_.size() - 1);
  }

  static constexpr int kNoLimit = 1 << 30;

 private:
  std::vector<Row> rows_;
  std::unordered_map<uint32_t, size_t> by_pivot_;
};

/// Column-sparse rational matrix; the natural layout for applying generator
/// actions to vectors (image of basis vector b = column b).
struct SparseMatrix {
  int rows = 0, cols = 0;
  std::vector<std::vector<std::pair<int, Rat>>> col;  // col[c] = {(row, value)}

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), col(static_cast<size_t>(c)) {}

  void add(int r, int c, Rat v) {
    if (v != 0) col[static_cast<size_t>(c)].emplace_back(r, std::move(v));
  }

  bool is_zero() const {
    for (const auto& c : col)
      if (!c.empty()) return false;
    return true;
  }
};

}  // namespace fusionflag
