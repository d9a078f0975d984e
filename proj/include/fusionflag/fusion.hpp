#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fusionflag/modcon.hpp"

namespace fusionflag {

/// Pairwise-distinct evaluation points.
struct EvalParams {
  std::vector<Rat> z;

  EvalParams() = default;
  explicit EvalParams(std::vector<Rat> zz) : z(std::move(zz)) { validate(); }

  void validate() const {
    for (size_t i = 0; i < z.size(); ++i)
      for (size_t j = i + 1; j < z.size(); ++j)
        if (z[i] == z[j]) throw std::invalid_argument("evaluation points must be pairwise distinct");
  }

  size_t size() const { return z.size(); }

  static EvalParams standard(size_t k) {
    std::vector<Rat> z(k);
    for (size_t i = 0; i < k; ++i) z[i] = static_cast<long>(i);
    return EvalParams(std::move(z));
  }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < z.size(); ++i) s += (i ? "," : "") + z[i].get_str();
    return s + ")";
  }
};

/// Multiplicity table of (weight, t-degree) pairs.
struct QCharacter {
  std::map<std::pair<Weight, int>, long> table;

  long total_mass() const {
    long s = 0;
    for (const auto& [k, v] : table) s += v;
    return s;
  }

  std::vector<long> graded_dims() const {
    std::vector<long> dims;
    for (const auto& [k, v] : table) {
      if (static_cast<size_t>(k.second) >= dims.size()) dims.resize(static_cast<size_t>(k.second) + 1, 0);
      dims[static_cast<size_t>(k.second)] += v;
    }
    return dims;
  }

  QCharacter& add(const Weight& w, int degree, long mult) {
    table[{w, degree}] += mult;
    return *this;
  }

  /// Same table shifted up in degree.
  QCharacter shifted(int shift) const {
    QCharacter out;
    for (const auto& [k, v] : table) out.table[{k.first, k.second + shift}] = v;
    return out;
  }

  QCharacter& operator+=(const QCharacter& o) {
    for (const auto& [k, v] : o.table) table[k] += v;
    return *this;
  }

  friend bool operator==(const QCharacter& a, const QCharacter& b) { return a.table == b.table; }
};

/// Degree filtration of a tensor product of evaluation modules under the
/// current (super)algebra action, together with the graded dimensions of the
/// associated graded space.
struct FusionFiltration {
  std::shared_ptr<const std::vector<ModuleRep>> factors;
  std::unique_ptr<TensorSpace> space;
  EvalParams z;
  EchelonBasis basis;  // rows labeled by the degree at which they entered
  std::vector<long> graded_dims;
  size_t total_dim = 0;
  int top_degree = 0;
  SparseVec cyclic;

  size_t arity() const { return factors->size(); }

  /// z_j^r coefficients for the operator x (x) t^r.
  std::vector<Rat> slot_coefficients(long r) const {
    std::vector<Rat> c(z.z.size());
    for (size_t j = 0; j < z.z.size(); ++j) c[j] = pow_rat(z.z[j], static_cast<unsigned long>(r));
    return c;
  }

  /// Representative of v modulo V^{max_degree} (pass degree-1 of a graded
  /// element to reduce into the associated graded piece).
  SparseVec reduce_mod(SparseVec v, int max_degree) const {
    if (max_degree < 0) return v;
    return basis.reduce(std::move(v), max_degree);
  }

  bool vanishes_in_gr(const SparseVec& v, int degree) const {
    if (degree - 1 >= top_degree) return true;  // V^{degree-1} is everything
    return basis.member(v, degree - 1);
  }
};

/// Action of x (x) t^r on a tensor state (the Koszul-signed evaluation action,
/// extended linearly).
inline SparseVec current_action(const TensorSpace& ts, const EvalParams& z, int gen, long r, const SparseVec& state) {
  if (r < 0) throw std::invalid_argument("current_action: t-power must be >= 0");
  z.validate();
  std::vector<Rat> coef(z.z.size());
  for (size_t j = 0; j < z.z.size(); ++j) coef[j] = pow_rat(z.z[j], static_cast<unsigned long>(r));
  return ts.apply(gen, coef, state);
}

/// Spans V^0 <= V^1 <= ... by breadth-first application of generators
/// x (x) t^r, r < k, to the cyclic top tensor, tracking total t-degree.
/// Operators with r >= k are dependent on lower powers (the action factors
/// through C[t] modulo prod (t - z_j)), so r < k spans everything; the
/// stopping criterion is total dimension = product of factor dimensions.
inline FusionFiltration fusion_filtration(std::vector<ModuleRep> factor_list, EvalParams z, int degree_bound_multiplier = 1) {
  if (factor_list.empty()) throw std::invalid_argument("fusion_filtration: need at least one factor");
  if (z.size() != factor_list.size()) throw std::invalid_argument("fusion_filtration: one evaluation point per factor");
  z.validate();

  FusionFiltration F;
  F.factors = std::make_shared<const std::vector<ModuleRep>>(std::move(factor_list));
  std::vector<const ModuleRep*> ptrs;
  for (const ModuleRep& m : *F.factors) ptrs.push_back(&m);
  F.space = std::make_unique<TensorSpace>(ptrs);
  F.z = z;

  const int k = static_cast<int>(F.arity());
  size_t target = 1;
  for (const ModuleRep& m : *F.factors) target *= static_cast<size_t>(m.dim);

  Rat level_sum = 0;
  for (const ModuleRep& m : *F.factors) level_sum += m.highest_weight().coord_sum();
  long degree_bound = (k * to_integer(level_sum).get_si() + 1) * degree_bound_multiplier;

  std::vector<std::vector<Rat>> pow_table;  // pow_table[r][j] = z_j^r
  for (int r = 0; r < k; ++r) pow_table.push_back(F.slot_coefficients(r));

  const int gens = F.space->scheme().count();
  F.cyclic = sparse_unit(F.space->highest_index());

  auto row_degree_range = [&](int deg, size_t& lo, size_t& hi) {
    // rows are degree-sorted; locate [lo, hi) with label == deg
    lo = hi = F.basis.size();
    for (size_t i = 0; i < F.basis.size(); ++i) {
      if (F.basis.row(i).degree == deg && lo == F.basis.size()) lo = i;
      if (F.basis.row(i).degree > deg) {
        hi = i;
        break;
      }
    }
    if (lo == F.basis.size()) hi = lo;
  };

  for (int d = 0; d <= degree_bound; ++d) {
    std::vector<SparseVec> seeds;
    if (d == 0) {
      seeds.push_back(F.cyclic);
    } else {
      for (int r = 1; r <= std::min(d, k - 1); ++r) {
        size_t lo, hi;
        row_degree_range(d - r, lo, hi);
        for (size_t i = lo; i < hi; ++i)
          for (int g = 0; g < gens; ++g) seeds.push_back(F.space->apply(g, pow_table[static_cast<size_t>(r)], F.basis.row(i).v));
      }
    }
    std::vector<size_t> queue;
    for (SparseVec& s : seeds) {
      long idx = F.basis.insert(std::move(s), d);
      if (idx >= 0) queue.push_back(static_cast<size_t>(idx));
      if (F.basis.size() == target) break;
    }
    // close the level under the degree-0 operators
    for (size_t qi = 0; qi < queue.size() && F.basis.size() < target; ++qi) {
      SparseVec v = F.basis.row(queue[qi]).v;
      for (int g = 0; g < gens && F.basis.size() < target; ++g) {
        long idx = F.basis.insert(F.space->apply(g, pow_table[0], v), d);
        if (idx >= 0) queue.push_back(static_cast<size_t>(idx));
      }
    }
    long count = 0;
    for (size_t i = 0; i < F.basis.size(); ++i)
      if (F.basis.row(i).degree == d) ++count;
    F.graded_dims.push_back(count);
    F.top_degree = d;
    if (F.basis.size() == target) break;
  }
  while (!F.graded_dims.empty() && F.graded_dims.back() == 0) {
    F.graded_dims.pop_back();
    --F.top_degree;
  }

  F.total_dim = F.basis.size();
  if (F.total_dim != target)
    throw std::runtime_error("fusion_filtration: filtration stalled at dim " + std::to_string(F.total_dim) + " of " +
                             std::to_string(target) + " (cyclicity violated or degree bound " + std::to_string(degree_bound) +
                             " too small)");
  return F;
}

/// (weight, degree) multiplicities of the associated graded space.  Every
/// basis row is weight-pure (generators are weight-homogeneous), so the
/// weight can be read off the pivot index.
inline QCharacter graded_character(const FusionFiltration& F) {
  QCharacter q;
  for (size_t i = 0; i < F.basis.size(); ++i) q.add(F.space->weight_of(F.basis.row(i).pivot), F.basis.row(i).degree, 1);
  return q;
}

/// True iff the graded character is identical across all parameter tuples.
inline bool check_parameter_independence(const std::vector<ModuleRep>& factors, const std::vector<EvalParams>& tuples) {
  if (tuples.size() < 2) return true;
  QCharacter first;
  for (size_t i = 0; i < tuples.size(); ++i) {
    FusionFiltration F = fusion_filtration(factors, tuples[i]);
    QCharacter q = graded_character(F);
    if (i == 0)
      first = std::move(q);
    else if (!(q == first))
      return false;
  }
  return true;
}

}  // namespace fusionflag
