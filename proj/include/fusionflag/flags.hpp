#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "fusionflag/fusion.hpp"

namespace fusionflag {

/// k-tuple of nonnegative integers; partitions are weakly decreasing with
/// strictly positive parts, phi-images may carry internal/trailing zeros.
using IntTuple = std::vector<long>;

inline std::string tuple_str(const IntTuple& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

inline long tuple_sum(const IntTuple& t) { return std::accumulate(t.begin(), t.end(), 0L); }

inline bool is_partition(const IntTuple& t) {
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] <= 0) return false;
    if (i && t[i] > t[i - 1]) return false;
  }
  return true;
}

/// phi_ell: decrement m_p where p = min{ell+1 <= q <= k : m_q > m_{q+1}}
/// (indices 1-based, m_{k+1} = 0).  Undefined when the tail from ell+1 on is
/// all zero.
inline IntTuple phi(int ell, IntTuple m) {
  int k = static_cast<int>(m.size());
  if (ell < 0 || ell >= k) throw std::domain_error("phi: index out of range");
  for (int q = ell; q < k; ++q) {
    long next = (q + 1 < k) ? m[static_cast<size_t>(q + 1)] : 0;
    if (m[static_cast<size_t>(q)] > next) {
      --m[static_cast<size_t>(q)];
      return m;
    }
  }
  throw std::domain_error("phi_" + std::to_string(ell) + " undefined on " + tuple_str(m));
}

struct FlagPiece {
  std::vector<int> indices;  // 0 <= i_1 < ... < i_l <= k-1
  IntTuple image;            // phi_{i_1} o ... o phi_{i_l}(m)
  int degree_shift = 0;      // i_1 + ... + i_l
};

/// All 2^k pieces of the flag decomposition, one per subset of {0..k-1}.
/// phi_{i_l} is applied first, phi_{i_1} last.
inline std::vector<FlagPiece> flag_pieces(const IntTuple& m) {
  if (!is_partition(m)) throw std::invalid_argument("flag_pieces: not a partition: " + tuple_str(m));
  int k = static_cast<int>(m.size());
  std::vector<FlagPiece> pieces;
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    FlagPiece piece;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) {
        piece.indices.push_back(i);
        piece.degree_shift += i;
      }
    piece.image = m;
    for (auto it = piece.indices.rbegin(); it != piece.indices.rend(); ++it) piece.image = phi(*it, std::move(piece.image));
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

/// sum over pieces of prod_j dim Veven(image_j) == prod_j dim V(m_j d1).
inline bool dimension_identity(const IntTuple& m, int n) {
  Int lhs = 0;
  for (const FlagPiece& p : flag_pieces(m)) {
    Int prod = 1;
    for (long mj : p.image) prod *= even_dimension(n, mj);
    lhs += prod;
  }
  Int rhs = 1;
  RootSystem rs(n);
  for (long mj : m) rhs *= kac_dimension(rs, Rat(mj) * Weight::delta(n, 0));
  return lhs == rhs;
}

/// q-character predicted by the flag decomposition: sum over pieces of
/// q^{degree_shift} times the graded character of the even-part fusion of the
/// phi-image.  Evaluation points default to (0,1,...,k-1).
inline QCharacter predicted_qcharacter(const ChevalleyBasis& cb, const IntTuple& m) {
  int k = static_cast<int>(m.size());
  QCharacter out;
  std::map<IntTuple, QCharacter> cache;
  for (const FlagPiece& piece : flag_pieces(m)) {
    auto it = cache.find(piece.image);
    if (it == cache.end()) {
      std::vector<ModuleRep> factors;
      for (long mj : piece.image) factors.push_back(sym_power_even(cb, static_cast<int>(mj)));
      FusionFiltration F = fusion_filtration(std::move(factors), EvalParams::standard(static_cast<size_t>(k)));
      it = cache.emplace(piece.image, graded_character(F)).first;
    }
    out += it->second.shifted(piece.degree_shift);
  }
  return out;
}

struct PbwPieceRow {
  std::vector<int> indices;
  IntTuple image;
  std::vector<IntTuple> exponents;  // admissible (j_1..j_k)
  Int expected;                     // prod (image_j + 1)
  bool ok;
};

struct PbwBasisReport {
  std::vector<PbwPieceRow> pieces;
  Int count = 0;
  Int expected = 0;  // prod (2 m_j + 1)
  bool matches = false;
};

/// PBW-type basis of the osp(1,2) fusion product: per flag piece, the
/// exponents (j_1..j_k) of (x-_{2d1} (x) t^{i-1}) subject to
///   s*j_{r-1} + (s+1)*j_r + 2*sum_{p=r+1}^{k} j_p <= sum_{p=r-s}^{k} image_p
/// for all 2 <= r <= k+1, 1 <= s <= r-1 (j_{k+1} = 0).  The displayed upper
/// limit of the middle sum is read as k; this is the only reading consistent
/// with the expected cardinalities, which are validated below.
inline PbwBasisReport pbw_basis_osp12(const IntTuple& m) {
  if (!is_partition(m)) throw std::invalid_argument("pbw_basis_osp12: not a partition");
  int k = static_cast<int>(m.size());
  PbwBasisReport rep;
  rep.expected = 1;
  for (long mj : m) rep.expected *= 2 * mj + 1;

  auto admissible = [k](const IntTuple& image, const IntTuple& j) {
    auto jj = [&](int idx) { return (idx >= 1 && idx <= k) ? j[static_cast<size_t>(idx - 1)] : 0L; };
    for (int r = 2; r <= k + 1; ++r)
      for (int s = 1; s <= r - 1; ++s) {
        long lhs = s * jj(r - 1) + (s + 1) * jj(r);
        for (int p = r + 1; p <= k; ++p) lhs += 2 * jj(p);
        long rhs = 0;
        for (int p = r - s; p <= k; ++p) rhs += image[static_cast<size_t>(p - 1)];
        if (lhs > rhs) return false;
      }
    return true;
  };

  for (const FlagPiece& piece : flag_pieces(m)) {
    PbwPieceRow row;
    row.indices = piece.indices;
    row.image = piece.image;
    long total = tuple_sum(piece.image);
    IntTuple j(static_cast<size_t>(k), 0);
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == k) {
        if (admissible(piece.image, j)) row.exponents.push_back(j);
        return;
      }
      for (long v = 0; v <= total; ++v) {
        j[static_cast<size_t>(pos)] = v;
        self(self, pos + 1);
      }
      j[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0);
    row.expected = 1;
    for (long mj : piece.image) row.expected *= mj + 1;
    row.ok = Int(static_cast<long>(row.exponents.size())) == row.expected;
    rep.count += static_cast<long>(row.exponents.size());
    rep.pieces.push_back(std::move(row));
  }
  rep.matches = rep.count == rep.expected;
  return rep;
}

// ---------------------------------------------------------------------------
// The order on P^+(lambda, k) and the dimension monotonicity scan.

using WeightTuple = std::vector<Weight>;

inline std::string weight_tuple_str(const WeightTuple& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) s += (i ? ";" : "") + t[i].str();
  return s + ")";
}

/// r_{beta,l} = min over l-subsets of sum lambda_i(h_beta); since the values
/// are nonnegative this is the sum of the l smallest.
inline long r_beta_ell(const RootSystem& rs, const WeightTuple& lam, const Root& beta, int ell) {
  int k = static_cast<int>(lam.size());
  if (ell < 1 || ell > k) throw std::invalid_argument("r_beta_ell: l out of range");
  std::vector<long> vals;
  for (const Weight& w : lam) vals.push_back(to_integer(rs.eval_coroot(w, beta)).get_si());
  std::sort(vals.begin(), vals.end());
  return std::accumulate(vals.begin(), vals.begin() + ell, 0L);
}

inline void require_same_total(const WeightTuple& a, const WeightTuple& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight tuples must have the same length");
  Weight ta = Weight::zero(a.empty() ? 0 : a[0].rank()), tb = ta;
  for (const Weight& w : a) ta += w;
  for (const Weight& w : b) tb += w;
  if (!(ta == tb)) throw std::invalid_argument("weight tuples must have the same total weight");
}

inline bool preceq(const RootSystem& rs, const WeightTuple& a, const WeightTuple& b) {
  require_same_total(a, b);
  for (const Root& beta : rs.positive_even())
    for (int ell = 1; ell <= static_cast<int>(a.size()); ++ell)
      if (r_beta_ell(rs, a, beta, ell) > r_beta_ell(rs, b, beta, ell)) return false;
  return true;
}

inline bool equivalent(const RootSystem& rs, const WeightTuple& a, const WeightTuple& b) {
  require_same_total(a, b);
  for (const Root& beta : rs.positive_even())
    for (int ell = 1; ell <= static_cast<int>(a.size()); ++ell)
      if (r_beta_ell(rs, a, beta, ell) != r_beta_ell(rs, b, beta, ell)) return false;
  return true;
}

/// Enumerates P^+(lambda,k) up to permutation (tuples in weakly decreasing
/// lex order; r_{beta,l} is permutation invariant).
inline std::vector<WeightTuple> dominant_tuples(const RootSystem& rs, const Weight& lambda, int k) {
  if (!rs.is_dominant(lambda)) throw std::domain_error("dominant_tuples: lambda not dominant");
  int n = rs.rank();
  std::vector<Weight> candidates;
  {
    std::vector<long> bound(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) bound[static_cast<size_t>(i)] = to_integer(lambda[i]).get_si();
    std::vector<long> cur(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, long hi) -> void {
      if (pos == n) {
        std::vector<Rat> c(cur.begin(), cur.end());
        candidates.push_back(Weight(std::move(c)));
        return;
      }
      long lim = std::min(hi, bound[static_cast<size_t>(pos)]);
      for (long v = 0; v <= lim; ++v) {
        cur[static_cast<size_t>(pos)] = v;
        self(self, pos + 1, v);
      }
    };
    rec(rec, 0, bound[0]);
  }
  // candidates are dominant weights with coordinates bounded by lambda's
  std::vector<WeightTuple> out;
  WeightTuple cur;
  auto rec2 = [&](auto&& self, size_t start, Weight remaining, int slots) -> void {
    if (slots == 0) {
      if (remaining.is_zero()) out.push_back(cur);
      return;
    }
    for (size_t c = start; c < candidates.size(); ++c) {
      bool fits = true;
      for (int i = 0; i < rs.rank(); ++i)
        if (candidates[c][i] > remaining[i]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      cur.push_back(candidates[c]);
      self(self, c, remaining - candidates[c], slots - 1);
      cur.pop_back();
    }
  };
  rec2(rec2, 0, lambda, k);
  return out;
}

struct PosetScanRow {
  WeightTuple a, b;
  bool preceq_ab;
  Int dim_a, dim_b;
  bool equivalent_ab;
  bool ok;
};

struct PosetScanReport {
  std::vector<PosetScanRow> rows;  // one row per comparable ordered pair
  long tuples = 0;
  std::vector<std::string> violations;
};

/// Exhaustive check over P^+(lambda,k): a preceq b implies
/// prod dim V(a_i) <= prod dim V(b_i), with equality iff a ~ b.
inline PosetScanReport monotonicity_scan(const RootSystem& rs, const Weight& lambda, int k) {
  PosetScanReport rep;
  std::vector<WeightTuple> tuples = dominant_tuples(rs, lambda, k);
  rep.tuples = static_cast<long>(tuples.size());
  auto dim_of = [&rs](const WeightTuple& t) {
    Int d = 1;
    for (const Weight& w : t) d *= kac_dimension(rs, w);
    return d;
  };
  for (const WeightTuple& a : tuples)
    for (const WeightTuple& b : tuples) {
      if (!preceq(rs, a, b)) continue;
      PosetScanRow row{a, b, true, dim_of(a), dim_of(b), equivalent(rs, a, b), true};
      if (row.dim_a > row.dim_b) row.ok = false;
      if (row.equivalent_ab != (row.dim_a == row.dim_b)) row.ok = false;
      if (!row.ok)
        rep.violations.push_back(weight_tuple_str(a) + " vs " + weight_tuple_str(b) + ": dims " + row.dim_a.get_str() + "," +
                                 row.dim_b.get_str() + (row.equivalent_ab ? " (equivalent)" : " (not equivalent)"));
      rep.rows.push_back(std::move(row));
    }
  return rep;
}

/// Total order on strictly increasing index tuples: shorter tuples first; for
/// equal lengths (j_s..j_1) < (i_l..i_1) iff (i_l..i_1) precedes (j_l..j_1)
/// lexicographically on the descending forms.  Returns -1, 0, +1.
inline int monomial_cmp(const std::vector<int>& a, const std::vector<int>& b) {
  auto check = [](const std::vector<int>& t) {
    for (size_t i = 1; i < t.size(); ++i)
      if (t[i] <= t[i - 1]) throw std::invalid_argument("monomial_cmp: tuple not strictly increasing");
  };
  check(a);
  check(b);
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  // descending forms, compared lexicographically; the LARGER descending form
  // is the SMALLER monomial
  for (size_t i = 0; i < a.size(); ++i) {
    int x = a[a.size() - 1 - i], y = b[b.size() - 1 - i];
    if (x != y) return x > y ? -1 : 1;
  }
  return 0;
}

}  // namespace fusionflag
