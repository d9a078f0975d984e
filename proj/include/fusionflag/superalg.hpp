#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fusionflag/rootdata.hpp"
#include "fusionflag/supermatrix.hpp"

namespace fusionflag {

/// Chevalley basis of osp(1,2n) in the matrix realization.  Root vectors are
/// given in closed form; the scalars are fixed so that all structure constants
/// are integers, with the paper's normalization x^-_{alpha_n} = E_{-n,0}+E_{0,n}
/// kept exactly.
struct ChevalleyBasis {
  RootSystem rs;
  std::vector<SuperMatrix> xp, xm;  // aligned with rs.all_positive()
  std::vector<SuperMatrix> h;      // h_1..h_n

  explicit ChevalleyBasis(int n) : rs(n) {
    auto E = [n](int i, int j) { return SuperMatrix::unit(n, i, j); };
    auto minus_index = [n](int i) { return n + i; };  // row index of "-i"

    for (const Root& r : rs.all_positive()) {
      const Weight& w = r.wt;
      SuperMatrix plus(n), minus(n);
      // classify the positive root from its delta coordinates
      int i = -1, j = -1;
      for (int t = 0; t < n; ++t)
        if (w[t] != 0) (i < 0 ? i : j) = t;
      if (r.odd) {  // d_p
        int p = i + 1;
        plus = Rat(2) * (E(p, 0) - E(0, minus_index(p)));
        minus = E(minus_index(p), 0) + E(0, p);
      } else if (j < 0) {  // 2 d_p
        int p = i + 1;
        plus = Rat(2) * E(p, minus_index(p));
        minus = Rat(1, 2) * E(minus_index(p), p);
      } else if (w[j] < 0) {  // d_i - d_j, i<j
        int a = i + 1, b = j + 1;
        plus = E(a, b) - E(minus_index(b), minus_index(a));
        minus = E(b, a) - E(minus_index(a), minus_index(b));
      } else {  // d_i + d_j, i<j
        int a = i + 1, b = j + 1;
        plus = Rat(2) * (E(a, minus_index(b)) + E(b, minus_index(a)));
        minus = Rat(1, 2) * (E(minus_index(b), a) + E(minus_index(a), b));
      }
      xp.push_back(plus);
      xm.push_back(minus);
    }

    for (int r = 1; r <= n; ++r) {
      SuperMatrix hh(n);
      if (r < n) {
        hh = (E(r, r) - E(minus_index(r), minus_index(r))) - (E(r + 1, r + 1) - E(minus_index(r + 1), minus_index(r + 1)));
      } else {
        hh = Rat(2) * (E(n, n) - E(minus_index(n), minus_index(n)));
      }
      h.push_back(hh);
    }
  }

  int rank() const { return rs.rank(); }

  SuperMatrix coroot_matrix(const Root& alpha) const {
    CartanElement c = rs.coroot(alpha);
    SuperMatrix m(rank());
    for (int i = 0; i < rank(); ++i) m += c.coeffs[i] * h[i];
    return m;
  }

  /// Root vector for alpha or -alpha, alpha positive.
  const SuperMatrix& root_vector(const Weight& w) const {
    int idx = rs.positive_index(w);
    if (idx >= 0) return xp[idx];
    idx = rs.positive_index(-w);
    if (idx >= 0) return xm[idx];
    throw std::domain_error(w.str() + " is not a root");
  }
};

inline ChevalleyBasis matrix_realization(int n) { return ChevalleyBasis(n); }

/// if m == c * x for some scalar c, returns c (0 only when m == 0)
inline std::optional<Rat> proportionality(const SuperMatrix& m, const SuperMatrix& x) {
  Rat c = 0;
  for (size_t t = 0; t < x.a.size(); ++t) {
    if (x.a[t] != 0) {
      c = m.a[t] / x.a[t];
      break;
    }
  }
  SuperMatrix diff = m - c * x;
  if (!diff.is_zero()) return std::nullopt;
  return c;
}

struct StructureConstant {
  Weight alpha, beta;
  Rat c;
};

struct ChevalleyReport {
  std::vector<std::string> violations;
  std::vector<StructureConstant> constants;  // pairs with alpha+beta a root
  bool ok() const { return violations.empty(); }
};

/// Exhaustive check of the Chevalley axioms over the finite root system:
/// h-basis sanity, the bracket relations with the Cartan part, and integrality
/// and nonvanishing of all structure constants.
inline ChevalleyReport verify_chevalley(const ChevalleyBasis& cb) {
  ChevalleyReport rep;
  const RootSystem& rs = cb.rs;
  int n = rs.rank();
  auto complain = [&rep](const std::string& msg) { rep.violations.push_back(msg); };

  // signed root list: (weight, matrix)
  std::vector<std::pair<Weight, const SuperMatrix*>> signed_roots;
  for (size_t i = 0; i < rs.all_positive().size(); ++i) {
    signed_roots.push_back({rs.all_positive()[i].wt, &cb.xp[i]});
    signed_roots.push_back({-rs.all_positive()[i].wt, &cb.xm[i]});
  }

  // (0) h_1..h_n diagonal and linearly independent, all matrices in osp
  for (int i = 0; i < n; ++i)
    if (!cb.h[i].in_osp() || cb.h[i].parity() != MatParity::Even) complain("h_" + std::to_string(i + 1) + " not an even osp element");
  {
    // diagonal entries at positions 1..n determine h up to the osp constraint
    std::vector<std::vector<Rat>> diag(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 1; j <= n; ++j) diag[i][j - 1] = cb.h[i].at(j, j);
    // rank by elimination
    int r = 0;
    for (int col = 0; col < n && r < n; ++col) {
      int piv = -1;
      for (int row = r; row < n; ++row)
        if (diag[row][col] != 0) {
          piv = row;
          break;
        }
      if (piv < 0) continue;
      std::swap(diag[r], diag[piv]);
      for (int row = 0; row < n; ++row) {
        if (row == r || diag[row][col] == 0) continue;
        Rat f = diag[row][col] / diag[r][col];
        for (int cc = 0; cc < n; ++cc) diag[row][cc] -= f * diag[r][cc];
      }
      ++r;
    }
    if (r != n) complain("h_1..h_n are not linearly independent");
  }

  for (const auto& [w, m] : signed_roots) {
    int idx = rs.positive_index(w);
    bool odd = (idx >= 0 ? rs.all_positive()[idx].odd : rs.all_positive()[rs.positive_index(-w)].odd);
    if (!m->in_osp()) complain("x[" + w.str() + "] not in osp");
    MatParity want = odd ? MatParity::Odd : MatParity::Even;
    if (m->parity() != want) complain("x[" + w.str() + "] has wrong parity");
  }

  // (1) Cartan relations
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!bracket(cb.h[i], cb.h[j]).is_zero()) complain("[h_i,h_j] != 0 at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  for (int i = 0; i < n; ++i)
    for (const auto& [w, m] : signed_roots) {
      SuperMatrix lhs = bracket(cb.h[i], *m);
      SuperMatrix rhs = rs.pair_h(w, i) * (*m);
      if (!(lhs == rhs)) complain("[h_" + std::to_string(i + 1) + ", x[" + w.str() + "]] != (" + w.str() + ")(h) x");
    }
  for (size_t i = 0; i < rs.all_positive().size(); ++i) {
    SuperMatrix lhs = bracket(cb.xp[i], cb.xm[i]);
    SuperMatrix rhs = cb.coroot_matrix(rs.all_positive()[i]);
    if (!(lhs == rhs)) complain("[x+,x-] != h_alpha for alpha=" + rs.all_positive()[i].str());
  }

  // (2) structure constants
  for (const auto& [aw, am] : signed_roots)
    for (const auto& [bw, bm] : signed_roots) {
      Weight sum = aw + bw;
      if (sum.is_zero()) continue;
      SuperMatrix br = bracket(*am, *bm);
      if (rs.is_root(sum)) {
        const SuperMatrix& target = cb.root_vector(sum);
        auto c = proportionality(br, target);
        if (!c) {
          complain("[x[" + aw.str() + "], x[" + bw.str() + "]] not proportional to x[" + sum.str() + "]");
          continue;
        }
        if (*c == 0)
          complain("c(" + aw.str() + "," + bw.str() + ") = 0 but " + sum.str() + " is a root");
        else if (!is_integer(*c))
          complain("c(" + aw.str() + "," + bw.str() + ") = " + c->get_str() + " not an integer");
        rep.constants.push_back({aw, bw, *c});
      } else if (!br.is_zero()) {
        complain("[x[" + aw.str() + "], x[" + bw.str() + "]] != 0 but " + sum.str() + " is not a root");
      }
    }
  return rep;
}

inline void dump_constants_csv(const ChevalleyReport& rep, std::ostream& os) {
  os << "alpha,beta,c\n";
  for (const auto& sc : rep.constants) os << sc.alpha.str() << "," << sc.beta.str() << "," << sc.c.get_str() << "\n";
}

}  // namespace fusionflag
