#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fusionflag/rational.hpp"
#include "fusionflag/weight.hpp"

namespace fusionflag {

struct Root {
  Weight wt;
  bool odd = false;

  std::string str() const { return wt.str(); }
  friend bool operator==(const Root& a, const Root& b) { return a.wt == b.wt; }
};

/// Element of the Cartan subalgebra written over the basis h_1..h_n.
struct CartanElement {
  std::vector<Rat> coeffs;
};

/// Root data of osp(1,2n) with the distinguished simple system
/// d1-d2, ..., d_{n-1}-d_n, d_n (only d_n odd).  The even part is sp(2n).
///
/// Normalization: (d_i, d_j) = delta_{ij}.  All quantities used downstream are
/// coroot pairings or ratios, which do not depend on this choice.
class RootSystem {
 public:
  explicit RootSystem(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    // Positive even roots: d_i - d_j (i<j), d_i + d_j (i<j), 2 d_p.
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) positive_even_.push_back({Weight::delta(n, i) - Weight::delta(n, j), false});
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) positive_even_.push_back({Weight::delta(n, i) + Weight::delta(n, j), false});
    for (int p = 0; p < n; ++p) positive_even_.push_back({Rat(2) * Weight::delta(n, p), false});
    for (int p = 0; p < n; ++p) positive_odd_.push_back({Weight::delta(n, p), true});

    for (int i = 0; i + 1 < n; ++i) simple_.push_back({Weight::delta(n, i) - Weight::delta(n, i + 1), false});
    simple_.push_back({Weight::delta(n, n - 1), true});

    all_positive_ = positive_even_;
    all_positive_.insert(all_positive_.end(), positive_odd_.begin(), positive_odd_.end());
    for (size_t idx = 0; idx < all_positive_.size(); ++idx) index_of_[all_positive_[idx].wt] = static_cast<int>(idx);

    rho0_ = Weight::zero(n);
    for (const Root& a : positive_even_) rho0_ += Rat(1, 2) * a.wt;
    rho1_ = Weight::zero(n);
    for (const Root& a : positive_odd_) rho1_ += Rat(1, 2) * a.wt;
    rho_ = rho0_ - rho1_;

    // Cartan data: a_{j,i} = alpha_i(h_j), A = D B with B symmetric.
    cartan_a_.assign(n, std::vector<Rat>(n, Rat(0)));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) cartan_a_[j][i] = pair_h(simple_[i].wt, j);
    diag_d_.assign(n, Rat(0));
    for (int i = 0; i < n; ++i) diag_d_[i] = 2 / bilinear(simple_[i].wt, simple_[i].wt);
    sym_b_.assign(n, std::vector<Rat>(n, Rat(0)));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) sym_b_[j][i] = cartan_a_[j][i] / diag_d_[j];

    kac_root_ = {Rat(2) * Weight::delta(n, n - 1), false};
  }

  int rank() const { return n_; }
  const std::vector<Root>& positive_even() const { return positive_even_; }
  const std::vector<Root>& positive_odd() const { return positive_odd_; }
  const std::vector<Root>& all_positive() const { return all_positive_; }
  const std::vector<Root>& simple() const { return simple_; }
  const Weight& rho() const { return rho_; }
  const Weight& rho0() const { return rho0_; }
  const Weight& rho1() const { return rho1_; }

  /// gamma = 2 d_n: the long simple root of the even subalgebra sp(2n); the
  /// extra lowering relation of a highest weight module uses the exponent
  /// lambda(h_gamma).
  const Root& kac_root() const { return kac_root_; }

  const std::vector<std::vector<Rat>>& cartan_A() const { return cartan_a_; }
  const std::vector<std::vector<Rat>>& sym_B() const { return sym_b_; }
  const std::vector<Rat>& diag_D() const { return diag_d_; }

  Rat bilinear(const Weight& a, const Weight& b) const {
    Rat s = 0;
    for (int i = 0; i < n_; ++i) s += a[i] * b[i];
    return s;
  }

  /// lambda(h_i) for the simple coroots h_1..h_n.
  Rat pair_h(const Weight& lam, int i) const {
    if (i < 0 || i >= n_) throw std::invalid_argument("cartan index out of range");
    if (i + 1 < n_) return lam[i] - lam[i + 1];
    return 2 * lam[n_ - 1];
  }

  Rat pair(const Weight& lam, const CartanElement& h) const {
    Rat s = 0;
    for (int i = 0; i < n_; ++i) s += h.coeffs[i] * pair_h(lam, i);
    return s;
  }

  /// h_alpha = d_alpha * sum_i k_i d_i^{-1} h_i for alpha = sum_i k_i alpha_i.
  CartanElement coroot(const Root& alpha) const {
    require_root(alpha.wt);
    Rat norm = bilinear(alpha.wt, alpha.wt);
    // osp(1,2n) has no isotropic roots; the d_alpha = d_s branch is kept for
    // completeness of the table but is unreachable here.
    Rat d_alpha = (norm != 0) ? Rat(2) / norm : diag_d_[n_ - 1];
    CartanElement h;
    h.coeffs.assign(n_, Rat(0));
    Rat partial = 0;  // k_i = c_1 + ... + c_i for alpha = sum c_i d_i
    for (int i = 0; i < n_; ++i) {
      partial += alpha.wt[i];
      h.coeffs[i] = d_alpha * partial / diag_d_[i];
    }
    return h;
  }

  /// lambda(h_alpha), computed as 2(lambda,alpha)/(alpha,alpha).
  Rat eval_coroot(const Weight& lam, const Root& alpha) const {
    Rat norm = bilinear(alpha.wt, alpha.wt);
    if (norm == 0) throw std::domain_error("isotropic root has no normalized coroot pairing");
    return 2 * bilinear(lam, alpha.wt) / norm;
  }

  bool is_root(const Weight& w) const { return index_of_.count(w) || index_of_.count(-w); }

  /// Index into all_positive() if w is a positive root, -1 otherwise.
  int positive_index(const Weight& w) const {
    auto it = index_of_.find(w);
    return it == index_of_.end() ? -1 : it->second;
  }

  void require_root(const Weight& w) const {
    if (!is_root(w)) throw std::domain_error(w.str() + " is not a root");
  }

  /// P^+ = { sum a_i d_i : a_1 >= ... >= a_n >= 0, a_i integers }.
  bool is_dominant(const Weight& lam) const {
    if (lam.rank() != n_) return false;
    if (!lam.is_integral()) return false;
    for (int i = 0; i + 1 < n_; ++i)
      if (lam[i] < lam[i + 1]) return false;
    return lam[n_ - 1] >= 0;
  }

 private:
  int n_;
  std::vector<Root> positive_even_, positive_odd_, all_positive_, simple_;
  std::map<Weight, int> index_of_;
  Weight rho_, rho0_, rho1_;
  Root kac_root_;
  std::vector<std::vector<Rat>> cartan_a_, sym_b_;
  std::vector<Rat> diag_d_;
};

inline RootSystem build_root_system(int n) { return RootSystem(n); }

/// dim V(lambda) = 2^{|R1+|} prod_{alpha in R0+} (lambda+rho,alpha)/(rho0,alpha).
inline Int kac_dimension(const RootSystem& rs, const Weight& lam) {
  if (!rs.is_dominant(lam)) throw std::domain_error("kac_dimension: weight " + lam.str() + " is not dominant");
  Rat prod = 1;
  Weight shifted = lam + rs.rho();
  for (const Root& a : rs.positive_even()) prod *= rs.bilinear(shifted, a.wt) / rs.bilinear(rs.rho0(), a.wt);
  Rat dim = pow_rat(Rat(2), static_cast<unsigned long>(rs.positive_odd().size())) * prod;
  if (!is_integer(dim) || dim <= 0)
    throw std::runtime_error("kac_dimension: formula gave non-integral value " + dim.get_str() + " at lambda=" + lam.str());
  return dim.get_num();
}

/// dim of the irreducible sp(2n)-module with highest weight k d_1.
inline Int even_dimension(int n, long k) {
  if (n < 1 || k < 0) throw std::invalid_argument("even_dimension: bad arguments");
  return binomial(k + 2 * n - 1, 2 * n - 1);
}

struct HalfIntegerRow {
  Root alpha;
  Rat value;  // 2(lambda+rho)(h_alpha)
  bool ok;    // positive integer
};

struct HalfIntegerReport {
  std::vector<HalfIntegerRow> rows;
  bool all_ok = true;
};

inline HalfIntegerReport check_half_integer(const RootSystem& rs, const Weight& lam) {
  if (!rs.is_dominant(lam)) throw std::domain_error("check_half_integer: weight not dominant");
  HalfIntegerReport rep;
  Weight shifted = lam + rs.rho();
  for (const Root& a : rs.positive_even()) {
    Rat v = 2 * rs.eval_coroot(shifted, a);
    bool ok = is_integer(v) && v > 0;
    rep.rows.push_back({a, v, ok});
    rep.all_ok = rep.all_ok && ok;
  }
  return rep;
}

/// Reference-only table of ((rho,gamma); (gamma,gamma)) for the basic classical
/// families beyond B(0,n).  Entries are linear forms c0 + c1*t in the family
/// parameter (t = m, or t = alpha for D(2,1;alpha)); not used by any
/// computation in this library.
struct TypicalityConstants {
  std::string type;
  Rat rho_gamma_c0, rho_gamma_c1;
  Rat gamma_gamma_c0, gamma_gamma_c1;
};

inline const std::vector<TypicalityConstants>& typicality_constants_table() {
  static const std::vector<TypicalityConstants> table = {
      {"B(m,n)", Rat(1), Rat(-2), Rat(4), Rat(0)},    // -2(m-1)-1 = 1 - 2m
      {"D(m,n)", Rat(2), Rat(-2), Rat(4), Rat(0)},    // -2(m-1) = 2 - 2m
      {"F(4)", Rat(9), Rat(0), Rat(-6), Rat(0)},
      {"G(3)", Rat(10), Rat(0), Rat(-8), Rat(0)},
      {"D(2,1;a)", Rat(1), Rat(1), Rat(-2), Rat(-2)},  // (1+a); -2(1+a)
  };
  return table;
}

}  // namespace fusionflag
