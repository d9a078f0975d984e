#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "fusionflag/linalg.hpp"
#include "fusionflag/superalg.hpp"

namespace fusionflag {

enum class AlgScheme { Super, Even };

struct GenId {
  enum Kind : uint8_t { XPlus, XMinus, Cartan } kind;
  int index;  // root index (into the scheme's root list) or cartan index

  friend bool operator==(const GenId& a, const GenId& b) { return a.kind == b.kind && a.index == b.index; }
};

/// Ordered generator list shared between an algebra realization and the
/// modules it acts on: x+ for every positive root, then x-, then h_1..h_n.
/// The Even scheme restricts to the even positive roots (the sp(2n) part).
struct GeneratorScheme {
  AlgScheme alg;
  int rank;
  std::vector<Root> roots;  // positive roots covered by the scheme
  std::vector<GenId> gens;
  std::vector<uint8_t> odd;  // parity per generator

  static std::shared_ptr<const GeneratorScheme> make(const RootSystem& rs, AlgScheme alg) {
    auto s = std::make_shared<GeneratorScheme>();
    s->alg = alg;
    s->rank = rs.rank();
    s->roots = (alg == AlgScheme::Super) ? rs.all_positive() : rs.positive_even();
    for (size_t i = 0; i < s->roots.size(); ++i) {
      s->gens.push_back({GenId::XPlus, static_cast<int>(i)});
      s->odd.push_back(s->roots[i].odd ? 1 : 0);
    }
    for (size_t i = 0; i < s->roots.size(); ++i) {
      s->gens.push_back({GenId::XMinus, static_cast<int>(i)});
      s->odd.push_back(s->roots[i].odd ? 1 : 0);
    }
    for (int i = 0; i < rs.rank(); ++i) {
      s->gens.push_back({GenId::Cartan, i});
      s->odd.push_back(0);
    }
    return s;
  }

  int count() const { return static_cast<int>(gens.size()); }

  int find(const GenId& id) const {
    for (int i = 0; i < count(); ++i)
      if (gens[i] == id) return i;
    throw std::domain_error("generator not in scheme");
  }

  int find_xminus(const Root& alpha) const {
    for (size_t i = 0; i < roots.size(); ++i)
      if (roots[i].wt == alpha.wt) return find({GenId::XMinus, static_cast<int>(i)});
    throw std::domain_error("x-[" + alpha.str() + "] not in scheme");
  }

  int find_xplus(const Root& alpha) const {
    for (size_t i = 0; i < roots.size(); ++i)
      if (roots[i].wt == alpha.wt) return find({GenId::XPlus, static_cast<int>(i)});
    throw std::domain_error("x+[" + alpha.str() + "] not in scheme");
  }

  std::string name(int g) const {
    const GenId& id = gens[static_cast<size_t>(g)];
    switch (id.kind) {
      case GenId::XPlus:
        return "x+[" + roots[static_cast<size_t>(id.index)].str() + "]";
      case GenId::XMinus:
        return "x-[" + roots[static_cast<size_t>(id.index)].str() + "]";
      default:
        return "h" + std::to_string(id.index + 1);
    }
  }

  /// Weight shift of a generator under the adjoint Cartan action.
  Weight weight_shift(int g) const {
    const GenId& id = gens[static_cast<size_t>(g)];
    switch (id.kind) {
      case GenId::XPlus:
        return roots[static_cast<size_t>(id.index)].wt;
      case GenId::XMinus:
        return -roots[static_cast<size_t>(id.index)].wt;
      default:
        return Weight::zero(rank);
    }
  }
};

/// Finite-dimensional module given by weights, parities and exact generator
/// action matrices aligned with a GeneratorScheme.
struct ModuleRep {
  std::shared_ptr<const GeneratorScheme> scheme;
  int dim = 0;
  std::vector<Weight> weights;
  std::vector<uint8_t> parities;
  std::vector<SparseMatrix> action;
  int highest = 0;
  std::string name;

  const Weight& highest_weight() const { return weights[static_cast<size_t>(highest)]; }
};

namespace detail {
inline SparseMatrix matrix_of(const SuperMatrix& m) {
  int N = m.size();
  SparseMatrix s(N, N);
  for (int c = 0; c < N; ++c)
    for (int r = 0; r < N; ++r)
      if (m.at(r, c) != 0) s.add(r, c, m.at(r, c));
  return s;
}

inline const SuperMatrix& gen_matrix(const ChevalleyBasis& cb, const GeneratorScheme& s, int g) {
  const GenId& id = s.gens[static_cast<size_t>(g)];
  if (id.kind == GenId::Cartan) return cb.h[static_cast<size_t>(id.index)];
  int root_idx = cb.rs.positive_index(s.roots[static_cast<size_t>(id.index)].wt);
  return id.kind == GenId::XPlus ? cb.xp[static_cast<size_t>(root_idx)] : cb.xm[static_cast<size_t>(root_idx)];
}
}  // namespace detail

/// The (2n+1)-dimensional defining representation of osp(1,2n).  Basis: e_0
/// (even, weight 0), e_1..e_n (odd, weight d_i), e_{n+1}..e_{2n} (odd, -d_i).
/// Highest vector: e_1.
inline ModuleRep defining_rep(const ChevalleyBasis& cb) {
  int n = cb.rank();
  ModuleRep m;
  m.scheme = GeneratorScheme::make(cb.rs, AlgScheme::Super);
  m.dim = 2 * n + 1;
  m.weights.resize(static_cast<size_t>(m.dim), Weight::zero(n));
  m.parities.assign(static_cast<size_t>(m.dim), 1);
  m.parities[0] = 0;
  for (int i = 1; i <= n; ++i) {
    m.weights[static_cast<size_t>(i)] = Weight::delta(n, i - 1);
    m.weights[static_cast<size_t>(n + i)] = -Weight::delta(n, i - 1);
  }
  for (int g = 0; g < m.scheme->count(); ++g) m.action.push_back(detail::matrix_of(detail::gen_matrix(cb, *m.scheme, g)));
  m.highest = 1;
  m.name = "Vdef(" + std::to_string(n) + ")";
  return m;
}

/// k-th symmetric power of the defining sp(2n)-module, realized on monomials
/// in 2n letters; this is the irreducible even-part module with highest
/// weight k d_1 and dimension binom(k+2n-1, 2n-1).
inline ModuleRep sym_power_even(const ChevalleyBasis& cb, int k) {
  if (k < 0) throw std::invalid_argument("sym_power_even: k must be >= 0");
  int n = cb.rank();
  int letters = 2 * n;  // letter l <=> supermatrix index l+1
  ModuleRep m;
  m.scheme = GeneratorScheme::make(cb.rs, AlgScheme::Even);

  std::vector<std::vector<int>> monos;
  std::vector<int> cur;
  // enumerate weakly increasing letter tuples of length k
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      monos.push_back(cur);
      return;
    }
    for (int l = start; l < letters; ++l) {
      cur.push_back(l);
      self(self, l);
      cur.pop_back();
    }
  };
  rec(rec, 0);

  std::map<std::vector<int>, int> index_of;
  for (size_t i = 0; i < monos.size(); ++i) index_of[monos[i]] = static_cast<int>(i);

  auto letter_weight = [n](int l) { return l < n ? Weight::delta(n, l) : -Weight::delta(n, l - n); };

  m.dim = static_cast<int>(monos.size());
  m.parities.assign(static_cast<size_t>(m.dim), 0);
  for (const auto& mono : monos) {
    Weight w = Weight::zero(n);
    for (int l : mono) w += letter_weight(l);
    m.weights.push_back(w);
  }

  for (int g = 0; g < m.scheme->count(); ++g) {
    const SuperMatrix& gm = detail::gen_matrix(cb, *m.scheme, g);
    SparseMatrix act(m.dim, m.dim);
    std::vector<std::map<int, Rat>> cols(static_cast<size_t>(m.dim));
    for (int c = 0; c < m.dim; ++c) {
      const auto& mono = monos[static_cast<size_t>(c)];
      for (int t = 0; t < k; ++t) {
        int l = mono[static_cast<size_t>(t)];
        for (int l2 = 0; l2 < letters; ++l2) {
          const Rat& coeff = gm.at(l2 + 1, l + 1);
          if (coeff == 0) continue;
          std::vector<int> img = mono;
          img[static_cast<size_t>(t)] = l2;
          std::sort(img.begin(), img.end());
          cols[static_cast<size_t>(c)][index_of.at(img)] += coeff;
        }
      }
    }
    for (int c = 0; c < m.dim; ++c)
      for (auto& [r, v] : cols[static_cast<size_t>(c)]) act.add(r, c, std::move(v));
    m.action.push_back(std::move(act));
  }

  m.highest = index_of.at(std::vector<int>(static_cast<size_t>(k), 0));  // e_1^k
  m.name = "Veven(" + std::to_string(k) + "d1," + std::to_string(n) + ")";
  return m;
}

/// Super tensor product of modules over a common generator scheme.  States are
/// sparse vectors over mixed-radix multi-indices; the action uses the Koszul
/// sign (-1)^{|x|(|v_1|+...+|v_{j-1}|)} and per-slot scalar coefficients.
struct TensorSpace {
  std::vector<const ModuleRep*> factors;
  std::vector<uint32_t> strides;
  uint32_t total = 1;

  explicit TensorSpace(const std::vector<const ModuleRep*>& f) : factors(f) {
    strides.assign(factors.size(), 1);
    for (size_t j = factors.size(); j-- > 0;) {
      strides[j] = total;
      total *= static_cast<uint32_t>(factors[j]->dim);
    }
    for (size_t j = 1; j < factors.size(); ++j)
      if (factors[j]->scheme->gens.size() != factors[0]->scheme->gens.size() || factors[j]->scheme->alg != factors[0]->scheme->alg)
        throw std::invalid_argument("tensor factors must share a generator scheme");
  }

  size_t arity() const { return factors.size(); }

  const GeneratorScheme& scheme() const {
    if (factors.empty()) throw std::logic_error("empty tensor space has no scheme");
    return *factors[0]->scheme;
  }

  void decode(uint32_t idx, std::vector<int>& digits) const {
    digits.resize(factors.size());
    for (size_t j = 0; j < factors.size(); ++j) {
      digits[j] = static_cast<int>(idx / strides[j]);
      idx %= strides[j];
    }
  }

  uint32_t encode(const std::vector<int>& digits) const {
    uint32_t idx = 0;
    for (size_t j = 0; j < factors.size(); ++j) idx += static_cast<uint32_t>(digits[j]) * strides[j];
    return idx;
  }

  uint32_t highest_index() const {
    uint32_t idx = 0;
    for (size_t j = 0; j < factors.size(); ++j) idx += static_cast<uint32_t>(factors[j]->highest) * strides[j];
    return idx;
  }

  Weight weight_of(uint32_t idx) const {
    int n = factors.empty() ? 0 : factors[0]->scheme->rank;
    Weight w = Weight::zero(n);
    for (size_t j = 0; j < factors.size(); ++j) {
      uint32_t d = idx / strides[j];
      idx %= strides[j];
      w += factors[j]->weights[d];
    }
    return w;
  }

  int parity_of(uint32_t idx) const {
    int p = 0;
    for (size_t j = 0; j < factors.size(); ++j) {
      uint32_t d = idx / strides[j];
      idx %= strides[j];
      p ^= factors[j]->parities[d];
    }
    return p;
  }

  /// Image of state under the generator g with per-slot coefficients coef
  /// (coef[j] multiplies the term acting on slot j).
  SparseVec apply(int g, const std::vector<Rat>& coef, const SparseVec& state) const {
    bool odd_gen = !factors.empty() && factors[0]->scheme->odd[static_cast<size_t>(g)];
    std::map<uint32_t, Rat> acc;
    std::vector<int> digits;
    for (const auto& [idx, c] : state) {
      decode(idx, digits);
      int parity_prefix = 0;
      for (size_t j = 0; j < factors.size(); ++j) {
        const ModuleRep& f = *factors[j];
        if (coef[j] != 0) {
          bool neg = odd_gen && (parity_prefix & 1);
          for (const auto& [row, val] : f.action[static_cast<size_t>(g)].col[static_cast<size_t>(digits[j])]) {
            uint32_t nidx = idx + (static_cast<uint32_t>(row) - static_cast<uint32_t>(digits[j])) * strides[j];
            Rat term = c * val * coef[j];
            if (neg) term = -term;
            acc[nidx] += term;
          }
        }
        if (odd_gen) parity_prefix += f.parities[static_cast<size_t>(digits[j])];
      }
    }
    return sparse_from_map(std::move(acc));
  }
};

/// The irreducible module V(m d_1), built as the cyclic span of the top pure
/// tensor inside defining_rep^{(x) m}.  The span is echelonized over exact
/// rationals with first-nonzero pivoting; the dimension is asserted against
/// the Kac dimension formula.  For osp(1,2n) the category of finite
/// dimensional modules is semisimple, so the cyclic span of the highest
/// vector is already irreducible; a mismatch signals a bug, not user error.
inline ModuleRep highest_weight_module(const ChevalleyBasis& cb, int m) {
  if (m < 0) throw std::invalid_argument("highest_weight_module: m must be >= 0");
  int n = cb.rank();
  auto scheme = GeneratorScheme::make(cb.rs, AlgScheme::Super);
  Weight lambda = Rat(m) * Weight::delta(n, 0);
  Int want = kac_dimension(cb.rs, lambda);

  ModuleRep out;
  out.scheme = scheme;
  out.name = "V(" + std::to_string(m) + "d1," + std::to_string(n) + ")";

  if (m == 0) {
    out.dim = 1;
    out.weights = {Weight::zero(n)};
    out.parities = {0};
    for (int g = 0; g < scheme->count(); ++g) out.action.emplace_back(1, 1);
    out.highest = 0;
    return out;
  }

  ModuleRep def = defining_rep(cb);
  std::vector<const ModuleRep*> factors(static_cast<size_t>(m), &def);
  TensorSpace ts(factors);
  std::vector<Rat> ones(static_cast<size_t>(m), Rat(1));

  EchelonBasis basis;
  basis.insert(sparse_unit(ts.highest_index()), 0);
  size_t next = 0;
  while (next < basis.size()) {
    SparseVec v = basis.row(next).v;
    for (int g = 0; g < scheme->count(); ++g) basis.insert(ts.apply(g, ones, v), 0);
    ++next;
  }

  if (Int(static_cast<long>(basis.size())) != want)
    throw std::runtime_error("highest_weight_module: cyclic span has dim " + std::to_string(basis.size()) + ", expected " +
                             want.get_str());

  out.dim = static_cast<int>(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) {
    out.weights.push_back(ts.weight_of(basis.row(i).pivot));
    out.parities.push_back(static_cast<uint8_t>(ts.parity_of(basis.row(i).pivot)));
  }
  std::vector<std::pair<size_t, Rat>> coords;
  for (int g = 0; g < scheme->count(); ++g) {
    SparseMatrix act(out.dim, out.dim);
    for (int c = 0; c < out.dim; ++c) {
      SparseVec img = ts.apply(g, ones, basis.row(static_cast<size_t>(c)).v);
      SparseVec residual = basis.reduce_with_coords(std::move(img), coords);
      if (!residual.empty()) throw std::runtime_error("highest_weight_module: span not closed under action");
      std::sort(coords.begin(), coords.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [row, val] : coords) act.add(static_cast<int>(row), c, val);
    }
    out.action.push_back(std::move(act));
  }
  out.highest = 0;
  return out;
}

inline std::map<Weight, long> weight_character(const ModuleRep& m) {
  std::map<Weight, long> ch;
  for (const Weight& w : m.weights) ++ch[w];
  return ch;
}

struct PresentationRow {
  std::string relation;
  bool ok;
};

struct PresentationReport {
  std::vector<PresentationRow> rows;
  bool all_ok = true;

  void add(std::string rel, bool ok) {
    all_ok = all_ok && ok;
    rows.push_back({std::move(rel), ok});
  }
};

namespace detail {
inline SparseVec apply_module_gen(const ModuleRep& m, int g, const SparseVec& v) {
  std::map<uint32_t, Rat> acc;
  for (const auto& [idx, c] : v)
    for (const auto& [row, val] : m.action[static_cast<size_t>(g)].col[idx]) acc[static_cast<uint32_t>(row)] += c * val;
  return sparse_from_map(std::move(acc));
}

inline SparseVec apply_module_gen_power(const ModuleRep& m, int g, SparseVec v, long e) {
  for (long i = 0; i < e && !v.empty(); ++i) v = apply_module_gen(m, g, v);
  return v;
}
}  // namespace detail

/// Checks the defining relations of V(m d_1) on the highest vector: the
/// annihilation by n^+, the Cartan eigenvalues, the even simple-root power
/// relations, and the extra relation for gamma = 2 d_n with its tightness.
inline PresentationReport verify_presentation_relations(const ChevalleyBasis& cb, const ModuleRep& M, int m) {
  PresentationReport rep;
  const RootSystem& rs = cb.rs;
  const GeneratorScheme& s = *M.scheme;
  Weight lambda = Rat(m) * Weight::delta(rs.rank(), 0);
  SparseVec v = sparse_unit(static_cast<uint32_t>(M.highest));

  for (size_t i = 0; i < s.roots.size(); ++i) {
    SparseVec img = detail::apply_module_gen(M, s.find_xplus(s.roots[i]), v);
    rep.add("x+[" + s.roots[i].str() + "] v = 0", img.empty());
  }
  for (int i = 0; i < rs.rank(); ++i) {
    SparseVec img = detail::apply_module_gen(M, s.find({GenId::Cartan, i}), v);
    SparseVec expect = v;
    sparse_scale(expect, rs.pair_h(lambda, i));
    rep.add("h" + std::to_string(i + 1) + " v = lambda(h) v", img == expect);
  }
  for (int i = 0; i + 1 < rs.rank(); ++i) {  // even simple roots d_i - d_{i+1}
    long e = to_integer(rs.pair_h(lambda, i)).get_si() + 1;
    int g = s.find_xminus(rs.simple()[static_cast<size_t>(i)]);
    SparseVec img = detail::apply_module_gen_power(M, g, v, e);
    rep.add("(x-[" + rs.simple()[static_cast<size_t>(i)].str() + "])^" + std::to_string(e) + " v = 0", img.empty());
  }
  {
    const Root& gamma = rs.kac_root();
    long e = to_integer(rs.eval_coroot(lambda, gamma)).get_si();
    int g = s.find_xminus(gamma);
    SparseVec tight = detail::apply_module_gen_power(M, g, v, e);
    SparseVec img = detail::apply_module_gen(M, g, tight);
    rep.add("(x-[" + gamma.str() + "])^" + std::to_string(e + 1) + " v = 0", img.empty());
    rep.add("(x-[" + gamma.str() + "])^" + std::to_string(e) + " v != 0", e == 0 || !tight.empty());
  }
  return rep;
}

}  // namespace fusionflag
