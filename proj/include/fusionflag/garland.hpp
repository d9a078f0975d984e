#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "fusionflag/flags.hpp"
#include "fusionflag/fusion.hpp"

namespace fusionflag {

/// Solutions of sum b_k = r, sum k b_k = s with b_k = 0 for k < p.
struct CompositionSet {
  long r = 0, s = 0, p = 0;
  std::vector<std::vector<long>> elements;  // each of length s+1: (b_0..b_s)

  bool empty() const { return elements.empty(); }
};

inline CompositionSet composition_set(long r, long s, long p) {
  if (r < 0 || s < 0 || p < 0) throw std::invalid_argument("composition_set: negative argument");
  CompositionSet cs{r, s, p, {}};
  std::vector<long> b(static_cast<size_t>(s) + 1, 0);
  // choose b_k from k = s down to p; b_0 (when p == 0) absorbs leftover count
  auto rec = [&](auto&& self, long k, long rem_r, long rem_s) -> void {
    if (rem_s < 0 || rem_r < 0) return;
    if (k < std::max(p, 1L)) {
      if (rem_s != 0) return;
      if (p == 0) {
        b[0] = rem_r;
        cs.elements.push_back(b);
        b[0] = 0;
      } else if (rem_r == 0) {
        cs.elements.push_back(b);
      }
      return;
    }
    long max_b = std::min(rem_r, rem_s / k);
    for (long v = max_b; v >= 0; --v) {
      b[static_cast<size_t>(k)] = v;
      self(self, k - 1, rem_r - v, rem_s - k * v);
    }
    b[static_cast<size_t>(k)] = 0;
  };
  rec(rec, s, r, s);
  std::sort(cs.elements.begin(), cs.elements.end());
  return cs;
}

/// One factor (x (x) t^tpow)^exp of a monomial; divided-power denominators
/// live in the term coefficient.
struct GarlandFactor {
  int gen;
  long tpow;
  long exp;
};

struct GarlandTerm {
  Rat coeff;
  std::vector<GarlandFactor> factors;
};

/// Formal rational combination of ordered current-algebra monomials of a
/// common total t-degree.
struct GarlandElement {
  std::vector<GarlandTerm> terms;
  long t_degree = 0;
  std::string descriptor;

  bool zero() const { return terms.empty(); }
};

/// x^-_alpha(r,s) with support restricted to t-powers >= p:
/// sum over the composition set of prod_k (x^-_alpha (x) t^k)^{(b_k)}.
inline GarlandElement garland_element(const GeneratorScheme& scheme, const Root& alpha, long r, long s, long p) {
  GarlandElement g;
  g.t_degree = s;
  g.descriptor = "x-[" + alpha.str() + "](" + std::to_string(r) + "," + std::to_string(s) + ";p=" + std::to_string(p) + ")";
  int gen = scheme.find_xminus(alpha);
  for (const auto& b : composition_set(r, s, p).elements) {
    GarlandTerm term;
    term.coeff = 1;
    for (long k = 0; k < static_cast<long>(b.size()); ++k) {
      if (b[static_cast<size_t>(k)] == 0) continue;
      term.coeff /= Rat(factorial(static_cast<unsigned long>(b[static_cast<size_t>(k)])));
      term.factors.push_back({gen, k, b[static_cast<size_t>(k)]});
    }
    g.terms.push_back(std::move(term));
  }
  return g;
}

struct PowerRelation {
  int gen;
  long tpow;
  long exponent;
  std::string descriptor;
};

struct CartanRelation {
  int gen;  // index of h_i in the scheme
  long tpow;
  Rat expected;  // eigenvalue at tpow = 0, must vanish in gr for tpow >= 1
  std::string descriptor;
};

struct RelationSet {
  std::string family;
  std::string params;
  std::vector<GarlandElement> garland;
  std::vector<PowerRelation> powers;
  std::vector<CartanRelation> cartans;

  size_t size() const { return garland.size() + powers.size() + cartans.size(); }
};

struct RelationBounds {
  long r_max, s_max, p_max;

  static RelationBounds defaults(const IntTuple& m) {
    long total = tuple_sum(m);
    long k = static_cast<long>(m.size());
    return {total + 1, k * (total + 1), k};
  }

  RelationBounds scaled(long mult) const { return {r_max * mult, s_max * mult, p_max * mult}; }
};

namespace detail {

inline long coroot_mult(const RootSystem& rs, const Root& alpha) {
  return to_integer(rs.eval_coroot(Weight::delta(rs.rank(), 0), alpha)).get_si();  // d1(h_alpha)
}

inline std::string garland_key(const GarlandElement& g) {
  std::string key;
  for (const auto& t : g.terms) {
    key += "|" + t.coeff.get_str();
    for (const auto& f : t.factors) key += ";" + std::to_string(f.gen) + "," + std::to_string(f.tpow) + "," + std::to_string(f.exp);
  }
  return key;
}

}  // namespace detail

/// The Garland relation families.  K(m) and N(m) take all truncation
/// parameters p with s+r >= 1 + r p + sum_{j>p} m_j d1(h_alpha); I(m) takes
/// the unrestricted elements subject to the same inequality for some p.
/// s = 0 entries are the divided integrability powers (x^-_alpha (x) 1)^{(r)}.
inline RelationSet relation_set_garland(const GeneratorScheme& scheme, const RootSystem& rs, const std::string& family,
                                        const IntTuple& m, const RelationBounds& bounds) {
  if (family != "K" && family != "I" && family != "N") throw std::invalid_argument("unknown garland family " + family);
  RelationSet out;
  out.family = family;
  out.params = tuple_str(m);
  long k = static_cast<long>(m.size());
  std::set<std::string> seen;
  auto tail = [&m, k](long p) {  // sum_{j >= p+1} m_j (1-based j)
    long s = 0;
    for (long j = p + 1; j <= k; ++j) s += m[static_cast<size_t>(j - 1)];
    return s;
  };
  for (const Root& alpha : rs.positive_even()) {
    long d = detail::coroot_mult(rs, alpha);
    for (long r = 1; r <= bounds.r_max; ++r)
      for (long s = 0; s <= bounds.s_max; ++s) {
        auto holds = [&](long p) { return s + r >= 1 + r * p + tail(p) * d; };
        if (family == "I") {
          bool any = false;
          for (long p = 0; p <= bounds.p_max && !any; ++p) any = holds(p);
          if (!any) continue;
          GarlandElement g = garland_element(scheme, alpha, r, s, 0);
          if (g.zero()) continue;
          if (seen.insert(alpha.str() + detail::garland_key(g)).second) out.garland.push_back(std::move(g));
        } else {
          for (long p = 0; p <= bounds.p_max; ++p) {
            if (!holds(p)) continue;
            GarlandElement g = garland_element(scheme, alpha, r, s, p);
            if (g.zero()) continue;
            if (seen.insert(alpha.str() + detail::garland_key(g)).second) out.garland.push_back(std::move(g));
          }
        }
      }
  }
  return out;
}

/// Local Weyl module relations for highest weight total*d1: n^+[t] and the
/// Cartan currents vanish, (x^-_alpha (x) 1)^{lambda(h_alpha)+1} = 0 for even
/// alpha.  t-powers r < k suffice: on a k-point evaluation product the
/// operators x (x) t^r with r >= k are combinations of lower powers of the
/// same x, and the implied memberships are weaker.
inline RelationSet relation_set_weyl(const GeneratorScheme& scheme, const RootSystem& rs, long total, long k) {
  RelationSet out;
  out.family = "Weyl";
  out.params = std::to_string(total);
  Weight lambda = Rat(total) * Weight::delta(rs.rank(), 0);
  for (size_t i = 0; i < scheme.roots.size(); ++i)
    for (long r = 0; r < k; ++r)
      out.powers.push_back({scheme.find_xplus(scheme.roots[i]), r, 1, "x+[" + scheme.roots[i].str() + "] (x) t^" + std::to_string(r)});
  for (int i = 0; i < rs.rank(); ++i)
    for (long r = 0; r < k; ++r)
      out.cartans.push_back({scheme.find({GenId::Cartan, i}), r, r == 0 ? rs.pair_h(lambda, i) : Rat(0),
                             "h" + std::to_string(i + 1) + " (x) t^" + std::to_string(r)});
  for (const Root& alpha : rs.positive_even()) {
    long e = to_integer(rs.eval_coroot(lambda, alpha)).get_si() + 1;
    out.powers.push_back(
        {scheme.find_xminus(alpha), 0, e, "(x-[" + alpha.str() + "] (x) 1)^" + std::to_string(e)});
  }
  return out;
}

/// Truncated Weyl module: Weyl relations plus g (x) t^r = 0 for all basis
/// elements and r >= N (emitted up to r_cap; higher powers are trivially zero
/// in gr once r-1 exceeds the top filtration degree).
inline RelationSet relation_set_truncweyl(const GeneratorScheme& scheme, const RootSystem& rs, long total, long N, long k,
                                          long r_cap = -1) {
  RelationSet out = relation_set_weyl(scheme, rs, total, k);
  out.family = "TruncWeyl";
  out.params = std::to_string(total) + ",N=" + std::to_string(N);
  if (r_cap < 0) r_cap = k * total + 1;
  for (long r = N; r <= r_cap; ++r) {
    for (size_t i = 0; i < scheme.roots.size(); ++i) {
      out.powers.push_back({scheme.find_xplus(scheme.roots[i]), r, 1, "x+[" + scheme.roots[i].str() + "] (x) t^" + std::to_string(r)});
      out.powers.push_back({scheme.find_xminus(scheme.roots[i]), r, 1, "x-[" + scheme.roots[i].str() + "] (x) t^" + std::to_string(r)});
    }
    for (int i = 0; i < rs.rank(); ++i)
      out.cartans.push_back({scheme.find({GenId::Cartan, i}), r, Rat(0), "h" + std::to_string(i + 1) + " (x) t^" + std::to_string(r)});
  }
  return out;
}

/// Demazure-type module D(ell, total) for osp(1,2): n^+[t] and Cartan current
/// relations plus (x^-_alpha (x) t^r)^{max(0, total - ell r) + 1} = 0.
inline RelationSet relation_set_demazure(const GeneratorScheme& scheme, const RootSystem& rs, long ell, long total, long k,
                                         long r_cap = -1) {
  if (ell < 1) throw std::invalid_argument("demazure: level must be >= 1");
  RelationSet out;
  out.family = "Demazure";
  out.params = "l=" + std::to_string(ell) + ",n=" + std::to_string(total);
  Weight lambda = Rat(total) * Weight::delta(rs.rank(), 0);
  for (size_t i = 0; i < scheme.roots.size(); ++i)
    for (long r = 0; r < k; ++r)
      out.powers.push_back({scheme.find_xplus(scheme.roots[i]), r, 1, "x+[" + scheme.roots[i].str() + "] (x) t^" + std::to_string(r)});
  for (int i = 0; i < rs.rank(); ++i)
    for (long r = 0; r < k; ++r)
      out.cartans.push_back({scheme.find({GenId::Cartan, i}), r, r == 0 ? rs.pair_h(lambda, i) : Rat(0),
                             "h" + std::to_string(i + 1) + " (x) t^" + std::to_string(r)});
  if (r_cap < 0) r_cap = k * total + 1;
  for (const Root& alpha : rs.positive_even())
    for (long r = 0; r <= r_cap; ++r) {
      long e = std::max(0L, total - ell * r) + 1;
      out.powers.push_back({scheme.find_xminus(alpha), r, e,
                            "(x-[" + alpha.str() + "] (x) t^" + std::to_string(r) + ")^" + std::to_string(e)});
    }
  return out;
}

/// Named relation-set front end.
inline RelationSet relation_set(const GeneratorScheme& scheme, const RootSystem& rs, const std::string& family,
                                const IntTuple& m_or_params, const RelationBounds* bounds = nullptr, long k_override = -1,
                                long extra = -1) {
  if (family == "K" || family == "I" || family == "N") {
    RelationBounds b = bounds ? *bounds : RelationBounds::defaults(m_or_params);
    return relation_set_garland(scheme, rs, family, m_or_params, b);
  }
  long k = k_override;
  if (family == "Weyl") return relation_set_weyl(scheme, rs, m_or_params.at(0), k);
  if (family == "TruncWeyl") return relation_set_truncweyl(scheme, rs, m_or_params.at(0), extra, k);
  if (family == "Demazure") return relation_set_demazure(scheme, rs, extra, m_or_params.at(0), k);
  throw std::invalid_argument("unknown relation family " + family);
}

/// Applies a Garland element to a vector of known filtration degree and
/// returns the representative of the image in the associated graded piece
/// (reduced modulo V^{degree-1}).  Monomial factors act right to left; an odd
/// generator with exponent >= 2 is malformed.
inline SparseVec apply_operator(const FusionFiltration& F, const GarlandElement& g, const SparseVec& v, int v_degree = 0) {
  const GeneratorScheme& scheme = F.space->scheme();
  SparseVec acc;
  for (const GarlandTerm& term : g.terms) {
    SparseVec w = v;
    for (auto it = term.factors.rbegin(); it != term.factors.rend() && !w.empty(); ++it) {
      if (scheme.odd[static_cast<size_t>(it->gen)] && it->exp > 1)
        throw std::domain_error("apply_operator: odd generator raised to power " + std::to_string(it->exp));
      std::vector<Rat> coef = F.slot_coefficients(it->tpow);
      for (long e = 0; e < it->exp && !w.empty(); ++e) w = F.space->apply(it->gen, coef, w);
    }
    sparse_axpy(acc, term.coeff, w);
  }
  int degree = v_degree + static_cast<int>(g.t_degree);
  return F.reduce_mod(std::move(acc), degree - 1);
}

struct RelationCheckRow {
  std::string descriptor;
  long degree;
  bool zero;
  bool beyond_top;  // trivially zero: degree-1 at or above the top filtration degree
};

struct RelationCheckReport {
  std::string family, params;
  std::vector<RelationCheckRow> rows;
  bool all_zero = true;

  void add(std::string desc, long degree, bool zero, bool beyond) {
    all_zero = all_zero && zero;
    rows.push_back({std::move(desc), degree, zero, beyond});
  }
};

/// Applies every generator of the relation set to the cyclic vector of the
/// filtration and reports which images fail to vanish in the associated
/// graded space.
inline RelationCheckReport check_relations(const FusionFiltration& F, const RelationSet& S) {
  RelationCheckReport rep;
  rep.family = S.family;
  rep.params = S.params;
  for (const GarlandElement& g : S.garland) {
    long deg = g.t_degree;
    if (deg - 1 >= F.top_degree) {
      rep.add(g.descriptor, deg, true, true);
      continue;
    }
    SparseVec img = apply_operator(F, g, F.cyclic, 0);
    rep.add(g.descriptor, deg, img.empty(), false);
  }
  for (const PowerRelation& p : S.powers) {
    long deg = p.tpow * p.exponent;
    if (deg - 1 >= F.top_degree) {
      rep.add(p.descriptor, deg, true, true);
      continue;
    }
    std::vector<Rat> coef = F.slot_coefficients(p.tpow);
    SparseVec w = F.cyclic;
    for (long e = 0; e < p.exponent && !w.empty(); ++e) w = F.space->apply(p.gen, coef, w);
    rep.add(p.descriptor, deg, F.vanishes_in_gr(w, static_cast<int>(deg)), false);
  }
  for (const CartanRelation& c : S.cartans) {
    if (c.tpow - 1 >= F.top_degree && !(c.tpow == 0)) {
      rep.add(c.descriptor, c.tpow, true, true);
      continue;
    }
    std::vector<Rat> coef = F.slot_coefficients(c.tpow);
    SparseVec w = F.space->apply(c.gen, coef, F.cyclic);
    if (c.tpow == 0) sparse_axpy(w, -c.expected, F.cyclic);
    rep.add(c.descriptor, c.tpow, F.vanishes_in_gr(w, static_cast<int>(c.tpow)), false);
  }
  return rep;
}

struct SurjectionReport {
  IntTuple m, nn;
  bool preceq_ok = false;
  Int dim_m = 0, dim_n = 0;
  RelationCheckReport relations;
  bool ok() const { return preceq_ok && dim_m <= dim_n && relations.all_zero; }
};

/// Witnesses the surjection V(n_1 d1)*...* -> V(m_1 d1)*... along m preceq n:
/// the generators of K(n) must annihilate the cyclic vector of the fusion
/// built from m.
inline SurjectionReport check_surjection_order(const ChevalleyBasis& cb, const IntTuple& m, const IntTuple& nn,
                                               const RelationBounds* bounds = nullptr) {
  if (m.size() != nn.size()) throw std::invalid_argument("check_surjection_order: tuples must have equal length");
  const RootSystem& rs = cb.rs;
  int n = rs.rank();
  auto as_weights = [n](const IntTuple& t) {
    WeightTuple w;
    for (long v : t) w.push_back(Rat(v) * Weight::delta(n, 0));
    return w;
  };
  SurjectionReport rep;
  rep.m = m;
  rep.nn = nn;
  rep.preceq_ok = preceq(rs, as_weights(m), as_weights(nn));
  if (!rep.preceq_ok) throw std::invalid_argument("check_surjection_order: tuples are not comparable (m preceq n fails)");
  rep.dim_m = 1;
  rep.dim_n = 1;
  for (long v : m) rep.dim_m *= kac_dimension(rs, Rat(v) * Weight::delta(n, 0));
  for (long v : nn) rep.dim_n *= kac_dimension(rs, Rat(v) * Weight::delta(n, 0));

  std::vector<ModuleRep> factors;
  for (long v : m) factors.push_back(highest_weight_module(cb, static_cast<int>(v)));
  FusionFiltration F = fusion_filtration(std::move(factors), EvalParams::standard(m.size()));
  RelationBounds b = bounds ? *bounds : RelationBounds::defaults(nn);
  RelationSet K = relation_set_garland(F.space->scheme(), rs, "K", nn, b);
  rep.relations = check_relations(F, K);
  return rep;
}

}  // namespace fusionflag
