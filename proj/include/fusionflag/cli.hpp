#pragma once

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fusionflag/serialize.hpp"

namespace fusionflag::cli {

constexpr const char* kSchema = "fusionflag/1";

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void write_output(const std::string& path, const std::string& content, std::ostream& fallback) {
  if (path.empty()) {
    fallback << content;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open output file: " + path);
  os << content;
  if (!os) throw IoError("write failed: " + path);
}

inline std::vector<long> parse_ints(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size()) throw CLI::ValidationError("bad integer list: " + s);
    out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError("empty integer list");
  return out;
}

inline EvalParams parse_eval(const std::string& s) {
  std::vector<Rat> z;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) z.push_back(rat_from_string(tok));
  return EvalParams(std::move(z));
}

inline Weight weight_from_ints(int n, const std::vector<long>& coords) {
  if (static_cast<int>(coords.size()) != n) throw CLI::ValidationError("weight needs exactly n coordinates");
  std::vector<Rat> c(coords.begin(), coords.end());
  return Weight(std::move(c));
}

// ---------------------------------------------------------------------------
// Verify suites.  Each returns rows {name, ok, detail}; overall ok is the
// conjunction.

struct SuiteResult {
  Json rows = Json::array();
  bool ok = true;

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    ok = ok && pass;
    Json row;
    row["name"] = name;
    row["ok"] = pass;
    if (!detail.empty()) row["detail"] = detail;
    rows.push_back(std::move(row));
  }
};

inline std::vector<IntTuple> partitions_up_to(long total_max, long parts_max) {
  std::vector<IntTuple> out;
  IntTuple cur;
  auto rec = [&](auto&& self, long remaining, long max_part) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<long>(cur.size()) == parts_max) return;
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, total_max, total_max);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline SuiteResult suite_chevalley(int n_max, unsigned seed, const std::string& dump_path) {
  SuiteResult res;
  std::mt19937 rng(seed);
  for (int n = 1; n <= n_max; ++n) {
    ChevalleyBasis cb = matrix_realization(n);
    ChevalleyReport rep = verify_chevalley(cb);
    res.add("chevalley n=" + std::to_string(n), rep.ok(),
            rep.ok() ? std::to_string(rep.constants.size()) + " structure constants, all integral"
                     : rep.violations.front());
    // sampled super-Jacobi residual on homogeneous triples
    std::vector<const SuperMatrix*> all;
    for (const auto& x : cb.xp) all.push_back(&x);
    for (const auto& x : cb.xm) all.push_back(&x);
    for (const auto& x : cb.h) all.push_back(&x);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    bool jacobi_ok = true;
    for (int trial = 0; trial < 20 && jacobi_ok; ++trial) {
      const SuperMatrix &x = *all[pick(rng)], &y = *all[pick(rng)], &z = *all[pick(rng)];
      auto par = [](const SuperMatrix& m) { return m.parity() == MatParity::Odd ? 1 : 0; };
      int px = par(x), py = par(y), pz = par(z);
      SuperMatrix lhs = bracket(x, bracket(y, z));
      SuperMatrix rhs = bracket(bracket(x, y), z);
      SuperMatrix mid = bracket(y, bracket(x, z));
      if (px * py % 2) mid = Rat(-1) * mid;
      jacobi_ok = (lhs == rhs + mid);
      (void)pz;
    }
    res.add("super-jacobi sampled n=" + std::to_string(n), jacobi_ok);
    if (!dump_path.empty() && n == n_max) {
      std::ostringstream os;
      dump_constants_csv(rep, os);
      write_output(dump_path, os.str(), std::cout);
    }
  }
  return res;
}

inline SuiteResult suite_presentation(int n, int m_max, const IntTuple& partition, long bound_multiplier) {
  SuiteResult res;
  ChevalleyBasis cb = matrix_realization(n);
  for (int m = 0; m <= m_max; ++m) {
    ModuleRep M = highest_weight_module(cb, m);
    PresentationReport rep = verify_presentation_relations(cb, M, m);
    res.add("presentation n=" + std::to_string(n) + " m=" + std::to_string(m), rep.all_ok);
  }
  // K on the super fusion, I and N on the even fusion
  std::vector<ModuleRep> factors, even_factors;
  for (long mj : partition) {
    factors.push_back(highest_weight_module(cb, static_cast<int>(mj)));
    even_factors.push_back(sym_power_even(cb, static_cast<int>(mj)));
  }
  FusionFiltration F = fusion_filtration(factors, EvalParams::standard(partition.size()));
  FusionFiltration FE = fusion_filtration(even_factors, EvalParams::standard(partition.size()));
  RelationBounds bounds = RelationBounds::defaults(partition).scaled(bound_multiplier);
  auto krep = check_relations(F, relation_set_garland(F.space->scheme(), cb.rs, "K", partition, bounds));
  res.add("K" + tuple_str(partition) + " on super fusion", krep.all_zero);
  auto wrep = check_relations(F, relation_set_weyl(F.space->scheme(), cb.rs, tuple_sum(partition), partition.size()));
  res.add("Weyl(" + std::to_string(tuple_sum(partition)) + ") on super fusion", wrep.all_zero);
  auto irep = check_relations(FE, relation_set_garland(FE.space->scheme(), cb.rs, "I", partition, bounds));
  res.add("I" + tuple_str(partition) + " on even fusion", irep.all_zero);
  auto nrep = check_relations(FE, relation_set_garland(FE.space->scheme(), cb.rs, "N", partition, bounds));
  res.add("N" + tuple_str(partition) + " on even fusion", nrep.all_zero);
  Int even_prod = 1;
  for (long mj : partition) even_prod *= even_dimension(n, mj);
  res.add("even fusion dim = prod even dims", Int(static_cast<long>(FE.total_dim)) == even_prod);
  return res;
}

inline SuiteResult suite_main(int n, const IntTuple& partition) {
  SuiteResult res;
  ChevalleyBasis cb = matrix_realization(n);
  std::vector<ModuleRep> factors;
  for (long mj : partition) factors.push_back(highest_weight_module(cb, static_cast<int>(mj)));
  FusionFiltration F = fusion_filtration(factors, EvalParams::standard(partition.size()));
  QCharacter actual = graded_character(F);
  QCharacter pred = predicted_qcharacter(cb, partition);
  res.add("predicted q-character equals fusion q-character, m=" + tuple_str(partition), pred == actual);
  res.add("dimension identity " + tuple_str(partition), dimension_identity(partition, n));
  return res;
}

inline SuiteResult suite_weyl(int k_max_super, int k_max_even) {
  SuiteResult res;
  ChevalleyBasis cb = matrix_realization(1);
  ModuleRep v1 = highest_weight_module(cb, 1);
  ModuleRep e1 = sym_power_even(cb, 1);
  for (int k = 1; k <= k_max_super; ++k) {
    std::vector<ModuleRep> f(static_cast<size_t>(k), v1);
    FusionFiltration F = fusion_filtration(f, EvalParams::standard(static_cast<size_t>(k)));
    size_t want = 1;
    for (int i = 0; i < k; ++i) want *= 3;
    bool dim_ok = F.total_dim == want;
    auto rep = check_relations(F, relation_set_weyl(F.space->scheme(), cb.rs, k, k));
    res.add("super V(1)^*" + std::to_string(k) + " dim 3^k", dim_ok, "dim " + std::to_string(F.total_dim));
    res.add("Weyl(" + std::to_string(k) + ") relations", rep.all_zero);
  }
  for (int k = 1; k <= k_max_even; ++k) {
    std::vector<ModuleRep> f(static_cast<size_t>(k), e1);
    FusionFiltration F = fusion_filtration(f, EvalParams::standard(static_cast<size_t>(k)));
    res.add("even V(1)^*" + std::to_string(k) + " dim 2^k", F.total_dim == (static_cast<size_t>(1) << k),
            "dim " + std::to_string(F.total_dim));
  }
  return res;
}

inline SuiteResult suite_demazure(long ell_max, long n_max) {
  SuiteResult res;
  ChevalleyBasis cb = matrix_realization(1);
  for (long ell = 1; ell <= ell_max; ++ell)
    for (long nn = 1; nn <= n_max; ++nn) {
      // n = (q-1) ell + m with 0 < m <= ell
      long m = nn % ell == 0 ? ell : nn % ell;
      long q = (nn - m) / ell + 1;
      std::vector<ModuleRep> factors(static_cast<size_t>(q - 1), highest_weight_module(cb, static_cast<int>(ell)));
      factors.push_back(highest_weight_module(cb, static_cast<int>(m)));
      FusionFiltration F = fusion_filtration(factors, EvalParams::standard(static_cast<size_t>(q)));
      size_t want = 1;
      for (long i = 0; i < q - 1; ++i) want *= static_cast<size_t>(2 * ell + 1);
      want *= static_cast<size_t>(2 * m + 1);
      auto rep = check_relations(F, relation_set_demazure(F.space->scheme(), cb.rs, ell, nn, static_cast<long>(q)));
      res.add("D(" + std::to_string(ell) + "," + std::to_string(nn) + ") = V(" + std::to_string(ell) + ")^*" +
                  std::to_string(q - 1) + "*V(" + std::to_string(m) + ")",
              rep.all_zero && F.total_dim == want, "dim " + std::to_string(F.total_dim));
    }
  return res;
}

inline SuiteResult suite_truncated(long n_max, long N_max) {
  SuiteResult res;
  ChevalleyBasis cb = matrix_realization(1);
  for (long N = 1; N <= N_max; ++N)
    for (long nn = 0; nn <= n_max; ++nn) {
      long k = nn / N, j = nn % N;
      std::vector<ModuleRep> factors;
      for (long i = 0; i < N - j; ++i) factors.push_back(highest_weight_module(cb, static_cast<int>(k)));
      for (long i = 0; i < j; ++i) factors.push_back(highest_weight_module(cb, static_cast<int>(k + 1)));
      FusionFiltration F = fusion_filtration(factors, EvalParams::standard(static_cast<size_t>(N)));
      size_t want = 1;
      for (const ModuleRep& f : factors) want *= static_cast<size_t>(f.dim);
      auto rep = check_relations(F, relation_set_truncweyl(F.space->scheme(), cb.rs, nn, N, N));
      res.add("W(" + std::to_string(nn) + "," + std::to_string(N) + ") = V(" + std::to_string(k) + ")^*" +
                  std::to_string(N - j) + "*V(" + std::to_string(k + 1) + ")^*" + std::to_string(j),
              rep.all_zero && F.total_dim == want, "dim " + std::to_string(F.total_dim));
    }
  return res;
}

inline SuiteResult suite_poset() {
  SuiteResult res;
  RootSystem rs1(1);
  for (long m = 1; m <= 6; ++m)
    for (int k = 1; k <= 3; ++k) {
      auto rep = monotonicity_scan(rs1, Rat(m) * Weight::delta(1, 0), k);
      res.add("poset n=1 lambda=" + std::to_string(m) + "d1 k=" + std::to_string(k), rep.violations.empty(),
              std::to_string(rep.tuples) + " tuples");
    }
  RootSystem rs2(2);
  for (const Weight& lam : {weight_from_ints(2, {2, 0}), weight_from_ints(2, {1, 1})}) {
    auto rep = monotonicity_scan(rs2, lam, 2);
    res.add("poset n=2 lambda=" + lam.str() + " k=2", rep.violations.empty(), std::to_string(rep.tuples) + " tuples");
  }
  return res;
}

inline SuiteResult suite_lemma_half_integer() {
  SuiteResult res;
  for (int n = 1; n <= 3; ++n) {
    RootSystem rs(n);
    bool all_ok = true;
    long checked = 0;
    std::vector<long> coords(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, long hi) -> void {
      if (pos == n) {
        Weight lam = weight_from_ints(n, coords);
        all_ok = all_ok && check_half_integer(rs, lam).all_ok;
        ++checked;
        return;
      }
      for (long v = 0; v <= hi; ++v) {
        coords[static_cast<size_t>(pos)] = v;
        self(self, pos + 1, v);
      }
    };
    rec(rec, 0, 3);
    res.add("half-integer lemma n=" + std::to_string(n), all_ok, std::to_string(checked) + " dominant weights");
  }
  return res;
}

// ---------------------------------------------------------------------------

inline int run(std::vector<std::string> args) {
  CLI::App app{"representations of osp(1|2n), fusion products and fusion flags over exact rationals"};
  app.require_subcommand(1);

  std::string out_path, format = "json", dump_constants_path;
  long n = 1, m = 0, k = 2, seed = 0, bound_multiplier = 1;
  std::string partition_str, weight_str, theorem;
  std::vector<std::string> z_strs;
  bool even_part = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "output path (default: stdout)");
    cmd->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* dim_cmd = app.add_subcommand("dim", "Kac dimension of V(m d1) (or of a general dominant weight)");
  dim_cmd->add_option("--n", n, "rank")->required();
  dim_cmd->add_option("--m", m, "highest weight multiple of d1");
  dim_cmd->add_option("--weight", weight_str, "comma-separated dominant coordinates");
  add_common(dim_cmd);

  CLI::App* char_cmd = app.add_subcommand("char", "weight character of V(m d1)");
  char_cmd->add_option("--n", n, "rank")->required();
  char_cmd->add_option("--m", m, "highest weight multiple of d1")->required();
  char_cmd->add_flag("--even", even_part, "use the even-part module instead");
  add_common(char_cmd);

  CLI::App* fusion_cmd = app.add_subcommand("fusion", "fusion filtration and graded q-character");
  fusion_cmd->add_option("--n", n, "rank")->required();
  fusion_cmd->add_option("--partition", partition_str, "comma-separated partition")->required();
  fusion_cmd->add_option("--z", z_strs, "evaluation points, e.g. 0,1 (repeatable)");
  fusion_cmd->add_flag("--even", even_part, "fuse even-part modules");
  add_common(fusion_cmd);

  CLI::App* flags_cmd = app.add_subcommand("flags", "flag decomposition table");
  flags_cmd->add_option("--n", n, "rank")->required();
  flags_cmd->add_option("--partition", partition_str, "comma-separated partition")->required();
  add_common(flags_cmd);

  CLI::App* poset_cmd = app.add_subcommand("poset", "dimension monotonicity scan over P+(lambda,k)");
  poset_cmd->add_option("--n", n, "rank")->required();
  poset_cmd->add_option("--m", m, "lambda = m d1");
  poset_cmd->add_option("--weight", weight_str, "comma-separated dominant coordinates");
  poset_cmd->add_option("--k", k, "tuple length")->required();
  add_common(poset_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd
      ->add_option("--theorem", theorem,
                   "chevalley|presentation|main|weyl|demazure|truncated|poset|lemma-half-integer")
      ->required();
  verify_cmd->add_option("--n", n, "rank (suite-specific default)");
  verify_cmd->add_option("--partition", partition_str, "partition parameter");
  verify_cmd->add_option("--seed", seed, "seed for sampled checks");
  verify_cmd->add_option("--bound-multiplier", bound_multiplier, "stress factor for relation truncation bounds");
  verify_cmd->add_option("--dump-constants", dump_constants_path, "write the structure constant table as CSV");
  add_common(verify_cmd);

  std::vector<const char*> argv;
  argv.push_back("fusionflag");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help();
      return 0;
    }
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (dim_cmd->parsed()) {
      RootSystem rs(static_cast<int>(n));
      Weight lam = weight_str.empty() ? Rat(m) * Weight::delta(static_cast<int>(n), 0)
                                      : weight_from_ints(static_cast<int>(n), parse_ints(weight_str));
      write_output(out_path, kac_dimension(rs, lam).get_str() + "\n", std::cout);
      return 0;
    }

    if (char_cmd->parsed()) {
      ChevalleyBasis cb = matrix_realization(static_cast<int>(n));
      ModuleRep M = even_part ? sym_power_even(cb, static_cast<int>(m)) : highest_weight_module(cb, static_cast<int>(m));
      QCharacter q;
      for (const Weight& w : M.weights) q.add(w, 0, 1);
      if (format == "csv") {
        write_output(out_path, csv_qcharacter(q), std::cout);
      } else {
        Json j;
        j["schema"] = kSchema;
        j["module"] = json_module(M);
        j["character"] = json_qcharacter(q);
        write_output(out_path, j.dump(2) + "\n", std::cout);
      }
      return 0;
    }

    if (fusion_cmd->parsed()) {
      ChevalleyBasis cb = matrix_realization(static_cast<int>(n));
      IntTuple part = parse_ints(partition_str);
      std::vector<ModuleRep> factors;
      for (long mj : part)
        factors.push_back(even_part ? sym_power_even(cb, static_cast<int>(mj)) : highest_weight_module(cb, static_cast<int>(mj)));
      std::vector<EvalParams> tuples;
      for (const std::string& zs : z_strs) tuples.push_back(parse_eval(zs));
      if (tuples.empty()) tuples.push_back(EvalParams::standard(part.size()));
      for (const EvalParams& z : tuples)
        if (z.size() != part.size()) throw CLI::ValidationError("each --z needs one point per partition entry");

      Json fusions = Json::array();
      QCharacter first;
      bool independent = true;
      std::string csv;
      for (size_t i = 0; i < tuples.size(); ++i) {
        FusionFiltration F = fusion_filtration(factors, tuples[i]);
        QCharacter q = graded_character(F);
        if (i == 0)
          first = q;
        else
          independent = independent && (q == first);
        Json jf;
        jf["z"] = tuples[i].str();
        jf["total_dim"] = F.total_dim;
        jf["graded_dims"] = F.graded_dims;
        jf["character"] = json_qcharacter(q);
        fusions.push_back(std::move(jf));
        if (format == "csv" && i == 0) csv = csv_qcharacter(q);
      }
      if (format == "csv") {
        write_output(out_path, csv, std::cout);
      } else {
        Json j;
        j["schema"] = kSchema;
        j["partition"] = part;
        j["fusions"] = std::move(fusions);
        if (tuples.size() > 1) j["independent"] = independent;
        write_output(out_path, j.dump(2) + "\n", std::cout);
      }
      return independent ? 0 : 1;
    }

    if (flags_cmd->parsed()) {
      IntTuple part = parse_ints(partition_str);
      auto pieces = flag_pieces(part);
      bool identity = dimension_identity(part, static_cast<int>(n));
      if (format == "csv") {
        write_output(out_path, csv_flag_table(pieces, static_cast<int>(n)), std::cout);
      } else {
        Json j;
        j["schema"] = kSchema;
        j["partition"] = part;
        j["pieces"] = json_flag_table(pieces, static_cast<int>(n));
        j["dimension_identity"] = identity;
        write_output(out_path, j.dump(2) + "\n", std::cout);
      }
      return identity ? 0 : 1;
    }

    if (poset_cmd->parsed()) {
      RootSystem rs(static_cast<int>(n));
      Weight lam = weight_str.empty() ? Rat(m) * Weight::delta(static_cast<int>(n), 0)
                                      : weight_from_ints(static_cast<int>(n), parse_ints(weight_str));
      PosetScanReport rep = monotonicity_scan(rs, lam, static_cast<int>(k));
      if (format == "csv") {
        write_output(out_path, csv_poset_report(rep), std::cout);
      } else {
        Json j;
        j["schema"] = kSchema;
        j["report"] = json_poset_report(rep);
        write_output(out_path, j.dump(2) + "\n", std::cout);
      }
      return rep.violations.empty() ? 0 : 1;
    }

    if (verify_cmd->parsed()) {
      SuiteResult res;
      IntTuple part = partition_str.empty() ? IntTuple{2, 1} : parse_ints(partition_str);
      if (theorem == "chevalley") {
        res = suite_chevalley(verify_cmd->count("--n") ? static_cast<int>(n) : 3, static_cast<unsigned>(seed),
                              dump_constants_path);
      } else if (theorem == "presentation") {
        res = suite_presentation(static_cast<int>(n), 3, part, bound_multiplier);
      } else if (theorem == "main") {
        res = suite_main(static_cast<int>(n), part);
      } else if (theorem == "weyl") {
        res = suite_weyl(4, 6);
      } else if (theorem == "demazure") {
        res = suite_demazure(3, 6);
      } else if (theorem == "truncated") {
        res = suite_truncated(6, 4);
      } else if (theorem == "poset") {
        res = suite_poset();
      } else if (theorem == "lemma-half-integer") {
        res = suite_lemma_half_integer();
      } else {
        std::cerr << "usage error: unknown suite '" << theorem << "'\n";
        return 2;
      }
      Json j;
      j["schema"] = kSchema;
      j["suite"] = theorem;
      j["results"] = res.rows;
      j["ok"] = res.ok;
      write_output(out_path, j.dump(2) + "\n", std::cout);
      return res.ok ? 0 : 1;
    }
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace fusionflag::cli
