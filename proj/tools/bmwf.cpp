#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "bmwf/contraction.hpp"
#include "bmwf/io.hpp"

using namespace bmwf;

namespace {

enum Exit { kPass = 0, kFail = 1, kInvalid = 2, kInternal = 3 };

struct RunConfig {
  int n = 2;
  std::string q = kDefaultQ.str(), nu = kDefaultNu.str(), omega = "5", c_param;
  std::string method = "fusion", suite = "all", contents = "quantum", tableau;
  std::string cache_dir, output;
  int order = kDefaultContractionOrder, jobs = 1;
  bool starred = false, structure = false;
  std::uint64_t seed = 0;
};

void emit(const RunConfig& cfg, const Json& j) {
  std::string text = j.dump(2) + "\n";
  if (cfg.output.empty())
    std::cout << text;
  else
    write_file_atomic(cfg.output, text);
}

ParamSet params_of(const RunConfig& cfg) {
  if (cfg.n < 1 || cfg.n > kMaxStrands)
    throw Error(ErrorCode::CapExceeded, "n must be in 1.." + std::to_string(kMaxStrands));
  return make_params(Rational::parse(cfg.q), Rational::parse(cfg.nu), cfg.n);
}

Json params_json(const ParamSet& p) {
  return {{"q", p.q.str()}, {"nu", p.nu.str()}, {"c", p.c.str()}, {"mu", p.mu.str()}};
}

template <class F>
void parallel_for(std::size_t count, int jobs, F&& body) {
  std::vector<std::exception_ptr> errs(count);
  std::vector<std::thread> pool;
  std::size_t J = static_cast<std::size_t>(std::max(1, jobs));
  for (std::size_t w = 0; w < J; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < count; k += J) try {
          body(k);
        } catch (...) {
          errs[k] = std::current_exception();
        }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

int cmd_idempotents(const RunConfig& cfg) {
  ParamSet p = params_of(cfg);
  if (cfg.method != "fusion" && cfg.method != "jm") throw Error(ErrorCode::Parse, "unknown method " + cfg.method);
  if (cfg.starred && cfg.method != "fusion") throw Error(ErrorCode::Parse, "--starred applies to fusion only");
  auto ctx = build_context(cfg.n, p);
  std::string method = cfg.method == "jm" ? "jm" : (cfg.starred ? "fusion-starred" : "fusion");

  std::vector<UpDownTableau> tabs;
  if (cfg.tableau.empty())
    tabs = enumerate_tableaux(cfg.n);
  else
    tabs.push_back(parse_tableau(cfg.tableau));
  for (const auto& t : tabs)
    if (t.length() != cfg.n) throw Error(ErrorCode::DomainMismatch, "tableau " + encode_tableau(t) + " has wrong length");

  IdempotentCache cache(cfg.cache_dir);
  std::vector<Idempotent> all;
  bool complete = cfg.tableau.empty();
  if (complete)
    if (auto hit = cache.load(*ctx, p, method)) all = std::move(*hit);
  if (all.empty()) {
    all.resize(tabs.size());
    parallel_for(tabs.size(), cfg.jobs, [&](std::size_t k) {
      all[k] = cfg.method == "jm" ? jm_oracle_idempotent(*ctx, p, tabs[k])
                                  : fusion_idempotent(*ctx, p, tabs[k], cfg.starred);
    });
    if (complete) cache.store(p, method, all);
  }

  bool ok = true;
  Json records = Json::array();
  std::vector<Json> flags(all.size());
  parallel_for(all.size(), cfg.jobs, [&](std::size_t k) {
    const auto& e = all[k];
    bool idem = e.element * e.element == e.element;
    bool eig = true;
    for (int j = 1; j <= cfg.n; ++j)
      eig = eig && jm_element(*ctx, j) * e.element == e.element.scaled(e.contents[static_cast<std::size_t>(j - 1)]);
    flags[k] = {{"idempotent", idem}, {"jm_eigenvalues", eig}};
  });
  for (std::size_t k = 0; k < all.size(); ++k) {
    Json r = idempotent_to_json(all[k]);
    r["verified"] = flags[k];
    ok = ok && flags[k]["idempotent"].get<bool>() && flags[k]["jm_eigenvalues"].get<bool>();
    records.push_back(r);
  }
  Json out = {{"n", cfg.n}, {"params", params_json(p)}, {"method", method}, {"records", records}};
  if (complete) {
    bool orth = true;
    RElement sum(*ctx);
    for (std::size_t a = 0; a < all.size(); ++a) {
      sum += all[a].element;
      for (std::size_t b = 0; b < all.size(); ++b)
        if (a != b) orth = orth && (all[a].element * all[b].element).is_zero();
    }
    bool one = sum == unit(*ctx);
    out["orthogonal"] = orth;
    out["sum_is_one"] = one;
    ok = ok && orth && one;
  }
  out["pass"] = ok;
  emit(cfg, out);
  return ok ? kPass : kFail;
}

int cmd_verify(const RunConfig& cfg) {
  ParamSet p = params_of(cfg);
  Rational omega = Rational::parse(cfg.omega);
  const std::vector<std::string> known{"relations", "fusion", "reflection", "hecke", "contraction"};
  std::vector<std::string> chosen;
  if (cfg.suite == "all")
    chosen = known;
  else if (std::find(known.begin(), known.end(), cfg.suite) != known.end())
    chosen = {cfg.suite};
  else
    throw Error(ErrorCode::Parse, "unknown suite " + cfg.suite);

  Json reports = Json::array();
  bool ok = true;
  for (const auto& s : chosen) {
    SuiteReport r;
    if (s == "relations") r = suite_relations(cfg.n, p);
    if (s == "fusion") r = suite_fusion(cfg.n, p, cfg.seed, cfg.jobs);
    if (s == "reflection") r = suite_reflection(cfg.n, p, cfg.seed);
    if (s == "hecke") r = suite_hecke(cfg.n, p);
    if (s == "contraction") r = suite_contraction(cfg.n, omega, cfg.seed);
    std::cerr << (r.pass() ? "PASS " : "FAIL ") << r.name << ": " << r.checks << " checks, " << r.failures
              << " failures" << (r.first_failure.empty() ? "" : "; first: " + r.first_failure) << "\n";
    ok = ok && r.pass();
    reports.push_back(report_to_json(r));
  }
  emit(cfg, {{"n", cfg.n}, {"params", params_json(p)}, {"seed", cfg.seed}, {"reports", reports}, {"pass", ok}});
  return ok ? kPass : kFail;
}

int cmd_tableaux(const RunConfig& cfg) {
  if (cfg.n < 1 || cfg.n > kMaxStrands) throw Error(ErrorCode::CapExceeded, "n out of range");
  auto tabs = enumerate_tableaux(cfg.n);
  Json rows = Json::array();
  std::optional<ParamSet> p;
  Rational omega = Rational::parse(cfg.omega);
  if (cfg.contents == "quantum")
    p = params_of(cfg);
  else if (cfg.contents != "classical" && cfg.contents != "t-classical")
    throw Error(ErrorCode::Parse, "unknown contents flavor " + cfg.contents);
  for (const auto& t : tabs) {
    std::vector<Rational> cs =
        p ? quantum_contents(t, *p)
          : classical_contents(t, omega, cfg.contents == "classical" ? ContentFlavor::Classical : ContentFlavor::TClassical);
    Json c = Json::array(), steps = Json::array();
    for (const auto& x : cs) c.push_back(x.str());
    for (const auto& s : t.steps) steps.push_back(encode_step(s));
    rows.push_back({{"tableau", encode_tableau(t)}, {"steps", steps}, {"contents", c}});
  }
  Json out = {{"n", cfg.n}, {"flavor", cfg.contents}};
  if (p)
    out["params"] = params_json(*p);
  else
    out["omega"] = omega.str();
  out["count"] = tabs.size();
  out["tableaux"] = rows;
  emit(cfg, out);
  return kPass;
}

int cmd_symmetrizers(const RunConfig& cfg) {
  ParamSet p = params_of(cfg);
  auto ctx = build_context(cfg.n, p);
  std::string row, col, colshape;
  for (int k = 1; k <= cfg.n; ++k) {
    colshape += k > 1 ? ",1" : "1";
    row += (k > 1 ? ";" : "") + std::to_string(k);
    col += (k > 1 ? ";" : "") + colshape;
  }
  auto S_chain = symmetrizer_chain(*ctx, p), A_chain = antisymmetrizer_chain(*ctx, p);
  auto S_y = symmetrizer_yproduct(*ctx, p), A_y = antisymmetrizer_yproduct(*ctx, p);
  auto S_f = fusion_idempotent(*ctx, p, parse_tableau(row)).element;
  auto A_f = fusion_idempotent(*ctx, p, parse_tableau(col)).element;
  bool s_eq = S_chain == S_y && S_y == S_f, a_eq = A_chain == A_y && A_y == A_f;
  Json out = {{"n", cfg.n},
              {"params", params_json(p)},
              {"symmetrizer", {{"tableau", row}, {"chain", element_to_json(S_chain)}, {"y_product", element_to_json(S_y)}, {"equal", s_eq}}},
              {"antisymmetrizer", {{"tableau", col}, {"chain", element_to_json(A_chain)}, {"y_product", element_to_json(A_y)}, {"equal", a_eq}}},
              {"pass", s_eq && a_eq}};
  emit(cfg, out);
  return s_eq && a_eq ? kPass : kFail;
}

int cmd_params_suggest(const RunConfig& cfg) {
  if (cfg.n < 1 || cfg.n > kMaxStrands) throw Error(ErrorCode::CapExceeded, "n out of range");
  ParamSet p = suggest_params(cfg.n);
  Json out = params_json(p);
  out["certified_n"] = p.certified_n;
  emit(cfg, out);
  return kPass;
}

int cmd_export(const RunConfig& cfg) {
  ParamSet p = params_of(cfg);
  auto ctx = build_context(cfg.n, p);
  Json basis = Json::array();
  for (int b = 0; b < ctx->dim(); ++b) {
    Json word = Json::array(), pairs = Json::array();
    for (const auto& l : ctx->basis_word(b)) word.push_back(letter_name(l));
    for (const auto& [x, y] : ctx->diagram(b).pairs()) pairs.push_back({x, y});
    basis.push_back({{"word", word}, {"diagram", pairs}});
  }
  Json out = {{"algebra", "bmw"}, {"n", cfg.n}, {"params", params_json(p)}, {"dimension", ctx->dim()}, {"basis", basis}};
  if (cfg.structure) {
    // basis word times each generator, as sparse rows over basis indices
    Json table = Json::array();
    for (int b = 0; b < ctx->dim(); ++b) {
      Json row = Json::object();
      for (LetterKind k : {LetterKind::T, LetterKind::U, LetterKind::K})
        for (int i = 1; i < cfg.n; ++i) {
          Letter l{k, i};
          Json terms = Json::array();
          for (const auto& [j, c] : ctx->right(b, l)) terms.push_back({j, c.str()});
          row[letter_name(l)] = terms;
        }
      table.push_back(row);
    }
    out["right_multiplication"] = table;
  }
  emit(cfg, out);
  return kPass;
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::NotGeneric:
    case ErrorCode::Parse:
    case ErrorCode::CapExceeded:
    case ErrorCode::DomainMismatch:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::NegativeValuation:
      return kInvalid;
    default:
      return kInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Primitive idempotents of Birman-Murakami-Wenzl algebras by the fusion procedure"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* c) {
    c->add_option("--n", cfg.n, "number of strands")->capture_default_str();
    c->add_option("--q", cfg.q, "q as p/q")->capture_default_str();
    c->add_option("--nu", cfg.nu, "nu as p/q")->capture_default_str();
    c->add_option("--output", cfg.output, "write JSON here instead of stdout");
  };

  auto* idem = app.add_subcommand("idempotents", "primitive idempotents for every up-down tableau");
  common(idem);
  idem->add_option("--method", cfg.method, "fusion or jm")->capture_default_str();
  idem->add_flag("--starred", cfg.starred, "use the q -> -1/q variant of the fusion formula");
  idem->add_option("--tableau", cfg.tableau, "single tableau, e.g. 1;2;2,1");
  idem->add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();
  idem->add_option("--cache-dir", cfg.cache_dir, "cache directory (BMWF_CACHE overrides)");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  common(verify);
  verify->add_option("--suite", cfg.suite, "relations, fusion, reflection, hecke, contraction or all")->capture_default_str();
  verify->add_option("--omega", cfg.omega, "Brauer loop value")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  verify->add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();

  auto* tab = app.add_subcommand("tableaux", "list up-down tableaux with contents");
  common(tab);
  tab->add_option("--contents", cfg.contents, "quantum, classical or t-classical")->capture_default_str();
  tab->add_option("--omega", cfg.omega, "Brauer loop value")->capture_default_str();

  auto* sym = app.add_subcommand("symmetrizers", "symmetrizer and antisymmetrizer in chain and Y-product form");
  common(sym);

  auto* par = app.add_subcommand("params", "parameter utilities");
  auto* suggest = par->add_subcommand("suggest", "find q, nu passing the genericity checklist");
  suggest->add_option("--n", cfg.n, "number of strands")->capture_default_str();
  suggest->add_option("--output", cfg.output, "write JSON here instead of stdout");
  par->require_subcommand(1);

  auto* exp = app.add_subcommand("export", "export the BMW basis and optionally its multiplication table");
  common(exp);
  exp->add_flag("--structure", cfg.structure, "include basis-times-generator products");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kInvalid;
  }

  try {
    if (*idem) return cmd_idempotents(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*tab) return cmd_tableaux(cfg);
    if (*sym) return cmd_symmetrizers(cfg);
    if (*suggest) return cmd_params_suggest(cfg);
    if (*exp) return cmd_export(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
