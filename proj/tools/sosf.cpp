#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sosf/io.hpp"
#include "sosf/parallel.hpp"

using namespace sosf;
using nlohmann::json;

namespace {

constexpr const char* kSchema = "sosf-report/1";

std::string type_str(int r, int s, int n) {
  return "[" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(n) + "]";
}

json violations_json(const std::vector<formula::Violation>& violations) {
  json out = json::array();
  for (const auto& v : violations) {
    out.push_back(json{{"i", v.i},
                       {"j", v.j},
                       {"k", v.k},
                       {"l", v.l},
                       {"lhs", v.lhs.str()},
                       {"rhs", v.rhs.str()}});
  }
  return out;
}

void print_violations(const std::vector<formula::Violation>& violations, size_t limit) {
  for (size_t t = 0; t < violations.size() && t < limit; ++t) {
    const auto& v = violations[t];
    std::cout << "  (" << v.i << "," << v.j << "," << v.k << "," << v.l
              << "): lhs = " << v.lhs.str() << ", rhs = " << v.rhs.str() << "\n";
  }
}

int cmd_build(const std::string& type, const std::string& field_desc, const std::string& out_path) {
  formula::Formula f;
  if (type == "12x12x18") {
    f = formula::build_12_12_18(FieldSpec::parse(field_desc));
  } else if (type == "1x1x1" || type == "2x2x2" || type == "4x4x4" || type == "8x8x8") {
    f = formula::classical_fixture(type[0] - '0');
    FieldSpec spec = FieldSpec::parse(field_desc);
    if (!(spec == FieldSpec::rationals())) f = formula::specialize(f, spec);
  } else {
    throw Error("unknown --type '" + type + "' (supported: 12x12x18, 1x1x1, 2x2x2, 4x4x4, 8x8x8)");
  }
  io::write_formula(f, out_path);
  std::cout << "built " << type_str(f.r, f.s, f.n) << " over " << f.field.name() << " -> "
            << out_path << "\n";
  return 0;
}

int cmd_verify(const std::string& path, const std::string& mode, int jobs, int cap, bool as_json) {
  formula::Formula f = io::read_formula(path);
  bool run_criterion = mode == "criterion" || mode == "both";
  bool run_expansion = mode == "expand" || mode == "both";
  if (!run_criterion && !run_expansion) {
    throw Error("unknown --mode '" + mode + "' (expected criterion | expand | both)");
  }

  formula::VerifyReport crit, expn;
  if (run_criterion) crit = formula::verify_criterion(f, jobs, cap);
  if (run_expansion) expn = formula::verify_expansion(f, jobs, cap);
  bool pass = (!run_criterion || crit.pass) && (!run_expansion || expn.pass);

  if (as_json) {
    json out;
    out["schema"] = kSchema;
    out["command"] = "verify";
    out["type"] = {f.r, f.s, f.n};
    out["field"] = f.field.name();
    out["pass"] = pass;
    if (run_criterion) {
      out["criterion"] = json{{"pass", crit.pass},
                              {"equations", crit.equations},
                              {"violation_count", crit.violation_count},
                              {"violations", violations_json(crit.violations)}};
    }
    if (run_expansion) {
      out["expansion"] = json{{"pass", expn.pass},
                              {"monomials", expn.equations},
                              {"violation_count", expn.violation_count},
                              {"violations", violations_json(expn.violations)}};
    }
    std::cout << out.dump(2) << "\n";
    return pass ? 0 : 1;
  }

  std::cout << "formula " << type_str(f.r, f.s, f.n) << " over " << f.field.name() << "\n";
  if (run_criterion) {
    std::cout << "criterion: " << (crit.pass ? "pass" : "FAIL") << " (" << crit.equations
              << " equations, " << crit.violation_count << " violations)\n";
    if (!crit.pass) print_violations(crit.violations, 3);
  }
  if (run_expansion) {
    std::cout << "expansion: " << (expn.pass ? "pass" : "FAIL") << " (" << expn.equations
              << " monomials, " << expn.violation_count << " mismatches)\n";
    if (!expn.pass) print_violations(expn.violations, 3);
  }
  std::cout << "verdict: " << (pass ? "pass" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

int cmd_specialize(const std::string& path, const std::string& field_desc,
                   const std::string& out_path) {
  formula::Formula f = io::read_formula(path);
  formula::Formula g = formula::specialize(f, FieldSpec::parse(field_desc));
  io::write_formula(g, out_path);
  std::cout << "specialized " << type_str(g.r, g.s, g.n) << " to " << g.field.name() << " -> "
            << out_path << "\n";
  return 0;
}

int cmd_pad(const std::string& path, int n_new, const std::string& out_path) {
  formula::Formula f = io::read_formula(path);
  formula::Formula g = formula::pad(f, n_new);
  io::write_formula(g, out_path);
  std::cout << "padded " << type_str(f.r, f.s, f.n) << " to n = " << g.n << " -> " << out_path
            << "\n";
  return 0;
}

int cmd_templates(bool as_json) {
  quat::TemplateCheckReport grids = quat::check_templates();
  quat::LemmaCheckReport lemma = quat::check_lemma_identities();
  bool pass = grids.pass() && lemma.pass();

  if (as_json) {
    json families = json::array();
    for (const auto& fam : lemma.families) {
      families.push_back(json{{"family", fam.family},
                              {"checked", fam.checked},
                              {"failures", fam.failures}});
    }
    json out;
    out["schema"] = kSchema;
    out["command"] = "templates";
    out["literal_vs_formula"] = json{{"checked", grids.checked},
                                     {"mismatches", static_cast<long long>(grids.mismatches.size())}};
    out["identities"] = std::move(families);
    out["pass"] = pass;
    std::cout << out.dump(2) << "\n";
    return pass ? 0 : 1;
  }

  std::cout << "literal vs formula: " << (grids.checked - static_cast<long long>(grids.mismatches.size()))
            << "/" << grids.checked << "\n";
  for (const auto& fam : lemma.families) {
    std::cout << fam.family << ": " << (fam.checked - fam.failures) << "/" << fam.checked << "\n";
  }
  std::cout << "verdict: " << (pass ? "pass" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

int cmd_skeleton_verify(const std::string& sk_path, const std::string& gram_path, int jobs,
                        int cap, bool as_json) {
  skel::SkeletonArray sk = io::read_skeleton(sk_path);
  skel::GramTable g = io::read_gram_table(gram_path);
  skel::SkeletonVerifyReport report = skel::verify_skeleton(sk, g, jobs, cap);

  if (as_json) {
    json violations = json::array();
    for (const auto& v : report.violations) {
      violations.push_back(json{{"i", v.i}, {"j", v.j}, {"k", v.k}, {"l", v.l},
                                {"lhs", v.lhs}, {"rhs", v.rhs}});
    }
    json out;
    out["schema"] = kSchema;
    out["command"] = "skeleton-verify";
    out["rows"] = sk.rows;
    out["cols"] = sk.cols;
    out["pass"] = report.pass;
    out["equations"] = report.equations;
    out["violation_count"] = report.violation_count;
    out["violations"] = std::move(violations);
    std::cout << out.dump(2) << "\n";
    return report.pass ? 0 : 1;
  }

  std::cout << "skeleton " << sk.rows << "x" << sk.cols << "\n";
  std::cout << "criterion: " << (report.pass ? "pass" : "FAIL") << " (" << report.equations
            << " equations, " << report.violation_count << " violations)\n";
  for (size_t t = 0; t < report.violations.size() && t < 3; ++t) {
    const auto& v = report.violations[t];
    std::cout << "  (" << v.i << "," << v.j << "," << v.k << "," << v.l << "): lhs = " << v.lhs
              << ", rhs = " << v.rhs << "\n";
  }
  std::cout << "verdict: " << (report.pass ? "pass" : "FAIL") << "\n";
  return report.pass ? 0 : 1;
}

std::string template_list_str(const std::vector<skel::TemplateName>& names) {
  std::string out;
  for (size_t t = 0; t < names.size(); ++t) {
    if (t) out += ",";
    out += quat::template_name_str(names[t]);
  }
  return out;
}

int cmd_skeleton_search(const std::string& config_path, std::uint64_t budget, bool as_json) {
  skel::SearchConfig cfg =
      config_path.empty() ? skel::SearchConfig::defaults() : io::read_search_config(config_path);
  std::uint64_t space = skel::search_space_size(cfg);
  std::vector<skel::SearchHit> hits = skel::search_skeletons(cfg, budget);

  if (as_json) {
    json hits_json = json::array();
    for (const auto& hit : hits) {
      json gram_choice = json::array();
      for (int v : hit.gram_choice) gram_choice.push_back(v);
      hits_json.push_back(json{{"diag", template_list_str(hit.diag_choice)},
                               {"offdiag", template_list_str(hit.offdiag_choice)},
                               {"gram", std::move(gram_choice)},
                               {"skeleton", io::skeleton_to_json(hit.skeleton)},
                               {"gram_table", io::gram_table_to_json(hit.gram)}});
    }
    json out;
    out["schema"] = kSchema;
    out["command"] = "skeleton-search";
    out["candidates"] = space;
    out["hits"] = std::move(hits_json);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "search space: " << space << " candidates\n";
  for (size_t t = 0; t < hits.size(); ++t) {
    const auto& hit = hits[t];
    std::cout << "hit " << (t + 1) << ": diag = " << template_list_str(hit.diag_choice)
              << "; offdiag = " << template_list_str(hit.offdiag_choice) << "; gram = (";
    for (size_t v = 0; v < hit.gram_choice.size(); ++v) {
      if (v) std::cout << ",";
      std::cout << hit.gram_choice[v];
    }
    std::cout << ")\n";
  }
  std::cout << "hits: " << hits.size() << "/" << space << "\n";
  return 0;
}

int cmd_gram_check(const std::string& path, bool as_json) {
  gram::GramMatrix g = io::read_gram_matrix(path);
  Rational det = determinant(g);
  gram::PsdResult res = gram::psd_check(g);

  if (as_json) {
    json witness = json::array();
    for (const Rational& x : res.witness) witness.push_back(x.get_str());
    json out;
    out["schema"] = kSchema;
    out["command"] = "gram-check";
    out["k"] = g.dim();
    out["det"] = det.get_str();
    out["psd"] = res.psd;
    if (!res.psd) {
      out["witness"] = std::move(witness);
      out["witness_value"] = res.witness_value.get_str();
    }
    std::cout << out.dump(2) << "\n";
    return res.psd ? 0 : 1;
  }

  std::cout << "gram matrix " << g.dim() << "x" << g.dim() << " over " << g.field().name() << "\n";
  std::cout << "det = " << det.get_str() << "\n";
  if (res.psd) {
    std::cout << "psd: PSD\n";
    return 0;
  }
  std::cout << "psd: NotPSD\n";
  std::cout << "witness: (";
  for (size_t t = 0; t < res.witness.size(); ++t) {
    if (t) std::cout << ", ";
    std::cout << res.witness[t].get_str();
  }
  std::cout << ") with x^T G x = " << res.witness_value.get_str() << "\n";
  return 1;
}

int cmd_gram_realize(const std::string& path, const std::string& field_desc,
                     const std::string& out_path) {
  gram::GramMatrix g = io::read_gram_matrix(path);
  gram::Realisation real = gram::realize_with_i(g, FieldSpec::parse(field_desc));
  json doc = io::realisation_to_json(real);
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    io::write_json_file(doc, out_path);
    std::cout << "realised " << g.dim() << "x" << g.dim() << " gram over " << real.field.name()
              << " in ambient dimension " << real.ambient_dim << " -> " << out_path << "\n";
  }
  return 0;
}

int cmd_hopf(long long r, long long s, long long n, bool as_json) {
  obstruct::TripleVerdict verdict = obstruct::hopf_check(r, s, n);

  if (as_json) {
    json out;
    out["schema"] = kSchema;
    out["command"] = "hopf";
    out["type"] = {r, s, n};
    out["pass"] = verdict.hopf_pass;
    out["failing_k"] = verdict.failing_k;
    std::cout << out.dump(2) << "\n";
    return verdict.hopf_pass ? 0 : 1;
  }

  long long lo = std::max(n - s + 1, 0LL), hi = std::min(r - 1, n);
  std::cout << "hopf " << type_str(static_cast<int>(r), static_cast<int>(s), static_cast<int>(n))
            << ": ";
  if (verdict.hopf_pass) {
    if (lo > hi) {
      std::cout << "pass (empty k range)\n";
    } else {
      std::cout << "pass (k range " << lo << ".." << hi << " all even)\n";
    }
    return 0;
  }
  std::cout << "FAIL (odd binomials at k =";
  for (long long k : verdict.failing_k) std::cout << " " << k;
  std::cout << ")\n";
  return 1;
}

int cmd_rho(long long n) {
  std::cout << "rho(" << n << ") = " << obstruct::hurwitz_radon(n) << "\n";
  return 0;
}

int cmd_facts(int r, int s, const std::string& ledger_path, bool as_json) {
  obstruct::FactLedger ledger = io::read_ledger(ledger_path);
  auto slice = ledger.facts(r, s);

  // A constructive record bounds N from above over its field class; a cited
  // inadmissible [r,s,m] bounds N >= m + 1 over its class (padding upward).
  const obstruct::FactRecord* upper = nullptr;
  const obstruct::FactRecord* lower = nullptr;
  for (const auto& rec : slice) {
    if (rec.status == obstruct::FactStatus::AdmissibleConstructive) {
      if (!upper || rec.n < upper->n) upper = &rec;
    } else {
      if (!lower || rec.n > lower->n) lower = &rec;
    }
  }
  bool separated = upper && lower && upper->n < lower->n + 1;

  if (as_json) {
    json records = json::array();
    for (const auto& rec : slice) {
      json r_json;
      r_json["type"] = {rec.r, rec.s, rec.n};
      r_json["field_class"] = rec.field_class;
      r_json["status"] = obstruct::fact_status_str(rec.status);
      r_json["citation"] = rec.citation;
      if (!rec.backing_file.empty()) r_json["backing"] = rec.backing_file;
      records.push_back(std::move(r_json));
    }
    json out;
    out["schema"] = kSchema;
    out["command"] = "facts";
    out["r"] = r;
    out["s"] = s;
    out["records"] = std::move(records);
    if (separated) {
      out["separation"] = json{{"upper", upper->n},
                               {"upper_class", upper->field_class},
                               {"lower", lower->n + 1},
                               {"lower_class", lower->field_class},
                               {"lower_cited", true}};
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "facts [" << r << "," << s << "]:";
  if (slice.empty()) {
    std::cout << " no records\n";
    return 0;
  }
  std::cout << "\n";
  for (const auto& rec : slice) {
    std::cout << "  " << type_str(rec.r, rec.s, rec.n) << " class = " << rec.field_class
              << ", status = " << obstruct::fact_status_str(rec.status);
    if (!rec.backing_file.empty()) std::cout << ", backing = " << rec.backing_file;
    if (rec.status == obstruct::FactStatus::InadmissibleCited) {
      std::cout << ", citation = " << rec.citation;
    }
    std::cout << "\n";
  }
  if (separated) {
    std::cout << "separation: N <= " << upper->n << " over " << upper->field_class << "; N >= "
              << (lower->n + 1) << " over " << lower->field_class
              << " (cited, not computed): " << upper->n << " < " << (lower->n + 1) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact constructor, verifier and search tool for bilinear sum-of-squares"
               " composition formulas"};
  app.require_subcommand(1);

  std::string type = "12x12x18", field_desc = "qi", in_path, out_path, mode = "both";
  std::string sk_path, gram_path, config_path;
  std::string default_ledger = std::getenv("SOSF_LEDGER") ? std::getenv("SOSF_LEDGER")
                                                          : "data/ledger.json";
  std::string ledger_path = default_ledger;
  int jobs = 0;  // 0 = available parallelism
  int cap = 32;
  int n_new = 0;
  std::uint64_t budget = std::uint64_t{1} << 20;
  long long r = 0, s = 0, n = 0;
  bool as_json = false, check_flag = false;

  CLI::App* build = app.add_subcommand("build", "construct a formula and write it as JSON");
  build->add_option("--type", type, "formula type: 12x12x18 | 1x1x1 | 2x2x2 | 4x4x4 | 8x8x8");
  build->add_option("--field", field_desc, "coefficient field: qq | qi | fp:P | fpi:P")
      ->required();
  build->add_option("-o,--out", out_path, "output file")->required();

  CLI::App* verify = app.add_subcommand("verify", "check a formula file");
  verify->add_option("file", in_path, "formula JSON file")->required();
  verify->add_option("--mode", mode, "criterion | expand | both (default both)");
  verify->add_option("--jobs", jobs, "worker threads (default: available parallelism)");
  verify->add_option("--cap", cap, "max violations kept in the report");
  verify->add_flag("--json", as_json, "machine-readable report");

  CLI::App* specialize = app.add_subcommand("specialize", "apply the Z[i] -> K homomorphism");
  specialize->add_option("file", in_path, "formula JSON file")->required();
  specialize->add_option("--field", field_desc, "target field")->required();
  specialize->add_option("-o,--out", out_path, "output file")->required();

  CLI::App* pad = app.add_subcommand("pad", "append zero bilinear forms");
  pad->add_option("file", in_path, "formula JSON file")->required();
  pad->add_option("--n", n_new, "new length n")->required();
  pad->add_option("-o,--out", out_path, "output file")->required();

  CLI::App* templates = app.add_subcommand("templates", "sign template identity suite");
  templates->add_flag("--check", check_flag, "run the literal-vs-formula and identity checks");
  templates->add_flag("--json", as_json, "machine-readable report");

  CLI::App* skeleton = app.add_subcommand("skeleton", "formal sign-skeleton operations");
  skeleton->require_subcommand(1);
  CLI::App* sk_verify = skeleton->add_subcommand("verify", "check a skeleton against a Gram table");
  sk_verify->add_option("--skeleton", sk_path, "skeleton JSON file")->required();
  sk_verify->add_option("--gram", gram_path, "Gram table JSON file")->required();
  sk_verify->add_option("--jobs", jobs, "worker threads");
  sk_verify->add_option("--cap", cap, "max violations kept in the report");
  sk_verify->add_flag("--json", as_json, "machine-readable report");
  CLI::App* sk_search = skeleton->add_subcommand("search", "enumerate skeleton/Gram candidates");
  sk_search->add_option("--config", config_path, "search configuration JSON file");
  sk_search->add_option("--budget", budget, "candidate budget");
  sk_search->add_flag("--json", as_json, "machine-readable report");

  CLI::App* gram_cmd = app.add_subcommand("gram", "exact Gram matrix operations");
  gram_cmd->require_subcommand(1);
  CLI::App* g_check = gram_cmd->add_subcommand("check", "determinant and exact PSD decision");
  g_check->add_option("file", in_path, "Gram matrix JSON file")->required();
  g_check->add_flag("--json", as_json, "machine-readable report");
  CLI::App* g_realize = gram_cmd->add_subcommand("realize", "realise by vectors over a field with sqrt(-1)");
  g_realize->add_option("file", in_path, "Gram matrix JSON file")->required();
  g_realize->add_option("--field", field_desc, "target field")->required();
  g_realize->add_option("-o,--out", out_path, "output file (stdout JSON when omitted)");

  CLI::App* hopf = app.add_subcommand("hopf", "binomial parity condition for [r,s,n]");
  hopf->add_option("r", r, "r")->required();
  hopf->add_option("s", s, "s")->required();
  hopf->add_option("n", n, "n")->required();
  hopf->add_flag("--json", as_json, "machine-readable report");

  CLI::App* rho = app.add_subcommand("rho", "Hurwitz-Radon function");
  rho->add_option("n", n, "n")->required();

  CLI::App* facts = app.add_subcommand("facts", "recorded admissibility facts for (r, s)");
  facts->add_option("r", r, "r")->required();
  facts->add_option("s", s, "s")->required();
  facts->add_option("--ledger", ledger_path, "ledger JSON file (default: $SOSF_LEDGER or data/ledger.json)");
  facts->add_flag("--json", as_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return cmd_build(type, field_desc, out_path);
    if (verify->parsed()) return cmd_verify(in_path, mode, jobs, cap, as_json);
    if (specialize->parsed()) return cmd_specialize(in_path, field_desc, out_path);
    if (pad->parsed()) return cmd_pad(in_path, n_new, out_path);
    if (templates->parsed()) {
      if (!check_flag) {
        std::cerr << "templates: nothing to do (use --check)\n";
        return 2;
      }
      return cmd_templates(as_json);
    }
    if (skeleton->parsed()) {
      if (sk_verify->parsed()) return cmd_skeleton_verify(sk_path, gram_path, jobs, cap, as_json);
      if (sk_search->parsed()) return cmd_skeleton_search(config_path, budget, as_json);
    }
    if (gram_cmd->parsed()) {
      if (g_check->parsed()) return cmd_gram_check(in_path, as_json);
      if (g_realize->parsed()) return cmd_gram_realize(in_path, field_desc, out_path);
    }
    if (hopf->parsed()) return cmd_hopf(r, s, n, as_json);
    if (rho->parsed()) return cmd_rho(n);
    if (facts->parsed()) return cmd_facts(static_cast<int>(r), static_cast<int>(s), ledger_path, as_json);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
