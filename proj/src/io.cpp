#include "sosf/io.hpp"

#include <fstream>

namespace sosf::io {

namespace {

Rational rational_from_json(const json& j, const char* what) {
  std::string text;
  if (j.is_string()) {
    text = j.get<std::string>();
  } else if (j.is_number_integer()) {
    text = std::to_string(j.get<long long>());
  } else {
    throw ParseError(std::string(what) + ": expected a rational string, got " + j.dump());
  }
  Rational q;
  if (q.set_str(text, 10) != 0) {
    throw ParseError(std::string(what) + ": bad rational '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw ParseError(std::string(what) + ": zero denominator in '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string field_kind_str(FieldKind kind) {
  switch (kind) {
    case FieldKind::Rationals: return "QQ";
    case FieldKind::GaussianRationals: return "QI";
    case FieldKind::PrimeField: return "FP";
    case FieldKind::PrimeFieldWithI: return "FPI";
  }
  return "?";
}

}  // namespace

json field_to_json(const FieldSpec& spec) {
  json j;
  j["kind"] = field_kind_str(spec.kind());
  if (spec.p() != 0) j["p"] = spec.p();
  return j;
}

FieldSpec field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw ParseError("field: expected {\"kind\": ...}, got " + j.dump());
  }
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "QQ") return FieldSpec::rationals();
  if (kind == "QI") return FieldSpec::gaussian_rationals();
  if (kind == "FP" || kind == "FPI") {
    if (!j.contains("p")) throw ParseError("field: kind " + kind + " requires \"p\"");
    std::int64_t p = j.at("p").get<std::int64_t>();
    return kind == "FP" ? FieldSpec::prime_field(p) : FieldSpec::prime_field_with_i(p);
  }
  throw ParseError("field: unknown kind '" + kind + "'");
}

json scalar_to_json(const Scalar& s) {
  switch (s.field().kind()) {
    case FieldKind::Rationals:
    case FieldKind::PrimeField:
      return s.first().get_str();
    case FieldKind::GaussianRationals:
      return json{{"re", s.first().get_str()}, {"im", s.second().get_str()}};
    case FieldKind::PrimeFieldWithI:
      return json{{"a", s.first().get_str()}, {"b", s.second().get_str()}};
  }
  throw Error("unknown field kind");
}

Scalar scalar_from_json(const json& j, const FieldSpec& spec) {
  switch (spec.kind()) {
    case FieldKind::Rationals:
    case FieldKind::PrimeField:
      return Scalar::of_rational(spec, rational_from_json(j, "scalar"));
    case FieldKind::GaussianRationals: {
      if (!j.is_object()) return Scalar::of_rational(spec, rational_from_json(j, "scalar"));
      return Scalar::of_pair(spec, rational_from_json(j.at("re"), "scalar re"),
                             rational_from_json(j.at("im"), "scalar im"));
    }
    case FieldKind::PrimeFieldWithI: {
      if (!j.is_object()) return Scalar::of_rational(spec, rational_from_json(j, "scalar"));
      return Scalar::of_pair(spec, rational_from_json(j.at("a"), "scalar a"),
                             rational_from_json(j.at("b"), "scalar b"));
    }
  }
  throw Error("unknown field kind");
}

json formula_to_json(const formula::Formula& f) {
  json coeffs = json::array();
  for (int i = 0; i < f.r; ++i) {
    json row = json::array();
    for (int j = 0; j < f.s; ++j) {
      json vec = json::array();
      for (int alpha = 0; alpha < f.n; ++alpha) vec.push_back(scalar_to_json(f.v(i, j, alpha)));
      row.push_back(std::move(vec));
    }
    coeffs.push_back(std::move(row));
  }
  json out;
  out["r"] = f.r;
  out["s"] = f.s;
  out["n"] = f.n;
  out["field"] = field_to_json(f.field);
  out["coeffs"] = std::move(coeffs);
  return out;
}

formula::Formula formula_from_json(const json& j) {
  for (const char* key : {"r", "s", "n", "field", "coeffs"}) {
    if (!j.contains(key)) throw ParseError(std::string("formula: missing field \"") + key + "\"");
  }
  int r = j.at("r").get<int>();
  int s = j.at("s").get<int>();
  int n = j.at("n").get<int>();
  if (r < 1 || s < 1 || n < 1) throw ParseError("formula: r, s, n must be positive");
  FieldSpec field = field_from_json(j.at("field"));
  const json& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != r) {
    throw ParseError("formula: coeffs must be an array of r = " + std::to_string(r) + " rows");
  }
  formula::Formula f = formula::Formula::zeros(r, s, n, field);
  for (int i = 0; i < r; ++i) {
    const json& row = coeffs.at(static_cast<size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != s) {
      throw ParseError("formula: row " + std::to_string(i + 1) + " must have s = " +
                       std::to_string(s) + " vectors");
    }
    for (int jj = 0; jj < s; ++jj) {
      const json& vec = row.at(static_cast<size_t>(jj));
      if (!vec.is_array() || static_cast<int>(vec.size()) != n) {
        throw ParseError("formula: vector at (" + std::to_string(i + 1) + "," +
                         std::to_string(jj + 1) + ") must have length n = " + std::to_string(n));
      }
      for (int alpha = 0; alpha < n; ++alpha) {
        f.v(i, jj, alpha) = scalar_from_json(vec.at(static_cast<size_t>(alpha)), field);
      }
    }
  }
  return f;
}

json skeleton_to_json(const skel::SkeletonArray& sk) {
  json cells = json::array();
  for (int i = 0; i < sk.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < sk.cols; ++j) row.push_back(sk.at(i, j).str());
    cells.push_back(std::move(row));
  }
  json out;
  out["r"] = sk.rows;
  out["s"] = sk.cols;
  out["cells"] = std::move(cells);
  return out;
}

skel::SkeletonArray skeleton_from_json(const json& j) {
  for (const char* key : {"r", "s", "cells"}) {
    if (!j.contains(key)) throw ParseError(std::string("skeleton: missing field \"") + key + "\"");
  }
  skel::SkeletonArray sk;
  sk.rows = j.at("r").get<int>();
  sk.cols = j.at("s").get<int>();
  if (sk.rows < 1 || sk.cols < 1) throw ParseError("skeleton: r, s must be positive");
  const json& cells = j.at("cells");
  if (!cells.is_array() || static_cast<int>(cells.size()) != sk.rows) {
    throw ParseError("skeleton: cells must have r rows");
  }
  for (int i = 0; i < sk.rows; ++i) {
    const json& row = cells.at(static_cast<size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != sk.cols) {
      throw ParseError("skeleton: row " + std::to_string(i + 1) + " must have s cells");
    }
    for (int jj = 0; jj < sk.cols; ++jj) {
      sk.cells.push_back(skel::SignedSymbol::parse(row.at(static_cast<size_t>(jj)).get<std::string>()));
    }
  }
  return sk;
}

json gram_table_to_json(const skel::GramTable& g) {
  json pairs = json::array();
  for (const auto& [key, v] : g.pairs()) {
    pairs.push_back(json{{"a", key.first.str()}, {"b", key.second.str()}, {"v", v}});
  }
  json out;
  out["orthogonal_default"] = g.orthogonal_default();
  out["pairs"] = std::move(pairs);
  return out;
}

skel::GramTable gram_table_from_json(const json& j) {
  if (!j.contains("pairs")) throw ParseError("gram table: missing field \"pairs\"");
  bool orth = j.value("orthogonal_default", false);
  skel::GramTable g(orth);
  for (const json& entry : j.at("pairs")) {
    g.set(skel::FormalSymbol::parse(entry.at("a").get<std::string>()),
          skel::FormalSymbol::parse(entry.at("b").get<std::string>()),
          entry.at("v").get<int>());
  }
  return g;
}

json gram_matrix_to_json(const gram::GramMatrix& g) {
  json entries = json::array();
  for (int a = 0; a < g.dim(); ++a) {
    json row = json::array();
    for (int b = 0; b < g.dim(); ++b) row.push_back(scalar_to_json(g.at(a, b)));
    entries.push_back(std::move(row));
  }
  json out;
  out["field"] = field_to_json(g.field());
  out["k"] = g.dim();
  out["entries"] = std::move(entries);
  return out;
}

gram::GramMatrix gram_matrix_from_json(const json& j) {
  for (const char* key : {"field", "k", "entries"}) {
    if (!j.contains(key)) throw ParseError(std::string("gram matrix: missing field \"") + key + "\"");
  }
  FieldSpec field = field_from_json(j.at("field"));
  int k = j.at("k").get<int>();
  const json& entries = j.at("entries");
  if (!entries.is_array() || static_cast<int>(entries.size()) != k) {
    throw ParseError("gram matrix: entries must have k rows");
  }
  std::vector<std::vector<Scalar>> rows;
  for (int a = 0; a < k; ++a) {
    const json& row = entries.at(static_cast<size_t>(a));
    if (!row.is_array() || static_cast<int>(row.size()) != k) {
      throw ParseError("gram matrix: row " + std::to_string(a + 1) + " must have k entries");
    }
    std::vector<Scalar> out_row;
    for (int b = 0; b < k; ++b) out_row.push_back(scalar_from_json(row.at(static_cast<size_t>(b)), field));
    rows.push_back(std::move(out_row));
  }
  return gram::GramMatrix(field, std::move(rows));
}

json realisation_to_json(const gram::Realisation& real) {
  json vectors = json::array();
  for (const auto& v : real.vectors) {
    json row = json::array();
    for (const Scalar& c : v) row.push_back(scalar_to_json(c));
    vectors.push_back(std::move(row));
  }
  json out;
  out["field"] = field_to_json(real.field);
  out["ambient_dim"] = real.ambient_dim;
  out["vectors"] = std::move(vectors);
  return out;
}

skel::SearchConfig search_config_from_json(const json& j) {
  skel::SearchConfig cfg = skel::SearchConfig::defaults(j.value("blocks", 3));

  auto parse_alphabet = [](const json& arr, const char* what) {
    std::vector<skel::TemplateName> names;
    for (const json& t : arr) {
      auto name = quat::template_name_parse(t.get<std::string>());
      if (!name) throw ParseError(std::string(what) + ": unknown template '" + t.dump() + "'");
      names.push_back(*name);
    }
    return names;
  };

  if (j.contains("diag_templates")) {
    const json& arr = j.at("diag_templates");
    if (static_cast<int>(arr.size()) != cfg.blocks) {
      throw ParseError("search config: diag_templates must have one alphabet per block");
    }
    cfg.diag_templates.clear();
    for (const json& a : arr) cfg.diag_templates.push_back(parse_alphabet(a, "diag_templates"));
  }
  if (j.contains("offdiag_templates")) {
    const json& arr = j.at("offdiag_templates");
    if (arr.size() != cfg.offdiag_templates.size()) {
      throw ParseError("search config: offdiag_templates must have one alphabet per face");
    }
    cfg.offdiag_templates.clear();
    for (const json& a : arr) cfg.offdiag_templates.push_back(parse_alphabet(a, "offdiag_templates"));
  }
  if (j.contains("gram_values")) {
    const json& arr = j.at("gram_values");
    size_t nfaces = cfg.gram_values.size();
    cfg.gram_values.clear();
    if (!arr.empty() && arr.front().is_array()) {
      if (arr.size() != nfaces) {
        throw ParseError("search config: gram_values must have one alphabet per Diag pair");
      }
      for (const json& a : arr) cfg.gram_values.push_back(a.get<std::vector<int>>());
    } else {
      cfg.gram_values.assign(nfaces, arr.get<std::vector<int>>());
    }
  }
  return cfg;
}

obstruct::FactLedger ledger_from_json(const json& j) {
  if (!j.contains("records")) throw ParseError("ledger: missing field \"records\"");
  std::vector<obstruct::FactRecord> records;
  for (const json& rec : j.at("records")) {
    obstruct::FactRecord out;
    out.r = rec.at("r").get<int>();
    out.s = rec.at("s").get<int>();
    out.n = rec.at("n").get<int>();
    out.field_class = rec.at("field_class").get<std::string>();
    std::string status = rec.at("status").get<std::string>();
    if (status == "admissible-constructive") {
      out.status = obstruct::FactStatus::AdmissibleConstructive;
    } else if (status == "inadmissible-cited") {
      out.status = obstruct::FactStatus::InadmissibleCited;
    } else {
      throw ParseError("ledger: unknown status '" + status + "'");
    }
    out.citation = rec.at("citation").get<std::string>();
    out.backing_file = rec.value("backing", "");
    if (out.status == obstruct::FactStatus::AdmissibleConstructive && out.backing_file.empty()) {
      throw ParseError("ledger: constructive record [" + std::to_string(out.r) + "," +
                       std::to_string(out.s) + "," + std::to_string(out.n) +
                       "] has no backing file");
    }
    records.push_back(std::move(out));
  }
  return obstruct::FactLedger(std::move(records));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

void write_json_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
  if (!out) throw IoError("write failed: " + path);
}

formula::Formula read_formula(const std::string& path) {
  try {
    return formula_from_json(read_json_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_formula(const formula::Formula& f, const std::string& path) {
  write_json_file(formula_to_json(f), path);
}

skel::SkeletonArray read_skeleton(const std::string& path) {
  try {
    return skeleton_from_json(read_json_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

skel::GramTable read_gram_table(const std::string& path) {
  try {
    return gram_table_from_json(read_json_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

gram::GramMatrix read_gram_matrix(const std::string& path) {
  try {
    return gram_matrix_from_json(read_json_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

skel::SearchConfig read_search_config(const std::string& path) {
  try {
    return search_config_from_json(read_json_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

obstruct::FactLedger read_ledger(const std::string& path) {
  try {
    return ledger_from_json(read_json_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace sosf::io
