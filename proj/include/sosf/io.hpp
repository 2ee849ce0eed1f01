#pragma once

#include <string>

#include "json.hpp"
#include "sosf/field.hpp"
#include "sosf/formula.hpp"
#include "sosf/gram.hpp"
#include "sosf/obstruct.hpp"
#include "sosf/skeleton.hpp"

namespace sosf::io {

using nlohmann::json;

// FieldSpec: {"kind": "QQ" | "QI" | "FP" | "FPI", "p": integer when present}
json field_to_json(const FieldSpec& spec);
FieldSpec field_from_json(const json& j);

// Scalars: rationals "p/q" (or "p"), Gaussian rationals {"re", "im"},
// prime-field residues as decimal strings, extension elements {"a", "b"}.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const FieldSpec& spec);

// Formula files: {"r", "s", "n", "field", "coeffs": r x s x n scalars}
json formula_to_json(const formula::Formula& f);
formula::Formula formula_from_json(const json& j);

// Skeleton files: {"r", "s", "cells": [[signed symbol string]]}
json skeleton_to_json(const skel::SkeletonArray& sk);
skel::SkeletonArray skeleton_from_json(const json& j);

// Gram table files: {"pairs": [{"a", "b", "v"}], "orthogonal_default": bool}
json gram_table_to_json(const skel::GramTable& g);
skel::GramTable gram_table_from_json(const json& j);

// Gram matrix files: {"field", "k", "entries": k x k scalars}
json gram_matrix_to_json(const gram::GramMatrix& g);
gram::GramMatrix gram_matrix_from_json(const json& j);

json realisation_to_json(const gram::Realisation& real);

// Search config: {"blocks", "diag_templates", "offdiag_templates",
// "gram_values"}; a flat gram_values array applies to every Diag pair.
skel::SearchConfig search_config_from_json(const json& j);

// Ledger files: {"schema", "records": [{"r", "s", "n", "field_class",
// "status", "citation", "backing"?}]}
obstruct::FactLedger ledger_from_json(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const json& j, const std::string& path);

formula::Formula read_formula(const std::string& path);
void write_formula(const formula::Formula& f, const std::string& path);
skel::SkeletonArray read_skeleton(const std::string& path);
skel::GramTable read_gram_table(const std::string& path);
gram::GramMatrix read_gram_matrix(const std::string& path);
skel::SearchConfig read_search_config(const std::string& path);
obstruct::FactLedger read_ledger(const std::string& path);

}  // namespace sosf::io
