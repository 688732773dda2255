#pragma once

// JSON encodings: signed permutations as 1-based image arrays, subsets as
// sorted integer arrays, modules and flags per the documented file formats.
// nlohmann::json keeps object keys sorted, so output is deterministic.

#include <string>
#include <vector>

#include "eo/dieudonne.hpp"
#include "eo/gf.hpp"
#include "eo/hasse.hpp"
#include "eo/parabolic.hpp"
#include "eo/schubert.hpp"
#include "eo/signed_permutation.hpp"
#include "json.hpp"

namespace eo {

using json = nlohmann::json;

inline json perm_to_json(const SignedPermutation& w) { return json(w.images()); }

inline SignedPermutation perm_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("permutation: expected a JSON array");
  std::vector<int> im = j.get<std::vector<int>>();
  if (im.size() % 2 != 0) throw std::invalid_argument("permutation: image list must have even length");
  const int g = static_cast<int>(im.size()) / 2;
  return SignedPermutation(g, std::move(im));
}

inline json subset_to_json(const SubsetJ& J) { return json(J.members); }

inline SubsetJ subset_from_json(int g, const json& j) {
  return SubsetJ(g, j.get<std::vector<int>>());
}

inline json pair_to_json(const AdmissiblePair& pr) {
  json j;
  j["w"] = pr.w.images();
  j["J"] = pr.datum.J.members;
  j["k"] = pr.datum.k;
  j["ktilde"] = pr.datum.ktilde;
  j["sigma"] = pr.sigma;
  j["tau"] = pr.tau;
  return j;
}

inline json exponents_to_json(const HasseExponents& he) {
  json j;
  j["p"] = he.p;
  j["N"] = he.N;
  j["c"] = he.coeffs;
  return j;
}

inline json descendant_to_json(const DescendantRecord& rec) {
  json j;
  j["v"] = rec.v.images();
  if (rec.v_type)
    j["kind"] = json{{"V", rec.i}};
  else
    j["kind"] = json{{"AB", json::array({rec.a, rec.b})}};
  j["ords"] = rec.ords;
  return j;
}

// --- matrices ---------------------------------------------------------

inline json mat_to_json(const Field& F, const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) {
      if (F.m() == 1)
        row.push_back(static_cast<long long>(m.at(i, j)));
      else
        row.push_back(F.coeffs(m.at(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Mat mat_from_json(const Field& F, const json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw std::invalid_argument("matrix: wrong row count");
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("matrix: wrong column count");
    for (int c = 0; c < cols; ++c) {
      if (row[c].is_array())
        m.at(i, c) = F.from_coeffs(row[c].get<std::vector<int>>());
      else
        m.at(i, c) = F.from_int(row[c].get<long long>());
    }
  }
  return m;
}

// --- modules ----------------------------------------------------------

inline json module_to_json(const DieudonneModule& D) {
  const Field F = D.field.make();
  json j;
  j["p"] = D.field.p;
  j["m"] = D.field.m;
  if (D.field.m > 1) j["modulus"] = F.modulus();
  j["h"] = D.h;
  j["F"] = mat_to_json(F, D.F);
  j["V"] = mat_to_json(F, D.V);
  if (D.pairing) j["pairing"] = mat_to_json(F, *D.pairing);
  return j;
}

inline DieudonneModule module_from_json(const json& j) {
  DieudonneModule D;
  D.field.p = j.at("p").get<long long>();
  D.field.m = j.value("m", 1);
  if (j.contains("modulus")) D.field.modulus = j.at("modulus").get<std::vector<int>>();
  const Field F = D.field.make();
  D.h = j.at("h").get<int>();
  if (D.h < 0) throw std::invalid_argument("module: negative height");
  D.F = mat_from_json(F, j.at("F"), D.h, D.h);
  D.V = mat_from_json(F, j.at("V"), D.h, D.h);
  if (j.contains("pairing")) D.pairing = mat_from_json(F, j.at("pairing"), D.h, D.h);
  return D;
}

// --- flags ------------------------------------------------------------

inline json flag_to_json(const SymplecticFlag& fl) {
  const Field F(fl.p, 1);
  json j;
  j["p"] = fl.p;
  j["g"] = fl.g;
  j["Jtilde"] = fl.Jtilde.members;
  json subs = json::array();
  for (const auto& m : fl.subspaces) subs.push_back(mat_to_json(F, m));
  j["subspaces"] = std::move(subs);
  return j;
}

inline SymplecticFlag flag_from_json(const json& j) {
  SymplecticFlag fl;
  fl.p = j.at("p").get<long long>();
  fl.g = j.at("g").get<int>();
  fl.Jtilde = SubsetJ(fl.g, j.at("Jtilde").get<std::vector<int>>());
  const Field F(fl.p, 1);
  for (const json& sub : j.at("subspaces")) {
    const int rows = static_cast<int>(sub.size());
    Mat m = mat_from_json(F, sub, rows, 2 * fl.g);
    fl.subspaces.push_back(row_space(F, m));
  }
  validate_flag(fl);
  return fl;
}

}  // namespace eo
