/*
   Copyright 2026 The peterweyl authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file serialize.hpp
 * @brief JSON forms of the library types (nlohmann/json, fixed key order).
 *
 * Scalars serialize as canonical "P(q)/Q(q)" strings, matrices as row-major
 * string arrays, labels as integer arrays.  Every writer has a matching
 * parser so artifacts round-trip byte for byte.
 */

#ifndef PETERWEYL_SERIALIZE_HPP
#define PETERWEYL_SERIALIZE_HPP

#include <json.hpp>

#include "schurweyl.hpp"

namespace pw {

using Json = nlohmann::ordered_json;

// --- matrices ------------------------------------------------------------------

inline Json to_json(const QMatrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) entries.push_back(m.at(r, c).str());
    j["entries"] = std::move(entries);
    return j;
}

inline QMatrix matrix_from_json(const Json& j) {
    QMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != m.rows() * m.cols())
        throw std::invalid_argument("matrix entry count mismatch");
    int idx = 0;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            m.at(r, c) = QScalar::parse(entries.at(idx++).get<std::string>());
    return m;
}

// --- algebras and labels --------------------------------------------------------

inline Json to_json(const Algebra& a) {
    Json j;
    j["family"] = a.family == Family::sl2 ? "sl2" : "gl";
    if (a.family == Family::gl) j["k"] = a.k;
    return j;
}

inline Algebra algebra_from_json(const Json& j) {
    const std::string family = j.at("family").get<std::string>();
    if (family == "sl2") return Algebra::sl2();
    if (family == "gl") return Algebra::gl(j.at("k").get<int>());
    throw std::invalid_argument("unknown algebra family: " + family);
}

inline Json to_json(const IrrepLabel& l) { return Json(l.hw); }

inline IrrepLabel label_from_json(const Algebra& alg, const Json& j) {
    std::vector<int> hw = j.get<std::vector<int>>();
    if (alg.family == Family::sl2) {
        if (hw.size() != 1) throw std::invalid_argument("sl2 label must have one entry");
        return IrrepLabel::sl2(hw[0]);
    }
    return IrrepLabel::gl(alg.k, std::move(hw));
}

// --- representations -------------------------------------------------------------

inline Json to_json(const Rep& r) {
    Json j;
    j["algebra"] = to_json(r.algebra);
    j["dim"] = r.dim;
    const std::pair<const char*, const std::vector<QMatrix>*> groups[] = {
        {"E", &r.E}, {"F", &r.F}, {"K", &r.K}, {"Kinv", &r.Kinv}};
    for (const auto& [key, mats] : groups) {
        Json arr = Json::array();
        for (const auto& m : *mats) arr.push_back(to_json(m));
        j[key] = std::move(arr);
    }
    j["weights"] = r.weights;
    return j;
}

inline Json to_json(const Decomposition& d) {
    Json j;
    Json constituents = Json::array();
    for (const auto& c : d.constituents) {
        Json jc;
        jc["nu"] = to_json(c.nu);
        jc["k"] = c.mult_index;
        jc["embedding"] = to_json(c.embedding);
        constituents.push_back(std::move(jc));
    }
    j["constituents"] = std::move(constituents);
    j["C"] = to_json(d.C);
    j["Cinv"] = to_json(d.Cinv);
    return j;
}

// --- 3j tables --------------------------------------------------------------------

inline Json to_json(const ThreeJTable& t) {
    Json j;
    j["algebra"] = to_json(t.lambda.algebra);
    j["lambda"] = to_json(t.lambda);
    j["mu"] = to_json(t.mu);
    auto entry_list = [](const std::vector<ThreeJEntry>& list) {
        Json arr = Json::array();
        for (const auto& e : list) {
            Json je;
            je["nu"] = to_json(e.nu);
            je["k"] = e.k;
            je["b1"] = e.b1;
            je["b2"] = e.b2;
            je["b3"] = e.b3;
            je["value"] = e.value.str();
            arr.push_back(std::move(je));
        }
        return arr;
    };
    j["entries"] = entry_list(t.entries);
    j["dual_entries"] = entry_list(t.dual_entries);
    return j;
}

inline ThreeJTable threej_from_json(const Json& j) {
    const Algebra alg = algebra_from_json(j.at("algebra"));
    ThreeJTable t;
    t.lambda = label_from_json(alg, j.at("lambda"));
    t.mu = label_from_json(alg, j.at("mu"));
    auto parse_list = [&](const Json& arr) {
        std::vector<ThreeJEntry> list;
        for (const auto& je : arr) {
            ThreeJEntry e;
            e.nu = label_from_json(alg, je.at("nu"));
            e.k = je.at("k").get<int>();
            e.b1 = je.at("b1").get<int>();
            e.b2 = je.at("b2").get<int>();
            e.b3 = je.at("b3").get<int>();
            e.value = QScalar::parse(je.at("value").get<std::string>());
            list.push_back(std::move(e));
        }
        return list;
    };
    t.entries = parse_list(j.at("entries"));
    t.dual_entries = parse_list(j.at("dual_entries"));
    return t;
}

// --- Peter-Weyl elements -----------------------------------------------------------

inline Json to_json(const PWElement& f) {
    Json arr = Json::array();
    for (const auto& [s, c] : f.terms()) {
        Json jt;
        jt["lambda"] = to_json(s.label);
        jt["i"] = s.i;
        jt["j"] = s.j;
        jt["coeff"] = c.str();
        arr.push_back(std::move(jt));
    }
    return arr;
}

inline PWElement pw_element_from_json(const Algebra& alg, const Json& arr) {
    PWElement f;
    for (const auto& jt : arr)
        f.add(PWSymbol{label_from_json(alg, jt.at("lambda")), jt.at("i").get<int>(),
                       jt.at("j").get<int>()},
              QScalar::parse(jt.at("coeff").get<std::string>()));
    return f;
}

// --- structure constant tables ------------------------------------------------------

inline Json to_json(const StructureTable& t) {
    Json j;
    j["algebra"] = to_json(t.lambda.algebra);
    j["lambda"] = to_json(t.lambda);
    j["mu"] = to_json(t.mu);
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        Json jr;
        jr["i1"] = row.i1;
        jr["j1"] = row.j1;
        jr["i2"] = row.i2;
        jr["j2"] = row.j2;
        jr["result"] = to_json(row.product);
        rows.push_back(std::move(jr));
    }
    j["products"] = std::move(rows);
    return j;
}

inline StructureTable structure_table_from_json(const Json& j) {
    const Algebra alg = algebra_from_json(j.at("algebra"));
    StructureTable t;
    t.lambda = label_from_json(alg, j.at("lambda"));
    t.mu = label_from_json(alg, j.at("mu"));
    for (const auto& jr : j.at("products"))
        t.rows.push_back({jr.at("i1").get<int>(), jr.at("j1").get<int>(), jr.at("i2").get<int>(),
                          jr.at("j2").get<int>(),
                          pw_element_from_json(alg, jr.at("result"))});
    return t;
}

// --- Schur-Weyl summaries -------------------------------------------------------------

inline Json sw_summary_json(const SWDecomp& d) {
    Json j;
    j["k"] = d.k();
    j["n"] = d.degree();
    Json iso = Json::array();
    int total = 0;
    for (const auto& b : d.blocks()) {
        Json jb;
        jb["lambda"] = to_json(b.lambda);
        jb["dim_v"] = b.dim_v;
        jb["dim_w"] = b.dim_w;
        iso.push_back(std::move(jb));
        total += b.dim_v * b.dim_w;
    }
    j["isotypic"] = std::move(iso);
    j["total"] = total;
    return j;
}

/** "4x1 + 2x2 = 8" */
inline std::string sw_summary_text(const SWDecomp& d) {
    std::string out;
    int total = 0;
    for (const auto& b : d.blocks()) {
        if (!out.empty()) out += " + ";
        out += std::to_string(b.dim_v) + "x" + std::to_string(b.dim_w);
        total += b.dim_v * b.dim_w;
    }
    return out + " = " + std::to_string(total);
}

// --- relation sets ---------------------------------------------------------------------

inline Json to_json(const FrtResult& r) {
    Json j;
    j["k"] = r.k;
    j["residuals_zero"] = r.all_zero;
    Json rels = Json::array();
    for (const auto& rel : r.relations) {
        Json jr;
        jr["text"] = rel.text;
        Json terms = Json::array();
        for (const auto& [w, c] : rel.words) {
            Json jt;
            jt["word"] = Json::array({Json::array({w.first.first, w.first.second}),
                                      Json::array({w.second.first, w.second.second})});
            jt["coeff"] = c.str();
            terms.push_back(std::move(jt));
        }
        jr["terms"] = std::move(terms);
        rels.push_back(std::move(jr));
    }
    j["relations"] = std::move(rels);
    return j;
}

inline FrtResult frt_from_json(const Json& j) {
    FrtResult r;
    r.k = j.at("k").get<int>();
    r.all_zero = j.at("residuals_zero").get<bool>();
    for (const auto& jr : j.at("relations")) {
        FrtRelation rel;
        rel.text = jr.at("text").get<std::string>();
        for (const auto& jt : jr.at("terms")) {
            const auto& w = jt.at("word");
            rel.words[{{w.at(0).at(0).get<int>(), w.at(0).at(1).get<int>()},
                       {w.at(1).at(0).get<int>(), w.at(1).at(1).get<int>()}}] =
                QScalar::parse(jt.at("coeff").get<std::string>());
        }
        r.relations.push_back(std::move(rel));
    }
    return r;
}

inline std::string frt_text(const FrtResult& r) {
    std::string out;
    for (const auto& rel : r.relations) out += rel.text + "\n";
    return out;
}

}  // namespace pw

#endif  // PETERWEYL_SERIALIZE_HPP
