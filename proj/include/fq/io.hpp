#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "curves.hpp"
#include "decomp.hpp"
#include "linalg.hpp"
#include "reps.hpp"
#include "siegel.hpp"

namespace fq {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rat& r) { return rat_to_string(r); }

inline Json to_json(const CycNum& z) {
    CycNum s = z.simplify();
    if (s.is_rational()) return rat_to_string(s.rat_value());
    Json coords = Json::array();
    for (const auto& c : s.coords()) coords.push_back(rat_to_string(c));
    return Json{{"conductor", s.conductor()}, {"coords", coords}};
}

inline Json to_json(const Mat<Rat>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline Json to_json(const GeneratingVector& v) {
    Json arr = Json::array();
    for (int i = 0; i < 4; ++i) arr.push_back(v[i].to_string());
    return arr;
}

inline Json to_json(const Subgroup& h) {
    Json gens = Json::array();
    for (const auto& g : h.generators()) gens.push_back(g.to_string());
    return Json{{"generators", gens}, {"order", h.order()}};
}

inline Json to_json(const LambdaValue& l) {
    Json j;
    j["exact"] = l.exact;
    if (l.exact) j["value"] = to_json(l.value);
    auto z = l.approx_d();
    j["approx"] = Json::array({z.real(), z.imag()});
    return j;
}

inline Json to_json(const VerificationReport& rep) {
    Json items = Json::array();
    for (const auto& it : rep.items) {
        Json e{{"name", it.name}, {"pass", it.pass}};
        if (!it.pass) e["residual"] = it.residual;
        items.push_back(e);
    }
    return Json{{"pass", rep.pass()}, {"items", items}};
}

inline Json to_json(const CharacterTable& t) {
    Json classes = Json::array();
    for (const auto& c : t.classes)
        classes.push_back(Json{{"representative", c.representative.to_string()},
                               {"size", c.size()},
                               {"order", c.representative.order()}});
    Json irreps = Json::array();
    for (const auto& rep : t.irreps) {
        Json values = Json::array();
        for (const auto& v : rep.values) values.push_back(to_json(v));
        irreps.push_back(Json{{"label", rep.label}, {"degree", rep.degree}, {"values", values}});
    }
    Json rats = Json::array();
    for (const auto& w : t.rationals) {
        Json cons = Json::array();
        for (int c : w.constituents) cons.push_back(t.irreps[c].label);
        rats.push_back(Json{{"label", w.label},
                            {"constituents", cons},
                            {"degree", w.degree},
                            {"schur_index", w.schur_index},
                            {"field_degree", w.field_degree},
                            {"multiplicity", w.multiplicity}});
    }
    return Json{{"q", t.q}, {"classes", classes}, {"irreps", irreps}, {"rational_irreps", rats}};
}

inline Json to_json(const CharacterTable& t, const DecompositionReport& rep) {
    Json factors = Json::array();
    for (const auto& f : rep.factors)
        factors.push_back(
            Json{{"label", f.label}, {"n", f.multiplicity}, {"k", f.field_degree}, {"dim", f.dim}});
    Json ids = Json::array();
    for (const auto& id : rep.identifications)
        ids.push_back(Json{{"factor", "B" + std::to_string(id.factor + 1)},
                           {"subgroup", to_json(id.witness)},
                           {"quotient_genus", id.quotient_genus}});
    Json cw;
    for (std::size_t vi = 0; vi < rep.cw.mult.size(); ++vi)
        cw[t.irreps[vi].label] = rep.cw.mult[vi];
    Json cw_char = Json::array();
    for (std::size_t ci = 0; ci < t.classes.size(); ++ci)
        cw_char.push_back(Json{{"class", t.classes[ci].representative.to_string()},
                               {"value", to_json(rep.cw.char_by_class[ci])}});
    return Json{{"q", rep.q},
                {"vector", to_json(rep.vec)},
                {"factors", factors},
                {"sum_check", rep.sum_check},
                {"identifications", ids},
                {"cw", Json{{"multiplicities", cw}, {"character", cw_char}}},
                {"shimura_dim", rep.shimura_dim}};
}

inline Json to_json(const OrbitReport& rep) {
    Json reps = Json::array();
    for (const auto& r : rep.representatives) reps.push_back(to_json(r));
    return Json{{"orbit_count", rep.orbit_count},
                {"orbit_sizes", rep.orbit_sizes},
                {"representatives", reps}};
}

inline Json to_json(const std::vector<EssentialClass>& classes) {
    Json arr = Json::array();
    for (const auto& c : classes)
        arr.push_back(Json{{"dims", c.dims}, {"representative", to_json(c.representative)},
                           {"count", c.count}});
    return arr;
}

inline Json to_json(const LambdaClassification& c) {
    Json j;
    j["lambda"] = to_json(c.lambda);
    j["exact_classification"] = c.exact_classification;
    j["admissible"] = c.admissible;
    if (!c.admissible) j["excluded_tag"] = c.excluded_tag;
    j["real_surface"] = c.real_surface;
    j["real_conditions"] =
        Json{{"lambda = conj", c.conditions[0]},
             {"lambda = 1 - conj", c.conditions[1]},
             {"lambda = 1/conj", c.conditions[2]},
             {"lambda = conj/(conj - 1)", c.conditions[3]}};
    Json orbit = Json::array();
    for (std::size_t i = 0; i < c.orbit.size(); ++i)
        orbit.push_back(Json{{"map", s3_map_names()[i]}, {"value", to_json(c.orbit[i])}});
    j["s3_orbit"] = orbit;
    if (c.j) j["j"] = to_json(*c.j);
    if (c.fundamental) j["fundamental_representative"] = to_json(*c.fundamental);
    return j;
}

inline Json to_json(const ModuliBounds& b) {
    return Json{{"lambda", to_json(b.lambda)},
                {"j", to_json(b.j)},
                {"minpoly_lambda", b.minpoly_lambda.to_string("t")},
                {"minpoly_j", b.minpoly_j.to_string("t")},
                {"degree_lambda", b.degree_lambda},
                {"degree_j", b.degree_j},
                {"moduli_field_is_definition_field", b.moduli_field_is_definition_field}};
}

inline Json to_json(const CurveModel& m) {
    Json j;
    j["q"] = m.q;
    j["admissible"] = m.admissible;
    if (!m.warning.empty()) j["warning"] = m.warning;
    if (m.symbolic) {
        j["c"] = m.c_symbolic.to_string("lambda");
        j["poly"] = "x^" + std::to_string(2 * m.q + 1) + " + c x^" + std::to_string(m.q + 1) + " + x";
        return j;
    }
    if (m.exact) {
        j["c"] = to_json(m.c_exact);
        Json coeffs = Json::array();
        Poly<CycNum> f = m.poly_exact();
        for (int d = 0; d <= f.degree(); ++d) coeffs.push_back(to_json(f.coeff(d)));
        j["coeffs"] = coeffs;
    }
    j["c_numeric"] = Json::array({m.c_numeric.real(), m.c_numeric.imag()});
    return j;
}

inline Json to_json(const SiegelFamily& fam) {
    Json basis = Json::array();
    for (const auto& m : fam.basis) basis.push_back(to_json(m));
    return Json{{"g", fam.g},
                {"dimension", fam.basis.size()},
                {"convention", fam.convention},
                {"params", fam.params},
                {"basis", basis}};
}

inline Json to_json(const SiegelWitness& w) {
    Json re = Json::array(), im = Json::array(), minors = Json::array();
    for (const auto& v : w.real_params) re.push_back(rat_to_string(v));
    for (const auto& v : w.imag_params) im.push_back(rat_to_string(v));
    for (const auto& v : w.minors) minors.push_back(rat_to_string(v));
    return Json{{"real_params", re},
                {"imag_params", im},
                {"imag_part", to_json(w.imag_part)},
                {"leading_minors", minors},
                {"attempts", w.attempts}};
}

inline Json to_json(const ReferenceFamilyReport& rep) {
    return Json{{"convention", convention_name(rep.convention)},
                {"convention_unique", rep.convention_unique},
                {"verbatim_symmetric", rep.verbatim_symmetric},
                {"verbatim_invariant", rep.verbatim_invariant},
                {"corrected_entries", rep.corrected_entries},
                {"corrected_invariant", rep.corrected_invariant},
                {"computed_dimension", rep.computed_dimension},
                {"span_matches", rep.span_matches},
                {"pass", rep.pass()}};
}

/// Generator file format: {"g": n, "matrices": [[["p/q", ...] row], ...]}.
inline std::vector<Mat<Rat>> read_generator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read generator file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("generator file is not valid JSON: " + std::string(e.what()));
    }
    if (!j.contains("g") || !j.contains("matrices"))
        throw std::invalid_argument("generator file needs fields 'g' and 'matrices'");
    std::size_t g = j["g"].get<std::size_t>();
    std::vector<Mat<Rat>> gens;
    for (const auto& mj : j["matrices"]) {
        if (mj.size() != 2 * g) throw std::invalid_argument("generator matrix must be 2g x 2g");
        Mat<Rat> m(2 * g, 2 * g);
        for (std::size_t i = 0; i < 2 * g; ++i) {
            if (mj[i].size() != 2 * g) throw std::invalid_argument("generator matrix must be 2g x 2g");
            for (std::size_t k = 0; k < 2 * g; ++k)
                m.at(i, k) = mj[i][k].is_string() ? rat_from_string(mj[i][k].get<std::string>())
                                                  : Rat(mj[i][k].get<long>());
        }
        auto chk = is_symplectic(m);
        if (!chk.ok) throw std::invalid_argument("generator matrix is not symplectic");
        gens.push_back(std::move(m));
    }
    if (gens.empty()) throw std::invalid_argument("generator file holds no matrices");
    return gens;
}

}  // namespace fq
