#pragma once

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "io.hpp"

namespace fq {

// ---------------------------------------------------------------------------
// Seeded lambda samples for the equivariance checks
// ---------------------------------------------------------------------------

/// Mixed sample set: exact rational points on each of the four real loci
/// (real axis, Re = 1/2, unit circle, |z - 1| = 1, via rational
/// parametrizations) plus generic numeric points.
inline std::vector<LambdaValue> equivariance_samples(std::size_t count, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(7, 23);
    std::uniform_real_distribution<double> real(-2.5, 2.5);
    auto rat = [&] {
        Rat t(num(rng), den(rng));
        return t;
    };
    auto unit_circle = [&](const Rat& t) {
        // (1 - t^2 + 2ti)/(1 + t^2) has exact modulus 1.
        Rat d = 1 + t * t;
        return CycNum((1 - t * t) / d) + CycNum(2 * t / d) * cyclotomic(4, 1);
    };
    std::vector<LambdaValue> out;
    while (out.size() < count) {
        switch (out.size() % 6) {
            case 0: out.push_back(LambdaValue::from_rat(rat())); break;
            case 1:
                out.push_back(LambdaValue::from_exact(CycNum(Rat(1, 2)) + CycNum(rat()) * cyclotomic(4, 1)));
                break;
            case 2: out.push_back(LambdaValue::from_exact(unit_circle(rat()))); break;
            case 3: out.push_back(LambdaValue::from_exact(CycNum(1) + unit_circle(rat()))); break;
            default:
                out.push_back(LambdaValue::from_numeric(Cplx(real(rng), real(rng))));
                break;
        }
        // Skip the degenerate points, where orbit members blow up.
        const auto& l = out.back();
        bool bad = l.exact ? (l.value == CycNum(0) || l.value == CycNum(1))
                           : (std::abs(l.approx_d()) < 1e-6 || std::abs(l.approx_d() - 1.0) < 1e-6);
        if (bad) out.pop_back();
    }
    return out;
}

/// The real-surface flag is constant on S3 orbits; checked sample by sample.
inline bool real_test_equivariant(const std::vector<LambdaValue>& samples) {
    for (const auto& l : samples) {
        LambdaClassification base = classify_lambda(l);
        for (std::size_t i = 1; i < 6; ++i) {
            LambdaValue img = l.exact
                                  ? LambdaValue::from_exact(s3_apply_exact(i, l.value))
                                  : LambdaValue::from_numeric([&] {
                                        auto w = s3_apply_numeric(i, l.approx_d());
                                        return Cplx(w.real(), w.imag());
                                    }());
            if (classify_lambda(img).real_surface != base.real_surface) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// The reproduce-all driver
// ---------------------------------------------------------------------------

namespace detail {

struct ItemLog {
    Json items = Json::array();
    bool all_pass = true;
    void add(const std::string& name, bool pass, const std::string& detail = "") {
        Json e{{"name", name}, {"pass", pass}};
        if (!detail.empty()) e["detail"] = detail;
        items.push_back(e);
        all_pass = all_pass && pass;
    }
};

inline std::array<long, 6> expected_dims_sigma0(long q) { return {0, 0, 0, 1, (q - 1) / 2, 0}; }
inline std::array<long, 6> expected_dims_sigma1(long q) { return {0, 0, 1, 0, (q - 1) / 2, 0}; }

}  // namespace detail

/// Regenerates every desk-scale table and check for one q; every item must
/// come out green. q = 5 additionally runs the genus-5 Siegel items.
inline std::pair<Json, bool> reproduce_paper(long q, unsigned long seed = 0, long budget = 2000) {
    if (q != 5 && q != 7 && q != 11 && q != 13)
        throw std::invalid_argument("reproduce-paper supports q in {5, 7, 11, 13}");
    detail::ItemLog log;
    CharacterTable table = character_table(q);

    auto vectors = enumerate_vectors(q);
    log.add("generating-vector census has size 6q(q-1)",
            static_cast<long>(vectors.size()) == 6 * q * (q - 1),
            "count = " + std::to_string(vectors.size()));

    auto orbits = topological_orbits(q);
    log.add("single topological orbit",
            orbits.orbit_count == 1 && orbits.orbit_sizes[0] == 6 * q * (q - 1));

    auto classes = essential_classes(q);
    bool ess_ok = classes.size() == 2;
    if (ess_ok) {
        ess_ok = classes[0].dims == detail::expected_dims_sigma0(q) &&
                 classes[1].dims == detail::expected_dims_sigma1(q) &&
                 classes[0].count == classes[1].count &&
                 classes[0].count + classes[1].count == 6 * q * (q - 1);
    }
    log.add("exactly two essential classes, distinguished by dim B3 = 0 vs 1", ess_ok);

    DecompositionReport rep0 = decompose(table, GeneratingVector::sigma0(q));
    DecompositionReport rep1 = decompose(table, GeneratingVector::sigma1(q));
    log.add("factor dimensions for sigma0 and sigma1",
            rep0.dims == detail::expected_dims_sigma0(q) &&
                rep1.dims == detail::expected_dims_sigma1(q) && rep0.sum_check == q &&
                rep1.sum_check == q);

    // Fixed-subspace dimension table, rows V2..V6, columns
    // <s>, <sr>, <sr^-2>, <sr^-1>, <r^q>, <r^(q+2)>.
    {
        const long expected[5][6] = {{0, 0, 0, 0, 1, 1},
                                     {1, 0, 1, 0, 0, 0},
                                     {0, 1, 0, 1, 0, 0},
                                     {1, 1, 1, 1, 0, 0},
                                     {1, 1, 1, 1, 2, 0}};
        std::vector<Subgroup> cols = {cyclic_subgroup(GroupElement::reflection(q, 0)),
                                      cyclic_subgroup(GroupElement::reflection(q, 1)),
                                      cyclic_subgroup(GroupElement::reflection(q, -2)),
                                      cyclic_subgroup(GroupElement::reflection(q, -1)),
                                      cyclic_subgroup(GroupElement::rotation(q, q)),
                                      cyclic_subgroup(GroupElement::rotation(q, q + 2))};
        bool ok = true;
        for (int row = 0; row < 5 && ok; ++row)
            for (int col = 0; col < 6 && ok; ++col)
                ok = fixed_dim(table, row + 1, cols[col]) == expected[row][col];
        log.add("all 30 fixed-subspace table entries", ok);
    }

    {
        Subgroup H4 = subgroup_generated(
            {GroupElement::rotation(q, -2), GroupElement::reflection(q, -1)});
        Subgroup H5 = cyclic_subgroup(GroupElement::reflection(q, 0));
        Subgroup Hyp = cyclic_subgroup(GroupElement::rotation(q, q));
        bool genera = quotient_decomposition(table, rep0.dims, H4).genus == 1 &&
                      quotient_decomposition(table, rep0.dims, H5).genus == (q - 1) / 2 &&
                      quotient_decomposition(table, rep0.dims, Hyp).genus == 0;
        bool ids = false, ids5 = false;
        for (const auto& id : rep0.identifications) {
            if (id.factor == 3 && id.witness == H4 && id.quotient_genus == 1) ids = true;
            if (id.factor == 4 && id.witness == H5 && id.quotient_genus == (q - 1) / 2) ids5 = true;
        }
        log.add("quotient genera 1, (q-1)/2, 0 and Jacobian identifications", genera && ids && ids5);
    }

    {
        bool cw_ok = true;
        for (std::size_t vi = 0; vi < table.irreps.size(); ++vi) {
            long want = (table.irreps[vi].label == "V4" || table.irreps[vi].k % 2 == 1) ? 1 : 0;
            if (table.irreps[vi].k == 0 && table.irreps[vi].label != "V4") want = 0;
            cw_ok = cw_ok && rep0.cw.mult[vi] == want;
        }
        // The five displayed character values: q, -1, 1, -q, 0.
        auto chi = [&](const GroupElement& g) { return rep0.cw.char_by_class[table.class_of(g)]; };
        cw_ok = cw_ok && chi(GroupElement::identity(q)) == CycNum(q) &&
                chi(GroupElement::reflection(q, 0)) == CycNum(-1) &&
                chi(GroupElement::reflection(q, 1)) == CycNum(1) &&
                chi(GroupElement::rotation(q, q)) == CycNum(-q);
        for (long tpow = 1; tpow < 2 * q; ++tpow)
            if (tpow != q) cw_ok = cw_ok && chi(GroupElement::rotation(q, tpow)) == CycNum(0);
        log.add("analytic representation is W4 + W5 with the displayed character", cw_ok);
    }

    log.add("Shimura dimension (q+1)/2", rep0.shimura_dim == (q + 1) / 2,
            "value = " + std::to_string(rep0.shimura_dim));

    log.add("model automorphisms verified symbolically", verify_automorphisms(q).pass());
    log.add("covering map verified at lambda = 1/3",
            verify_covering_map(q, parse_lambda("1/3")).pass());
    log.add("Wiman limit identity", wiman_check(q).pass());
    log.add("curve squarefree for generic lambda", curve_squarefree_symbolic(q));

    {
        RatFun<Rat> j = j_ratfun();
        RatFun<Rat> lam = RatFun<Rat>::x(), one(Rat(1));
        bool jinv = j.compose(one / lam) == j && j.compose(one / (one - lam)) == j;
        bool jex = j_exact(CycNum(-1)) == CycNum(1728) && j_exact(CycNum(Rat(1, 2))) == CycNum(1728) &&
                   j_exact(CycNum(2)) == CycNum(1728) && j_exact(cyclotomic(6, 1)) == CycNum(0) &&
                   j_exact(cyclotomic(6, 5)) == CycNum(0);
        log.add("j is S3-invariant and takes values 1728/0 at the excluded points", jinv && jex);
    }

    log.add("real-surface test is S3-equivariant on 200 seeded samples",
            real_test_equivariant(equivariance_samples(200, seed)));

    if (q == 5) {
        bool rep_ok = true;
        std::string detail;
        try {
            symplectic_rep_q5();
        } catch (const std::exception& e) {
            rep_ok = false;
            detail = e.what();
        }
        log.add("bundled symplectic generators pass order and relation checks", rep_ok, detail);
        ReferenceFamilyReport ref = verify_reference_family();
        log.add("invariant family has dimension 3", ref.computed_dimension == 3);
        log.add("displayed (u,v,w) family spans the invariant space", ref.pass());
        log.add("invariant-family dimension equals the Shimura dimension",
                static_cast<long>(ref.computed_dimension) == rep0.shimura_dim);
        auto [rho_r, rho_s] = symplectic_rep_q5();
        SiegelFamily fam = invariant_family({rho_r, rho_s}, ref.convention);
        auto witness = sample_siegel_point(fam, budget, seed);
        log.add("positive-definite imaginary-part witness found", witness.has_value());
    }

    Json out{{"q", q}, {"pass", log.all_pass}, {"items", log.items}};
    return {out, log.all_pass};
}

// ---------------------------------------------------------------------------
// Subcommand surface
// ---------------------------------------------------------------------------

struct RunConfig {
    std::string subcommand;
    long q = 5;
    std::string lambda_text;
    std::string vector_text;
    std::string mode = "enumerate";  // for `vectors`
    std::string gens_path;
    std::string output_path;
    int digits = 30;
    long budget = 2000;
    unsigned long seed = 0;
};

inline int default_digits_from_env() {
    if (const char* env = std::getenv("FQ_DIGITS")) {
        int d = std::atoi(env);
        if (d >= 9) return d;
    }
    return 30;
}

/// Runs one subcommand; exit status 0 (success), 1 (verification failure),
/// 2 (usage error). The JSON report goes to `out` or to config.output_path.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Json report;
    int status = 0;
    try {
        if (cfg.digits < 9) throw std::invalid_argument("precision must be at least 9 digits");
        if (cfg.subcommand == "decompose") {
            CharacterTable table = character_table(cfg.q);
            GeneratingVector v = cfg.vector_text.empty() ? GeneratingVector::sigma0(cfg.q)
                                                         : GeneratingVector::parse(cfg.q, cfg.vector_text);
            report = to_json(table, decompose(table, v));
        } else if (cfg.subcommand == "vectors") {
            if (cfg.mode == "enumerate") {
                auto vecs = enumerate_vectors(cfg.q);
                Json arr = Json::array();
                for (const auto& v : vecs) arr.push_back(to_json(v));
                report = Json{{"q", cfg.q}, {"count", vecs.size()}, {"vectors", arr}};
            } else if (cfg.mode == "classify") {
                report = Json{{"q", cfg.q}, {"classes", to_json(essential_classes(cfg.q))}};
            } else if (cfg.mode == "orbits") {
                auto orb = topological_orbits(cfg.q);
                report = to_json(orb);
                report["q"] = cfg.q;
            } else {
                throw std::invalid_argument("unknown vectors mode: " + cfg.mode);
            }
        } else if (cfg.subcommand == "curve") {
            if (cfg.lambda_text.empty() || cfg.lambda_text == "symbolic") {
                report = to_json(curve_model_symbolic(cfg.q));
            } else {
                report = to_json(curve_model(cfg.q, parse_lambda(cfg.lambda_text)));
            }
        } else if (cfg.subcommand == "classify-lambda") {
            if (cfg.lambda_text.empty()) throw std::invalid_argument("classify-lambda needs --lambda");
            LambdaValue l = parse_lambda(cfg.lambda_text);
            LambdaClassification c = classify_lambda(l);
            report = to_json(c);
            if (l.exact && !(l.value == CycNum(0)) && !(l.value == CycNum(1)))
                report["moduli_bounds"] = to_json(moduli_field_bounds(l));
        } else if (cfg.subcommand == "wiman") {
            VerificationReport w = wiman_check(cfg.q);
            report = to_json(w);
            report["q"] = cfg.q;
            if (!w.pass()) status = 1;
        } else if (cfg.subcommand == "siegel-family") {
            std::vector<Mat<Rat>> gens;
            Convention conv = Convention::AZ_eq_ZD;
            if (!cfg.gens_path.empty()) {
                gens = read_generator_file(cfg.gens_path);
            } else {
                if (cfg.q != 5)
                    throw std::invalid_argument("bundled symplectic data exists only for q = 5; "
                                                "pass --gens for other groups");
                auto [rho_r, rho_s] = symplectic_rep_q5();
                gens = {rho_r, rho_s};
            }
            SiegelFamily fam = invariant_family(gens, conv);
            report = to_json(fam);
            if (cfg.gens_path.empty()) {
                ReferenceFamilyReport ref = verify_reference_family();
                report["reference"] = to_json(ref);
                if (!ref.pass()) status = 1;
            }
            if (!fam.basis.empty()) {
                auto witness = sample_siegel_point(fam, cfg.budget, cfg.seed);
                report["witness"] = witness ? to_json(*witness) : Json(nullptr);
            } else {
                report["witness"] = Json(nullptr);
            }
        } else if (cfg.subcommand == "shimura-dim") {
            CharacterTable table = character_table(cfg.q);
            GeneratingVector v = cfg.vector_text.empty() ? GeneratingVector::sigma0(cfg.q)
                                                         : GeneratingVector::parse(cfg.q, cfg.vector_text);
            report = Json{{"q", cfg.q},
                          {"vector", to_json(v)},
                          {"shimura_dim", shimura_dimension(table, v)}};
        } else if (cfg.subcommand == "reproduce-paper") {
            auto [j, pass] = reproduce_paper(cfg.q, cfg.seed, cfg.budget);
            report = j;
            if (!pass) status = 1;
        } else {
            throw std::invalid_argument("unknown subcommand: " + cfg.subcommand);
        }
    } catch (const validation_error& e) {
        err << "invalid generating vector: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "verification failure: " << e.what() << "\n";
        return 1;
    }

    std::string text = report.dump(2) + "\n";
    if (!cfg.output_path.empty()) {
        std::ofstream f(cfg.output_path);
        if (!f) {
            err << "usage error: cannot write output file: " << cfg.output_path << "\n";
            return 2;
        }
        f << text;
    } else {
        out << text;
    }
    return status;
}

}  // namespace fq
