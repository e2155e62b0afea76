#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "actions.hpp"
#include "reps.hpp"

namespace fq {

/// dim B_i = k_i (d_V (gamma - 1) + 1/2 sum_k (d_V - d_V^{<c_k>})), evaluated
/// per marked point. The trivial factor is the Jacobian of the quotient, so
/// its dimension is the orbit genus.
inline long factor_dimension(const CharacterTable& table, std::size_t rat_idx,
                             const GeometricSignature& gsig) {
    const RationalIrrep& w = table.rationals.at(rat_idx);
    if (rat_idx == 0) return gsig.orbit_genus;
    long d = table.irreps[w.representative].degree;
    Rat dim = Rat(d) * Rat(gsig.orbit_genus - 1);
    for (const auto& mark : gsig.marks)
        dim += Rat(d - fixed_dim(table, w.representative, mark.stabilizer), 2);
    dim *= Rat(w.field_degree);
    if (!is_integer(dim) || dim < 0)
        throw std::logic_error("factor dimension must be a nonnegative integer, got " +
                               rat_to_string(dim));
    return to_long(dim);
}

namespace detail {

using FixedDimMemo = std::map<std::pair<int, std::string>, long>;

inline long fixed_dim_memo(const CharacterTable& table, int irrep_idx, const Subgroup& H,
                           FixedDimMemo& memo) {
    auto key = std::make_pair(irrep_idx, H.key());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long d = fixed_dim(table, irrep_idx, H);
    memo.emplace(std::move(key), d);
    return d;
}

/// Factor dimensions without the conjugacy-class bookkeeping of a full
/// geometric signature; used for sweeps over many vectors.
inline std::array<long, 6> factor_dimensions(const CharacterTable& table, const GeneratingVector& v,
                                             FixedDimMemo& memo) {
    std::array<Subgroup, 4> stab{cyclic_subgroup(v[0]), cyclic_subgroup(v[1]),
                                 cyclic_subgroup(v[2]), cyclic_subgroup(v[3])};
    std::array<long, 6> dims{};
    dims[0] = 0;
    for (std::size_t i = 1; i < 6; ++i) {
        const RationalIrrep& w = table.rationals[i];
        long d = table.irreps[w.representative].degree;
        Rat dim = -Rat(d);
        for (const auto& H : stab) dim += Rat(d - fixed_dim_memo(table, w.representative, H, memo), 2);
        dim *= Rat(w.field_degree);
        if (!is_integer(dim) || dim < 0)
            throw std::logic_error("factor dimension must be a nonnegative integer");
        dims[i] = to_long(dim);
    }
    return dims;
}

}  // namespace detail

/// Every subgroup of D_2q: the cyclic <r^d> for d | 2q together with the
/// dihedral-type <r^d, s r^t> (0 <= t < d), each built by direct closure and
/// deduplicated. Sorted by (order, element set).
inline std::vector<Subgroup> all_subgroups(long q) {
    require_prime_q(q);
    std::map<std::string, Subgroup> seen;
    auto add = [&](const Subgroup& h) { seen.emplace(h.key(), h); };
    add(trivial_subgroup(q));
    for (long d : divisors(2 * q)) {
        if (d < 2 * q) add(cyclic_subgroup(GroupElement::rotation(q, d)));
        for (long t = 0; t < d; ++t) {
            if (d == 2 * q)
                add(cyclic_subgroup(GroupElement::reflection(q, t)));
            else
                add(subgroup_generated({GroupElement::rotation(q, d), GroupElement::reflection(q, t)}));
        }
    }
    std::vector<Subgroup> out;
    for (auto& [key, h] : seen) out.push_back(std::move(h));
    std::sort(out.begin(), out.end(),
              [](const Subgroup& a, const Subgroup& b) {
                  return a.order() != b.order() ? a.order() < b.order() : a.key() < b.key();
              });
    return out;
}

struct QuotientDecomposition {
    long genus;
    std::array<long, 6> exponents;  // n_i^H = d_{V_i}^H / s_{V_i}
};

/// Isogeny decomposition of J(S/H) induced by the group algebra
/// decomposition: exponents n_i^H and genus(S/H) = sum n_i^H dim B_i.
inline QuotientDecomposition quotient_decomposition(const CharacterTable& table,
                                                    const std::array<long, 6>& dims,
                                                    const Subgroup& H) {
    QuotientDecomposition out{};
    out.genus = 0;
    for (std::size_t i = 0; i < 6; ++i) {
        const RationalIrrep& w = table.rationals[i];
        long dH = fixed_dim(table, w.representative, H);
        if (dH % w.schur_index != 0)
            throw std::logic_error("d_V^H must be divisible by the Schur index");
        out.exponents[i] = dH / w.schur_index;
        out.genus += out.exponents[i] * dims[i];
    }
    return out;
}

struct Identification {
    std::size_t factor;  // index into W1..W6 (0-based)
    Subgroup witness;
    long quotient_genus;
};

/// Scans all subgroups N for the Jacobian-of-quotient criterion:
/// d_{V_i}^N = s_{V_i} and d_{V_l}^N = 0 for every other l with B_l != 0,
/// which certifies B_i ~ J(S/N).
inline std::vector<Identification> identify_jacobian_factors(const CharacterTable& table,
                                                             const std::array<long, 6>& dims) {
    std::vector<Identification> out;
    auto subgroups = all_subgroups(table.q);
    for (std::size_t i = 1; i < 6; ++i) {
        if (dims[i] == 0) continue;
        for (const auto& N : subgroups) {
            bool ok = fixed_dim(table, table.rationals[i].representative, N) ==
                      table.rationals[i].schur_index;
            for (std::size_t l = 0; ok && l < 6; ++l) {
                if (l == i || dims[l] == 0) continue;
                ok = fixed_dim(table, table.rationals[l].representative, N) == 0;
            }
            if (ok) {
                long genus = quotient_decomposition(table, dims, N).genus;
                out.push_back({i, N, genus});
            }
        }
    }
    return out;
}

/// Multiplicities of the complex irreducibles in the representation on
/// holomorphic 1-forms, from the local monodromy eigenvalues: for nontrivial
/// V, n_V = d_V (gamma - 1) + sum_k sum_alpha N_{k,alpha} frac(-alpha/m_k),
/// with N_{k,alpha} recovered from chi(c_k) and chi(c_k^2).
struct CWMultiplicities {
    std::vector<long> mult;          // by complex irrep index
    std::vector<CycNum> char_by_class;
};

namespace detail {

/// Eigenvalue exponents of V(c) among m-th roots of unity (m = order of c),
/// as a multiset; trace and power-trace determine them for degree <= 2.
inline std::vector<long> eigenvalue_exponents(const CharacterTable& table, int irrep_idx,
                                              const GroupElement& c) {
    const long m = c.order();
    const Irrep& rep = table.irreps[irrep_idx];
    const CycNum trace = table.character(irrep_idx, c);
    if (rep.degree == 1) {
        for (long a = 0; a < m; ++a)
            if (trace == cyclotomic(m, a)) return {a};
        throw std::logic_error("degree-1 character value is not an m-th root of unity");
    }
    const CycNum det = (trace * trace - table.character(irrep_idx, c * c)) / CycNum(2);
    for (long a1 = 0; a1 < m; ++a1)
        for (long a2 = a1; a2 < m; ++a2)
            if (cyclotomic(m, a1) + cyclotomic(m, a2) == trace &&
                cyclotomic(m, a1 + a2) == det)
                return {a1, a2};
    throw std::logic_error("no eigenvalue pair matches trace and determinant");
}

}  // namespace detail

inline CWMultiplicities chevalley_weil(const CharacterTable& table, const GeneratingVector& v) {
    const long gamma = 0;
    CWMultiplicities out;
    out.mult.assign(table.irreps.size(), 0);
    for (std::size_t vi = 0; vi < table.irreps.size(); ++vi) {
        if (vi == 0) {
            out.mult[vi] = gamma;
            continue;
        }
        long d = table.irreps[vi].degree;
        Rat n = Rat(d) * Rat(gamma - 1);
        for (int k = 0; k < 4; ++k) {
            const long m = v[k].order();
            for (long a : detail::eigenvalue_exponents(table, static_cast<int>(vi), v[k]))
                if (a != 0) n += Rat(m - a, m);
        }
        if (!is_integer(n) || n < 0)
            throw std::logic_error("Chevalley-Weil multiplicity must be a nonnegative integer");
        out.mult[vi] = to_long(n);
    }
    long total = 0;
    for (std::size_t vi = 0; vi < table.irreps.size(); ++vi)
        total += out.mult[vi] * table.irreps[vi].degree;
    if (total != table.q)
        throw std::logic_error("analytic representation must have dimension q");
    for (std::size_t ci = 0; ci < table.classes.size(); ++ci) {
        CycNum val(0);
        for (std::size_t vi = 0; vi < table.irreps.size(); ++vi)
            if (out.mult[vi] != 0) val += CycNum(out.mult[vi]) * table.irreps[vi].values[ci];
        out.char_by_class.push_back(val);
    }
    return out;
}

/// Dimension of the Shimura family: (1/8q) sum over G of chi(g)^2 + chi(g^2),
/// with chi the character of the analytic representation; evaluated exactly.
inline long shimura_dimension(const CharacterTable& table, const GeneratingVector& v) {
    CWMultiplicities cw = chevalley_weil(table, v);
    CycNum sum(0);
    for (const auto& g : all_elements(table.q)) {
        const CycNum& x = cw.char_by_class[table.class_of(g)];
        sum += x * x + cw.char_by_class[table.class_of(g * g)];
    }
    CycNum n = sum / CycNum(8 * table.q);
    if (!n.is_rational() || !is_integer(n.rat_value()) || n.rat_value() < 0)
        throw std::logic_error("Shimura dimension must be a nonnegative integer");
    return to_long(n.rat_value());
}

struct FactorInfo {
    std::string label;
    long multiplicity;  // n_i
    long field_degree;  // k_i
    long dim;
};

struct DecompositionReport {
    long q;
    GeneratingVector vec;
    std::array<long, 6> dims;
    std::vector<FactorInfo> factors;
    long sum_check;  // sum n_i dim B_i, must equal q
    std::vector<Identification> identifications;
    CWMultiplicities cw;
    long shimura_dim;
};

inline DecompositionReport decompose(const CharacterTable& table, const GeneratingVector& v) {
    if (v.q() != table.q) throw std::invalid_argument("vector and table disagree on q");
    DecompositionReport rep{table.q, v, {}, {}, 0, {}, {}, 0};
    GeometricSignature gsig = geometric_signature(v);
    long sum = 0;
    for (std::size_t i = 0; i < 6; ++i) {
        rep.dims[i] = factor_dimension(table, i, gsig);
        const RationalIrrep& w = table.rationals[i];
        rep.factors.push_back({w.label, w.multiplicity, w.field_degree, rep.dims[i]});
        sum += w.multiplicity * rep.dims[i];
    }
    rep.sum_check = sum;
    if (sum != table.q) throw std::logic_error("sum of n_i dim B_i must equal q");
    rep.identifications = identify_jacobian_factors(table, rep.dims);
    rep.cw = chevalley_weil(table, v);
    rep.shimura_dim = shimura_dimension(table, v);
    return rep;
}

inline DecompositionReport decompose(long q, const GeneratingVector& v) {
    return decompose(character_table(q), v);
}

/// Partition of all generating vectors by their factor-dimension vector.
struct EssentialClass {
    std::array<long, 6> dims;
    GeneratingVector representative;  // least member
    long count;
};

inline std::vector<EssentialClass> essential_classes(long q) {
    CharacterTable table = character_table(q);
    detail::FixedDimMemo memo;
    std::map<std::array<long, 6>, std::pair<GeneratingVector, long>> classes;
    for (const auto& v : enumerate_vectors(q)) {
        auto dims = detail::factor_dimensions(table, v, memo);
        auto it = classes.find(dims);
        if (it == classes.end())
            classes.emplace(dims, std::make_pair(v, 1L));
        else {
            it->second.second += 1;
            if (v < it->second.first) it->second.first = v;
        }
    }
    std::vector<EssentialClass> out;
    for (const auto& [dims, entry] : classes) out.push_back({dims, entry.first, entry.second});
    return out;
}

}  // namespace fq
