#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "dihedral.hpp"

namespace fq {

/// Complex irreducible representation of D_2q, stored through its character
/// as a class function. V1..V4 have degree one; V_(k+4), 1 <= k <= q-1, has
/// degree two with r -> diag(w_2q^k, w_2q^-k) and vanishing character on
/// reflections.
struct Irrep {
    std::string label;
    int k = 0;  // 0 for the degree-one representations
    int degree = 1;
    std::vector<CycNum> values;  // indexed by conjugacy class

    const CycNum& value_on_class(std::size_t class_idx) const { return values.at(class_idx); }
};

/// Galois orbit of complex irreducibles forming one rational irreducible
/// W1..W6, together with the numerology used by the decomposition formulas:
/// Schur index s_V (1 for every dihedral irreducible), n_i = d_V/s_V, and
/// k_i = [L_V : Q].
struct RationalIrrep {
    std::string label;
    std::vector<int> constituents;  // indices into CharacterTable::irreps
    int representative;             // index of the chosen associated complex irrep
    long degree;
    long schur_index = 1;
    long field_degree = 1;  // k_i
    long multiplicity = 1;  // n_i = d_V / s_V
};

class CharacterTable {
   public:
    long q;
    std::vector<ConjugacyClass> classes;
    std::vector<Irrep> irreps;              // 4 + (q-1) rows
    std::vector<RationalIrrep> rationals;   // W1..W6

    std::size_t class_of(const GroupElement& g) const { return class_lookup_.at(g.index()); }

    const CycNum& character(std::size_t irrep_idx, const GroupElement& g) const {
        return irreps[irrep_idx].values[class_of(g)];
    }

    friend CharacterTable character_table(long q);

   private:
    std::vector<std::size_t> class_lookup_;
};

/// Dimension of the subspace of V fixed by H: (1/|H|) sum over H of the
/// character. The average is provably a nonnegative integer; anything else
/// signals an internal arithmetic bug.
inline long fixed_dim(const CharacterTable& table, std::size_t irrep_idx, const Subgroup& H) {
    if (H.q() != table.q) throw std::invalid_argument("subgroup from a different group");
    CycNum sum(0);
    for (const auto& h : H.elements()) sum += table.character(irrep_idx, h);
    CycNum avg = sum / CycNum(Rat(static_cast<long>(H.order())));
    if (!avg.is_rational() || !is_integer(avg.rat_value()))
        throw std::logic_error("fixed-subspace dimension is not an integer (internal bug)");
    long d = to_long(avg.rat_value());
    if (d < 0 || d > table.irreps[irrep_idx].degree)
        throw std::logic_error("fixed-subspace dimension out of range (internal bug)");
    return d;
}

inline CharacterTable character_table(long q) {
    require_prime_q(q);
    CharacterTable t;
    t.q = q;
    t.classes = conjugacy_classes(q);
    t.class_lookup_.assign(4 * q, 0);
    for (std::size_t ci = 0; ci < t.classes.size(); ++ci)
        for (const auto& g : t.classes[ci].elements) t.class_lookup_[g.index()] = ci;

    auto sign_pow = [](long e) { return (e % 2 == 0) ? 1 : -1; };

    for (int v = 1; v <= 4; ++v) {
        Irrep rep;
        rep.label = "V" + std::to_string(v);
        rep.degree = 1;
        for (const auto& cls : t.classes) {
            const GroupElement& g = cls.representative;
            long val = 1;
            if (v == 2) val = g.is_reflection() ? -1 : 1;
            if (v == 3) val = sign_pow(g.r_exp());
            if (v == 4) val = g.is_reflection() ? -sign_pow(g.r_exp()) : sign_pow(g.r_exp());
            rep.values.emplace_back(val);
        }
        t.irreps.push_back(std::move(rep));
    }
    for (int k = 1; k <= q - 1; ++k) {
        Irrep rep;
        rep.label = "V" + std::to_string(k + 4);
        rep.k = k;
        rep.degree = 2;
        for (const auto& cls : t.classes) {
            const GroupElement& g = cls.representative;
            if (g.is_reflection())
                rep.values.emplace_back(0);
            else
                rep.values.push_back(cyclotomic(2 * q, k * g.r_exp()) +
                                     cyclotomic(2 * q, -k * g.r_exp()));
        }
        t.irreps.push_back(std::move(rep));
    }

    // Construction-time sanity: character degrees and row norms.
    long sum_sq = 0;
    for (const auto& rep : t.irreps) sum_sq += rep.degree * rep.degree;
    if (sum_sq != 4 * q) throw std::logic_error("sum of squared degrees must be 4q");
    for (std::size_t i = 0; i < t.irreps.size(); ++i) {
        if (t.irreps[i].values[t.class_of(GroupElement::identity(q))] !=
            CycNum(t.irreps[i].degree))
            throw std::logic_error("character at identity must equal the degree");
        CycNum norm(0);
        for (std::size_t ci = 0; ci < t.classes.size(); ++ci)
            norm += CycNum(static_cast<long>(t.classes[ci].size())) * t.irreps[i].values[ci] *
                    t.irreps[i].values[ci].conj();
        if (norm != CycNum(4 * q)) throw std::logic_error("irreducible character has wrong norm");
    }

    // Rational irreducibles: W1..W4 are V1..V4; W5 collects the V_(k+4) with
    // k odd (rotation image of order 2q), W6 those with k even (order q).
    for (int v = 1; v <= 4; ++v) {
        RationalIrrep w;
        w.label = "W" + std::to_string(v);
        w.constituents = {v - 1};
        w.representative = v - 1;
        w.degree = 1;
        t.rationals.push_back(std::move(w));
    }
    RationalIrrep w5, w6;
    w5.label = "W5";
    w6.label = "W6";
    for (int k = 1; k <= q - 1; ++k) {
        (k % 2 == 1 ? w5 : w6).constituents.push_back(3 + k);
    }
    w5.representative = 3 + 1;  // V5, k = 1
    w6.representative = 3 + 2;  // V6, k = 2
    for (RationalIrrep* w : {&w5, &w6}) {
        w->degree = q - 1;
        w->field_degree = (q - 1) / 2;
        w->multiplicity = 2;  // d_V / s_V with d_V = 2, s_V = 1
        t.rationals.push_back(*w);
    }
    return t;
}

/// The six rational irreducible representations of D_2q.
inline std::vector<RationalIrrep> rational_irreducibles(long q) {
    return character_table(q).rationals;
}

/// Exact pairwise orthogonality check (sum over classes with class weights).
inline bool characters_orthogonal(const CharacterTable& t) {
    for (std::size_t i = 0; i < t.irreps.size(); ++i) {
        for (std::size_t j = 0; j < t.irreps.size(); ++j) {
            CycNum sum(0);
            for (std::size_t ci = 0; ci < t.classes.size(); ++ci)
                sum += CycNum(static_cast<long>(t.classes[ci].size())) * t.irreps[i].values[ci] *
                       t.irreps[j].values[ci].conj();
            if (sum != CycNum(i == j ? 4 * t.q : 0)) return false;
        }
    }
    return true;
}

}  // namespace fq
