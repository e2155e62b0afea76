#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "dihedral.hpp"
#include "rational.hpp"

namespace fq {

/// Signature of a group action: quotient genus plus branch orders.
struct SignatureType {
    long orbit_genus = 0;
    std::vector<long> periods;

    static SignatureType quadrilateral(long q) { return {0, {2, 2, 2, 2 * q}}; }
};

/// Genus g from 2g - 2 = |G|(2*gamma - 2) + |G| * sum(1 - 1/m_i), returned as
/// an exact rational; callers decide whether a non-integral or negative
/// result invalidates the signature.
inline Rat riemann_hurwitz_genus(long group_order, const SignatureType& sig) {
    Rat rhs = Rat(group_order) * Rat(2 * sig.orbit_genus - 2);
    for (long m : sig.periods) {
        if (m < 2) throw std::invalid_argument("branch orders must be >= 2");
        rhs += Rat(group_order) * (Rat(1) - Rat(1, m));
    }
    return (rhs + 2) / 2;
}

/// Distinct rejection reasons for candidate generating vectors.
class validation_error : public std::runtime_error {
   public:
    enum class Kind { wrong_orders, product_not_one, not_generating };
    validation_error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

   private:
    Kind kind_;
};

using Tuple4 = std::array<GroupElement, 4>;

inline std::uint32_t pack_tuple(const Tuple4& g) {
    std::uint32_t k = 0;
    for (const auto& e : g) k = (k << 7) | static_cast<std::uint32_t>(e.index());
    return k;
}

/// Generating vector (g1, g2, g3, g4) of type (0; 2, 2, 2, 2q): orders as
/// stated and in that order, product one, and the four entries generate all
/// of D_2q.
class GeneratingVector {
   public:
    static GeneratingVector validate(long q, const Tuple4& g) {
        using Kind = validation_error::Kind;
        const std::array<long, 4> want{2, 2, 2, 2 * q};
        for (int i = 0; i < 4; ++i) {
            if (g[i].q() != q) throw std::invalid_argument("vector entries from a different group");
            if (g[i].order() != want[i])
                throw validation_error(Kind::wrong_orders,
                                       "entry " + std::to_string(i + 1) + " has order " +
                                           std::to_string(g[i].order()) + ", expected " +
                                           std::to_string(want[i]));
        }
        if (!(g[0] * g[1] * g[2] * g[3]).is_identity())
            throw validation_error(Kind::product_not_one, "product of the entries is not 1");
        Subgroup gen = subgroup_generated({g.begin(), g.end()});
        if (gen.order() != static_cast<std::size_t>(4 * q))
            throw validation_error(Kind::not_generating,
                                   "entries generate a proper subgroup of order " +
                                       std::to_string(gen.order()));
        GeneratingVector v;
        v.q_ = q;
        v.g_ = g;
        return v;
    }

    static GeneratingVector parse(long q, const std::string& text) {
        Tuple4 g;
        std::size_t start = 0;
        int slot = 0;
        for (std::size_t i = 0; i <= text.size(); ++i) {
            if (i == text.size() || text[i] == ',') {
                if (slot >= 4) throw std::invalid_argument("generating vector needs exactly 4 entries");
                g[slot++] = GroupElement::parse(q, text.substr(start, i - start));
                start = i + 1;
            }
        }
        if (slot != 4) throw std::invalid_argument("generating vector needs exactly 4 entries");
        return validate(q, g);
    }

    long q() const { return q_; }
    const Tuple4& entries() const { return g_; }
    const GroupElement& operator[](int i) const { return g_[i]; }

    /// sigma_0 = (s, s r^-2, r^q, r^(q+2)).
    static GeneratingVector sigma0(long q) {
        return validate(q, {GroupElement::reflection(q, 0), GroupElement::reflection(q, -2),
                            GroupElement::rotation(q, q), GroupElement::rotation(q, q + 2)});
    }

    /// sigma_1 = (sr, s r^-1, r^q, r^(q+2)).
    static GeneratingVector sigma1(long q) {
        return validate(q, {GroupElement::reflection(q, 1), GroupElement::reflection(q, -1),
                            GroupElement::rotation(q, q), GroupElement::rotation(q, q + 2)});
    }

    friend bool operator==(const GeneratingVector& a, const GeneratingVector& b) {
        return a.q_ == b.q_ && a.g_ == b.g_;
    }
    friend bool operator!=(const GeneratingVector& a, const GeneratingVector& b) { return !(a == b); }
    friend bool operator<(const GeneratingVector& a, const GeneratingVector& b) {
        return a.packed() < b.packed();
    }

    std::uint32_t packed() const { return pack_tuple(g_); }

    std::string to_string() const {
        std::string out;
        for (int i = 0; i < 4; ++i) {
            if (i) out += ", ";
            out += g_[i].to_string();
        }
        return out;
    }

   private:
    long q_ = 0;
    Tuple4 g_{};
};

/// All generating vectors of type (0; 2, 2, 2, 2q), in lexicographic order of
/// the entry indices. The first three entries range over the 2q+1 involutions
/// and the fourth is forced by product-one, so candidates are scanned as
/// triples; each survivor still goes through the full closure validation.
inline std::vector<GeneratingVector> enumerate_vectors(long q) {
    require_prime_q(q);
    std::vector<GroupElement> involutions;
    for (const auto& g : all_elements(q))
        if (g.order() == 2) involutions.push_back(g);
    std::vector<GeneratingVector> out;
    for (const auto& g1 : involutions)
        for (const auto& g2 : involutions)
            for (const auto& g3 : involutions) {
                GroupElement g4 = (g1 * g2 * g3).inverse();
                if (g4.order() != 2 * q) continue;
                try {
                    out.push_back(GeneratingVector::validate(q, {g1, g2, g3, g4}));
                } catch (const validation_error&) {
                }
            }
    return out;
}

// Hurwitz moves act on adjacent slots (i, i+1), 1-based i in {1, 2, 3}:
// (c_i, c_(i+1)) -> (c_i c_(i+1) c_i^-1, c_i). The product telescopes, so
// validity is preserved, but the move on slots (3, 4) permutes the branch
// orders: results are generating tuples of the same unordered multiset of
// orders, not necessarily typed (2, 2, 2, 2q) in order.

inline Tuple4 braid_move(const Tuple4& g, int i) {
    if (i < 1 || i > 3) throw std::invalid_argument("braid position must be 1, 2 or 3");
    Tuple4 out = g;
    out[i - 1] = g[i - 1] * g[i] * g[i - 1].inverse();
    out[i] = g[i - 1];
    return out;
}

inline Tuple4 braid_move_inverse(const Tuple4& g, int i) {
    if (i < 1 || i > 3) throw std::invalid_argument("braid position must be 1, 2 or 3");
    Tuple4 out = g;
    out[i - 1] = g[i];
    out[i] = g[i].inverse() * g[i - 1] * g[i];
    return out;
}

inline Tuple4 apply_automorphism(const GroupAutomorphism& aut, const Tuple4& g) {
    Tuple4 out;
    for (int i = 0; i < 4; ++i) out[i] = aut.apply(g[i]);
    return out;
}

inline GeneratingVector apply_automorphism(const GroupAutomorphism& aut, const GeneratingVector& v) {
    return GeneratingVector::validate(v.q(), apply_automorphism(aut, v.entries()));
}

/// Checks the loose invariants shared by every state of the orbit search:
/// orders form the multiset {2, 2, 2, 2q}, the product is one, and the
/// entries generate the whole group.
inline void require_loose_vector(long q, const Tuple4& g) {
    std::array<long, 4> orders;
    for (int i = 0; i < 4; ++i) orders[i] = g[i].order();
    std::sort(orders.begin(), orders.end());
    if (orders != std::array<long, 4>{2, 2, 2, 2 * q})
        throw validation_error(validation_error::Kind::wrong_orders, "order multiset is not {2,2,2,2q}");
    if (!(g[0] * g[1] * g[2] * g[3]).is_identity())
        throw validation_error(validation_error::Kind::product_not_one, "product of the entries is not 1");
    if (subgroup_generated({g.begin(), g.end()}).order() != static_cast<std::size_t>(4 * q))
        throw validation_error(validation_error::Kind::not_generating, "entries generate a proper subgroup");
}

/// Geometric signature: branch orders plus the conjugacy class of each
/// stabilizer <c_k>, identified by the least conjugate element set.
struct GeometricSignature {
    long orbit_genus = 0;
    struct MarkedClass {
        long period;
        Subgroup stabilizer;    // the actual <c_k>
        std::string class_key;  // canonical key of the least conjugate
    };
    std::vector<MarkedClass> marks;
};

inline GeometricSignature geometric_signature(const GeneratingVector& v) {
    GeometricSignature sig;
    sig.orbit_genus = 0;
    for (int i = 0; i < 4; ++i) {
        Subgroup h = cyclic_subgroup(v[i]);
        std::string best = h.key();
        for (const auto& c : all_elements(v.q())) {
            std::string k = h.conjugated(c).key();
            if (k < best) best = k;
        }
        sig.marks.push_back({v[i].order(), h, best});
    }
    return sig;
}

/// Canonical form of a generating vector per the two-family normalization:
/// an S3 permutation parks r^q in slot 3 (keeping the reflections in their
/// original relative order), then conjugation by a rotation turns the slot-1
/// reflection into s (even case) or sr (odd case), landing on
/// sigma_(0,n) = (s, s r^-n, r^q, r^(q+n)) or
/// sigma_(1,n) = (sr, s r^(1-n), r^q, r^(q+n)).
struct NormalForm {
    int parity;                      // 0 or 1
    long n;                          // e1 - e2 mod 2q, even, nonzero
    GeneratingVector canonical;
    std::array<int, 3> permutation;  // output slot i took input slot permutation[i]
    GroupElement conjugator;         // rotation h; entries were mapped g -> h^-1 g h
};

inline NormalForm normalize(const GeneratingVector& v) {
    const long q = v.q();
    int rq_slot = -1;
    for (int i = 0; i < 3; ++i)
        if (!v[i].is_reflection()) rq_slot = i;
    if (rq_slot < 0)
        throw std::logic_error("valid vector must carry r^q in one of the first three slots");

    std::array<int, 3> perm{};
    int out = 0;
    for (int i = 0; i < 3; ++i)
        if (i != rq_slot) perm[out++] = i;
    perm[2] = rq_slot;

    Tuple4 g;
    for (int i = 0; i < 3; ++i) g[i] = v[perm[i]];
    g[3] = (g[0] * g[1] * g[2]).inverse();

    long e1 = g[0].r_exp(), e2 = g[1].r_exp();
    int parity = static_cast<int>(e1 % 2);
    // Conjugation by h = r^t sends s r^e to s r^(e - 2t); pick t with
    // e1 - 2t = parity (mod 2q).
    long t = mod((e1 - parity) / 2, q);
    GroupElement h = GroupElement::rotation(q, t);
    for (auto& e : g) e = conjugate(e, h);

    long n = mod(e1 - e2, 2 * q);
    NormalForm nf{parity, n, GeneratingVector::validate(q, g), perm, h};
    Tuple4 expect{GroupElement::reflection(q, parity), GroupElement::reflection(q, parity - n),
                  GroupElement::rotation(q, q), GroupElement::rotation(q, q + n)};
    if (nf.canonical.entries() != expect)
        throw std::logic_error("normalization did not reach the canonical form");
    return nf;
}

struct OrbitReport {
    long orbit_count = 0;
    std::vector<long> orbit_sizes;                  // typed members per orbit, descending
    std::vector<GeneratingVector> representatives;  // least typed member of each orbit
};

/// Orbit partition of enumerate_vectors(q) under the group generated by the
/// three Hurwitz moves (and inverses) together with Aut(G). The search walks
/// loosely-ordered tuples, since the move on slots (3, 4) permutes the branch
/// orders; sizes count the typed vectors in each orbit.
inline OrbitReport topological_orbits(long q) {
    auto vectors = enumerate_vectors(q);
    auto auts = enumerate_automorphisms(q);
    std::map<std::uint32_t, const GeneratingVector*> pending;
    for (const auto& v : vectors) pending.emplace(v.packed(), &v);

    OrbitReport report;
    while (!pending.empty()) {
        const GeneratingVector& seed = *pending.begin()->second;
        std::unordered_set<std::uint32_t> visited{seed.packed()};
        std::vector<Tuple4> frontier{seed.entries()};
        while (!frontier.empty()) {
            std::vector<Tuple4> next;
            auto push = [&](const Tuple4& w) {
                if (visited.insert(pack_tuple(w)).second) next.push_back(w);
            };
            for (const auto& g : frontier) {
                for (int i = 1; i <= 3; ++i) {
                    push(braid_move(g, i));
                    push(braid_move_inverse(g, i));
                }
                for (const auto& aut : auts) push(apply_automorphism(aut, g));
            }
            frontier = std::move(next);
        }
        long typed = 0;
        GeneratingVector least = seed;
        for (auto it = pending.begin(); it != pending.end();) {
            if (visited.count(it->first)) {
                if (*it->second < least) least = *it->second;
                ++typed;
                it = pending.erase(it);
            } else {
                ++it;
            }
        }
        report.orbit_count += 1;
        report.orbit_sizes.push_back(typed);
        report.representatives.push_back(least);
    }
    std::sort(report.orbit_sizes.rbegin(), report.orbit_sizes.rend());
    return report;
}

}  // namespace fq
