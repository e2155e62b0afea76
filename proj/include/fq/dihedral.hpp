#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"

namespace fq {

/// Element of G = D_2q = <r, s | r^(2q) = s^2 = (sr)^2 = 1>, order 4q, in the
/// unique normal form s^a r^b with a in {0,1} and 0 <= b < 2q. Elements carry
/// their ambient q; mixing elements of different groups is a hard error.
class GroupElement {
   public:
    GroupElement() : q_(0), s_(0), r_(0) {}

    static GroupElement make(long q, int s_exp, long r_exp) {
        require_prime_q(q);
        GroupElement g;
        g.q_ = q;
        g.s_ = static_cast<int>(mod(s_exp, 2));
        g.r_ = mod(r_exp, 2 * q);
        return g;
    }

    static GroupElement identity(long q) { return make(q, 0, 0); }
    static GroupElement rotation(long q, long e) { return make(q, 0, e); }
    static GroupElement reflection(long q, long e) { return make(q, 1, e); }

    long q() const { return q_; }
    int s_exp() const { return s_; }
    long r_exp() const { return r_; }
    bool is_reflection() const { return s_ == 1; }
    bool is_identity() const { return s_ == 0 && r_ == 0; }

    /// Dense index in [0, 4q): a*2q + b.
    long index() const { return s_ * 2 * q_ + r_; }

    static GroupElement from_index(long q, long idx) { return make(q, idx >= 2 * q ? 1 : 0, idx % (2 * q)); }

    // s^a1 r^b1 * s^a2 r^b2 = s^(a1+a2) r^(b2 + b1*(-1)^a2), from r s = s r^-1.
    friend GroupElement mul(const GroupElement& a, const GroupElement& b) {
        a.check_same_group(b);
        long b_new = b.r_ + (b.s_ ? -a.r_ : a.r_);
        return make(a.q_, a.s_ + b.s_, b_new);
    }

    friend GroupElement operator*(const GroupElement& a, const GroupElement& b) { return mul(a, b); }

    GroupElement inverse() const {
        if (s_ == 1) return *this;  // reflections are involutions
        return make(q_, 0, -r_);
    }

    GroupElement pow(long e) const {
        GroupElement acc = identity(q_), base = *this;
        long k = e;
        if (k < 0) {
            base = base.inverse();
            k = -k;
        }
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    /// h g h^-1.
    friend GroupElement conjugate(const GroupElement& g, const GroupElement& h) {
        return h * g * h.inverse();
    }

    /// Smallest k >= 1 with g^k = 1; divides 4q.
    long order() const {
        if (s_ == 1) return 2;
        if (r_ == 0) return 1;
        return 2 * q_ / gcd(r_, 2 * q_);
    }

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        a.check_same_group(b);
        return a.s_ == b.s_ && a.r_ == b.r_;
    }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
    friend bool operator<(const GroupElement& a, const GroupElement& b) {
        a.check_same_group(b);
        return a.index() < b.index();
    }

    /// Textual normal form: "1", "s", "r^b", "s r^b" (exponent 1 printed bare).
    std::string to_string() const {
        if (is_identity()) return "1";
        std::string out;
        if (s_) out = "s";
        if (r_ != 0) {
            if (!out.empty()) out += " ";
            out += (r_ == 1) ? "r" : "r^" + std::to_string(r_);
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
        return os << g.to_string();
    }

    /// Parses the textual grammar, whitespace-insensitive; exponents may be
    /// negative and are reduced mod 2q.
    static GroupElement parse(long q, const std::string& text) {
        std::string t;
        for (char c : text)
            if (!isspace(static_cast<unsigned char>(c)) && c != '*') t += c;
        if (t.empty()) throw std::invalid_argument("empty group element");
        if (t == "1") return identity(q);
        std::size_t pos = 0;
        int s_exp = 0;
        if (t[pos] == 's') {
            ++pos;
            s_exp = 1;
            if (pos < t.size() && t[pos] == '^') {
                std::size_t used = 0;
                long e = std::stol(t.substr(pos + 1), &used);
                pos += 1 + used;
                s_exp = static_cast<int>(mod(e, 2));
            }
        }
        long r_exp = 0;
        if (pos < t.size()) {
            if (t[pos] != 'r') throw std::invalid_argument("cannot parse group element: '" + text + "'");
            ++pos;
            r_exp = 1;
            if (pos < t.size() && t[pos] == '^') {
                std::size_t used = 0;
                r_exp = std::stol(t.substr(pos + 1), &used);
                pos += 1 + used;
            }
        }
        if (pos != t.size()) throw std::invalid_argument("cannot parse group element: '" + text + "'");
        return make(q, s_exp, r_exp);
    }

   private:
    long q_;
    int s_;
    long r_;

    void check_same_group(const GroupElement& o) const {
        if (q_ != o.q_) throw std::invalid_argument("group elements from different D_2q");
    }
};

inline std::vector<GroupElement> all_elements(long q) {
    std::vector<GroupElement> v;
    v.reserve(4 * q);
    for (long i = 0; i < 4 * q; ++i) v.push_back(GroupElement::from_index(q, i));
    return v;
}

/// Subgroup of D_2q as an explicit sorted element set plus its generators.
class Subgroup {
   public:
    Subgroup(long q, std::vector<GroupElement> elems, std::vector<GroupElement> gens)
        : q_(q), elems_(std::move(elems)), gens_(std::move(gens)) {
        std::sort(elems_.begin(), elems_.end());
    }

    long q() const { return q_; }
    std::size_t order() const { return elems_.size(); }
    const std::vector<GroupElement>& elements() const { return elems_; }
    const std::vector<GroupElement>& generators() const { return gens_; }

    bool contains(const GroupElement& g) const {
        return std::binary_search(elems_.begin(), elems_.end(), g);
    }

    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elems_ == b.elems_; }

    /// Stable identity across equal element sets, used as a map key.
    std::string key() const {
        std::string k;
        for (const auto& g : elems_) k += std::to_string(g.index()) + ",";
        return k;
    }

    Subgroup conjugated(const GroupElement& h) const {
        std::vector<GroupElement> e, g;
        for (const auto& x : elems_) e.push_back(conjugate(x, h));
        for (const auto& x : gens_) g.push_back(conjugate(x, h));
        return Subgroup(q_, std::move(e), std::move(g));
    }

    std::string to_string() const {
        std::string out = "<";
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (i) out += ", ";
            out += gens_[i].to_string();
        }
        return out + ">";
    }

   private:
    long q_;
    std::vector<GroupElement> elems_;
    std::vector<GroupElement> gens_;
};

/// Closure of a nonempty generating set under products and inverses.
inline Subgroup subgroup_generated(const std::vector<GroupElement>& gens) {
    if (gens.empty()) throw std::invalid_argument("subgroup needs at least one generator");
    long q = gens.front().q();
    std::vector<char> seen(4 * q, 0);
    std::vector<GroupElement> elems{GroupElement::identity(q)};
    seen[0] = 1;
    std::vector<GroupElement> frontier = elems;
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& f : frontier) {
            for (const auto& g : gens) {
                for (GroupElement h : {f * g, f * g.inverse()}) {
                    if (!seen[h.index()]) {
                        seen[h.index()] = 1;
                        elems.push_back(h);
                        next.push_back(h);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    if ((4 * q) % elems.size() != 0) throw std::logic_error("subgroup order does not divide 4q");
    return Subgroup(q, std::move(elems), gens);
}

inline Subgroup cyclic_subgroup(const GroupElement& g) { return subgroup_generated({g}); }

inline Subgroup full_group(long q) {
    return subgroup_generated({GroupElement::rotation(q, 1), GroupElement::reflection(q, 0)});
}

inline Subgroup trivial_subgroup(long q) { return subgroup_generated({GroupElement::identity(q)}); }

struct ConjugacyClass {
    GroupElement representative;
    std::vector<GroupElement> elements;  // sorted
    std::size_t size() const { return elements.size(); }
};

/// Full partition of D_2q into conjugacy classes, ordered by least element
/// index (so the identity class comes first). Classes of order-2 elements are
/// the even reflections, the odd reflections and {r^q}; rotations pair up as
/// {r^t, r^-t}.
inline std::vector<ConjugacyClass> conjugacy_classes(long q) {
    require_prime_q(q);
    auto elems = all_elements(q);
    std::vector<char> assigned(4 * q, 0);
    std::vector<ConjugacyClass> classes;
    for (const auto& g : elems) {
        if (assigned[g.index()]) continue;
        std::vector<GroupElement> orbit;
        std::vector<char> in_orbit(4 * q, 0);
        for (const auto& h : elems) {
            GroupElement c = conjugate(g, h);
            if (!in_orbit[c.index()]) {
                in_orbit[c.index()] = 1;
                orbit.push_back(c);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        for (const auto& c : orbit) assigned[c.index()] = 1;
        classes.push_back({orbit.front(), std::move(orbit)});
    }
    return classes;
}

/// Automorphism of D_2q: r -> r^a (gcd(a, 2q) = 1), s -> s r^b.
class GroupAutomorphism {
   public:
    GroupAutomorphism(long q, long a, long b) : q_(q), a_(mod(a, 2 * q)), b_(mod(b, 2 * q)) {
        if (gcd(a_, 2 * q_) != 1)
            throw std::invalid_argument("image of r must again have order 2q");
        validate();
    }

    long q() const { return q_; }
    long a() const { return a_; }
    long b() const { return b_; }

    GroupElement apply(const GroupElement& g) const {
        // s^e r^m -> (s r^b)^e r^(a m); for e = 1 this is s r^(b + a m).
        if (g.is_reflection()) return GroupElement::make(q_, 1, b_ + a_ * g.r_exp());
        return GroupElement::make(q_, 0, a_ * g.r_exp());
    }

    static GroupAutomorphism identity(long q) { return GroupAutomorphism(q, 1, 0); }

    /// this o other.
    GroupAutomorphism compose(const GroupAutomorphism& other) const {
        return GroupAutomorphism(q_, a_ * other.a_, b_ + a_ * other.b_);
    }

    friend bool operator==(const GroupAutomorphism& x, const GroupAutomorphism& y) {
        return x.q_ == y.q_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    std::string to_string() const {
        return "r->r^" + std::to_string(a_) + ", s->" + GroupElement::make(q_, 1, b_).to_string();
    }

   private:
    long q_, a_, b_;

    void validate() const {
        GroupElement r = GroupElement::rotation(q_, 1), s = GroupElement::reflection(q_, 0);
        GroupElement ri = apply(r), si = apply(s);
        if (ri.order() != 2 * q_ || si.order() != 2 || (si * ri).order() != 2)
            throw std::logic_error("candidate map does not preserve the defining relations");
        if (apply(r * s) != ri * si) throw std::logic_error("candidate map is not a homomorphism");
    }
};

/// All 2q(q-1) automorphisms of D_2q.
inline std::vector<GroupAutomorphism> enumerate_automorphisms(long q) {
    require_prime_q(q);
    std::vector<GroupAutomorphism> out;
    for (long a = 1; a < 2 * q; ++a) {
        if (gcd(a, 2 * q) != 1) continue;
        for (long b = 0; b < 2 * q; ++b) out.emplace_back(q, a, b);
    }
    return out;
}

}  // namespace fq
