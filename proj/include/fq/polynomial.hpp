#pragma once

#include <cassert>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fq {

/// Dense univariate polynomial over a field K. K must be constructible from
/// long, equality-comparable and support +, -, *, /. The zero polynomial is
/// the empty coefficient vector; otherwise the leading coefficient is nonzero.
template <class K>
class Poly {
   public:
    Poly() = default;
    Poly(const K& c) : c_{c} { trim(); }
    Poly(long c) : Poly(K(c)) {}
    Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

    static Poly x() { return monomial(1, K(1)); }

    static Poly monomial(std::size_t deg, const K& coeff) {
        if (coeff == K(0)) return Poly();
        std::vector<K> c(deg + 1, K(0));
        c[deg] = coeff;
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == K(1); }

    /// Coefficient of x^i (zero beyond the degree).
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    const std::vector<K>& coeffs() const { return c_; }

    const K& leading() const {
        if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
        return c_.back();
    }

    bool is_monic() const { return !is_zero() && c_.back() == K(1); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& v : r.c_) v = K(0) - v;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(c));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == K(0)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }

    friend Poly operator*(const K& s, const Poly& p) {
        Poly r(p);
        for (auto& v : r.c_) v = s * v;
        r.trim();
        return r;
    }

    friend Poly operator*(const Poly& p, const K& s) { return s * p; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// Euclidean division: returns (quotient, remainder) with f = q*g + r,
    /// deg r < deg g.
    static std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
        if (g.is_zero()) throw std::domain_error("polynomial division by zero");
        Poly r = f, q;
        const int dg = g.degree();
        const K& lg = g.leading();
        while (!r.is_zero() && r.degree() >= dg) {
            K factor = r.leading() / lg;
            std::size_t shift = r.degree() - dg;
            q += monomial(shift, factor);
            r -= monomial(shift, factor) * g;
        }
        return {q, r};
    }

    friend Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).first; }
    friend Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }

    /// Division known to be exact; throws if a remainder appears.
    static Poly divexact(const Poly& f, const Poly& g) {
        auto [q, r] = divmod(f, g);
        if (!r.is_zero()) throw std::domain_error("polynomial division not exact");
        return q;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = K(static_cast<long>(i)) * c_[i];
        return Poly(std::move(c));
    }

    /// Horner evaluation in any ring T constructible from K.
    template <class T>
    T eval(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
        return acc;
    }

    /// f(a*x): coefficient i picks up a^i.
    Poly scale_arg(const K& a) const {
        Poly r(*this);
        K p(1);
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            r.c_[i] = r.c_[i] * p;
            p = p * a;
        }
        r.trim();
        return r;
    }

    /// x^deg * f(1/x).
    Poly reversed() const {
        std::vector<K> c(c_.rbegin(), c_.rend());
        return Poly(std::move(c));
    }

    /// f * x^k.
    Poly shifted(std::size_t k) const {
        if (is_zero()) return Poly();
        std::vector<K> c(c_.size() + k, K(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
        return Poly(std::move(c));
    }

    Poly monic() const {
        if (is_zero()) return *this;
        Poly r(*this);
        K inv = K(1) / leading();
        for (auto& v : r.c_) v = v * inv;
        return r;
    }

    Poly pow(unsigned long e) const {
        Poly base = *this, acc(K(1));
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    std::string to_string(const std::string& var = "x") const;

   private:
    std::vector<K> c_;

    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }
};

/// Monic gcd by the Euclidean algorithm.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto r = Poly<K>::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

/// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> poly_egcd(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r0 = a, r1 = b;
    Poly<K> u0(K(1)), u1, v0, v1(K(1));
    while (!r1.is_zero()) {
        auto [q, r] = Poly<K>::divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<K> u2 = u0 - q * u1, v2 = v0 - q * v1;
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    K inv = K(1) / r0.leading();
    return {r0 * inv, u0 * inv, v0 * inv};
}

template <class K>
std::string Poly<K>::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        K c = coeff(i);
        if (c == K(0)) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

}  // namespace fq
