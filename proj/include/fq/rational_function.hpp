#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

#include "polynomial.hpp"

namespace fq {

/// Rational function num/den in one indeterminate over a field K, kept in the
/// unique normal form: monic denominator, gcd(num, den) = 1.
template <class K>
class RatFun {
   public:
    RatFun() : num_(), den_(K(1)) {}
    RatFun(long v) : num_(K(v)), den_(K(1)) {}
    RatFun(const K& v) : num_(v), den_(K(1)) {}
    RatFun(const Poly<K>& p) : num_(p), den_(K(1)) {}
    RatFun(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFun x() { return RatFun(Poly<K>::x()); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFun operator-() const {
        RatFun r(*this);
        r.num_ = -r.num_;
        return r;
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

    // Normal form is unique, so comparison is coefficientwise.
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    /// Evaluation at a point; the denominator must not vanish there.
    K eval(const K& x) const {
        K d = den_.eval(x);
        if (d == K(0)) throw std::domain_error("evaluation at a pole");
        return num_.eval(x) / d;
    }

    bool is_pole(const K& x) const { return den_.eval(x) == K(0) && num_.eval(x) != K(0); }

    /// Substitution of another rational function for the indeterminate.
    RatFun compose(const RatFun& inner) const {
        RatFun n = num_.template eval<RatFun>(inner);
        RatFun d = den_.template eval<RatFun>(inner);
        return n / d;
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_polynomial()) return num_.to_string(var);
        return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const RatFun& f) { return os << f.to_string(); }

   private:
    Poly<K> num_, den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<K>(K(1));
            return;
        }
        Poly<K> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly<K>::divexact(num_, g);
            den_ = Poly<K>::divexact(den_, g);
        }
        K lead = den_.leading();
        if (lead != K(1)) {
            K inv = K(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }
};

/// Normalization entry point: the unique representative with monic
/// denominator and coprime numerator/denominator (idempotent).
template <class K>
RatFun<K> ratfun_normalize(const Poly<K>& num, const Poly<K>& den) {
    return RatFun<K>(num, den);
}

}  // namespace fq
