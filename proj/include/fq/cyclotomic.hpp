#pragma once

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace fq {

/// n-th cyclotomic polynomial, computed by exact division of x^n - 1 by the
/// product of Phi_d over proper divisors d | n. Memoized process-wide.
inline const Poly<Rat>& cyclotomic_polynomial(long n) {
    static std::map<long, Poly<Rat>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Compute iteratively so recursion never re-locks.
    for (long d : divisors(n)) {
        if (cache.count(d)) continue;
        if (d == 1) {
            cache.emplace(1, Poly<Rat>({Rat(-1), Rat(1)}));
            continue;
        }
        Poly<Rat> xn_minus_1 = Poly<Rat>::monomial(d, Rat(1)) - Poly<Rat>(Rat(1));
        Poly<Rat> prod{Rat(1)};
        for (long e : divisors(d))
            if (e != d) prod *= cache.at(e);
        cache.emplace(d, Poly<Rat>::divexact(xn_minus_1, prod));
    }
    return cache.at(n);
}

/// Exact element of the cyclotomic field Q(zeta_n), stored in the power basis
/// 1, zeta, ..., zeta^(phi(n)-1) modulo Phi_n. Reduction modulo Phi_n is
/// canonical, so equal field elements have equal coordinate vectors at equal
/// conductors; mixed-conductor arithmetic lifts both operands to the lcm.
class CycNum {
   public:
    CycNum() : n_(1), c_{Rat(0)} {}
    CycNum(long v) : n_(1), c_{Rat(v)} {}
    CycNum(const Rat& v) : n_(1), c_{v} {}

    /// zeta_n^k, reduced to the power basis at conductor n.
    static CycNum root_of_unity(long n, long k) {
        if (n < 1) throw std::invalid_argument("conductor must be positive");
        return CycNum(n, Poly<Rat>::monomial(static_cast<std::size_t>(mod(k, n)), Rat(1)));
    }

    long conductor() const { return n_; }
    const std::vector<Rat>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    Rat rat_value() const {
        if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + to_string());
        return c_[0];
    }

    friend CycNum operator+(const CycNum& a, const CycNum& b) {
        auto [x, y, n] = aligned(a, b);
        std::vector<Rat> c(x.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = x[i] + y[i];
        return CycNum(n, std::move(c));
    }

    friend CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

    CycNum operator-() const {
        CycNum r(*this);
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend CycNum operator*(const CycNum& a, const CycNum& b) {
        auto [x, y, n] = aligned(a, b);
        return CycNum(n, Poly<Rat>(std::move(x)) * Poly<Rat>(std::move(y)));
    }

    CycNum inverse() const {
        if (is_zero()) throw std::domain_error("division by zero cyclotomic value");
        auto [g, u, v] = poly_egcd(Poly<Rat>(c_), cyclotomic_polynomial(n_));
        (void)v;
        if (g.degree() != 0) throw std::logic_error("element not invertible mod Phi_n");
        return CycNum(n_, u);
    }

    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    friend bool operator==(const CycNum& a, const CycNum& b) {
        auto [x, y, n] = aligned(a, b);
        (void)n;
        return x == y;
    }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    CycNum pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        CycNum base = *this, acc(1);
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    /// Galois action zeta -> zeta^k, gcd(k, n) = 1.
    CycNum galois(long k) const {
        long kk = mod(k, n_);
        if (n_ == 1) return *this;
        if (gcd(kk, n_) != 1) throw std::invalid_argument("galois exponent not coprime to conductor");
        Poly<Rat> p;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) p += Poly<Rat>::monomial(static_cast<std::size_t>((i * kk) % n_), c_[i]);
        return CycNum(n_, p);
    }

    /// Complex conjugation, zeta -> zeta^(-1).
    CycNum conj() const { return galois(n_ - 1); }

    /// Lift to conductor m (n | m).
    CycNum lifted(long m) const {
        if (m == n_) return *this;
        if (m % n_ != 0) throw std::invalid_argument("lift target is not a multiple of the conductor");
        long stride = m / n_;
        Poly<Rat> p;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) p += Poly<Rat>::monomial(i * static_cast<std::size_t>(stride), c_[i]);
        return CycNum(m, p);
    }

    /// Descend to the smallest conductor d | n containing the value.
    CycNum simplify() const {
        for (long d : divisors(n_)) {
            if (d == n_) break;
            std::vector<Rat> out;
            if (try_descend(d, out)) return CycNum(d, std::move(out));
        }
        return *this;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << Poly<Rat>(c_).to_string("z") << " [conductor " << n_ << "]";
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const CycNum& z) { return os << z.to_string(); }

   private:
    long n_;
    std::vector<Rat> c_;

    CycNum(long n, const Poly<Rat>& raw) : n_(n) {
        Poly<Rat> red = raw % cyclotomic_polynomial(n);
        c_.assign(static_cast<std::size_t>(euler_phi(n)), Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = red.coeff(i);
    }

    CycNum(long n, std::vector<Rat> reduced) : n_(n), c_(std::move(reduced)) {}

    static std::tuple<std::vector<Rat>, std::vector<Rat>, long> aligned(const CycNum& a, const CycNum& b) {
        if (a.n_ == b.n_) return {a.c_, b.c_, a.n_};
        long n = lcm(a.n_, b.n_);
        return {a.lifted(n).c_, b.lifted(n).c_, n};
    }

    // Solves lift-basis * y = c over Q by Gaussian elimination; the columns
    // are the lifts of 1, zeta_d, ..., zeta_d^(phi(d)-1) to conductor n.
    bool try_descend(long d, std::vector<Rat>& out) const {
        std::size_t rows = c_.size(), cols = static_cast<std::size_t>(euler_phi(d));
        std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1, Rat(0)));
        for (std::size_t j = 0; j < cols; ++j) {
            CycNum basis = root_of_unity(d, 1).pow(static_cast<long>(j)).lifted(n_);
            for (std::size_t i = 0; i < rows; ++i) m[i][j] = basis.c_[i];
        }
        for (std::size_t i = 0; i < rows; ++i) m[i][cols] = c_[i];
        std::size_t row = 0;
        std::vector<long> pivot_col(cols, -1);
        for (std::size_t col = 0; col < cols && row < rows; ++col) {
            std::size_t p = row;
            while (p < rows && m[p][col] == 0) ++p;
            if (p == rows) continue;
            std::swap(m[p], m[row]);
            Rat inv = Rat(1) / m[row][col];
            for (auto& v : m[row]) v *= inv;
            for (std::size_t r = 0; r < rows; ++r) {
                if (r == row || m[r][col] == 0) continue;
                Rat f = m[r][col];
                for (std::size_t cidx = col; cidx <= cols; ++cidx) m[r][cidx] -= f * m[row][cidx];
            }
            pivot_col[col] = static_cast<long>(row);
            ++row;
        }
        out.assign(cols, Rat(0));
        for (std::size_t col = 0; col < cols; ++col)
            if (pivot_col[col] >= 0) out[col] = m[static_cast<std::size_t>(pivot_col[col])][cols];
        // Consistency: rows below the pivots must have zero rhs.
        for (std::size_t r = row; r < rows; ++r)
            if (m[r][cols] != 0) return false;
        // Verify the reconstruction (guards against skipped pivot columns).
        CycNum rec(d, out);
        return rec.lifted(n_).c_ == c_;
    }
};

/// zeta_n^k as a CycNum: the computational home of the paper-facing symbols
/// omega_t = exp(2*pi*i/t).
inline CycNum cyclotomic(long n, long k) { return CycNum::root_of_unity(n, k); }

}  // namespace fq
