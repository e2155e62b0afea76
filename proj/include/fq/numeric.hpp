#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <complex>
#include <stdexcept>
#include <vector>

#include "cyclotomic.hpp"

namespace fq {

// Floating witnesses are computed at 50 significant digits, which leaves
// ample guard digits for the default 30-digit requests.
using Real = boost::multiprecision::cpp_bin_float_50;
using Cplx = boost::multiprecision::cpp_complex_50;

constexpr int kMaxWitnessDigits = 40;
constexpr int kDefaultDigits = 30;
constexpr double kNumericTolerance = 1e-9;

inline Real pi_value() {
    static const Real pi = acos(Real(-1));
    return pi;
}

inline Real to_real(const Rat& r) { return static_cast<Real>(r); }

/// Embeds a cyclotomic number into C by evaluating the power basis at
/// exp(2*pi*i/n). Guarantees |result - exact| < 10^-digits.
inline Cplx cyc_to_complex(const CycNum& z, int digits = kDefaultDigits) {
    if (digits < 1 || digits > kMaxWitnessDigits)
        throw std::invalid_argument("requested precision outside supported working precision");
    const long n = z.conductor();
    const Real theta = 2 * pi_value() / n;
    Cplx acc(0, 0);
    const auto& c = z.coords();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        Real angle = theta * static_cast<long>(i % static_cast<std::size_t>(n));
        acc += to_real(c[i]) * Cplx(cos(angle), sin(angle));
    }
    return acc;
}

inline std::complex<double> to_complex_double(const Cplx& z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

inline std::complex<double> to_complex_double(const CycNum& z) {
    return to_complex_double(cyc_to_complex(z, 20));
}

/// All complex roots of a polynomial given by its coefficient list
/// (c[0] + c[1] x + ...), via Durand-Kerner iteration.
inline std::vector<std::complex<double>> complex_roots(std::vector<std::complex<double>> c) {
    using C = std::complex<double>;
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.size() <= 1) throw std::invalid_argument("root finding needs degree >= 1");
    const std::size_t deg = c.size() - 1;
    C lead = c.back();
    for (auto& v : c) v /= lead;

    auto eval = [&](C x) {
        C acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    };

    std::vector<C> r(deg);
    C seed(0.4, 0.9);
    C p(1, 0);
    for (std::size_t i = 0; i < deg; ++i) {
        p *= seed;
        r[i] = p;
    }
    for (int iter = 0; iter < 1000; ++iter) {
        double moved = 0;
        for (std::size_t i = 0; i < deg; ++i) {
            C denom(1, 0);
            for (std::size_t j = 0; j < deg; ++j)
                if (j != i) denom *= (r[i] - r[j]);
            C delta = eval(r[i]) / denom;
            r[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    return r;
}

/// True when the two multisets of points match pairwise within tol.
inline bool multisets_match(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b,
                            double tol) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!used[j] && std::abs(x - b[j]) < tol) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace fq
