#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "linalg.hpp"
#include "numeric.hpp"
#include "rational_function.hpp"

namespace fq {

using RatFunC = RatFun<CycNum>;

// ---------------------------------------------------------------------------
// Lambda parameters
// ---------------------------------------------------------------------------

/// Curve parameter: exact (rational, Gaussian rational or any cyclotomic
/// value) with a numeric shadow, or numeric-only when parsed from decimals.
struct LambdaValue {
    bool exact = false;
    CycNum value;  // meaningful when exact
    Cplx approx;

    static LambdaValue from_exact(const CycNum& v) {
        return {true, v, cyc_to_complex(v, kDefaultDigits)};
    }
    static LambdaValue from_rat(const Rat& v) { return from_exact(CycNum(v)); }
    static LambdaValue from_numeric(const Cplx& z) { return {false, CycNum(0), z}; }

    std::complex<double> approx_d() const { return to_complex_double(approx); }

    std::string to_string() const {
        if (exact) return value.to_string();
        std::ostringstream os;
        os << approx.real().str(17) << (approx.imag() < 0 ? "" : "+") << approx.imag().str(17) << "i";
        return os.str();
    }
};

namespace detail {

inline bool is_exact_number(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    bool digits = false, slash = false;
    for (; i < s.size(); ++i) {
        if (isdigit(static_cast<unsigned char>(s[i]))) {
            digits = true;
        } else if (s[i] == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else {
            return false;
        }
    }
    return digits;
}

inline double parse_decimal(const std::string& s) {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("cannot parse number: '" + s + "'");
    return v;
}

}  // namespace detail

/// Parses "a", "a+bi", "bi", "i" with a, b either exact ("p/q") or decimal.
/// Exact syntax yields an exact Gaussian-rational value; any decimal demotes
/// the result to numeric-only.
inline LambdaValue parse_lambda(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw std::invalid_argument("empty lambda");
    if (t.back() == 'I') t.back() = 'i';

    std::string re_part, im_part;
    if (t.back() == 'i') {
        // Split at the last +/- that is not leading and not an exponent sign.
        std::size_t split = std::string::npos;
        for (std::size_t i = t.size() - 1; i > 0; --i) {
            if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
                split = i;
                break;
            }
        }
        if (split == std::string::npos) {
            im_part = t.substr(0, t.size() - 1);
        } else {
            re_part = t.substr(0, split);
            im_part = t.substr(split, t.size() - split - 1);
        }
        if (im_part.empty() || im_part == "+" || im_part == "-") im_part += "1";
    } else {
        re_part = t;
    }

    bool exact = (re_part.empty() || detail::is_exact_number(re_part)) &&
                 (im_part.empty() || detail::is_exact_number(im_part));
    if (exact) {
        Rat re = re_part.empty() ? Rat(0) : rat_from_string(re_part);
        Rat im = im_part.empty() ? Rat(0) : rat_from_string(im_part);
        CycNum v = CycNum(re) + CycNum(im) * cyclotomic(4, 1);
        return LambdaValue::from_exact(v);
    }
    double re = re_part.empty() ? 0.0 : detail::parse_decimal(re_part);
    double im = im_part.empty() ? 0.0 : detail::parse_decimal(im_part);
    return LambdaValue::from_numeric(Cplx(re, im));
}

// ---------------------------------------------------------------------------
// Curve model y^2 = x (x^2q + c x^q + 1), c = 2(1+lambda)/(1-lambda)
// ---------------------------------------------------------------------------

/// The coefficient c as a rational function of lambda.
inline RatFunC curve_coefficient_symbolic() {
    Poly<CycNum> lam = Poly<CycNum>::x();
    return RatFunC(CycNum(2) * (Poly<CycNum>(CycNum(1)) + lam), Poly<CycNum>(CycNum(1)) - lam);
}

inline CycNum curve_coefficient_exact(const CycNum& lambda) {
    if (lambda == CycNum(1)) throw std::domain_error("lambda = 1 is a pole of the curve coefficient");
    return CycNum(2) * (CycNum(1) + lambda) / (CycNum(1) - lambda);
}

/// f(x) = x^(2q+1) + c x^(q+1) + x over any field containing c.
template <class K>
Poly<K> curve_poly(long q, const K& c) {
    Poly<K> f = Poly<K>::monomial(2 * q + 1, K(1));
    f += Poly<K>::monomial(q + 1, c);
    f += Poly<K>::monomial(1, K(1));
    return f;
}

inline const std::vector<CycNum>& excluded_lambdas() {
    // 0 and 1 are degenerate branch configurations; -1, 1/2, 2 and the two
    // primitive sixth roots of unity give extra automorphisms.
    static const std::vector<CycNum> ex = {
        CycNum(0), CycNum(1),          CycNum(-1),
        CycNum(Rat(1, 2)), CycNum(2), cyclotomic(6, 1), cyclotomic(6, 5)};
    return ex;
}

inline bool lambda_admissible(const LambdaValue& lambda, std::string* tag = nullptr) {
    auto mark = [&](const char* t) {
        if (tag) *tag = t;
        return false;
    };
    if (lambda.exact) {
        const CycNum& v = lambda.value;
        if (v == CycNum(0) || v == CycNum(1)) return mark("excluded: degenerate branch data");
        for (const auto& e : excluded_lambdas())
            if (v == e) return mark("excluded: extra automorphisms");
        return true;
    }
    auto z = lambda.approx_d();
    for (const auto& e : excluded_lambdas()) {
        if (std::abs(z - to_complex_double(e)) < kNumericTolerance)
            return mark((e == CycNum(0) || e == CycNum(1)) ? "excluded: degenerate branch data"
                                                           : "excluded: extra automorphisms");
    }
    return true;
}

struct CurveModel {
    long q;
    bool symbolic = false;
    RatFunC c_symbolic;         // when symbolic
    bool exact = false;
    CycNum c_exact;             // when concrete and exact
    std::complex<double> c_numeric{};  // for every concrete model
    bool admissible = true;
    std::string warning;

    Poly<CycNum> poly_exact() const {
        if (!exact) throw std::logic_error("curve model is not exact");
        return curve_poly(q, c_exact);
    }
    Poly<RatFunC> poly_symbolic() const {
        if (!symbolic) throw std::logic_error("curve model is not symbolic");
        return curve_poly(q, c_symbolic);
    }
};

inline CurveModel curve_model_symbolic(long q) {
    require_prime_q(q);
    CurveModel m;
    m.q = q;
    m.symbolic = true;
    m.c_symbolic = curve_coefficient_symbolic();
    return m;
}

/// Model for a concrete lambda != 1. Inadmissible values are allowed but the
/// model carries a warning tag.
inline CurveModel curve_model(long q, const LambdaValue& lambda) {
    require_prime_q(q);
    CurveModel m;
    m.q = q;
    if (lambda.exact) {
        m.exact = true;
        m.c_exact = curve_coefficient_exact(lambda.value);
        m.c_numeric = to_complex_double(m.c_exact);
    } else {
        auto z = lambda.approx_d();
        if (std::abs(z - 1.0) < 1e-15) throw std::domain_error("lambda = 1 is a pole of the curve coefficient");
        m.c_numeric = 2.0 * (1.0 + z) / (1.0 - z);
    }
    std::string tag;
    if (!lambda_admissible(lambda, &tag)) {
        m.admissible = false;
        m.warning = tag;
    }
    return m;
}

/// Exact squarefreeness of f for a concrete exact coefficient.
inline bool curve_squarefree_exact(long q, const CycNum& c) {
    Poly<CycNum> f = curve_poly(q, c);
    return poly_gcd(f, f.derivative()).degree() == 0;
}

/// Squarefreeness of f with c as an indeterminate (generic lambda).
inline bool curve_squarefree_symbolic(long q) {
    using F = RatFun<CycNum>;  // rational functions of c
    Poly<F> f = curve_poly(q, F::x());
    return poly_gcd(f, f.derivative()).degree() == 0;
}

/// Numeric squarefreeness witness: all roots pairwise separated.
inline bool curve_squarefree_numeric(long q, std::complex<double> c, double min_separation = 1e-6) {
    std::vector<std::complex<double>> coeffs(2 * q + 2, 0.0);
    coeffs[2 * q + 1] = 1.0;
    coeffs[q + 1] = c;
    coeffs[1] = 1.0;
    auto roots = complex_roots(coeffs);
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (std::abs(roots[i] - roots[j]) < min_separation) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Automorphisms of the model (exact identities in Q(zeta_2q)(lambda)[x])
// ---------------------------------------------------------------------------

/// Transformation (x, y) -> (u x^eps, v y x^e) with eps = +-1; closed under
/// composition, and exactly the shape of the model's automorphisms.
struct MonomialMap {
    int eps = 1;
    CycNum u = CycNum(1);
    CycNum v = CycNum(1);
    long e = 0;

    static MonomialMap identity() { return {}; }

    friend MonomialMap compose(const MonomialMap& m2, const MonomialMap& m1) {
        MonomialMap r;
        r.eps = m1.eps * m2.eps;
        r.u = m2.u * m1.u.pow(m2.eps);
        r.v = m2.v * m1.v * m1.u.pow(m2.e);
        r.e = m1.e + m1.eps * m2.e;
        return r;
    }

    MonomialMap pow(long k) const {
        MonomialMap acc = identity(), base = *this;
        for (; k > 0; k >>= 1) {
            if (k & 1) acc = compose(base, acc);
            base = compose(base, base);
        }
        return acc;
    }

    friend bool operator==(const MonomialMap& a, const MonomialMap& b) {
        return a.eps == b.eps && a.e == b.e && a.u == b.u && a.v == b.v;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "x -> (" << u.to_string() << ") x^" << eps << ",  y -> (" << v.to_string()
           << ") y x^" << e;
        return os.str();
    }
};

namespace detail {

/// x^shift * p(x), used to compare identities with denominators cleared.
template <class F>
struct Laurent {
    Poly<F> p;
    long shift = 0;

    void normalize() {
        if (p.is_zero()) {
            shift = 0;
            return;
        }
        std::size_t low = 0;
        while (p.coeff(low) == F(0)) ++low;
        if (low > 0) {
            std::vector<F> c(p.coeffs().begin() + low, p.coeffs().end());
            p = Poly<F>(std::move(c));
            shift += static_cast<long>(low);
        }
    }

    friend bool operator==(Laurent a, Laurent b) {
        a.normalize();
        b.normalize();
        return a.shift == b.shift && a.p == b.p;
    }

    friend Laurent operator-(const Laurent& a, const Laurent& b) {
        long lo = std::min(a.shift, b.shift);
        Poly<F> pa = a.p.shifted(static_cast<std::size_t>(a.shift - lo));
        Poly<F> pb = b.p.shifted(static_cast<std::size_t>(b.shift - lo));
        return {pa - pb, lo};
    }
};

/// Substitutes (x, y) -> (u x^eps, v y x^e) into y^2 = f(x): both sides of
/// v^2 x^(2e) f(x) = f(u x^eps) as Laurent polynomials.
template <class F>
std::pair<Laurent<F>, Laurent<F>> curve_transport(const Poly<F>& f, const MonomialMap& m) {
    F u{CycNum(0)}, v{CycNum(0)};
    u = F(m.u);
    v = F(m.v);
    Laurent<F> lhs{f * (v * v), 2 * m.e};
    Laurent<F> rhs;
    if (m.eps == 1) {
        rhs = {f.scale_arg(u), 0};
    } else {
        rhs = {f.scale_arg(u).reversed(), -f.degree()};
    }
    return {lhs, rhs};
}

}  // namespace detail

struct CheckItem {
    std::string name;
    bool pass;
    std::string residual;  // empty when pass
};

struct VerificationReport {
    std::vector<CheckItem> items;
    bool pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
};

/// Verifies, symbolically in lambda, that the model's r and s maps preserve
/// the curve, satisfy the dihedral relations as point maps, and compose to
/// the stated sr.
inline VerificationReport verify_automorphisms(long q) {
    require_prime_q(q);
    using F = RatFunC;
    VerificationReport rep;
    Poly<F> f = curve_poly(q, curve_coefficient_symbolic());

    const MonomialMap r{1, cyclotomic(2 * q, 2), cyclotomic(2 * q, 1), 0};
    const MonomialMap s{-1, CycNum(1), CycNum(1), -(q + 1)};

    auto check_curve = [&](const std::string& name, const MonomialMap& m) {
        auto [lhs, rhs] = detail::curve_transport(f, m);
        bool ok = lhs == rhs;
        rep.items.push_back({name, ok, ok ? "" : (lhs - rhs).p.to_string()});
    };
    check_curve("r preserves the curve equation", r);
    check_curve("s preserves the curve equation", s);

    auto check_map = [&](const std::string& name, const MonomialMap& got, const MonomialMap& want) {
        bool ok = got == want;
        rep.items.push_back({name, ok, ok ? "" : "got: " + got.to_string()});
    };
    check_map("r^2q is the identity map", r.pow(2 * q), MonomialMap::identity());
    check_map("s^2 is the identity map", compose(s, s), MonomialMap::identity());
    check_map("(sr)^2 is the identity map", compose(s, r).pow(2), MonomialMap::identity());
    check_map("sr has the displayed form", compose(s, r),
              MonomialMap{-1, cyclotomic(2 * q, -2), cyclotomic(2 * q, -1), -(q + 1)});
    // sr is again an automorphism of the curve.
    check_curve("sr preserves the curve equation", compose(s, r));
    return rep;
}

// ---------------------------------------------------------------------------
// Covering map Pi(z) = lambda (z^2q - 2 z^q + 1)/(z^2q + 2 z^q + 1)
// ---------------------------------------------------------------------------

inline VerificationReport verify_covering_map(long q, const LambdaValue& lambda) {
    require_prime_q(q);
    if (!lambda.exact) throw std::invalid_argument("covering-map verification needs an exact lambda");
    std::string tag;
    if (!lambda_admissible(lambda, &tag)) throw std::invalid_argument("lambda must be admissible (" + tag + ")");
    const CycNum& lam = lambda.value;
    VerificationReport rep;

    auto mono = [&](long d, const CycNum& c) { return Poly<CycNum>::monomial(d, c); };
    Poly<CycNum> num = (mono(2 * q, CycNum(1)) - mono(q, CycNum(2)) + Poly<CycNum>(CycNum(1))) * lam;
    Poly<CycNum> den = mono(2 * q, CycNum(1)) + mono(q, CycNum(2)) + Poly<CycNum>(CycNum(1));

    // (i) deck invariance under z -> w_2q^2 z and z -> 1/z.
    CycNum a = cyclotomic(2 * q, 2);
    bool rot = (num.scale_arg(a) * den - num * den.scale_arg(a)).is_zero();
    rep.items.push_back({"Pi(w_2q^2 z) = Pi(z)", rot, ""});
    bool inv = (num.reversed() * den - num * den.reversed()).is_zero();
    rep.items.push_back({"Pi(1/z) = Pi(z)", inv, ""});

    // (ii) Pi(0) = Pi(inf) = lambda.
    bool at0 = num.coeff(0) == lam * den.coeff(0);
    bool atinf = num.leading() == lam * den.leading();
    rep.items.push_back({"Pi(0) = lambda", at0, ""});
    rep.items.push_back({"Pi(inf) = lambda", atinf, ""});

    // (iii) Pi(w_2q^k) = inf for odd k, 0 for even k.
    bool branch = true;
    for (long k = 0; k < 2 * q && branch; ++k) {
        CycNum z = cyclotomic(2 * q, k);
        CycNum nv = num.eval(z), dv = den.eval(z);
        branch = (k % 2 == 1) ? (dv.is_zero() && !nv.is_zero()) : (nv.is_zero() && !dv.is_zero());
    }
    rep.items.push_back({"Pi(w_2q^k) = inf (k odd) / 0 (k even)", branch, ""});

    // (iv) numeric: the roots of x^2q + c x^q + 1 are Pi^-1(1).
    std::complex<double> c = to_complex_double(curve_coefficient_exact(lam));
    std::vector<std::complex<double>> pcoeffs(2 * q + 1, 0.0);
    pcoeffs[2 * q] = 1.0;
    pcoeffs[q] = c;
    pcoeffs[0] = 1.0;
    auto model_roots = complex_roots(pcoeffs);

    std::complex<double> lz = to_complex_double(lam);
    std::vector<std::complex<double>> fib(2 * q + 1, 0.0);
    fib[2 * q] = lz - 1.0;
    fib[q] = -2.0 * (lz + 1.0);
    fib[0] = lz - 1.0;
    auto fiber_roots = complex_roots(fib);
    bool roots_ok = multisets_match(model_roots, fiber_roots, kNumericTolerance);
    rep.items.push_back({"branch points coincide with Pi^-1(1)", roots_ok, ""});
    return rep;
}

// ---------------------------------------------------------------------------
// Elliptic quotient and the Legendre j-invariant
// ---------------------------------------------------------------------------

/// j(lambda) = 256 (lambda^2 - lambda + 1)^3 / (lambda^2 (lambda - 1)^2)
/// as an exact rational function over Q.
inline RatFun<Rat> j_ratfun() {
    Poly<Rat> lam = Poly<Rat>::x();
    Poly<Rat> nump = lam * lam - lam + Poly<Rat>(Rat(1));
    Poly<Rat> num = Rat(256) * nump * nump * nump;
    Poly<Rat> den = lam * lam * (lam - Poly<Rat>(Rat(1))) * (lam - Poly<Rat>(Rat(1)));
    return RatFun<Rat>(num, den);
}

inline CycNum j_exact(const CycNum& lambda) {
    if (lambda == CycNum(0) || lambda == CycNum(1))
        throw std::domain_error("j is undefined at lambda in {0, 1}");
    CycNum n = lambda * lambda - lambda + CycNum(1);
    CycNum d = lambda * lambda * (lambda - CycNum(1)) * (lambda - CycNum(1));
    return CycNum(256) * n * n * n / d;
}

inline std::complex<double> j_numeric(std::complex<double> lambda) {
    std::complex<double> n = lambda * lambda - lambda + 1.0;
    return 256.0 * n * n * n / (lambda * lambda * (lambda - 1.0) * (lambda - 1.0));
}

struct EllipticQuotient {
    LambdaValue lambda;
    LambdaValue j;
    // y^2 = x (x - 1) (x - lambda) = x^3 - (1 + lambda) x^2 + lambda x.
    std::vector<LambdaValue> coeffs;  // degree 0..3
};

inline EllipticQuotient elliptic_quotient(const LambdaValue& lambda) {
    EllipticQuotient e;
    e.lambda = lambda;
    if (lambda.exact) {
        const CycNum& l = lambda.value;
        if (l == CycNum(0) || l == CycNum(1))
            throw std::domain_error("elliptic quotient needs lambda outside {0, 1}");
        e.j = LambdaValue::from_exact(j_exact(l));
        e.coeffs = {LambdaValue::from_exact(CycNum(0)), LambdaValue::from_exact(l),
                    LambdaValue::from_exact(-(CycNum(1) + l)), LambdaValue::from_exact(CycNum(1))};
    } else {
        auto z = lambda.approx_d();
        if (std::abs(z) < 1e-15 || std::abs(z - 1.0) < 1e-15)
            throw std::domain_error("elliptic quotient needs lambda outside {0, 1}");
        e.j = LambdaValue::from_numeric(Cplx(j_numeric(z).real(), j_numeric(z).imag()));
        e.coeffs = {LambdaValue::from_numeric(Cplx(0, 0)), lambda,
                    LambdaValue::from_numeric(Cplx(-(1.0 + z.real()), -z.imag())),
                    LambdaValue::from_numeric(Cplx(1, 0))};
    }
    return e;
}

// ---------------------------------------------------------------------------
// The S3 action on lambda and the classification
// ---------------------------------------------------------------------------

/// The six maps of the anharmonic action <1/z, 1/(1-z)>.
inline const std::vector<std::string>& s3_map_names() {
    static const std::vector<std::string> names = {"z",         "1/z",       "1-z",
                                                   "1/(1-z)",   "z/(z-1)",   "(z-1)/z"};
    return names;
}

inline CycNum s3_apply_exact(std::size_t idx, const CycNum& z) {
    switch (idx) {
        case 0: return z;
        case 1: return CycNum(1) / z;
        case 2: return CycNum(1) - z;
        case 3: return CycNum(1) / (CycNum(1) - z);
        case 4: return z / (z - CycNum(1));
        case 5: return (z - CycNum(1)) / z;
    }
    throw std::out_of_range("S3 map index");
}

inline std::complex<double> s3_apply_numeric(std::size_t idx, std::complex<double> z) {
    switch (idx) {
        case 0: return z;
        case 1: return 1.0 / z;
        case 2: return 1.0 - z;
        case 3: return 1.0 / (1.0 - z);
        case 4: return z / (z - 1.0);
        case 5: return (z - 1.0) / z;
    }
    throw std::out_of_range("S3 map index");
}

/// The four reality conditions: lambda equal to conj(lambda),
/// 1 - conj(lambda), 1/conj(lambda), or conj(lambda)/(conj(lambda) - 1)
/// (the real axis, the line Re = 1/2, the unit circle, the circle |z-1| = 1).
inline std::array<bool, 4> real_conditions(const LambdaValue& lambda) {
    std::array<bool, 4> cond{};
    if (lambda.exact) {
        const CycNum& l = lambda.value;
        CycNum lc = l.conj();
        cond[0] = (l == lc);
        cond[1] = (l == CycNum(1) - lc);
        cond[2] = (l * lc == CycNum(1));
        cond[3] = (l * (lc - CycNum(1)) == lc);
    } else {
        auto z = lambda.approx_d();
        auto zc = std::conj(z);
        cond[0] = std::abs(z - zc) < kNumericTolerance;
        cond[1] = std::abs(z - (1.0 - zc)) < kNumericTolerance;
        cond[2] = std::abs(z * zc - 1.0) < kNumericTolerance;
        cond[3] = std::abs(z * (zc - 1.0) - zc) < kNumericTolerance;
    }
    return cond;
}

struct LambdaClassification {
    LambdaValue lambda;
    bool exact_classification;
    bool admissible;
    std::string excluded_tag;  // nonempty when inadmissible
    bool real_surface;
    std::array<bool, 4> conditions;
    std::vector<LambdaValue> orbit;            // empty for lambda in {0, 1}
    std::optional<LambdaValue> j;              // absent for lambda in {0, 1}
    std::optional<LambdaValue> fundamental;    // orbit member in the closure of
                                               // {|z| < 1, Re z < 1/2}
};

inline LambdaClassification classify_lambda(const LambdaValue& lambda) {
    LambdaClassification out;
    out.lambda = lambda;
    out.exact_classification = lambda.exact;
    out.admissible = lambda_admissible(lambda, &out.excluded_tag);
    out.conditions = real_conditions(lambda);
    out.real_surface = out.conditions[0] || out.conditions[1] || out.conditions[2] || out.conditions[3];

    bool degenerate;
    if (lambda.exact)
        degenerate = lambda.value == CycNum(0) || lambda.value == CycNum(1);
    else {
        auto z = lambda.approx_d();
        degenerate = std::abs(z) < kNumericTolerance || std::abs(z - 1.0) < kNumericTolerance;
    }
    if (degenerate) return out;

    for (std::size_t i = 0; i < 6; ++i) {
        if (lambda.exact)
            out.orbit.push_back(LambdaValue::from_exact(s3_apply_exact(i, lambda.value)));
        else {
            auto w = s3_apply_numeric(i, lambda.approx_d());
            out.orbit.push_back(LambdaValue::from_numeric(Cplx(w.real(), w.imag())));
        }
    }
    out.j = lambda.exact
                ? LambdaValue::from_exact(j_exact(lambda.value))
                : LambdaValue::from_numeric([&] {
                      auto w = j_numeric(lambda.approx_d());
                      return Cplx(w.real(), w.imag());
                  }());

    // Deterministic representative in the closed fundamental region.
    const double eps = 1e-12;
    std::size_t best = 6;
    auto better = [&](std::size_t i, std::size_t j) {
        auto a = out.orbit[i].approx_d(), b = out.orbit[j].approx_d();
        auto ka = std::make_tuple(std::abs(a), a.real(), a.imag());
        auto kb = std::make_tuple(std::abs(b), b.real(), b.imag());
        return ka < kb;
    };
    for (std::size_t i = 0; i < 6; ++i) {
        auto z = out.orbit[i].approx_d();
        if (std::abs(z) <= 1 + eps && z.real() <= 0.5 + eps)
            if (best == 6 || better(i, best)) best = i;
    }
    if (best < 6) out.fundamental = out.orbit[best];
    return out;
}

// ---------------------------------------------------------------------------
// Field-of-moduli bounds
// ---------------------------------------------------------------------------

/// Minimal polynomial over Q of an exact cyclotomic value, by finding the
/// first linear dependence among its powers in the power basis.
inline Poly<Rat> minimal_polynomial(const CycNum& v) {
    std::size_t dim = v.coords().size();
    std::vector<CycNum> powers{CycNum(1)};
    for (std::size_t k = 1; k <= dim; ++k) powers.push_back(powers.back() * v);
    for (std::size_t k = 1; k <= dim; ++k) {
        // Columns are the coordinates of 1, v, ..., v^k at conductor n.
        Mat<Rat> m(dim, k + 1);
        for (std::size_t j = 0; j <= k; ++j) {
            CycNum p = powers[j].lifted(v.conductor());
            for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = p.coords()[i];
        }
        auto ns = nullspace(m);
        if (!ns.empty()) {
            std::vector<Rat> coeffs = ns.front();
            Poly<Rat> mp(coeffs);
            return mp.monic();
        }
    }
    throw std::logic_error("no minimal polynomial found within the field degree");
}

struct ModuliBounds {
    LambdaValue lambda;
    CycNum j;
    Poly<Rat> minpoly_lambda;
    Poly<Rat> minpoly_j;
    long degree_lambda;
    long degree_j;
    bool moduli_field_is_definition_field = true;  // holds throughout this family
};

inline ModuliBounds moduli_field_bounds(const LambdaValue& lambda) {
    if (!lambda.exact) throw std::invalid_argument("moduli bounds need an exact lambda");
    if (lambda.value == CycNum(0) || lambda.value == CycNum(1))
        throw std::invalid_argument("moduli bounds need lambda outside {0, 1}");
    ModuliBounds out{lambda,
                     j_exact(lambda.value),
                     minimal_polynomial(lambda.value),
                     {},
                     0,
                     0,
                     true};
    out.minpoly_j = minimal_polynomial(out.j);
    out.degree_lambda = out.minpoly_lambda.degree();
    out.degree_j = out.minpoly_j.degree();
    return out;
}

// ---------------------------------------------------------------------------
// The Wiman identity at the lambda = -1 limit
// ---------------------------------------------------------------------------

/// Exact check in Q(zeta_8q)[x, y]/(y^2 - x(x^2q + 1)) that
/// (x, y) -> (-w_4q x, w_8q y) lands on y^2 = x(x^2q - 1), plus the negative
/// control that the identity map does not.
inline VerificationReport wiman_check(long q) {
    require_prime_q(q);
    VerificationReport rep;
    auto mono = [&](long d, const CycNum& c) { return Poly<CycNum>::monomial(d, c); };
    Poly<CycNum> f_plus = mono(2 * q + 1, CycNum(1)) + mono(1, CycNum(1));

    CycNum mu = -cyclotomic(4 * q, 1);   // X = mu x
    CycNum w8 = cyclotomic(8 * q, 1);    // Y = w8 y
    // Y^2 = w8^2 f_plus(x) must equal X (X^2q - 1) = mu^(2q+1) x^(2q+1) - mu x.
    Poly<CycNum> lhs = w8 * w8 * f_plus;
    Poly<CycNum> rhs = mono(2 * q + 1, mu.pow(2 * q + 1)) - mono(1, mu);
    bool ok = lhs == rhs;
    rep.items.push_back({"(x,y) -> (-w_4q x, w_8q y) maps onto y^2 = x(x^2q - 1)", ok,
                         ok ? "" : (lhs - rhs).to_string()});

    Poly<CycNum> f_minus = mono(2 * q + 1, CycNum(1)) - mono(1, CycNum(1));
    rep.items.push_back({"negative control: identity map does not", f_plus != f_minus, ""});
    return rep;
}

}  // namespace fq
