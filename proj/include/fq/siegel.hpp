#pragma once

#include <complex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace fq {

// ---------------------------------------------------------------------------
// Symplectic matrices over Q
// ---------------------------------------------------------------------------

inline Mat<Rat> symplectic_form(std::size_t g) {
    Mat<Rat> J(2 * g, 2 * g);
    for (std::size_t i = 0; i < g; ++i) {
        J.at(i, g + i) = Rat(1);
        J.at(g + i, i) = Rat(-1);
    }
    return J;
}

struct SymplecticCheck {
    bool ok;
    Mat<Rat> residual;  // M^t J M - J
};

inline SymplecticCheck is_symplectic(const Mat<Rat>& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        throw std::invalid_argument("symplectic matrices have even square size");
    Mat<Rat> J = symplectic_form(m.rows() / 2);
    Mat<Rat> res = m.transpose() * J * m - J;
    return {res.is_zero(), res};
}

/// g x g block (bi, bj) of a 2g x 2g matrix, blocks (A B; C D).
inline Mat<Rat> block(const Mat<Rat>& m, int bi, int bj) {
    std::size_t g = m.rows() / 2;
    Mat<Rat> out(g, g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) out.at(i, j) = m.at(bi * g + i, bj * g + j);
    return out;
}

inline Mat<Rat> block_diag(const Mat<Rat>& a, const Mat<Rat>& d) {
    std::size_t g = a.rows();
    Mat<Rat> out(2 * g, 2 * g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            out.at(i, j) = a.at(i, j);
            out.at(g + i, g + j) = d.at(i, j);
        }
    return out;
}

inline long matrix_order(const Mat<Rat>& m, long bound = 64) {
    Mat<Rat> acc = m;
    Mat<Rat> id = Mat<Rat>::identity(m.rows());
    for (long k = 1; k <= bound; ++k) {
        if (acc == id) return k;
        acc = acc * m;
    }
    throw std::logic_error("matrix order exceeds bound");
}

// ---------------------------------------------------------------------------
// Bundled symplectic representation of D_10 on Sp(10, Z) (genus-5 data)
// ---------------------------------------------------------------------------

inline Mat<Rat> mat_from_ints(const std::vector<std::vector<long>>& rows) {
    Mat<Rat> m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Rat(rows[i][j]);
    return m;
}

inline const Mat<Rat>& symplectic_R_block_q5() {
    static const Mat<Rat> R = mat_from_ints({{-1, 0, 1, -1, 1},
                                             {1, 1, 0, 1, 0},
                                             {0, 0, 0, -1, 0},
                                             {1, 0, 0, 1, -1},
                                             {0, -2, 0, 1, -1}});
    return R;
}

inline const Mat<Rat>& symplectic_S_block_q5() {
    static const Mat<Rat> S = mat_from_ints({{-1, 0, 1, -1, 1},
                                             {0, -1, -1, 1, -1},
                                             {0, 0, 0, -1, 0},
                                             {0, 0, -1, 0, 0},
                                             {0, 0, 0, 0, 1}});
    return S;
}

/// rho(r) = diag(R, (R^t)^-1) and rho(s) = diag(S, S^t), validated at load:
/// symplectic, orders 10 and 2, and the dihedral relations.
inline std::pair<Mat<Rat>, Mat<Rat>> symplectic_rep_q5() {
    const Mat<Rat>& R = symplectic_R_block_q5();
    const Mat<Rat>& S = symplectic_S_block_q5();
    Mat<Rat> rho_r = block_diag(R, inverse(R.transpose()));
    Mat<Rat> rho_s = block_diag(S, S.transpose());
    if (!is_symplectic(rho_r).ok || !is_symplectic(rho_s).ok)
        throw std::logic_error("bundled generators are not symplectic (data transcription error)");
    if (matrix_order(rho_r) != 10 || matrix_order(rho_s) != 2)
        throw std::logic_error("bundled generators have wrong orders (data transcription error)");
    if (matrix_order(rho_s * rho_r) != 2)
        throw std::logic_error("bundled generators violate (sr)^2 = 1 (data transcription error)");
    if (!(rho_s * rho_r * rho_s == inverse(rho_r)))
        throw std::logic_error("bundled generators violate s r s = r^-1 (data transcription error)");
    return {rho_r, rho_s};
}

// ---------------------------------------------------------------------------
// Invariant symmetric family (fixed points in Siegel space)
// ---------------------------------------------------------------------------

/// The fixed-point equation shapes searched over; for a block-diagonal
/// generator diag(A, D), the as-written action Z -> (A + ZC)^-1 (B + ZD)
/// fixes Z exactly when A Z = Z D. For symmetric Z the transposed-block and
/// inverse-matrix readings collapse onto these two shapes (transposing
/// A Z = Z D gives D^t Z = Z A^t, and a group element and its inverse have
/// the same fixed set), so two candidates exhaust the natural variants.
enum class Convention { AZ_eq_ZD, AtZ_eq_ZDt };

inline std::string convention_name(Convention c) {
    switch (c) {
        case Convention::AZ_eq_ZD: return "AZ=ZD";
        case Convention::AtZ_eq_ZDt: return "AtZ=ZDt";
    }
    return "?";
}

inline std::pair<Mat<Rat>, Mat<Rat>> convention_sides(Convention c, const Mat<Rat>& A,
                                                      const Mat<Rat>& D) {
    switch (c) {
        case Convention::AZ_eq_ZD: return {A, D};
        case Convention::AtZ_eq_ZDt: return {A.transpose(), D.transpose()};
    }
    throw std::logic_error("unknown convention");
}

struct SiegelFamily {
    long g = 0;
    std::vector<Mat<Rat>> basis;        // symmetric rational matrices
    std::vector<std::string> params;    // u, v, w, t4, ...
    std::string convention;
};

namespace detail {

inline std::vector<std::pair<std::size_t, std::size_t>> sym_coords(std::size_t g) {
    std::vector<std::pair<std::size_t, std::size_t>> coords;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i; j < g; ++j) coords.emplace_back(i, j);
    return coords;
}

inline Mat<Rat> sym_basis_matrix(std::size_t g, std::size_t i, std::size_t j) {
    Mat<Rat> e(g, g);
    e.at(i, j) = Rat(1);
    e.at(j, i) = Rat(1);
    return e;
}

}  // namespace detail

/// Solves {Z = Z^t, U Z = Z V for every generator} exactly over Q, where
/// (U, V) are the generator blocks under the given convention. Generators
/// must have a zero C-block (and zero B-block); anything else is the
/// unsupported nonlinear fixed-point problem.
inline SiegelFamily invariant_family(const std::vector<Mat<Rat>>& gens,
                                     Convention conv = Convention::AZ_eq_ZD) {
    if (gens.empty()) throw std::invalid_argument("invariant_family needs at least one generator");
    std::size_t g = gens.front().rows() / 2;
    for (const auto& m : gens) {
        if (m.rows() != 2 * g || m.cols() != 2 * g)
            throw std::invalid_argument("generators must share the size 2g x 2g");
        if (!block(m, 1, 0).is_zero())
            throw std::invalid_argument("nonlinear fixed-point unsupported: generator has a nonzero C-block");
        if (!block(m, 0, 1).is_zero())
            throw std::invalid_argument("affine fixed-point unsupported: generator has a nonzero B-block");
    }

    auto coords = detail::sym_coords(g);
    const std::size_t unknowns = coords.size();
    Mat<Rat> system(gens.size() * g * g, unknowns);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        auto [U, V] = convention_sides(conv, block(gens[gi], 0, 0), block(gens[gi], 1, 1));
        for (std::size_t u = 0; u < unknowns; ++u) {
            Mat<Rat> e = detail::sym_basis_matrix(g, coords[u].first, coords[u].second);
            Mat<Rat> res = U * e - e * V;
            for (std::size_t i = 0; i < g; ++i)
                for (std::size_t j = 0; j < g; ++j)
                    system.at(gi * g * g + i * g + j, u) = res.at(i, j);
        }
    }

    SiegelFamily fam;
    fam.g = static_cast<long>(g);
    fam.convention = convention_name(conv);
    static const char* first_names[] = {"u", "v", "w"};
    std::size_t idx = 0;
    for (const auto& vec : nullspace(system)) {
        Mat<Rat> m(g, g);
        for (std::size_t u = 0; u < unknowns; ++u) {
            m.at(coords[u].first, coords[u].second) = vec[u];
            m.at(coords[u].second, coords[u].first) = vec[u];
        }
        fam.basis.push_back(std::move(m));
        fam.params.push_back(idx < 3 ? first_names[idx] : "t" + std::to_string(idx + 1));
        ++idx;
    }
    return fam;
}

/// True when m solves every generator's fixed-point equation under conv.
inline bool family_member_fixed(const Mat<Rat>& m, const std::vector<Mat<Rat>>& gens,
                                Convention conv) {
    for (const auto& gen : gens) {
        auto [U, V] = convention_sides(conv, block(gen, 0, 0), block(gen, 1, 1));
        if (!(U * m - m * V).is_zero()) return false;
    }
    return true;
}

/// Rank of the list of symmetric matrices viewed as vectors.
inline std::size_t span_rank(const std::vector<Mat<Rat>>& mats) {
    if (mats.empty()) return 0;
    std::size_t g = mats.front().rows();
    auto coords = detail::sym_coords(g);
    Mat<Rat> stack(mats.size(), coords.size());
    for (std::size_t r = 0; r < mats.size(); ++r)
        for (std::size_t u = 0; u < coords.size(); ++u)
            stack.at(r, u) = mats[r].at(coords[u].first, coords[u].second);
    return rank(stack);
}

// ---------------------------------------------------------------------------
// Bundled reference family (the displayed 3-parameter genus-5 family)
// ---------------------------------------------------------------------------

namespace detail {

inline Mat<Rat> mat_from_rats(const std::vector<std::vector<Rat>>& rows) {
    Mat<Rat> m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace detail

/// Coefficient matrices of the displayed (u, v, w) family, read verbatim.
/// Two display entries are typos -- see reference_family_corrected().
inline std::vector<Mat<Rat>> reference_family_verbatim() {
    const Rat h(1, 2), q54(5, 4);
    Mat<Rat> Mu = detail::mat_from_rats({{Rat(4), Rat(-1), Rat(0), Rat(-1), Rat(1)},
                                         {Rat(-1), q54, -h, h, Rat(-1)},
                                         {Rat(0), -h, Rat(1), Rat(0), Rat(0)},
                                         {Rat(-1), h, Rat(0), Rat(1), Rat(0)},
                                         {Rat(1), Rat(-1), Rat(0), Rat(0), Rat(2)}});
    Mat<Rat> Mv = detail::mat_from_rats({{Rat(2), Rat(0), Rat(-2), Rat(-1), Rat(-1)},
                                         {Rat(0), Rat(-1), Rat(1), Rat(0), Rat(1)},
                                         {Rat(-2), Rat(1), Rat(0), Rat(1), Rat(0)},
                                         {Rat(-1), Rat(0), Rat(1), Rat(0), Rat(0)},
                                         {Rat(-1), Rat(1), Rat(0), Rat(0), Rat(-2)}});
    Mat<Rat> Mw = detail::mat_from_rats({{Rat(0), Rat(-1), Rat(0), Rat(-1), Rat(0)},
                                         {Rat(-1), -h, Rat(0), Rat(1), Rat(0)},
                                         {Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)},
                                         {Rat(-1), Rat(1), Rat(0), Rat(0), Rat(-1)},
                                         {Rat(0), Rat(0), Rat(1), Rat(-1), Rat(-2)}});
    return {Mu, Mv, Mw};
}

/// The verbatim display with its two defective entries amended so that every
/// coefficient matrix satisfies the fixed-point equations: the (1,1) entry of
/// the display is 2(u+v+w), not 2(u+v+u), and the (2,2) entry carries +w/2,
/// not -w/2.
inline std::vector<Mat<Rat>> reference_family_corrected() {
    auto mats = reference_family_verbatim();
    mats[0].at(0, 0) = Rat(2);           // coefficient of u at (1,1)
    mats[2].at(0, 0) = Rat(2);           // coefficient of w at (1,1)
    mats[2].at(1, 1) = Rat(1, 2);        // coefficient of w at (2,2)
    return mats;
}

struct ReferenceFamilyReport {
    Convention convention = Convention::AZ_eq_ZD;
    bool convention_unique = true;
    std::vector<std::string> corrected_entries;  // human-readable list of amended entries
    bool verbatim_symmetric = true;
    bool verbatim_invariant = false;   // expected false: two typos in the display
    bool corrected_invariant = false;  // must be true
    std::size_t computed_dimension = 0;
    bool span_matches = false;         // corrected family spans the computed space
    bool pass() const { return corrected_invariant && span_matches && convention_unique; }
};

/// Fixes the action convention by searching for the variant under which the
/// (corrected) reference family is invariant, then runs the exact span tests
/// against the computed invariant family.
inline ReferenceFamilyReport verify_reference_family() {
    auto [rho_r, rho_s] = symplectic_rep_q5();
    std::vector<Mat<Rat>> gens{rho_r, rho_s};
    auto verbatim = reference_family_verbatim();
    auto corrected = reference_family_corrected();

    ReferenceFamilyReport rep;
    for (const auto& m : verbatim) rep.verbatim_symmetric = rep.verbatim_symmetric && m.is_symmetric();

    std::vector<Convention> matches;
    for (Convention c : {Convention::AZ_eq_ZD, Convention::AtZ_eq_ZDt}) {
        bool all = true;
        for (const auto& m : corrected) all = all && family_member_fixed(m, gens, c);
        if (all) matches.push_back(c);
    }
    rep.convention_unique = matches.size() == 1;
    if (!matches.empty()) rep.convention = matches.front();

    rep.verbatim_invariant = true;
    for (const auto& m : verbatim)
        rep.verbatim_invariant = rep.verbatim_invariant && family_member_fixed(m, gens, rep.convention);
    rep.corrected_invariant = true;
    for (const auto& m : corrected)
        rep.corrected_invariant = rep.corrected_invariant && family_member_fixed(m, gens, rep.convention);

    for (std::size_t k = 0; k < verbatim.size(); ++k)
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                if (!(verbatim[k].at(i, j) == corrected[k].at(i, j)))
                    rep.corrected_entries.push_back(
                        "parameter " + std::string(1, "uvw"[k]) + " entry (" + std::to_string(i + 1) +
                        "," + std::to_string(j + 1) + "): " + rat_to_string(verbatim[k].at(i, j)) +
                        " -> " + rat_to_string(corrected[k].at(i, j)));

    SiegelFamily fam = invariant_family(gens, rep.convention);
    rep.computed_dimension = fam.basis.size();

    std::vector<Mat<Rat>> joint = fam.basis;
    joint.insert(joint.end(), corrected.begin(), corrected.end());
    rep.span_matches = span_rank(corrected) == corrected.size() &&
                       span_rank(fam.basis) == fam.basis.size() &&
                       span_rank(joint) == fam.basis.size();
    return rep;
}

// ---------------------------------------------------------------------------
// The Siegel-space action (numeric) and positive-definite witnesses
// ---------------------------------------------------------------------------

using CMat = std::vector<std::vector<std::complex<double>>>;

inline CMat cmat(std::size_t n) { return CMat(n, std::vector<std::complex<double>>(n)); }

inline CMat to_cmat(const Mat<Rat>& m) {
    CMat out = cmat(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = static_cast<double>(m.at(i, j));
    return out;
}

inline CMat cmul(const CMat& a, const CMat& b) {
    std::size_t n = a.size();
    CMat r = cmat(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

/// Solves A X = B by Gaussian elimination with partial pivoting.
inline CMat csolve(CMat a, CMat b) {
    std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[p][col])) p = r;
        if (std::abs(a[p][col]) < 1e-12) throw std::domain_error("singular A + ZC block");
        std::swap(a[p], a[col]);
        std::swap(b[p], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            std::complex<double> f = a[r][col] / a[col][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                b[r][j] -= f * b[col][j];
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b[i][j] /= a[i][i];
    return b;
}

/// Z -> (A + ZC)^-1 (B + ZD); the symmetry of the result is asserted within
/// tolerance for concrete points.
inline CMat siegel_action(const Mat<Rat>& m, const CMat& z) {
    std::size_t g = z.size();
    CMat A = to_cmat(block(m, 0, 0)), B = to_cmat(block(m, 0, 1));
    CMat C = to_cmat(block(m, 1, 0)), D = to_cmat(block(m, 1, 1));
    CMat left = cmat(g), right = cmat(g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            left[i][j] = A[i][j];
            right[i][j] = B[i][j];
            for (std::size_t k = 0; k < g; ++k) {
                left[i][j] += z[i][k] * C[k][j];
                right[i][j] += z[i][k] * D[k][j];
            }
        }
    CMat out = csolve(left, right);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j)
            if (std::abs(out[i][j] - out[j][i]) > 1e-7)
                throw std::logic_error("Siegel action returned a non-symmetric point");
    return out;
}

/// Exact positive-definiteness via leading principal minors.
inline std::pair<bool, std::vector<Rat>> positive_definite_minors(const Mat<Rat>& m) {
    std::vector<Rat> minors;
    bool ok = true;
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        Rat d = det(m.leading_principal(k));
        minors.push_back(d);
        ok = ok && d > 0;
    }
    return {ok, minors};
}

struct SiegelWitness {
    std::vector<Rat> real_params;
    std::vector<Rat> imag_params;
    Mat<Rat> imag_part;
    std::vector<Rat> minors;
    long attempts = 0;
};

/// Searches parameter assignments with Im(Z) positive definite: first a
/// deterministic rational grid on purely imaginary parameters, then seeded
/// random rational combinations. Exact minor certificates throughout.
inline std::optional<SiegelWitness> sample_siegel_point(const SiegelFamily& fam, long budget,
                                                        unsigned long seed = 0) {
    if (fam.basis.empty()) throw std::invalid_argument("family has an empty basis");
    const std::size_t d = fam.basis.size();
    long attempts = 0;

    auto try_candidate = [&](const std::vector<Rat>& im) -> std::optional<SiegelWitness> {
        Mat<Rat> sum(fam.basis.front().rows(), fam.basis.front().cols());
        for (std::size_t i = 0; i < d; ++i) sum = sum + (im[i] * fam.basis[i]);
        auto [ok, minors] = positive_definite_minors(sum);
        if (!ok) return std::nullopt;
        SiegelWitness w{std::vector<Rat>(d, Rat(0)), im, sum, minors, attempts};
        return w;
    };

    static const Rat grid_values[] = {Rat(0), Rat(1), Rat(-1), Rat(1, 2), Rat(-1, 2), Rat(2), Rat(-2)};
    const std::size_t gv = sizeof(grid_values) / sizeof(grid_values[0]);
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= gv;
    for (std::size_t code = 1; code < total && attempts < budget; ++code) {
        std::vector<Rat> im(d);
        std::size_t c = code;
        for (std::size_t i = 0; i < d; ++i) {
            im[i] = grid_values[c % gv];
            c /= gv;
        }
        ++attempts;
        if (auto w = try_candidate(im)) return w;
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> numer(-8, 8);
    std::uniform_int_distribution<long> denom(1, 4);
    while (attempts < budget) {
        std::vector<Rat> im(d);
        for (auto& v : im) v = Rat(numer(rng), denom(rng));
        ++attempts;
        if (auto w = try_candidate(im)) return w;
    }
    return std::nullopt;
}

}  // namespace fq
