#include "scenic/torus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace scenic {

namespace {

long double to_ld(const Int& v) {
    // mpz_get_d only carries 53 bits; go through a string for the full
    // long double mantissa
    return strtold(v.get_str().c_str(), nullptr);
}

std::vector<long double> coeffs_ld(const IntPoly& f) {
    std::vector<long double> a(f.size());
    for (size_t i = 0; i < a.size(); ++i) a[i] = to_ld(f.coeff(i));
    return a;
}

Cplx horner(const std::vector<long double>& a, Cplx z) {
    Cplx v = 0;
    for (size_t i = a.size(); i-- > 0;) v = v * z + a[i];
    return v;
}

long double scaled_residual(const std::vector<long double>& a, Cplx z) {
    long double den = 0, zp = 1, az = std::abs(z);
    for (size_t i = 0; i < a.size(); ++i) {
        den += std::abs(a[i]) * zp;
        zp *= az;
    }
    return std::abs(horner(a, z)) / std::max(den, 1e-30L);
}

} // namespace

Endomorphism companion(const IntPoly& f) {
    if (!f.is_monic()) raise(errc::not_monic, "companion matrix requires a monic polynomial");
    const int d = f.degree();
    Endomorphism e;
    e.dim = d;
    e.m = IntMatrix(d, d);
    for (int i = 0; i + 1 < d; ++i) e.m(i + 1, i) = 1;
    for (int i = 0; i < d; ++i) e.m(i, d - 1) = -f.coeff(static_cast<size_t>(i));
    if (!(char_poly(e.m) == f))
        throw std::logic_error("companion matrix failed the characteristic-polynomial check");
    return e;
}

SpectrumData roots(const IntPoly& f, long double tol) {
    if (!f.is_monic()) raise(errc::not_monic, "root finder requires a monic polynomial");
    if (f.degree() < 2 || f.degree() % 2 != 0)
        raise(errc::degree_invalid, "root finder expects even degree >= 2");
    if (!squarefree_part_check(f)) raise(errc::not_squarefree, "root finder requires squarefree input");
    tol = std::max(tol, 1e-18L);

    const int d = f.degree();
    const std::vector<long double> a = coeffs_ld(f);
    const std::vector<long double> da = [&] {
        std::vector<long double> v(static_cast<size_t>(d));
        for (int i = 1; i <= d; ++i) v[static_cast<size_t>(i - 1)] = a[static_cast<size_t>(i)] * i;
        return v;
    }();

    // perturbed circle inside the Cauchy bound; radius from the geometric
    // root-size estimate |a_0|^(1/d)
    long double maxabs = 0;
    for (int i = 0; i < d; ++i) maxabs = std::max(maxabs, std::abs(a[static_cast<size_t>(i)]));
    const long double cauchy = 1 + maxabs;
    long double r0 = std::pow(std::max(std::abs(a[0]), 1e-12L), 1.0L / d);
    r0 = std::clamp(r0, 1e-3L, 0.9L * cauchy);

    constexpr long double pi = 3.14159265358979323846264338327950288L;
    std::vector<Cplx> z(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) {
        long double jitter =
            1 + 0.05L * (static_cast<long double>((j * 2654435761ull) % 97) / 97 - 0.5L);
        long double theta = 2 * pi * j / d + 0.31L;
        z[static_cast<size_t>(j)] = r0 * jitter * Cplx(std::cos(theta), std::sin(theta));
    }

    // a near-real conjugate pair (which minimal shifts produce by design)
    // can stall the step criterion at the working-precision floor, so a
    // root whose residual is below the Horner evaluation noise also counts
    // as converged
    const long double noise_floor =
        2.0L * d * std::numeric_limits<long double>::epsilon();
    auto at_noise_floor = [&] {
        for (const Cplx& zj : z)
            if (scaled_residual(a, zj) > noise_floor) return false;
        return true;
    };

    bool converged = false;
    for (int iter = 0; iter < 500 && !converged; ++iter) {
        long double max_step = 0;
        for (int j = 0; j < d; ++j) {
            Cplx zj = z[static_cast<size_t>(j)];
            Cplx p = horner(a, zj);
            Cplx dp = horner(da, zj);
            if (std::abs(dp) < 1e-300L) dp = Cplx(1e-300L, 0);
            Cplx newton = p / dp;
            Cplx sum = 0;
            for (int k = 0; k < d; ++k)
                if (k != j) sum += Cplx(1, 0) / (zj - z[static_cast<size_t>(k)]);
            Cplx w = newton / (Cplx(1, 0) - newton * sum);
            z[static_cast<size_t>(j)] = zj - w;
            max_step = std::max(max_step, std::abs(w) / std::max(1.0L, std::abs(zj)));
        }
        converged = max_step < tol || (max_step < 1e-6L && at_noise_floor());
    }
    if (!converged) raise(errc::no_convergence, "root iteration did not converge in 500 steps");

    // canonical order, so downstream output is reproducible
    std::sort(z.begin(), z.end(), [](Cplx x, Cplx y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });

    SpectrumData s;
    s.min_imag = std::abs(z[0].imag());
    for (Cplx v : z) s.min_imag = std::min(s.min_imag, std::abs(v.imag()));
    if (s.min_imag < 10 * tol)
        raise(errc::real_root_detected,
              "a root sits within 10*tol of the real axis; the input has a real root or "
              "cannot be told apart from one at this tolerance");

    // greedy conjugate matching, then exact symmetrization per pair
    std::vector<int> partner(static_cast<size_t>(d), -1);
    for (int i = 0; i < d; ++i) {
        if (z[static_cast<size_t>(i)].imag() <= 0 || partner[static_cast<size_t>(i)] != -1) continue;
        int best = -1;
        long double best_dist = 0;
        for (int j = 0; j < d; ++j) {
            if (z[static_cast<size_t>(j)].imag() >= 0 || partner[static_cast<size_t>(j)] != -1) continue;
            long double dist = std::abs(z[static_cast<size_t>(i)] - std::conj(z[static_cast<size_t>(j)]));
            if (best == -1 || dist < best_dist) {
                best = j;
                best_dist = dist;
            }
        }
        if (best == -1 || best_dist > 1e-6L * (1 + std::abs(z[static_cast<size_t>(i)])))
            raise(errc::no_convergence, "conjugate pairing failed");
        partner[static_cast<size_t>(i)] = best;
        partner[static_cast<size_t>(best)] = i;
        Cplx avg = (z[static_cast<size_t>(i)] + std::conj(z[static_cast<size_t>(best)])) / Cplx(2, 0);
        z[static_cast<size_t>(i)] = avg;
        z[static_cast<size_t>(best)] = std::conj(avg);
        s.pairs.emplace_back(i, best);
        s.selected.push_back(i);
    }
    if (2 * static_cast<int>(s.pairs.size()) != d)
        raise(errc::no_convergence, "conjugate pairing incomplete");

    s.roots = z;
    s.residuals.resize(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j)
        s.residuals[static_cast<size_t>(j)] = scaled_residual(a, z[static_cast<size_t>(j)]);
    return s;
}

namespace {

/* partial-pivot LU on an equilibrated copy; returns log10 |det| of the
 * original matrix and the |det| of the scaled one */
struct LuResult {
    CMat lu;
    std::vector<int> perm;
    std::vector<long double> row_scale, col_scale;
    long double det_scaled = 0;
    long double det_log10 = 0;
    bool singular = false;
};

LuResult lu_factor(const CMat& p) {
    const int n = p.rows;
    LuResult r;
    r.lu = p;
    r.row_scale.assign(static_cast<size_t>(n), 1);
    r.col_scale.assign(static_cast<size_t>(n), 1);

    for (int i = 0; i < n; ++i) {
        long double m = 0;
        for (int j = 0; j < n; ++j) m = std::max(m, std::abs(r.lu(i, j)));
        if (m == 0) {
            r.singular = true;
            return r;
        }
        r.row_scale[static_cast<size_t>(i)] = m;
        for (int j = 0; j < n; ++j) r.lu(i, j) /= m;
    }
    for (int j = 0; j < n; ++j) {
        long double m = 0;
        for (int i = 0; i < n; ++i) m = std::max(m, std::abs(r.lu(i, j)));
        if (m == 0) {
            r.singular = true;
            return r;
        }
        r.col_scale[static_cast<size_t>(j)] = m;
        for (int i = 0; i < n; ++i) r.lu(i, j) /= m;
    }

    r.perm.resize(static_cast<size_t>(n));
    std::iota(r.perm.begin(), r.perm.end(), 0);
    long double det_abs = 1;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(r.lu(i, k)) > std::abs(r.lu(piv, k))) piv = i;
        if (std::abs(r.lu(piv, k)) == 0) {
            r.singular = true;
            return r;
        }
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(r.lu(k, j), r.lu(piv, j));
            std::swap(r.perm[static_cast<size_t>(k)], r.perm[static_cast<size_t>(piv)]);
        }
        for (int i = k + 1; i < n; ++i) {
            Cplx factor = r.lu(i, k) / r.lu(k, k);
            r.lu(i, k) = factor;
            for (int j = k + 1; j < n; ++j) r.lu(i, j) -= factor * r.lu(k, j);
        }
        det_abs *= std::abs(r.lu(k, k));
    }
    r.det_scaled = det_abs;
    r.det_log10 = std::log10(det_abs);
    for (long double v : r.row_scale) r.det_log10 += std::log10(v);
    for (long double v : r.col_scale) r.det_log10 += std::log10(v);
    return r;
}

/* solve P x = b given the factorization of the equilibrated P */
std::vector<Cplx> lu_solve(const LuResult& f, const std::vector<Cplx>& b) {
    const int n = f.lu.rows;
    std::vector<Cplx> y(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        y[static_cast<size_t>(i)] =
            b[static_cast<size_t>(f.perm[static_cast<size_t>(i)])] /
            f.row_scale[static_cast<size_t>(f.perm[static_cast<size_t>(i)])];
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < i; ++k) y[static_cast<size_t>(i)] -= f.lu(i, k) * y[static_cast<size_t>(k)];
    for (int i = n - 1; i >= 0; --i) {
        for (int k = i + 1; k < n; ++k) y[static_cast<size_t>(i)] -= f.lu(i, k) * y[static_cast<size_t>(k)];
        y[static_cast<size_t>(i)] /= f.lu(i, i);
    }
    for (int i = 0; i < n; ++i) y[static_cast<size_t>(i)] /= f.col_scale[static_cast<size_t>(i)];
    return y;
}

RMat to_rmat(const IntMatrix& m) {
    RMat r(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r(i, j) = to_ld(m(i, j));
    return r;
}

long double max_abs(const RMat& m) {
    long double v = 0;
    for (long double x : m.a) v = std::max(v, std::abs(x));
    return v;
}

} // namespace

bool TorusModel::within_tol() const {
    for (const char* key : {"pi_commutation", "j_square", "j_commutation",
                            "j_imaginary_part", "max_root_residual"}) {
        auto it = residual_report.find(key);
        if (it == residual_report.end() || !(it->second < static_cast<double>(tol))) return false;
    }
    return true;
}

TorusModel period_matrix(const IntPoly& f, long double tol, const std::vector<int>& flip_pairs) {
    TorusModel t;
    t.f = f;
    t.tol = tol;
    t.spectrum = roots(f, std::min(tol, 1e-12L));
    t.C = companion(f);

    const int d = f.degree();
    const int n = d / 2;

    for (int idx : flip_pairs) {
        if (idx < 0 || idx >= n) throw std::invalid_argument("selection mask index out of range");
        auto [pos, neg] = t.spectrum.pairs[static_cast<size_t>(idx)];
        t.spectrum.selected[static_cast<size_t>(idx)] =
            t.spectrum.selected[static_cast<size_t>(idx)] == pos ? neg : pos;
    }

    t.Pi = CMat(n, d);
    for (int i = 0; i < n; ++i) {
        Cplx mu = t.spectrum.roots[static_cast<size_t>(t.spectrum.selected[static_cast<size_t>(i)])];
        Cplx pw = 1;
        for (int j = 0; j < d; ++j) {
            t.Pi(i, j) = pw;
            pw *= mu;
        }
    }

    CMat p(d, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) {
            p(i, j) = t.Pi(i, j);
            p(n + i, j) = std::conj(t.Pi(i, j));
        }

    LuResult lu = lu_factor(p);
    if (lu.singular || lu.det_scaled < 1e-6L)
        raise(errc::ill_conditioned, "period matrix is numerically degenerate");

    // S = P^-1 diag(iI, -iI) P, column by column; J = Re S
    CMat s(d, d);
    for (int j = 0; j < d; ++j) {
        std::vector<Cplx> b(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) {
            Cplx rot = i < n ? Cplx(0, 1) : Cplx(0, -1);
            b[static_cast<size_t>(i)] = rot * p(i, j);
        }
        std::vector<Cplx> col = lu_solve(lu, b);
        for (int i = 0; i < d; ++i) s(i, j) = col[static_cast<size_t>(i)];
    }

    t.J = RMat(d, d);
    long double imag_res = 0, real_max = 0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            t.J(i, j) = s(i, j).real();
            imag_res = std::max(imag_res, std::abs(s(i, j).imag()));
            real_max = std::max(real_max, std::abs(s(i, j).real()));
        }

    // residuals, each scaled by the size of what it compares
    long double pi_res = 0;
    for (int i = 0; i < n; ++i) {
        Cplx mu = t.spectrum.roots[static_cast<size_t>(t.spectrum.selected[static_cast<size_t>(i)])];
        long double row_norm = 0;
        for (int j = 0; j < d; ++j) row_norm = std::max(row_norm, std::abs(t.Pi(i, j)));
        for (int j = 0; j < d; ++j) {
            Cplx acc = 0;
            for (int k = 0; k < d; ++k)
                if (t.C.m(k, j) != 0) acc += t.Pi(i, k) * to_ld(t.C.m(k, j));
            acc -= mu * t.Pi(i, j);
            pi_res = std::max(pi_res, std::abs(acc) / (row_norm * (1 + std::abs(mu))));
        }
    }

    RMat cr = to_rmat(t.C.m);
    RMat jj = t.J * t.J;
    long double j_sq = 0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            j_sq = std::max(j_sq, std::abs(jj(i, j) + (i == j ? 1.0L : 0.0L)));
    j_sq /= 1 + max_abs(t.J) * max_abs(t.J);

    RMat comm = t.J * cr - cr * t.J;
    long double j_comm = max_abs(comm) / (1 + max_abs(t.J) * max_abs(cr));

    long double max_res = *std::max_element(t.spectrum.residuals.begin(), t.spectrum.residuals.end());

    t.residual_report["pi_commutation"] = static_cast<double>(pi_res);
    t.residual_report["j_square"] = static_cast<double>(j_sq);
    t.residual_report["j_commutation"] = static_cast<double>(j_comm);
    t.residual_report["j_imaginary_part"] = static_cast<double>(imag_res / (1 + real_max));
    t.residual_report["max_root_residual"] = static_cast<double>(max_res);
    t.residual_report["min_imag"] = static_cast<double>(t.spectrum.min_imag);
    t.residual_report["det_scaled"] = static_cast<double>(lu.det_scaled);
    t.residual_report["det_log10"] = static_cast<double>(lu.det_log10);
    return t;
}

RMat dual_structure(const RMat& j) {
    RMat d = j.transposed();
    for (long double& v : d.a) v = -v;
    return d;
}

PoincareFormModel poincare_form(int n, const Endomorphism& twist) {
    if (twist.dim != 2 * n) throw std::invalid_argument("twist must act on Z^(2n)");
    PoincareFormModel m;
    m.n = n;
    m.twist = twist;
    m.M = IntMatrix(4 * n, 4 * n);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) {
            m.M(i, 2 * n + j) = twist.m(j, i);  // phi^T
            m.M(2 * n + i, j) = -twist.m(i, j); // -phi
        }
    return m;
}

PoincareFormModel poincare_form(int n) {
    Endomorphism id;
    id.dim = 2 * n;
    id.m = IntMatrix::identity(2 * n);
    return poincare_form(n, id);
}

long double check_type11(const PoincareFormModel& form, const RMat& j, const RMat& jdual) {
    const int two_n = j.rows;
    RMat jt(2 * two_n, 2 * two_n);
    for (int i = 0; i < two_n; ++i)
        for (int k = 0; k < two_n; ++k) {
            jt(i, k) = j(i, k);
            jt(two_n + i, two_n + k) = jdual(i, k);
        }
    RMat mr = to_rmat(form.M);
    RMat res = jt.transposed() * mr * jt - mr;
    return max_abs(res);
}

bool pullback_sign_checks(const IntMatrix& m) {
    const int n = m.rows;
    if (n % 2 != 0) return false;
    const int h = n / 2;
    auto negated_under = [&](bool flip_first) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int si = (i < h) == flip_first ? -1 : 1;
                int sj = (j < h) == flip_first ? -1 : 1;
                if (si * sj * m(i, j) != -m(i, j)) return false;
            }
        return true;
    };
    return negated_under(true) && negated_under(false);
}

bool pullback_sign_checks(const PoincareFormModel& form) { return pullback_sign_checks(form.M); }

} // namespace scenic
