#ifndef SCENIC_TORUS_HPP
#define SCENIC_TORUS_HPP

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "scenic/intpoly.hpp"
#include "scenic/matrix.hpp"

namespace scenic {

/* Integer endomorphism of the lattice Z^dim. */
struct Endomorphism {
    int dim = 0;
    IntMatrix m;
};

/* Multiplication by x on Z[x]/(f): subdiagonal ones, last column -a_i. The
 * Vandermonde row (1, mu, ..., mu^(d-1)) is a left eigenvector for every
 * root mu. The characteristic polynomial is recomputed exactly
 * (Faddeev-LeVerrier) and asserted equal to f. Throws errc::not_monic. */
Endomorphism companion(const IntPoly& f);

using Cplx = std::complex<long double>;

/* All d roots at working precision with conjugate pairing. residuals are
 * backward-error scaled: |f(mu)| / sum_i |a_i| |mu|^i. */
struct SpectrumData {
    std::vector<Cplx> roots;
    std::vector<std::pair<int, int>> pairs; // (positive-imag index, partner)
    std::vector<int> selected;              // one index per pair, Im > 0
    std::vector<long double> residuals;
    long double min_imag = 0;
};

/* Simultaneous all-roots iteration (Aberth-Ehrlich) from perturbed-circle
 * starting points inside the Cauchy bound; converged when the largest
 * relative step drops below tol, or when every residual reaches the
 * working-precision evaluation floor (iteration cap 500). Requires monic
 * squarefree f of even degree. Throws errc::no_convergence,
 * errc::real_root_detected (some |Im mu| < 10*tol). */
SpectrumData roots(const IntPoly& f, long double tol = 1e-12L);

/* Numerical realization of the torus attached to f: period matrix with rows
 * (1, mu_i, ..., mu_i^(d-1)) over the selected eigenvalues, and the real
 * complex structure J = Re(P^-1 diag(iI, -iI) P) with P = [Pi; conj Pi]. */
struct TorusModel {
    IntPoly f;
    Endomorphism C;
    SpectrumData spectrum;
    CMat Pi;          // n x 2n
    RMat J;           // 2n x 2n
    long double tol = 0;
    std::map<std::string, double> residual_report;

    bool within_tol() const;
};

/* Validates monic / even degree / squarefree and builds the model; the
 * Galois-side certification is the caller's business (scenic_check).
 * flip_pairs lists conjugate-pair indices whose negative-imaginary
 * representative should be selected instead of the canonical positive one.
 * Throws errc::ill_conditioned when the equilibrated |det P| < 1e-6,
 * propagates root-finder errors. */
TorusModel period_matrix(const IntPoly& f, long double tol = 1e-8L,
                         const std::vector<int>& flip_pairs = {});

/* Complex structure induced on the dual lattice: J_dual = -J^T. */
RMat dual_structure(const RMat& J);

/* First Chern form of the twisted universal bundle on the product with the
 * dual torus, as the integer alternating form
 * ((l1,f1),(l2,f2)) -> f2(phi l1) - f1(phi l2) on Z^2n + dual, i.e. the
 * block matrix M = [[0, phi^T], [-phi, 0]]. Identity twist gives the
 * standard symplectic matrix. */
struct PoincareFormModel {
    int n = 0;
    Endomorphism twist;
    IntMatrix M; // 4n x 4n
};

PoincareFormModel poincare_form(int n, const Endomorphism& twist);
PoincareFormModel poincare_form(int n); // identity twist

/* Max-entry residual of J~^T M J~ - M with J~ = blockdiag(J, J_dual);
 * vanishes exactly when the twist commutes with J.  A nonzero value for a
 * commuting twist measures the numerical quality of J. */
long double check_type11(const PoincareFormModel& form, const RMat& J, const RMat& Jdual);

/* S^T M S = -M for both S = blockdiag(-I, I) and S = blockdiag(I, -I),
 * checked exactly in integers. */
bool pullback_sign_checks(const IntMatrix& M);
bool pullback_sign_checks(const PoincareFormModel& form);

} // namespace scenic

#endif
