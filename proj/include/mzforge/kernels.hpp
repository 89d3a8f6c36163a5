// Truncated and full reproducing kernels for P_n in the Bergman and Hardy
// spaces, and executable versions of the kernel comparison bounds.
#pragma once

#include <vector>

#include "mzforge/complex_poly.hpp"

namespace mzf {

// Switch to direct summation when |1 - z conj(w)| < near_diagonal_tau(n).
// The closed forms cancel catastrophically near the diagonal; the fixed
// floor 1e-4 is inadequate for small n, hence the degree-dependent term.
inline double near_diagonal_tau(int n) {
    const double tau = 1e-4;
    const double adaptive = 0.5 / (n + 1);
    return tau > adaptive ? tau : adaptive;
}

enum class KernelRegime { ClosedForm, DirectSum };

struct KernelValue {
    cplx value;
    KernelRegime regime;
};

// Full-space kernels: Bergman 1/(1 - z conj(w))^2, Hardy 1/(1 - z conj(w)).
// Requires |z conj(w)| < 1.
cplx kernel_full(Space space, cplx z, cplx w);

// k_n(z,w) = sum_{k<=n} (k+1)(z conj(w))^k (Bergman) or sum (z conj(w))^k
// (Hardy).  Valid for all finite z, w (needed on the exterior annulus).
cplx kernel_trunc(Space space, int n, cplx z, cplx w);
KernelValue kernel_trunc_traced(Space space, int n, cplx z, cplx w);

// diagonal k_n(z,z); real and >= 1
double kernel_trunc_diag(Space space, int n, cplx z);

// kappa_n(z,w) = k_n(z,w) / sqrt(k_n(w,w))
cplx kernel_normalized(Space space, int n, cplx z, cplx w);

namespace detail {
// both evaluation paths, exposed for cross-validation
cplx kernel_trunc_direct(Space space, int n, cplx t);
cplx kernel_trunc_closed(Space space, int n, cplx t);
} // namespace detail

// c_gamma = 1 - e^{-2 gamma}(1 + 2 gamma), the bulk lower-bound constant
double bulk_lower_constant(double gamma);

enum class KernelRegion { Bulk, Annulus };

// Two-sided diagonal bound check on one region.  Ratios are normalized so
// that >= 1 means the bound holds; worst ratios are minima over the grid.
struct KernelBoundReport {
    KernelRegion region;
    int n = 0;
    double gamma = 0.0;
    bool lower_ok = false;
    bool upper_ok = false;
    double worst_lower_ratio = 0.0;
    double worst_upper_ratio = 0.0;
    cplx lower_witness;
    cplx upper_witness;
    // Hardy annulus only: whether the stronger lower constant
    // (1-e^{-4 gamma})/(2 gamma) also held (the checked one is
    // (1-e^{-2 gamma})/(2 gamma)).
    bool strong_lower_ok = true;
};

// Bergman: bulk check c_gamma k <= k_n <= k on B_{1-gamma/n} plus annulus
// check e^{-4 gamma} n^2/4 <= k_n <= n^2 on C_{gamma/n}.
// Hardy: annulus check c_lo n <= k_n <= (e^{4 gamma}/gamma) n on A_{gamma/n}.
// Grid: radial x angular product with grid_density points per dimension plus
// the region boundary circles.  Requires n > max(2 gamma, 3).
std::vector<KernelBoundReport> check_kernel_bounds(Space space, int n, double gamma,
                                                   int grid_density);

// Smallest n0 <= n_max such that the Bergman bulk bound with constant
// c_gamma passes on the grid for every n in [n0, n_max]; -1 if none.
int scan_bulk_bound_degree(double gamma, int grid_density, int n_max);

// Near-diagonal comparability of the normalized Bergman kernel.
// For w in B_{1-gamma0/n}, z in B(w, 0.5(1-|w|^2)) the proof chain gives
//   2/9 <= |kappa_n(z,w)| (1-|w|^2) <= 6/sqrt(c_{gamma0});
// the nominal constants [1/4, 9/4] are also evaluated and reported.
struct NearDiagonalReport {
    int n = 0;
    double gamma0 = 0.0;
    bool ok = false;             // proof-chain constants
    bool nominal_ok = false;     // [1/4, 9/4]
    double min_scaled = 0.0;     // min |kappa_n|(1-|w|^2) over the grid
    double max_scaled = 0.0;
    cplx min_witness_w, max_witness_w;
};
NearDiagonalReport check_near_diagonal_bulk(int n, double gamma0, int grid_density);

// Annulus cells: empirical K with n/K <= |kappa_n(z,w)| <= K n for
// w in C_{gamma/n}, z in B(w, epsilon/n).
struct AnnulusCellReport {
    int n = 0;
    double gamma = 0.0;
    double epsilon = 1.0;
    double k_empirical = 0.0;
};
AnnulusCellReport check_near_diagonal_annulus(int n, double gamma, double epsilon,
                                              int grid_density);

} // namespace mzf
