// Sharp sampling constants as extreme eigenvalues of the weighted frame
// matrix, degree sweeps, Carleson-type cell checks and the gamma selection
// rule for Bergman truncation.
#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <vector>

#include "mzforge/complex_poly.hpp"
#include "mzforge/geometry.hpp"

namespace mzf {

enum class WeightPolicy {
    TruncatedKernelDiagonal, // 1 / k_n(lambda, lambda)
    OneOverN,
    OneOverCount,
    FullKernelDiagonal // 1 / k(lambda, lambda), requires |lambda| < 1
};

const char* weight_policy_name(WeightPolicy p);

double sample_weight(Space space, int n, cplx lambda, WeightPolicy policy,
                     size_t count);

// S = sum_lambda m(lambda) w_lambda v(lambda) v(lambda)^*, with v_k(lambda)
// the orthonormal basis e_k(lambda): sqrt(k+1) lambda^k (Bergman) or
// lambda^k (Hardy).  For p with orthonormal coefficients c:
// c^* S c = sum m(lambda) w_lambda |p(lambda)|^2.
Eigen::MatrixXcd frame_matrix(Space space, int n, const PointFamily& fam,
                              WeightPolicy policy);
Eigen::MatrixXcd frame_matrix_reference(Space space, int n, const PointFamily& fam,
                                        WeightPolicy policy);

struct FrameReport {
    int n = 0;
    double a = 0.0; // sharp lower constant (smallest eigenvalue, clamped at 0)
    double b = 0.0; // sharp upper constant (largest eigenvalue)
    WeightPolicy policy = WeightPolicy::TruncatedKernelDiagonal;
    double condition = 0.0; // b/a, +inf when a == 0
    std::optional<Polynomial> min_witness;
    std::optional<Polynomial> max_witness;
};

// A_n and B_n are attained; if #fam < n+1 the frame matrix is rank
// deficient and A_n = 0 exactly.
FrameReport sharp_bounds(Space space, int n, const PointFamily& fam,
                         WeightPolicy policy, bool with_witnesses = false);

struct SweepOptions {
    double spread_factor = 4.0;
    double a_floor = 1e-6;
};

struct SweepResult {
    std::vector<FrameReport> rows; // sorted by n
    double a_spread = 0.0;         // max A_n / min A_n (+inf if min == 0)
    double b_spread = 0.0;
    bool verdict = false;
};

using FamilyGenerator = std::function<PointFamily(int)>;

// Runs sharp_bounds per degree; verdict true iff both spreads stay within
// opts.spread_factor and min A_n >= opts.a_floor.
SweepResult sweep(Space space, const FamilyGenerator& gen,
                  const std::vector<int>& n_list, WeightPolicy policy,
                  SweepOptions opts = {});

struct CarlesonReport {
    double c_bulk = 0.0;    // max mu(B(z, 0.5(1-|z|^2))) / (1-|z|^2)^2
    double c_annulus = 0.0; // max mu(B(z, 1/n)) n^2
    double c = 0.0;
    bool pass = false;
    double ceiling = 0.0;
    long probe_count = 0;
};

// Discrete measure mu_n = sum m(lambda) delta_lambda / k_n(lambda, lambda)
// with the Bergman truncated kernel; smallest empirical C over the probe
// set, compared against the ceiling.  Requires gamma > 0, n > 2 gamma.
CarlesonReport carleson_check(const PointFamily& fam, double gamma,
                              double ceiling = 100.0, int probes = 1);

// Largest gamma (bisection to rel. 1e-6) with
//   1 - (1 - (1+delta) gamma / n)^{2n+2} <= a_lower delta^2 / 8
// for every integer n > 2 gamma (the supremum sits at the smallest n).
double select_gamma(double a_lower, double delta);

} // namespace mzf
