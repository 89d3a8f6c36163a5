// Generators for candidate MZ families (torus constructions lifted into
// annuli, hyperbolic lattices, the ring-plus-point example) and the
// annulus contraction iteration.
#pragma once

#include <cstdint>
#include <vector>

#include "mzforge/complex_poly.hpp"
#include "mzforge/geometry.hpp"

namespace mzf {

enum class RadiiMode { ConstantInner, UniformRandom, TwoSided, Explicit };

struct RadiiPolicy {
    RadiiMode mode = RadiiMode::ConstantInner;
    std::uint64_t seed = 0;
    std::vector<double> radii; // Explicit mode
};

const char* radii_mode_name(RadiiMode m);

// L = ceil(oversample (n+1)) equispaced points on |z| = 1, each angle
// jittered by at most jitter/L.  Requires oversample >= 1, 0 <= jitter < pi.
PointFamily torus_equispaced(int n, double oversample, std::uint64_t seed = 0,
                             double jitter = 0.0);

// Lambda_n = { rho_k e^{i nu_k} } with radii drawn per policy:
//   ConstantInner  rho = 1-gamma/n
//   UniformRandom  rho in [1-gamma/n, 1)
//   TwoSided       rho in [1-gamma/n, (1-gamma/n)^{-1}]
//   Explicit       caller-provided, validated against the two-sided interval
// Requires unit-modulus input, gamma > 0, n > 2 gamma.
PointFamily lift_to_annulus(const PointFamily& torus, double gamma,
                            const RadiiPolicy& policy);

// Rings at radii r_j = 1 - s^j, j >= 0, up to r_max; ring j carries
// ceil(angular_factor 2 pi / (1-r_j)) equispaced points with alternating
// angular offset.  The degenerate j = 0 ring is a single origin point.
PointFamily hyperbolic_lattice(double s, double angular_factor, double r_max);

// Points with |lambda| < 1-gamma/n (strict), retagged with (n, gamma).
PointFamily bergman_truncate(const PointFamily& fam, int n, double gamma);

// { (1-gamma/n) e^{2 pi i k/n} : k < n } U { alpha e^{2 pi i / n^2} }
PointFamily example27(int n, double gamma, double alpha);

struct ContractionStep {
    PointFamily family; // tagged with gamma' = (3/4) gamma
    Polynomial poly;
};

// One annulus contraction: mu = (1+gamma/(3n)) lambda for |lambda| <= 1,
// mu = (1+gamma/(3n))/conj(lambda) otherwise; p -> minimum_phase_shrink.
// Requires Lambda in A_{gamma/n}, injective torus projection, n > 2 gamma,
// nonzero p of degree <= n.
ContractionStep contraction_step(const PointFamily& fam, const Polynomial& p,
                                 double gamma, int n);

struct ContractionLevel {
    PointFamily family;
    Polynomial poly;
    double gamma = 0.0;
    double norm_sq = 0.0;      // ||p_l||^2_{H^2}
    double sampling_sum = 0.0; // (1/n) sum m(lambda) |p_l(lambda)|^2
    double max_radial_dev = 0.0;
};

struct ContractionTrace {
    std::vector<ContractionLevel> levels; // levels[0] = input
    bool converged = false;               // stopped by the radial threshold
    double final_ratio = 1.0;             // ||p_L||^2 / ||p_0||^2
};

// Iterates contraction_step with gamma_l = (3/4) gamma_{l-1} until l_max
// steps or max radial deviation < 1e-9.  The norm sequence is nonincreasing
// and bounded below by e^{-8 gamma/3} ||p||^2.
ContractionTrace contraction_iterate(const PointFamily& fam, const Polynomial& p,
                                     double gamma, int n, int l_max);

} // namespace mzf
