#include "mzforge/kernels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mzf {

namespace {

cplx pow_int(cplx t, int k) {
    // binary exponentiation; k >= 0
    cplx acc(1.0), base = t;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

} // namespace

cplx kernel_full(Space space, cplx z, cplx w) {
    cplx t = z * std::conj(w);
    if (!(std::abs(t) < 1.0))
        throw std::domain_error("kernel_full: requires |z conj(w)| < 1");
    cplx d = cplx(1.0) - t;
    return space == Space::Bergman ? 1.0 / (d * d) : 1.0 / d;
}

namespace detail {

cplx kernel_trunc_direct(Space space, int n, cplx t) {
    if (space == Space::Hardy) {
        cplx acc(1.0);
        for (int k = 0; k < n; ++k) acc = acc * t + 1.0;
        return acc;
    }
    cplx acc(static_cast<double>(n + 1));
    for (int k = n - 1; k >= 0; --k) acc = acc * t + static_cast<double>(k + 1);
    return acc;
}

cplx kernel_trunc_closed(Space space, int n, cplx t) {
    cplx u = cplx(1.0) - t;
    cplx tn1 = pow_int(t, n + 1);
    if (space == Space::Hardy) return (cplx(1.0) - tn1) / u;
    // 1 + (n+1) t^{n+2} - (n+2) t^{n+1} == 1 - t^{n+1} (1 + (n+1)(1-t))
    cplx num = cplx(1.0) - tn1 * (cplx(1.0) + static_cast<double>(n + 1) * u);
    return num / (u * u);
}

} // namespace detail

KernelValue kernel_trunc_traced(Space space, int n, cplx z, cplx w) {
    if (n < 0) throw std::invalid_argument("kernel_trunc: n < 0");
    cplx t = z * std::conj(w);
    if (std::abs(cplx(1.0) - t) < near_diagonal_tau(n))
        return {detail::kernel_trunc_direct(space, n, t), KernelRegime::DirectSum};
    return {detail::kernel_trunc_closed(space, n, t), KernelRegime::ClosedForm};
}

cplx kernel_trunc(Space space, int n, cplx z, cplx w) {
    return kernel_trunc_traced(space, n, z, w).value;
}

double kernel_trunc_diag(Space space, int n, cplx z) {
    if (n < 0) throw std::invalid_argument("kernel_trunc_diag: n < 0");
    const double t = std::norm(z);
    if (std::abs(1.0 - t) < near_diagonal_tau(n)) {
        if (space == Space::Hardy) {
            double acc = 1.0;
            for (int k = 0; k < n; ++k) acc = acc * t + 1.0;
            return acc;
        }
        double acc = static_cast<double>(n + 1);
        for (int k = n - 1; k >= 0; --k) acc = acc * t + static_cast<double>(k + 1);
        return acc;
    }
    const double u = 1.0 - t;
    const double tn1 = std::pow(t, n + 1);
    if (space == Space::Hardy) return (1.0 - tn1) / u;
    return (1.0 - tn1 * (1.0 + (n + 1) * u)) / (u * u);
}

cplx kernel_normalized(Space space, int n, cplx z, cplx w) {
    double diag = kernel_trunc_diag(space, n, w);
    if (!(diag > 0.0))
        throw std::domain_error("kernel_normalized: vanishing diagonal kernel");
    return kernel_trunc(space, n, z, w) / std::sqrt(diag);
}

double bulk_lower_constant(double gamma) {
    return 1.0 - std::exp(-2.0 * gamma) * (1.0 + 2.0 * gamma);
}

namespace {

struct GridMin {
    double ratio = std::numeric_limits<double>::infinity();
    long idx = -1;
    cplx witness;
};

void track(GridMin& m, double ratio, long idx, cplx z) {
    if (ratio < m.ratio || (ratio == m.ratio && (m.idx < 0 || idx < m.idx))) {
        m.ratio = ratio;
        m.idx = idx;
        m.witness = z;
    }
}

// radial x angular product grid; evaluates f(z, flat_idx) at every node
template <class F>
void for_grid(const std::vector<double>& radii, int angular, F&& f) {
    const long total = static_cast<long>(radii.size()) * angular;
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < total; ++idx) {
        const double r = radii[static_cast<size_t>(idx / angular)];
        const double th = 2.0 * M_PI * static_cast<double>(idx % angular) /
                          static_cast<double>(angular);
        f(std::polar(r, th), idx);
    }
}

std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> v;
    if (count <= 1) {
        v.push_back(hi);
        return v;
    }
    v.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i)
        v.push_back(lo + (hi - lo) * static_cast<double>(i) / (count - 1));
    return v;
}

void require_degree(int n, double gamma, const char* who) {
    if (!(gamma > 0.0))
        throw std::invalid_argument(std::string(who) + ": requires gamma > 0");
    if (!(n > std::max(2.0 * gamma, 3.0)))
        throw std::invalid_argument(std::string(who) +
                                    ": requires n > max(2*gamma, 3)");
}

KernelBoundReport bound_report_from_grid(KernelRegion region, int n, double gamma,
                                         const std::vector<double>& radii, int angular,
                                         double lower_scale_of_k, double fixed_lower,
                                         double fixed_upper, bool against_full_kernel,
                                         double strong_lower = 0.0) {
    // against_full_kernel: lower bound lower_scale_of_k * k(z,z) and upper k(z,z);
    // otherwise fixed two-sided bounds fixed_lower <= k_n <= fixed_upper.
    std::vector<double> low_ratio(radii.size() * static_cast<size_t>(angular));
    std::vector<double> up_ratio(low_ratio.size());
    std::vector<double> strong_ratio(strong_lower > 0.0 ? low_ratio.size() : 0);
    for_grid(radii, angular, [&](cplx z, long idx) {
        const double kn = kernel_trunc_diag(Space::Bergman, n, z);
        double lo, up;
        if (against_full_kernel) {
            const double k = 1.0 / ((1.0 - std::norm(z)) * (1.0 - std::norm(z)));
            lo = kn / (lower_scale_of_k * k);
            up = k / kn;
        } else {
            lo = kn / fixed_lower;
            up = fixed_upper / kn;
        }
        low_ratio[static_cast<size_t>(idx)] = lo;
        up_ratio[static_cast<size_t>(idx)] = up;
        if (!strong_ratio.empty()) strong_ratio[static_cast<size_t>(idx)] = kn / strong_lower;
        (void)idx;
    });

    GridMin low, up;
    const long total = static_cast<long>(low_ratio.size());
    for (long idx = 0; idx < total; ++idx) {
        const double r = radii[static_cast<size_t>(idx / angular)];
        const double th =
            2.0 * M_PI * static_cast<double>(idx % angular) / static_cast<double>(angular);
        const cplx z = std::polar(r, th);
        track(low, low_ratio[static_cast<size_t>(idx)], idx, z);
        track(up, up_ratio[static_cast<size_t>(idx)], idx, z);
    }

    KernelBoundReport rep;
    rep.region = region;
    rep.n = n;
    rep.gamma = gamma;
    rep.worst_lower_ratio = low.ratio;
    rep.worst_upper_ratio = up.ratio;
    rep.lower_witness = low.witness;
    rep.upper_witness = up.witness;
    rep.lower_ok = low.ratio >= 1.0;
    rep.upper_ok = up.ratio >= 1.0;
    if (!strong_ratio.empty()) {
        double worst = std::numeric_limits<double>::infinity();
        for (double v : strong_ratio) worst = std::min(worst, v);
        rep.strong_lower_ok = worst >= 1.0;
    }
    return rep;
}

KernelBoundReport hardy_annulus_report(int n, double gamma, int g) {
    const double edge = 1.0 - gamma / n;
    std::vector<double> radii = linspace(edge, 1.0 / edge, g);
    radii.push_back(1.0); // torus circle
    const int angular = std::max(1, g);
    std::vector<double> low_ratio(radii.size() * static_cast<size_t>(angular));
    std::vector<double> up_ratio(low_ratio.size());
    std::vector<double> strong_ratio(low_ratio.size());
    const double c_lo = (1.0 - std::exp(-2.0 * gamma)) / (2.0 * gamma) * n;
    const double c_strong = (1.0 - std::exp(-4.0 * gamma)) / (2.0 * gamma) * n;
    const double c_up = std::exp(4.0 * gamma) / gamma * n;
    for_grid(radii, angular, [&](cplx z, long idx) {
        const double kn = kernel_trunc_diag(Space::Hardy, n, z);
        low_ratio[static_cast<size_t>(idx)] = kn / c_lo;
        up_ratio[static_cast<size_t>(idx)] = c_up / kn;
        strong_ratio[static_cast<size_t>(idx)] = kn / c_strong;
    });
    GridMin low, up, strong;
    for (long idx = 0; idx < static_cast<long>(low_ratio.size()); ++idx) {
        const double r = radii[static_cast<size_t>(idx / angular)];
        const double th =
            2.0 * M_PI * static_cast<double>(idx % angular) / static_cast<double>(angular);
        const cplx z = std::polar(r, th);
        track(low, low_ratio[static_cast<size_t>(idx)], idx, z);
        track(up, up_ratio[static_cast<size_t>(idx)], idx, z);
        track(strong, strong_ratio[static_cast<size_t>(idx)], idx, z);
    }
    KernelBoundReport rep;
    rep.region = KernelRegion::Annulus;
    rep.n = n;
    rep.gamma = gamma;
    rep.worst_lower_ratio = low.ratio;
    rep.worst_upper_ratio = up.ratio;
    rep.lower_witness = low.witness;
    rep.upper_witness = up.witness;
    rep.lower_ok = low.ratio >= 1.0;
    rep.upper_ok = up.ratio >= 1.0;
    rep.strong_lower_ok = strong.ratio >= 1.0;
    return rep;
}

} // namespace

std::vector<KernelBoundReport> check_kernel_bounds(Space space, int n, double gamma,
                                                   int grid_density) {
    require_degree(n, gamma, "check_kernel_bounds");
    if (grid_density < 1)
        throw std::invalid_argument("check_kernel_bounds: grid_density < 1");
    const int g = grid_density;
    const double edge = 1.0 - gamma / n;

    if (space == Space::Hardy) return {hardy_annulus_report(n, gamma, g)};

    std::vector<KernelBoundReport> out;
    // bulk B_{1-gamma/n}: c_gamma k <= k_n <= k, boundary circle included
    out.push_back(bound_report_from_grid(KernelRegion::Bulk, n, gamma,
                                         linspace(0.0, edge, g), std::max(1, g),
                                         bulk_lower_constant(gamma), 0.0, 0.0, true));
    // annulus C_{gamma/n}: e^{-4 gamma} n^2 / 4 <= k_n <= n^2
    std::vector<double> radii = linspace(edge, 1.0 - (1.0 - edge) / g, g);
    radii.push_back(1.0 - 1e-12); // near-boundary circle
    out.push_back(bound_report_from_grid(
        KernelRegion::Annulus, n, gamma, radii, std::max(1, g), 0.0,
        std::exp(-4.0 * gamma) * n * static_cast<double>(n) / 4.0,
        static_cast<double>(n) * n, false));
    return out;
}

int scan_bulk_bound_degree(double gamma, int grid_density, int n_max) {
    if (!(gamma > 0.0)) throw std::invalid_argument("scan_bulk_bound_degree: gamma <= 0");
    const int n_lo = std::max(4, static_cast<int>(std::floor(2.0 * gamma)) + 1);
    int last_fail = n_lo - 1;
    for (int n = n_lo; n <= n_max; ++n) {
        const double edge = 1.0 - gamma / n;
        auto rep = bound_report_from_grid(
            KernelRegion::Bulk, n, gamma, linspace(0.0, edge, grid_density),
            std::max(1, grid_density), bulk_lower_constant(gamma), 0.0, 0.0, true);
        if (!(rep.lower_ok && rep.upper_ok)) last_fail = n;
    }
    if (last_fail == n_max) return -1;
    return last_fail + 1;
}

NearDiagonalReport check_near_diagonal_bulk(int n, double gamma0, int grid_density) {
    require_degree(n, gamma0, "check_near_diagonal_bulk");
    const int g = std::max(2, grid_density);
    const double edge = 1.0 - gamma0 / n;
    const std::vector<double> radii = linspace(0.0, edge, g);
    const std::vector<double> fractions{0.0, 0.25, 0.5, 0.75, 0.999};
    const int spokes = 8;

    NearDiagonalReport rep;
    rep.n = n;
    rep.gamma0 = gamma0;
    rep.min_scaled = std::numeric_limits<double>::infinity();
    rep.max_scaled = 0.0;
    for (double rw : radii) {
        for (int a = 0; a < g; ++a) {
            const cplx w = std::polar(rw, 2.0 * M_PI * a / g);
            const double span = 0.5 * (1.0 - std::norm(w));
            for (double fr : fractions) {
                for (int s = 0; s < (fr == 0.0 ? 1 : spokes); ++s) {
                    const cplx z = w + std::polar(fr * span, 2.0 * M_PI * s / spokes);
                    const double scaled =
                        std::abs(kernel_normalized(Space::Bergman, n, z, w)) *
                        (1.0 - std::norm(w));
                    if (scaled < rep.min_scaled) {
                        rep.min_scaled = scaled;
                        rep.min_witness_w = w;
                    }
                    if (scaled > rep.max_scaled) {
                        rep.max_scaled = scaled;
                        rep.max_witness_w = w;
                    }
                }
            }
        }
    }
    const double proof_lo = 2.0 / 9.0;
    const double proof_hi = 6.0 / std::sqrt(bulk_lower_constant(gamma0));
    rep.ok = rep.min_scaled >= proof_lo && rep.max_scaled <= proof_hi;
    rep.nominal_ok = rep.min_scaled >= 0.25 && rep.max_scaled <= 2.25;
    return rep;
}

AnnulusCellReport check_near_diagonal_annulus(int n, double gamma, double epsilon,
                                              int grid_density) {
    require_degree(n, gamma, "check_near_diagonal_annulus");
    if (!(epsilon > 0.0))
        throw std::invalid_argument("check_near_diagonal_annulus: epsilon <= 0");
    const int g = std::max(2, grid_density);
    const double edge = 1.0 - gamma / n;
    const std::vector<double> radii = linspace(edge, 1.0 - 1e-9, g);
    const std::vector<double> fractions{0.0, 0.5, 1.0};
    const int spokes = 8;

    double min_scaled = std::numeric_limits<double>::infinity();
    double max_scaled = 0.0;
    for (double rw : radii) {
        for (int a = 0; a < g; ++a) {
            const cplx w = std::polar(rw, 2.0 * M_PI * a / g);
            for (double fr : fractions) {
                for (int s = 0; s < (fr == 0.0 ? 1 : spokes); ++s) {
                    const cplx z = w + std::polar(fr * epsilon / n, 2.0 * M_PI * s / spokes);
                    const double scaled =
                        std::abs(kernel_normalized(Space::Bergman, n, z, w)) / n;
                    min_scaled = std::min(min_scaled, scaled);
                    max_scaled = std::max(max_scaled, scaled);
                }
            }
        }
    }
    AnnulusCellReport rep;
    rep.n = n;
    rep.gamma = gamma;
    rep.epsilon = epsilon;
    rep.k_empirical = std::max(max_scaled, min_scaled > 0.0
                                               ? 1.0 / min_scaled
                                               : std::numeric_limits<double>::infinity());
    return rep;
}

} // namespace mzf
