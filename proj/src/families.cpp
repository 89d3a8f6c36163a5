#include "mzforge/families.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace mzf {

const char* radii_mode_name(RadiiMode m) {
    switch (m) {
        case RadiiMode::ConstantInner: return "constant-inner";
        case RadiiMode::UniformRandom: return "uniform";
        case RadiiMode::TwoSided: return "two-sided";
        case RadiiMode::Explicit: return "explicit";
    }
    return "?";
}

PointFamily torus_equispaced(int n, double oversample, std::uint64_t seed,
                             double jitter) {
    if (n < 0) throw std::invalid_argument("torus_equispaced: n < 0");
    if (!(oversample >= 1.0))
        throw std::invalid_argument("torus_equispaced: oversample must be >= 1");
    if (!(jitter >= 0.0) || jitter >= M_PI)
        throw std::invalid_argument("torus_equispaced: jitter must lie in [0, pi)");
    const long l = static_cast<long>(std::ceil(oversample * (n + 1)));
    PointFamily fam;
    fam.n = n;
    fam.gamma = 0.0;
    fam.points.reserve(static_cast<size_t>(l));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-jitter / l, jitter / l);
    for (long k = 0; k < l; ++k) {
        double th = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(l);
        if (jitter > 0.0) th += u(rng);
        fam.points.push_back(std::polar(1.0, th));
    }
    return fam;
}

PointFamily lift_to_annulus(const PointFamily& torus, double gamma,
                            const RadiiPolicy& policy) {
    const int n = torus.n;
    if (!(gamma > 0.0)) throw std::invalid_argument("lift_to_annulus: gamma <= 0");
    if (!(static_cast<double>(n) > 2.0 * gamma))
        throw std::invalid_argument("lift_to_annulus: requires n > 2*gamma");
    for (cplx p : torus.points)
        if (std::abs(std::abs(p) - 1.0) > 1e-12)
            throw std::invalid_argument("lift_to_annulus: input must be unit modulus");

    const double inner = 1.0 - gamma / n;
    const double outer = 1.0 / inner;
    std::vector<double> radii;
    radii.reserve(torus.size());
    switch (policy.mode) {
        case RadiiMode::ConstantInner:
            radii.assign(torus.size(), inner);
            break;
        case RadiiMode::UniformRandom: {
            std::mt19937_64 rng(policy.seed);
            std::uniform_real_distribution<double> u(inner, 1.0);
            for (size_t i = 0; i < torus.size(); ++i) radii.push_back(u(rng));
            break;
        }
        case RadiiMode::TwoSided: {
            std::mt19937_64 rng(policy.seed);
            std::uniform_real_distribution<double> u(inner, outer);
            for (size_t i = 0; i < torus.size(); ++i) radii.push_back(u(rng));
            break;
        }
        case RadiiMode::Explicit:
            if (policy.radii.size() != torus.size())
                throw std::invalid_argument("lift_to_annulus: explicit radii count mismatch");
            for (double r : policy.radii)
                if (!(r >= inner) || !(r <= outer + 1e-12))
                    throw std::invalid_argument(
                        "lift_to_annulus: explicit radius outside [1-gamma/n, (1-gamma/n)^-1]");
            radii = policy.radii;
            break;
    }

    PointFamily out;
    out.n = n;
    out.gamma = gamma;
    out.multiplicities = torus.multiplicities;
    out.points.reserve(torus.size());
    for (size_t i = 0; i < torus.size(); ++i) {
        const cplx unit = torus.points[i] / std::abs(torus.points[i]);
        out.points.push_back(radii[i] * unit);
    }
    return out;
}

PointFamily hyperbolic_lattice(double s, double angular_factor, double r_max) {
    if (!(s > 0.0) || !(s < 1.0))
        throw std::invalid_argument("hyperbolic_lattice: s must lie in (0,1)");
    if (!(angular_factor > 0.0))
        throw std::invalid_argument("hyperbolic_lattice: angular_factor <= 0");
    if (!(r_max >= 0.0) || !(r_max < 1.0))
        throw std::invalid_argument("hyperbolic_lattice: r_max must lie in [0,1)");

    PointFamily fam;
    constexpr long kCap = 2'000'000;
    double width = 1.0; // s^j
    for (int j = 0; j < 10'000; ++j) {
        const double r = 1.0 - width;
        if (r > r_max) break;
        if (r == 0.0) {
            // degenerate innermost ring: a single point at the origin
            fam.points.push_back(cplx(0.0));
        } else {
            const long m = static_cast<long>(std::ceil(angular_factor * 2.0 * M_PI / width));
            const double offset = (j % 2) ? 0.5 : 0.0;
            for (long k = 0; k < m; ++k)
                fam.points.push_back(std::polar(r, 2.0 * M_PI * (k + offset) / m));
        }
        if (static_cast<long>(fam.points.size()) > kCap)
            throw std::invalid_argument("hyperbolic_lattice: point budget exceeded");
        width *= s;
    }
    return fam;
}

PointFamily bergman_truncate(const PointFamily& fam, int n, double gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("bergman_truncate: gamma <= 0");
    if (!(static_cast<double>(n) > 2.0 * gamma))
        throw std::invalid_argument("bergman_truncate: requires n > 2*gamma");
    const double edge = 1.0 - gamma / n;
    PointFamily out;
    out.n = n;
    out.gamma = gamma;
    for (size_t i = 0; i < fam.size(); ++i)
        if (std::abs(fam.points[i]) < edge) {
            out.points.push_back(fam.points[i]);
            if (!fam.multiplicities.empty())
                out.multiplicities.push_back(fam.multiplicities[i]);
        }
    return out;
}

PointFamily example27(int n, double gamma, double alpha) {
    if (n < 2) throw std::invalid_argument("example27: n < 2");
    if (!(gamma > 0.0)) throw std::invalid_argument("example27: gamma <= 0");
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("example27: alpha must lie in [0,1)");
    PointFamily fam;
    fam.n = n;
    fam.gamma = gamma;
    const double rho = 1.0 - gamma / n;
    for (int k = 0; k < n; ++k)
        fam.points.push_back(std::polar(rho, 2.0 * M_PI * k / n));
    fam.points.push_back(alpha *
                         std::polar(1.0, 2.0 * M_PI / (static_cast<double>(n) * n)));
    return fam;
}

ContractionStep contraction_step(const PointFamily& fam, const Polynomial& p,
                                 double gamma, int n) {
    if (!(gamma > 0.0)) throw std::invalid_argument("contraction_step: gamma <= 0");
    if (!(static_cast<double>(n) > 2.0 * gamma))
        throw std::invalid_argument("contraction_step: requires n > 2*gamma");
    if (p.is_zero()) throw std::invalid_argument("contraction_step: zero polynomial");
    if (p.effective_degree() > n)
        throw std::invalid_argument("contraction_step: polynomial degree exceeds n");
    const double inner = 1.0 - gamma / n;
    const double outer = 1.0 / inner;
    for (cplx lam : fam.points) {
        const double r = std::abs(lam);
        if (r < inner - 1e-9 || r > outer + 1e-9)
            throw std::invalid_argument("contraction_step: point outside A_{gamma/n}");
    }
    if (!project_torus(fam).injective)
        throw std::invalid_argument("contraction_step: torus projection not injective");

    const double scale = 1.0 + gamma / (3.0 * n);
    ContractionStep out;
    out.family.n = n;
    out.family.gamma = 0.75 * gamma;
    out.family.multiplicities = fam.multiplicities;
    out.family.points.reserve(fam.size());
    for (cplx lam : fam.points) {
        if (std::abs(lam) <= 1.0)
            out.family.points.push_back(scale * lam);
        else
            out.family.points.push_back(scale / std::conj(lam));
    }
    out.poly = minimum_phase_shrink(p, gamma, n);
    return out;
}

namespace {

double sampling_sum(const PointFamily& fam, const Polynomial& p, int n) {
    double s = 0.0;
    for (size_t i = 0; i < fam.size(); ++i)
        s += fam.multiplicity(i) * std::norm(p.eval(fam.points[i]));
    return s / n;
}

double max_radial_dev(const PointFamily& fam) {
    double d = 0.0;
    for (cplx p : fam.points) d = std::max(d, std::abs(std::abs(p) - 1.0));
    return d;
}

} // namespace

ContractionTrace contraction_iterate(const PointFamily& fam, const Polynomial& p,
                                     double gamma, int n, int l_max) {
    if (l_max < 0) throw std::invalid_argument("contraction_iterate: l_max < 0");
    constexpr double kRadialStop = 1e-9;

    ContractionTrace trace;
    trace.levels.push_back({fam, p, gamma, p.norm_sq(Space::Hardy),
                            sampling_sum(fam, p, n), max_radial_dev(fam)});
    for (int l = 0; l < l_max; ++l) {
        const ContractionLevel& cur = trace.levels.back();
        if (cur.max_radial_dev < kRadialStop) {
            trace.converged = true;
            break;
        }
        ContractionStep step = contraction_step(cur.family, cur.poly, cur.gamma, n);
        trace.levels.push_back({step.family, step.poly, step.family.gamma,
                                step.poly.norm_sq(Space::Hardy),
                                sampling_sum(step.family, step.poly, n),
                                max_radial_dev(step.family)});
    }
    if (!trace.converged && trace.levels.back().max_radial_dev < kRadialStop)
        trace.converged = true;
    trace.final_ratio = trace.levels.back().norm_sq / trace.levels.front().norm_sq;
    return trace;
}

} // namespace mzf
