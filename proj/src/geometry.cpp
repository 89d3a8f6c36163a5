#include "mzforge/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mzf {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
} // namespace

void PointFamily::validate() const {
    for (cplx p : points)
        if (!finite(p)) throw std::invalid_argument("PointFamily: non-finite point");
    if (!multiplicities.empty()) {
        if (multiplicities.size() != points.size())
            throw std::invalid_argument("PointFamily: multiplicity count mismatch");
        for (int m : multiplicities)
            if (m < 1) throw std::invalid_argument("PointFamily: multiplicity < 1");
    }
}

double pseudo_dist(cplx z, cplx w) {
    if (!(std::abs(z) < 1.0) || !(std::abs(w) < 1.0))
        throw std::domain_error("pseudo_dist: points must lie in the open disk");
    return pseudo_dist_unchecked(z, w);
}

double pseudo_dist_unchecked(cplx z, cplx w) {
    cplx den = cplx(1.0) - z * std::conj(w);
    if (den == cplx(0.0)) return z == w ? 0.0 : kInf;
    return std::abs((z - w) / den);
}

double euclidean_inner_radius(cplx w, double rho) {
    return rho / (1.0 + rho) * (1.0 - std::norm(w));
}

double euclidean_outer_radius(cplx w, double rho) {
    return rho / (1.0 - rho) * (1.0 - std::norm(w));
}

bool in_euclidean_inner_ball(cplx z, cplx w, double rho) {
    return std::abs(z - w) < euclidean_inner_radius(w, rho);
}

bool in_euclidean_outer_ball(cplx z, cplx w, double rho) {
    return std::abs(z - w) < euclidean_outer_radius(w, rho);
}

DiskRegion classify_region(cplx z, int n, double gamma) {
    if (!(gamma > 0.0) || !(static_cast<double>(n) > gamma))
        throw std::invalid_argument("classify_region: requires n > gamma > 0");
    if (!finite(z)) return DiskRegion::Invalid;
    const double edge = 1.0 - gamma / n;
    const double r = std::abs(z);
    if (r < edge) return DiskRegion::Bulk;
    if (r < 1.0) return DiskRegion::BoundaryAnnulus;
    if (r <= 1.0 / edge) return DiskRegion::TwoSidedAnnulus;
    return DiskRegion::Exterior;
}

bool in_two_sided_annulus(cplx z, int n, double gamma) {
    DiskRegion reg = classify_region(z, n, gamma);
    return reg == DiskRegion::BoundaryAnnulus || reg == DiskRegion::TwoSidedAnnulus;
}

// ---------------------------------------------------------------- BallIndex

BallIndex::BallIndex(const PointFamily& fam) : fam_(fam) {
    const int n = static_cast<int>(fam.size());
    sectors_ = std::clamp(n / 8, 8, 4096);
    by_sector_.resize(static_cast<size_t>(sectors_));
    for (int i = 0; i < n; ++i) {
        double th = std::arg(fam.points[static_cast<size_t>(i)]);
        if (th < 0.0) th += 2.0 * M_PI;
        int s = std::min(sectors_ - 1,
                         static_cast<int>(th / (2.0 * M_PI) * sectors_));
        by_sector_[static_cast<size_t>(s)].push_back(i);
    }
    for (auto& sec : by_sector_)
        std::sort(sec.begin(), sec.end(), [&](int a, int b) {
            double ra = std::abs(fam.points[static_cast<size_t>(a)]);
            double rb = std::abs(fam.points[static_cast<size_t>(b)]);
            return ra < rb || (ra == rb && a < b);
        });
}

template <class F>
void BallIndex::visit(cplx center, double radius, F&& f) const {
    if (!(radius > 0.0)) return;
    const double rw = std::abs(center);
    int s_lo = 0, s_hi = sectors_ - 1;
    bool all = true;
    if (rw >= 2.0 * radius) {
        // hits satisfy |dtheta| <= asin(radius / (rw - radius))
        const double half = std::asin(std::min(1.0, radius / (rw - radius)));
        double thc = std::arg(center);
        if (thc < 0.0) thc += 2.0 * M_PI;
        const double width = 2.0 * M_PI / sectors_;
        s_lo = static_cast<int>(std::floor((thc - half) / width));
        s_hi = static_cast<int>(std::floor((thc + half) / width));
        all = (s_hi - s_lo + 1) >= sectors_;
    }
    const double r_lo = rw - radius, r_hi = rw + radius;
    auto scan_sector = [&](int s) {
        const auto& sec = by_sector_[static_cast<size_t>(s)];
        auto lo = std::lower_bound(sec.begin(), sec.end(), r_lo, [&](int i, double v) {
            return std::abs(fam_.points[static_cast<size_t>(i)]) < v;
        });
        for (auto it = lo; it != sec.end(); ++it) {
            const cplx p = fam_.points[static_cast<size_t>(*it)];
            if (std::abs(p) > r_hi) break;
            if (std::abs(p - center) < radius) f(*it);
        }
    };
    if (all) {
        for (int s = 0; s < sectors_; ++s) scan_sector(s);
    } else {
        for (int s = s_lo; s <= s_hi; ++s)
            scan_sector(((s % sectors_) + sectors_) % sectors_);
    }
}

int BallIndex::count(cplx center, double radius) const {
    int c = 0;
    visit(center, radius, [&](int i) { c += fam_.multiplicity(static_cast<size_t>(i)); });
    return c;
}

double BallIndex::sum(cplx center, double radius,
                      const std::vector<double>& weights) const {
    double s = 0.0;
    visit(center, radius, [&](int i) {
        s += weights[static_cast<size_t>(i)] * fam_.multiplicity(static_cast<size_t>(i));
    });
    return s;
}

// ---------------------------------------------------- pairwise separation

double min_pairwise_distance_reference(const PointFamily& fam) {
    const size_t n = fam.size();
    double best = kInf;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            best = std::min(best, pseudo_dist_unchecked(fam.points[i], fam.points[j]));
    return best;
}

double min_pairwise_distance(const PointFamily& fam) {
    const long n = static_cast<long>(fam.size());
    if (n < 2) return kInf;
    if (n <= 4096) {
        double best = kInf;
#pragma omp parallel for schedule(static) reduction(min : best)
        for (long i = 0; i < n; ++i)
            for (long j = i + 1; j < n; ++j)
                best = std::min(best, pseudo_dist_unchecked(fam.points[static_cast<size_t>(i)],
                                                            fam.points[static_cast<size_t>(j)]));
        return best;
    }
    // indexed prefilter: all pairs with d < cap lie within the Euclidean
    // radius cap |1-|w|^2| / (1 - cap |w|) of each other
    const double cap = 0.3;
    BallIndex index(fam);
    double best = kInf;
    int usable = 1;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best) reduction(min : usable)
    for (long i = 0; i < n; ++i) {
        const cplx w = fam.points[static_cast<size_t>(i)];
        const double denom = 1.0 - cap * std::abs(w);
        if (denom <= 0.0) {
            usable = 0;
            continue;
        }
        const double r = cap * std::abs(1.0 - std::norm(w)) / denom + 1e-15;
        index.visit(w, r, [&](int j) {
            if (j != i)
                best = std::min(best,
                                pseudo_dist_unchecked(w, fam.points[static_cast<size_t>(j)]));
        });
    }
    if (usable && best < cap) return best;
    return min_pairwise_distance_reference(fam);
}

namespace {

std::vector<std::vector<int>> proximity_adjacency(const PointFamily& fam, double delta) {
    const long n = static_cast<long>(fam.size());
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    const bool indexed = n > 4096 && delta < 0.9;
    std::optional<BallIndex> storage;
    if (indexed) storage.emplace(fam);
    BallIndex* index = storage ? &*storage : nullptr;
#pragma omp parallel for schedule(dynamic, 32)
    for (long i = 0; i < n; ++i) {
        const cplx zi = fam.points[static_cast<size_t>(i)];
        auto& row = adj[static_cast<size_t>(i)];
        if (index) {
            const double denom = 1.0 - delta * std::abs(zi);
            double r;
            if (denom > 0.0)
                r = delta * std::abs(1.0 - std::norm(zi)) / denom + 1e-15;
            else {
                double rmax = 0.0;
                for (cplx p : fam.points) rmax = std::max(rmax, std::abs(p));
                r = delta * (1.0 + rmax * rmax) + 1e-15;
            }
            index->visit(zi, r, [&](int j) {
                if (j != i &&
                    pseudo_dist_unchecked(zi, fam.points[static_cast<size_t>(j)]) < delta)
                    row.push_back(j);
            });
            std::sort(row.begin(), row.end());
        } else {
            for (long j = 0; j < n; ++j)
                if (j != i &&
                    pseudo_dist_unchecked(zi, fam.points[static_cast<size_t>(j)]) < delta)
                    row.push_back(static_cast<int>(j));
        }
    }
    return adj;
}

SeparationResult color_greedy(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    SeparationResult res;
    res.coloring.assign(static_cast<size_t>(n), -1);
    if (n == 0) return res;
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        size_t da = adj[static_cast<size_t>(a)].size();
        size_t db = adj[static_cast<size_t>(b)].size();
        return da > db || (da == db && a < b);
    });
    std::vector<char> used;
    for (int v : order) {
        used.assign(static_cast<size_t>(res.k) + 1, 0);
        for (int u : adj[static_cast<size_t>(v)]) {
            int c = res.coloring[static_cast<size_t>(u)];
            if (c >= 0 && c < static_cast<int>(used.size())) used[static_cast<size_t>(c)] = 1;
        }
        int c = 0;
        while (used[static_cast<size_t>(c)]) ++c;
        res.coloring[static_cast<size_t>(v)] = c;
        res.k = std::max(res.k, c + 1);
    }
    return res;
}

} // namespace

SeparationResult separation_decompose(const PointFamily& fam, double delta) {
    if (!(delta > 0.0) || !(delta < 1.0))
        throw std::invalid_argument("separation_decompose: delta must lie in (0,1)");
    return color_greedy(proximity_adjacency(fam, delta));
}

SeparationResult separation_decompose_reference(const PointFamily& fam, double delta) {
    if (!(delta > 0.0) || !(delta < 1.0))
        throw std::invalid_argument("separation_decompose: delta must lie in (0,1)");
    const size_t n = fam.size();
    std::vector<std::vector<int>> adj(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && pseudo_dist_unchecked(fam.points[i], fam.points[j]) < delta)
                adj[i].push_back(static_cast<int>(j));
    return color_greedy(adj);
}

// ----------------------------------------------------------- probe grids

std::vector<cplx> probe_grid(const PointFamily& fam, int probes) {
    if (probes < 1) throw std::invalid_argument("probe_grid: probes < 1");
    std::vector<cplx> out(fam.points.begin(), fam.points.end());
    const bool tagged = fam.gamma > 0.0 && static_cast<double>(fam.n) > fam.gamma;
    const double edge = tagged ? 1.0 - fam.gamma / fam.n : 1.0;
    double max_mod = 0.0;
    for (cplx p : fam.points) max_mod = std::max(max_mod, std::abs(p));

    constexpr long kCap = 2'000'000;
    // hyperbolically quasi-uniform bulk rings
    double width = 1.0;
    for (int j = 0; j < 200; ++j) {
        const double r = 1.0 - width;
        if (r >= edge) break;
        const long m = std::min<long>(100'000,
                                      static_cast<long>(std::ceil(probes * 2.0 * M_PI / width)));
        const long base = (j % 2) ? 1 : 0;
        for (long k = 0; k < m && static_cast<long>(out.size()) < kCap; ++k)
            out.push_back(std::polar(r, 2.0 * M_PI * (k + 0.5 * base) / m));
        width *= 0.75;
    }
    if (tagged) {
        // annulus rings: cells of size ~1/n need angular resolution ~1/n
        std::vector<double> radii{edge, 1.0 - 0.75 * fam.gamma / fam.n,
                                  1.0 - 0.5 * fam.gamma / fam.n,
                                  1.0 - 0.25 * fam.gamma / fam.n};
        if (max_mod >= 1.0) {
            radii.push_back(1.0);
            radii.push_back(0.5 * (1.0 + 1.0 / edge));
            radii.push_back(1.0 / edge);
        }
        const long m = std::min<long>(
            200'000, static_cast<long>(std::ceil(
                         probes * 4.0 * M_PI * fam.n / std::max(fam.gamma, 0.25))));
        for (double r : radii)
            for (long k = 0; k < m && static_cast<long>(out.size()) < kCap; ++k)
                out.push_back(std::polar(r, 2.0 * M_PI * k / m));
    }
    return out;
}

namespace {

GeometryReport count_report_impl(const PointFamily& fam, int probes, double epsilon,
                                 double delta_ref, bool reference) {
    if (probes < 1) throw std::invalid_argument("count_report: probes < 1");
    fam.validate();
    GeometryReport rep;
    rep.epsilon = epsilon;
    rep.delta_ref = delta_ref;
    rep.delta = fam.size() < 2 ? 0.0 : min_pairwise_distance(fam);
    if (!std::isfinite(rep.delta)) rep.delta = 0.0;
    rep.k = reference ? separation_decompose_reference(fam, delta_ref).k
                      : separation_decompose(fam, delta_ref).k;

    const bool tagged = fam.gamma > 0.0 && static_cast<double>(fam.n) > fam.gamma;
    const double edge = tagged ? 1.0 - fam.gamma / fam.n : 1.0;
    const double outer = tagged ? 1.0 / edge
                                : std::numeric_limits<double>::infinity();
    const double cell_lo = tagged ? edge : 1.0 - 1.0 / std::max(fam.n, 1);
    const double cell_r = epsilon / std::max(fam.n, 1);

    if (tagged)
        for (size_t i = 0; i < fam.size(); ++i) {
            const double r = std::abs(fam.points[i]);
            if (r >= edge && r < 1.0) rep.annulus_count += fam.multiplicity(i);
        }

    const std::vector<cplx> centers = probe_grid(fam, probes);
    rep.probe_count = static_cast<long>(centers.size());

    int bulk_max = 0, cell_max = 0;
    if (reference) {
        auto count_ball = [&](cplx c, double r) {
            int acc = 0;
            for (size_t i = 0; i < fam.size(); ++i)
                if (std::abs(fam.points[i] - c) < r) acc += fam.multiplicity(i);
            return acc;
        };
        for (cplx w : centers) {
            const double rw = std::abs(w);
            if (rw < edge)
                bulk_max = std::max(bulk_max, count_ball(w, 0.5 * (1.0 - rw)));
            if (rw >= cell_lo && rw <= outer)
                cell_max = std::max(cell_max, count_ball(w, cell_r));
        }
    } else {
        BallIndex index(fam);
        const long m = static_cast<long>(centers.size());
#pragma omp parallel for schedule(dynamic, 256) reduction(max : bulk_max, cell_max)
        for (long ci = 0; ci < m; ++ci) {
            const cplx w = centers[static_cast<size_t>(ci)];
            const double rw = std::abs(w);
            if (rw < edge)
                bulk_max = std::max(bulk_max, index.count(w, 0.5 * (1.0 - rw)));
            if (rw >= cell_lo && rw <= outer)
                cell_max = std::max(cell_max, index.count(w, cell_r));
        }
    }
    rep.bulk_count_max = bulk_max;
    rep.cell_count_max = cell_max;
    return rep;
}

} // namespace

GeometryReport count_report(const PointFamily& fam, int probes, double epsilon,
                            double delta_ref) {
    return count_report_impl(fam, probes, epsilon, delta_ref, false);
}

GeometryReport count_report_reference(const PointFamily& fam, int probes, double epsilon,
                                      double delta_ref) {
    return count_report_impl(fam, probes, epsilon, delta_ref, true);
}

// ------------------------------------------------------- torus projection

TorusProjection project_torus(const PointFamily& fam) {
    TorusProjection out;
    out.family.n = fam.n;
    out.family.gamma = fam.gamma;
    out.family.multiplicities = fam.multiplicities;
    out.family.points.reserve(fam.size());
    std::vector<double> angles;
    angles.reserve(fam.size());
    for (cplx p : fam.points) {
        const double r = std::abs(p);
        if (r == 0.0) throw std::domain_error("project_torus: point at the origin");
        out.family.points.push_back(p / r);
        double th = std::arg(p);
        if (th < 0.0) th += 2.0 * M_PI;
        angles.push_back(th);
    }
    std::sort(angles.begin(), angles.end());
    constexpr double tol = 1e-12;
    for (size_t i = 1; i < angles.size(); ++i)
        if (angles[i] - angles[i - 1] < tol) out.injective = false;
    if (angles.size() >= 2 &&
        (2.0 * M_PI - angles.back()) + angles.front() < tol)
        out.injective = false;
    return out;
}

// ------------------------------------------------------------- Hausdorff

namespace {

double metric_dist(cplx a, cplx b, LimitMetric m) {
    return m == LimitMetric::Euclidean ? std::abs(a - b) : pseudo_dist(a, b);
}

// distance from a (|a| <= r) to the circle |z| = r; the aligned point
// minimizes both metrics
double circle_dist(cplx a, double r, LimitMetric m) {
    const double ra = std::abs(a);
    if (m == LimitMetric::Euclidean) return std::abs(r - ra);
    return std::abs((ra - r) / (1.0 - ra * r));
}

} // namespace

double hausdorff_trunc(const PointFamily& e, const PointFamily& f, double r,
                       LimitMetric metric) {
    if (!(r > 0.0) || !(r < 1.0))
        throw std::invalid_argument("hausdorff_trunc: requires r in (0,1)");
    auto truncate = [&](const PointFamily& fam) {
        std::vector<cplx> pts;
        for (cplx p : fam.points)
            if (std::abs(p) <= r) pts.push_back(p);
        return pts;
    };
    const std::vector<cplx> ep = truncate(e), fp = truncate(f);
    // both truncations contain the full circle dB(0,r), so only the finite
    // points contribute to the supremums
    auto one_sided = [&](const std::vector<cplx>& from, const std::vector<cplx>& to) {
        double worst = 0.0;
        for (cplx a : from) {
            double best = circle_dist(a, r, metric);
            for (cplx b : to) best = std::min(best, metric_dist(a, b, metric));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(one_sided(ep, fp), one_sided(fp, ep));
}

} // namespace mzf
