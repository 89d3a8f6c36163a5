// Pseudohyperbolic metric, disk region classification, separation and
// coloring decompositions, counting functionals, torus projection and
// truncated Hausdorff distance.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mzforge/complex_poly.hpp"

namespace mzf {

// A finite multiset of sample points tagged with the degree n it targets
// and the annulus parameter gamma (gamma <= 0 means "not annulus-tagged",
// e.g. plain torus families).
struct PointFamily {
    std::vector<cplx> points;
    int n = 0;
    double gamma = 0.0;
    std::vector<int> multiplicities; // empty = all 1

    size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    int multiplicity(size_t i) const {
        return multiplicities.empty() ? 1 : multiplicities[i];
    }
    void validate() const; // finiteness, multiplicity >= 1, size match
};

// d(z,w) = |(z-w)/(1 - z conj(w))|.  Requires z, w in the open disk.
double pseudo_dist(cplx z, cplx w);

// Same formula without the domain check (used for two-sided Hardy families);
// returns +inf when z conj(w) == 1.
double pseudo_dist_unchecked(cplx z, cplx w);

// Euclidean comparison radii for the hyperbolic disk Delta(w, rho):
//   B(w, inner) subset Delta(w, rho) subset B(w, outer),
// the outer inclusion valid for rho < 1/2.
double euclidean_inner_radius(cplx w, double rho);
double euclidean_outer_radius(cplx w, double rho);
bool in_euclidean_inner_ball(cplx z, cplx w, double rho);
bool in_euclidean_outer_ball(cplx z, cplx w, double rho);

enum class DiskRegion { Bulk, BoundaryAnnulus, TwoSidedAnnulus, Exterior, Invalid };

// Bulk: |z| < 1-gamma/n.  BoundaryAnnulus: 1-gamma/n <= |z| < 1.
// TwoSidedAnnulus: 1 <= |z| <= (1-gamma/n)^{-1}.  Exterior beyond.
// Requires n > gamma > 0.
DiskRegion classify_region(cplx z, int n, double gamma);

// true iff 1-gamma/n <= |z| <= (1-gamma/n)^{-1}
bool in_two_sided_annulus(cplx z, int n, double gamma);

// min over distinct pairs of pseudo_dist_unchecked; +inf if fewer than 2 points
double min_pairwise_distance(const PointFamily& fam);
double min_pairwise_distance_reference(const PointFamily& fam);

struct SeparationResult {
    int k = 0;                 // number of color classes
    std::vector<int> coloring; // per-point class label in [0, k)
};

// Greedy coloring (decreasing degree order) of the proximity graph with
// edges d(.,.) < delta.  Each class is delta-separated; k == 1 iff the
// family itself is delta-separated.
SeparationResult separation_decompose(const PointFamily& fam, double delta);
SeparationResult separation_decompose_reference(const PointFamily& fam, double delta);

struct GeometryReport {
    int k = 0;               // coloring count at delta_ref
    double delta = 0.0;      // achieved separation (0 if < 2 points)
    int bulk_count_max = 0;  // max #(fam cap B(w, 0.5(1-|w|))) over bulk probes
    int annulus_count = 0;   // #(fam cap C_{gamma/n})
    int cell_count_max = 0;  // max #(fam cap B(w, epsilon/n)) over annulus probes
    double epsilon = 1.0;
    double delta_ref = 0.1;
    long probe_count = 0;
};

// Evaluates the counting functionals at probe centers (the sample points
// plus a hyperbolically quasi-uniform grid; `probes` scales the grid's
// angular density).  The maxima are certified lower bounds on the true
// suprema over all centers.
GeometryReport count_report(const PointFamily& fam, int probes,
                            double epsilon = 1.0, double delta_ref = 0.1);
GeometryReport count_report_reference(const PointFamily& fam, int probes,
                                      double epsilon = 1.0, double delta_ref = 0.1);

struct TorusProjection {
    PointFamily family;
    bool injective = true;
};

// lambda -> lambda/|lambda|.  Distinct points projecting within angular
// tolerance 1e-12 flag non-injectivity.  Rejects points at the origin.
TorusProjection project_torus(const PointFamily& fam);

enum class LimitMetric { Euclidean, Pseudohyperbolic };

// Hausdorff distance between (E cap closed B(0,r)) U dB(0,r) and the same
// for F.  Multiplicities are ignored (set semantics).  Requires r < 1 for
// the pseudohyperbolic metric.
double hausdorff_trunc(const PointFamily& e, const PointFamily& f, double r,
                       LimitMetric metric = LimitMetric::Euclidean);

// shared probe-grid builder (also used by the Carleson checker)
std::vector<cplx> probe_grid(const PointFamily& fam, int probes);

// Exact ball counting/summing with an angular-sector index; results match
// the brute-force reference bit for bit.
class BallIndex {
public:
    explicit BallIndex(const PointFamily& fam);
    // number of points (with multiplicity) with |p - center| < radius
    int count(cplx center, double radius) const;
    // sum of weights[i]*mult[i] over points with |p - center| < radius
    double sum(cplx center, double radius, const std::vector<double>& weights) const;

private:
    template <class F> void visit(cplx center, double radius, F&& f) const;
    const PointFamily& fam_;
    int sectors_;
    std::vector<std::vector<int>> by_sector_; // radius-sorted point ids
};

} // namespace mzf
