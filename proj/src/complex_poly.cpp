#include "mzforge/complex_poly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace mzf {

const char* space_name(Space s) {
    return s == Space::Bergman ? "bergman" : "hardy";
}

Polynomial::Polynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(cplx(0.0));
    degree_ = static_cast<int>(coeffs_.size()) - 1;
}

Polynomial::Polynomial(std::vector<cplx> coeffs, int nominal_degree)
    : coeffs_(std::move(coeffs)), degree_(nominal_degree) {
    if (nominal_degree < 0)
        throw std::invalid_argument("Polynomial: nominal degree must be >= 0");
    if (static_cast<int>(coeffs_.size()) > nominal_degree + 1)
        throw std::invalid_argument("Polynomial: coefficients exceed nominal degree");
    coeffs_.resize(static_cast<size_t>(nominal_degree) + 1, cplx(0.0));
}

Polynomial Polynomial::monomial(int k, cplx scale) {
    if (k < 0) throw std::invalid_argument("monomial: negative exponent");
    std::vector<cplx> c(static_cast<size_t>(k) + 1, cplx(0.0));
    c.back() = scale;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::from_roots(cplx leading, std::span<const cplx> rts,
                                  int zero_roots) {
    if (zero_roots < 0) throw std::invalid_argument("from_roots: zero_roots < 0");
    // multiply (z - r_j) factors in ascending |r_j| order to limit cancellation
    std::vector<cplx> sorted(rts.begin(), rts.end());
    std::sort(sorted.begin(), sorted.end(),
              [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });
    std::vector<cplx> c{leading};
    c.reserve(sorted.size() + static_cast<size_t>(zero_roots) + 1);
    for (cplx r : sorted) {
        c.push_back(cplx(0.0));
        for (size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
        c[0] = -r * c[0];
    }
    c.insert(c.begin(), static_cast<size_t>(zero_roots), cplx(0.0));
    return Polynomial(std::move(c));
}

int Polynomial::effective_degree() const {
    for (int k = degree_; k >= 0; --k)
        if (coeffs_[static_cast<size_t>(k)] != cplx(0.0)) return k;
    return 0;
}

bool Polynomial::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](cplx a) { return a == cplx(0.0); });
}

cplx Polynomial::eval(cplx z) const {
    cplx acc = coeffs_.back();
    for (size_t k = coeffs_.size() - 1; k > 0; --k) acc = acc * z + coeffs_[k - 1];
    return acc;
}

cplx Polynomial::eval_derivative(cplx z) const {
    if (coeffs_.size() < 2) return cplx(0.0);
    size_t m = coeffs_.size() - 1;
    cplx acc = static_cast<double>(m) * coeffs_[m];
    for (size_t k = m - 1; k > 0; --k)
        acc = acc * z + static_cast<double>(k) * coeffs_[k];
    return acc;
}

double Polynomial::norm_sq(Space space) const {
    double s = 0.0;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        double t = std::norm(coeffs_[k]);
        s += (space == Space::Bergman) ? t / static_cast<double>(k + 1) : t;
    }
    return s;
}

double Polynomial::disk_mass(double rho) const {
    if (!(rho > 0.0) || rho > 1.0)
        throw std::domain_error("disk_mass: rho must lie in (0, 1]");
    double s = 0.0;
    double r2 = rho * rho;
    double pw = r2; // rho^{2k+2}
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        s += std::norm(coeffs_[k]) * pw / static_cast<double>(k + 1);
        pw *= r2;
    }
    return s;
}

Polynomial Polynomial::dilated(double rho) const {
    if (!(rho > 0.0)) throw std::domain_error("dilated: rho must be positive");
    std::vector<cplx> c(coeffs_);
    double pw = 1.0;
    for (auto& a : c) {
        a *= pw;
        pw *= rho;
    }
    return Polynomial(std::move(c), degree_);
}

Polynomial Polynomial::with_degree(int n) const {
    if (n < effective_degree())
        throw std::invalid_argument("with_degree: below effective degree");
    std::vector<cplx> c(coeffs_.begin(),
                        coeffs_.begin() + std::min<size_t>(coeffs_.size(),
                                                           static_cast<size_t>(n) + 1));
    return Polynomial(std::move(c), n);
}

namespace {

// Parlett-Reinsch balancing, radix 2
void balance(Eigen::MatrixXcd& a) {
    const double radix = 2.0, sqrdx = radix * radix;
    const Eigen::Index d = a.rows();
    bool done = false;
    while (!done) {
        done = true;
        for (Eigen::Index i = 0; i < d; ++i) {
            double c = 0.0, r = 0.0;
            for (Eigen::Index j = 0; j < d; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double g = r / radix, f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                a.row(i) *= 1.0 / f;
                a.col(i) *= f;
            }
        }
    }
}

} // namespace

std::vector<cplx> roots(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("roots: zero polynomial");
    auto c = p.coeffs();
    int m = p.effective_degree();
    int ell = 0; // multiplicity of the root at 0
    while (ell < m && c[static_cast<size_t>(ell)] == cplx(0.0)) ++ell;

    std::vector<cplx> out(static_cast<size_t>(ell), cplx(0.0));
    const int d = m - ell;
    if (d == 0) return out;

    const cplx lead = c[static_cast<size_t>(m)];
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i + 1 < d; ++i) comp(i + 1, i) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -c[static_cast<size_t>(ell + i)] / lead;
    balance(comp);

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("roots: companion eigensolver failed");

    for (int i = 0; i < d; ++i) {
        cplx z = es.eigenvalues()(i);
        for (int step = 0; step < 2; ++step) { // Newton polish
            cplx dp = p.eval_derivative(z);
            if (dp == cplx(0.0)) break;
            cplx z1 = z - p.eval(z) / dp;
            if (!std::isfinite(z1.real()) || !std::isfinite(z1.imag())) break;
            if (std::abs(p.eval(z1)) <= std::abs(p.eval(z))) z = z1;
        }
        out.push_back(z);
    }
    return out;
}

double roots_max_residual(const Polynomial& p, std::span<const cplx> rts) {
    double worst = 0.0;
    for (cplx z : rts) {
        double scale = std::abs(p.eval_derivative(z)) * std::max(1.0, std::abs(z));
        double res = std::abs(p.eval(z)) / (scale + 1e-300);
        worst = std::max(worst, res);
    }
    return worst;
}

Polynomial reflect_outside_roots(const Polynomial& p) {
    if (p.is_zero())
        throw std::invalid_argument("reflect_outside_roots: zero polynomial");
    const int m = p.effective_degree();
    if (m == 0) return p;

    auto rts = roots(p);
    int ell = 0;
    std::vector<cplx> nonzero;
    for (cplx r : rts) {
        if (r == cplx(0.0))
            ++ell;
        else
            nonzero.push_back(r);
    }

    // factors alpha + beta z, sorted by the modulus of their own root
    struct Factor {
        cplx alpha, beta;
        double root_mod;
    };
    std::vector<Factor> factors;
    factors.reserve(nonzero.size());
    for (cplx r : nonzero) {
        if (std::abs(r) > 1.0 + 1e-12)
            factors.push_back({cplx(1.0), -std::conj(r), 1.0 / std::abs(r)});
        else
            factors.push_back({-r, cplx(1.0), std::abs(r)});
    }
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.root_mod < b.root_mod; });

    std::vector<cplx> c{p.coeff(m)};
    c.reserve(static_cast<size_t>(m) + 1);
    for (const Factor& f : factors) {
        c.push_back(cplx(0.0));
        for (size_t k = c.size() - 1; k > 0; --k) c[k] = f.alpha * c[k] + f.beta * c[k - 1];
        c[0] = f.alpha * c[0];
    }
    c.insert(c.begin(), static_cast<size_t>(ell), cplx(0.0));
    return Polynomial(std::move(c), p.degree());
}

Polynomial minimum_phase_shrink(const Polynomial& p, double gamma, int n) {
    if (!(gamma > 0.0)) throw std::invalid_argument("minimum_phase_shrink: gamma <= 0");
    if (n < 1) throw std::invalid_argument("minimum_phase_shrink: n < 1");
    if (p.effective_degree() > n)
        throw std::invalid_argument("minimum_phase_shrink: degree exceeds n");
    Polynomial q = reflect_outside_roots(p);
    return q.dilated(1.0 / (1.0 + gamma / (3.0 * n))).with_degree(n);
}

} // namespace mzf
