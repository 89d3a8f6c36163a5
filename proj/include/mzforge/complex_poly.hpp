// Complex polynomials: evaluation, Bergman/Hardy norms, dilation, disk mass,
// root extraction and the Blaschke root-reflection transforms.
#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace mzf {

using cplx = std::complex<double>;

/// Which Hilbert space norms/kernels refer to.
enum class Space { Bergman, Hardy };

const char* space_name(Space s);

// Polynomial p(z) = sum a_k z^k with an explicit nominal degree n.
// The coefficient vector always has length n+1; trailing zeros are allowed,
// so a polynomial of effective degree m can live in P_n for any n >= m.
class Polynomial {
public:
    Polynomial() : coeffs_(1, cplx(0.0)), degree_(0) {}

    // nominal degree = coeffs.size()-1
    explicit Polynomial(std::vector<cplx> coeffs);

    // pads with zeros up to nominal_degree; throws if coeffs are longer
    Polynomial(std::vector<cplx> coeffs, int nominal_degree);

    static Polynomial monomial(int k, cplx scale = cplx(1.0));

    // c * z^zero_roots * prod_j (z - roots[j])
    static Polynomial from_roots(cplx leading, std::span<const cplx> roots,
                                 int zero_roots = 0);

    int degree() const { return degree_; }

    // largest k with a_k != 0, or 0 for the zero polynomial
    int effective_degree() const;

    bool is_zero() const;

    std::span<const cplx> coeffs() const { return coeffs_; }
    cplx coeff(int k) const {
        return (k >= 0 && k <= degree_) ? coeffs_[static_cast<size_t>(k)] : cplx(0.0);
    }

    // Horner evaluation; overflow propagates as inf
    cplx eval(cplx z) const;
    cplx eval_derivative(cplx z) const;

    // ||p||^2: Bergman sum |a_k|^2/(k+1), Hardy sum |a_k|^2
    double norm_sq(Space space) const;

    // (1/pi) int_{B_rho} |p|^2 = sum |a_k|^2 rho^{2k+2}/(k+1), 0 < rho <= 1
    double disk_mass(double rho) const;

    // p_rho(z) = p(rho z), i.e. coefficients a_k rho^k
    Polynomial dilated(double rho) const;

    // same coefficients re-tagged with nominal degree n >= effective degree
    Polynomial with_degree(int n) const;

private:
    std::vector<cplx> coeffs_;
    int degree_;
};

// All roots with multiplicity, one per unit of effective degree (zero roots
// included explicitly).  Eigenvalues of the balanced companion matrix,
// polished by two Newton steps.  Throws on the zero polynomial.
std::vector<cplx> roots(const Polynomial& p);

// max_j |p(z_j)| / (|p'(z_j)| max(1,|z_j|) + tiny) over a candidate root set
double roots_max_residual(const Polynomial& p, std::span<const cplx> rts);

// Replaces each factor (z - z_j) with |z_j| > 1 + 1e-12 by (1 - conj(z_j) z).
// The result q has all roots in the closed disk, |q| = |p| on |z| = 1, and
// |q(z)| <= min(|p(z)|, |p(1/conj(z))|) for z in D.
Polynomial reflect_outside_roots(const Polynomial& p);

// p1(z) = q(z / (1 + gamma/(3n))) with q = reflect_outside_roots(p).
// Satisfies e^{-2 gamma/3} ||p||^2_{H^2} <= ||p1||^2_{H^2} <= ||p||^2_{H^2}.
Polynomial minimum_phase_shrink(const Polynomial& p, double gamma, int n);

} // namespace mzf
