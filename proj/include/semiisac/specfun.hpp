#ifndef SEMIISAC_SPECFUN_HPP
#define SEMIISAC_SPECFUN_HPP

#include <functional>
#include <stdexcept>
#include <string>

namespace semiisac {
namespace specfun {

/// Tolerances for the adaptive quadrature routines.
struct QuadratureSettings {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 200;
};

/// Thrown when adaptive refinement runs out of subdivisions before the
/// requested tolerance is met. Carries the best estimate so far and the
/// accompanying error bound.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& what, double best_estimate, double error_bound)
        : std::runtime_error(what), best_estimate_(best_estimate), error_bound_(error_bound) {}
    double best_estimate() const { return best_estimate_; }
    double error_bound() const { return error_bound_; }

  private:
    double best_estimate_;
    double error_bound_;
};

/// log Gamma(a) for a > 0.
double ln_gamma(double a);

/// Regularized lower incomplete gamma P(a,x) = gamma(a,x)/Gamma(a),
/// a > 0, x >= 0. Series for x < a+1, continued fraction otherwise.
double reg_lower_gamma(double a, double x);

/// Regularized upper incomplete gamma Q(a,x) = 1 - P(a,x), a > 0, x >= 0.
double reg_upper_gamma(double a, double x);

/// Unnormalized upper incomplete gamma Gamma(a,x). Nonpositive a is
/// supported for x > 0 via downward recurrence (integer a <= 0 reduces to
/// the exponential-integral relation Gamma(-k,x) = E_{k+1}(x)/x^k).
double upper_gamma(double a, double x);

/// Generalized exponential integral E_n(x) = \int_1^inf exp(-x t) t^{-n} dt,
/// n >= 0, x > 0.
double exp_integral_en(int n, double x);

/// exp(x) * E_n(x); stays finite for large x where exp(x) alone overflows.
double exp_integral_en_scaled(int n, double x);

/// Modified Bessel function of the second kind, order zero, x > 0.
double bessel_k0(double x);

/// Digamma function for a > 0.
double digamma(double a);

/// Standard Gaussian tail probability Q(x) = P{N(0,1) > x}.
double gaussian_q(double x);

/// Quantile of the standard normal distribution, 0 < p < 1.
double gaussian_quantile(double p);

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod integration of f over (0, inf) via the
/// compactifying substitution z = t/(1-t).
double integrate_semi_infinite(const Integrand& f, const QuadratureSettings& settings = {});

/// Adaptive Gauss-Kronrod integration of f over the finite interval [a, b].
double integrate_finite(const Integrand& f, double a, double b,
                        const QuadratureSettings& settings = {});

/// CDF of the product of two independent unit-mean Gamma(m, m) power gains.
/// Evaluated from the defining conditional-probability integral, not a
/// general Meijer-G engine.
double meijer_cdf_product_gamma(int m, double x, const QuadratureSettings& settings = {});

/// Survival function 1 - CDF of the same product, computed directly so the
/// deep tail keeps relative accuracy.
double product_gamma_survival(int m, double x, const QuadratureSettings& settings = {});

/// The Rayleigh-case kernel of the ergodic estimation-rate integral:
/// \int_0^inf exp(c/x) E_1(c/x) exp(-x) dx, c > 0. Decays to 0 as c grows.
double meijer_rayleigh_reir_kernel(double c, const QuadratureSettings& settings = {});

} // namespace specfun
} // namespace semiisac

#endif
