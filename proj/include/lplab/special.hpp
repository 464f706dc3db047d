#ifndef LPLAB_SPECIAL_HPP
#define LPLAB_SPECIAL_HPP

namespace lplab {

/// Gamma function on (0, inf), Lanczos approximation (g = 7, 9 terms).
/// Accurate to at least 13 significant digits on the arguments used here.
double gamma_fn(double x);

/// Volume of the s-dimensional Euclidean unit ball,
/// kappa_s = pi^{s/2} / Gamma(s/2 + 1). Requires s > 0.
double kappa(double s);

} // namespace lplab

#endif
