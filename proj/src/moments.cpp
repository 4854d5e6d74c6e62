#include "randcolor/moments.hpp"

#include <algorithm>
#include <cmath>

namespace randcolor {

namespace {

bool close(const Rational& exact, double approx, double scale, double rel_tol)
{
    const double x = exact.get_d();
    const double ref = std::max({std::abs(x), scale, 1e-300});
    return std::abs(x - approx) <= rel_tol * ref;
}

} // namespace

bool mirrors_agree(const MomentReport& exact, const MomentReportF& approx, std::int64_t m,
                   double rel_tol)
{
    const double m2 = static_cast<double>(m) * static_cast<double>(m);
    if (exact.per_color_mean.size() != approx.per_color_mean.size()) return false;
    for (std::size_t i = 0; i < exact.per_color_mean.size(); ++i) {
        if (!close(exact.per_color_mean[i], approx.per_color_mean[i], 0.0, rel_tol)) return false;
        if (!close(exact.per_color_var[i], approx.per_color_var[i], m2, rel_tol)) return false;
    }
    return close(exact.mean_M, approx.mean_M, 0.0, rel_tol) &&
           close(exact.mean_L, approx.mean_L, 0.0, rel_tol) &&
           close(exact.var_common, approx.var_common, m2, rel_tol) &&
           close(exact.a_c, approx.a_c, 0.0, rel_tol) &&
           close(exact.b_c, approx.b_c, 0.0, rel_tol) &&
           close(exact.rho, approx.rho, 1.0, rel_tol) &&
           close(exact.zeta_sq, approx.zeta_sq, 0.0, rel_tol) &&
           close(exact.imbalance_sq, approx.imbalance_sq, 1.0, rel_tol) &&
           close(exact.normalized_var, approx.normalized_var, 1.0, rel_tol);
}

} // namespace randcolor
