#ifndef STRESS_BSPLINE_HPP
#define STRESS_BSPLINE_HPP

#include <cstddef>
#include <vector>

namespace stress {

// Cubic B-spline basis, support (-2, 2).
inline double bspline3(double t) {
    double a = t < 0 ? -t : t;
    if (a < 1.0) return (4.0 - 6.0 * a * a + 3.0 * a * a * a) / 6.0;
    if (a < 2.0) {
        double b = 2.0 - a;
        return b * b * b / 6.0;
    }
    return 0.0;
}

// Interpolating-spline coefficients for uniformly spaced samples with
// whole-sample mirror boundaries (c[-1] = c[1], c[n] = c[n-2]). Solves the
// tridiagonal system (c[j-1] + 4 c[j] + c[j+1])/6 = x[j] by the Thomas
// algorithm; the boundary fold makes rows 0 and n-1 (4, 2) instead of (1, 4, 1).
// n >= 2 required.
void cubic_spline_coefficients(const double* samples, double* coeff, int n);

// Evaluate the spline at u (sample coordinates, knot j at u = j). Mirror index
// extension outside [0, n-1].
double cubic_spline_eval(const double* coeff, int n, double u);

}  // namespace stress

#endif
