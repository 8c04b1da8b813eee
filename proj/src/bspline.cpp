#include "stress/bspline.hpp"

#include <vector>

#include "stress/common.hpp"

namespace stress {

void cubic_spline_coefficients(const double* samples, double* coeff, int n) {
    if (n < 2) throw Error(ErrCode::state, "cubic spline needs at least 2 samples");

    // Tridiagonal system, mirror-folded at both ends:
    //   row 0:     4 c0 + 2 c1             = 6 x0
    //   row j:     c_{j-1} + 4 c_j + c_{j+1} = 6 x_j
    //   row n-1:   2 c_{n-2} + 4 c_{n-1}   = 6 x_{n-1}
    std::vector<double> diag(n, 4.0), upper(n, 1.0), rhs(n);
    upper[0] = 2.0;
    for (int j = 0; j < n; ++j) rhs[j] = 6.0 * samples[j];

    // forward sweep
    for (int j = 1; j < n; ++j) {
        double lower = (j == n - 1) ? 2.0 : 1.0;
        double w = lower / diag[j - 1];
        diag[j] -= w * upper[j - 1];
        rhs[j] -= w * rhs[j - 1];
    }
    coeff[n - 1] = rhs[n - 1] / diag[n - 1];
    for (int j = n - 2; j >= 0; --j) coeff[j] = (rhs[j] - upper[j] * coeff[j + 1]) / diag[j];
}

static inline int mirror_index(int i, int n) {
    if (n == 1) return 0;
    int period = 2 * (n - 1);
    i = i % period;
    if (i < 0) i += period;
    return i < n ? i : period - i;
}

double cubic_spline_eval(const double* coeff, int n, double u) {
    int i = int(u >= 0 ? u : u - 1);  // floor
    if (double(i) > u) --i;
    double t = u - i;
    double v = 0.0;
    for (int m = -1; m <= 2; ++m) {
        v += coeff[mirror_index(i + m, n)] * bspline3(t - m);
    }
    return v;
}

}  // namespace stress
