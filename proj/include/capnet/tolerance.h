#pragma once

namespace capnet {

/// Absolute tolerance used for lengths and angles throughout the library.
/// Defaults to 1e-9; the CAPNET_TOLERANCE environment variable overrides it.
double default_tolerance();

/// Replace the process-wide default (tests use this to probe robustness).
void set_default_tolerance(double eps);

namespace tol {

inline bool equal(double a, double b, double eps) { return (a - b <= eps) && (b - a <= eps); }
inline bool zero(double a, double eps) { return equal(a, 0.0, eps); }
inline bool leq(double a, double b, double eps) { return a <= b + eps; }
inline bool geq(double a, double b, double eps) { return a + eps >= b; }

bool equal(double a, double b);
bool zero(double a);
bool leq(double a, double b);
bool geq(double a, double b);

}  // namespace tol
}  // namespace capnet
