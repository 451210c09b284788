#include "capnet/tolerance.h"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>

namespace capnet {
namespace {

double initial_tolerance() {
    const char* env = std::getenv("CAPNET_TOLERANCE");
    if (env != nullptr) {
        try {
            double v = std::stod(env);
            if (std::isfinite(v) && v > 0.0) return v;
        } catch (...) {
        }
    }
    return 1e-9;
}

std::atomic<double>& tolerance_slot() {
    static std::atomic<double> slot{initial_tolerance()};
    return slot;
}

}  // namespace

double default_tolerance() { return tolerance_slot().load(std::memory_order_relaxed); }

void set_default_tolerance(double eps) { tolerance_slot().store(eps, std::memory_order_relaxed); }

namespace tol {
bool equal(double a, double b) { return equal(a, b, default_tolerance()); }
bool zero(double a) { return zero(a, default_tolerance()); }
bool leq(double a, double b) { return leq(a, b, default_tolerance()); }
bool geq(double a, double b) { return geq(a, b, default_tolerance()); }
}  // namespace tol

}  // namespace capnet
