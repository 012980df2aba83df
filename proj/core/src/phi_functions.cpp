#include "hyperheat/phi_functions.hpp"

#include <cmath>

namespace hyperheat {
namespace {

// Below |z| = 1/2 the closed forms lose digits to cancellation; the Taylor
// series through z^16 is accurate to ~1e-22 there.
constexpr double kSeriesRadius = 0.5;
constexpr int kSeriesDegree = 16;

// sum_{k=0}^{deg} z^k / (k + offset)!
double series(double z, int offset) {
    double factorial = 1.0;
    for (int i = 2; i <= offset; ++i) factorial *= i;
    double term = 1.0 / factorial;
    double sum = term;
    for (int k = 1; k <= kSeriesDegree; ++k) {
        term *= z / static_cast<double>(k + offset);
        sum += term;
    }
    return sum;
}

}  // namespace

double phi1(double z) {
    if (std::abs(z) <= kSeriesRadius) return series(z, 1);
    return std::expm1(z) / z;
}

double phi2(double z) {
    if (std::abs(z) <= kSeriesRadius) return series(z, 2);
    return (std::expm1(z) - z) / (z * z);
}

}  // namespace hyperheat
