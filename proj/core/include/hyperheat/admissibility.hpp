#pragma once

#include "hyperheat/semigroup.hpp"

#include <string>

namespace hyperheat {

enum class Criticality { subcritical, critical, supercritical };

std::string to_string(Criticality c);

/// Classification of s0 against the critical smoothness with 1e-12 slack.
Criticality classify(double s0, double critical_s0);

/// Exponent bookkeeping of the fixed-point argument for a weight pair (a, v).
///
/// For finite v:
///   delta = a v - r (s - s0) v / alpha + 1,   kappa = a v + 2 r v - a r v - r + 1.
/// For v = infinity both are reported as their coefficients of v
/// (delta -> a - r (s - s0) / alpha, kappa -> a + 2r - a r) and 1/v = 0 in (e_3).
struct Admissibility {
    double a = 0.0;
    double v = 0.0;
    double s = 0.0;
    double s0 = 0.0;
    double p = 2.0;
    double alpha = 1.0;
    double r = 2.0;
    double delta = 0.0;
    double kappa = 0.0;
    bool v_infinite = false;
    bool window_holds = false;     ///< r (s - s0) / alpha < a + 1/v < 2
    bool admissible = false;       ///< window_holds, 1/2 < v, and s0 <= s
    double critical_s0 = 0.0;      ///< n/p - 2 alpha / (r - 1)
    Criticality classification = Criticality::supercritical;
};

Admissibility admissibility(double a, double v, double s, double s0, double p, const ModelParams& model);

/// Whether the window predicate agrees with (delta > 0 and kappa > 0).
/// Throws ParameterError if v <= 1/2.
bool equivalence_check(double a, double v, double s, double s0, const ModelParams& model);

}  // namespace hyperheat
