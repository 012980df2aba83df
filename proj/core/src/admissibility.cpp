#include "hyperheat/admissibility.hpp"

#include "hyperheat/errors.hpp"

#include <cmath>

namespace hyperheat {

std::string to_string(Criticality c) {
    switch (c) {
        case Criticality::subcritical: return "subcritical";
        case Criticality::critical: return "critical";
        case Criticality::supercritical: return "supercritical";
    }
    return "unknown";
}

Criticality classify(double s0, double critical_s0) {
    constexpr double slack = 1e-12;
    if (std::abs(s0 - critical_s0) <= slack) return Criticality::critical;
    return s0 > critical_s0 ? Criticality::supercritical : Criticality::subcritical;
}

Admissibility admissibility(double a, double v, double s, double s0, double p, const ModelParams& model) {
    model.validate();
    Admissibility out;
    out.a = a;
    out.v = v;
    out.s = s;
    out.s0 = s0;
    out.p = p;
    out.alpha = model.alpha;
    out.r = model.r;
    out.v_infinite = std::isinf(v);

    const double r = model.r;
    const double gap = r * (s - s0) / model.alpha;
    if (out.v_infinite) {
        out.delta = a - gap;
        out.kappa = a + 2.0 * r - a * r;
    } else {
        out.delta = a * v - gap * v + 1.0;
        out.kappa = a * v + 2.0 * r * v - a * r * v - r + 1.0;
    }
    const double inv_v = out.v_infinite ? 0.0 : 1.0 / v;
    out.window_holds = gap < a + inv_v && a + inv_v < 2.0;
    out.admissible = out.window_holds && v > 0.5 && s0 <= s;
    out.critical_s0 = model.critical_smoothness(p);
    out.classification = classify(s0, out.critical_s0);
    return out;
}

bool equivalence_check(double a, double v, double s, double s0, const ModelParams& model) {
    if (!(v > 0.5)) throw ParameterError("equivalence_check: requires v > 1/2");
    const Admissibility adm = admissibility(a, v, s, s0, 2.0, model);
    return adm.window_holds == (adm.delta > 0.0 && adm.kappa > 0.0);
}

}  // namespace hyperheat
