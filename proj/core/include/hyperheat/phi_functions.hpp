#pragma once

namespace hyperheat {

/// phi_1(z) = (e^z - 1) / z, phi_1(0) = 1.
double phi1(double z);
/// phi_2(z) = (e^z - 1 - z) / z^2, phi_2(0) = 1/2.
double phi2(double z);

}  // namespace hyperheat
