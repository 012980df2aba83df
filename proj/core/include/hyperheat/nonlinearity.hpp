#pragma once

#include "hyperheat/grid.hpp"

#include <cstddef>
#include <vector>

namespace hyperheat {

/// Pointwise |x|^{r-1} x.
double signed_power(double x, double r);

/// Points per direction of the padded grid: N * factor rounded up to an even integer.
std::size_t padded_points(std::size_t points, double dealias_factor);

/// Samples of the band-limited interpolant of f on the padded grid with
/// padded_points(N, factor) points per direction (row-major). Nyquist
/// coefficients are split evenly between +N/2 and -N/2.
std::vector<double> padded_samples(const SpectralField& f, double dealias_factor);

/// Coefficients of the band projection onto the coarse lattice of f's grid of a
/// function sampled on the padded grid. Inverse of padded_samples on band-limited input.
SpectralField truncate_to_band(const std::vector<double>& fine_samples, const TorusGrid& grid, double dealias_factor);

/// |u|^{r-1} u evaluated on the padded grid and projected back onto the base band.
/// dealias_factor = 1 evaluates pointwise on the base grid.
SpectralField nonlinearity(const SpectralField& u, double r, double dealias_factor = 1.5);
RealField nonlinearity(const RealField& u, double r, double dealias_factor = 1.5);

}  // namespace hyperheat
