#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace hyperheat {

using Complex = std::complex<double>;

/// Periodic discretization of [0, L)^n with N points per direction.
///
/// Frequencies follow the FFT ordering: index i in [0, N) carries the wavenumber
/// k = i for i < N/2 and k = i - N otherwise, so k ranges over {-N/2, ..., N/2-1}
/// and xi_k = 2*pi*k / L. Flat indices are row-major over the n directions, the
/// last direction varying fastest. The |xi|^2 table is computed once and shared
/// between copies.
class TorusGrid {
public:
    static constexpr std::size_t kDefaultPointBudget = std::size_t{1} << 24;

    TorusGrid(int dimension, std::size_t points_per_dim, double side_length = 2.0 * 3.14159265358979323846,
              std::size_t point_budget = kDefaultPointBudget);

    int dimension() const noexcept { return dimension_; }
    std::size_t points_per_dim() const noexcept { return points_; }
    double side_length() const noexcept { return length_; }
    std::size_t size() const noexcept { return size_; }

    /// Volume L^n of the torus.
    double volume() const noexcept;
    /// Quadrature weight (L/N)^n of one sample.
    double cell_volume() const noexcept;

    /// Signed wavenumber of a 1-d FFT index.
    long wavenumber(std::size_t index) const noexcept;
    /// 2*pi*k/L for the signed wavenumber of a 1-d FFT index.
    double angular_frequency(std::size_t index) const noexcept;
    /// Flat index of the negated frequency (mod N in every direction).
    std::size_t mirror(std::size_t flat) const noexcept;
    /// Per-direction FFT indices of a flat index.
    std::vector<std::size_t> unflatten(std::size_t flat) const;
    std::size_t flatten(std::span<const std::size_t> indices) const;

    /// |xi|^2 on the whole lattice, flat FFT order.
    std::span<const double> xi_squared() const noexcept { return *xi2_; }
    /// Largest |xi| present on the lattice (corner frequency).
    double max_frequency() const noexcept;

    /// Physical coordinate of sample `index` along one direction.
    double coordinate(std::size_t index) const noexcept;

    friend bool operator==(const TorusGrid& a, const TorusGrid& b) noexcept {
        return a.dimension_ == b.dimension_ && a.points_ == b.points_ && a.length_ == b.length_;
    }

private:
    int dimension_;
    std::size_t points_;
    double length_;
    std::size_t size_;
    std::shared_ptr<const std::vector<double>> xi2_;
};

/// Real samples of a function on the torus.
class RealField {
public:
    explicit RealField(TorusGrid grid);
    RealField(TorusGrid grid, std::vector<double> samples);

    const TorusGrid& grid() const noexcept { return grid_; }
    std::span<const double> samples() const noexcept { return samples_; }
    std::span<double> samples() noexcept { return samples_; }
    std::size_t size() const noexcept { return samples_.size(); }
    double operator[](std::size_t i) const noexcept { return samples_[i]; }
    double& operator[](std::size_t i) noexcept { return samples_[i]; }

    RealField& operator+=(const RealField& other);
    RealField& operator-=(const RealField& other);
    RealField& operator*=(double factor);

    bool all_finite() const noexcept;

private:
    TorusGrid grid_;
    std::vector<double> samples_;
};

RealField operator+(RealField a, const RealField& b);
RealField operator-(RealField a, const RealField& b);
RealField operator*(double factor, RealField a);

/// Discrete Fourier coefficients in FFT order under the unitary normalization.
class SpectralField {
public:
    explicit SpectralField(TorusGrid grid);
    SpectralField(TorusGrid grid, std::vector<Complex> coefficients);

    const TorusGrid& grid() const noexcept { return grid_; }
    std::span<const Complex> coefficients() const noexcept { return coefficients_; }
    std::span<Complex> coefficients() noexcept { return coefficients_; }
    std::size_t size() const noexcept { return coefficients_.size(); }
    const Complex& operator[](std::size_t i) const noexcept { return coefficients_[i]; }
    Complex& operator[](std::size_t i) noexcept { return coefficients_[i]; }

    SpectralField& operator+=(const SpectralField& other);
    SpectralField& operator-=(const SpectralField& other);
    SpectralField& operator*=(double factor);

    /// max_k |c(k) - conj(c(-k))| relative to max_k |c(k)| (0 for the zero field).
    double hermitian_defect() const;
    /// Replace c(k) by (c(k) + conj(c(-k))) / 2.
    void symmetrize();
    /// Coefficient-space l2 norm.
    double l2() const;

private:
    TorusGrid grid_;
    std::vector<Complex> coefficients_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double factor, SpectralField a);

/// Unitary forward DFT: c_k = N_tot^{-1/2} sum_x f(x) e^{-i xi_k x}.
/// The result is exactly Hermitian (rounding asymmetry is averaged out).
SpectralField forward_transform(const RealField& f);

/// Unitary inverse DFT. Throws SymmetryError if the input is not Hermitian to
/// 1e-10 (relative) or the result carries an imaginary residue above 1e-12.
RealField inverse_transform(const SpectralField& coefficients);

/// Riemann-sum L_p norm (sum |f|^p dx)^{1/p}; p = infinity gives max |f|.
double lp_norm(const RealField& f, double p);

/// Parseval-consistent L_2 norm computed from coefficients.
double l2_norm(const SpectralField& f);

}  // namespace hyperheat
