#include "hyperheat/grid.hpp"

#include "hyperheat/errors.hpp"
#include "hyperheat/fft.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace hyperheat {
namespace {

constexpr double kSymmetryTolerance = 1e-10;
constexpr double kImaginaryTolerance = 1e-12;

void require_same_grid(const TorusGrid& a, const TorusGrid& b, const char* what) {
    if (!(a == b)) throw ParameterError(std::string(what) + ": fields live on different grids");
}

}  // namespace

TorusGrid::TorusGrid(int dimension, std::size_t points_per_dim, double side_length, std::size_t point_budget)
    : dimension_(dimension), points_(points_per_dim), length_(side_length), size_(1) {
    if (dimension < 1) throw ParameterError("TorusGrid: dimension must be >= 1");
    if (points_per_dim < 8 || !std::has_single_bit(points_per_dim)) {
        throw ParameterError("TorusGrid: points per dimension must be a power of two >= 8");
    }
    if (!(side_length > 0.0) || !std::isfinite(side_length)) {
        throw ParameterError("TorusGrid: side length must be positive and finite");
    }
    for (int d = 0; d < dimension; ++d) {
        if (size_ > point_budget / points_per_dim) {
            throw ParameterError("TorusGrid: " + std::to_string(points_per_dim) + "^" + std::to_string(dimension) +
                                 " points exceed the budget of " + std::to_string(point_budget));
        }
        size_ *= points_per_dim;
    }

    std::vector<double> omega2(points_);
    for (std::size_t i = 0; i < points_; ++i) {
        const double w = angular_frequency(i);
        omega2[i] = w * w;
    }
    auto table = std::make_shared<std::vector<double>>(size_, 0.0);
    // Accumulate direction by direction: flat = ((i_0 * N + i_1) * N + ...).
    std::size_t stride = 1;
    for (int d = dimension - 1; d >= 0; --d) {
        for (std::size_t flat = 0; flat < size_; ++flat) {
            (*table)[flat] += omega2[(flat / stride) % points_];
        }
        stride *= points_;
    }
    xi2_ = std::move(table);
}

double TorusGrid::volume() const noexcept { return std::pow(length_, dimension_); }

double TorusGrid::cell_volume() const noexcept {
    return std::pow(length_ / static_cast<double>(points_), dimension_);
}

long TorusGrid::wavenumber(std::size_t index) const noexcept {
    const auto i = static_cast<long>(index);
    const auto n = static_cast<long>(points_);
    return i < n / 2 ? i : i - n;
}

double TorusGrid::angular_frequency(std::size_t index) const noexcept {
    return 2.0 * std::numbers::pi * static_cast<double>(wavenumber(index)) / length_;
}

std::size_t TorusGrid::mirror(std::size_t flat) const noexcept {
    std::size_t result = 0;
    std::size_t stride = 1;
    for (int d = 0; d < dimension_; ++d) {
        const std::size_t i = (flat / stride) % points_;
        const std::size_t m = (points_ - i) % points_;
        result += m * stride;
        stride *= points_;
    }
    return result;
}

std::vector<std::size_t> TorusGrid::unflatten(std::size_t flat) const {
    std::vector<std::size_t> idx(static_cast<std::size_t>(dimension_));
    for (int d = dimension_ - 1; d >= 0; --d) {
        idx[static_cast<std::size_t>(d)] = flat % points_;
        flat /= points_;
    }
    return idx;
}

std::size_t TorusGrid::flatten(std::span<const std::size_t> indices) const {
    std::size_t flat = 0;
    for (std::size_t i : indices) flat = flat * points_ + i;
    return flat;
}

double TorusGrid::max_frequency() const noexcept {
    return std::sqrt(static_cast<double>(dimension_)) * std::numbers::pi * static_cast<double>(points_) / length_;
}

double TorusGrid::coordinate(std::size_t index) const noexcept {
    return length_ * static_cast<double>(index) / static_cast<double>(points_);
}

// --- RealField ---------------------------------------------------------------

RealField::RealField(TorusGrid grid) : grid_(std::move(grid)), samples_(grid_.size(), 0.0) {}

RealField::RealField(TorusGrid grid, std::vector<double> samples)
    : grid_(std::move(grid)), samples_(std::move(samples)) {
    if (samples_.size() != grid_.size()) throw ParameterError("RealField: sample count does not match grid");
}

RealField& RealField::operator+=(const RealField& other) {
    require_same_grid(grid_, other.grid_, "RealField::operator+=");
    for (std::size_t i = 0; i < samples_.size(); ++i) samples_[i] += other.samples_[i];
    return *this;
}

RealField& RealField::operator-=(const RealField& other) {
    require_same_grid(grid_, other.grid_, "RealField::operator-=");
    for (std::size_t i = 0; i < samples_.size(); ++i) samples_[i] -= other.samples_[i];
    return *this;
}

RealField& RealField::operator*=(double factor) {
    for (double& x : samples_) x *= factor;
    return *this;
}

bool RealField::all_finite() const noexcept {
    return std::all_of(samples_.begin(), samples_.end(), [](double x) { return std::isfinite(x); });
}

RealField operator+(RealField a, const RealField& b) { return a += b; }
RealField operator-(RealField a, const RealField& b) { return a -= b; }
RealField operator*(double factor, RealField a) { return a *= factor; }

// --- SpectralField -----------------------------------------------------------

SpectralField::SpectralField(TorusGrid grid) : grid_(std::move(grid)), coefficients_(grid_.size()) {}

SpectralField::SpectralField(TorusGrid grid, std::vector<Complex> coefficients)
    : grid_(std::move(grid)), coefficients_(std::move(coefficients)) {
    if (coefficients_.size() != grid_.size()) {
        throw ParameterError("SpectralField: coefficient count does not match grid");
    }
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
    require_same_grid(grid_, other.grid_, "SpectralField::operator+=");
    for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
    require_same_grid(grid_, other.grid_, "SpectralField::operator-=");
    for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
    return *this;
}

SpectralField& SpectralField::operator*=(double factor) {
    for (Complex& c : coefficients_) c *= factor;
    return *this;
}

double SpectralField::hermitian_defect() const {
    double scale = 0.0;
    double defect = 0.0;
    for (std::size_t k = 0; k < coefficients_.size(); ++k) {
        scale = std::max(scale, std::abs(coefficients_[k]));
        defect = std::max(defect, std::abs(coefficients_[k] - std::conj(coefficients_[grid_.mirror(k)])));
    }
    return scale > 0.0 ? defect / scale : 0.0;
}

void SpectralField::symmetrize() {
    for (std::size_t k = 0; k < coefficients_.size(); ++k) {
        const std::size_t m = grid_.mirror(k);
        if (m < k) continue;
        if (m == k) {
            coefficients_[k] = Complex(coefficients_[k].real(), 0.0);
            continue;
        }
        const Complex avg = 0.5 * (coefficients_[k] + std::conj(coefficients_[m]));
        coefficients_[k] = avg;
        coefficients_[m] = std::conj(avg);
    }
}

double SpectralField::l2() const {
    double sum = 0.0;
    for (const Complex& c : coefficients_) sum += std::norm(c);
    return std::sqrt(sum);
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double factor, SpectralField a) { return a *= factor; }

// --- transforms and norms ----------------------------------------------------

SpectralField forward_transform(const RealField& f) {
    const TorusGrid& g = f.grid();
    std::vector<Complex> data(f.samples().begin(), f.samples().end());
    fft::transform(data, g.dimension(), g.points_per_dim(), fft::Direction::forward);
    const double scale = 1.0 / std::sqrt(static_cast<double>(g.size()));
    for (Complex& c : data) c *= scale;
    SpectralField out(g, std::move(data));
    out.symmetrize();
    return out;
}

RealField inverse_transform(const SpectralField& coefficients) {
    const TorusGrid& g = coefficients.grid();
    const double defect = coefficients.hermitian_defect();
    if (defect > kSymmetryTolerance) {
        throw SymmetryError("inverse_transform: coefficients are not Hermitian (defect " + std::to_string(defect) + ")",
                            defect);
    }
    SpectralField symmetric = coefficients;
    symmetric.symmetrize();
    std::vector<Complex> data(symmetric.coefficients().begin(), symmetric.coefficients().end());
    fft::transform(data, g.dimension(), g.points_per_dim(), fft::Direction::backward);
    const double scale = 1.0 / std::sqrt(static_cast<double>(g.size()));

    std::vector<double> samples(data.size());
    double max_re = 0.0;
    double max_im = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        samples[i] = data[i].real() * scale;
        max_re = std::max(max_re, std::abs(samples[i]));
        max_im = std::max(max_im, std::abs(data[i].imag() * scale));
    }
    if (max_im > kImaginaryTolerance * max_re) {
        throw SymmetryError("inverse_transform: imaginary residue " + std::to_string(max_im), max_im);
    }
    return RealField(g, std::move(samples));
}

double lp_norm(const RealField& f, double p) {
    if (!(p >= 1.0)) throw ParameterError("lp_norm: p must be >= 1");
    const auto s = f.samples();
    if (std::isinf(p)) {
        double m = 0.0;
        for (double x : s) m = std::max(m, std::abs(x));
        return m;
    }
    const double dv = f.grid().cell_volume();
    double sum = 0.0;
    if (p == 1.0) {
        for (double x : s) sum += std::abs(x);
        return sum * dv;
    }
    if (p == 2.0) {
        for (double x : s) sum += x * x;
        return std::sqrt(sum * dv);
    }
    // Scale by the max to keep |x|^p in range for large p.
    double m = 0.0;
    for (double x : s) m = std::max(m, std::abs(x));
    if (m == 0.0) return 0.0;
    for (double x : s) sum += std::pow(std::abs(x) / m, p);
    return m * std::pow(sum * dv, 1.0 / p);
}

double l2_norm(const SpectralField& f) { return f.l2() * std::sqrt(f.grid().cell_volume()); }

}  // namespace hyperheat
