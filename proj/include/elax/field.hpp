#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "elax/grid.hpp"

namespace elax {

using Complex = std::complex<double>;

/// Spectral representation of a scalar or vector field on T^2 or T^3.
///
/// Coefficients are normalized so that ||e^{ik.x}||_0 = 1, i.e.
/// c_k = (1/N^d) sum_x f(x) e^{-ik.x} and f(x) = sum_k c_k e^{ik.x}.
/// Storage is row-major over axis indices in FFT order, one contiguous
/// block per component.
class FourierField {
public:
    FourierField() = default;

    FourierField(const GridSpec& grid, int components, bool real_valued = false)
        : grid_(grid), components_(components), real_valued_(real_valued),
          c_(grid.points() * components, Complex(0.0, 0.0)) {}

    static FourierField scalar(const GridSpec& grid, bool real_valued = false) {
        return FourierField(grid, 1, real_valued);
    }
    static FourierField vector(const GridSpec& grid, bool real_valued = false) {
        return FourierField(grid, grid.dim, real_valued);
    }

    const GridSpec& grid() const { return grid_; }
    int components() const { return components_; }
    bool real_valued() const { return real_valued_; }
    void set_real_valued(bool b) { real_valued_ = b; }

    std::span<Complex> component(int c) {
        return {c_.data() + static_cast<std::size_t>(c) * grid_.points(), grid_.points()};
    }
    std::span<const Complex> component(int c) const {
        return {c_.data() + static_cast<std::size_t>(c) * grid_.points(), grid_.points()};
    }

    std::vector<Complex>& raw() { return c_; }
    const std::vector<Complex>& raw() const { return c_; }

    /// Coefficient at wavevector (kx,ky) of a 2D field.
    Complex& at(int comp, int kx, int ky) {
        return c_[static_cast<std::size_t>(comp) * grid_.points()
                  + grid_.flat2(grid_.index_of(kx), grid_.index_of(ky))];
    }
    Complex at(int comp, int kx, int ky) const {
        return c_[static_cast<std::size_t>(comp) * grid_.points()
                  + grid_.flat2(grid_.index_of(kx), grid_.index_of(ky))];
    }
    /// Coefficient at wavevector (kx,ky,kz) of a 3D field.
    Complex& at(int comp, int kx, int ky, int kz) {
        return c_[static_cast<std::size_t>(comp) * grid_.points()
                  + grid_.flat3(grid_.index_of(kx), grid_.index_of(ky), grid_.index_of(kz))];
    }
    Complex at(int comp, int kx, int ky, int kz) const {
        return c_[static_cast<std::size_t>(comp) * grid_.points()
                  + grid_.flat3(grid_.index_of(kx), grid_.index_of(ky), grid_.index_of(kz))];
    }

    FourierField& operator+=(const FourierField& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    FourierField& operator-=(const FourierField& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    FourierField& operator*=(Complex a) {
        for (auto& v : c_) v *= a;
        return *this;
    }
    FourierField& operator*=(double a) {
        for (auto& v : c_) v *= a;
        return *this;
    }

    /// this += a * other
    void axpy(Complex a, const FourierField& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += a * o.c_[i];
    }

    friend FourierField operator+(FourierField a, const FourierField& b) { a += b; return a; }
    friend FourierField operator-(FourierField a, const FourierField& b) { a -= b; return a; }
    friend FourierField operator*(double a, FourierField f) { f *= a; return f; }
    friend FourierField operator*(Complex a, FourierField f) { f *= a; return f; }

    bool finite() const {
        return std::all_of(c_.begin(), c_.end(), [](Complex v) {
            return std::isfinite(v.real()) && std::isfinite(v.imag());
        });
    }

private:
    GridSpec grid_;
    int components_ = 0;
    bool real_valued_ = false;
    std::vector<Complex> c_;
};

} // namespace elax
