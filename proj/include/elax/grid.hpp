#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "elax/errors.hpp"

namespace elax {

/// Periodic grid on [0,2pi)^dim with n collocation points per axis.
/// Wavenumbers per axis run over the usual FFT order
/// {0,1,...,n/2-1,-n/2,...,-1}; the Nyquist mode -n/2 is always zeroed
/// by every spectral operation.
struct GridSpec {
    int dim = 2; ///< 2 or 3
    int n = 0;   ///< collocation points (= modes) per axis, even, >= 8

    GridSpec() = default;
    GridSpec(int dim_, int n_) : dim(dim_), n(n_) { validate(); }

    void validate() const {
        if (dim != 2 && dim != 3)
            throw ConfigError("GridSpec: dim must be 2 or 3");
        if (n < 8 || n % 2 != 0)
            throw ConfigError("GridSpec: n must be even and >= 8");
    }

    /// Number of collocation points (= stored coefficients) per component.
    std::size_t points() const {
        std::size_t p = 1;
        for (int d = 0; d < dim; ++d) p *= static_cast<std::size_t>(n);
        return p;
    }

    /// Wavenumber of axis index i in FFT storage order.
    int wavenumber(int i) const { return i < n / 2 ? i : i - n; }

    /// Storage index of wavenumber k (k in [-n/2, n/2-1]).
    int index_of(int k) const { return k >= 0 ? k : k + n; }

    /// Largest axis wavenumber kept by the 2/3 dealiasing rule.
    int dealias_cutoff() const { return n / 3; }

    std::size_t flat2(int i, int j) const {
        return static_cast<std::size_t>(i) * n + j;
    }
    std::size_t flat3(int i, int j, int l) const {
        return (static_cast<std::size_t>(i) * n + j) * n + l;
    }

    bool operator==(const GridSpec&) const = default;
};

} // namespace elax
