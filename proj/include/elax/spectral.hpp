#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "elax/fft.hpp"
#include "elax/field.hpp"

namespace elax {

/// Physical-space sample buffer for one component.
using PhysBuffer = std::vector<Complex>;

inline PhysBuffer to_physical(const FourierField& f, int comp = 0) {
    PhysBuffer out(f.grid().points());
    Transformer::get(f.grid()).inverse(f.component(comp), out);
    return out;
}

inline void from_physical(const PhysBuffer& phys, FourierField& f, int comp = 0) {
    Transformer::get(f.grid()).forward(phys, f.component(comp));
}

/// inverse-then-forward transform; the roundtrip contract every backend
/// must satisfy (relative max-norm error <= 1e-12).
inline FourierField transform_roundtrip(const FourierField& f) {
    FourierField out = f;
    PhysBuffer phys(f.grid().points());
    const auto& tr = Transformer::get(f.grid());
    for (int c = 0; c < f.components(); ++c) {
        tr.inverse(f.component(c), phys);
        tr.forward(phys, out.component(c));
    }
    return out;
}

namespace detail {

/// Apply fn(flat_index, k_vector) over all stored wavevectors.
template <typename Fn>
inline void for_each_mode(const GridSpec& g, Fn&& fn) {
    const int n = g.n;
    if (g.dim == 2) {
        for (int i = 0; i < n; ++i) {
            const int kx = g.wavenumber(i);
            for (int j = 0; j < n; ++j)
                fn(g.flat2(i, j), kx, g.wavenumber(j), 0);
        }
    } else {
        for (int i = 0; i < n; ++i) {
            const int kx = g.wavenumber(i);
            for (int j = 0; j < n; ++j) {
                const int ky = g.wavenumber(j);
                for (int l = 0; l < n; ++l)
                    fn(g.flat3(i, j, l), kx, ky, g.wavenumber(l));
            }
        }
    }
}

} // namespace detail

/// Zero the Nyquist modes (-n/2 on any axis), in place.
inline void zero_nyquist(FourierField& f) {
    const GridSpec& g = f.grid();
    const int nyq = -g.n / 2;
    for (int c = 0; c < f.components(); ++c) {
        auto s = f.component(c);
        detail::for_each_mode(g, [&](std::size_t idx, int kx, int ky, int kz) {
            if (kx == nyq || ky == nyq || kz == nyq) s[idx] = Complex(0, 0);
        });
    }
}

/// 2/3-rule dealiasing: zero every coefficient with any |k_i| > n/3. Idempotent.
inline void dealias_inplace(FourierField& f) {
    const GridSpec& g = f.grid();
    const int cut = g.dealias_cutoff();
    for (int c = 0; c < f.components(); ++c) {
        auto s = f.component(c);
        detail::for_each_mode(g, [&](std::size_t idx, int kx, int ky, int kz) {
            if (std::abs(kx) > cut || std::abs(ky) > cut || std::abs(kz) > cut)
                s[idx] = Complex(0, 0);
        });
    }
}

inline FourierField dealias(FourierField f) {
    dealias_inplace(f);
    return f;
}

/// Spectral derivative along one axis: c_out(k) = i k_axis c_in(k).
/// Nyquist modes are zeroed.
inline FourierField derivative(const FourierField& f, int axis) {
    const GridSpec& g = f.grid();
    if (axis < 0 || axis >= g.dim)
        throw UsageError("derivative: axis out of range");
    FourierField out(g, f.components(), false);
    const int nyq = -g.n / 2;
    for (int c = 0; c < f.components(); ++c) {
        auto in = f.component(c);
        auto o = out.component(c);
        detail::for_each_mode(g, [&](std::size_t idx, int kx, int ky, int kz) {
            if (kx == nyq || ky == nyq || kz == nyq) { o[idx] = Complex(0, 0); return; }
            const int k = axis == 0 ? kx : (axis == 1 ? ky : kz);
            o[idx] = Complex(0, 1) * static_cast<double>(k) * in[idx];
        });
    }
    out.set_real_valued(f.real_valued());
    return out;
}

/// Invert the Laplacian with zero-mean gauge: psi(k) = -omega(k)/|k|^2,
/// psi(0) = 0. The mean of omega is discarded.
inline FourierField solve_poisson(const FourierField& omega) {
    const GridSpec& g = omega.grid();
    if (omega.components() != 1)
        throw UsageError("solve_poisson: scalar field expected");
    FourierField psi = FourierField::scalar(g, omega.real_valued());
    auto in = omega.component(0);
    auto o = psi.component(0);
    detail::for_each_mode(g, [&](std::size_t idx, int kx, int ky, int kz) {
        const double k2 = double(kx) * kx + double(ky) * ky + double(kz) * kz;
        o[idx] = k2 == 0.0 ? Complex(0, 0) : -in[idx] / k2;
    });
    return psi;
}

/// H^s norm: ( sum_k (1+|k|^2)^s |c_k|^2 )^{1/2}, summed over components.
inline double sobolev_norm(const FourierField& f, double s) {
    const GridSpec& g = f.grid();
    double acc = 0.0;
    for (int c = 0; c < f.components(); ++c) {
        auto in = f.component(c);
        detail::for_each_mode(g, [&](std::size_t idx, int kx, int ky, int kz) {
            const double k2 = double(kx) * kx + double(ky) * ky + double(kz) * kz;
            const double w = s == 0.0 ? 1.0 : std::pow(1.0 + k2, s);
            acc += w * std::norm(in[idx]);
        });
    }
    return std::sqrt(acc);
}

inline double l2_norm(const FourierField& f) { return sobolev_norm(f, 0.0); }

/// L^2 inner product <f,g> = sum_k conj(f_k) g_k (component-wise sum).
inline Complex inner_product(const FourierField& f, const FourierField& g) {
    if (f.grid() != g.grid() || f.components() != g.components())
        throw UsageError("inner_product: field layout mismatch");
    Complex acc(0, 0);
    for (std::size_t i = 0; i < f.raw().size(); ++i)
        acc += std::conj(f.raw()[i]) * g.raw()[i];
    return acc;
}

/// Max-norm distance between coefficient arrays, for test oracles.
inline double max_coeff_distance(const FourierField& a, const FourierField& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.raw().size(); ++i)
        m = std::max(m, std::abs(a.raw()[i] - b.raw()[i]));
    return m;
}

/// Largest violation of conjugate symmetry c(-k) = conj(c(k)), relative
/// to the largest coefficient magnitude.
inline double conjugate_symmetry_error(const FourierField& f) {
    const GridSpec& g = f.grid();
    double worst = 0.0, scale = 0.0;
    for (int c = 0; c < f.components(); ++c) {
        auto s = f.component(c);
        detail::for_each_mode(g, [&](std::size_t idx, int kx, int ky, int kz) {
            scale = std::max(scale, std::abs(s[idx]));
            const int nyq = -g.n / 2;
            if (kx == nyq || ky == nyq || kz == nyq) return;
            std::size_t ridx = g.dim == 2
                ? g.flat2(g.index_of(-kx), g.index_of(-ky))
                : g.flat3(g.index_of(-kx), g.index_of(-ky), g.index_of(-kz));
            worst = std::max(worst, std::abs(s[ridx] - std::conj(s[idx])));
        });
    }
    return scale == 0.0 ? 0.0 : worst / scale;
}

/// Project onto the conjugate-symmetric (real-valued) part:
/// c(k) <- (c(k) + conj(c(-k)))/2. Nyquist modes are zeroed.
inline void symmetrize_real(FourierField& f) {
    const GridSpec& g = f.grid();
    const int nyq = -g.n / 2;
    for (int c = 0; c < f.components(); ++c) {
        auto s = f.component(c);
        detail::for_each_mode(g, [&](std::size_t idx, int kx, int ky, int kz) {
            if (kx == nyq || ky == nyq || kz == nyq) { s[idx] = Complex(0, 0); return; }
            if (g.dim == 2 ? (kx < 0 || (kx == 0 && ky < 0))
                           : (kx < 0 || (kx == 0 && (ky < 0 || (ky == 0 && kz < 0)))))
                return; // handled from the +k side
            std::size_t ridx = g.dim == 2
                ? g.flat2(g.index_of(-kx), g.index_of(-ky))
                : g.flat3(g.index_of(-kx), g.index_of(-ky), g.index_of(-kz));
            const Complex avg = 0.5 * (s[idx] + std::conj(s[ridx]));
            s[idx] = avg;
            s[ridx] = std::conj(avg);
        });
    }
    f.set_real_valued(true);
}

/// One component of a vector field as a standalone scalar field.
inline FourierField extract_component(const FourierField& f, int comp) {
    FourierField out = FourierField::scalar(f.grid(), f.real_valued());
    auto src = f.component(comp);
    std::copy(src.begin(), src.end(), out.component(0).begin());
    return out;
}

inline void insert_component(FourierField& dst, int comp, const FourierField& scalar) {
    auto s = scalar.component(0);
    auto d = dst.component(comp);
    std::copy(s.begin(), s.end(), d.begin());
}

/// Physical-space mean of |f|^2 (equals ||f||_0^2 by Parseval).
inline double physical_mean_square(const FourierField& f) {
    double acc = 0.0;
    for (int c = 0; c < f.components(); ++c) {
        PhysBuffer p = to_physical(f, c);
        double sum = 0.0;
        for (auto v : p) sum += std::norm(v);
        acc += sum / static_cast<double>(p.size());
    }
    return acc;
}

} // namespace elax
