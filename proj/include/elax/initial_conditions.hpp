#pragma once

#include <cmath>
#include <string>

#include "elax/rng.hpp"
#include "elax/spectral.hpp"

namespace elax {

/// Parameters of the named initial-condition library.
struct IcParams {
    double amplitude = 0.2;
    double kappa = 3.0;      ///< spectral decay scale of random_smooth
    std::uint64_t seed = 1;
};

/// shear: Omega = cos y (steady; {Psi,Omega} = 0).
inline FourierField ic_shear(const GridSpec& g) {
    FourierField w = FourierField::scalar(g, true);
    w.at(0, 0, 1) = Complex(0.5, 0);
    w.at(0, 0, -1) = Complex(0.5, 0);
    return w;
}

/// cellular: Omega = cos x + cos y (steady; Psi = -Omega).
inline FourierField ic_cellular(const GridSpec& g) {
    FourierField w = FourierField::scalar(g, true);
    w.at(0, 1, 0) = Complex(0.5, 0);
    w.at(0, -1, 0) = Complex(0.5, 0);
    w.at(0, 0, 1) = Complex(0.5, 0);
    w.at(0, 0, -1) = Complex(0.5, 0);
    return w;
}

/// random_smooth: complex white noise shaped by exp(-|k|^2/kappa^2),
/// symmetrized to a real field, zero mean, dealiased, normalized to
/// ||Omega||_0 = amplitude. Modes are drawn in storage order (two
/// gaussians per mode: re, im), so a seed pins the field exactly.
inline FourierField ic_random_smooth(const GridSpec& g, const IcParams& p) {
    FourierField w = FourierField::scalar(g, false);
    Rng rng(p.seed);
    auto s = w.component(0);
    detail::for_each_mode(g, [&](std::size_t idx, int kx, int ky, int kz) {
        const double re = rng.gaussian();
        const double im = rng.gaussian();
        const double k2 = double(kx) * kx + double(ky) * ky + double(kz) * kz;
        s[idx] = Complex(re, im) * std::exp(-k2 / (p.kappa * p.kappa));
    });
    w.at(0, 0, 0) = Complex(0, 0);
    dealias_inplace(w);
    symmetrize_real(w);
    w.at(0, 0, 0) = Complex(0, 0);
    const double z = l2_norm(w);
    if (z > 0.0) w *= p.amplitude / z;
    return w;
}

/// Single Fourier mode e^{i k.x} (complex field), the standard phi0 probe.
inline FourierField ic_mode(const GridSpec& g, int kx, int ky, int kz = 0) {
    FourierField f = FourierField::scalar(g, false);
    if (g.dim == 2)
        f.at(0, kx, ky) = Complex(1, 0);
    else
        f.at(0, kx, ky, kz) = Complex(1, 0);
    return f;
}

/// Smooth random complex scalar (not symmetrized), for transported-probe
/// initial data.
inline FourierField ic_random_complex(const GridSpec& g, const IcParams& p) {
    FourierField f = FourierField::scalar(g, false);
    Rng rng(p.seed);
    auto s = f.component(0);
    detail::for_each_mode(g, [&](std::size_t idx, int kx, int ky, int kz) {
        const double re = rng.gaussian();
        const double im = rng.gaussian();
        const double k2 = double(kx) * kx + double(ky) * ky + double(kz) * kz;
        s[idx] = Complex(re, im) * std::exp(-k2 / (p.kappa * p.kappa));
    });
    dealias_inplace(f);
    zero_nyquist(f);
    const double z = l2_norm(f);
    if (z > 0.0) f *= p.amplitude / z;
    return f;
}

inline FourierField make_ic_2d(const std::string& name, const GridSpec& g,
                               const IcParams& p) {
    if (name == "shear") return ic_shear(g);
    if (name == "cellular") return ic_cellular(g);
    if (name == "random_smooth") return ic_random_smooth(g, p);
    throw ConfigError("unknown 2D initial condition: " + name);
}

// ---- 3D named initial data ----

/// Steady shear u = (sin z, 0, 0): Omega = (0, cos z, 0).
inline FourierField ic_shear3d_vorticity(const GridSpec& g) {
    FourierField w = FourierField::vector(g, true);
    w.at(1, 0, 0, 1) = Complex(0.5, 0);
    w.at(1, 0, 0, -1) = Complex(0.5, 0);
    return w;
}

/// Taylor-Green vorticity: curl of
/// u = (sin x cos y cos z, -cos x sin y cos z, 0).
inline FourierField ic_taylor_green_vorticity(const GridSpec& g) {
    FourierField u = FourierField::vector(g, true);
    for (int sx : {-1, 1})
        for (int sy : {-1, 1})
            for (int sz : {-1, 1}) {
                // sin x cos y cos z ->  -i sx / 8 at (sx, sy, sz)
                u.at(0, sx, sy, sz) = Complex(0, -0.125 * sx);
                // -cos x sin y cos z -> +i sy / 8
                u.at(1, sx, sy, sz) = Complex(0, 0.125 * sy);
            }
    // Omega = curl u
    FourierField u0 = extract_component(u, 0);
    FourierField u1 = extract_component(u, 1);
    FourierField u2 = extract_component(u, 2);
    FourierField w = FourierField::vector(g, true);
    insert_component(w, 0, derivative(u2, 1) - derivative(u1, 2));
    insert_component(w, 1, derivative(u0, 2) - derivative(u2, 0));
    insert_component(w, 2, derivative(u1, 0) - derivative(u0, 1));
    return w;
}

inline FourierField make_ic_3d(const std::string& name, const GridSpec& g) {
    if (name == "shear") return ic_shear3d_vorticity(g);
    if (name == "taylor_green") return ic_taylor_green_vorticity(g);
    throw ConfigError("unknown 3D initial condition: " + name);
}

} // namespace elax
