#pragma once

#include <functional>
#include <string>
#include <vector>

#include "elax/spectral.hpp"

namespace elax {

/// Vorticity + derived stream function at one time instant.
/// Invariants: psi = solve_poisson(omega); omega has zero mean and is
/// real-valued (conjugate-symmetric coefficients).
struct FlowState2D {
    double t = 0.0;
    FourierField omega;
    FourierField psi;
};

inline FlowState2D make_flow_state_2d(FourierField omega, double t = 0.0) {
    omega.at(0, 0, 0) = Complex(0, 0); // zero-mean gauge
    FlowState2D s;
    s.t = t;
    s.psi = solve_poisson(omega);
    s.omega = std::move(omega);
    return s;
}

/// {f,g} = f_x g_y - f_y g_x, products in physical space, dealiased.
inline FourierField poisson_bracket(const FourierField& f, const FourierField& g) {
    if (f.grid() != g.grid())
        throw UsageError("poisson_bracket: grid mismatch");
    if (f.grid().dim != 2)
        throw UsageError("poisson_bracket: 2D fields expected");
    PhysBuffer fx = to_physical(derivative(f, 0));
    PhysBuffer fy = to_physical(derivative(f, 1));
    PhysBuffer gx = to_physical(derivative(g, 0));
    PhysBuffer gy = to_physical(derivative(g, 1));
    for (std::size_t i = 0; i < fx.size(); ++i)
        fx[i] = fx[i] * gy[i] - fy[i] * gx[i];
    FourierField out = FourierField::scalar(f.grid());
    from_physical(fx, out);
    dealias_inplace(out);
    return out;
}

namespace detail {

/// Velocity of one RK stage in physical space; advects any number of
/// fields against the same frozen (u,v). u = -psi_y, v = psi_x.
struct Advector2D {
    PhysBuffer u, v;
    GridSpec grid;

    explicit Advector2D(const FourierField& psi) : grid(psi.grid()) {
        FourierField uy = derivative(psi, 1);
        uy *= -1.0;
        u = to_physical(uy);
        v = to_physical(derivative(psi, 0));
    }

    /// -{psi, f} = -(u f_x + v f_y), dealiased.
    FourierField transport_rhs(const FourierField& f) const {
        PhysBuffer fx = to_physical(derivative(f, 0));
        PhysBuffer fy = to_physical(derivative(f, 1));
        for (std::size_t i = 0; i < fx.size(); ++i)
            fx[i] = -(u[i] * fx[i] + v[i] * fy[i]);
        FourierField out = FourierField::scalar(grid);
        from_physical(fx, out);
        dealias_inplace(out);
        return out;
    }
};

} // namespace detail

/// Euler right-hand side dOmega/dt = -{Psi, Omega}.
inline FourierField rhs_euler2d(const FlowState2D& state) {
    FourierField r = poisson_bracket(state.psi, state.omega);
    r *= -1.0;
    return r;
}

/// One flow state plus passively transported fields that share its RK
/// stages (Lax auxiliary fields, commutation probes, expansion bases).
struct Coupled2D {
    FlowState2D flow;
    std::vector<FourierField> passive;
    double enstrophy_ceiling = 0.0; // set on first step

    explicit Coupled2D(FlowState2D f, std::vector<FourierField> p = {})
        : flow(std::move(f)), passive(std::move(p)) {}
};

namespace detail {

struct StageRhs2D {
    FourierField domega;
    std::vector<FourierField> dpassive;
};

inline StageRhs2D stage_rhs_2d(const FourierField& omega,
                               const std::vector<FourierField>& passive) {
    FourierField psi = solve_poisson(omega);
    Advector2D adv(psi);
    StageRhs2D out{adv.transport_rhs(omega), {}};
    out.dpassive.reserve(passive.size());
    for (const auto& p : passive) out.dpassive.push_back(adv.transport_rhs(p));
    return out;
}

} // namespace detail

/// Classical RK4 step of the coupled system; passive fields see the
/// per-stage stream function of the flow (no splitting error).
/// Throws BlowUpError on NaN/Inf or when enstrophy exceeds 1e6 x initial.
inline void step_rk4(Coupled2D& sys, double dt) {
    if (dt <= 0.0) throw UsageError("step_rk4: dt must be positive");
    const std::size_t np = sys.passive.size();
    FourierField& w = sys.flow.omega;

    if (sys.enstrophy_ceiling == 0.0) {
        const double z0 = l2_norm(w);
        sys.enstrophy_ceiling = z0 > 0.0 ? 1e6 * z0 * z0 : -1.0;
    }

    auto shifted = [&](const detail::StageRhs2D& k, double a) {
        FourierField ws = w;
        ws.axpy(a, k.domega);
        std::vector<FourierField> ps = sys.passive;
        for (std::size_t i = 0; i < np; ++i) ps[i].axpy(a, k.dpassive[i]);
        return std::make_pair(std::move(ws), std::move(ps));
    };

    detail::StageRhs2D k1 = detail::stage_rhs_2d(w, sys.passive);
    auto [w2, p2] = shifted(k1, 0.5 * dt);
    detail::StageRhs2D k2 = detail::stage_rhs_2d(w2, p2);
    auto [w3, p3] = shifted(k2, 0.5 * dt);
    detail::StageRhs2D k3 = detail::stage_rhs_2d(w3, p3);
    auto [w4, p4] = shifted(k3, dt);
    detail::StageRhs2D k4 = detail::stage_rhs_2d(w4, p4);

    auto accumulate = [dt](FourierField& y, const FourierField& a, const FourierField& b,
                           const FourierField& c, const FourierField& d) {
        const double h = dt / 6.0;
        for (std::size_t i = 0; i < y.raw().size(); ++i)
            y.raw()[i] += h * (a.raw()[i] + 2.0 * b.raw()[i] + 2.0 * c.raw()[i] + d.raw()[i]);
    };
    accumulate(w, k1.domega, k2.domega, k3.domega, k4.domega);
    for (std::size_t i = 0; i < np; ++i)
        accumulate(sys.passive[i], k1.dpassive[i], k2.dpassive[i], k3.dpassive[i],
                   k4.dpassive[i]);

    if (w.real_valued()) symmetrize_real(w);
    sys.flow.t += dt;
    sys.flow.psi = solve_poisson(w);

    if (!w.finite())
        throw BlowUpError("euler2d: non-finite vorticity at t=" + std::to_string(sys.flow.t),
                          sys.flow.t);
    if (sys.enstrophy_ceiling > 0.0) {
        const double z = l2_norm(w);
        if (z * z > sys.enstrophy_ceiling)
            throw BlowUpError("euler2d: enstrophy ceiling exceeded at t="
                                  + std::to_string(sys.flow.t),
                              sys.flow.t);
    }
    for (auto& p : sys.passive)
        if (!p.finite())
            throw BlowUpError("euler2d: non-finite transported field at t="
                                  + std::to_string(sys.flow.t),
                              sys.flow.t);
}

/// Kinetic energy ||grad Psi||_0^2 = sum |k|^2 |psi_k|^2.
inline double energy2d(const FlowState2D& s) {
    double acc = 0.0;
    auto p = s.psi.component(0);
    detail::for_each_mode(s.psi.grid(), [&](std::size_t idx, int kx, int ky, int) {
        acc += (double(kx) * kx + double(ky) * ky) * std::norm(p[idx]);
    });
    return acc;
}

inline double enstrophy2d(const FlowState2D& s) {
    const double z = l2_norm(s.omega);
    return z * z;
}

/// Advance the coupled system to t_end, invoking emit at t=0, every
/// out_interval (rounded to a whole number of steps) and at t_end.
inline void run_coupled_2d(Coupled2D& sys, double dt, double t_end, double out_interval,
                           const std::function<void(const Coupled2D&)>& emit) {
    if (t_end < 0.0) throw UsageError("run_coupled_2d: t_end must be >= 0");
    emit(sys);
    if (t_end == 0.0) return;
    const long nsteps = std::lround(t_end / dt);
    long every = out_interval > 0.0 ? std::lround(out_interval / dt) : nsteps;
    if (every < 1) every = 1;
    for (long i = 1; i <= nsteps; ++i) {
        step_rk4(sys, dt);
        if (i % every == 0 || i == nsteps) emit(sys);
    }
}

} // namespace elax
