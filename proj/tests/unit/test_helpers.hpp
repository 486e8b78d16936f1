#pragma once

#include <cmath>
#include <functional>

#include "elax/spectral.hpp"

namespace elax::test {

/// Field from a pointwise function of (x, y) on the collocation grid.
inline FourierField field_from_fn_2d(const GridSpec& g,
                                     const std::function<Complex(double, double)>& fn) {
    PhysBuffer phys(g.points());
    const int n = g.n;
    for (int i = 0; i < n; ++i) {
        const double x = 2.0 * M_PI * i / n;
        for (int j = 0; j < n; ++j) {
            const double y = 2.0 * M_PI * j / n;
            phys[g.flat2(i, j)] = fn(x, y);
        }
    }
    FourierField f = FourierField::scalar(g);
    from_physical(phys, f);
    return f;
}

inline FourierField field_from_fn_3d(const GridSpec& g,
                                     const std::function<Complex(double, double, double)>& fn) {
    PhysBuffer phys(g.points());
    const int n = g.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
                phys[g.flat3(i, j, l)] =
                    fn(2.0 * M_PI * i / n, 2.0 * M_PI * j / n, 2.0 * M_PI * l / n);
    FourierField f = FourierField::scalar(g);
    from_physical(phys, f);
    return f;
}

inline double rel_l2_error(const FourierField& got, const FourierField& want) {
    const double scale = l2_norm(want);
    FourierField d = got - want;
    return scale > 0.0 ? l2_norm(d) / scale : l2_norm(d);
}

} // namespace elax::test
