#pragma once

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include <fftw3.h>

#include "elax/errors.hpp"
#include "elax/grid.hpp"

namespace elax {

/// Complex-to-complex FFT pair for one grid, planned once and shared.
/// Plans are created with FFTW_ESTIMATE (deterministic algorithm choice,
/// so identical inputs give bit-identical outputs across runs) and
/// FFTW_UNALIGNED (execute on arbitrary caller buffers).
///
/// forward(): physical values -> normalized coefficients (divides by N^d).
/// inverse(): coefficients -> physical values (plain e^{+ik.x} sum).
/// Plans are immutable after construction; execution on distinct buffers
/// is safe from multiple threads.
class Transformer {
public:
    static const Transformer& get(const GridSpec& grid) {
        static std::mutex mu;
        static std::map<std::pair<int, int>, std::unique_ptr<Transformer>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(grid.dim, grid.n);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, std::unique_ptr<Transformer>(new Transformer(grid))).first;
        return *it->second;
    }

    void forward(std::span<const std::complex<double>> phys,
                 std::span<std::complex<double>> coeffs) const {
        exec(fwd_, phys, coeffs);
        const double scale = 1.0 / static_cast<double>(npoints_);
        for (auto& v : coeffs) v *= scale;
    }

    void inverse(std::span<const std::complex<double>> coeffs,
                 std::span<std::complex<double>> phys) const {
        exec(bwd_, coeffs, phys);
    }

    std::size_t points() const { return npoints_; }

    Transformer(const Transformer&) = delete;
    Transformer& operator=(const Transformer&) = delete;

    ~Transformer() {
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
    }

private:
    explicit Transformer(const GridSpec& grid) : npoints_(grid.points()) {
        std::vector<std::complex<double>> a(npoints_), b(npoints_);
        int dims[3] = {grid.n, grid.n, grid.n};
        const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
        fwd_ = fftw_plan_dft(grid.dim, dims,
                             reinterpret_cast<fftw_complex*>(a.data()),
                             reinterpret_cast<fftw_complex*>(b.data()),
                             FFTW_FORWARD, flags);
        bwd_ = fftw_plan_dft(grid.dim, dims,
                             reinterpret_cast<fftw_complex*>(a.data()),
                             reinterpret_cast<fftw_complex*>(b.data()),
                             FFTW_BACKWARD, flags);
        if (!fwd_ || !bwd_)
            throw ConfigError("FFT planning failed for n=" + std::to_string(grid.n));
    }

    void exec(fftw_plan p, std::span<const std::complex<double>> in,
              std::span<std::complex<double>> out) const {
        if (in.size() != npoints_ || out.size() != npoints_)
            throw UsageError("Transformer: buffer size mismatch");
        // fftw_execute_dft does not modify the input for out-of-place c2c plans
        fftw_execute_dft(p,
                         reinterpret_cast<fftw_complex*>(
                             const_cast<std::complex<double>*>(in.data())),
                         reinterpret_cast<fftw_complex*>(out.data()));
    }

    std::size_t npoints_;
    fftw_plan fwd_ = nullptr;
    fftw_plan bwd_ = nullptr;
};

} // namespace elax
