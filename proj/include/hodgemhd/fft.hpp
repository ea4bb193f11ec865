#pragma once

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include <fftw3.h>

#include "hodgemhd/torus_grid.hpp"

namespace hodgemhd {

/// Cached FFTW plans for the rank-n complex transform of one grid shape.
/// Plans are created with FFTW_ESTIMATE (deterministic algorithm choice, so
/// outputs are reproducible run to run) and FFTW_UNALIGNED (usable on any
/// std::vector buffer through the new-array execute interface).
class FftPlans {
public:
    FftPlans(int rank, int N) {
        std::vector<int> dims(rank, N);
        std::size_t total = 1;
        for (int i = 0; i < rank; ++i) total *= std::size_t(N);
        scratch_.resize(total);
        auto* p = reinterpret_cast<fftw_complex*>(scratch_.data());
        fwd_ = fftw_plan_dft(rank, dims.data(), p, p, FFTW_FORWARD,
                             FFTW_ESTIMATE | FFTW_UNALIGNED);
        bwd_ = fftw_plan_dft(rank, dims.data(), p, p, FFTW_BACKWARD,
                             FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!fwd_ || !bwd_) throw std::runtime_error("FftPlans: fftw planning failed");
    }

    ~FftPlans() {
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
    }

    FftPlans(const FftPlans&) = delete;
    FftPlans& operator=(const FftPlans&) = delete;

    void forward_inplace(std::complex<double>* data) const {
        auto* p = reinterpret_cast<fftw_complex*>(data);
        fftw_execute_dft(fwd_, p, p);
    }
    void backward_inplace(std::complex<double>* data) const {
        auto* p = reinterpret_cast<fftw_complex*>(data);
        fftw_execute_dft(bwd_, p, p);
    }

    static const FftPlans& get(const TorusGrid& g) {
        static std::mutex mtx;
        static std::map<std::pair<int, int>, std::unique_ptr<FftPlans>> cache;
        std::lock_guard<std::mutex> lock(mtx);
        auto& slot = cache[{g.n, g.N}];
        if (!slot) slot = std::make_unique<FftPlans>(g.n, g.N);
        return *slot;
    }

private:
    std::vector<std::complex<double>> scratch_;
    fftw_plan fwd_ = nullptr;
    fftw_plan bwd_ = nullptr;
};

} // namespace hodgemhd
