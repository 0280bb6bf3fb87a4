#pragma once

#include <fftw3.h>

#include <mutex>
#include <vector>

#include "qca/common.hpp"

namespace qca {
namespace detail {

inline std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

/// In-place c2c transform over a row-major multi-dimensional array of
/// `components`-interleaved complex values, unitary normalization.
/// FFTW_FORWARD carries e^{-i k x} (position -> momentum). Plans are
/// created with FFTW_ESTIMATE, which is deterministic for a given shape;
/// planning is serialized because the FFTW planner is not thread-safe.
inline void dft_inplace(std::vector<cplx>& data, const std::vector<int>& dims,
                        int components, int sign) {
    int64_t npts = 1;
    for (int d : dims) npts *= d;
    if (npts * components != static_cast<int64_t>(data.size()))
        throw PhysicsError("dft: buffer size does not match grid");

    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        plan = fftw_plan_many_dft(static_cast<int>(dims.size()), dims.data(), components,
                                  buf, nullptr, components, 1,
                                  buf, nullptr, components, 1,
                                  sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    }
    if (!plan) throw PhysicsError("dft: fftw plan creation failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(npts));
    for (auto& z : data) z *= scale;
}

} // namespace detail
} // namespace qca
