#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace percmap {

// Scaling constants for the rescaled exploration word and interface process.
// kWalkTimeRate steps of the word correspond to one unit of walk time, and
// displacements shrink by kWalkSpaceNorm * sqrt(time). The interface clock
// runs at kInterfaceTimeRate * n^{3/4} and metric distances at kMetricNorm *
// n^{1/4}.
inline const double kWalkTimeRate = 3.0;
inline const double kWalkSpaceNorm = std::sqrt(1.5);
inline const double kMetricNorm = std::pow(2.0 / 3.0, 0.25);
inline const double kInterfaceTimeRate = 6.0 * std::pow(1.5, 0.75);

// Per-step increment covariance of the exploration word under its critical
// law: Var(dL) = Var(dR) = 2/3, Cov(dL, dR) = 1/3, so the increment
// correlation is 1/2.
inline constexpr double kStepVariance = 2.0 / 3.0;
inline constexpr double kStepCovariance = 1.0 / 3.0;

// Partition sums over loopless triangulations with simple boundary, weighted
// (2/27)^{#inner vertices}. For boundary length l >= 2:
//
//   partition(l) = (2l-4)! / ((l-2)! l!) * (9/4)^{l-1},
//
// so partition(2) = 9/8, partition(3) = 27/16, and successive ratios are
// partition(l+1)/partition(l) = 9(2l-3) / (2(l+1)).
//
// partition(l) grows like 9^l * l^{-5/2}, which overflows double around
// l ~ 300, so we store the scaled sequence w(l) = partition(l) * 9^{-l}
// with w(l+1)/w(l) = (2l-3)/(2(l+1)) and w(2) = 1/72. All sampler
// probabilities are ratios in which the 9^l factors cancel.
struct BoundaryWeights {
    std::vector<double> w;

    BoundaryWeights() : w{0.0, 0.0, 1.0 / 72.0} {}

    void ensure(std::size_t lmax) {
        while (w.size() <= lmax) {
            std::size_t l = w.size() - 1;
            w.push_back(w.back() * static_cast<double>(2 * l - 3) /
                        static_cast<double>(2 * (l + 1)));
        }
    }

    // w(l) = partition(l) * 9^{-l}
    double scaled(int l) {
        ensure(static_cast<std::size_t>(l));
        return w[static_cast<std::size_t>(l)];
    }

    // partition(l+1)/partition(l)
    double ratio(int l) {
        return 9.0 * scaled(l + 1) / scaled(l);
    }

    // partition(l) itself; only safe for moderate l (overflow near l ~ 300).
    double partition(int l) {
        return scaled(l) * std::pow(9.0, l);
    }
};

}  // namespace percmap
