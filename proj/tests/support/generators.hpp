#pragma once

// Deterministic random inputs for property and acceptance tests.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "selfinv/forms.hpp"

namespace selfinv::testing {

using Rng = std::mt19937_64;

/// p/q with |p| <= bound, 1 <= q <= bound.
inline Rational random_rational(Rng& rng, int bound = 10) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    return {BigInt(num(rng)), BigInt(den(rng))};
}

inline GaussianRational random_gaussian(Rng& rng, int bound = 10) {
    return {random_rational(rng, bound), random_rational(rng, bound)};
}

/// Valid form in the given space. `monic` pins zeta_0 = zeta_{n+1} = 1
/// (only meaningful where the symmetry allows it: A, or B with even n).
inline SelfInversiveForm random_form(Rng& rng, int n, SpaceTag space, bool monic, int bound = 10) {
    const bool anti = space == SpaceTag::B && n % 2 == 1;
    std::vector<GaussianRational> zeta(static_cast<std::size_t>(n) + 2);
    const int last = n + 1;
    for (int k = 0; k <= last / 2; ++k) {
        const int mirror = last - k;
        if (k == mirror) {
            const Rational v = random_rational(rng, bound);
            zeta[k] = anti ? GaussianRational(Rational(0), v) : GaussianRational(v);
        } else {
            zeta[k] = random_gaussian(rng, bound);
            zeta[mirror] = anti ? -conj(zeta[k]) : conj(zeta[k]);
        }
    }
    if (monic) {
        zeta.front() = GaussianRational(1);
        zeta.back() = GaussianRational(1);
    }
    return {n, space, std::move(zeta)};
}

inline SelfInversiveForm random_monic_a(Rng& rng, int n, int bound = 10) {
    return random_form(rng, n, SpaceTag::A, true, bound);
}

inline RealBinaryForm random_real(Rng& rng, int n, int bound = 10) {
    std::vector<Rational> coeffs;
    for (int j = 0; j < n + 2; ++j) coeffs.push_back(random_rational(rng, bound));
    return {n, std::move(coeffs)};
}

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// n+1 sorted distinct angles with sum 0 and span below 2 pi, i.e. an interior
/// point of the simplex. Minimum separation keeps the sample away from its boundary.
inline std::vector<double> random_simplex_angles(Rng& rng, int n, double min_gap = 1e-3) {
    const double period = 2.0 * std::numbers::pi;
    for (;;) {
        std::vector<double> gaps(static_cast<std::size_t>(n) + 2);
        double total = 0.0;
        for (auto& g : gaps) {
            g = -std::log(uniform(rng, 1e-12, 1.0));
            total += g;
        }
        std::vector<double> angles;
        double acc = 0.0;
        bool ok = true;
        for (int k = 0; k <= n; ++k) {
            if (gaps[k] / total * period < min_gap) ok = false;
            acc += gaps[k] / total * period;
            angles.push_back(acc);
        }
        if (gaps.back() / total * period < min_gap) ok = false;
        if (!ok) continue;
        double mean = 0.0;
        for (double a : angles) mean += a;
        mean /= static_cast<double>(angles.size());
        for (double& a : angles) a -= mean;
        // exact cancellation of the floating residue on the last entry
        double rest = 0.0;
        for (std::size_t k = 0; k + 1 < angles.size(); ++k) rest += angles[k];
        angles.back() = -rest;
        return angles;
    }
}

}  // namespace selfinv::testing
