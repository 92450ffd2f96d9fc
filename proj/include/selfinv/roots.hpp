#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "selfinv/numeric.hpp"

namespace selfinv {

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RootSet {
    std::vector<ComplexDouble> roots;
    /// |p(z)| / max(1, |z|)^N per root.
    std::vector<double> residuals;
    int circle_count = 0;
    int pair_count = 0;
    bool converged = false;
    int sweeps = 0;
};

struct RootOptions {
    int max_sweeps = 200;
    double update_tol = 1e-13;
    /// Angular offset of the initial circle; vary it to restart.
    double start_angle = 0.4;
    /// Tolerance used for circle_count / pair_count.
    double classify_tol = 1e-8;
};

/// All roots of sum_k coeffs[k] z^{N-k} (leading coefficient first) by Aberth-Ehrlich
/// iteration. Throws std::invalid_argument for a zero leading coefficient or
/// degree 0; throws ConvergenceError when the sweeps run out and the residual
/// bound 1e-8 (1 + max|c_k|) is not met.
RootSet find_roots(const std::vector<ComplexDouble>& coeffs, const RootOptions& options = {});

struct RootClassification {
    std::vector<std::size_t> on_circle;
    std::vector<std::pair<std::size_t, std::size_t>> symmetric_pairs;
    std::vector<std::size_t> unpaired;
    /// Circle roots that could also have been paired off-circle.
    int ambiguous = 0;
};

/// Splits roots into unit-circle roots, (t, 1/conj t) pairs and leftovers.
RootClassification classify_roots(const std::vector<ComplexDouble>& roots, double tol = 1e-8);

}  // namespace selfinv
