#include "selfinv/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace selfinv {

namespace {

struct HornerResult {
    ComplexDouble value;
    ComplexDouble derivative;
};

HornerResult horner(const std::vector<ComplexDouble>& c, ComplexDouble z) {
    ComplexDouble p = c[0];
    ComplexDouble dp = 0.0;
    for (std::size_t k = 1; k < c.size(); ++k) {
        dp = dp * z + p;
        p = p * z + c[k];
    }
    return {p, dp};
}

bool pairs_up(ComplexDouble a, ComplexDouble b, double tol) {
    // a = 1/conj(b)  <=>  a conj(b) = 1
    return std::abs(a * std::conj(b) - 1.0) <= tol * (1.0 + std::norm(a));
}

}  // namespace

RootSet find_roots(const std::vector<ComplexDouble>& coeffs, const RootOptions& options) {
    if (coeffs.size() < 2) {
        throw std::invalid_argument("find_roots: degree must be at least 1");
    }
    if (coeffs.front() == ComplexDouble(0.0)) {
        throw std::invalid_argument("find_roots: leading coefficient is zero");
    }
    const std::size_t degree = coeffs.size() - 1;
    const double degree_d = static_cast<double>(degree);

    std::vector<ComplexDouble> monic(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) monic[k] = coeffs[k] / coeffs.front();

    RootSet out;
    out.roots.resize(degree);
    if (degree == 1) {
        out.roots[0] = -monic[1];
        out.converged = true;
    } else {
        double radius = 0.0;
        for (std::size_t k = 1; k <= degree; ++k) {
            radius = std::max(radius, std::pow(std::abs(monic[k]), 1.0 / static_cast<double>(k)));
        }
        if (radius == 0.0) radius = 1.0;
        const ComplexDouble center = -monic[1] / degree_d;
        for (std::size_t k = 0; k < degree; ++k) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / degree_d +
                                 options.start_angle;
            out.roots[k] = center + std::polar(radius, angle);
        }

        for (out.sweeps = 1; out.sweeps <= options.max_sweeps; ++out.sweeps) {
            double max_update = 0.0;
            for (std::size_t k = 0; k < degree; ++k) {
                ComplexDouble& z = out.roots[k];
                const auto [p, dp] = horner(monic, z);
                if (p == ComplexDouble(0.0)) continue;
                const ComplexDouble ratio = p / dp;
                ComplexDouble repulsion = 0.0;
                for (std::size_t j = 0; j < degree; ++j) {
                    if (j != k) repulsion += 1.0 / (z - out.roots[j]);
                }
                const ComplexDouble step = ratio / (1.0 - ratio * repulsion);
                if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
                z -= step;
                max_update = std::max(max_update, std::abs(step) / std::max(1.0, std::abs(z)));
            }
            if (max_update < options.update_tol) {
                out.converged = true;
                break;
            }
        }
        out.sweeps = std::min(out.sweeps, options.max_sweeps);
    }

    double max_coeff = 0.0;
    for (const auto& c : coeffs) max_coeff = std::max(max_coeff, std::abs(c));
    const double bound = 1e-8 * (1.0 + max_coeff);
    bool within_bound = true;
    out.residuals.reserve(degree);
    for (const auto& z : out.roots) {
        const double scale = std::pow(std::max(1.0, std::abs(z)), degree_d);
        const double r = std::abs(horner(coeffs, z).value) / scale;
        out.residuals.push_back(r);
        within_bound = within_bound && r <= bound;
    }
    if (!out.converged && !within_bound) {
        throw ConvergenceError("find_roots: Aberth iteration did not converge");
    }

    const auto cls = classify_roots(out.roots, options.classify_tol);
    out.circle_count = static_cast<int>(cls.on_circle.size());
    out.pair_count = static_cast<int>(cls.symmetric_pairs.size());
    return out;
}

RootClassification classify_roots(const std::vector<ComplexDouble>& roots, double tol) {
    RootClassification out;
    std::vector<std::size_t> off_circle;
    for (std::size_t k = 0; k < roots.size(); ++k) {
        if (std::abs(std::abs(roots[k]) - 1.0) <= tol) out.on_circle.push_back(k);
        else off_circle.push_back(k);
    }
    std::vector<bool> used(roots.size(), false);
    for (std::size_t a = 0; a < off_circle.size(); ++a) {
        const std::size_t i = off_circle[a];
        if (used[i]) continue;
        // nearest partner among the remaining off-circle roots
        std::size_t best = roots.size();
        double best_err = 0.0;
        for (std::size_t b = a + 1; b < off_circle.size(); ++b) {
            const std::size_t j = off_circle[b];
            if (used[j] || !pairs_up(roots[i], roots[j], tol)) continue;
            const double err = std::abs(roots[i] * std::conj(roots[j]) - 1.0);
            if (best == roots.size() || err < best_err) {
                best = j;
                best_err = err;
            }
        }
        if (best == roots.size()) {
            out.unpaired.push_back(i);
        } else {
            used[i] = used[best] = true;
            out.symmetric_pairs.emplace_back(i, best);
        }
    }
    for (std::size_t i : out.on_circle) {
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (i != j && pairs_up(roots[i], roots[j], tol) && std::abs(roots[i] - roots[j]) > tol) {
                ++out.ambiguous;
                break;
            }
        }
    }
    return out;
}

}  // namespace selfinv
