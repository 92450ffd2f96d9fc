#include "selfinv/disc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "selfinv/roots.hpp"
#include "selfinv/transform.hpp"

namespace selfinv {

namespace {

Rational power_of_two(int exponent) {
    BigInt v(1);
    v <<= exponent;
    return Rational(v, 1);
}

const SelfInversiveForm& require_monic(const SelfInversiveForm& form, const char* what) {
    if (!form.is_monic()) {
        throw PreconditionError(std::string(what) + ": form is not monic (zeta_0 = zeta_{n+1} = 1)");
    }
    if (!validate(form)) {
        throw ValidationError(std::string(what) + ": zeta violates the coefficient symmetry");
    }
    return form;
}

/// The A-form whose H_n stands in for the input (B-forms with even n via b_to_a).
SelfInversiveForm hankel_source(const SelfInversiveForm& form, const char* what) {
    require_monic(form, what);
    if (form.space == SpaceTag::A) return form;
    return b_to_a_coefficients(form);
}

Rational real_determinant(const SelfInversiveForm& a_form, const char* what) {
    const GaussianRational det = det_exact(build_hankel(power_sums(a_form)));
    if (!det.is_real()) {
        throw ValidationError(std::string(what) + ": det H_n has a nonzero imaginary part");
    }
    return det.re();
}

int circle_root_count(const SelfInversiveForm& form, double tol) {
    RootOptions options;
    options.classify_tol = tol;
    return find_roots(univariate(form), options).circle_count;
}

}  // namespace

GaussianRational det_exact(const HankelMatrix& m) { return bareiss_determinant(m.entries); }

GaussianRational hankel_determinant(const SelfInversiveForm& form) {
    return det_exact(build_hankel(power_sums(form)));
}

Rational dis_via_hankel(const SelfInversiveForm& form) {
    const SelfInversiveForm source = hankel_source(form, "dis_via_hankel");
    return power_of_two(form.n * (form.n + 1)) * real_determinant(source, "dis_via_hankel");
}

Rational dis_via_resultant(const RealBinaryForm& g) {
    const auto& a = g.coeffs;
    if (a.front().is_zero()) {
        throw PreconditionError("dis_via_resultant: leading coefficient c_0 is zero");
    }
    const std::size_t degree = a.size() - 1;  // N = n + 1
    std::vector<Rational> derivative(degree);
    for (std::size_t j = 0; j < degree; ++j) derivative[j] = a[j] * Rational(static_cast<long>(degree - j));

    // Sylvester matrix: N-1 shifted rows of g, then N shifted rows of g'.
    const std::size_t size = 2 * degree - 1;
    Matrix<Rational> sylvester(size, size);
    for (std::size_t r = 0; r + 1 < degree; ++r) {
        for (std::size_t j = 0; j <= degree; ++j) sylvester(r, r + j) = a[j];
    }
    for (std::size_t r = 0; r < degree; ++r) {
        for (std::size_t j = 0; j < degree; ++j) sylvester(degree - 1 + r, r + j) = derivative[j];
    }
    const Rational resultant = bareiss_determinant(std::move(sylvester));
    const bool flip = ((degree * (degree - 1) / 2) % 2) == 1;
    const Rational dis = resultant / a.front();
    return flip ? -dis : dis;
}

RealBinaryForm real_image(const SelfInversiveForm& form) {
    return form.space == SpaceTag::A ? phi(form) : psi(form);
}

Rational leading_real_coefficient(const SelfInversiveForm& form) {
    return real_image(form).coeffs.front();
}

CircleRootReport classify_circle_roots(const SelfInversiveForm& form, double tol) {
    const SelfInversiveForm source = hankel_source(form, "classify_circle_roots");
    CircleRootReport out;
    const Deflation deflation = deflate_all(source);
    out.deflations = deflation.count;
    if (deflation.count > 1) {
        throw PreconditionError("classify_circle_roots: repeated root at (1:1)");
    }
    if (!deflation.remainder) {
        out.k = 1;
        out.det_h = Rational(1);
        out.sign = 1;
        out.consistent = true;
        return out;
    }
    const SelfInversiveForm& rest = *deflation.remainder;
    out.det_h = real_determinant(rest, "classify_circle_roots");
    out.sign = out.det_h.sign();
    if (out.sign == 0) {
        throw PreconditionError("classify_circle_roots: zero discriminant, roots are not distinct");
    }
    RootOptions options;
    options.classify_tol = tol;
    const RootSet roots = find_roots(univariate(rest), options);
    out.ambiguous = classify_roots(roots.roots, tol).ambiguous;
    out.k = roots.circle_count + deflation.count;
    const int off_circle = form.n + 1 - out.k;
    if (off_circle >= 0 && off_circle % 2 == 0) {
        const int expected = (off_circle / 2) % 2 == 0 ? 1 : -1;
        out.consistent = out.sign == expected;
    }
    return out;
}

FloatForm sample_w(const std::vector<double>& angles) {
    if (angles.empty()) {
        throw PreconditionError("sample_w: need at least one angle");
    }
    double sum = 0.0;
    for (double a : angles) {
        if (!std::isfinite(a)) throw PreconditionError("sample_w: angles must be finite");
        sum += a;
    }
    if (std::abs(sum) > 1e-12) {
        throw PreconditionError("sample_w: angles must sum to 0");
    }
    const double period = 2.0 * std::numbers::pi;
    std::vector<double> reduced;
    reduced.reserve(angles.size());
    for (double a : angles) {
        double r = std::fmod(a, period);
        if (r < 0) r += period;
        reduced.push_back(r);
    }
    std::sort(reduced.begin(), reduced.end());
    for (std::size_t k = 0; k < reduced.size(); ++k) {
        const double gap = (k + 1 < reduced.size()) ? reduced[k + 1] - reduced[k]
                                                    : reduced.front() + period - reduced[k];
        if (reduced.size() > 1 && gap <= 1e-12) {
            throw PreconditionError("sample_w: repeated angles lie on the boundary of the simplex");
        }
    }

    std::vector<ComplexDouble> roots;
    roots.reserve(angles.size());
    for (double a : angles) roots.push_back(std::polar(1.0, a));
    FloatForm out = symmetrize(form_from_roots(roots));
    out.zeta.front() = 1.0;
    out.zeta.back() = 1.0;
    return out;
}

DiscriminantReport discriminant_report(const SelfInversiveForm& form, const DiscOptions& options) {
    require_monic(form, "disc");
    DiscriminantReport report;
    SelfInversiveForm work = form;
    if (options.deflate) {
        if (form.space != SpaceTag::A) {
            throw PreconditionError("disc: deflation is defined for A-forms only");
        }
        const Deflation deflation = deflate_all(form);
        report.deflations = deflation.count;
        if (!deflation.remainder) {
            report.degenerate = true;
            report.dis = Rational(1);
            report.det_h = Rational(1);
            report.sign = 1;
            return report;
        }
        work = *deflation.remainder;
    } else if (leading_real_coefficient(form).is_zero()) {
        throw PreconditionError("disc: c_0 = 0; rerun with deflation to strip (T-U)^k");
    }

    if (work.space == SpaceTag::B && work.n % 2 != 0) {
        throw PreconditionError("disc: B-forms are supported for even n only");
    }
    const SelfInversiveForm source = hankel_source(work, "disc");
    report.det_h = real_determinant(source, "disc");
    report.sign = report.det_h.sign();
    const Rational scaled = power_of_two(work.n * (work.n + 1)) * report.det_h;
    if (options.oracle) {
        report.dis = dis_via_resultant(real_image(work));
        report.scale_check = report.dis == scaled;
    } else {
        report.dis = scaled;
    }
    if (report.sign != 0 && report.deflations <= 1) {
        report.k = circle_root_count(work, options.tol) + report.deflations;
    }
    return report;
}

}  // namespace selfinv
