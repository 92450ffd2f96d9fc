#pragma once

#include <optional>
#include <vector>

#include "selfinv/forms.hpp"
#include "selfinv/symfunc.hpp"

namespace selfinv {

/// Exact determinant via Bareiss elimination over Q(i).
GaussianRational det_exact(const HankelMatrix& m);

/// det H_n of a monic A-form, or det K_n of a monic B-form with even n.
GaussianRational hankel_determinant(const SelfInversiveForm& form);

/// 2^{n(n+1)} det H_n. B-forms (even n) go through b_to_a_coefficients.
/// Throws PreconditionError for non-monic input, ValidationError for broken symmetry
/// or a determinant with a nonzero imaginary part.
Rational dis_via_hankel(const SelfInversiveForm& form);

/// c_0^{2n} prod_{j<k} (x_j - x_k)^2 over the roots of g(X,1), computed as
/// (-1)^{N(N-1)/2} Res(g, g') / c_0 with N = n+1 and a Sylvester matrix resultant.
/// Throws PreconditionError when c_0 = 0.
Rational dis_via_resultant(const RealBinaryForm& g);

/// Image of a form in F: phi for A-forms, psi for B-forms.
RealBinaryForm real_image(const SelfInversiveForm& form);

/// Leading coefficient c_0 of the real image.
Rational leading_real_coefficient(const SelfInversiveForm& form);

struct CircleRootReport {
    int k = 0;                 // roots on |t| = 1, including removed (T-U) factors
    bool consistent = false;   // sgn det H_n == (-1)^{(n+1-k)/2}
    int deflations = 0;
    int sign = 0;
    Rational det_h;            // determinant of the (deflated) form
    int ambiguous = 0;
};

/// Counts unit-circle roots numerically and checks the sign law of det H_n.
/// A single (T-U) factor is deflated first. Throws PreconditionError when the roots
/// are not distinct (zero determinant or a repeated root at (1:1)).
CircleRootReport classify_circle_roots(const SelfInversiveForm& form, double tol = 1e-8);

/// Monic A-form with zeta_j = e_j(e^{i theta_1}, ..., e^{i theta_{n+1}}), made exactly
/// symmetric. Throws PreconditionError when the angles do not sum to 0 (within 1e-12)
/// or two of them coincide modulo 2 pi.
FloatForm sample_w(const std::vector<double>& angles);

struct DiscriminantReport {
    Rational dis;
    Rational det_h;
    std::optional<bool> scale_check;  // set when the resultant oracle ran
    int sign = 0;
    std::optional<int> k;             // unit-circle root count when the roots are distinct
    int deflations = 0;
    bool degenerate = false;          // everything deflated away; dis and det_h are 1
};

struct DiscOptions {
    bool oracle = false;
    bool deflate = false;
    double tol = 1e-8;
};

/// Discriminant of a monic form. Without `deflate`, c_0 = 0 throws PreconditionError.
DiscriminantReport discriminant_report(const SelfInversiveForm& form, const DiscOptions& options = {});

}  // namespace selfinv
