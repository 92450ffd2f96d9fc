#pragma once

#include <optional>
#include <vector>

#include "selfinv/forms.hpp"

namespace selfinv {

enum class Parity { even, odd };

inline Parity parity_of(int n) { return n % 2 == 0 ? Parity::even : Parity::odd; }

/// A -> F: substitute T = i(X+iY), U = i(X-iY) and expand.
/// Throws ValidationError for a non-A or asymmetric input.
RealBinaryForm phi(const SelfInversiveForm& form);

/// F -> A: substitute X = -(i/2)(T+U), Y = -(1/2)(T-U).
SelfInversiveForm phi_inverse(const RealBinaryForm& g);

/// B -> F: T = X+iY, U = X-iY for even n. For odd n the substitution carries
/// eps = e^{pi i/(2(n+1))}; since eps^{n+1} = i the result is i * p(X+iY, X-iY),
/// computed exactly.
RealBinaryForm psi(const SelfInversiveForm& form);

/// F -> B. Throws std::invalid_argument when the parity does not match g.n.
SelfInversiveForm psi_inverse(const RealBinaryForm& g, Parity parity);

/// Phi through the binomial-sum closed form for the coefficients a_k.
RealBinaryForm phi_closed_form(const SelfInversiveForm& form);

struct NormalizedForm {
    FloatForm form;
    double scale = 1.0;          // r with zeta_0 = (r e^{i theta})^{n+1}
    double angle = 0.0;          // theta
    ComplexDouble rotation{1.0}; // e^{i theta}
};

/// Rotation-scaling Z -> r e^{i theta} Z making zeta_0 = zeta_{n+1} = 1.
/// `branch` selects the (n+1)-th root: theta = (arg zeta_0 + 2 pi branch)/(n+1).
/// Throws PreconditionError when zeta_0 = 0.
NormalizedForm normalize_monic(const FloatForm& form, int branch = 0);

/// Exact division of a monic A-form by (T-U). Throws PreconditionError when
/// f(1,1) != 0, the input is not monic A, or n = 0.
SelfInversiveForm deflate(const SelfInversiveForm& form);

struct Deflation {
    int count = 0;
    /// Cofactor after removing (T-U)^count; empty when everything was removed
    /// (the constant form 1).
    std::optional<SelfInversiveForm> remainder;
};

/// Repeatedly deflates while the form vanishes at (1:1).
Deflation deflate_all(const SelfInversiveForm& form);

struct RootPair {
    ComplexDouble t;
    ComplexDouble x;
    bool at_infinity = false;
    bool real = false;  // | |t| - 1 | <= tol
};

/// Moebius map x = i(t+1)/(t-1) applied to projective roots (t:1).
std::vector<RootPair> map_roots(const std::vector<ComplexDouble>& roots_t, double tol = 1e-8,
                                double infinity_tol = 1e-12);

}  // namespace selfinv
