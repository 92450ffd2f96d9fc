#pragma once

#include <utility>
#include <vector>

#include "selfinv/numeric.hpp"

namespace selfinv {

/// Coefficient layout of a self-inversive form.
///
/// A: f(T,U) = sum_j (-1)^j zeta_j T^{n+1-j} U^j with zeta_k = conj(zeta_{n+1-k}).
/// B: p(T,U) = sum_j zeta_j T^{n+1-j} U^j with zeta_k = conj(zeta_{n+1-k}) for even n
///    and zeta_k = -conj(zeta_{n+1-k}) for odd n.
enum class SpaceTag { A, B };

/// Degree-(n+1) complex binary form stored by its zeta sequence (n+2 entries).
/// Symmetry is not enforced on construction; use validate().
struct SelfInversiveForm {
    int n = 0;
    SpaceTag space = SpaceTag::A;
    std::vector<GaussianRational> zeta;

    SelfInversiveForm() = default;
    SelfInversiveForm(int degree_param, SpaceTag tag, std::vector<GaussianRational> coefficients);

    int degree() const { return n + 1; }
    bool is_monic() const;

    /// Coefficient of T^{n+1-j} U^j once the space's sign layout is applied.
    std::vector<GaussianRational> signed_coefficients() const;

    friend bool operator==(const SelfInversiveForm&, const SelfInversiveForm&) = default;
};

/// Real binary form sum_j a_j X^{n+1-j} Y^j.
struct RealBinaryForm {
    int n = 0;
    std::vector<Rational> coeffs;

    RealBinaryForm() = default;
    RealBinaryForm(int degree_param, std::vector<Rational> coefficients);

    int degree() const { return n + 1; }

    friend bool operator==(const RealBinaryForm&, const RealBinaryForm&) = default;
};

/// Self-inversive form with floating-point zeta, produced by sampling and normalization.
struct FloatForm {
    int n = 0;
    SpaceTag space = SpaceTag::A;
    std::vector<ComplexDouble> zeta;

    FloatForm() = default;
    FloatForm(int degree_param, SpaceTag tag, std::vector<ComplexDouble> coefficients);
};

/// Exact symmetry check for the form's (space, parity of n) class.
bool validate(const SelfInversiveForm& form);

/// Exact value of the homogeneous form at (T,U).
GaussianRational evaluate(const SelfInversiveForm& form, const GaussianRational& t,
                          const GaussianRational& u);
/// Exact value of the homogeneous form at (X,Y).
GaussianRational evaluate(const RealBinaryForm& form, const GaussianRational& x,
                          const GaussianRational& y);

/// Product of two forms in the same space. The result stays in that space's layout.
SelfInversiveForm multiply(const SelfInversiveForm& lhs, const SelfInversiveForm& rhs);

/// Exact binary-to-rational conversion of every coefficient.
SelfInversiveForm rationalize(const FloatForm& form);
FloatForm to_float(const SelfInversiveForm& form);

/// Monic A-form whose dehomogenization is prod_j (T - roots_j), i.e. zeta_j = e_j(roots).
FloatForm form_from_roots(const std::vector<ComplexDouble>& roots);

/// Projects zeta onto the space's symmetry (pairs averaged, the middle entry made
/// real or imaginary as required).
FloatForm symmetrize(const FloatForm& form);

/// Univariate dehomogenization f(T,1) as complex coefficients, leading first.
std::vector<ComplexDouble> univariate(const SelfInversiveForm& form);
std::vector<ComplexDouble> univariate(const RealBinaryForm& form);

}  // namespace selfinv
