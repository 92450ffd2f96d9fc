#include "selfinv/forms.hpp"

#include <stdexcept>
#include <string>

namespace selfinv {

namespace {

void check_length(int n, std::size_t size) {
    if (n < 0) {
        throw std::invalid_argument("degree parameter n must be nonnegative");
    }
    if (size != static_cast<std::size_t>(n) + 2) {
        throw std::invalid_argument("expected " + std::to_string(n + 2) + " coefficients, got " +
                                    std::to_string(size));
    }
}

template <class Scalar, class Point>
Point horner_homogeneous(const std::vector<Scalar>& coeffs, const Point& a, const Point& b) {
    // sum_j c_j a^{d-j} b^j
    Point value(0);
    Point b_power(1);
    std::vector<Point> b_powers;
    b_powers.reserve(coeffs.size());
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        b_powers.push_back(b_power);
        b_power *= b;
    }
    Point a_power(1);
    for (std::size_t j = coeffs.size(); j-- > 0;) {
        value += Point(coeffs[j]) * a_power * b_powers[j];
        a_power *= a;
    }
    return value;
}

}  // namespace

SelfInversiveForm::SelfInversiveForm(int degree_param, SpaceTag tag,
                                     std::vector<GaussianRational> coefficients)
    : n(degree_param), space(tag), zeta(std::move(coefficients)) {
    check_length(n, zeta.size());
}

bool SelfInversiveForm::is_monic() const {
    return zeta.front() == GaussianRational(1) && zeta.back() == GaussianRational(1);
}

std::vector<GaussianRational> SelfInversiveForm::signed_coefficients() const {
    std::vector<GaussianRational> out = zeta;
    if (space == SpaceTag::A) {
        for (std::size_t j = 1; j < out.size(); j += 2) out[j] = -out[j];
    }
    return out;
}

RealBinaryForm::RealBinaryForm(int degree_param, std::vector<Rational> coefficients)
    : n(degree_param), coeffs(std::move(coefficients)) {
    check_length(n, coeffs.size());
}

FloatForm::FloatForm(int degree_param, SpaceTag tag, std::vector<ComplexDouble> coefficients)
    : n(degree_param), space(tag), zeta(std::move(coefficients)) {
    check_length(n, zeta.size());
}

bool validate(const SelfInversiveForm& form) {
    if (form.n < 0 || form.zeta.size() != static_cast<std::size_t>(form.n) + 2) return false;
    const bool anti = form.space == SpaceTag::B && form.n % 2 == 1;
    const std::size_t last = form.zeta.size() - 1;
    for (std::size_t k = 0; k <= last; ++k) {
        const GaussianRational mirror = conj(form.zeta[last - k]);
        if (form.zeta[k] != (anti ? -mirror : mirror)) return false;
    }
    return true;
}

GaussianRational evaluate(const SelfInversiveForm& form, const GaussianRational& t,
                          const GaussianRational& u) {
    return horner_homogeneous(form.signed_coefficients(), t, u);
}

GaussianRational evaluate(const RealBinaryForm& form, const GaussianRational& x,
                          const GaussianRational& y) {
    return horner_homogeneous(form.coeffs, x, y);
}

SelfInversiveForm multiply(const SelfInversiveForm& lhs, const SelfInversiveForm& rhs) {
    if (lhs.space != rhs.space) {
        throw std::invalid_argument("cannot multiply forms from different spaces");
    }
    // (-1)^j is multiplicative in j, so both layouts multiply as plain zeta convolutions.
    std::vector<GaussianRational> product(lhs.zeta.size() + rhs.zeta.size() - 1);
    for (std::size_t a = 0; a < lhs.zeta.size(); ++a) {
        if (lhs.zeta[a].is_zero()) continue;
        for (std::size_t b = 0; b < rhs.zeta.size(); ++b) {
            product[a + b] += lhs.zeta[a] * rhs.zeta[b];
        }
    }
    return {lhs.n + rhs.n + 1, lhs.space, std::move(product)};
}

SelfInversiveForm rationalize(const FloatForm& form) {
    std::vector<GaussianRational> zeta;
    zeta.reserve(form.zeta.size());
    for (const auto& z : form.zeta) zeta.push_back(GaussianRational::from_complex(z));
    return {form.n, form.space, std::move(zeta)};
}

FloatForm to_float(const SelfInversiveForm& form) {
    std::vector<ComplexDouble> zeta;
    zeta.reserve(form.zeta.size());
    for (const auto& z : form.zeta) zeta.push_back(z.to_complex());
    return {form.n, form.space, std::move(zeta)};
}

FloatForm form_from_roots(const std::vector<ComplexDouble>& roots) {
    if (roots.empty()) {
        throw std::invalid_argument("form_from_roots: need at least one root");
    }
    std::vector<ComplexDouble> e{1.0};
    for (const auto& t : roots) {
        e.push_back(0.0);
        for (std::size_t j = e.size() - 1; j > 0; --j) e[j] += t * e[j - 1];
    }
    return {static_cast<int>(roots.size()) - 1, SpaceTag::A, std::move(e)};
}

FloatForm symmetrize(const FloatForm& form) {
    const double sign = (form.space == SpaceTag::B && form.n % 2 == 1) ? -1.0 : 1.0;
    FloatForm out = form;
    const std::size_t last = out.zeta.size() - 1;
    for (std::size_t k = 0; k <= last / 2; ++k) {
        const std::size_t mirror = last - k;
        if (k == mirror) {
            out.zeta[k] = sign > 0 ? ComplexDouble(out.zeta[k].real(), 0.0)
                                   : ComplexDouble(0.0, out.zeta[k].imag());
        } else {
            const ComplexDouble avg = 0.5 * (out.zeta[k] + sign * std::conj(out.zeta[mirror]));
            out.zeta[k] = avg;
            out.zeta[mirror] = sign * std::conj(avg);
        }
    }
    return out;
}

std::vector<ComplexDouble> univariate(const SelfInversiveForm& form) {
    std::vector<ComplexDouble> out;
    for (const auto& c : form.signed_coefficients()) out.push_back(c.to_complex());
    return out;
}

std::vector<ComplexDouble> univariate(const RealBinaryForm& form) {
    std::vector<ComplexDouble> out;
    for (const auto& c : form.coeffs) out.emplace_back(c.to_double(), 0.0);
    return out;
}

}  // namespace selfinv
