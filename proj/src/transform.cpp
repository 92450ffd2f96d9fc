#include "selfinv/transform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace selfinv {

namespace {

using Homogeneous = std::vector<GaussianRational>;  // index j <-> V^{d-j} W^j

Homogeneous multiply(const Homogeneous& a, const Homogeneous& b) {
    Homogeneous out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

/// Expands sum_j c_j A^{d-j} B^j where A and B are linear forms in the new variables.
Homogeneous substitute(const std::vector<GaussianRational>& coeffs, const Homogeneous& a,
                       const Homogeneous& b) {
    const std::size_t d = coeffs.size() - 1;
    std::vector<Homogeneous> a_powers{Homogeneous{GaussianRational(1)}};
    std::vector<Homogeneous> b_powers{Homogeneous{GaussianRational(1)}};
    for (std::size_t k = 1; k <= d; ++k) {
        a_powers.push_back(multiply(a_powers.back(), a));
        b_powers.push_back(multiply(b_powers.back(), b));
    }
    Homogeneous out(d + 1);
    for (std::size_t j = 0; j <= d; ++j) {
        if (coeffs[j].is_zero()) continue;
        const Homogeneous term = multiply(a_powers[d - j], b_powers[j]);
        for (std::size_t k = 0; k <= d; ++k) out[k] += coeffs[j] * term[k];
    }
    return out;
}

RealBinaryForm take_real(int n, const Homogeneous& coeffs, const char* what) {
    std::vector<Rational> real;
    real.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (!c.is_real()) {
            throw ValidationError(std::string(what) +
                                  ": residual imaginary part, coefficient symmetry violated");
        }
        real.push_back(c.re());
    }
    return {n, std::move(real)};
}

std::vector<GaussianRational> as_complex(const RealBinaryForm& g) {
    return {g.coeffs.begin(), g.coeffs.end()};
}

void require_valid(const SelfInversiveForm& form, SpaceTag space, const char* what) {
    if (form.space != space) {
        throw ValidationError(std::string(what) + ": form is in the wrong space");
    }
    if (!validate(form)) {
        throw ValidationError(std::string(what) + ": zeta violates the coefficient symmetry");
    }
}

const GaussianRational kI = GaussianRational::i();
const Rational kHalf(1, 2);

Rational binomial(int top, int bottom) {
    if (bottom < 0 || top < 0 || bottom > top) return Rational(0);
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top),
                 static_cast<unsigned long>(bottom));
    return Rational(out, 1);
}

int sign_power(int e) { return (e % 2 == 0) ? 1 : -1; }

/// sum_{j=0}^{h} (-1)^j C(k, h-j) C(n+1-2k, 2j + offset)
Rational inner_sum(int n, int k, int h, int offset) {
    Rational s(0);
    for (int j = 0; j <= h; ++j) {
        s += Rational(sign_power(j)) * binomial(k, h - j) * binomial(n + 1 - 2 * k, 2 * j + offset);
    }
    return s;
}

}  // namespace

RealBinaryForm phi(const SelfInversiveForm& form) {
    require_valid(form, SpaceTag::A, "phi");
    const Homogeneous t{kI, GaussianRational(-1)};
    const Homogeneous u{kI, GaussianRational(1)};
    return take_real(form.n, substitute(form.signed_coefficients(), t, u), "phi");
}

SelfInversiveForm phi_inverse(const RealBinaryForm& g) {
    const Homogeneous x{kI * GaussianRational(-kHalf), kI * GaussianRational(-kHalf)};
    const Homogeneous y{GaussianRational(-kHalf), GaussianRational(kHalf)};
    Homogeneous zeta = substitute(as_complex(g), x, y);
    for (std::size_t j = 1; j < zeta.size(); j += 2) zeta[j] = -zeta[j];
    SelfInversiveForm out(g.n, SpaceTag::A, std::move(zeta));
    if (!validate(out)) {
        throw std::logic_error("phi_inverse produced a form outside A");
    }
    return out;
}

RealBinaryForm psi(const SelfInversiveForm& form) {
    require_valid(form, SpaceTag::B, "psi");
    const Homogeneous t{GaussianRational(1), kI};
    const Homogeneous u{GaussianRational(1), -kI};
    Homogeneous expanded = substitute(form.zeta, t, u);
    if (form.n % 2 == 1) {
        for (auto& c : expanded) c *= kI;
    }
    return take_real(form.n, expanded, "psi");
}

SelfInversiveForm psi_inverse(const RealBinaryForm& g, Parity parity) {
    if (parity != parity_of(g.n)) {
        throw std::invalid_argument("psi_inverse: parity does not match the degree of g");
    }
    const Homogeneous x{GaussianRational(kHalf), GaussianRational(kHalf)};
    const Homogeneous y{kI * GaussianRational(-kHalf), kI * GaussianRational(kHalf)};
    Homogeneous zeta = substitute(as_complex(g), x, y);
    if (parity == Parity::odd) {
        for (auto& c : zeta) c *= -kI;
    }
    SelfInversiveForm out(g.n, SpaceTag::B, std::move(zeta));
    if (!validate(out)) {
        throw std::logic_error("psi_inverse produced a form outside B");
    }
    return out;
}

RealBinaryForm phi_closed_form(const SelfInversiveForm& form) {
    require_valid(form, SpaceTag::A, "phi_closed_form");
    const int n = form.n;
    const auto& z = form.zeta;
    auto sum_pair = [&](int k) { return z[k] + z[n + 1 - k]; };
    auto diff_pair_i = [&](int k) { return (z[k] - z[n + 1 - k]) * kI; };

    std::vector<GaussianRational> a(n + 2);
    if (n % 2 == 0) {
        const int m = n / 2;
        for (int h = 0; h <= m; ++h) {
            GaussianRational odd = Rational(sign_power(m + h + 1)) * binomial(n + 1, 2 * h + 1) * sum_pair(0);
            GaussianRational even = Rational(sign_power(m + h)) * binomial(n + 1, 2 * h) * diff_pair_i(0);
            for (int k = 1; k <= m; ++k) {
                odd += Rational(sign_power(m + 1 + k)) * inner_sum(n, k, h, 1) * sum_pair(k);
                even += Rational(sign_power(m + k)) * inner_sum(n, k, h, 0) * diff_pair_i(k);
            }
            a[2 * h + 1] = odd;
            a[2 * h] = even;
        }
    } else {
        const int m = (n + 1) / 2;
        for (int h = 0; h <= (n - 1) / 2; ++h) {
            GaussianRational odd = Rational(sign_power(m + h)) * binomial(n + 1, 2 * h + 1) * diff_pair_i(0);
            for (int k = 1; k <= (n - 1) / 2; ++k) {
                odd += Rational(sign_power(m + k)) * inner_sum(n, k, h, 1) * diff_pair_i(k);
            }
            a[2 * h + 1] = odd;
        }
        for (int h = 0; h <= m; ++h) {
            GaussianRational even = Rational(sign_power(m + h)) * binomial(n + 1, 2 * h) * sum_pair(0) +
                                    binomial(m, h) * z[m];
            for (int k = 1; k <= (n - 1) / 2; ++k) {
                even += Rational(sign_power(m + k)) * inner_sum(n, k, h, 0) * sum_pair(k);
            }
            a[2 * h] = even;
        }
    }
    return take_real(n, a, "phi_closed_form");
}

NormalizedForm normalize_monic(const FloatForm& form, int branch) {
    const ComplexDouble lead = form.zeta.front();
    if (lead == ComplexDouble(0.0)) {
        throw PreconditionError("normalize_monic: zeta_0 = 0");
    }
    const double degree = form.n + 1;
    NormalizedForm out;
    out.scale = std::pow(std::abs(lead), 1.0 / degree);
    out.angle = (std::arg(lead) + 2.0 * std::numbers::pi * branch) / degree;
    out.rotation = std::polar(1.0, out.angle);

    // f'(T,U) = f(lambda T, conj(lambda) U) with lambda = 1/(r e^{i theta}) gives
    // zeta'_j = zeta_j lambda^{n+1-j} conj(lambda)^j.
    const ComplexDouble lambda = 1.0 / (out.scale * out.rotation);
    std::vector<ComplexDouble> zeta(form.zeta.size());
    for (std::size_t j = 0; j < zeta.size(); ++j) {
        zeta[j] = form.zeta[j] * std::pow(lambda, static_cast<int>(zeta.size() - 1 - j)) *
                  std::pow(std::conj(lambda), static_cast<int>(j));
    }
    out.form = FloatForm(form.n, form.space, std::move(zeta));
    return out;
}

SelfInversiveForm deflate(const SelfInversiveForm& form) {
    if (form.space != SpaceTag::A || !form.is_monic()) {
        throw PreconditionError("deflate: input must be a monic A-form");
    }
    if (!validate(form)) {
        throw ValidationError("deflate: zeta violates the coefficient symmetry");
    }
    if (form.n == 0) {
        throw PreconditionError("deflate: a linear form has no degree-0 cofactor in A");
    }
    // Synthetic division of f(T,1) by (T-1).
    const auto s = form.signed_coefficients();
    std::vector<GaussianRational> q(s.size() - 1);
    q[0] = s[0];
    for (std::size_t j = 1; j < q.size(); ++j) q[j] = s[j] + q[j - 1];
    if (!(s.back() + q.back()).is_zero()) {
        throw PreconditionError("deflate: (T-U) does not divide the form");
    }
    for (std::size_t j = 1; j < q.size(); j += 2) q[j] = -q[j];
    return {form.n - 1, SpaceTag::A, std::move(q)};
}

Deflation deflate_all(const SelfInversiveForm& form) {
    Deflation out;
    SelfInversiveForm current = form;
    const GaussianRational one(1);
    while (evaluate(current, one, one).is_zero()) {
        ++out.count;
        if (current.n == 0) {
            // (T-U) itself: the cofactor is the constant 1.
            return out;
        }
        current = deflate(current);
    }
    out.remainder = std::move(current);
    return out;
}

std::vector<RootPair> map_roots(const std::vector<ComplexDouble>& roots_t, double tol,
                                double infinity_tol) {
    const ComplexDouble i(0.0, 1.0);
    std::vector<RootPair> out;
    out.reserve(roots_t.size());
    for (const auto& t : roots_t) {
        RootPair p;
        p.t = t;
        p.real = std::abs(std::abs(t) - 1.0) <= tol;
        if (std::abs(t - 1.0) <= infinity_tol) {
            p.at_infinity = true;
            p.x = ComplexDouble(INFINITY, 0.0);
        } else {
            p.x = i * (t + 1.0) / (t - 1.0);
        }
        out.push_back(p);
    }
    return out;
}

}  // namespace selfinv
