#pragma once

#include <vector>

#include "selfinv/forms.hpp"
#include "selfinv/matrix.hpp"

namespace selfinv {

/// Power sums h_m = sum_j t_j^m for m in [-n, n].
struct PowerSumTable {
    int n = 0;
    std::vector<GaussianRational> values;  // values[m + n]

    const GaussianRational& at(int m) const { return values.at(static_cast<std::size_t>(m + n)); }
};

/// (n+1) x (n+1) matrix with entry (r, c) = h_{r-c}.
struct HankelMatrix {
    int n = 0;
    Matrix<GaussianRational> entries;
};

/// Newton's identities: given e_0 = 1, e_1 .. e_N of a monic degree-N polynomial
/// prod (T - t_j), returns p_0 .. p_count with p_k = sum_j t_j^k.
template <class T>
std::vector<T> newton_power_sums(const std::vector<T>& elementary, int count) {
    const int degree = static_cast<int>(elementary.size()) - 1;
    std::vector<T> p;
    p.reserve(static_cast<std::size_t>(count) + 1);
    p.push_back(T(degree));
    for (int k = 1; k <= count; ++k) {
        T s(0);
        for (int i = 1; i < k && i <= degree; ++i) {
            if (i % 2 == 1) s += elementary[i] * p[k - i];
            else s -= elementary[i] * p[k - i];
        }
        if (k <= degree) {
            T term = elementary[k] * T(k);
            if (k % 2 == 1) s += term;
            else s -= term;
        }
        p.push_back(std::move(s));
    }
    return p;
}

/// Power sums at indices -n .. n from the elementary symmetric functions.
/// Negative indices run Newton on the reversed polynomial, whose roots are 1/t_j.
template <class T>
std::vector<T> signed_power_sums(const std::vector<T>& elementary) {
    const int degree = static_cast<int>(elementary.size()) - 1;
    const int n = degree - 1;
    std::vector<T> reversed(elementary.size());
    reversed[0] = T(1);
    for (int j = 1; j <= degree; ++j) reversed[j] = elementary[degree - j] / elementary[degree];
    const auto positive = newton_power_sums(elementary, n);
    const auto negative = newton_power_sums(reversed, n);
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(2 * n + 1));
    for (int m = n; m >= 1; --m) out.push_back(negative[m]);
    for (int m = 0; m <= n; ++m) out.push_back(positive[m]);
    return out;
}

/// Toeplitz assembly from a table indexed by m + n.
template <class T>
Matrix<T> toeplitz_from_power_sums(const std::vector<T>& values, int n) {
    Matrix<T> out(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1));
    for (int r = 0; r <= n; ++r) {
        for (int c = 0; c <= n; ++c) out(r, c) = values[static_cast<std::size_t>(r - c + n)];
    }
    return out;
}

/// Exact power sums of a monic A-form (any n) or monic B-form (n even).
/// Throws PreconditionError otherwise.
PowerSumTable power_sums(const SelfInversiveForm& form);

/// Throws std::invalid_argument when the table does not cover [-n, n].
HankelMatrix build_hankel(const PowerSumTable& table);

/// Monic B-form (n even) -> monic A-form with the same zeta. The A-form's
/// roots are the negatives of the B-form's, so K_n = D H_n D with
/// D = diag((-1)^r) and det K_n = det H_n.
SelfInversiveForm b_to_a_coefficients(const SelfInversiveForm& form);

/// Elementary symmetric functions e_0 .. e_{n+1} of the roots of the monic
/// dehomogenization, in floating point.
std::vector<ComplexDouble> elementary_symmetric(const FloatForm& form);

/// Power sums h_{-n} .. h_n in floating point (monic input).
std::vector<ComplexDouble> power_sums_float(const FloatForm& form);

/// det H_n in floating point (monic input).
ComplexDouble hankel_det_float(const FloatForm& form);

}  // namespace selfinv
