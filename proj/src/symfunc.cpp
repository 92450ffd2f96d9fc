#include "selfinv/symfunc.hpp"

#include <stdexcept>

namespace selfinv {

namespace {

void require_power_sum_domain(int n, SpaceTag space) {
    if (space == SpaceTag::B && n % 2 != 0) {
        throw PreconditionError("power sums of B-forms are defined for even n only");
    }
}

/// e_j of the roots of f(T,1) = sum_j s_j T^{n+1-j} with s_0 = 1.
template <class T>
std::vector<T> elementary_from_signed(std::vector<T> s) {
    for (std::size_t j = 1; j < s.size(); j += 2) s[j] = -s[j];
    return s;
}

}  // namespace

PowerSumTable power_sums(const SelfInversiveForm& form) {
    if (!form.is_monic()) {
        throw PreconditionError("power_sums: form is not monic (zeta_0 = zeta_{n+1} = 1)");
    }
    require_power_sum_domain(form.n, form.space);
    auto elementary = elementary_from_signed(form.signed_coefficients());
    return {form.n, signed_power_sums(elementary)};
}

HankelMatrix build_hankel(const PowerSumTable& table) {
    if (table.n < 0 || table.values.size() != static_cast<std::size_t>(2 * table.n + 1)) {
        throw std::invalid_argument("build_hankel: power-sum table does not cover [-n, n]");
    }
    return {table.n, toeplitz_from_power_sums(table.values, table.n)};
}

SelfInversiveForm b_to_a_coefficients(const SelfInversiveForm& form) {
    if (form.space != SpaceTag::B) {
        throw PreconditionError("b_to_a_coefficients: input is not a B-form");
    }
    if (form.n % 2 != 0) {
        throw PreconditionError("b_to_a_coefficients: only even n is supported");
    }
    if (!form.is_monic()) {
        throw PreconditionError("b_to_a_coefficients: form is not monic");
    }
    if (!validate(form)) {
        throw ValidationError("b_to_a_coefficients: zeta violates the B symmetry");
    }
    // -p(-T, U) = f(T, U) when both carry the same zeta.
    return {form.n, SpaceTag::A, form.zeta};
}

std::vector<ComplexDouble> elementary_symmetric(const FloatForm& form) {
    std::vector<ComplexDouble> s = form.zeta;
    if (form.space == SpaceTag::A) {
        for (std::size_t j = 1; j < s.size(); j += 2) s[j] = -s[j];
    }
    const ComplexDouble lead = s.front();
    for (auto& c : s) c /= lead;
    return elementary_from_signed(std::move(s));
}

std::vector<ComplexDouble> power_sums_float(const FloatForm& form) {
    require_power_sum_domain(form.n, form.space);
    return signed_power_sums(elementary_symmetric(form));
}

ComplexDouble hankel_det_float(const FloatForm& form) {
    return lu_determinant(toeplitz_from_power_sums(power_sums_float(form), form.n));
}

}  // namespace selfinv
