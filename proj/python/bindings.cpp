#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "selfinv/disc.hpp"
#include "selfinv/json_io.hpp"
#include "selfinv/roots.hpp"
#include "selfinv/symfunc.hpp"
#include "selfinv/transform.hpp"

namespace py = pybind11;
using namespace selfinv;

namespace {

py::object fraction_type() {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls;
}

py::object to_py(const Rational& q) {
    return fraction_type()(py::int_(py::str(q.num().get_str())), py::int_(py::str(q.den().get_str())));
}

py::tuple to_py(const GaussianRational& z) { return py::make_tuple(to_py(z.re()), to_py(z.im())); }

Rational rational_from_py(py::handle h) {
    if (py::isinstance<py::bool_>(h)) throw py::type_error("expected a rational number, got bool");
    if (py::isinstance<py::int_>(h)) return Rational::parse(py::str(h).cast<std::string>());
    if (py::isinstance(h, fraction_type())) {
        return Rational::parse(py::str(h.attr("numerator")).cast<std::string>() + "/" +
                               py::str(h.attr("denominator")).cast<std::string>());
    }
    if (py::isinstance<py::float_>(h)) return Rational::from_double(h.cast<double>());
    if (py::isinstance<py::str>(h)) return Rational::parse(h.cast<std::string>());
    throw py::type_error("expected int, Fraction, float or str");
}

/// Accepts a rational, a (re, im) pair or a Python complex (converted exactly).
GaussianRational gaussian_from_py(py::handle h) {
    if (PyComplex_Check(h.ptr())) {
        const auto z = h.cast<std::complex<double>>();
        return GaussianRational::from_complex(z);
    }
    if (py::isinstance<py::tuple>(h) || py::isinstance<py::list>(h)) {
        const auto seq = py::reinterpret_borrow<py::sequence>(h);
        if (seq.size() != 2) throw py::value_error("a Gaussian rational pair needs exactly two entries");
        return {rational_from_py(seq[0]), rational_from_py(seq[1])};
    }
    return GaussianRational(rational_from_py(h));
}

SpaceTag space_from_str(const std::string& s) {
    if (s == "A") return SpaceTag::A;
    if (s == "B") return SpaceTag::B;
    throw py::value_error("space must be \"A\" or \"B\"");
}

SelfInversiveForm make_form(int n, const std::string& space, const py::sequence& zeta) {
    std::vector<GaussianRational> values;
    for (auto item : zeta) values.push_back(gaussian_from_py(item));
    return {n, space_from_str(space), std::move(values)};
}

RealBinaryForm make_real(int n, const py::sequence& coeffs) {
    std::vector<Rational> values;
    for (auto item : coeffs) values.push_back(rational_from_py(item));
    return {n, std::move(values)};
}

py::list zeta_to_py(const SelfInversiveForm& f) {
    py::list out;
    for (const auto& z : f.zeta) out.append(to_py(z));
    return out;
}

py::dict report_to_py(const DiscriminantReport& r) {
    py::dict d;
    d["dis"] = to_py(r.dis);
    d["det_h"] = to_py(r.det_h);
    d["scale_check"] = r.scale_check ? py::object(py::bool_(*r.scale_check)) : py::object(py::none());
    d["sign"] = r.sign;
    d["k"] = r.k ? py::object(py::int_(*r.k)) : py::object(py::none());
    d["deflations"] = r.deflations;
    d["degenerate"] = r.degenerate;
    return d;
}

py::dict roots_to_py(const RootSet& r) {
    py::dict d;
    d["roots"] = r.roots;
    d["residuals"] = r.residuals;
    d["circle_count"] = r.circle_count;
    d["pair_count"] = r.pair_count;
    d["converged"] = r.converged;
    return d;
}

}  // namespace

PYBIND11_MODULE(_selfinv, m) {
    m.doc() = "Self-inversive binary forms: exact conversions, discriminants and root counts";

    auto validation = py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    (void)validation;

    py::class_<SelfInversiveForm>(m, "SelfInversiveForm")
        .def(py::init(&make_form), py::arg("n"), py::arg("space"), py::arg("zeta"),
             "zeta entries may be ints, Fractions, floats, strings, (re, im) pairs or complex numbers")
        .def_readonly("n", &SelfInversiveForm::n)
        .def_property_readonly("space", [](const SelfInversiveForm& f) { return f.space == SpaceTag::A ? "A" : "B"; })
        .def_property_readonly("zeta", &zeta_to_py)
        .def("is_monic", &SelfInversiveForm::is_monic)
        .def("to_json", [](const SelfInversiveForm& f) { return json::encode(f).dump(); })
        .def_static("from_json",
                    [](const std::string& text) { return json::decode_self_inversive(json::parse(text)); })
        .def("__eq__", [](const SelfInversiveForm& a, const SelfInversiveForm& b) { return a == b; })
        .def("__repr__", [](const SelfInversiveForm& f) { return "SelfInversiveForm(" + json::encode(f).dump() + ")"; });

    py::class_<RealBinaryForm>(m, "RealBinaryForm")
        .def(py::init(&make_real), py::arg("n"), py::arg("coeffs"))
        .def_readonly("n", &RealBinaryForm::n)
        .def_property_readonly("coeffs",
                               [](const RealBinaryForm& g) {
                                   py::list out;
                                   for (const auto& c : g.coeffs) out.append(to_py(c));
                                   return out;
                               })
        .def("to_json", [](const RealBinaryForm& g) { return json::encode(g).dump(); })
        .def_static("from_json", [](const std::string& text) { return json::decode_real(json::parse(text)); })
        .def("__eq__", [](const RealBinaryForm& a, const RealBinaryForm& b) { return a == b; })
        .def("__repr__", [](const RealBinaryForm& g) { return "RealBinaryForm(" + json::encode(g).dump() + ")"; });

    m.def("validate", &validate, py::arg("form"));
    m.def("phi", &phi, py::arg("form"));
    m.def("phi_inverse", &phi_inverse, py::arg("g"));
    m.def("phi_closed_form", &phi_closed_form, py::arg("form"));
    m.def("psi", &psi, py::arg("form"));
    m.def(
        "psi_inverse",
        [](const RealBinaryForm& g, std::optional<std::string> parity) {
            Parity p = parity_of(g.n);
            if (parity) {
                if (*parity == "even") p = Parity::even;
                else if (*parity == "odd") p = Parity::odd;
                else throw py::value_error("parity must be \"even\" or \"odd\"");
            }
            return psi_inverse(g, p);
        },
        py::arg("g"), py::arg("parity") = py::none());
    m.def("deflate", &deflate, py::arg("form"));

    m.def(
        "power_sums",
        [](const SelfInversiveForm& f) {
            const auto table = power_sums(f);
            py::dict out;
            for (int k = -table.n; k <= table.n; ++k) out[py::int_(k)] = to_py(table.at(k));
            return out;
        },
        py::arg("form"));
    m.def(
        "hankel_matrix",
        [](const SelfInversiveForm& f) {
            const auto h = build_hankel(power_sums(f));
            py::list rows;
            for (int r = 0; r <= h.n; ++r) {
                py::list row;
                for (int c = 0; c <= h.n; ++c) row.append(to_py(h.entries(r, c)));
                rows.append(row);
            }
            return rows;
        },
        py::arg("form"));
    m.def(
        "hankel_determinant", [](const SelfInversiveForm& f) { return to_py(hankel_determinant(f)); },
        py::arg("form"));
    m.def(
        "dis_via_hankel", [](const SelfInversiveForm& f) { return to_py(dis_via_hankel(f)); }, py::arg("form"));
    m.def(
        "dis_via_resultant", [](const RealBinaryForm& g) { return to_py(dis_via_resultant(g)); }, py::arg("g"));
    m.def(
        "discriminant_report",
        [](const SelfInversiveForm& f, bool oracle, bool deflate, double tol) {
            return report_to_py(discriminant_report(f, DiscOptions{oracle, deflate, tol}));
        },
        py::arg("form"), py::arg("oracle") = false, py::arg("deflate") = false, py::arg("tol") = 1e-8);

    m.def(
        "find_roots",
        [](const std::vector<ComplexDouble>& coeffs, double tol) {
            RootOptions options;
            options.classify_tol = tol;
            return roots_to_py(find_roots(coeffs, options));
        },
        py::arg("coeffs"), py::arg("tol") = 1e-8, "Roots of sum_k coeffs[k] z^(N-k), leading coefficient first");
    m.def(
        "find_roots",
        [](const SelfInversiveForm& f, double tol) {
            RootOptions options;
            options.classify_tol = tol;
            return roots_to_py(find_roots(univariate(f), options));
        },
        py::arg("form"), py::arg("tol") = 1e-8);
    m.def(
        "classify_circle_roots",
        [](const SelfInversiveForm& f, double tol) {
            const auto r = classify_circle_roots(f, tol);
            py::dict d;
            d["k"] = r.k;
            d["consistent"] = r.consistent;
            d["sign"] = r.sign;
            d["det_h"] = to_py(r.det_h);
            d["deflations"] = r.deflations;
            d["ambiguous"] = r.ambiguous;
            return d;
        },
        py::arg("form"), py::arg("tol") = 1e-8);
    m.def(
        "sample_w", [](const std::vector<double>& angles) { return rationalize(sample_w(angles)); },
        py::arg("angles"), "Monic A-form whose roots are exp(i * angle); angles must sum to 0");
}
