#include "selfinv/json_io.hpp"

#include <string>

namespace selfinv::json {

namespace {

const Json& require_array(const Json& j, std::size_t size, const char* what) {
    if (!j.is_array() || j.size() != size) {
        throw ParseError(std::string(what) + ": expected an array of " + std::to_string(size) +
                         " integers");
    }
    return j;
}

int decode_n(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
        throw ParseError("form: missing integer field \"n\"");
    }
    const auto n = j["n"].get<long long>();
    if (n < 0 || n > 100000) {
        throw ParseError("form: \"n\" out of range");
    }
    return static_cast<int>(n);
}

const Json& require_list(const Json& j, const char* key, int n) {
    if (!j.contains(key) || !j[key].is_array()) {
        throw ParseError(std::string("form: missing array field \"") + key + "\"");
    }
    if (j[key].size() != static_cast<std::size_t>(n) + 2) {
        throw ParseError(std::string("form: \"") + key + "\" must have n+2 entries");
    }
    return j[key];
}

}  // namespace

Json encode(const BigInt& v) {
    if (v.fits_slong_p()) {
        return static_cast<long long>(v.get_si());
    }
    return v.get_str();
}

BigInt decode_integer(const Json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<unsigned long long>()));
        return BigInt(std::to_string(j.get<long long>()));
    }
    if (j.is_string()) {
        const auto& text = j.get_ref<const std::string&>();
        BigInt v;
        const bool digits = !text.empty() &&
                            text.find_first_not_of("0123456789", text[0] == '-' ? 1 : 0) == std::string::npos &&
                            text != "-";
        if (!digits || v.set_str(text, 10) != 0) {
            throw ParseError("malformed integer string: " + text);
        }
        return v;
    }
    throw ParseError("expected an integer");
}

Json encode(const Rational& q) { return Json::array({encode(q.num()), encode(q.den())}); }

Rational decode_rational(const Json& j) {
    require_array(j, 2, "rational");
    const BigInt num = decode_integer(j[0]);
    const BigInt den = decode_integer(j[1]);
    if (den <= 0) {
        throw ParseError("rational: denominator must be positive");
    }
    return {num, den};
}

Json encode(const GaussianRational& z) {
    return Json::array({encode(z.re().num()), encode(z.re().den()), encode(z.im().num()),
                        encode(z.im().den())});
}

GaussianRational decode_gaussian(const Json& j) {
    require_array(j, 4, "gaussian rational");
    return {decode_rational(Json::array({j[0], j[1]})), decode_rational(Json::array({j[2], j[3]}))};
}

Json encode(const SelfInversiveForm& form) {
    Json out;
    out["n"] = form.n;
    out["space"] = form.space == SpaceTag::A ? "A" : "B";
    Json zeta = Json::array();
    for (const auto& z : form.zeta) zeta.push_back(encode(z));
    out["zeta"] = std::move(zeta);
    return out;
}

SelfInversiveForm decode_self_inversive(const Json& j) {
    const int n = decode_n(j);
    if (!j.contains("space") || !j["space"].is_string()) {
        throw ParseError("form: missing string field \"space\"");
    }
    const auto& space = j["space"].get_ref<const std::string&>();
    if (space != "A" && space != "B") {
        throw ParseError("form: \"space\" must be \"A\" or \"B\"");
    }
    std::vector<GaussianRational> zeta;
    for (const auto& z : require_list(j, "zeta", n)) zeta.push_back(decode_gaussian(z));
    return {n, space == "A" ? SpaceTag::A : SpaceTag::B, std::move(zeta)};
}

Json encode(const RealBinaryForm& form) {
    Json out;
    out["n"] = form.n;
    Json coeffs = Json::array();
    for (const auto& c : form.coeffs) coeffs.push_back(encode(c));
    out["coeffs"] = std::move(coeffs);
    return out;
}

RealBinaryForm decode_real(const Json& j) {
    const int n = decode_n(j);
    std::vector<Rational> coeffs;
    for (const auto& c : require_list(j, "coeffs", n)) coeffs.push_back(decode_rational(c));
    return {n, std::move(coeffs)};
}

AnyForm decode_form(const Json& j) {
    if (!j.is_object()) {
        throw ParseError("form: expected a JSON object");
    }
    if (j.contains("zeta")) return decode_self_inversive(j);
    if (j.contains("coeffs")) return decode_real(j);
    throw ParseError("form: neither \"zeta\" nor \"coeffs\" present");
}

Json encode(const PowerSumTable& table) {
    Json out;
    out["n"] = table.n;
    Json m = Json::array();
    Json values = Json::array();
    for (int k = -table.n; k <= table.n; ++k) {
        m.push_back(k);
        values.push_back(encode(table.at(k)));
    }
    out["m"] = std::move(m);
    out["values"] = std::move(values);
    return out;
}

Json encode(const HankelMatrix& m) {
    Json out;
    out["n"] = m.n;
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.entries.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.entries.cols(); ++c) row.push_back(encode(m.entries(r, c)));
        rows.push_back(std::move(row));
    }
    out["entries"] = std::move(rows);
    return out;
}

Json encode_complex(ComplexDouble z) { return Json::array({z.real(), z.imag()}); }

Json encode(const RootSet& roots) {
    Json out;
    Json list = Json::array();
    for (const auto& z : roots.roots) list.push_back(encode_complex(z));
    out["roots"] = std::move(list);
    out["residuals"] = roots.residuals;
    out["circle_count"] = roots.circle_count;
    out["pair_count"] = roots.pair_count;
    out["converged"] = roots.converged;
    return out;
}

Json encode(const DiscriminantReport& report) {
    Json out;
    out["dis"] = encode(report.dis);
    out["det_h"] = encode(report.det_h);
    out["scale_check"] = report.scale_check ? Json(*report.scale_check) : Json(nullptr);
    out["sign"] = report.sign;
    out["k"] = report.k ? Json(*report.k) : Json(nullptr);
    out["deflations"] = report.deflations;
    out["degenerate"] = report.degenerate;
    return out;
}

Json encode(const CircleRootReport& report) {
    Json out;
    out["k"] = report.k;
    out["consistent"] = report.consistent;
    out["sign"] = report.sign;
    out["det_h"] = encode(report.det_h);
    out["deflations"] = report.deflations;
    out["ambiguous"] = report.ambiguous;
    return out;
}

Json parse(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace selfinv::json
