#pragma once

#include <stdexcept>
#include <variant>

#include <nlohmann/json.hpp>

#include "selfinv/disc.hpp"
#include "selfinv/forms.hpp"
#include "selfinv/roots.hpp"
#include "selfinv/symfunc.hpp"

namespace selfinv::json {

using Json = nlohmann::ordered_json;

/// Document does not match the expected schema.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Integers are emitted as JSON numbers when they fit in 64 bits and as decimal
// strings otherwise; both spellings are accepted on input.
Json encode(const BigInt& v);
BigInt decode_integer(const Json& j);

/// [num, den]
Json encode(const Rational& q);
Rational decode_rational(const Json& j);

/// [re_num, re_den, im_num, im_den]
Json encode(const GaussianRational& z);
GaussianRational decode_gaussian(const Json& j);

/// {"n", "space", "zeta"}
Json encode(const SelfInversiveForm& form);
SelfInversiveForm decode_self_inversive(const Json& j);

/// {"n", "coeffs"}
Json encode(const RealBinaryForm& form);
RealBinaryForm decode_real(const Json& j);

using AnyForm = std::variant<SelfInversiveForm, RealBinaryForm>;
/// Dispatches on the presence of "zeta" or "coeffs".
AnyForm decode_form(const Json& j);

Json encode(const PowerSumTable& table);
Json encode(const HankelMatrix& m);
Json encode(const RootSet& roots);
Json encode(const DiscriminantReport& report);
Json encode(const CircleRootReport& report);
Json encode_complex(ComplexDouble z);

/// Parses text, converting nlohmann's exceptions into ParseError.
Json parse(std::string_view text);

}  // namespace selfinv::json
