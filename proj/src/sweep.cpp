#include "selfinv/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <set>
#include <thread>

#include "selfinv/disc.hpp"

namespace selfinv {

namespace {

Rational decode_bound(const json::Json& j, const char* key) {
    if (!j.contains(key)) {
        throw json::ParseError(std::string("sweep axis: missing \"") + key + "\"");
    }
    const auto& v = j[key];
    if (v.is_number_integer()) return Rational(json::decode_integer(v), 1);
    if (v.is_number_float()) return Rational::from_double(v.get<double>());
    if (v.is_array()) return json::decode_rational(v);
    throw json::ParseError(std::string("sweep axis: \"") + key + "\" must be a number or [num, den]");
}

SelfInversiveForm base_form(const SweepSpec& spec) {
    std::vector<GaussianRational> zeta;
    zeta.reserve(spec.fixed.size() + 2);
    zeta.emplace_back(1);
    zeta.insert(zeta.end(), spec.fixed.begin(), spec.fixed.end());
    zeta.emplace_back(1);
    return {spec.n, SpaceTag::A, std::move(zeta)};
}

void apply(SelfInversiveForm& form, const SweepAxis& axis, const Rational& v) {
    const int mirror = form.n + 1 - axis.index;
    auto& z = form.zeta[axis.index];
    auto& m = form.zeta[mirror];
    if (axis.part == SweepAxis::Part::re) {
        z = GaussianRational(v, z.im());
        m = GaussianRational(v, m.im());
    } else {
        z = GaussianRational(z.re(), v);
        m = GaussianRational(m.re(), -v);
    }
}

}  // namespace

std::string SweepAxis::name() const {
    return std::string(part == Part::re ? "re" : "im") + "_zeta" + std::to_string(index);
}

Rational SweepAxis::value(int step) const {
    return lo + (hi - lo) * Rational(step) / Rational(steps - 1);
}

SweepSpec parse_sweep_spec(const json::Json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
        throw json::ParseError("sweep: missing integer field \"n\"");
    }
    SweepSpec spec;
    const auto n = j["n"].get<long long>();
    if (n < 0 || n > 64) throw ValidationError("sweep: n out of range");
    spec.n = static_cast<int>(n);

    spec.fixed.assign(static_cast<std::size_t>(spec.n), GaussianRational(0));
    if (j.contains("fixed")) {
        const auto& fixed = j["fixed"];
        if (!fixed.is_array() || fixed.size() != static_cast<std::size_t>(spec.n)) {
            throw json::ParseError("sweep: \"fixed\" must list zeta_1 .. zeta_n");
        }
        for (std::size_t k = 0; k < fixed.size(); ++k) spec.fixed[k] = json::decode_gaussian(fixed[k]);
    }
    if (!validate(base_form(spec))) {
        throw ValidationError("sweep: fixed values violate zeta_j = conj(zeta_{n+1-j})");
    }

    std::set<std::pair<int, SweepAxis::Part>> seen;
    const json::Json empty = json::Json::array();
    const auto& axes = j.contains("axes") ? j["axes"] : empty;
    if (!axes.is_array()) throw json::ParseError("sweep: \"axes\" must be an array");
    for (const auto& a : axes) {
        if (!a.is_object() || !a.contains("index") || !a["index"].is_number_integer() ||
            !a.contains("steps") || !a["steps"].is_number_integer()) {
            throw json::ParseError("sweep axis: needs integer \"index\" and \"steps\"");
        }
        SweepAxis axis;
        axis.index = a["index"].get<int>();
        const std::string part = a.value("part", std::string("re"));
        if (part != "re" && part != "im") throw json::ParseError("sweep axis: \"part\" must be re or im");
        axis.part = part == "re" ? SweepAxis::Part::re : SweepAxis::Part::im;
        axis.lo = decode_bound(a, "lo");
        axis.hi = decode_bound(a, "hi");
        axis.steps = a["steps"].get<int>();

        if (axis.index < 1 || axis.index > spec.n) {
            throw ValidationError("sweep axis: index must lie in [1, n]");
        }
        if (2 * axis.index == spec.n + 1 && axis.part == SweepAxis::Part::im) {
            throw ValidationError("sweep axis: the middle coefficient is real");
        }
        if (axis.steps < 2 || !(axis.lo < axis.hi)) {
            throw ValidationError("sweep axis: need steps >= 2 and lo < hi");
        }
        const int canonical = std::min(axis.index, spec.n + 1 - axis.index);
        if (!seen.emplace(canonical, axis.part).second) {
            throw ValidationError("sweep axis: coordinate " + axis.name() + " is varied twice");
        }
        spec.axes.push_back(std::move(axis));
    }
    return spec;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads) {
    std::size_t total = 1;
    for (const auto& axis : spec.axes) total *= static_cast<std::size_t>(axis.steps);
    std::vector<SweepRow> rows(total);
    const SelfInversiveForm base = base_form(spec);

    auto evaluate_row = [&](std::size_t flat) {
        SelfInversiveForm form = base;
        SweepRow row;
        row.coords.resize(spec.axes.size());
        std::size_t rest = flat;
        for (std::size_t a = spec.axes.size(); a-- > 0;) {
            const auto steps = static_cast<std::size_t>(spec.axes[a].steps);
            row.coords[a] = spec.axes[a].value(static_cast<int>(rest % steps));
            rest /= steps;
        }
        for (std::size_t a = 0; a < spec.axes.size(); ++a) apply(form, spec.axes[a], row.coords[a]);
        const GaussianRational det = hankel_determinant(form);
        row.det_h = det.re();
        row.sign = row.det_h.sign();
        rows[flat] = std::move(row);
    };

    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
    if (threads <= 1) {
        for (std::size_t k = 0; k < total; ++k) evaluate_row(k);
        return rows;
    }
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
        workers.emplace_back([&, w] {
            for (std::size_t k = w; k < total; k += threads) evaluate_row(k);
        });
    }
    workers.clear();
    return rows;
}

std::string format_double(double v) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, v);
    return {buffer, result.ptr};
}

void write_sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows, std::ostream& out) {
    for (const auto& axis : spec.axes) out << axis.name() << ',';
    out << "det_h,sign\n";
    for (const auto& row : rows) {
        for (const auto& c : row.coords) out << format_double(c.to_double()) << ',';
        out << format_double(row.det_h.to_double()) << ',' << row.sign << '\n';
    }
}

}  // namespace selfinv
