#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "selfinv/forms.hpp"
#include "selfinv/json_io.hpp"

namespace selfinv {

/// One varied real coordinate of (zeta_1, ..., zeta_n). Varying zeta_j moves its mirror
/// zeta_{n+1-j} along with it so the point stays in the symmetric slice.
struct SweepAxis {
    enum class Part { re, im };
    int index = 1;
    Part part = Part::re;
    Rational lo;
    Rational hi;
    int steps = 2;

    std::string name() const;
    Rational value(int step) const;
};

struct SweepSpec {
    int n = 1;
    std::vector<SweepAxis> axes;
    /// zeta_1 .. zeta_n at the base point (zeta_0 = zeta_{n+1} = 1).
    std::vector<GaussianRational> fixed;
};

struct SweepRow {
    std::vector<Rational> coords;
    Rational det_h;
    int sign = 0;
};

/// Throws json::ParseError for schema problems and ValidationError for a spec that
/// parses but violates the axis or symmetry constraints.
SweepSpec parse_sweep_spec(const json::Json& j);

/// Evaluates det H_n exactly at every grid point. Rows are row-major over the axes
/// (first axis slowest) regardless of how many worker threads are used.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads = 0);

/// Header of axis names then "det_h,sign"; numbers in shortest round-trip form.
void write_sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows, std::ostream& out);

/// Shortest decimal representation that round-trips the double.
std::string format_double(double v);

}  // namespace selfinv
