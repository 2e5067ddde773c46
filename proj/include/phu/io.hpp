#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "phu/complex.hpp"
#include "phu/generate.hpp"
#include "phu/matrix.hpp"
#include "phu/reduce.hpp"
#include "phu/update.hpp"
#include "phu/verify.hpp"

namespace phu {

/// Malformed input; `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Shortest round-trip decimal form.
std::string format_value(double v);

// Native filtration text: `value v0 v1 ... vk` per line, `#` comments.
// Reading does not validate; call validate_filtration.
Filtration read_native(std::istream& in);
void write_native(std::ostream& out, const Filtration& f);

// PHAT ascii boundary matrix: `dim r0 r1 ...` per column.
BoundaryMatrix read_phat(std::istream& in);
void write_phat(std::ostream& out, const BoundaryMatrix& D);

/// One point per line, comma or whitespace separated.
PointCloud read_point_cloud(std::istream& in);

/// One value per line, vertex id = line order among data lines.
std::vector<double> read_vertex_values(std::istream& in);

/// `dim,birth_index,death_index,birth_value,death_value`. `values` maps
/// positions to entrance values; pass an empty vector to use the positions.
void write_barcode_csv(std::ostream& out, const Barcode& bc, const std::vector<double>& values);

/// Per-column rows followed by a blank line and the summary block.
void write_stats_csv(std::ostream& out, const ReductionStats& stats, const std::vector<int>& dims);

void write_report_csv(std::ostream& out, const RemovalReport& report);

void write_summary_csv(std::ostream& out, const std::vector<FuzzSummary>& summaries);

}  // namespace phu
