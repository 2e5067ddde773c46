#include "phu/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace phu {

std::string format_value(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

template <class T>
T parse_number(const std::string& tok, std::size_t line_no, const char* what) {
    T v{};
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw ParseError(line_no, std::string("invalid ") + what + " '" + tok + "'");
    return v;
}

double parse_real(const std::string& tok, std::size_t line_no) {
    if (tok == "inf" || tok == "+inf") return std::numeric_limits<double>::infinity();
    const double v = parse_number<double>(tok, line_no, "number");
    if (std::isnan(v)) throw ParseError(line_no, "NaN is not a valid value");
    return v;
}

std::vector<std::string> tokens(const std::string& line, bool commas) {
    std::string s = line;
    if (commas)
        for (char& c : s)
            if (c == ',') c = ' ';
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Filtration read_native(std::istream& in) {
    Filtration f;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        auto toks = tokens(line, false);
        if (toks.size() < 2) throw ParseError(line_no, "expected 'value v0 [v1 ...]'");
        const double value = parse_real(toks[0], line_no);
        std::vector<vertex_t> verts;
        for (std::size_t i = 1; i < toks.size(); ++i) {
            const auto v = parse_number<vertex_t>(toks[i], line_no, "vertex id");
            if (v < 0) throw ParseError(line_no, "negative vertex id");
            if (!verts.empty() && v <= verts.back()) throw ParseError(line_no, "vertices must be strictly ascending");
            verts.push_back(v);
        }
        f.push_back(Simplex(std::move(verts)), value);
    }
    return f;
}

void write_native(std::ostream& out, const Filtration& f) {
    for (const auto& e : f.entries) {
        out << format_value(e.value);
        for (vertex_t v : e.simplex.vertices) out << ' ' << v;
        out << '\n';
    }
}

BoundaryMatrix read_phat(std::istream& in) {
    BoundaryMatrix D;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        auto toks = tokens(line, false);
        const int dim = parse_number<int>(toks[0], line_no, "dimension");
        if (dim < 0) throw ParseError(line_no, "negative dimension");
        Column col;
        for (std::size_t i = 1; i < toks.size(); ++i) {
            const auto r = parse_number<index_t>(toks[i], line_no, "row index");
            if (r < 0 || r >= D.size())
                throw ParseError(line_no, "row " + toks[i] + " does not name an earlier column");
            if (!col.empty() && r <= col.back()) throw ParseError(line_no, "row indices must be strictly ascending");
            if (D.dims[r] != dim - 1) throw ParseError(line_no, "row " + toks[i] + " has the wrong dimension");
            col.push_back(r);
        }
        if (dim == 0 && !col.empty()) throw ParseError(line_no, "a vertex column must be empty");
        D.columns.push_back(std::move(col));
        D.dims.push_back(dim);
    }
    return D;
}

void write_phat(std::ostream& out, const BoundaryMatrix& D) {
    for (index_t j = 0; j < D.size(); ++j) {
        out << D.dims[j];
        for (index_t r : D.columns[j]) out << ' ' << r;
        out << '\n';
    }
}

PointCloud read_point_cloud(std::istream& in) {
    PointCloud pc;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        std::vector<double> p;
        for (const auto& tok : tokens(line, true)) {
            const double x = parse_real(tok, line_no);
            if (!std::isfinite(x)) throw ParseError(line_no, "coordinates must be finite");
            p.push_back(x);
        }
        if (pc.points.empty()) pc.dim = p.size();
        if (p.size() != pc.dim)
            throw ParseError(line_no, "expected " + std::to_string(pc.dim) + " coordinates, got " +
                                          std::to_string(p.size()));
        pc.points.push_back(std::move(p));
    }
    return pc;
}

std::vector<double> read_vertex_values(std::istream& in) {
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        auto toks = tokens(line, true);
        if (toks.size() != 1) throw ParseError(line_no, "expected a single value");
        values.push_back(parse_real(toks[0], line_no));
    }
    return values;
}

void write_barcode_csv(std::ostream& out, const Barcode& bc, const std::vector<double>& values) {
    auto value_of = [&](index_t pos) {
        return values.empty() ? format_value(static_cast<double>(pos)) : format_value(values[pos]);
    };
    out << "dim,birth_index,death_index,birth_value,death_value\n";
    for (const Bar& b : bc.all()) {
        out << b.dim << ',' << b.birth << ',' << b.death << ',' << value_of(b.birth) << ',';
        if (!b.essential()) out << value_of(b.death);
        out << '\n';
    }
}

void write_stats_csv(std::ostream& out, const ReductionStats& stats, const std::vector<int>& dims) {
    out << "index,dim,usage_count,zero_flag\n";
    for (std::size_t i = 0; i < stats.usage_count.size(); ++i)
        out << i << ',' << dims[i] << ',' << stats.usage_count[i] << ',' << (stats.zero_flag[i] ? 'T' : 'F')
            << '\n';
    out << "\ntotal_additions,max_usage,avg_usage,avg_usage_used\n";
    out << stats.total_additions << ',' << stats.max_usage() << ',' << format_value(stats.avg_usage()) << ','
        << format_value(stats.avg_usage_used()) << '\n';
}

void write_report_csv(std::ostream& out, const RemovalReport& report) {
    out << "position,dim,branch,additions_R,additions_V,swaps\n";
    for (const auto& s : report.steps)
        out << s.position << ',' << s.dim << ',' << to_string(s.branch) << ',' << s.additions_R << ','
            << s.additions_V << ',' << s.swaps << '\n';
}

void write_summary_csv(std::ostream& out, const std::vector<FuzzSummary>& summaries) {
    out << "trials,passes,failures,mode,branch_zero,branch_swap,branch_else,branch_trivial,max_additions\n";
    for (const auto& s : summaries)
        out << s.trials << ',' << s.passes << ',' << s.failures << ',' << to_string(s.algorithm) << ','
            << s.branch_zero << ',' << s.branch_swap << ',' << s.branch_else << ',' << s.branch_trivial << ','
            << s.max_additions << '\n';
}

}  // namespace phu
