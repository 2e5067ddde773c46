#include <sstream>

#include "doctest.h"
#include "phu/io.hpp"
#include "support.hpp"

using namespace phu;

TEST_CASE("native round trip") {
    Filtration f;
    f.push_back(Simplex{0}, 0);
    f.push_back(Simplex{1}, 0.25);
    f.push_back(Simplex{0, 1}, 1.0 / 3.0);
    f.push_back(Simplex{2}, std::numeric_limits<double>::infinity());
    std::stringstream ss;
    write_native(ss, f);
    const auto g = read_native(ss);
    REQUIRE(g.size() == f.size());
    for (index_t i = 0; i < f.size(); ++i) {
        CHECK(g.simplex(i) == f.simplex(i));
        CHECK(g.value(i) == f.value(i));
    }
}

TEST_CASE("native parse errors carry line numbers") {
    auto line_of = [](const std::string& text) -> std::size_t {
        std::istringstream in(text);
        try {
            read_native(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("0 0\n# comment\n1 x\n") == 3);
    CHECK(line_of("0 0\n1 1 0\n") == 2);
    CHECK(line_of("nan 0\n") == 1);
    CHECK(line_of("0\n") == 1);
    CHECK(line_of("0 -1\n") == 1);
    CHECK(line_of("0 0\n\n1 1\n") == 0);
}

TEST_CASE("phat round trip and errors") {
    const auto D = boundary_matrix(fixtures::triangle());
    std::stringstream ss;
    write_phat(ss, D);
    CHECK(ss.str() == "0\n0\n0\n1 0 1\n1 0 2\n1 1 2\n");
    const auto E = read_phat(ss);
    CHECK(E.columns == D.columns);
    CHECK(E.dims == D.dims);

    std::istringstream forward("0\n1 0 1\n0\n");
    CHECK_THROWS_AS(read_phat(forward), ParseError);
    std::istringstream wrong_dim("0\n0\n1 0 1\n2 0 2\n");
    CHECK_THROWS_AS(read_phat(wrong_dim), ParseError);
    std::istringstream vertex_with_rows("0\n0 0\n");
    CHECK_THROWS_AS(read_phat(vertex_with_rows), ParseError);
}

TEST_CASE("point clouds and vertex values") {
    std::istringstream pts("0.5, 1\n2 3\n");
    const auto pc = read_point_cloud(pts);
    CHECK(pc.dim == 2);
    CHECK(pc.points[1][0] == 2.0);
    std::istringstream ragged("1 2\n3\n");
    CHECK_THROWS_AS(read_point_cloud(ragged), ParseError);
    std::istringstream vals("0.1\n\n0.7\n");
    CHECK(read_vertex_values(vals) == std::vector<double>{0.1, 0.7});
}

TEST_CASE("barcode csv") {
    const auto f = fixtures::triangle();
    const auto bc = extract_barcode(sba_reduce(boundary_matrix(f)).dec);
    std::ostringstream out;
    write_barcode_csv(out, bc, {0.0, 0.5, 1.0, 1.5, 2.0, 2.5});
    CHECK(out.str() ==
          "dim,birth_index,death_index,birth_value,death_value\n"
          "0,1,3,0.5,1.5\n"
          "0,2,4,1,2\n"
          "0,0,-1,0,\n"
          "1,5,-1,2.5,\n");
}

TEST_CASE("stats csv for the first square") {
    const auto f = fixtures::square(1);
    const auto red = sba_reduce(boundary_matrix(f));
    std::ostringstream out;
    write_stats_csv(out, red.stats, red.dec.D.dims);
    CHECK(out.str() ==
          "index,dim,usage_count,zero_flag\n"
          "0,0,0,F\n1,0,0,F\n2,0,0,F\n3,0,0,F\n"
          "4,1,1,T\n5,1,1,T\n6,1,0,F\n7,1,0,F\n"
          "\ntotal_additions,max_usage,avg_usage,avg_usage_used\n"
          "2,1,0.25,1\n");
}

TEST_CASE("report and summary csv headers") {
    std::ostringstream r, s;
    write_report_csv(r, RemovalReport{});
    CHECK(r.str() == "position,dim,branch,additions_R,additions_V,swaps\n");
    write_summary_csv(s, {});
    CHECK(s.str() == "trials,passes,failures,mode,branch_zero,branch_swap,branch_else,branch_trivial,max_additions\n");
    CHECK(format_value(0.1) == "0.1");
    CHECK(format_value(3) == "3");
}
