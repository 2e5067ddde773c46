#include "doctest.h"
#include "phu/matrix.hpp"
#include "phu/rng.hpp"
#include "support.hpp"

using namespace phu;

namespace {
Column random_column(Rng& rng, index_t rows) {
    Column c;
    for (index_t r = 0; r < rows; ++r)
        if (rng.below(2)) c.push_back(r);
    return c;
}
}  // namespace

TEST_CASE("add_columns is symmetric difference") {
    CHECK(add_columns({0, 1}, {0, 2}) == Column{1, 2});
    CHECK(add_columns({}, {3}) == Column{3});
    CHECK(add_columns({3}, {3}).empty());
}

TEST_CASE("add_columns laws") {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        const auto a = random_column(rng, 12), b = random_column(rng, 12), c = random_column(rng, 12);
        CHECK(add_columns(a, b) == add_columns(b, a));
        CHECK(add_columns(add_columns(a, b), c) == add_columns(a, add_columns(b, c)));
        CHECK(add_columns(a, a).empty());
        CHECK(add_columns(a, {}) == a);
        Column d = b;
        add_into(d, a);
        CHECK(d == add_columns(a, b));
        CHECK(std::is_sorted(d.begin(), d.end()));
    }
}

TEST_CASE("boundary matrix of the triangle") {
    const auto D = boundary_matrix(fixtures::triangle());
    REQUIRE(D.size() == 6);
    CHECK(D.columns[0].empty());
    CHECK(D.columns[3] == Column{0, 1});
    CHECK(D.columns[4] == Column{0, 2});
    CHECK(D.columns[5] == Column{1, 2});
    CHECK(D.dims == std::vector<int>{0, 0, 0, 1, 1, 1});
}

TEST_CASE("boundary of a boundary vanishes") {
    const auto f = fixtures::tetrahedron_boundary();
    const auto D = boundary_matrix(f);
    for (index_t j = 0; j < D.size(); ++j) {
        if (f.dim(j) == 2) CHECK(D.columns[j].size() == 3);
        Column sum;
        for (index_t r : D.columns[j]) add_into(sum, D.columns[r]);
        CHECK(sum.empty());
    }
}

TEST_CASE("matrix_product_check") {
    const auto D = boundary_matrix(fixtures::triangle());
    std::vector<Column> V{{0}, {1}, {2}, {3}, {4}, {3, 4, 5}};
    std::vector<Column> R{{}, {}, {}, {0, 1}, {0, 2}, {}};
    CHECK(matrix_product_check(D, V, R));
    R[5] = {1};
    CHECK_FALSE(matrix_product_check(D, V, R));
    std::vector<char> live{1, 1, 1, 1, 1, 0};
    CHECK(matrix_product_check(D, V, R, live));
    R.pop_back();
    CHECK_THROWS_AS(matrix_product_check(D, V, R), std::invalid_argument);
}
