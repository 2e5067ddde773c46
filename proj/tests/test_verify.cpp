#include "doctest.h"
#include "phu/generate.hpp"
#include "phu/rng.hpp"
#include "phu/verify.hpp"
#include "support.hpp"

using namespace phu;
using fixtures::bar;

TEST_CASE("oracle on the triangle") {
    const auto f = fixtures::triangle();
    CHECK(oracle_barcode(f) == fixtures::sorted_bars({bar(0, {1}), bar(0, {2}, {1, 2}), bar(0, {3}, {1, 3}),
                                                      bar(1, {2, 3})}));
    CHECK(oracle_barcode(f, 0) == fixtures::sorted_bars({bar(0, {2}), bar(0, {3}, {2, 3})}));
}

TEST_CASE("the same edge removal gives three different barcodes") {
    std::vector<NamedBarcode> seen;
    for (int k = 1; k <= 3; ++k) {
        const auto f = fixtures::square(k);
        const auto res = check_removal(f, 4, Algorithm::esmur);
        CHECK(res.passed());
        seen.push_back(oracle_barcode(f, 4));
    }
    CHECK(seen[0] != seen[1]);
    CHECK(seen[1] != seen[2]);
    CHECK(seen[0] != seen[2]);
}

TEST_CASE("rank criterion") {
    const auto D = boundary_matrix(fixtures::triangle());
    const auto red = sba_reduce(D);
    CHECK(check_rank_criterion(D.columns, red.dec.R));
    auto bad = red.dec.R;
    bad[4] = {0, 1};  // same pivot as column 3
    CHECK_FALSE(check_rank_criterion(D.columns, bad));
    std::vector<Column> one{{}};
    CHECK(check_rank_criterion(one, one));
    const auto big = boundary_matrix(fixtures::path(7));
    CHECK_THROWS_AS(check_rank_criterion(big.columns, big.columns), std::invalid_argument);
}

TEST_CASE("rank criterion holds for every small reduction") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto f = shuffled_filtration(4, seed);  // 4 + 6 + 4 simplices, keep 12
        Filtration g;
        for (index_t p = 0; p < 12; ++p) g.push_back(f.simplex(p), f.value(p));
        REQUIRE_FALSE(validate_filtration(g));
        const auto D = boundary_matrix(g);
        CHECK(check_rank_criterion(D.columns, sba_reduce(D).dec.R));
    }
}

TEST_CASE("diff_barcodes reports both sides") {
    const NamedBarcode a{bar(0, {1}), bar(0, {2}, {1, 2})};
    const NamedBarcode b{bar(0, {1}), bar(0, {2}, {2, 3})};
    const auto d = diff_barcodes(a, b);
    REQUIRE(d.size() == 2);
    CHECK(d[0].ours_only);
    CHECK_FALSE(d[1].ours_only);
    CHECK(diff_barcodes(a, a).empty());
}

TEST_CASE("maximal removal cases") {
    SUBCASE("positive") {
        const auto f = fixtures::triangle();
        CHECK(classify_maximal_removal(oracle_barcode(f), oracle_barcode(f, 5), f.simplex(5)) ==
              MaximalCase::positive);
    }
    SUBCASE("negative, freed") {
        const auto f = fixtures::path(5);
        const index_t last = f.size() - 1;
        CHECK(classify_maximal_removal(oracle_barcode(f), oracle_barcode(f, last), f.simplex(last)) ==
              MaximalCase::negative_free);
    }
    SUBCASE("negative, freed vertex re-pairs with a later merge") {
        // 03 kills 0; without it, 0 joins the younger 7 and dies at 07 while 7 survives
        const auto f = filtration_from_order({{3}, {7}, {0}, {0, 3}, {0, 7}});
        const auto after = oracle_barcode(f, 3);
        CHECK(after == fixtures::sorted_bars({fixtures::bar(0, {3}), fixtures::bar(0, {7}),
                                              fixtures::bar(0, {0}, {0, 7})}));
        CHECK(classify_maximal_removal(oracle_barcode(f), after, f.simplex(3)) == MaximalCase::negative_free);
    }
    SUBCASE("negative, on a cycle") {
        const auto f = filtration_from_order({{0}, {1}, {2}, {3}, {0, 1}, {1, 2}, {2, 3}, {0, 3}});
        CHECK(classify_maximal_removal(oracle_barcode(f), oracle_barcode(f, 5), f.simplex(5)) ==
              MaximalCase::negative_cycle);
    }
    SUBCASE("nothing matches") {
        const auto f = fixtures::triangle();
        CHECK(classify_maximal_removal(oracle_barcode(f), oracle_barcode(f), f.simplex(5)) ==
              MaximalCase::unclassified);
    }
}

TEST_CASE("maximal removal case follows the branch taken") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const auto f = seed % 2 ? shuffled_filtration(7, seed) : erdos_renyi_filtration(8, seed);
        CofaceIndex idx(f);
        std::vector<index_t> maximal;
        for (index_t p = 0; p < f.size(); ++p)
            if (idx.cofacets(p).empty()) maximal.push_back(p);
        Rng rng(seed);
        const index_t tau = maximal[rng.below(maximal.size())];
        auto red = sba_reduce(boundary_matrix(f));
        const bool positive = red.dec.R[tau].empty();
        const auto rep = mur_remove(red.dec, f, idx, tau, Algorithm::esmur);
        const auto c = classify_maximal_removal(oracle_barcode(f), name_barcode(f, extract_barcode(red.dec)),
                                                f.simplex(tau));
        CAPTURE(seed);
        if (positive)
            CHECK(c == MaximalCase::positive);
        else if (rep.steps[0].branch == Branch::swap)
            CHECK(c == MaximalCase::negative_cycle);
        else
            CHECK(c == MaximalCase::negative_free);
        ++checked;
    }
    CHECK(checked == 150);
}

TEST_CASE("fuzz summaries") {
    GenSpec spec;
    spec.model = Model::erdos_renyi;
    spec.n = 15;
    const auto s = fuzz_removals(spec, 200, 1, 4);
    REQUIRE(s.size() == 2);
    CHECK(s[0].algorithm == Algorithm::smur);
    for (const auto& x : s) {
        CHECK(x.trials == 200);
        CHECK(x.passes == 200);
    }
    const auto again = fuzz_removals(spec, 200, 1, 1);
    CHECK(again[1].max_additions == s[1].max_additions);
    CHECK(again[1].branch_swap == s[1].branch_swap);
    const auto none = fuzz_removals(spec, 0, 1);
    CHECK(none[0].trials == 0);
}

TEST_CASE("fuzz trials do not depend on the thread count") {
    GenSpec spec;
    spec.model = Model::shuffled;
    spec.n = 8;
    const auto a = fuzz_trials(spec, 40, 9, 1);
    const auto b = fuzz_trials(spec, 40, 9, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].seed == b[i].seed);
        CHECK(a[i].sigma == b[i].sigma);
        CHECK(a[i].esmur.our_additions == b[i].esmur.our_additions);
        CHECK(a[i].smur.our_additions == b[i].smur.our_additions);
    }
}
