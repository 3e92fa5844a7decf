#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "koszul/complexes.hpp"
#include "testutil.hpp"

using namespace koszul;
using Q = RationalField;
using G5 = PrimeField;

TEST_CASE("homology_dims on hand-built complexes") {
    Q f;
    FiniteComplex<Q> cx;
    cx.field = f;
    cx.comp_dims = {1, 1};
    cx.arrows = {Mat<Q>::identity(f, 1)};
    CHECK(homology_dims(cx) == std::vector<std::size_t>{0, 0});
    CHECK(is_exact(cx));

    FiniteComplex<Q> euler;
    euler.field = f;
    euler.comp_dims = {0, 4, 3};
    euler.arrows = {Mat<Q>(f, 4, 0), Mat<Q>(f, 3, 4)};
    CHECK(!is_exact(euler));

    FiniteComplex<Q> zeros;
    zeros.field = f;
    zeros.comp_dims = {2, 3};
    zeros.arrows = {Mat<Q>(f, 3, 2)};
    CHECK(homology_dims(zeros) == std::vector<std::size_t>{2, 3});

    FiniteComplex<Q> notc;
    notc.field = f;
    notc.comp_dims = {1, 1, 1};
    notc.arrows = {Mat<Q>::identity(f, 1), Mat<Q>::identity(f, 1)};
    CHECK_THROWS_AS(homology_dims(notc), MathError); // d o d != 0
}

TEST_CASE("build_slice: k[x,y] left-comodule slice at m = 2") {
    Q f;
    auto pair = build_pair(testutil::poly2(f), 4);
    auto cx = build_slice(pair, Flavor::left_comodule, 2, true);
    CHECK(cx.comp_dims == std::vector<std::size_t>{1, 4, 3});
    CHECK(is_exact(cx));
    // slice at m = 3 of the augmented left complex is exact with ranks 1, 1, 3
    auto c3 = build_slice(pair, Flavor::left_comodule, 3, true);
    CHECK(is_exact(c3));
}

TEST_CASE("build_slice: m = 0 slices are the canonical two-term complexes") {
    Q f;
    auto pair = build_pair(testutil::poly2(f), 4);
    for (Flavor fl : kAllFlavors) {
        auto cx = build_slice(pair, fl, 0, true);
        CHECK(cx.comp_dims == std::vector<std::size_t>{1, 1});
        CHECK(is_exact(cx));
    }
}

TEST_CASE("build_slice refuses a pair violating the pre-Koszul identity") {
    Q f;
    auto pair = build_pair(testutil::poly2(f), 4);
    PreKoszulPair<Q> bad = pair;
    bad.coring.dims[2] = 4;
    bad.coring.comult_[{1, 1}] = Mat<Q>::identity(f, 4);
    bad.coring.incl.clear();
    CHECK_THROWS_WITH_AS(build_slice(bad, Flavor::left_comodule, 2, true),
                         doctest::Contains("d o d"), MathError);

    // one flipped sign inside Delta^{1,1} is refused with the same diagnostic
    PreKoszulPair<Q> flipped = pair;
    Mat<Q>& d11 = flipped.coring.comult_.at({1, 1});
    d11.at(2, 0) = f.neg(d11.at(2, 0));
    flipped.coring.incl.clear();
    CHECK_THROWS_WITH_AS(build_slice(flipped, Flavor::bimodule, 2, true),
                         doctest::Contains("pre-Koszul"), MathError);
}

TEST_CASE("koszul_verdict passes on the bundled Koszul corpus") {
    Q f;
    for (auto p : {testutil::poly2(f), testutil::ext1(f), testutil::ext2(f),
                   testutil::free2(f)}) {
        auto pair = build_pair(p, 5);
        auto v = koszul_verdict(pair, 5);
        CHECK(v.koszul);
        CHECK(!v.witness_degree.has_value());
        for (const auto& col : v.exact)
            for (bool b : col) CHECK(b);
    }
    // (T(V), R+V) is Koszul
    auto tv = build_pair(testutil::free2(f), 5);
    CHECK(koszul_verdict(tv, 5).koszul);
}

TEST_CASE("truncated coring: not Koszul with witness m = 2, all six flavors fail") {
    Q f;
    auto pair = build_pair(testutil::poly2(f), 4);
    pair.coring = truncate_coring(pair.coring, 1);
    auto v = koszul_verdict(pair, 2);
    CHECK(!v.koszul);
    REQUIRE(v.witness_degree.has_value());
    CHECK(*v.witness_degree == 2);
    for (const auto& col : v.exact) CHECK(!col[2]);
    // the left-comodule slice at m = 2 is 0 -> 4 -> 3 -> 0 (C^2 died)
    auto cx = build_slice(pair, Flavor::left_comodule, 2, true);
    CHECK(cx.comp_dims == std::vector<std::size_t>{0, 4, 3});
    CHECK(!is_exact(cx));
}

TEST_CASE("theorem equivalence: agreement of all six flavors per degree") {
    Q f;
    auto pair = build_pair(testutil::poly2(f), 5);
    CHECK(theorem_equivalence_check(pair, 5));

    auto truncated = build_pair(testutil::poly2(f), 4);
    truncated.coring = truncate_coring(truncated.coring, 1);
    CHECK(theorem_equivalence_check(truncated, 2)); // all fail together at m = 2
}

TEST_CASE("random GF(5) quadratic pairs: six-flavor agreement and reflection") {
    G5 g(5);
    testutil::Rng rng(31337);
    for (int it = 0; it < 10; ++it) {
        auto p = testutil::random_presentation(g, rng, 2 + int(rng.below(2)),
                                               1 + int(rng.below(2)));
        auto pair = build_pair(p, 4);
        CHECK(theorem_equivalence_check(pair, 4));
    }
}

TEST_CASE("K_l slice equals the reversed K^r slice matrix-for-matrix") {
    Q f;
    auto pair = build_pair(testutil::poly3(f), 4);
    for (int m = 1; m <= 4; ++m) {
        auto kl = build_slice(pair, Flavor::left_comodule, m, true);
        auto kr = build_slice(pair, Flavor::right_module, m, true);
        REQUIRE(kl.comp_dims.size() == kr.comp_dims.size());
        CHECK(kl.comp_dims == kr.comp_dims);
        for (std::size_t i = 0; i < kl.arrows.size(); ++i) CHECK(kl.arrows[i] == kr.arrows[i]);
    }
}

TEST_CASE("Koszul implies generated and cogenerated in degree one") {
    Q f;
    for (auto p : {testutil::poly2(f), testutil::ext2(f), testutil::free2(f)}) {
        auto pair = build_pair(p, 4);
        if (koszul_verdict(pair, 4).koszul) {
            CHECK(check_generated_degree_one(pair.algebra));
            CHECK(check_cogenerated_degree_one(pair.coring));
        }
    }
}

TEST_CASE("opposite invariance of the verdict") {
    G5 g(5);
    testutil::Rng rng(555);
    for (int it = 0; it < 4; ++it) {
        auto p = testutil::random_presentation(g, rng, 2, 1 + int(rng.below(2)));
        auto pair = build_pair(p, 4);
        auto v1 = koszul_verdict(pair, 4);
        auto v2 = koszul_verdict(opposite_pair(pair), 4);
        CHECK(v1.koszul == v2.koszul);
        for (std::size_t fi = 0; fi < kAllFlavors.size(); ++fi)
            CHECK(v1.exact[fi] == v2.exact[fi]);
    }
}

TEST_CASE("exact augmented slices have zero Euler characteristic") {
    Q f;
    auto pair = build_pair(testutil::poly2(f), 4);
    for (Flavor fl : kAllFlavors)
        for (int m = 0; m <= 4; ++m) {
            auto cx = build_slice(pair, fl, m, true);
            if (!is_exact(cx)) continue;
            long euler = 0;
            for (std::size_t i = 0; i < cx.comp_dims.size(); ++i)
                euler += (i % 2 ? -1 : 1) * long(cx.comp_dims[i]);
            CHECK(euler == 0);
        }
}
