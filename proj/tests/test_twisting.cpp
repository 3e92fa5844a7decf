#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "koszul/twisting.hpp"
#include "testutil.hpp"

using namespace koszul;
using Q = RationalField;
using G5 = PrimeField;

namespace {

template <class F>
Mat<F> scalar_s11(F f, long q) {
    Mat<F> s(f, 1, 1);
    s.at(0, 0) = f.from_long(q);
    return s;
}

// monomial twisting map: sigma(b_i (x) a_j) = c_ij a_j (x) b_i
template <class F>
Mat<F> monomial_s11(F f, std::size_t nb, std::size_t na, const std::vector<long>& c) {
    Mat<F> s(f, na * nb, nb * na);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < na; ++j)
            s.at(j * nb + i, i * na + j) = f.from_long(c[i * na + j]);
    return s;
}

template <class F>
TwistingMap<F> flip_coring_twist(F f, const GradedCoring<F>& C, const GradedCoring<F>& D,
                                 int N) {
    TwistingMap<F> t;
    t.kind = TwistKind::coring;
    t.max_total = N;
    t.left_dims = C.dims;
    t.right_dims = D.dims;
    for (int p = 0; p <= N; ++p)
        for (int q = 0; p + q <= N; ++q)
            t.comp_.emplace(std::make_pair(p, q), flip_matrix(f, C.dims[p], D.dims[q]));
    return t;
}

} // namespace

TEST_CASE("extend_sigma: the quantum plane ladder is q^{pq} times the flip") {
    Q f;
    auto pa = testutil::free1(f, "x");
    auto pb = testutil::free1(f, "y");
    auto s = extend_sigma(pa, pb, scalar_s11(f, 2), 4);
    mpq_class expect(1);
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; p + q <= 4; ++q) {
            mpq_class want(1);
            for (int k = 0; k < p * q; ++k) want *= 2;
            CHECK(s.at(p, q).at(0, 0) == want);
        }
    CHECK(s.has_inverses());
    (void)expect;
}

TEST_CASE("extend_sigma: flip on two polynomial algebras is a twisting map") {
    Q f;
    auto pa = testutil::poly2(f);
    auto pb = testutil::pres(f, {"z", "w"}, {{{1, 0, 1}, {-1, 1, 0}}});
    Mat<Q> s11 = flip_matrix(f, 2, 2);
    auto s = extend_sigma(pa, pb, s11, 4);
    auto A = build_algebra(pa, 4);
    auto B = build_algebra(pb, 4);
    CHECK(check_twist_axioms(s, A, B, 4));
    auto P = twisted_algebra(A, B, s, 4);
    CHECK(P.dims == std::vector<std::size_t>{1, 4, 10, 20, 35}); // k[x,y,z,w]
    CHECK(check_generated_degree_one(P));
}

TEST_CASE("extend_sigma: descent failure reports the offending relation") {
    Q f;
    // A = k<x,y>/(x^2); crossing z by x |-> x + y pushes x(x)x off the relation span
    auto pa = testutil::pres(f, {"x", "y"}, {{{1, 0, 0}}});
    auto pb = testutil::free1(f, "z");
    Mat<Q> s11(f, 2, 2);
    s11.at(0, 0) = f.one(); // x -> x (x) z ...
    s11.at(1, 0) = f.one(); // ... + y (x) z
    s11.at(1, 1) = f.one(); // y -> y (x) z
    CHECK_THROWS_WITH_AS(extend_sigma(pa, pb, s11, 4),
                         doctest::Contains("does not descend"), MathError);
}

TEST_CASE("check_twist_axioms rejects a wrongly-shaped component") {
    Q f;
    auto pa = testutil::free1(f, "x");
    auto pb = testutil::free1(f, "y");
    auto s = extend_sigma(pa, pb, scalar_s11(f, 2), 4);
    auto A = build_algebra(pa, 4);
    auto B = build_algebra(pb, 4);
    CHECK(check_twist_axioms(s, A, B, 4));
    s.comp_.at({1, 1}) = Mat<Q>(f, 2, 2); // grading/shape violation
    CHECK(!check_twist_axioms(s, A, B, 4));
}

TEST_CASE("check_twist_axioms on GF(5) q-scalings") {
    G5 g(5);
    for (long q : {2L, 3L}) {
        auto pa = testutil::free1(g, "x");
        auto pb = testutil::free1(g, "y");
        auto s = extend_sigma(pa, pb, scalar_s11(g, q), 4);
        CHECK(check_twist_axioms(s, build_algebra(pa, 4), build_algebra(pb, 4), 4));
    }
}

TEST_CASE("twisted_algebra: ordinary product, quantum plane, exterior square") {
    Q f;
    auto pa = testutil::free1(f, "x");
    auto pb = testutil::free1(f, "y");
    auto A = build_algebra(pa, 4);
    auto B = build_algebra(pb, 4);

    auto s1 = extend_sigma(pa, pb, scalar_s11(f, 1), 4);
    auto P1 = twisted_algebra(A, B, s1, 4);
    CHECK(P1.dims == std::vector<std::size_t>{1, 2, 3, 4, 5});
    // commutative: m(x (x) y) = m(y (x) x)
    Mat<Q> m11 = P1.mult(1, 1);
    for (std::size_t r = 0; r < m11.rows(); ++r) CHECK(m11.at(r, 1) == m11.at(r, 2));

    G5 g(5);
    auto qa = testutil::free1(g, "x");
    auto qb = testutil::free1(g, "y");
    auto s2 = extend_sigma(qa, qb, scalar_s11(g, 2), 4);
    auto P2 = twisted_algebra(build_algebra(qa, 4), build_algebra(qb, 4), s2, 4);
    CHECK(P2.dims == std::vector<std::size_t>{1, 2, 3, 4, 5});
    // y x = 2^{-1} (x y) reading sigma(y (x) x) = 2 x (x) y: column of y (x) x
    // equals 2 times the column of x (x) y
    Mat<G5> q11 = P2.mult(1, 1);
    for (std::size_t r = 0; r < q11.rows(); ++r)
        CHECK(q11.at(r, 2) == g.mul(2, q11.at(r, 1)));

    auto ea = testutil::ext1(f);
    auto eb = testutil::pres(f, {"y"}, {{{1, 0, 0}}});
    auto s3 = extend_sigma(ea, eb, scalar_s11(f, -1), 4);
    auto P3 = twisted_algebra(build_algebra(ea, 4), build_algebra(eb, 4), s3, 4);
    CHECK(P3.dims == std::vector<std::size_t>{1, 2, 1, 0, 0}); // Lambda(x,y)
}

TEST_CASE("hat_twist: sign pattern and involution") {
    Q f;
    auto C = build_coring(testutil::poly2(f), 4);
    auto D = build_coring(testutil::free2(f), 4);
    auto t = flip_coring_twist(f, C, D, 4);
    auto hat = hat_twist(t);
    CHECK(hat.at(1, 1) == t.at(1, 1).negated());
    CHECK(hat.at(2, 2) == t.at(2, 2));
    CHECK(hat.at(2, 1) == t.at(2, 1));
    auto hh = hat_twist(hat);
    for (const auto& [key, m] : t.comp_) CHECK(hh.at(key.first, key.second) == m);
    TwistingMap<Q> wrong;
    wrong.kind = TwistKind::algebra;
    CHECK_THROWS_AS(hat_twist(wrong), InputError);
}

TEST_CASE("twisted_coring with the flip is the ordinary tensor coring") {
    Q f;
    auto C = build_coring(testutil::ext1(f), 3); // divided powers on one letter
    auto D = build_coring(testutil::free1(f, "v"), 3); // R + V
    auto t = flip_coring_twist(f, C, D, 3);
    CHECK(check_cotwist_axioms(t, C, D, 3));
    auto P = twisted_coring(C, D, t, 3);
    CHECK(P.dims == std::vector<std::size_t>{1, 2, 2, 2});
    // Delta^{1,1}(c (x) d) contains (c,1)(x)(1,d) and the flipped (1,d)(x)(c,1)
    Mat<Q> d11 = P.comult(1, 1);
    // source block order: (C^1 (x) D^0) then (C^0 (x) D^1); the mixed source
    // element lives in degree 2 block (C^1 (x) D^1) at column offset 1 + 0
    // (blocks of degree 2: C^2, C^1D^1, D^2 with dims 1, 1, 0)
    REQUIRE(P.dims[2] == 2);
    CHECK(d11.rows() == 4);
    CHECK(d11.cols() == 2);
    // column of the C^1 (x) D^1 basis vector: rows (c,1)(x)(1,d) = (0,1) and
    // (1,d)(x)(c,0... target basis: [c(x)1, 1(x)d] (x) [c(x)1, 1(x)d]
    CHECK(d11.at(1, 1) == f.one());
    CHECK(d11.at(2, 1) == f.one());
}

TEST_CASE("derive_tau_lambda on the quantum plane") {
    Q f;
    auto pa = testutil::free1(f, "x");
    auto pb = testutil::free1(f, "y");
    auto pairA = build_pair(pa, 4);
    auto pairB = build_pair(pb, 4);
    auto s = extend_sigma(pa, pb, scalar_s11(f, 2), 4);
    auto tl = derive_tau_lambda(pairA, pairB, s, 4);
    CHECK(tl.cond1_ok);
    CHECK(tl.cond2_ok);
    CHECK(tl.cond3_ok);
    CHECK(tl.tau.at(1, 1).at(0, 0) == mpq_class(1, 2));
    CHECK(check_cotwist_axioms(tl.tau, pairA.coring, pairB.coring, 4));
    CHECK(check_entwining_axioms(tl.lambda, pairA.coring, pairB.algebra, 4));

    // flip: tau = flip, lambda = flip
    auto sflip = extend_sigma(pa, pb, scalar_s11(f, 1), 4);
    auto tlf = derive_tau_lambda(pairA, pairB, sflip, 4);
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; p + q <= 4; ++q) {
            CHECK(tlf.tau.at(p, q) ==
                  flip_matrix(f, pairA.coring.dims[p], pairB.coring.dims[q]));
            CHECK(tlf.lambda.at(p, q) ==
                  flip_matrix(f, pairA.coring.dims[p], pairB.algebra.dims[q]));
        }
}

TEST_CASE("entwining axioms fail when a component is zeroed") {
    Q f;
    auto pa = testutil::free1(f, "x");
    auto pb = testutil::free1(f, "y");
    auto pairA = build_pair(pa, 4);
    auto pairB = build_pair(pb, 4);
    auto s = extend_sigma(pa, pb, scalar_s11(f, 2), 4);
    auto tl = derive_tau_lambda(pairA, pairB, s, 4);
    tl.lambda.comp_.at({1, 0}) = Mat<Q>(f, 1, 1); // unit condition broken
    CHECK(!check_entwining_axioms(tl.lambda, pairA.coring, pairB.algebra, 4));
}

TEST_CASE("derive_tau_lambda refuses a non-invertible sigma") {
    Q f;
    auto pa = testutil::poly2(f);
    auto pb = testutil::free1(f, "z");
    // z (x) x and z (x) y both map to x (x) z: not invertible
    auto s = extend_sigma(pa, pb, monomial_s11(f, 1, 2, {1, 0}), 4);
    // patch: monomial_s11 above sets sigma(z (x) x) = x (x) z, sigma(z (x) y) = 0;
    // make the second column x (x) z instead
    Mat<Q> s11(f, 2, 2);
    s11.at(0, 0) = f.one();
    s11.at(0, 1) = f.one();
    auto s2 = extend_sigma(pa, pb, s11, 4);
    auto pairA = build_pair(pa, 4);
    auto pairB = build_pair(pb, 4);
    CHECK(!s2.has_inverses());
    CHECK_THROWS_WITH_AS(derive_tau_lambda(pairA, pairB, s2, 4),
                         doctest::Contains("not invertible"), MathError);
    (void)s;
}

TEST_CASE("twisted_pair: quantum plane and the three-summand corner split") {
    Q f;
    auto pa = testutil::free1(f, "x");
    auto pb = testutil::free1(f, "y");
    auto pairA = build_pair(pa, 4);
    auto pairB = build_pair(pb, 4);
    auto s = extend_sigma(pa, pb, scalar_s11(f, 2), 4);
    auto tp = twisted_pair(pairA, pairB, s, 4);
    CHECK(tp.algebra.dims == std::vector<std::size_t>{1, 2, 3, 4, 5});
    CHECK(tp.coring.dims == std::vector<std::size_t>{1, 2, 1, 0, 0});
    CHECK(check_prekoszul(tp));

    // the pre-Koszul corner vanishes on each summand of (C (x) D)^2
    Mat<Q> corner = prekoszul_defect(tp);
    // (C (x) D)^2 blocks: C^2 (x) R (dim 0 here), C^1 (x) D^1 (dim 1), R (x) D^2 (dim 0)
    CHECK(corner.is_zero());

    // flip on two polynomial algebras: ordinary tensor product is pre-Koszul
    auto qa = testutil::poly2(f);
    auto qb = testutil::pres(f, {"z", "w"}, {{{1, 0, 1}, {-1, 1, 0}}});
    auto pairQA = build_pair(qa, 4);
    auto pairQB = build_pair(qb, 4);
    auto sf = extend_sigma(qa, qb, flip_matrix(f, 2, 2), 4);
    auto tpf = twisted_pair(pairQA, pairQB, sf, 4);
    CHECK(check_prekoszul(tpf));
    Mat<Q> corner2 = prekoszul_defect(tpf);
    CHECK(corner2.is_zero());
    // per-summand: columns of (C (x) D)^2 split as C^2, C^1 (x) D^1, D^2
    std::size_t c2 = pairQA.coring.dims[2], mixed = 4, d2 = pairQB.coring.dims[2];
    REQUIRE(corner2.cols() == c2 + mixed + d2);
    CHECK(corner2.block(0, 0, corner2.rows(), c2).is_zero());
    CHECK(corner2.block(0, c2, corner2.rows(), mixed).is_zero());
    CHECK(corner2.block(0, c2 + mixed, corner2.rows(), d2).is_zero());
}

TEST_CASE("verify_factorization: flip, quantum plane over Q and GF(5)") {
    Q f;
    auto pa = testutil::free1(f, "x");
    auto pb = testutil::free1(f, "y");
    auto pairA = build_pair(pa, 4);
    auto pairB = build_pair(pb, 4);
    CHECK(verify_factorization(pairA, pairB, extend_sigma(pa, pb, scalar_s11(f, 1), 4), 4));
    CHECK(verify_factorization(pairA, pairB, extend_sigma(pa, pb, scalar_s11(f, 2), 4), 4));

    G5 g(5);
    auto ga = testutil::free1(g, "x");
    auto gb = testutil::free1(g, "y");
    auto gA = build_pair(ga, 4);
    auto gB = build_pair(gb, 4);
    CHECK(verify_factorization(gA, gB, extend_sigma(ga, gb, scalar_s11(g, 3), 4), 4));
}

TEST_CASE("Koszulity transfer to the twisted product") {
    Q f;
    auto qa = testutil::poly2(f);
    auto qb = testutil::pres(f, {"z", "w"}, {{{1, 0, 1}, {-1, 1, 0}}});
    auto pairA = build_pair(qa, 4);
    auto pairB = build_pair(qb, 4);
    auto s = extend_sigma(qa, qb, flip_matrix(f, 2, 2), 4);
    REQUIRE(koszul_verdict(pairA, 4).koszul);
    REQUIRE(koszul_verdict(pairB, 4).koszul);
    CHECK(verify_factorization(pairA, pairB, s, 4));
    auto tp = twisted_pair(pairA, pairB, s, 4);
    CHECK(koszul_verdict(tp, 4).koszul);
    // dual-of-product dimensions match the tor diagonal of the product
    auto t = tor_table(tp.algebra, 4);
    for (int n = 0; n <= 4; ++n) CHECK(t.at(n, n) == tp.coring.dims[std::size_t(n)]);
}

TEST_CASE("random monomial twists over GF(5) give pre-Koszul twisted pairs") {
    G5 g(5);
    testutil::Rng rng(777);
    int done = 0;
    while (done < 5) {
        // both factors commutative polynomial on 1 or 2 generators; monomial
        // sigma with nonzero scalars always descends
        auto pick = [&](int which) {
            if (which == 0) return testutil::free1(g, "a");
            if (which == 1) return testutil::poly2(g);
            return testutil::ext2(g);
        };
        auto pa = pick(int(rng.below(3)));
        auto pb = pick(int(rng.below(3)));
        std::vector<long> coeffs;
        for (std::size_t i = 0; i < pa.n_gen() * pb.n_gen(); ++i)
            coeffs.push_back(1 + long(rng.below(4)));
        Mat<G5> s11 = monomial_s11(g, pb.n_gen(), pa.n_gen(), coeffs);
        auto s = extend_sigma(pa, pb, s11, 4);
        auto pairA = build_pair(pa, 4);
        auto pairB = build_pair(pb, 4);
        auto tp = twisted_pair(pairA, pairB, s, 4);
        CHECK(check_prekoszul(tp));
        ++done;
    }
}

TEST_CASE("matrix families: q-scaling, siglamb, equality with extend_sigma") {
    Q f;
    auto pa = testutil::free1(f, "x");
    auto A = build_algebra(pa, 4);
    TwistingMatrixFamily<Q> fam;
    fam.role = TwistingMatrixFamily<Q>::Role::sigma;
    fam.n = 1;
    fam.max_degree = 4;
    fam.entries.resize(1);
    fam.entries[0].resize(1);
    for (int d = 0; d <= 4; ++d) {
        Mat<Q> m = Mat<Q>::identity(f, A.dims[std::size_t(d)]);
        mpq_class qd(1);
        for (int k = 0; k < d; ++k) qd *= 2;
        fam.entries[0][0].push_back(m.scaled(qd));
    }
    auto s = matrix_twisting_build_sigma(A, fam, 4);
    auto s2 = extend_sigma(pa, testutil::free1(f, "y"), scalar_s11(f, 2), 4);
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; p + q <= 4; ++q) CHECK(s.at(p, q) == s2.at(p, q));

    // identity family = flip
    TwistingMatrixFamily<Q> idfam = fam;
    for (int d = 0; d <= 4; ++d)
        idfam.entries[0][0][std::size_t(d)] = Mat<Q>::identity(f, A.dims[std::size_t(d)]);
    auto sid = matrix_twisting_build_sigma(A, idfam, 4);
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; p + q <= 4; ++q)
            CHECK(sid.at(p, q) == flip_matrix(f, ipow_checked(1, unsigned(p)),
                                              A.dims[std::size_t(q)]));

    // lambda family: scaling by q^{-deg} on the dual coring R + V
    auto C = build_coring(pa, 4);
    TwistingMatrixFamily<Q> lam;
    lam.role = TwistingMatrixFamily<Q>::Role::lambda;
    lam.n = 1;
    lam.max_degree = 4;
    lam.entries.resize(1);
    lam.entries[0].resize(1);
    for (int d = 0; d <= 4; ++d) {
        Mat<Q> m = Mat<Q>::identity(f, C.dims[std::size_t(d)]);
        mpq_class qd(1);
        for (int k = 0; k < d; ++k) qd /= 2;
        lam.entries[0][0].push_back(m.scaled(qd));
    }
    auto l = matrix_twisting_build_lambda(C, lam, 4);
    CHECK(check_entwining_axioms(l, C, A, 4));
    CHECK(check_siglamb(fam, lam, A.dims[1], f));

    // sigma scaled by 2 against lambda scaled by 2 over GF(5): 4 != 1
    G5 g(5);
    auto gA = build_algebra(testutil::free1(g, "x"), 4);
    auto gC = build_coring(testutil::free1(g, "x"), 4);
    TwistingMatrixFamily<G5> gs, gl;
    gs.role = TwistingMatrixFamily<G5>::Role::sigma;
    gl.role = TwistingMatrixFamily<G5>::Role::lambda;
    gs.n = gl.n = 1;
    gs.max_degree = gl.max_degree = 4;
    gs.entries.resize(1);
    gs.entries[0].resize(1);
    gl.entries.resize(1);
    gl.entries[0].resize(1);
    for (int d = 0; d <= 4; ++d) {
        G5::Elem q2 = 1;
        for (int k = 0; k < d; ++k) q2 = g.mul(q2, 2);
        gs.entries[0][0].push_back(Mat<G5>::identity(g, gA.dims[std::size_t(d)]).scaled(q2));
        gl.entries[0][0].push_back(Mat<G5>::identity(g, gC.dims[std::size_t(d)]).scaled(q2));
    }
    CHECK(!check_siglamb(gs, gl, gA.dims[1], g));
}

TEST_CASE("matrix family violating sigma2 is rejected with (i, j, degree)") {
    Q f;
    auto A = build_algebra(testutil::free1(f, "x"), 4);
    TwistingMatrixFamily<Q> fam;
    fam.role = TwistingMatrixFamily<Q>::Role::sigma;
    fam.n = 1;
    fam.max_degree = 4;
    fam.entries.resize(1);
    fam.entries[0].resize(1);
    for (int d = 0; d <= 4; ++d)
        fam.entries[0][0].push_back(Mat<Q>::identity(f, A.dims[std::size_t(d)]).scaled(2));
    CHECK_THROWS_WITH_AS(matrix_twisting_build_sigma(A, fam, 4),
                         doctest::Contains("sigma2"), MathError);
}

TEST_CASE("dimension bilinearity of the twisted product") {
    G5 g(5);
    auto pa = testutil::poly2(g);
    auto pb = testutil::free1(g, "z");
    auto A = build_algebra(pa, 4);
    auto B = build_algebra(pb, 4);
    auto s = extend_sigma(pa, pb, flip_matrix(g, 1, 2), 4);
    auto P = twisted_algebra(A, B, s, 4);
    for (int n = 0; n <= 4; ++n) {
        std::size_t want = 0;
        for (int p = 0; p <= n; ++p) want += A.dims[std::size_t(p)] * B.dims[std::size_t(n - p)];
        CHECK(P.dims[std::size_t(n)] == want);
    }
}
