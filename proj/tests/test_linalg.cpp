#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "koszul/matrix.hpp"
#include "koszul/subspace.hpp"
#include "koszul/tensor.hpp"
#include "testutil.hpp"

using namespace koszul;
using Q = RationalField;
using G5 = PrimeField;

namespace {

template <class F>
Mat<F> from_rows(F f, std::vector<std::vector<long>> rows) {
    Mat<F> m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = f.from_long(rows[i][j]);
    return m;
}

template <class F>
Mat<F> random_mat(F f, testutil::Rng& rng, std::size_t r, std::size_t c, std::uint32_t p) {
    Mat<F> m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.from_long(long(rng.below(p)));
    return m;
}

} // namespace

TEST_CASE("rank: identity, zero, dependent rows") {
    Q f;
    CHECK(rank(Mat<Q>::identity(f, 2)) == 2);
    CHECK(rank(Mat<Q>(f, 3, 4)) == 0);
    CHECK(rank(from_rows(f, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel_basis: injective map, rank-1 map, exhaustive GF(5) check") {
    Q f;
    CHECK(kernel_basis(Mat<Q>::identity(f, 2)).dim() == 0);

    Mat<Q> m = from_rows(f, {{1, -1}});
    Subspace<Q> k = kernel_basis(m);
    CHECK(k.dim() == 1);
    CHECK(k.basis.at(0, 0) == k.basis.at(1, 0)); // span{(1,1)}
    CHECK((m * k.basis).is_zero());

    G5 g(5);
    Mat<G5> mp = from_rows(g, {{1, 2}, {2, 4}});
    Subspace<G5> kp = kernel_basis(mp);
    CHECK((mp * kp.basis).is_zero());
    // exhaustive: count solutions over GF(5)^2, expect 5^dim
    std::size_t solutions = 0;
    for (std::uint32_t a = 0; a < 5; ++a)
        for (std::uint32_t b = 0; b < 5; ++b) {
            Mat<G5> v(g, 2, 1);
            v.at(0, 0) = a;
            v.at(1, 0) = b;
            if ((mp * v).is_zero()) ++solutions;
        }
    CHECK(solutions == 5u);
    CHECK(kp.dim() == 1);
}

TEST_CASE("subspace_intersect: containment, transversality, joint membership") {
    Q f;
    Subspace<Q> e12 = Subspace<Q>::from_span(from_rows(f, {{1, 0}, {0, 1}, {0, 0}}));
    Subspace<Q> e1 = Subspace<Q>::from_span(from_rows(f, {{1}, {0}, {0}}));
    CHECK(subspace_intersect(e12, e1) == e1);

    Subspace<Q> a = Subspace<Q>::from_span(from_rows(f, {{1}, {0}}));
    Subspace<Q> b = Subspace<Q>::from_span(from_rows(f, {{0}, {1}}));
    CHECK(subspace_intersect(a, b).dim() == 0);

    // span{e1+e2, e3} n span{e1+e2, e4} = span{e1+e2} in k^4
    Subspace<Q> u = Subspace<Q>::from_span(from_rows(f, {{1, 0}, {1, 0}, {0, 1}, {0, 0}}));
    Subspace<Q> v = Subspace<Q>::from_span(from_rows(f, {{1, 0}, {1, 0}, {0, 0}, {0, 1}}));
    Subspace<Q> w = subspace_intersect(u, v);
    CHECK(w.dim() == 1);
    CHECK(w == Subspace<Q>::from_span(from_rows(f, {{1}, {1}, {0}, {0}})));

    CHECK_THROWS_AS(subspace_intersect(a, e1), InputError);
}

TEST_CASE("quotient_map: trivial, full, one-dimensional kernel") {
    Q f;
    Mat<Q> q0 = quotient_map(2, Subspace<Q>::zero(f, 2));
    CHECK(q0.rows() == 2);
    CHECK(rank(q0) == 2);

    Mat<Q> qf = quotient_map(2, Subspace<Q>::full(f, 2));
    CHECK(qf.rows() == 0);

    Subspace<Q> s = Subspace<Q>::from_span(from_rows(f, {{1}, {-1}}));
    Mat<Q> q = quotient_map(2, s);
    CHECK(q.rows() == 1);
    CHECK(rank(q) == 1);
    CHECK((q * s.basis).is_zero());
    CHECK_THROWS_AS(quotient_map(3, s), InputError);
}

TEST_CASE("kronecker: identities, zero, rank multiplicativity over GF(5)") {
    Q f;
    CHECK(Mat<Q>::kronecker(Mat<Q>::identity(f, 2), Mat<Q>::identity(f, 3)) ==
          Mat<Q>::identity(f, 6));
    Mat<Q> a = from_rows(f, {{1, 2}, {3, 4}});
    CHECK(Mat<Q>::kronecker(a, Mat<Q>(f, 2, 2)).is_zero());

    G5 g(5);
    testutil::Rng rng(42);
    for (int it = 0; it < 20; ++it) {
        Mat<G5> x = random_mat(g, rng, 3, 3, 5);
        Mat<G5> y = random_mat(g, rng, 3, 3, 5);
        CHECK(rank(Mat<G5>::kronecker(x, y)) == rank(x) * rank(y));
    }
}

TEST_CASE("kronecker mixed-field inputs are refused") {
    Q f;
    G5 g(5);
    (void)g;
    // different template instantiations cannot mix; same-type field mismatch:
    PrimeField g5(5), g7(7);
    Mat<G5> a = Mat<G5>::identity(g5, 2);
    Mat<G5> b = Mat<G5>::identity(g7, 2);
    CHECK_THROWS_AS(Mat<G5>::kronecker(a, b), InputError);
    (void)f;
}

TEST_CASE("property: rank-nullity and subspace dimension formula") {
    G5 g(5);
    testutil::Rng rng(7);
    for (int it = 0; it < 30; ++it) {
        std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
        Mat<G5> m = random_mat(g, rng, r, c, 5);
        CHECK(rank(m) + kernel_basis(m).dim() == c);

        Mat<G5> sa = random_mat(g, rng, 4, 1 + rng.below(3), 5);
        Mat<G5> sb = random_mat(g, rng, 4, 1 + rng.below(3), 5);
        Subspace<G5> a = Subspace<G5>::from_span(sa);
        Subspace<G5> b = Subspace<G5>::from_span(sb);
        CHECK(subspace_intersect(a, b).dim() + subspace_sum(a, b).dim() == a.dim() + b.dim());
    }
}

TEST_CASE("property: quotient_map composed with inclusion vanishes, rank correct") {
    G5 g(5);
    testutil::Rng rng(11);
    for (int it = 0; it < 20; ++it) {
        std::size_t n = 2 + rng.below(4);
        Subspace<G5> s = Subspace<G5>::from_span(random_mat(g, rng, n, 1 + rng.below(3), 5));
        Mat<G5> q = quotient_map(n, s);
        CHECK((q * s.basis).is_zero());
        CHECK(rank(q) == n - s.dim());
        CHECK(kernel_basis(q) == s);
    }
}

TEST_CASE("property: exact rational ranks survive clearing denominators") {
    Q f;
    testutil::Rng rng(13);
    for (int it = 0; it < 10; ++it) {
        Mat<Q> m(f, 4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                long num = long(rng.below(9)) - 4;
                long den = 1 + long(rng.below(6));
                m.at(i, j) = mpq_class(num, den);
                m.at(i, j).canonicalize();
            }
        // clear denominators row by row
        Mat<Q> cleared = m;
        for (std::size_t i = 0; i < 4; ++i) {
            mpz_class l(1);
            for (std::size_t j = 0; j < 4; ++j)
                l = lcm(l, cleared.at(i, j).get_den());
            for (std::size_t j = 0; j < 4; ++j)
                cleared.at(i, j) = cleared.at(i, j) * mpq_class(l);
        }
        CHECK(rank(m) == rank(cleared));
    }
}

TEST_CASE("solve and inverse") {
    Q f;
    Mat<Q> a = from_rows(f, {{2, 0}, {0, 4}});
    auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK((*inv * a) == Mat<Q>::identity(f, 2));
    CHECK(!inverse(from_rows(f, {{1, 2}, {2, 4}})).has_value());

    Mat<Q> b = from_rows(f, {{1}, {2}});
    auto x = solve(from_rows(f, {{1, 0}, {0, 1}}), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);
    CHECK(!solve(from_rows(f, {{1, 1}, {1, 1}}), b).has_value());
}

TEST_CASE("compositions enumerate in lexicographic order") {
    auto c = compositions(4, 2);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == std::vector<int>{1, 3});
    CHECK(c[1] == std::vector<int>{2, 2});
    CHECK(c[2] == std::vector<int>{3, 1});
    CHECK(compositions(3, 4).empty());
    CHECK(compositions(0, 0).size() == 1);
}
