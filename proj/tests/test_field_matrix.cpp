#include <doctest.h>

#include "helpers.hpp"

using namespace gradalg;

namespace {
const FieldDesc Q = FieldDesc::rational();
const FieldDesc F5 = FieldDesc::prime(5);
}  // namespace

TEST_CASE("scalar arithmetic is exact and canonical") {
    Scalar a = Scalar::from_string(Q, "1/3");
    Scalar b = Scalar::from_string(Q, "2/3");
    CHECK((a + b).is_one());
    CHECK((a * Scalar::from_int(Q, 3)).is_one());
    CHECK(Scalar::from_string(Q, "2/4") == Scalar::from_string(Q, "1/2"));

    Scalar x = Scalar::from_int(F5, 7);
    CHECK(x == Scalar::from_int(F5, 2));
    CHECK((x.inverse() * x).is_one());
    CHECK(Scalar::from_string(F5, "1/2") == Scalar::from_int(F5, 3));
    CHECK_THROWS_AS(Scalar::from_string(F5, "1/5"), alg_error);
}

TEST_CASE("mixed fields are rejected") {
    CHECK_THROWS_AS(Scalar::from_int(Q, 1) + Scalar::from_int(F5, 1), alg_error);
    try {
        Scalar::from_int(Q, 1) * Scalar::from_int(F5, 1);
        CHECK(false);
    } catch (const alg_error& e) {
        CHECK(e.code() == errc::field_mismatch);
    }
}

TEST_CASE("frobenius sanity over F_p: (a+b)^p = a^p + b^p") {
    auto gen = testutil::rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Scalar a = Scalar::from_int(F5, static_cast<long>(gen() % 5));
        Scalar b = Scalar::from_int(F5, static_cast<long>(gen() % 5));
        CHECK((a + b).pow(5) == a.pow(5) + b.pow(5));
    }
}

TEST_CASE("rank: identity, zero, and a dependent row over F_5") {
    CHECK(mat_rank(Mat::identity(Q, 3)) == 3);
    CHECK(mat_rank(Mat(Q, 2, 2)) == 0);

    // [[1,2],[2,4]] over F_5 has rank 1 (hand row reduction).
    Mat m(F5, 2, 2);
    m.at(0, 0) = Scalar::from_int(F5, 1);
    m.at(0, 1) = Scalar::from_int(F5, 2);
    m.at(1, 0) = Scalar::from_int(F5, 2);
    m.at(1, 1) = Scalar::from_int(F5, 4);
    CHECK(mat_rank(m) == 1);
}

TEST_CASE("nullspace: identity, zero matrix, and a hand-solved kernel") {
    CHECK(mat_nullspace(Mat::identity(Q, 4)).cols() == 0);
    CHECK(mat_nullspace(Mat(Q, 2, 3)).cols() == 3);

    // [[1,1]] over Q: kernel spanned by (1,-1).
    Mat m(Q, 1, 2);
    m.at(0, 0) = Scalar::from_int(Q, 1);
    m.at(0, 1) = Scalar::from_int(Q, 1);
    Mat ns = mat_nullspace(m);
    REQUIRE(ns.cols() == 1);
    CHECK(ns.at(0, 0) + ns.at(1, 0) == Scalar::zero(Q));
    CHECK(!ns.at(0, 0).is_zero());
}

TEST_CASE("solve: identity, parametric system, inconsistent system") {
    Mat b(Q, 3, 1);
    b.at(0, 0) = Scalar::from_int(Q, 2);
    b.at(2, 0) = Scalar::from_int(Q, -1);
    auto x = mat_solve(Mat::identity(Q, 3), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    // [[1,1]] x = [3]: any solution (a, 3-a) is accepted; verify exactly.
    Mat m(Q, 1, 2);
    m.at(0, 0) = Scalar::from_int(Q, 1);
    m.at(0, 1) = Scalar::from_int(Q, 1);
    Mat rhs(Q, 1, 1);
    rhs.at(0, 0) = Scalar::from_int(Q, 3);
    auto sol = mat_solve(m, rhs);
    REQUIRE(sol.has_value());
    CHECK(m * *sol == rhs);

    Mat z(Q, 1, 1);  // [[0]] x = [1]
    Mat one(Q, 1, 1);
    one.at(0, 0) = Scalar::from_int(Q, 1);
    CHECK(!mat_solve(z, one).has_value());

    Mat wrong(Q, 2, 1);
    CHECK_THROWS_AS(mat_solve(m, wrong), alg_error);
}

TEST_CASE("rank-nullity on random small matrices over both fields") {
    auto gen = testutil::rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        FieldDesc fd = trial % 2 ? Q : F5;
        std::size_t r = 1 + gen() % 4, c = 1 + gen() % 4;
        Mat m(fd, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::from_int(fd, static_cast<long>(gen() % 7) - 3);
        CHECK(mat_rank(m) + mat_nullspace(m).cols() == c);
        // m times its nullspace vanishes exactly
        Mat ns = mat_nullspace(m);
        if (ns.cols()) CHECK((m * ns).is_zero());
    }
}

TEST_CASE("span utilities: sum, intersection, membership") {
    auto gen = testutil::rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Mat a(Q, 4, 2), b(Q, 4, 2);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                a.at(i, j) = Scalar::from_int(Q, static_cast<long>(gen() % 5) - 2);
                b.at(i, j) = Scalar::from_int(Q, static_cast<long>(gen() % 5) - 2);
            }
        Mat s = span_sum(a, b);
        Mat i = span_intersect(a, b);
        CHECK(s.cols() + i.cols() == col_basis(a).cols() + col_basis(b).cols());
        for (std::size_t c = 0; c < i.cols(); ++c) {
            CHECK(span_contains(a, i.column(c)));
            CHECK(span_contains(b, i.column(c)));
        }
    }
}

TEST_CASE("incremental span tracks dimension and membership") {
    IncrementalSpan span(Q, 3);
    std::vector<Scalar> v1 = {Scalar::from_int(Q, 1), Scalar::from_int(Q, 2), Scalar::from_int(Q, 0)};
    std::vector<Scalar> v2 = {Scalar::from_int(Q, 2), Scalar::from_int(Q, 4), Scalar::from_int(Q, 0)};
    std::vector<Scalar> v3 = {Scalar::from_int(Q, 0), Scalar::from_int(Q, 1), Scalar::from_int(Q, 1)};
    CHECK(span.insert(v1));
    CHECK(!span.insert(v2));  // dependent
    CHECK(span.insert(v3));
    CHECK(span.dim() == 2);
    CHECK(span.contains(v2));
    std::vector<Scalar> out = {Scalar::from_int(Q, 0), Scalar::from_int(Q, 0), Scalar::from_int(Q, 5)};
    CHECK(!span.contains(out));
}

TEST_CASE("determinant over exact fields") {
    Mat m(Q, 2, 2);
    m.at(0, 0) = Scalar::from_int(Q, 2);
    m.at(0, 1) = Scalar::from_int(Q, 1);
    m.at(1, 0) = Scalar::from_int(Q, 7);
    m.at(1, 1) = Scalar::from_int(Q, 4);
    CHECK(mat_det(m) == Scalar::from_int(Q, 1));
    CHECK(mat_det(Mat::identity(F5, 3)).is_one());
    CHECK(mat_det(Mat(Q, 2, 2)).is_zero());
}
