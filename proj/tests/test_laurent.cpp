#include <doctest.h>

#include "gradalg/laurent.hpp"

using namespace gradalg;

TEST_CASE("laurent ring arithmetic and canonical form") {
    Laurent p = Laurent(1) + Laurent::monomial(1) + Laurent::monomial(2);
    CHECK(p.str() == "1 + q + q^2");
    CHECK(p.eval_one() == 3);
    CHECK(p.min_exp() == 0);
    CHECK(p.max_exp() == 2);

    Laurent q = Laurent::monomial(-1) + Laurent(2);
    CHECK(q.str() == "q^-1 + 2");

    CHECK((p - p).is_zero());
    CHECK((Laurent(1) - Laurent(1)).str() == "0");

    Laurent prod = (Laurent(1) + Laurent::monomial(1)) * (Laurent(1) - Laurent::monomial(1));
    CHECK(prod == Laurent(1) - Laurent::monomial(2));
}

TEST_CASE("bar involution exchanges q and q^-1") {
    Laurent p = Laurent(3) + Laurent::monomial(2, 5) + Laurent::monomial(-1, -1);
    Laurent b = p.bar();
    CHECK(b.coeff(-2) == 5);
    CHECK(b.coeff(1) == -1);
    CHECK(b.coeff(0) == 3);
    CHECK(b.bar() == p);
    // bar is a ring automorphism
    Laurent q = Laurent::monomial(1) + Laurent(1);
    CHECK((p * q).bar() == p.bar() * q.bar());
}

TEST_CASE("shift multiplies by a power of q") {
    Laurent p = Laurent(1) + Laurent::monomial(1);
    CHECK(p.shifted(2) == Laurent::monomial(2) + Laurent::monomial(3));
    CHECK(p.shifted(-1) == Laurent::monomial(-1) + Laurent(1));
}

TEST_CASE("determinants over the laurent ring") {
    // [[1+q, q], [1, 1+q]] has determinant 1 + q + q^2.
    Laurent one_q = Laurent(1) + Laurent::monomial(1);
    std::vector<std::vector<Laurent>> m = {{one_q, Laurent::monomial(1)}, {Laurent(1), one_q}};
    CHECK(laurent_det(m) == Laurent(1) + Laurent::monomial(1) + Laurent::monomial(2));

    std::vector<std::vector<Laurent>> id3 = {
        {Laurent(1), Laurent(), Laurent()},
        {Laurent(), Laurent(1), Laurent()},
        {Laurent(), Laurent(), Laurent(1)},
    };
    CHECK(laurent_det(id3) == Laurent(1));
}
