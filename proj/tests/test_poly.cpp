#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "toral/order.hpp"
#include "toral/spectral.hpp"

using namespace toral;
using testutil::random_matrix;
using testutil::random_unimodular;

TEST_CASE("poly basics") {
    PolyZ f{1, -3, 1}; // t^2 - 3t + 1
    CHECK(f.degree() == 2);
    CHECK(f.is_monic());
    CHECK(f.eval(Int(1)) == -1);
    CHECK(f.str() == "t^2 - 3t + 1");
    CHECK(PolyZ{}.is_zero());
    CHECK((f * f).degree() == 4);
    CHECK(f.reversal() == f); // palindromic
    PolyZ g{-1, -2, 1, 1};
    CHECK(g.str() == "t^3 + t^2 - 2t - 1");
    PolyZ rem;
    PolyZ q = (f * g + PolyZ{5}).divmod_monic(g, &rem);
    CHECK(q == f);
    CHECK(rem == PolyZ{5});
}

TEST_CASE("poly_gcd: pinned examples") {
    CHECK(poly_gcd(PolyZ{-1, 0, 1}, PolyZ{-1, 1}) == PolyZ{-1, 1}); // t-1
    PolyZ f{1, -3, 1};
    CHECK(poly_gcd(f, f.reversal()) == f); // self-reciprocal
    CHECK(poly_gcd(f, PolyZ{-1, -1, 1}) == PolyZ{1}); // distinct irreducibles
    CHECK_THROWS(poly_gcd(PolyZ{}, PolyZ{}));
}

TEST_CASE("resultant convention: product of g over the roots of monic f") {
    PolyZ f{1, -3, 1}; // roots b1 b2 = 1, b1 + b2 = 3
    CHECK(resultant(f, PolyZ::t()) == 1);         // b1 b2
    CHECK(resultant(f, PolyZ{-1, 1}) == -1);      // (b1-1)(b2-1) = 1 - 3 + 1
    CHECK(resultant(f, PolyZ{5}) == 25);          // 5^deg f
}

TEST_CASE("sturm: exact root counting on closed intervals") {
    // (t-1)(t+2)t = t^3 + t^2 - 2t
    PolyQ p(PolyZ{0, -2, 1, 1});
    CHECK(count_real_roots_closed(p, Rat(-3), Rat(3)) == 3);
    CHECK(count_real_roots_closed(p, Rat(0), Rat(1)) == 2);  // endpoints count
    CHECK(count_real_roots_closed(p, Rat(-1), Rat(1, 2)) == 1);
    // multiplicities collapse: (t-1)^2
    CHECK(count_real_roots_closed(PolyQ(PolyZ{1, -2, 1}), Rat(-2), Rat(2)) == 1);
    // no real roots
    CHECK(count_real_roots_closed(PolyQ(PolyZ{1, 0, 1}), Rat(-10), Rat(10)) == 0);
}

TEST_CASE("is_hyperbolic: pinned examples") {
    CHECK(is_hyperbolic(IntMatrix{{2, 1}, {1, 1}}));
    CHECK_FALSE(is_hyperbolic(IntMatrix{{0, 1}, {-1, 0}})); // eigenvalues +-i
    CHECK_FALSE(is_hyperbolic(IntMatrix{{1, 1}, {0, 1}}));  // eigenvalue 1
    CHECK_THROWS_AS(is_hyperbolic(IntMatrix{{1, 1}, {1, 1}}), precondition_error);
    // companion of t^3 + t^2 - 2t - 1: all roots real, none on the circle
    CHECK(is_hyperbolic(IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 2, -1}}));
    // companion of t^4 - t^3 - 3t^2 + t + 1: non-palindromic quartic
    CHECK(is_hyperbolic(IntMatrix{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
                                  {-1, -1, 3, 1}}));
    // companion of the palindromic t^4 - 3t^3 + 3t^2 - 3t + 1: the
    // substitution polynomial is x^2 - 3x + 1 with a root 0.38.. inside
    // [-2, 2], so two eigenvalues sit on the unit circle (and they are
    // not roots of unity: f(1), f(-1) != 0)
    CHECK_FALSE(is_hyperbolic(
        IntMatrix{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 3, -3, 3}}));
}

TEST_CASE("is_hyperbolic implies det(A^k - I) != 0 for k <= 24") {
    std::vector<IntMatrix> mats = {
        IntMatrix{{2, 1}, {1, 1}},
        IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 2, -1}},
        IntMatrix{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, 3, 1}},
    };
    for (const IntMatrix& A : mats) {
        REQUIRE(is_hyperbolic(A));
        for (unsigned k = 1; k <= 24; k++)
            CHECK(det(A.pow(k) - IntMatrix::identity(A.rows())) != 0);
    }
}

TEST_CASE("is_hyperbolic: agrees for A and its integer inverse") {
    // eigenvalues of the inverse are the reciprocals, so the unit-circle
    // condition is the same on both sides
    std::mt19937_64 rng(808);
    for (int it = 0; it < 25; it++) {
        IntMatrix U = random_unimodular(rng, 2 + rng() % 2);
        CHECK(is_hyperbolic(U) == is_hyperbolic(inverse_unimodular(U)));
    }
}

TEST_CASE("is_irreducible: pinned examples") {
    CHECK(is_irreducible(PolyZ{1, -3, 1}));
    CHECK_FALSE(is_irreducible(PolyZ{-1, 0, 1}));   // t^2 - 1
    CHECK(is_irreducible(PolyZ{1, 0, 0, 0, 1}));    // t^4 + 1, splits mod every prime
    CHECK(is_irreducible(PolyZ{-1, -2, 1, 1}));     // cubic without rational roots
    CHECK_FALSE(is_irreducible(PolyZ{1, 2, 3, 2, 1})); // (t^2+t+1)^2
    CHECK_FALSE(is_irreducible(PolyZ{0, 1, 1}));    // t(t+1)
    CHECK(is_irreducible(PolyZ{-1, 1}));            // degree 1
    CHECK_THROWS_AS(is_irreducible(PolyZ{1, 2}), precondition_error); // non-monic
    // product of two distinct irreducible quadratics
    PolyZ p = PolyZ{1, -3, 1} * PolyZ{-1, -1, 1};
    CHECK_FALSE(is_irreducible(p));
    // quintic: t^5 - t - 1 is irreducible
    CHECK(is_irreducible(PolyZ{-1, -1, 0, 0, 0, 1}));
}

TEST_CASE("minimal_polynomial: pinned examples") {
    CHECK(minimal_polynomial(IntMatrix::identity(2)) == PolyZ{-1, 1});
    IntMatrix A{{2, 1}, {1, 1}};
    CHECK(minimal_polynomial(A) == PolyZ{1, -3, 1});
    IntMatrix AA{{2, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 2, 1}, {0, 0, 1, 1}};
    CHECK(minimal_polynomial(AA) == PolyZ{1, -3, 1});
    // divides charpoly and annihilates
    std::mt19937_64 rng(99);
    for (int it = 0; it < 40; it++) {
        std::size_t n = 1 + rng() % 4;
        IntMatrix M = random_matrix(rng, n, n, -4, 4);
        PolyZ m = minimal_polynomial(M);
        CHECK(poly_eval_matrix(m, M).is_zero());
        PolyZ rem;
        charpoly(M).divmod_monic(m, &rem);
        CHECK(rem.is_zero());
    }
}

TEST_CASE("similar_over_Q: pinned examples and invariance") {
    IntMatrix A{{2, 1}, {1, 1}};
    CHECK(similar_over_Q(A, A));
    IntMatrix C{{0, 1}, {-1, 3}}; // companion of t^2 - 3t + 1
    CHECK(similar_over_Q(A, C));
    CHECK_FALSE(similar_over_Q(IntMatrix::identity(2), IntMatrix{{1, 1}, {0, 1}}));
    std::mt19937_64 rng(2718);
    for (int it = 0; it < 30; it++) {
        std::size_t n = 2 + rng() % 2;
        IntMatrix M = random_matrix(rng, n, n, -5, 5);
        IntMatrix U = random_unimodular(rng, n);
        IntMatrix M2 = inverse_unimodular(U) * M * U;
        CHECK(similar_over_Q(M, M2));
        CHECK(similar_over_Q(M2, M)); // symmetry
    }
}

TEST_CASE("order elements: pinned examples") {
    PolyZ f{1, -3, 1};
    OrderElement one = OrderElement::one(f);
    OrderElement beta = OrderElement::beta(f);
    CHECK(one * beta == beta);
    // beta^2 = 3 beta - 1
    CHECK(beta * beta == OrderElement(f, PolyZ{-1, 3}));
    CHECK(order_norm(beta) == Rat(1));
    CHECK(order_norm(one) == Rat(1));
    // (1/2)(beta + 1) canonical form
    OrderElement h(f, PolyZ{1, 1}, Int(2));
    CHECK(h.den() == 2);
    OrderElement h2(f, PolyZ{2, 2}, Int(4));
    CHECK(h == h2);
    CHECK_THROWS_AS(OrderElement(PolyZ{-1, -1, 1}, PolyZ{1}) + one, precondition_error);
}

TEST_CASE("order norm is multiplicative; inverse works") {
    PolyZ f{-1, -2, 1, 1};
    std::mt19937_64 rng(515);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int it = 0; it < 60; it++) {
        OrderElement a(f, PolyZ{d(rng), d(rng), d(rng)}, Int(1 + (rng() % 3)));
        OrderElement b(f, PolyZ{d(rng), d(rng), d(rng)}, Int(1 + (rng() % 3)));
        CHECK(order_norm(a * b) == order_norm(a) * order_norm(b));
        if (!a.is_zero()) {
            OrderElement ai = a.inverse();
            CHECK(a * ai == OrderElement::one(f));
        }
    }
}
