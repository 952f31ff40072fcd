#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "toral/linalg.hpp"

using namespace toral;
using testutil::naive_det;
using testutil::random_matrix;
using testutil::random_unimodular;

TEST_CASE("det: pinned examples") {
    CHECK(det(IntMatrix::identity(2)) == 1);
    // oracle: cofactor expansion 2*1 - 1*1 = 1
    IntMatrix A{{2, 1}, {1, 1}};
    CHECK(naive_det(A) == 1);
    CHECK(det(A) == 1);
    // 4*1 - 3*3 = -5
    IntMatrix B{{4, 3}, {3, 1}};
    CHECK(naive_det(B) == -5);
    CHECK(det(B) == -5);
    CHECK(det(IntMatrix{{0, 0}, {0, 0}}) == 0);
}

TEST_CASE("det: agrees with cofactor oracle and is multiplicative") {
    std::mt19937_64 rng(20240901);
    for (int it = 0; it < 200; it++) {
        std::size_t n = 1 + static_cast<std::size_t>(rng() % 5);
        IntMatrix M = random_matrix(rng, n, n, -9, 9);
        CHECK(det(M) == naive_det(M));
        IntMatrix N = random_matrix(rng, n, n, -9, 9);
        CHECK(det(M * N) == det(M) * det(N));
    }
}

TEST_CASE("charpoly: pinned examples") {
    CHECK(charpoly(IntMatrix::identity(2)) == PolyZ{1, -2, 1});
    CHECK(charpoly(IntMatrix{{2, 1}, {1, 1}}) == PolyZ{1, -3, 1});
    // companion-matrix identity for f = t^3 + t^2 - 2t - 1
    IntMatrix C{{0, 1, 0}, {0, 0, 1}, {1, 2, -1}};
    CHECK(charpoly(C) == PolyZ{-1, -2, 1, 1});
}

TEST_CASE("charpoly: Cayley-Hamilton and adjugate identity") {
    std::mt19937_64 rng(77);
    for (int it = 0; it < 60; it++) {
        std::size_t n = 1 + static_cast<std::size_t>(rng() % 4);
        IntMatrix M = random_matrix(rng, n, n, -6, 6);
        CharData cd = char_data(M);
        CHECK(cd.poly.is_monic());
        CHECK(cd.poly.degree() == static_cast<int>(n));
        CHECK(poly_eval_matrix(cd.poly, M).is_zero());
        // (tI - M) * adj(tI - M) = f(t) I, compared coefficientwise:
        // coefficient of t^k on the left is adj[n-k] - M*adj[n-1-k].
        for (std::size_t k = 0; k <= n; k++) {
            IntMatrix lhs(n, n);
            std::size_t i1 = n - k; // index of adj coefficient multiplied by t
            if (i1 < n)
                lhs = lhs + cd.adj[i1];
            if (k < n)
                lhs = lhs - M * cd.adj[n - 1 - k];
            IntMatrix rhs(n, n);
            for (std::size_t i = 0; i < n; i++)
                rhs(i, i) = cd.poly.coeff(k);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("poly_eval_matrix: pinned examples") {
    IntMatrix A{{2, 1}, {1, 1}};
    CHECK(poly_eval_matrix(PolyZ{-1, 1}, A) == IntMatrix{{1, 1}, {1, 0}});
    // M^2 = [[5,3],[3,2]] so M^2 - I = [[4,3],[3,1]]
    CHECK(poly_eval_matrix(PolyZ{-1, 0, 1}, A) == IntMatrix{{4, 3}, {3, 1}});
    CHECK(poly_eval_matrix(charpoly(A), A).is_zero());
}

TEST_CASE("snf: pinned examples") {
    CHECK(snf(IntMatrix::identity(2)).divisors() == std::vector<Int>{1, 1});
    CHECK(snf(IntMatrix{{12, 8}, {8, 4}}).divisors() == std::vector<Int>{4, 4});
    CHECK(snf(IntMatrix{{4, 3}, {3, 1}}).divisors() == std::vector<Int>{1, 5});
}

static void check_snf_contract(const IntMatrix& M) {
    SNFDecomposition s = snf(M);
    CHECK(s.U * M * s.V == s.D);
    CHECK(abs(det(s.U)) == 1);
    CHECK(abs(det(s.V)) == 1);
    auto d = s.divisors();
    Int prod = 1;
    for (std::size_t i = 0; i < d.size(); i++) {
        CHECK(d[i] >= 0);
        if (i + 1 < d.size()) {
            if (d[i] == 0)
                CHECK(d[i + 1] == 0);
            else
                CHECK(d[i + 1] % d[i] == 0);
        }
        prod *= d[i];
    }
    CHECK(prod == abs(det(M)));
    for (std::size_t i = 0; i < s.D.rows(); i++)
        for (std::size_t j = 0; j < s.D.cols(); j++)
            if (i != j)
                CHECK(s.D(i, j) == 0);
}

TEST_CASE("snf: randomized contract incl. singular inputs") {
    std::mt19937_64 rng(123456);
    for (int it = 0; it < 200; it++) {
        std::size_t n = 1 + static_cast<std::size_t>(rng() % 5);
        IntMatrix M = random_matrix(rng, n, n, -9, 9);
        check_snf_contract(M);
    }
    check_snf_contract(IntMatrix{{0, 0}, {0, 0}});
    check_snf_contract(IntMatrix{{1, 2}, {2, 4}}); // rank 1
}

TEST_CASE("hnf: pinned examples") {
    CHECK(hnf(IntMatrix::identity(2)).basis() == IntMatrix::identity(2));
    CHECK(hnf(IntMatrix{{1, 1}, {1, 0}}).basis() == IntMatrix::identity(2));
    IntMatrix G{{2, 0}, {0, 2}, {2, 2}};
    CHECK(hnf(G).basis() == IntMatrix{{2, 0}, {0, 2}});
}

TEST_CASE("hnf: canonical for the row space, idempotent") {
    std::mt19937_64 rng(999);
    for (int it = 0; it < 120; it++) {
        std::size_t n = 2 + static_cast<std::size_t>(rng() % 3);
        std::size_t m = n + static_cast<std::size_t>(rng() % 3);
        IntMatrix M = random_matrix(rng, m, n, -9, 9);
        Lattice L = hnf(M);
        // idempotence
        CHECK(hnf(L.basis()) == L);
        // row-equivalent generators give the identical basis
        IntMatrix U = random_unimodular(rng, m);
        CHECK(hnf(U * M) == L);
        // canonical shape: positive pivots, below-pivot entries reduced
        const IntMatrix& H = L.basis();
        for (std::size_t i = 0; i < L.rank(); i++) {
            std::size_t c = n;
            for (std::size_t j = n; j-- > 0;)
                if (H(i, j) != 0) {
                    c = j;
                    break;
                }
            REQUIRE(c != n);
            CHECK(H(i, c) > 0);
            for (std::size_t r = i + 1; r < L.rank(); r++) {
                CHECK(H(r, c) >= 0);
                CHECK(H(r, c) < H(i, c));
            }
        }
    }
}

TEST_CASE("int_kernel: pinned examples") {
    CHECK(int_kernel(IntMatrix::identity(2)).rank() == 0);
    // x*2 - y*1 = 0, saturated
    IntMatrix M(2, 1);
    M(0, 0) = 2;
    M(1, 0) = -1;
    Lattice K = int_kernel(M);
    CHECK(K.rank() == 1);
    CHECK(K.basis() == IntMatrix{{1, 2}});
}

TEST_CASE("int_kernel: commutant of the cat map has rank 2") {
    IntMatrix A{{2, 1}, {1, 1}};
    // C -> AC - CA as 4x4 acting on vec(C) row vectors
    std::size_t n = 2;
    IntMatrix K(n * n, n * n);
    for (std::size_t i = 0; i < n; i++)
        for (std::size_t j = 0; j < n; j++)
            for (std::size_t k = 0; k < n; k++) {
                // (AC)_{ij} = sum_k A_{ik} C_{kj}
                K(k * n + j, i * n + j) += A(i, k);
                // (CA)_{ij} = sum_k C_{ik} A_{kj}
                K(i * n + k, i * n + j) -= A(k, j);
            }
    Lattice ker = int_kernel(K);
    CHECK(ker.rank() == 2);
    IntVector vecI{1, 0, 0, 1};
    IntVector vecA{2, 1, 1, 1};
    CHECK(ker.contains(vecI));
    CHECK(ker.contains(vecA));
}

TEST_CASE("int_kernel: saturation via rational rank") {
    std::mt19937_64 rng(4242);
    for (int it = 0; it < 80; it++) {
        std::size_t m = 2 + static_cast<std::size_t>(rng() % 3);
        std::size_t c = 1 + static_cast<std::size_t>(rng() % 3);
        IntMatrix M = random_matrix(rng, m, c, -5, 5);
        Lattice K = int_kernel(M);
        for (std::size_t i = 0; i < K.rank(); i++)
            CHECK(is_zero(K.basis().row(i) * M));
        // saturation: for any prime q dividing an elementary divisor of
        // the stacked kernel basis, no vector x/q would also be a
        // solution; equivalent check: kernel basis extends to rank m
        // with the right rank count (rank M + rank ker = m over Q).
        // Rational rank of M equals m - rank(K):
        Lattice rowspace = hnf(M.transpose());
        CHECK(rowspace.rank() + K.rank() == m);
        // membership is closed under division: q*x in K with x integer
        // not in K would contradict saturation; scan small multiples.
        for (std::size_t i = 0; i < K.rank(); i++) {
            IntVector r = K.basis().row(i);
            bool divisible_by_2 = true;
            for (const Int& x : r)
                if (x % 2 != 0)
                    divisible_by_2 = false;
            if (divisible_by_2) {
                IntVector h(r.size());
                for (std::size_t j = 0; j < r.size(); j++)
                    h[j] = r[j] / 2;
                CHECK(K.contains(h)); // half-vector solves, must be inside
            }
        }
    }
}

TEST_CASE("lattice ops: pinned examples") {
    IntMatrix A{{2, 1}, {1, 1}};
    Lattice N1 = hnf(poly_eval_matrix(PolyZ{-1, 1}, A));        // Z^2 (A - I)
    Lattice N2 = hnf(poly_eval_matrix(PolyZ{-1, 0, 1}, A));     // Z^2 (A^2 - I)
    CHECK(lattice_intersection(N1, N1) == N1);
    CHECK(lattice_intersection(Lattice::full(2), N2) == N2);
    // A - I is unimodular, so N1 = Z^2 and the intersection is N2
    CHECK(N1 == Lattice::full(2));
    CHECK(lattice_intersection(N1, N2) == N2);
    CHECK(N1.contains(N2));

    CHECK(Lattice::full(2).index() == 1);
    CHECK(Lattice::scaled(2, 3).index() == 9); // [Z^n : dZ^n] = d^n
    CHECK_THROWS_AS(hnf(IntMatrix{{1, 2}, {2, 4}}).index(), precondition_error);
}

TEST_CASE("lattice index equals product of pivots and |det|") {
    std::mt19937_64 rng(31337);
    for (int it = 0; it < 100; it++) {
        std::size_t n = 1 + static_cast<std::size_t>(rng() % 4);
        IntMatrix M = random_matrix(rng, n, n, -7, 7);
        if (det(M) == 0)
            continue;
        Lattice L = hnf(M);
        CHECK(L.index() == abs(det(M)));
        CHECK(L.index() == abs(det(L.basis())));
    }
}

TEST_CASE("inverse_unimodular") {
    std::mt19937_64 rng(55);
    for (int it = 0; it < 50; it++) {
        std::size_t n = 1 + static_cast<std::size_t>(rng() % 4);
        IntMatrix U = random_unimodular(rng, n);
        IntMatrix Ui = inverse_unimodular(U);
        CHECK((U * Ui).is_identity());
        CHECK((Ui * U).is_identity());
    }
    CHECK_THROWS(inverse_unimodular(IntMatrix{{2, 0}, {0, 1}}));
}
