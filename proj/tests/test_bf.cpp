#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "toral/bf.hpp"

using namespace toral;
using testutil::random_unimodular;

static const IntMatrix CAT{{2, 1}, {1, 1}};

TEST_CASE("bf_group: pinned examples on the cat map") {
    CHECK(bf_group(CAT, PolyZ{-1, 1}).factors().divisors.empty());   // |det(A-I)| = 1
    CHECK(bf_group(CAT, PolyZ{-1, 0, 1}).factors().divisors ==
          std::vector<Int>{5});
    CHECK(bf_group(CAT, PolyZ{-1, 0, 0, 1}).factors().divisors ==
          std::vector<Int>{4, 4});
    CHECK(bf_k(CAT, 3).factors().divisors == std::vector<Int>{4, 4});
    CHECK(bf_k(CAT, 3).order() == 16);
}

TEST_CASE("bf_group: rejects g outside Q^a; bf_k rejects non-hyperbolic") {
    // (t - 3) kills the eigenvalue-3 direction of diag(3, 2)
    IntMatrix D{{3, 0}, {0, 2}};
    CHECK_THROWS_AS(bf_group(D, PolyZ{-3, 1}), precondition_error);
    CHECK_THROWS_AS(bf_k(IntMatrix{{0, 1}, {-1, 0}}, 2), precondition_error);
    CHECK_THROWS_AS(per_count(IntMatrix{{1, 1}, {0, 1}}, 2), precondition_error);
}

TEST_CASE("bf classic group: factors of g = t-1 equal factors of g = 1-t") {
    std::vector<IntMatrix> mats = {
        CAT,
        IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 2, -1}},
        IntMatrix{{3, 1}, {1, 1}},
    };
    for (const IntMatrix& A : mats) {
        if (det(poly_eval_matrix(PolyZ{-1, 1}, A)) == 0)
            continue;
        CHECK(bf_group(A, PolyZ{-1, 1}).factors() ==
              bf_group(A, PolyZ{1, -1}).factors());
    }
}

TEST_CASE("per_count and duality with the point enumeration, k <= 8") {
    std::vector<IntMatrix> mats = {CAT,
                                   IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 2, -1}}};
    for (const IntMatrix& A : mats)
        for (unsigned k = 1; k <= 8; k++) {
            Int c = per_count(A, k);
            BFGroup G = bf_k(A, k);
            CHECK(G.order() == c);
            PeriodicPoints pts = enumerate_periodic_points(A, k, Int(100000));
            CHECK(Int(static_cast<unsigned long>(pts.nums.size())) == c);
        }
    CHECK(per_count(CAT, 1) == 1);
    CHECK(per_count(CAT, 2) == 5);
    CHECK(per_count(CAT, 3) == 16);
}

TEST_CASE("periodic points: fixed point set, group closure, cap error") {
    PeriodicPoints p1 = enumerate_periodic_points(CAT, 1, Int(10));
    REQUIRE(p1.nums.size() == 1);
    CHECK(is_zero(p1.nums[0]));

    PeriodicPoints p2 = enumerate_periodic_points(CAT, 2, Int(10));
    REQUIRE(p2.nums.size() == 5);
    std::set<std::vector<std::string>> pts;
    for (const IntVector& v : p2.nums) {
        std::vector<std::string> key;
        for (const Int& x : v)
            key.push_back(x.get_str());
        pts.insert(key);
    }
    CHECK(pts.size() == 5); // distinct
    // closure under addition mod 1
    for (const IntVector& a : p2.nums)
        for (const IntVector& b : p2.nums) {
            std::vector<std::string> key;
            for (std::size_t i = 0; i < a.size(); i++) {
                Int s = (a[i] + b[i]) % p2.den;
                key.push_back(s.get_str());
            }
            CHECK(pts.count(key) == 1);
        }
    CHECK_THROWS_AS(enumerate_periodic_points(CAT, 3, Int(5)), precondition_error);
}

TEST_CASE("group_isomorphic: equal chains only") {
    BFGroup G44 = bf_group(CAT, PolyZ{-1, 0, 0, 1}); // [4,4]
    CHECK(group_isomorphic(G44, G44));
    // diag(3,9) - I = diag(2,8): same order 16, different chain
    BFGroup G28 = bf_group(IntMatrix{{3, 0}, {0, 9}}, PolyZ{-1, 1});
    CHECK(G28.factors().divisors == std::vector<Int>{2, 8});
    CHECK(G28.factors().order() == G44.factors().order());
    CHECK_FALSE(group_isomorphic(G44, G28));
}

TEST_CASE("action well-definedness and multiplicative filtering") {
    std::vector<IntMatrix> mats = {CAT,
                                   IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 2, -1}}};
    for (const IntMatrix& A : mats) {
        for (unsigned k = 1; k <= 6; k++) {
            BFGroup G = bf_k(A, k);
            // relations * A stays inside relations
            for (std::size_t i = 0; i < G.relations().rank(); i++)
                CHECK(G.relations().contains(G.relations().basis().row(i) * A));
        }
        for (unsigned k1 = 1; k1 <= 4; k1++)
            for (unsigned k2 = 1; k1 * k2 <= 8; k2++) {
                Lattice L12 = bf_k(A, k1 * k2).relations();
                Lattice meet = lattice_intersection(bf_k(A, k1).relations(),
                                                    bf_k(A, k2).relations());
                CHECK(meet.contains(L12));
            }
    }
}

TEST_CASE("module_isomorphic: identity, conjugates, refutations") {
    BFGroup G = bf_k(CAT, 3);
    ModuleIsoResult self = module_isomorphic(G, G, Int(10000));
    CHECK(self.verdict == Tri::yes);

    std::mt19937_64 rng(1618);
    for (int it = 0; it < 10; it++) {
        IntMatrix U = random_unimodular(rng, 2);
        IntMatrix B = inverse_unimodular(U) * CAT * U;
        for (unsigned k = 1; k <= 5; k++) {
            BFGroup GA = bf_k(CAT, k);
            BFGroup GB = bf_k(B, k);
            CHECK(group_isomorphic(GA, GB));
            ModuleIsoResult mi = module_isomorphic(GA, GB, Int(10000));
            CHECK(mi.verdict == Tri::yes);
            REQUIRE(mi.witness.has_value());
            CHECK(verify_module_witness(GA, GB, *mi.witness));
            // the conjugator itself induces [m] -> [mU]
            CHECK(verify_module_witness(GA, GB, U));
            // module yes implies group yes
            CHECK(group_isomorphic(GA, GB));
        }
    }

    // same order, different invariant factors: fast refutation
    IntMatrix A1{{0, 1}, {-1, 6}};  // companion of t^2 - 6t + 1
    IntMatrix B1{{3, 2}, {4, 3}};   // multiplication on a non-invertible ideal
    BFGroup GA1 = bf_k(A1, 1);
    BFGroup GB1 = bf_k(B1, 1);
    CHECK(GA1.factors().divisors == std::vector<Int>{4});
    CHECK(GB1.factors().divisors == std::vector<Int>{2, 2});
    CHECK(module_isomorphic(GA1, GB1, Int(10000)).verdict == Tri::no);

    // cap produces an honest undecided
    CHECK(module_isomorphic(bf_k(CAT, 6), bf_k(CAT, 6), Int(10)).verdict ==
          Tri::undecided);
}

TEST_CASE("module_isomorphic: group-level mismatch forces no at every k") {
    IntMatrix A1{{0, 1}, {-1, 6}};
    IntMatrix B1{{3, 2}, {4, 3}};
    for (unsigned k = 1; k <= 4; k++) {
        BFGroup GA = bf_k(A1, k);
        BFGroup GB = bf_k(B1, k);
        CHECK_FALSE(group_isomorphic(GA, GB));
        CHECK(module_isomorphic(GA, GB, Int(10000)).verdict == Tri::no);
    }
}

TEST_CASE("strong_bf_equivalent: self, conjugates, the refuted pair") {
    StrongBFReport self = strong_bf_equivalent(CAT, CAT, 12, BFLevelKind::module,
                                               Int(10000));
    CHECK(self.overall == StrongBFReport::Overall::consistent);

    std::mt19937_64 rng(404);
    IntMatrix U = random_unimodular(rng, 2);
    IntMatrix B = inverse_unimodular(U) * CAT * U;
    StrongBFReport conj = strong_bf_equivalent(CAT, B, 8, BFLevelKind::module,
                                               Int(10000));
    CHECK(conj.overall == StrongBFReport::Overall::consistent);
    for (const StrongBFLevel& lv : conj.levels) {
        CHECK(lv.group_ok);
        CHECK(lv.module == Tri::yes);
    }

    IntMatrix A1{{0, 1}, {-1, 6}};
    IntMatrix B1{{3, 2}, {4, 3}};
    StrongBFReport ref = strong_bf_equivalent(A1, B1, 6, BFLevelKind::group,
                                              Int(10000));
    CHECK(ref.overall == StrongBFReport::Overall::refuted);
    CHECK(ref.decisive_k == 1);

    // distinct rejection reasons
    CHECK_THROWS_WITH_AS(
        (void)strong_bf_equivalent(CAT, IntMatrix{{3, 1}, {1, 1}}, 4,
                                   BFLevelKind::group, Int(100)),
        "A and B are not similar over Q", precondition_error);
    CHECK_THROWS_AS((void)strong_bf_equivalent(IntMatrix{{0, 1}, {-1, 0}},
                                               IntMatrix{{0, 1}, {-1, 0}}, 4,
                                               BFLevelKind::group, Int(100)),
                    precondition_error);
}
