#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toral/linalg.hpp"
#include "toral/spectral.hpp"

namespace toral {

// Isomorphism type of a finite abelian group: ascending divisibility
// chain of the nontrivial invariant factors (empty = trivial group).
struct InvariantFactors {
    std::vector<Int> divisors;

    Int order() const {
        Int p = 1;
        for (const Int& d : divisors)
            p *= d;
        return p;
    }
    bool operator==(const InvariantFactors& o) const { return divisors == o.divisors; }
    bool operator!=(const InvariantFactors& o) const { return !(*this == o); }
};

// The group Z^n / Z^n g(A) together with the automorphism [m] -> [mA],
// held in Smith coordinates: a class is the vector y = mV reduced
// componentwise modulo the divisor chain, and the action is the
// conjugate V^{-1} A V applied to y.
class BFGroup {
public:
    static BFGroup build(const IntMatrix& A, const PolyZ& g);

    const IntMatrix& matrix() const { return A_; }
    const PolyZ& poly() const { return g_; }
    const Lattice& relations() const { return relations_; }
    const InvariantFactors& factors() const { return factors_; }
    const std::vector<Int>& moduli() const { return moduli_; } // all n divisors
    const IntMatrix& action() const { return action_; }
    const Int& order() const { return order_; }
    std::size_t dim() const { return A_.rows(); }

    // Smith-coordinate representative of [m], entries in [0, d_i).
    IntVector reduce(const IntVector& m) const;
    // representative -> representative under [m] -> [mA]
    IntVector act(const IntVector& rep) const;
    // some integer vector whose class is the given representative
    IntVector lift(const IntVector& rep) const;
    // y mod divisors, for vectors already in Smith coordinates
    IntVector normalize(const IntVector& y) const;

private:
    PolyZ g_;
    IntMatrix A_;
    Lattice relations_;
    std::vector<Int> moduli_;
    InvariantFactors factors_;
    IntMatrix V_, Vinv_, action_;
    Int order_;
};

BFGroup bf_group(const IntMatrix& A, const PolyZ& g);
BFGroup bf_k(const IntMatrix& A, unsigned k);

// |det(A^k - I)| = order of BF_k(A); errors on non-hyperbolic A.
Int per_count(const IntMatrix& A, unsigned k);

// The k-periodic points of the left action of A on the torus, as exact
// rationals num/den with entries in [0, 1); every point is verified by
// exact multiplication. Errors when the count exceeds `cap`.
struct PeriodicPoints {
    Int den;
    std::vector<IntVector> nums;
};
PeriodicPoints enumerate_periodic_points(const IntMatrix& A, unsigned k, const Int& cap);

bool group_isomorphic(const BFGroup& G1, const BFGroup& G2);

enum class Tri { yes, no, undecided };
const char* tri_str(Tri t);

struct ModuleIsoResult {
    Tri verdict;
    std::optional<IntMatrix> witness; // integer lift H of an isomorphism
};

// Decides whether G1 and G2 (same g, similar matrices) are isomorphic
// as modules over the common coefficient ring, i.e. whether some group
// isomorphism intertwines the induced automorphisms. Exhaustive over
// the finite space of intertwining homomorphisms when that space is
// enumerable; undecided when |G| exceeds `cap` or the space is too big
// and a randomized witness hunt fails.
ModuleIsoResult module_isomorphic(const BFGroup& G1, const BFGroup& G2, const Int& cap);

// Checks that [m] -> [mH] is a well-defined intertwining isomorphism.
bool verify_module_witness(const BFGroup& G1, const BFGroup& G2, const IntMatrix& H);

enum class BFLevelKind { group, module };

struct StrongBFLevel {
    unsigned k = 0;
    InvariantFactors factors_a, factors_b;
    bool group_ok = false;
    Tri module = Tri::undecided; // meaningful at module level only
};

struct StrongBFReport {
    enum class Overall { consistent, refuted, undecided };
    BFLevelKind level = BFLevelKind::group;
    unsigned max_k = 0;
    std::vector<StrongBFLevel> levels;
    Overall overall = Overall::consistent;
    unsigned decisive_k = 0; // refuting / first-undecided level
};

StrongBFReport strong_bf_equivalent(const IntMatrix& A, const IntMatrix& B,
                                    unsigned max_k, BFLevelKind level, const Int& cap);

} // namespace toral
