#pragma once

#include <optional>
#include <vector>

#include "toral/bf.hpp"

namespace toral {

// Strictly increasing levels, each dividing the next; the constructive
// index set for a finite truncation of the quotient tower.
struct DivisorChain {
    std::vector<unsigned> levels;

    static DivisorChain of(const std::vector<unsigned>& ks);
    std::size_t size() const { return levels.size(); }
    unsigned deepest() const { return levels.back(); }
    bool has(unsigned k) const;
};

// One compatible representative per level of a chain.
struct CoherentTuple {
    std::vector<unsigned> levels;
    std::vector<IntVector> entries; // Smith-coordinate reps
};

// Finite truncation of the quotient tower of A over a divisor chain:
// level k holds Z^n / Z^n(A^k - I) with its induced automorphism.
class Tower {
public:
    static Tower build(const IntMatrix& A, const DivisorChain& chain);

    const IntMatrix& matrix() const { return A_; }
    const DivisorChain& chain() const { return chain_; }
    const BFGroup& level(unsigned k) const;

    // natural epimorphism between levels; to_k must divide from_k
    IntVector transition(unsigned from_k, unsigned to_k, const IntVector& rep) const;
    // m -> the constant tuple of its per-level classes
    CoherentTuple iota(const IntVector& m) const;
    bool coherent(const CoherentTuple& t) const;

private:
    IntMatrix A_;
    DivisorChain chain_;
    std::vector<BFGroup> levels_;
};

// Least k >= 1 with A^k = I mod d; requires gcd(det A, d) = 1.
unsigned order_mod(const IntMatrix& A, const Int& d);

struct CofinalityEntry {
    Int d;
    unsigned k = 0;
    bool within_k_max = false;
    bool contained = false; // N_{k,A} inside d Z^n
};
struct CofinalityPair {
    unsigned k1 = 0, k2 = 0;
    bool contained = false; // N_{k1 k2} inside N_{k1} meet N_{k2}
    bool coprime = false;
    bool equality = false;  // logged when coprime: N_{k1 k2} equals the meet
};
struct CofinalityReport {
    std::vector<CofinalityEntry> entries;
    std::vector<CofinalityPair> pairs;
    bool all_contained = true;
};
CofinalityReport cofinality_check(const IntMatrix& A, const Int& d_max, unsigned k_max);

struct LevelBits {
    unsigned k = 0;
    bool well_defined = false;
    bool intertwines = false;
    bool bijective = false;
    bool exhaustive = false; // enumeration vs seeded sampling
};

// Per-level maps [m]_{k,A} -> [mH]_{k,B} on a chain, with verification
// bits for well-definedness, intertwining, bijectivity and commutation
// with the transition maps.
struct TruncatedConjugacy {
    DivisorChain chain;
    IntMatrix H;
    std::vector<LevelBits> bits;
    std::vector<bool> transition_commutes; // adjacent pairs
    bool all_ok = false;
};

// Finite shadow of the conjugacy-induced profinite map: requires
// AC = CB with unimodular C.
TruncatedConjugacy induced_conjugacy(const IntMatrix& C, const IntMatrix& A,
                                     const IntMatrix& B, const DivisorChain& chain,
                                     const Int& cap = Int(100000));

struct TruncSearchResult {
    enum class Status { found, none, undecided };
    Status status = Status::undecided;
    std::optional<TruncatedConjugacy> tc;
    unsigned failed_k = 0; // level certifying `none`
};

// Searches a compatible family of level isomorphisms, deepest level
// first; coarser maps are induced by the quotients. `none` at some k
// certifies the pair is not strongly BF-equivalent at that k.
TruncSearchResult search_truncated_conjugacy(const IntMatrix& A, const IntMatrix& B,
                                             const DivisorChain& chain, const Int& cap);

} // namespace toral
