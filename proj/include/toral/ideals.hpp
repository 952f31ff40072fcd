#pragma once

#include <optional>
#include <utility>

#include "toral/bf.hpp"
#include "toral/order.hpp"

namespace toral {

// Full-rank Z-lattice in Q(beta) closed under multiplication by beta:
// (1/den) * rowspan(basis), rows being coordinates in the power basis
// 1, beta, ..., beta^(n-1). Canonical: Hermite basis, minimal den.
class FractionalIdeal {
public:
    static FractionalIdeal unit(const PolyZ& f); // Z[beta]
    static FractionalIdeal from_generator_rows(const PolyZ& f, const IntMatrix& rows,
                                               const Int& den = Int(1));
    // The Latimer-MacDuffee ideal of A: generated by the entries of a
    // right eigenvector Au = beta u read off the adjugate of
    // beta I - A. Requires irreducible charpoly and invertible A.
    static FractionalIdeal from_matrix(const IntMatrix& A);

    const PolyZ& f() const { return f_; }
    const IntMatrix& basis() const { return basis_; }
    const Int& den() const { return den_; }
    std::size_t n() const { return basis_.rows(); }

    Rat norm() const; // |det basis| / den^n
    OrderElement element(std::size_t i) const; // basis row i over den
    bool contains(const OrderElement& x) const;

    bool operator==(const FractionalIdeal& o) const {
        return f_ == o.f_ && den_ == o.den_ && basis_ == o.basis_;
    }
    bool operator!=(const FractionalIdeal& o) const { return !(*this == o); }

private:
    FractionalIdeal() = default;
    PolyZ f_;
    IntMatrix basis_;
    Int den_ = 1;
};

FractionalIdeal ideal_mul(const FractionalIdeal& I, const FractionalIdeal& J);
FractionalIdeal ideal_scale(const FractionalIdeal& I, const OrderElement& g);
// (I : J) = {x in Q(beta) : xJ <= I}
FractionalIdeal ideal_colon(const FractionalIdeal& I, const FractionalIdeal& J);

struct IdealVerdict {
    enum class Relation { weak_equivalent, arithmetically_equivalent, principal, none_found };
    Relation relation = Relation::none_found;
    std::optional<std::pair<FractionalIdeal, FractionalIdeal>> witness_xy;
    std::optional<OrderElement> witness_gamma;
    bool search_bound_reached = false;
};

// Complete decision by colon closure: I and J are weakly equivalent
// iff I (J:I) = J and J (I:J) = I. If some X solves IX = J then
// X <= (J:I) squeezes I (J:I) between IX = J and J; conversely (J:I)
// itself serves as X. No search bound involved.
IdealVerdict weakly_equivalent(const FractionalIdeal& I, const FractionalIdeal& J);

// Bounded search for gamma with gamma I = J among elements of (J:I) of
// the right norm; none_found sets search_bound_reached.
IdealVerdict ideal_equivalent(const FractionalIdeal& I, const FractionalIdeal& J,
                              const Int& bound);

struct CyclicResult {
    bool found = false;
    IntVector xi; // generator: xi, xi A, ..., xi A^(n-1) is a basis
};
CyclicResult is_cyclic_direct(const IntMatrix& A, const Int& bound);

struct CyclicIdealResult {
    Tri verdict = Tri::undecided; // yes or undecided (bounded search)
    std::optional<OrderElement> gamma;
};
CyclicIdealResult is_cyclic_via_ideal(const IntMatrix& A, const Int& bound);

struct ConjugacyResult {
    enum class Status { yes, no, not_found };
    Status status = Status::not_found;
    std::optional<IntMatrix> C; // AC = CB with |det C| = 1
    std::string reason;
};
ConjugacyResult conjugate_over_Z(const IntMatrix& A, const IntMatrix& B, const Int& bound);

// The four equivalent statements for irreducible similar hyperbolic
// pairs: weak equivalence of the ideals decides all of them, and the
// BF comparison must never contradict the verdict.
struct ChainReport {
    bool weak_equivalent = false;
    bool block_conjugate = false;
    bool profinitely_conjugate = false;
    bool strongly_bf_equivalent = false;
    std::optional<std::pair<FractionalIdeal, FractionalIdeal>> witness_xy;
    StrongBFReport cross_check;
};
ChainReport equivalence_chain_report(const IntMatrix& A, const IntMatrix& B,
                                     unsigned max_k = 12, const Int& cap = Int(10000));

} // namespace toral
