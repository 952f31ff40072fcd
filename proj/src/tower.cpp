#include "toral/tower.hpp"

#include <algorithm>
#include <numeric>

namespace toral {

DivisorChain DivisorChain::of(const std::vector<unsigned>& ks) {
    if (ks.empty())
        throw precondition_error("nonempty chain", "divisor chain must be nonempty");
    for (std::size_t i = 0; i < ks.size(); i++) {
        if (ks[i] == 0)
            throw precondition_error("positive levels", "divisor chain levels must be >= 1");
        if (i + 1 < ks.size()) {
            if (ks[i + 1] <= ks[i])
                throw precondition_error("strictly increasing chain",
                                         "divisor chain must be strictly increasing");
            if (ks[i + 1] % ks[i] != 0)
                throw precondition_error("divisibility chain",
                                         "each level must divide the next");
        }
    }
    DivisorChain c;
    c.levels = ks;
    return c;
}

bool DivisorChain::has(unsigned k) const {
    return std::find(levels.begin(), levels.end(), k) != levels.end();
}

Tower Tower::build(const IntMatrix& A, const DivisorChain& chain) {
    if (!is_hyperbolic(A))
        throw precondition_error("A hyperbolic",
                                 "A not hyperbolic: eigenvalue of modulus 1 detected");
    Tower T;
    T.A_ = A;
    T.chain_ = chain;
    for (unsigned k : chain.levels) {
        BFGroup G = BFGroup::build(A, PolyZ::t_pow_minus_one(k));
        if (G.order() != per_count(A, k))
            throw internal_error("level order disagrees with the periodic point count");
        T.levels_.push_back(std::move(G));
    }
    // coarser relation lattices contain the deeper ones
    for (std::size_t i = 0; i + 1 < T.levels_.size(); i++)
        if (!T.levels_[i].relations().contains(T.levels_[i + 1].relations()))
            throw internal_error("relation lattices are not nested along the chain");
    return T;
}

const BFGroup& Tower::level(unsigned k) const {
    for (std::size_t i = 0; i < chain_.levels.size(); i++)
        if (chain_.levels[i] == k)
            return levels_[i];
    throw precondition_error("level in chain", "level not present in the chain");
}

IntVector Tower::transition(unsigned from_k, unsigned to_k, const IntVector& rep) const {
    if (from_k % to_k != 0)
        throw precondition_error("to_k divides from_k",
                                 "transition maps exist only towards dividing levels");
    const BFGroup& from = level(from_k);
    const BFGroup& to = level(to_k);
    if (from_k == to_k)
        return from.normalize(rep);
    return to.reduce(from.lift(from.normalize(rep)));
}

CoherentTuple Tower::iota(const IntVector& m) const {
    CoherentTuple t;
    t.levels = chain_.levels;
    for (const BFGroup& G : levels_)
        t.entries.push_back(G.reduce(m));
    return t;
}

bool Tower::coherent(const CoherentTuple& t) const {
    if (t.levels != chain_.levels || t.entries.size() != levels_.size())
        return false;
    for (std::size_t i = 0; i + 1 < levels_.size(); i++) {
        IntVector down = transition(chain_.levels[i + 1], chain_.levels[i], t.entries[i + 1]);
        if (down != levels_[i].normalize(t.entries[i]))
            return false;
    }
    return true;
}

unsigned order_mod(const IntMatrix& A, const Int& d) {
    if (!A.square())
        throw error("order_mod expects a square matrix");
    if (d < 2)
        throw precondition_error("modulus >= 2", "order_mod expects d >= 2");
    Int dt = det(A);
    Int g;
    mpz_gcd(g.get_mpz_t(), dt.get_mpz_t(), d.get_mpz_t());
    if (g != 1)
        throw precondition_error("gcd(det A, d) = 1",
                                 "A is not invertible modulo d");
    std::size_t n = A.rows();
    auto mod_reduce = [&](IntMatrix& M) {
        for (std::size_t i = 0; i < n; i++)
            for (std::size_t j = 0; j < n; j++)
                mpz_fdiv_r(M(i, j).get_mpz_t(), M(i, j).get_mpz_t(), d.get_mpz_t());
    };
    IntMatrix P = A;
    mod_reduce(P);
    IntMatrix X = P;
    unsigned k = 1;
    const unsigned guard = 10000000;
    while (!X.is_identity()) {
        X = X * P;
        mod_reduce(X);
        if (++k > guard)
            throw error("order_mod: order exceeds the iteration guard");
    }
    return k;
}

CofinalityReport cofinality_check(const IntMatrix& A, const Int& d_max, unsigned k_max) {
    if (!is_hyperbolic(A))
        throw precondition_error("A hyperbolic",
                                 "A not hyperbolic: eigenvalue of modulus 1 detected");
    std::size_t n = A.rows();
    CofinalityReport rep;
    auto relations = [&](unsigned k) {
        return hnf(A.pow(k) - IntMatrix::identity(n));
    };
    for (Int d = 1; d <= d_max; d++) {
        CofinalityEntry e;
        e.d = d;
        e.k = d == 1 ? 1 : order_mod(A, d);
        e.within_k_max = e.k <= k_max;
        e.contained = Lattice::scaled(n, d).contains(relations(e.k));
        rep.all_contained = rep.all_contained && e.contained;
        rep.entries.push_back(e);
    }
    for (unsigned k1 = 1; k1 <= k_max; k1++)
        for (unsigned k2 = k1; k1 * k2 <= k_max; k2++) {
            CofinalityPair p;
            p.k1 = k1;
            p.k2 = k2;
            Lattice meet = lattice_intersection(relations(k1), relations(k2));
            Lattice prod = relations(k1 * k2);
            p.contained = meet.contains(prod);
            p.coprime = std::gcd(k1, k2) == 1;
            if (p.coprime)
                p.equality = (prod == meet);
            rep.all_contained = rep.all_contained && p.contained;
            rep.pairs.push_back(p);
        }
    return rep;
}

// ----------------------------------------------- truncated conjugacies

namespace {

// mixed-radix sweep over all representatives when the order is small
// enough; otherwise a seeded sample. Returns false on a counterexample.
template <typename Check>
bool sweep_reps(const BFGroup& G, const Int& cap, bool* exhaustive, Check check) {
    *exhaustive = G.order() <= cap;
    std::size_t n = G.dim();
    if (*exhaustive) {
        IntVector y(n, Int(0));
        for (;;) {
            if (!check(y))
                return false;
            std::size_t pos = n;
            bool wrapped = true;
            while (pos-- > 0) {
                y[pos] += 1;
                if (y[pos] < G.moduli()[pos]) {
                    wrapped = false;
                    break;
                }
                y[pos] = 0;
            }
            if (wrapped)
                return true;
        }
    }
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x746f77ul);
    for (int t = 0; t < 1000; t++) {
        IntVector y(n);
        for (std::size_t i = 0; i < n; i++)
            y[i] = G.moduli()[i] > 1 ? Int(rng.get_z_range(G.moduli()[i])) : Int(0);
        if (!check(y))
            return false;
    }
    return true;
}

TruncatedConjugacy verify_family(const IntMatrix& H, const Tower& TA, const Tower& TB,
                                 const Int& cap) {
    TruncatedConjugacy tc;
    tc.chain = TA.chain();
    tc.H = H;
    tc.all_ok = true;
    const IntMatrix& A = TA.matrix();
    const IntMatrix& B = TB.matrix();
    for (unsigned k : tc.chain.levels) {
        const BFGroup& GA = TA.level(k);
        const BFGroup& GB = TB.level(k);
        LevelBits bits;
        bits.k = k;
        // exact algebraic checks
        bits.well_defined = true;
        IntMatrix RH = GA.relations().basis() * H;
        for (std::size_t i = 0; i < RH.rows(); i++)
            if (!GB.relations().contains(RH.row(i)))
                bits.well_defined = false;
        IntMatrix D = A * H - H * B;
        bits.intertwines = true;
        for (std::size_t i = 0; i < D.rows(); i++)
            if (!GB.relations().contains(D.row(i)))
                bits.intertwines = false;
        bits.bijective = GA.order() == GB.order() &&
                         lattice_sum(hnf(H), GB.relations()).index() == 1;
        // elementwise confirmation of the intertwining on representatives
        if (bits.well_defined && bits.intertwines) {
            auto psi = [&](const IntVector& y) { return GB.reduce(GA.lift(y) * H); };
            bool ok = sweep_reps(GA, cap, &bits.exhaustive, [&](const IntVector& y) {
                return psi(GA.act(y)) == GB.act(psi(y));
            });
            bits.intertwines = bits.intertwines && ok;
        }
        tc.all_ok = tc.all_ok && bits.well_defined && bits.intertwines && bits.bijective;
        tc.bits.push_back(bits);
    }
    for (std::size_t i = 0; i + 1 < tc.chain.levels.size(); i++) {
        unsigned kc = tc.chain.levels[i], kd = tc.chain.levels[i + 1];
        const BFGroup& GAd = TA.level(kd);
        const BFGroup& GBd = TB.level(kd);
        const BFGroup& GBc = TB.level(kc);
        const BFGroup& GAc = TA.level(kc);
        bool exh = false;
        bool ok = sweep_reps(GAd, cap, &exh, [&](const IntVector& y) {
            IntVector lhs = GBc.reduce(GAc.lift(TA.transition(kd, kc, y)) * H);
            IntVector rhs = TB.transition(kd, kc, GBd.reduce(GAd.lift(y) * H));
            return lhs == rhs;
        });
        tc.transition_commutes.push_back(ok);
        tc.all_ok = tc.all_ok && ok;
    }
    return tc;
}

} // namespace

TruncatedConjugacy induced_conjugacy(const IntMatrix& C, const IntMatrix& A,
                                     const IntMatrix& B, const DivisorChain& chain,
                                     const Int& cap) {
    if (A * C != C * B)
        throw precondition_error("AC = CB", "C does not intertwine A and B");
    if (abs(det(C)) != 1)
        throw precondition_error("C unimodular", "C is not unimodular");
    Tower TA = Tower::build(A, chain); // hyperbolicity checked here
    Tower TB = Tower::build(B, chain);
    TruncatedConjugacy tc = verify_family(C, TA, TB, cap);
    if (!tc.all_ok)
        throw internal_error("induced conjugacy failed verification");
    return tc;
}

TruncSearchResult search_truncated_conjugacy(const IntMatrix& A, const IntMatrix& B,
                                             const DivisorChain& chain, const Int& cap) {
    if (!similar_over_Q(A, B))
        throw precondition_error("A similar to B over Q",
                                 "A and B are not similar over Q");
    Tower TA = Tower::build(A, chain);
    Tower TB = Tower::build(B, chain);
    TruncSearchResult out;
    // cheap certified refutations first
    for (unsigned k : chain.levels)
        if (TA.level(k).factors() != TB.level(k).factors()) {
            out.status = TruncSearchResult::Status::none;
            out.failed_k = k;
            return out;
        }
    unsigned deep = chain.deepest();
    ModuleIsoResult mi = module_isomorphic(TA.level(deep), TB.level(deep), cap);
    if (mi.verdict == Tri::no) {
        out.status = TruncSearchResult::Status::none;
        out.failed_k = deep;
        return out;
    }
    if (mi.verdict == Tri::undecided) {
        out.status = TruncSearchResult::Status::undecided;
        return out;
    }
    // an isomorphism at the deepest level induces the whole family
    TruncatedConjugacy tc = verify_family(*mi.witness, TA, TB, cap);
    if (!tc.all_ok)
        throw internal_error("deep-level isomorphism failed to descend");
    out.status = TruncSearchResult::Status::found;
    out.tc = tc;
    return out;
}

} // namespace toral
