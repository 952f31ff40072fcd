#include "toral/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace toral {

Int det(const IntMatrix& M) {
    if (!M.square())
        throw error("determinant of a non-square matrix");
    std::size_t n = M.rows();
    if (n == 0)
        return 1;
    IntMatrix W = M;
    Int prev = 1;
    int sign = 1;
    Int t1, t2;
    for (std::size_t k = 0; k + 1 < n; k++) {
        if (W(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && W(p, k) == 0)
                p++;
            if (p == n)
                return 0;
            W.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; i++) {
            for (std::size_t j = k + 1; j < n; j++) {
                t1 = W(i, j) * W(k, k);
                t2 = W(i, k) * W(k, j);
                t1 -= t2;
                mpz_divexact(W(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            W(i, k) = 0;
        }
        prev = W(k, k);
    }
    return sign > 0 ? W(n - 1, n - 1) : Int(-W(n - 1, n - 1));
}

CharData char_data(const IntMatrix& A) {
    if (!A.square())
        throw error("characteristic polynomial of a non-square matrix");
    std::size_t n = A.rows();
    CharData out;
    std::vector<Int> coeffs(n + 1);
    coeffs[n] = 1;
    IntMatrix B = IntMatrix::identity(n);
    out.adj.reserve(n);
    for (std::size_t k = 1; k <= n; k++) {
        out.adj.push_back(B);
        IntMatrix C = A * B;
        Int tr = 0;
        for (std::size_t i = 0; i < n; i++)
            tr += C(i, i);
        Int ck;
        Int kk(static_cast<unsigned long>(k));
        if (!mpz_divisible_p(tr.get_mpz_t(), kk.get_mpz_t()))
            throw internal_error("Faddeev-LeVerrier trace not divisible");
        mpz_divexact(ck.get_mpz_t(), tr.get_mpz_t(), kk.get_mpz_t());
        ck = -ck;
        coeffs[n - k] = ck;
        B = C;
        for (std::size_t i = 0; i < n; i++)
            B(i, i) += ck;
    }
    if (!B.is_zero())
        throw internal_error("Cayley-Hamilton check failed in char_data");
    out.poly = PolyZ(coeffs);
    return out;
}

PolyZ charpoly(const IntMatrix& A) {
    return char_data(A).poly;
}

IntMatrix poly_eval_matrix(const PolyZ& g, const IntMatrix& M) {
    if (!M.square())
        throw error("poly_eval_matrix needs a square matrix");
    std::size_t n = M.rows();
    IntMatrix R(n, n);
    if (g.is_zero())
        return R;
    int d = g.degree();
    for (std::size_t i = 0; i < n; i++)
        R(i, i) = g.coeff(d);
    for (int k = d - 1; k >= 0; k--) {
        R = R * M;
        for (std::size_t i = 0; i < n; i++)
            R(i, i) += g.coeff(k);
    }
    return R;
}

std::vector<Int> SNFDecomposition::divisors() const {
    std::size_t n = std::min(D.rows(), D.cols());
    std::vector<Int> d(n);
    for (std::size_t i = 0; i < n; i++)
        d[i] = D(i, i);
    return d;
}

SNFDecomposition snf(const IntMatrix& M) {
    if (!M.square())
        throw error("snf expects a square matrix");
    std::size_t n = M.rows();
    SNFDecomposition S;
    S.D = M;
    S.U = IntMatrix::identity(n);
    S.V = IntMatrix::identity(n);
    IntMatrix& D = S.D;

    for (std::size_t i = 0; i < n; i++) {
        for (;;) {
            // minimal |entry| pivot in the trailing submatrix, ties by
            // lowest (row, col)
            bool found = false;
            std::size_t pr = i, pc = i;
            Int best;
            for (std::size_t r = i; r < n; r++)
                for (std::size_t c = i; c < n; c++) {
                    if (D(r, c) == 0)
                        continue;
                    Int a = abs(D(r, c));
                    if (!found || a < best) {
                        found = true;
                        best = a;
                        pr = r;
                        pc = c;
                    }
                }
            if (!found)
                goto done;
            if (pr != i) {
                D.swap_rows(i, pr);
                S.U.swap_rows(i, pr);
            }
            if (pc != i) {
                D.swap_cols(i, pc);
                S.V.swap_cols(i, pc);
            }
            if (D(i, i) < 0) {
                for (std::size_t j = 0; j < n; j++) {
                    D(i, j) = -D(i, j);
                    S.U(i, j) = -S.U(i, j);
                }
            }
            bool clean = true;
            Int q;
            for (std::size_t r = i + 1; r < n; r++) {
                if (D(r, i) == 0)
                    continue;
                mpz_fdiv_q(q.get_mpz_t(), D(r, i).get_mpz_t(), D(i, i).get_mpz_t());
                for (std::size_t j = 0; j < n; j++) {
                    D(r, j) -= q * D(i, j);
                    S.U(r, j) -= q * S.U(i, j);
                }
                if (D(r, i) != 0)
                    clean = false;
            }
            for (std::size_t c = i + 1; c < n; c++) {
                if (D(i, c) == 0)
                    continue;
                mpz_fdiv_q(q.get_mpz_t(), D(i, c).get_mpz_t(), D(i, i).get_mpz_t());
                for (std::size_t j = 0; j < n; j++) {
                    D(j, c) -= q * D(j, i);
                    S.V(j, c) -= q * S.V(j, i);
                }
                if (D(i, c) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // divisor chain: pivot must divide the whole trailing block
            bool fixed = false;
            for (std::size_t r = i + 1; r < n && !fixed; r++)
                for (std::size_t c = i + 1; c < n && !fixed; c++)
                    if (!mpz_divisible_p(D(r, c).get_mpz_t(), D(i, i).get_mpz_t())) {
                        for (std::size_t j = 0; j < n; j++) {
                            D(i, j) += D(r, j);
                            S.U(i, j) += S.U(r, j);
                        }
                        fixed = true;
                    }
            if (!fixed)
                break;
        }
    }
done:
    return S;
}

IntMatrix inverse_unimodular(const IntMatrix& U) {
    SNFDecomposition s = snf(U);
    if (!s.D.is_identity())
        throw error("inverse_unimodular: matrix is not unimodular");
    return s.V * s.U;
}

// --------------------------------------------------------------- Hermite

namespace {

// Right-to-left column elimination on row generators. Produces the
// canonical form described in linalg.hpp. When `transform` is non-null
// it receives, for every zero row produced, the combination of input
// rows giving that zero row (a basis of the left kernel).
IntMatrix hermite_rows(const IntMatrix& gens, std::vector<IntVector>* kernel_rows) {
    std::size_t m = gens.rows(), n = gens.cols();
    std::vector<IntVector> W(m);
    std::vector<IntVector> Hist;
    for (std::size_t i = 0; i < m; i++)
        W[i] = gens.row(i);
    if (kernel_rows) {
        Hist.assign(m, IntVector());
        for (std::size_t i = 0; i < m; i++) {
            Hist[i].assign(m, Int(0));
            Hist[i][i] = 1;
        }
    }
    std::vector<bool> active(m, true);
    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)

    Int q;
    for (std::size_t cc = n; cc-- > 0;) {
        for (;;) {
            // minimal |entry| among active rows at column cc
            std::size_t best = m;
            for (std::size_t i = 0; i < m; i++) {
                if (!active[i] || W[i][cc] == 0)
                    continue;
                if (best == m || abs(W[i][cc]) < abs(W[best][cc]))
                    best = i;
            }
            if (best == m)
                break;
            if (W[best][cc] < 0) {
                for (Int& x : W[best])
                    x = -x;
                if (kernel_rows)
                    for (Int& x : Hist[best])
                        x = -x;
            }
            bool lone = true;
            for (std::size_t i = 0; i < m; i++) {
                if (!active[i] || i == best || W[i][cc] == 0)
                    continue;
                mpz_fdiv_q(q.get_mpz_t(), W[i][cc].get_mpz_t(), W[best][cc].get_mpz_t());
                for (std::size_t j = 0; j <= cc; j++)
                    W[i][j] -= q * W[best][j];
                if (kernel_rows)
                    for (std::size_t j = 0; j < m; j++)
                        Hist[i][j] -= q * Hist[best][j];
                if (W[i][cc] != 0)
                    lone = false;
            }
            if (lone) {
                active[best] = false;
                pivots.emplace_back(best, cc);
                break;
            }
        }
    }
    if (kernel_rows) {
        kernel_rows->clear();
        for (std::size_t i = 0; i < m; i++)
            if (active[i]) {
                if (!is_zero(W[i]))
                    throw internal_error("active row not zero after elimination");
                kernel_rows->push_back(Hist[i]);
            }
    }
    // pivot rows ordered by ascending pivot column
    std::sort(pivots.begin(), pivots.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    IntMatrix H(pivots.size(), n);
    for (std::size_t i = 0; i < pivots.size(); i++)
        H.set_row(i, W[pivots[i].first]);
    // reduce entries below each pivot into [0, pivot)
    for (std::size_t j = 1; j < pivots.size(); j++)
        for (std::size_t i = j; i-- > 0;) {
            std::size_t c = pivots[i].second;
            if (H(j, c) == 0)
                continue;
            mpz_fdiv_q(q.get_mpz_t(), H(j, c).get_mpz_t(), H(i, c).get_mpz_t());
            if (q == 0)
                continue;
            for (std::size_t k = 0; k <= c; k++)
                H(j, k) -= q * H(i, k);
        }
    return H;
}

} // namespace

Lattice Lattice::from_generators(const IntMatrix& gens) {
    Lattice L;
    L.ambient_ = gens.cols();
    L.basis_ = hermite_rows(gens, nullptr);
    return L;
}

Lattice Lattice::full(std::size_t n) {
    Lattice L;
    L.ambient_ = n;
    L.basis_ = IntMatrix::identity(n);
    return L;
}

Lattice Lattice::scaled(std::size_t n, const Int& d) {
    Lattice L;
    L.ambient_ = n;
    if (d == 0) {
        L.basis_ = IntMatrix(0, n);
        return L;
    }
    L.basis_ = IntMatrix::identity(n) * abs(d);
    return L;
}

bool Lattice::member(const IntVector& x, IntVector* coeffs) const {
    if (x.size() != ambient_)
        throw error("member: ambient dimension mismatch");
    IntVector r = x;
    IntVector co(rank(), Int(0));
    Int q;
    // pivot of row i is its rightmost nonzero entry; eliminate from the
    // largest pivot column down
    for (std::size_t i = rank(); i-- > 0;) {
        // pivot column of row i
        std::size_t c = ambient_;
        for (std::size_t j = ambient_; j-- > 0;)
            if (basis_(i, j) != 0) {
                c = j;
                break;
            }
        if (c == ambient_)
            throw internal_error("zero basis row in lattice");
        if (r[c] == 0)
            continue;
        if (!mpz_divisible_p(r[c].get_mpz_t(), basis_(i, c).get_mpz_t()))
            return false;
        mpz_divexact(q.get_mpz_t(), r[c].get_mpz_t(), basis_(i, c).get_mpz_t());
        for (std::size_t j = 0; j <= c; j++)
            r[j] -= q * basis_(i, j);
        co[i] = q;
    }
    if (!is_zero(r))
        return false;
    if (coeffs)
        *coeffs = co;
    return true;
}

bool Lattice::contains(const IntVector& x) const {
    return member(x, nullptr);
}

bool Lattice::contains(const Lattice& other) const {
    if (ambient_ != other.ambient_)
        throw error("contains: ambient dimension mismatch");
    for (std::size_t i = 0; i < other.rank(); i++)
        if (!contains(other.basis_.row(i)))
            return false;
    return true;
}

Int Lattice::index() const {
    if (!full_rank())
        throw precondition_error("full-rank lattice",
                                 "lattice_index: rank-deficient lattice");
    Int p = 1;
    for (std::size_t i = 0; i < rank(); i++)
        p *= basis_(i, i);
    return abs(p);
}

Lattice hnf(const IntMatrix& gens) {
    return Lattice::from_generators(gens);
}

Lattice int_kernel(const IntMatrix& M) {
    std::vector<IntVector> ker;
    hermite_rows(M, &ker);
    if (ker.empty()) {
        Lattice L = Lattice::from_generators(IntMatrix(0, M.rows()));
        return L;
    }
    return Lattice::from_generators(IntMatrix::from_rows(ker));
}

Lattice lattice_intersection(const Lattice& L1, const Lattice& L2) {
    if (L1.ambient() != L2.ambient())
        throw error("lattice_intersection: ambient dimension mismatch");
    std::size_t n = L1.ambient();
    std::size_t r1 = L1.rank(), r2 = L2.rank();
    // x = u B1 = v B2  <=>  (u|v) in ker [B1; -B2]
    IntMatrix S(r1 + r2, n);
    for (std::size_t i = 0; i < r1; i++)
        for (std::size_t j = 0; j < n; j++)
            S(i, j) = L1.basis()(i, j);
    for (std::size_t i = 0; i < r2; i++)
        for (std::size_t j = 0; j < n; j++)
            S(r1 + i, j) = -L2.basis()(i, j);
    Lattice K = int_kernel(S);
    IntMatrix rows(K.rank(), n);
    for (std::size_t i = 0; i < K.rank(); i++) {
        IntVector u(r1);
        for (std::size_t j = 0; j < r1; j++)
            u[j] = K.basis()(i, j);
        IntVector x = u * L1.basis();
        rows.set_row(i, x);
    }
    return Lattice::from_generators(rows);
}

Lattice lattice_sum(const Lattice& L1, const Lattice& L2) {
    if (L1.ambient() != L2.ambient())
        throw error("lattice_sum: ambient dimension mismatch");
    std::size_t n = L1.ambient();
    IntMatrix S(L1.rank() + L2.rank(), n);
    for (std::size_t i = 0; i < L1.rank(); i++)
        for (std::size_t j = 0; j < n; j++)
            S(i, j) = L1.basis()(i, j);
    for (std::size_t i = 0; i < L2.rank(); i++)
        for (std::size_t j = 0; j < n; j++)
            S(L1.rank() + i, j) = L2.basis()(i, j);
    return Lattice::from_generators(S);
}

} // namespace toral
