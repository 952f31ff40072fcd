#include "toral/spectral.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace toral {

bool is_hyperbolic(const IntMatrix& A) {
    if (!A.square())
        throw error("is_hyperbolic expects a square matrix");
    if (det(A) == 0)
        throw precondition_error("A invertible over Q",
                                 "A is singular; toral endomorphism hypothesis fails");
    PolyZ f = charpoly(A);
    if (f.eval(Int(1)) == 0 || f.eval(Int(-1)) == 0)
        return false;
    // every unit-modulus root of f is a root of gcd(f, reversal(f)):
    // |z| = 1 forces conj(z) = 1/z, so z is a root of t^n f(1/t) too.
    PolyZ g = poly_gcd(f, f.reversal());
    if (g.degree() == 0)
        return true;
    // g divides f, so g(1) != 0 != g(-1); roots of g away from +-1 come
    // in reciprocal pairs and g is palindromic of even degree.
    if (g != g.reversal())
        throw internal_error("gcd with reversal is not palindromic");
    int d = g.degree();
    if (d % 2 != 0)
        throw internal_error("palindromic gcd of odd degree without root -1");
    // write g / t^m as q(x) with x = t + 1/t via p_j(x) = t^j + t^-j,
    // p_0 = 2, p_1 = x, p_{j+1} = x p_j - p_{j-1}
    int m = d / 2;
    PolyQ x(PolyZ{0, 1});
    PolyQ pj_prev(PolyZ{2});
    PolyQ pj = x;
    PolyQ q(PolyZ::constant(g.coeff(m)));
    for (int j = 1; j <= m; j++) {
        q = q + pj * Rat(g.coeff(m + j));
        PolyQ next = x * pj - pj_prev;
        pj_prev = pj;
        pj = next;
    }
    // a real root of q in [-2, 2] pulls back to t^2 - x t + 1 = 0 with
    // non-positive discriminant, i.e. a unit-circle root of g
    return count_real_roots_closed(q, Rat(-2), Rat(2)) == 0;
}

// ------------------------------------------------------ irreducibility

namespace {

// Dense polynomial over Z/p for small p, ascending coefficients.
struct PolyP {
    std::uint64_t p;
    std::vector<std::uint64_t> c;

    void trim() {
        while (!c.empty() && c.back() == 0)
            c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
};

PolyP reduce_mod(const PolyZ& f, std::uint64_t p) {
    PolyP r;
    r.p = p;
    r.c.resize(f.coeffs().size());
    Int t;
    for (std::size_t i = 0; i < r.c.size(); i++) {
        t = f.coeff(i) % static_cast<unsigned long>(p);
        if (t < 0)
            t += static_cast<unsigned long>(p);
        r.c[i] = t.get_ui();
    }
    r.trim();
    return r;
}

PolyP mulmod(const PolyP& a, const PolyP& b, const PolyP& f) {
    PolyP r{a.p, {}};
    if (a.c.empty() || b.c.empty())
        return r;
    std::vector<std::uint64_t> t(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); i++)
        for (std::size_t j = 0; j < b.c.size(); j++)
            t[i + j] = (t[i + j] + a.c[i] * b.c[j]) % a.p;
    // reduce mod monic f
    int df = f.degree();
    std::uint64_t p = a.p;
    for (int i = static_cast<int>(t.size()) - 1; i >= df; i--) {
        std::uint64_t c = t[i];
        if (!c)
            continue;
        t[i] = 0;
        for (int j = 0; j < df; j++) {
            std::uint64_t sub = (c * f.c[j]) % p;
            t[i - df + j] = (t[i - df + j] + p - sub) % p;
        }
    }
    t.resize(df);
    r.c = t;
    r.trim();
    return r;
}

PolyP powmod(PolyP base, std::uint64_t e, const PolyP& f) {
    PolyP r{base.p, {1}};
    while (e) {
        if (e & 1)
            r = mulmod(r, base, f);
        e >>= 1;
        if (e)
            base = mulmod(base, base, f);
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // p prime
    std::int64_t t0 = 0, t1 = 1;
    std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a % p);
    while (r1) {
        std::int64_t q = r0 / r1;
        std::swap(t0 -= q * t1, t1);
        std::swap(r0 -= q * r1, r1);
    }
    if (t0 < 0)
        t0 += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t0);
}

PolyP gcd_mod(PolyP a, PolyP b) {
    std::uint64_t p = a.p;
    while (!b.c.empty()) {
        // a mod b
        int db = b.degree();
        std::uint64_t lcinv = inv_mod(b.c.back(), p);
        for (int i = a.degree(); i >= db; i--) {
            std::uint64_t c = (a.c[i] * lcinv) % p;
            if (!c)
                continue;
            for (int j = 0; j <= db; j++) {
                std::uint64_t sub = (c * b.c[j]) % p;
                a.c[i - db + j] = (a.c[i - db + j] + p - sub) % p;
            }
        }
        a.trim();
        std::swap(a, b);
    }
    // normalize monic
    if (!a.c.empty()) {
        std::uint64_t lcinv = inv_mod(a.c.back(), a.p);
        for (auto& x : a.c)
            x = (x * lcinv) % a.p;
    }
    return a;
}

PolyP quotient_exact(const PolyP& a, const PolyP& b) {
    PolyP r = a;
    PolyP q{a.p, std::vector<std::uint64_t>(a.c.size() - b.c.size() + 1, 0)};
    std::uint64_t p = a.p;
    int db = b.degree();
    std::uint64_t lcinv = inv_mod(b.c.back(), p);
    for (int i = r.degree(); i >= db; i--) {
        std::uint64_t c = (r.c[i] * lcinv) % p;
        q.c[i - db] = c;
        if (!c)
            continue;
        for (int j = 0; j <= db; j++) {
            std::uint64_t sub = (c * b.c[j]) % p;
            r.c[i - db + j] = (r.c[i - db + j] + p - sub) % p;
        }
    }
    q.trim();
    return q;
}

// Degree multiset of the irreducible factors of squarefree f mod p by
// distinct-degree factorization; empty result means f mod p was not
// squarefree (prime unusable for the sieve).
std::vector<int> factor_degrees_mod(const PolyZ& fz, std::uint64_t p) {
    PolyP f = reduce_mod(fz, p);
    if (f.degree() != fz.degree())
        return {}; // should not happen for monic f
    // squarefree check: gcd(f, f') = 1
    PolyP fd{p, {}};
    fd.c.resize(f.c.size() - 1);
    for (std::size_t i = 1; i < f.c.size(); i++)
        fd.c[i - 1] = (f.c[i] * (i % p)) % p;
    fd.trim();
    if (fd.c.empty())
        return {};
    PolyP g = gcd_mod(f, fd);
    if (g.degree() != 0)
        return {};
    std::vector<int> degrees;
    PolyP rem = f;
    PolyP u{p, {0, 1}}; // t
    for (int d = 1; rem.degree() > 0; d++) {
        if (2 * d > rem.degree()) {
            degrees.push_back(rem.degree());
            break;
        }
        u = powmod(u, p, f); // u = t^(p^d) mod f
        // gcd(rem, u - t)
        PolyP diff = u;
        if (diff.c.size() < 2)
            diff.c.resize(2, 0);
        diff.c[1] = (diff.c[1] + p - 1) % p;
        diff.trim();
        PolyP h = gcd_mod(rem, diff);
        if (h.degree() > 0) {
            for (int i = 0; i < h.degree() / d; i++)
                degrees.push_back(d);
            rem = quotient_exact(rem, h);
        }
    }
    return degrees;
}

// attainable proper-factor degrees as subset sums of the degree multiset
std::set<int> attainable_degrees(const std::vector<int>& degs, int n) {
    std::vector<char> dp(n + 1, 0);
    dp[0] = 1;
    for (int d : degs)
        for (int s = n; s >= d; s--)
            if (dp[s - d])
                dp[s] = 1;
    std::set<int> out;
    for (int s = 1; s < n; s++)
        if (dp[s])
            out.insert(s);
    return out;
}

std::vector<Int> signed_divisors(const Int& v) {
    Int a = abs(v);
    std::vector<Int> out;
    for (Int d = 1; d * d <= a; d++) {
        if (a % d == 0) {
            out.push_back(d);
            out.push_back(-d);
            Int e = a / d;
            if (e != d) {
                out.push_back(e);
                out.push_back(-e);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// exact factor search by interpolation: does monic f have a monic
// integer factor of degree d?
bool has_factor_of_degree(const PolyZ& f, int d) {
    // evaluation points 0, 1, -1, 2, -2, ...
    std::vector<Int> pts;
    for (int i = 0; static_cast<int>(pts.size()) < d; i++) {
        if (i == 0)
            pts.push_back(0);
        else {
            pts.push_back(i);
            if (static_cast<int>(pts.size()) < d)
                pts.push_back(-i);
        }
    }
    std::vector<std::vector<Int>> choices(d);
    std::uint64_t total = 1;
    for (int i = 0; i < d; i++) {
        Int v = f.eval(pts[i]);
        if (v == 0)
            return true; // linear factor t - pts[i]
        choices[i] = signed_divisors(v);
        total *= choices[i].size();
        if (total > 2000000)
            throw error("factor search budget exceeded (desk-scale input expected)");
    }
    // Lagrange basis over the chosen points
    std::vector<std::size_t> idx(d, 0);
    for (;;) {
        // candidate g monic deg d with g(pts[i]) = w_i: interpolate
        // l = g - t^d through (pts[i], w_i - pts[i]^d)
        std::vector<Rat> l(static_cast<std::size_t>(d), Rat(0)); // degree <= d-1
        for (int i = 0; i < d; i++) {
            Int ptpow;
            mpz_pow_ui(ptpow.get_mpz_t(), pts[i].get_mpz_t(), static_cast<unsigned long>(d));
            Rat yi = Rat(choices[i][idx[i]] - ptpow);
            // Lagrange basis polynomial for point i
            std::vector<Rat> basis{Rat(1)};
            Rat denom(1);
            for (int j = 0; j < d; j++) {
                if (j == i)
                    continue;
                // basis *= (t - pts[j])
                basis.insert(basis.begin(), Rat(0));
                for (std::size_t k = 0; k + 1 < basis.size(); k++)
                    basis[k] -= Rat(pts[j]) * basis[k + 1];
                denom *= Rat(pts[i] - pts[j]);
            }
            Rat scale = yi / denom;
            for (std::size_t k = 0; k < basis.size(); k++)
                l[k] += basis[k] * scale;
        }
        bool integral = true;
        std::vector<Int> gc(static_cast<std::size_t>(d) + 1);
        for (int k = 0; k < d && integral; k++) {
            Rat v = l[static_cast<std::size_t>(k)];
            v.canonicalize();
            if (v.get_den() != 1)
                integral = false;
            else
                gc[static_cast<std::size_t>(k)] = v.get_num();
        }
        if (integral) {
            gc[static_cast<std::size_t>(d)] = 1;
            PolyZ g(gc);
            PolyZ rem;
            f.divmod_monic(g, &rem);
            if (rem.is_zero())
                return true;
        }
        // next divisor tuple
        int pos = 0;
        while (pos < d) {
            if (++idx[pos] < choices[pos].size())
                break;
            idx[pos] = 0;
            pos++;
        }
        if (pos == d)
            return false;
    }
}

} // namespace

bool is_irreducible(const PolyZ& f) {
    if (!f.is_monic())
        throw precondition_error("monic polynomial",
                                 "is_irreducible expects a monic polynomial");
    int n = f.degree();
    if (n < 1)
        throw precondition_error("degree >= 1", "is_irreducible expects degree >= 1");
    if (n == 1)
        return true;
    if (f.coeff(0) == 0)
        return false; // t divides
    // rational root test: integer roots divide the constant term
    for (const Int& r : signed_divisors(f.coeff(0)))
        if (f.eval(r) == 0)
            return false;
    if (n <= 3)
        return true;
    // degree-profile sieve mod a few primes
    static const std::uint64_t primes[] = {3, 5, 7, 11, 13, 17, 19, 23};
    std::set<int> candidates;
    bool have = false;
    int used = 0;
    for (std::uint64_t p : primes) {
        std::vector<int> degs = factor_degrees_mod(f, p);
        if (degs.empty())
            continue;
        std::set<int> att = attainable_degrees(degs, n);
        if (!have) {
            candidates = att;
            have = true;
        } else {
            std::set<int> merged;
            std::set_intersection(candidates.begin(), candidates.end(), att.begin(),
                                  att.end(), std::inserter(merged, merged.begin()));
            candidates = merged;
        }
        if (candidates.empty())
            return true;
        if (++used >= 4)
            break;
    }
    // deciding fallback: exact search over the surviving degrees
    for (int d = 2; 2 * d <= n; d++) {
        if (have && !candidates.count(d) && !candidates.count(n - d))
            continue;
        if (has_factor_of_degree(f, d))
            return false;
    }
    return true;
}

// ----------------------------------------------- similarity over Q[t]

namespace {

// Matrix with PolyQ entries, used only for the invariant factors of
// tI - A. Smith reduction over the PID Q[t] with minimal-degree pivots.
std::vector<PolyQ> polyq_smith_diagonal(std::vector<std::vector<PolyQ>> W) {
    std::size_t n = W.size();
    std::vector<PolyQ> diag;
    for (std::size_t i = 0; i < n; i++) {
        for (;;) {
            // minimal-degree nonzero pivot in trailing block
            bool found = false;
            std::size_t pr = i, pc = i;
            for (std::size_t r = i; r < n; r++)
                for (std::size_t c = i; c < n; c++) {
                    if (W[r][c].is_zero())
                        continue;
                    if (!found || W[r][c].degree() < W[pr][pc].degree()) {
                        found = true;
                        pr = r;
                        pc = c;
                    }
                }
            if (!found)
                goto done;
            std::swap(W[i], W[pr]);
            if (pc != i)
                for (std::size_t r = 0; r < n; r++)
                    std::swap(W[r][i], W[r][pc]);
            bool clean = true;
            for (std::size_t r = i + 1; r < n; r++) {
                if (W[r][i].is_zero())
                    continue;
                PolyQ rem;
                PolyQ q = W[r][i].divmod(W[i][i], &rem);
                for (std::size_t c = i; c < n; c++)
                    W[r][c] = W[r][c] - q * W[i][c];
                if (!W[r][i].is_zero())
                    clean = false;
            }
            for (std::size_t c = i + 1; c < n; c++) {
                if (W[i][c].is_zero())
                    continue;
                PolyQ rem;
                PolyQ q = W[i][c].divmod(W[i][i], &rem);
                for (std::size_t r = i; r < n; r++)
                    W[r][c] = W[r][c] - q * W[r][i];
                if (!W[i][c].is_zero())
                    clean = false;
            }
            if (!clean)
                continue;
            // divisibility fix: pivot must divide the trailing block
            bool fixed = false;
            for (std::size_t r = i + 1; r < n && !fixed; r++)
                for (std::size_t c = i + 1; c < n && !fixed; c++) {
                    PolyQ rem;
                    W[r][c].divmod(W[i][i], &rem);
                    if (!rem.is_zero()) {
                        for (std::size_t cc = i; cc < n; cc++)
                            W[i][cc] = W[i][cc] + W[r][cc];
                        fixed = true;
                    }
                }
            if (!fixed)
                break;
        }
    }
done:
    for (std::size_t i = 0; i < n; i++)
        if (!W[i][i].is_zero())
            diag.push_back(W[i][i].monic());
    return diag;
}

} // namespace

std::vector<PolyZ> rational_invariant_factors(const IntMatrix& A) {
    if (!A.square())
        throw error("invariant factors of a non-square matrix");
    std::size_t n = A.rows();
    std::vector<std::vector<PolyQ>> W(n, std::vector<PolyQ>(n));
    for (std::size_t i = 0; i < n; i++)
        for (std::size_t j = 0; j < n; j++) {
            std::vector<Rat> c{Rat(-A(i, j))};
            if (i == j)
                c.push_back(Rat(1));
            W[i][j] = PolyQ(c);
        }
    std::vector<PolyQ> diag = polyq_smith_diagonal(std::move(W));
    std::vector<PolyZ> out;
    for (const PolyQ& p : diag) {
        if (p.degree() == 0)
            continue;
        // monic rational divisor of a monic integer polynomial is integral
        PolyZ z = p.primitive_z();
        if (!z.is_monic())
            throw internal_error("invariant factor of tI - A not monic integral");
        out.push_back(z);
    }
    return out;
}

PolyZ minimal_polynomial(const IntMatrix& A) {
    std::vector<PolyZ> inv = rational_invariant_factors(A);
    if (inv.empty())
        throw internal_error("tI - A has no nontrivial invariant factor");
    PolyZ m = inv.back();
    if (!poly_eval_matrix(m, A).is_zero())
        throw internal_error("minimal polynomial does not annihilate");
    return m;
}

bool similar_over_Q(const IntMatrix& A, const IntMatrix& B) {
    if (!A.square() || !B.square() || A.rows() != B.rows())
        throw error("similar_over_Q expects square matrices of equal size");
    return rational_invariant_factors(A) == rational_invariant_factors(B);
}

} // namespace toral
