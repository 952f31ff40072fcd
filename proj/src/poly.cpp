#include "toral/poly.hpp"

#include <algorithm>
#include <sstream>

#include "toral/linalg.hpp"

namespace toral {

static const Int kZeroInt = 0;
static const Rat kZeroRat = 0;

PolyZ::PolyZ(std::initializer_list<long> coeffs) {
    for (long x : coeffs)
        c_.emplace_back(x);
    trim();
}

void PolyZ::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

PolyZ PolyZ::constant(const Int& c) {
    PolyZ p;
    if (c != 0)
        p.c_.push_back(c);
    return p;
}

PolyZ PolyZ::t() {
    PolyZ p;
    p.c_ = {Int(0), Int(1)};
    return p;
}

PolyZ PolyZ::t_pow_minus_one(unsigned k) {
    PolyZ p;
    p.c_.assign(k + 1, Int(0));
    p.c_[0] = -1;
    p.c_[k] = 1;
    p.trim(); // k = 0 gives the zero polynomial
    return p;
}

const Int& PolyZ::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZeroInt;
}

const Int& PolyZ::leading() const {
    if (c_.empty())
        throw error("leading coefficient of zero polynomial");
    return c_.back();
}

PolyZ PolyZ::operator+(const PolyZ& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); i++)
        r[i] = coeff(i) + o.coeff(i);
    return PolyZ(r);
}

PolyZ PolyZ::operator-(const PolyZ& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); i++)
        r[i] = coeff(i) - o.coeff(i);
    return PolyZ(r);
}

PolyZ PolyZ::operator*(const PolyZ& o) const {
    if (is_zero() || o.is_zero())
        return PolyZ();
    std::vector<Int> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); i++)
        for (std::size_t j = 0; j < o.c_.size(); j++)
            r[i + j] += c_[i] * o.c_[j];
    return PolyZ(r);
}

PolyZ PolyZ::operator*(const Int& c) const {
    std::vector<Int> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); i++)
        r[i] = c_[i] * c;
    return PolyZ(r);
}

PolyZ PolyZ::operator-() const {
    std::vector<Int> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); i++)
        r[i] = -c_[i];
    return PolyZ(r);
}

Int PolyZ::eval(const Int& x) const {
    Int acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * x + c_[i];
    return acc;
}

Rat PolyZ::eval(const Rat& x) const {
    Rat acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * x + Rat(c_[i]);
    return acc;
}

PolyZ PolyZ::derivative() const {
    if (c_.size() <= 1)
        return PolyZ();
    std::vector<Int> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); i++)
        r[i - 1] = c_[i] * Int(static_cast<unsigned long>(i));
    return PolyZ(r);
}

Int PolyZ::content() const {
    Int g = 0;
    for (const Int& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

PolyZ PolyZ::primitive_part() const {
    if (is_zero())
        return PolyZ();
    Int g = content();
    std::vector<Int> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); i++)
        r[i] = c_[i] / g;
    if (r.back() < 0)
        for (Int& x : r)
            x = -x;
    return PolyZ(r);
}

PolyZ PolyZ::reversal() const {
    std::vector<Int> r(c_.rbegin(), c_.rend());
    return PolyZ(r);
}

PolyZ PolyZ::shift_mul(std::size_t k) const {
    if (is_zero())
        return PolyZ();
    std::vector<Int> r(c_.size() + k);
    for (std::size_t i = 0; i < c_.size(); i++)
        r[i + k] = c_[i];
    return PolyZ(r);
}

PolyZ PolyZ::divmod_monic(const PolyZ& d, PolyZ* rem) const {
    if (!d.is_monic())
        throw error("divmod_monic requires a monic divisor");
    std::vector<Int> r = c_;
    int dd = d.degree();
    std::vector<Int> q(degree() >= dd ? degree() - dd + 1 : 0);
    for (int i = static_cast<int>(r.size()) - 1; i >= dd; i--) {
        Int c = r[i];
        if (c == 0)
            continue;
        q[i - dd] = c;
        for (int j = 0; j <= dd; j++)
            r[i - dd + j] -= c * d.coeff(j);
    }
    if (rem)
        *rem = PolyZ(r);
    return PolyZ(q);
}

std::string PolyZ::str(const std::string& var) const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0)
            continue;
        Int a = c_[i];
        if (first) {
            if (a < 0)
                os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        Int mag = abs(a);
        if (mag != 1 || i == 0)
            os << mag.get_str();
        if (i >= 1) {
            os << var;
            if (i >= 2)
                os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

// ----------------------------------------------------------------- PolyQ

PolyQ::PolyQ(const PolyZ& p) {
    c_.reserve(p.coeffs().size());
    for (const Int& x : p.coeffs())
        c_.emplace_back(x);
}

void PolyQ::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
    for (Rat& x : c_)
        x.canonicalize();
}

const Rat& PolyQ::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZeroRat;
}

const Rat& PolyQ::leading() const {
    if (c_.empty())
        throw error("leading coefficient of zero polynomial");
    return c_.back();
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); i++)
        r[i] = coeff(i) + o.coeff(i);
    return PolyQ(r);
}

PolyQ PolyQ::operator-(const PolyQ& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); i++)
        r[i] = coeff(i) - o.coeff(i);
    return PolyQ(r);
}

PolyQ PolyQ::operator*(const PolyQ& o) const {
    if (is_zero() || o.is_zero())
        return PolyQ();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); i++)
        for (std::size_t j = 0; j < o.c_.size(); j++)
            r[i + j] += c_[i] * o.c_[j];
    return PolyQ(r);
}

PolyQ PolyQ::operator*(const Rat& c) const {
    std::vector<Rat> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); i++)
        r[i] = c_[i] * c;
    return PolyQ(r);
}

Rat PolyQ::eval(const Rat& x) const {
    Rat acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * x + c_[i];
    return acc;
}

PolyQ PolyQ::derivative() const {
    if (c_.size() <= 1)
        return PolyQ();
    std::vector<Rat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); i++)
        r[i - 1] = c_[i] * Rat(static_cast<unsigned long>(i));
    return PolyQ(r);
}

PolyQ PolyQ::monic() const {
    if (is_zero())
        throw error("monic of zero polynomial");
    Rat inv = 1 / leading();
    return *this * inv;
}

PolyQ PolyQ::divmod(const PolyQ& d, PolyQ* rem) const {
    if (d.is_zero())
        throw error("polynomial division by zero");
    std::vector<Rat> r = c_;
    int dd = d.degree();
    std::vector<Rat> q(degree() >= dd ? degree() - dd + 1 : 0);
    for (int i = static_cast<int>(r.size()) - 1; i >= dd; i--) {
        if (r[i] == 0)
            continue;
        Rat c = r[i] / d.leading();
        q[i - dd] = c;
        for (int j = 0; j <= dd; j++)
            r[i - dd + j] -= c * d.coeff(j);
    }
    if (rem)
        *rem = PolyQ(r);
    return PolyQ(q);
}

PolyZ PolyQ::primitive_z() const {
    if (is_zero())
        return PolyZ();
    Int den = 1;
    for (const Rat& x : c_)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Int> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); i++) {
        Rat v = c_[i] * Rat(den);
        v.canonicalize();
        r[i] = v.get_num();
    }
    return PolyZ(r).primitive_part();
}

// ------------------------------------------------------------ algorithms

PolyZ poly_gcd(const PolyZ& p, const PolyZ& q) {
    if (p.is_zero() && q.is_zero())
        throw error("gcd of two zero polynomials");
    if (p.is_zero())
        return q.primitive_part();
    if (q.is_zero())
        return p.primitive_part();
    PolyQ a(p), b(q);
    while (!b.is_zero()) {
        PolyQ r;
        a.divmod(b, &r);
        a = b;
        b = r;
    }
    return a.primitive_z();
}

Int resultant(const PolyZ& f, const PolyZ& g) {
    int m = f.degree(), k = g.degree();
    if (m < 0 || k < 0)
        return 0;
    if (m == 0) { // Res(c, g) = c^deg(g)
        Int r;
        mpz_pow_ui(r.get_mpz_t(), f.coeff(0).get_mpz_t(), static_cast<unsigned long>(k));
        return r;
    }
    if (k == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), g.coeff(0).get_mpz_t(), static_cast<unsigned long>(m));
        return r;
    }
    // Sylvester matrix: k shifted rows of f, then m shifted rows of g,
    // coefficients in descending order.
    std::size_t n = static_cast<std::size_t>(m + k);
    IntMatrix S(n, n);
    for (int i = 0; i < k; i++)
        for (int j = 0; j <= m; j++)
            S(i, i + j) = f.coeff(m - j);
    for (int i = 0; i < m; i++)
        for (int j = 0; j <= k; j++)
            S(k + i, i + j) = g.coeff(k - j);
    return det(S);
}

// Sturm chain sign-variation count at x.
static int sign_variations(const std::vector<PolyQ>& chain, const Rat& x) {
    int count = 0, last = 0;
    for (const PolyQ& p : chain) {
        Rat v = p.eval(x);
        int s = sgn(v);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            count++;
        last = s;
    }
    return count;
}

int count_real_roots_closed(const PolyQ& p, const Rat& a, const Rat& b) {
    if (p.is_zero())
        throw error("root count of zero polynomial");
    if (a > b)
        return 0;
    if (p.degree() == 0)
        return 0;
    // square-free part
    PolyZ pz = p.primitive_z();
    PolyZ g = poly_gcd(pz, pz.derivative());
    PolyQ sf = PolyQ(pz).divmod(PolyQ(g));
    if (sf.degree() == 0)
        return 0;
    std::vector<PolyQ> chain = {sf, sf.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        PolyQ r;
        chain[chain.size() - 2].divmod(chain.back(), &r);
        chain.push_back(r * Rat(-1));
    }
    if (chain.back().is_zero())
        chain.pop_back();
    // roots in (a, b], plus a if it is a root
    int n = sign_variations(chain, a) - sign_variations(chain, b);
    if (sf.eval(a) == 0)
        n++;
    return n;
}

} // namespace toral
