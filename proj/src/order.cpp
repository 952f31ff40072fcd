#include "toral/order.hpp"

namespace toral {

OrderElement::OrderElement(const PolyZ& f, const PolyZ& num, const Int& den)
    : f_(f), num_(num), den_(den) {
    if (!f_.is_monic() || f_.degree() < 1)
        throw error("OrderElement: defining polynomial must be monic of degree >= 1");
    if (den_ == 0)
        throw error("OrderElement: zero denominator");
    if (num_.degree() >= f_.degree()) {
        PolyZ rem;
        num_.divmod_monic(f_, &rem);
        num_ = rem;
    }
    reduce();
}

void OrderElement::reduce() {
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    Int g = num_.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
        std::vector<Int> c(num_.coeffs());
        for (Int& x : c)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        num_ = PolyZ(c);
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

void OrderElement::check_compatible(const OrderElement& o) const {
    if (f_ != o.f_)
        throw precondition_error("same defining polynomial",
                                 "order elements over different defining polynomials");
}

OrderElement OrderElement::operator+(const OrderElement& o) const {
    check_compatible(o);
    return OrderElement(f_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

OrderElement OrderElement::operator-(const OrderElement& o) const {
    check_compatible(o);
    return OrderElement(f_, num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

OrderElement OrderElement::operator*(const OrderElement& o) const {
    check_compatible(o);
    return OrderElement(f_, num_ * o.num_, den_ * o.den_);
}

OrderElement OrderElement::operator-() const {
    return OrderElement(f_, -num_, den_);
}

OrderElement OrderElement::inverse() const {
    if (is_zero())
        throw error("inverse of zero");
    // extended Euclid over Q: s*num + t*f = 1
    PolyQ a(num_), b(f_);
    PolyQ s0(PolyZ{1}), s1;
    while (!b.is_zero()) {
        PolyQ r;
        PolyQ q = a.divmod(b, &r);
        PolyQ s2 = s0 - q * s1;
        a = b;
        b = r;
        s0 = s1;
        s1 = s2;
    }
    if (a.degree() != 0)
        throw precondition_error("irreducible defining polynomial",
                                 "element is a zero divisor modulo f");
    PolyQ s = s0 * (Rat(1) / a.coeff(0)); // s * num = 1 mod f
    // scale to integers: s = sz / sden
    PolyZ sz = s.primitive_z();
    // find the exact rational scale: s = sz * (lc ratio)
    // recompute: s * num mod f must be 1; derive the constant factor
    // directly instead of tracking it through primitive_z.
    PolyZ prod = sz * num_;
    PolyZ rem;
    prod.divmod_monic(f_, &rem);
    if (rem.degree() != 0 || rem.is_zero())
        throw internal_error("inverse computation lost exactness");
    // sz * num = c mod f, so num^{-1} = sz / c and (num/den)^{-1} = den*sz/c
    Int c = rem.coeff(0);
    return OrderElement(f_, sz * den_, c);
}

Rat OrderElement::norm() const {
    if (is_zero())
        return Rat(0);
    Int r = resultant(f_, num_);
    Int dn;
    mpz_pow_ui(dn.get_mpz_t(), den_.get_mpz_t(),
               static_cast<unsigned long>(f_.degree()));
    Rat out(r, dn);
    out.canonicalize();
    return out;
}

IntVector OrderElement::coords() const {
    std::size_t n = static_cast<std::size_t>(f_.degree());
    IntVector v(n);
    for (std::size_t i = 0; i < n; i++)
        v[i] = num_.coeff(i);
    return v;
}

OrderElement order_mul(const OrderElement& a, const OrderElement& b) {
    return a * b;
}

Rat order_norm(const OrderElement& a) {
    return a.norm();
}

} // namespace toral
