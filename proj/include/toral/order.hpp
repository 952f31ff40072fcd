#pragma once

#include "toral/poly.hpp"

namespace toral {

// Element of Q(beta) written as num(beta)/den with deg num < deg f,
// f the monic defining polynomial of beta. Canonical form: den > 0 and
// gcd(den, content(num)) = 1, so equality is structural.
class OrderElement {
public:
    OrderElement(const PolyZ& f, const PolyZ& num, const Int& den = Int(1));

    static OrderElement zero(const PolyZ& f) { return OrderElement(f, PolyZ()); }
    static OrderElement one(const PolyZ& f) { return OrderElement(f, PolyZ{1}); }
    static OrderElement beta(const PolyZ& f) { return OrderElement(f, PolyZ::t()); }

    const PolyZ& f() const { return f_; }
    const PolyZ& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    OrderElement operator+(const OrderElement& o) const;
    OrderElement operator-(const OrderElement& o) const;
    OrderElement operator*(const OrderElement& o) const;
    OrderElement operator-() const;
    bool operator==(const OrderElement& o) const {
        return f_ == o.f_ && num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const OrderElement& o) const { return !(*this == o); }

    // Field inverse; needs f irreducible (gcd(num, f) = 1 over Q) and
    // a nonzero element.
    OrderElement inverse() const;

    // Field norm: product of num over the conjugates of beta, divided
    // by den^deg f. Multiplicative by the resultant convention.
    Rat norm() const;

    // Coordinates of num in the power basis, length deg f.
    IntVector coords() const;

private:
    void reduce();
    void check_compatible(const OrderElement& o) const;
    PolyZ f_;
    PolyZ num_;
    Int den_;
};

OrderElement order_mul(const OrderElement& a, const OrderElement& b);
Rat order_norm(const OrderElement& a);

} // namespace toral
