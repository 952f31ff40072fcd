#pragma once

#include <string>
#include <vector>

#include "toral/matrix.hpp"

namespace toral {

// Univariate integer polynomial, dense ascending coefficients, no
// trailing zero. The zero polynomial has an empty coefficient list.
class PolyZ {
public:
    PolyZ() = default;
    explicit PolyZ(const std::vector<Int>& coeffs) : c_(coeffs) { trim(); }
    PolyZ(std::initializer_list<long> coeffs);

    static PolyZ zero() { return PolyZ(); }
    static PolyZ constant(const Int& c);
    static PolyZ t();                       // the monomial t
    static PolyZ t_pow_minus_one(unsigned k); // g_k(t) = t^k - 1

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Int& coeff(std::size_t i) const;  // 0 beyond degree
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    PolyZ operator+(const PolyZ& o) const;
    PolyZ operator-(const PolyZ& o) const;
    PolyZ operator*(const PolyZ& o) const;
    PolyZ operator*(const Int& c) const;
    PolyZ operator-() const;
    bool operator==(const PolyZ& o) const { return c_ == o.c_; }
    bool operator!=(const PolyZ& o) const { return c_ != o.c_; }

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    PolyZ derivative() const;
    Int content() const;            // gcd of coefficients, >= 0
    PolyZ primitive_part() const;   // content divided out, leading > 0
    PolyZ reversal() const;         // t^deg * p(1/t)
    PolyZ shift_mul(std::size_t k) const; // p * t^k

    // Division by a monic divisor stays over Z: returns quotient,
    // stores the remainder (degree < deg d) in *rem if given.
    PolyZ divmod_monic(const PolyZ& d, PolyZ* rem = nullptr) const;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Int> c_;
};

// Univariate rational polynomial, same conventions as PolyZ.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(const std::vector<Rat>& coeffs) : c_(coeffs) { trim(); }
    explicit PolyQ(const PolyZ& p);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(std::size_t i) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& leading() const;

    PolyQ operator+(const PolyQ& o) const;
    PolyQ operator-(const PolyQ& o) const;
    PolyQ operator*(const PolyQ& o) const;
    PolyQ operator*(const Rat& c) const;
    bool operator==(const PolyQ& o) const { return c_ == o.c_; }

    Rat eval(const Rat& x) const;
    PolyQ derivative() const;
    PolyQ monic() const;

    // Euclidean division: *this = q * d + r with deg r < deg d.
    PolyQ divmod(const PolyQ& d, PolyQ* rem = nullptr) const;

    // Clear denominators to a primitive integer polynomial with
    // positive leading coefficient.
    PolyZ primitive_z() const;

private:
    void trim();
    std::vector<Rat> c_;
};

// Primitive gcd with positive leading coefficient. Errors if both zero.
PolyZ poly_gcd(const PolyZ& p, const PolyZ& q);

// Resultant of f and g; with f monic this equals prod over roots b of f
// of g(b), which is the convention the norm computation relies on.
Int resultant(const PolyZ& f, const PolyZ& g);

// Number of distinct real roots of p in the closed interval [a, b],
// by Sturm chains on the square-free part.
int count_real_roots_closed(const PolyQ& p, const Rat& a, const Rat& b);

} // namespace toral
