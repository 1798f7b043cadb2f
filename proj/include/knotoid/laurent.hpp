#ifndef KNOTOID_LAURENT_HPP
#define KNOTOID_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>

namespace knotoid {

// Exact arbitrary-precision integer coefficients.  State sums over n
// crossings produce coefficients up to ~2^n * 3^n, which overflows any
// fixed-width type long before the crossing guard kicks in.
using Coef = boost::multiprecision::cpp_int;

// Sparse integer Laurent polynomial in one variable.  The variable name
// ('t' or 'A') is carried for rendering only and does not affect
// arithmetic.  Invariant: no stored coefficient is zero; the zero
// polynomial is the empty term map.
class Laurent1 {
public:
    using Terms = std::map<int, Coef>;

    Laurent1() = default;
    explicit Laurent1(char var) : var_(var) {}

    static Laurent1 constant(const Coef& c, char var = 't');
    // c * x^e
    static Laurent1 monomial(const Coef& c, int e, char var = 't');

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    char var() const { return var_; }
    void set_var(char v) { var_ = v; }

    Coef coeff(int e) const;
    void add_term(int e, const Coef& c);

    int maxdeg() const;  // undefined (throws) on zero
    int mindeg() const;
    // deg+ = max(maxdeg, 0), deg- = max(-mindeg, 0); both 0 on the zero
    // polynomial.
    int deg_pos() const;
    int deg_neg() const;

    Laurent1 operator+(const Laurent1& o) const;
    Laurent1 operator-(const Laurent1& o) const;
    Laurent1 operator*(const Laurent1& o) const;
    Laurent1 operator-() const;
    Laurent1& operator+=(const Laurent1& o);
    Laurent1 scaled(const Coef& c) const;
    Laurent1 pow(unsigned k) const;

    // x -> x^-1
    Laurent1 substitute_inverse() const;

    bool operator==(const Laurent1& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent1& o) const { return !(*this == o); }

    // Canonical rendering: terms by ascending exponent, e.g. "t^-1 - 2 + t".
    std::string str() const;
    static Laurent1 parse(const std::string& text, char var);

private:
    Terms terms_;
    char var_ = 't';
};

// Sparse integer Laurent polynomial in the pair (A, u).
class Laurent2 {
public:
    using Key = std::pair<int, int>;  // (A exponent, u exponent)
    using Terms = std::map<Key, Coef>;

    Laurent2() = default;

    static Laurent2 constant(const Coef& c);
    static Laurent2 monomial(const Coef& c, int ea, int eu);
    static Laurent2 from_a_poly(const Laurent1& p);  // u-degree 0 embedding

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    Coef coeff(int ea, int eu) const;
    void add_term(int ea, int eu, const Coef& c);

    // Signed degrees in a single variable (0 = A, 1 = u); 0 on zero.
    int deg_pos(int which) const;
    int deg_neg(int which) const;

    Laurent2 operator+(const Laurent2& o) const;
    Laurent2 operator*(const Laurent2& o) const;
    Laurent2& operator+=(const Laurent2& o);
    Laurent2 scaled(const Coef& c) const;

    // u -> u^-1 on the u slot
    Laurent2 substitute_inverse_u() const;

    // Coefficient of u^eu as a polynomial in A.
    Laurent1 u_coefficient(int eu) const;
    // Collapse u -> 1, leaving a polynomial in A.
    Laurent1 collapse_u() const;

    bool operator==(const Laurent2& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent2& o) const { return !(*this == o); }

    // Canonical rendering: terms in ascending lexicographic (A, u) order.
    std::string str() const;
    static Laurent2 parse(const std::string& text);

private:
    Terms terms_;
};

}  // namespace knotoid

#endif
