#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace saw {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using Float50 = boost::multiprecision::cpp_bin_float_50;

BigInt binomial(unsigned n, unsigned r);
BigInt int_pow(const BigInt& base, unsigned exp);

// Dense univariate polynomial with exact integer coefficients,
// coefficient i belonging to x^i. Trailing zeros are trimmed, so the
// zero polynomial has an empty coefficient vector.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(std::initializer_list<BigInt> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(BigInt v) { return Polynomial({std::move(v)}); }
    // c * x^e
    static Polynomial monomial(BigInt c, unsigned e);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const BigInt& coeff(std::size_t i) const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const BigInt& f) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative() const;
    BigRat eval(const BigRat& x) const;
    Float50 eval(const Float50& x) const;

    // Human-readable form like "47 + 144x + 81x^2".
    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<BigInt> c_;
};

// Sparse polynomial in the four variables x, y, a, b with integer
// coefficients. Exponents are signed: y may appear with negative powers
// (Laurent terms show up in the seed values of the strip recurrences).
class MultiPolynomial {
  public:
    // Exponents of x, y, a, b in that order.
    using Key = std::array<int, 4>;

    MultiPolynomial() = default;

    static MultiPolynomial constant(BigInt v);
    static MultiPolynomial monomial(BigInt c, int ex, int ey, int ea, int eb);
    static MultiPolynomial var_x() { return monomial(1, 1, 0, 0, 0); }
    static MultiPolynomial var_y() { return monomial(1, 0, 1, 0, 0); }
    static MultiPolynomial var_a() { return monomial(1, 0, 0, 1, 0); }
    static MultiPolynomial var_b() { return monomial(1, 0, 0, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Key, BigInt>& terms() const { return terms_; }
    // True when no variable has a negative exponent.
    bool is_laurent_free() const;

    MultiPolynomial operator+(const MultiPolynomial& o) const;
    MultiPolynomial operator-(const MultiPolynomial& o) const;
    MultiPolynomial operator*(const MultiPolynomial& o) const;
    MultiPolynomial operator-() const;
    MultiPolynomial scaled(const BigInt& f) const;

    friend bool operator==(const MultiPolynomial& a, const MultiPolynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPolynomial& a, const MultiPolynomial& b) {
        return !(a == b);
    }

    BigRat eval(const BigRat& x, const BigRat& y, const BigRat& a, const BigRat& b) const;

    // Substitution x -> 3x, y -> 2, a -> 2x, b -> 1, which turns the
    // contact-weighted strip polynomials into their step-probability
    // counterparts. Requires a Laurent-free polynomial.
    Polynomial specialize_prob() const;

    std::string to_string() const;

    void add_term(Key k, BigInt c);

  private:
    std::map<Key, BigInt> terms_;
};

// Exact division of integer multivariate polynomials. Returns the
// quotient when den divides num with an integer-coefficient quotient
// and zero remainder, std::nullopt otherwise. Inputs must be
// Laurent-free.
std::optional<MultiPolynomial> divide_exact(const MultiPolynomial& num,
                                            const MultiPolynomial& den);

// Formal power series num(x)/den(x) with den(0) != 0, expanded by the
// linear recurrence the denominator imposes on the coefficients.
class RationalSeries {
  public:
    RationalSeries(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    BigRat coeff_rat(unsigned l) const;
    // Exact integer coefficient; throws std::logic_error if the
    // coefficient is not an integer.
    BigInt coeff(unsigned l) const;

  private:
    Polynomial num_;
    Polynomial den_;
    mutable std::vector<BigRat> cache_;
};

}  // namespace saw
