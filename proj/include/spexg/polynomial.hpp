#ifndef SPEXG_POLYNOMIAL_HPP
#define SPEXG_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace spexg {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

/// Exact univariate polynomial with arbitrary-precision integer coefficients,
/// ascending degree order. The zero polynomial has an empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<bigint> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(bigint v) { return Polynomial({std::move(v)}); }
  /// c * x^k
  static Polynomial monomial(bigint c, int k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<bigint>& coeffs() const { return c_; }
  /// Coefficient of x^k (0 beyond the stored degree).
  const bigint& coeff(int k) const;

  bool operator==(const Polynomial& o) const = default;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const bigint& s, const Polynomial& p);

  bigint eval(const bigint& x) const;
  bigrat eval(const bigrat& x) const;
  double eval(double x) const;

  Polynomial derivative() const;

  /// Coefficients as decimal strings, ascending degree.
  std::vector<std::string> to_decimal_strings() const;
  /// Human-readable form, highest degree first.
  std::string to_string() const;

 private:
  void trim();
  std::vector<bigint> c_;
};

/// Quotient and remainder of a/b over the exact rationals, scaled back to the
/// returned pair (q, r) with rational coefficients represented as polynomials
/// over a common denominator. Only exactness of the remainder is exposed.
struct RatDivision {
  bool exact;            // remainder is the zero polynomial
  Polynomial quotient;   // valid only when the division is exact over Z
  bool quotient_integral;
};

/// Divide a by b over the rationals; b must be nonzero.
RatDivision divide_exact(const Polynomial& a, const Polynomial& b);

/// Greatest common divisor over the rationals, returned as a primitive
/// integer polynomial with positive leading coefficient (1 for coprime).
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Exact sign of p at the dyadic rational mantissa / 2^exp2.
int sign_at_dyadic(const Polynomial& p, const bigint& mantissa, int exp2);

/// Exact sign of p at a double (every finite double is dyadic).
int sign_at(const Polynomial& p, double x);

}  // namespace spexg

#endif  // SPEXG_POLYNOMIAL_HPP
