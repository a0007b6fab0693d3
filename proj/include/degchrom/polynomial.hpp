#ifndef DEGCHROM_POLYNOMIAL_HPP
#define DEGCHROM_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "degchrom/bignum.hpp"
#include "degchrom/errors.hpp"

namespace degchrom {

// Dense exact-rational polynomial in the color count k, coefficients stored
// ascending by power. The stored vector never ends in a zero; the zero
// polynomial is the empty vector and has no degree.
class BigPolynomial {
  public:
    BigPolynomial() = default;
    explicit BigPolynomial(std::vector<BigRat> coefficients);

    bool is_zero() const noexcept { return coefficients_.empty(); }
    std::optional<int> degree() const noexcept;
    const std::vector<BigRat>& coefficients() const noexcept { return coefficients_; }

    bool operator==(const BigPolynomial&) const = default;

  private:
    std::vector<BigRat> coefficients_;
};

// Exact Horner evaluation.
BigRat evaluate(const BigPolynomial& p, const BigInt& x);

// Coefficient of k^power; zero above the degree.
BigRat coefficient(const BigPolynomial& p, int power);

struct EvaluationPoint {
    BigInt x;
    BigInt y;
};

// The unique polynomial of degree < points.size() through all points, by
// Newton divided differences in exact rational arithmetic. Throws
// std::invalid_argument on an empty point set or a duplicate abscissa.
BigPolynomial interpolate(const std::vector<EvaluationPoint>& points);

// Integer coefficient list (ascending) iff every denominator is 1; otherwise
// throws NonIntegralCoefficientError. The zero polynomial yields {0}.
std::vector<BigInt> assert_integral(const BigPolynomial& p);

// Human-readable form, e.g. "k^4 - 2k^2 + k".
std::string to_string(const BigPolynomial& p);

}  // namespace degchrom

#endif
