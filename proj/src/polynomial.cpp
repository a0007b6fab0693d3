#include "degchrom/polynomial.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace degchrom {

BigPolynomial::BigPolynomial(std::vector<BigRat> coefficients)
    : coefficients_(std::move(coefficients)) {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

std::optional<int> BigPolynomial::degree() const noexcept {
    if (coefficients_.empty()) return std::nullopt;
    return static_cast<int>(coefficients_.size()) - 1;
}

BigRat evaluate(const BigPolynomial& p, const BigInt& x) {
    const auto& c = p.coefficients();
    BigRat acc(0);
    const BigRat xq(x);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * xq + *it;
    return acc;
}

BigRat coefficient(const BigPolynomial& p, int power) {
    const auto& c = p.coefficients();
    if (power < 0 || power >= static_cast<int>(c.size())) return BigRat(0);
    return c[static_cast<std::size_t>(power)];
}

BigPolynomial interpolate(const std::vector<EvaluationPoint>& points) {
    if (points.empty()) throw std::invalid_argument("interpolate: need at least one point");
    {
        std::set<BigInt> xs;
        for (const auto& pt : points)
            if (!xs.insert(pt.x).second)
                throw std::invalid_argument("interpolate: duplicate abscissa " + pt.x.get_str());
    }

    const std::size_t count = points.size();
    // Divided differences in place: after level j, dd[i] = f[x_{i-j} .. x_i].
    std::vector<BigRat> dd(count);
    for (std::size_t i = 0; i < count; ++i) dd[i] = BigRat(points[i].y);
    for (std::size_t j = 1; j < count; ++j)
        for (std::size_t i = count - 1; i >= j; --i)
            dd[i] = (dd[i] - dd[i - 1]) / BigRat(points[i].x - points[i - j].x);

    // Horner over the Newton basis: P = (..(dd_{n-1}(X - x_{n-2}) + dd_{n-2})..)(X - x_0) + dd_0.
    std::vector<BigRat> coeffs{dd[count - 1]};
    for (std::size_t step = count - 1; step-- > 0;) {
        const BigRat node(points[step].x);
        std::vector<BigRat> next(coeffs.size() + 1, BigRat(0));
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            next[j + 1] += coeffs[j];
            next[j] -= node * coeffs[j];
        }
        next[0] += dd[step];
        coeffs = std::move(next);
    }
    return BigPolynomial(std::move(coeffs));
}

std::vector<BigInt> assert_integral(const BigPolynomial& p) {
    if (p.is_zero()) return {BigInt(0)};
    std::vector<BigInt> out;
    out.reserve(p.coefficients().size());
    for (std::size_t power = 0; power < p.coefficients().size(); ++power) {
        const BigRat& c = p.coefficients()[power];
        if (c.get_den() != 1) throw NonIntegralCoefficientError(static_cast<int>(power), c);
        out.push_back(c.get_num());
    }
    return out;
}

std::string to_string(const BigPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    const auto& c = p.coefficients();
    for (int power = static_cast<int>(c.size()) - 1; power >= 0; --power) {
        const BigRat& q = c[static_cast<std::size_t>(power)];
        if (q == 0) continue;
        const bool negative = q < 0;
        BigRat mag = negative ? BigRat(-q) : q;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const bool unit = (mag == 1);
        if (!unit || power == 0) out << mag.get_str();
        if (power > 0) {
            out << "k";
            if (power > 1) out << "^" << power;
        }
    }
    return out.str();
}

}  // namespace degchrom
