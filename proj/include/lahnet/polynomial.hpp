#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lahnet/bigint.hpp"

namespace lahnet {

// Polynomial in one variable with exact integer coefficients,
// coefficients_[d] = coefficient of x^d. The zero polynomial is the empty
// list; otherwise the leading coefficient is nonzero.
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<BigInt> coefficients)
        : coefficients_(std::move(coefficients)) {
        trim();
    }

    static IntPolynomial constant(BigInt c) { return IntPolynomial({std::move(c)}); }

    static IntPolynomial variable() { return IntPolynomial({BigInt(0), BigInt(1)}); }

    bool is_zero() const { return coefficients_.empty(); }

    // -1 for the zero polynomial.
    std::ptrdiff_t degree() const {
        return static_cast<std::ptrdiff_t>(coefficients_.size()) - 1;
    }

    BigInt coefficient(std::size_t d) const {
        return d < coefficients_.size() ? coefficients_[d] : BigInt(0);
    }

    const std::vector<BigInt>& coefficients() const { return coefficients_; }

    bool operator==(const IntPolynomial&) const = default;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> sum(std::max(a.coefficients_.size(), b.coefficients_.size()),
                                BigInt(0));
        for (std::size_t d = 0; d < a.coefficients_.size(); ++d) sum[d] += a.coefficients_[d];
        for (std::size_t d = 0; d < b.coefficients_.size(); ++d) sum[d] += b.coefficients_[d];
        return IntPolynomial(std::move(sum));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return IntPolynomial();
        std::vector<BigInt> product(a.coefficients_.size() + b.coefficients_.size() - 1,
                                    BigInt(0));
        for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
            for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
                product[i + j] += a.coefficients_[i] * b.coefficients_[j];
        return IntPolynomial(std::move(product));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const BigInt& scalar) {
        if (scalar == 0) return IntPolynomial();
        std::vector<BigInt> scaled = a.coefficients_;
        for (auto& c : scaled) c *= scalar;
        return IntPolynomial(std::move(scaled));
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t d = coefficients_.size(); d-- > 0;) {
            const BigInt& c = coefficients_[d];
            if (c == 0) continue;
            if (!s.empty()) s += c > 0 ? " + " : " - ";
            else if (c < 0) s += "-";
            const BigInt mag = c < 0 ? BigInt(-c) : c;
            if (mag != 1 || d == 0) s += mag.str();
            if (d >= 1) s += "x";
            if (d >= 2) s += "^" + std::to_string(d);
        }
        return s;
    }

private:
    void trim() {
        while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
    }

    std::vector<BigInt> coefficients_;
};

// x(x+1)...(x+n-1); the empty product (n = 0) is the constant 1.
inline IntPolynomial rising_factorial(std::size_t n) {
    IntPolynomial result = IntPolynomial::constant(1);
    for (std::size_t i = 0; i < n; ++i)
        result = result * IntPolynomial({BigInt(i), BigInt(1)});
    return result;
}

// x(x-1)...(x-k+1); the empty product (k = 0) is the constant 1.
inline IntPolynomial falling_factorial(std::size_t k) {
    IntPolynomial result = IntPolynomial::constant(1);
    for (std::size_t i = 0; i < k; ++i)
        result = result * IntPolynomial({-BigInt(i), BigInt(1)});
    return result;
}

}  // namespace lahnet
