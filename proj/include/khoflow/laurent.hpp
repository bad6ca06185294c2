#pragma once

#include <map>
#include <string>

#include "khoflow/snf.hpp"

namespace khoflow {

// Exact Laurent polynomial in one variable; zero coefficients never stored.
struct Laurent {
    std::map<int, BigInt> coeff;  // exponent -> coefficient

    bool is_zero() const { return coeff.empty(); }
    friend bool operator==(const Laurent&, const Laurent&) = default;
};

Laurent monomial(int exponent, BigInt c = 1);

Laurent operator+(const Laurent& a, const Laurent& b);
Laurent operator-(const Laurent& a, const Laurent& b);
Laurent operator*(const Laurent& a, const Laurent& b);
Laurent operator-(const Laurent& a);

// Exact division; throws DivisibilityError when the remainder is nonzero or
// the divisor is zero.
Laurent divide_exact(const Laurent& num, const Laurent& den);

// Render in ascending exponents, e.g. "q^-2 + 2 + 3q^5"; "0" when empty.
std::string to_string(const Laurent& p, const std::string& var = "q");

}  // namespace khoflow
