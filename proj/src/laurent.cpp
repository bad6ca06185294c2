#include "khoflow/laurent.hpp"

#include <sstream>

#include "khoflow/errors.hpp"

namespace khoflow {

namespace {

void add_term(Laurent& p, int e, const BigInt& c) {
    if (c == 0) return;
    auto it = p.coeff.find(e);
    if (it == p.coeff.end()) {
        p.coeff[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) p.coeff.erase(it);
    }
}

}  // namespace

Laurent monomial(int exponent, BigInt c) {
    Laurent p;
    if (c != 0) p.coeff[exponent] = std::move(c);
    return p;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent p = a;
    for (const auto& [e, c] : b.coeff) add_term(p, e, c);
    return p;
}

Laurent operator-(const Laurent& a, const Laurent& b) {
    Laurent p = a;
    for (const auto& [e, c] : b.coeff) add_term(p, e, -c);
    return p;
}

Laurent operator-(const Laurent& a) {
    Laurent p;
    for (const auto& [e, c] : a.coeff) p.coeff[e] = -c;
    return p;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent p;
    for (const auto& [ea, ca] : a.coeff)
        for (const auto& [eb, cb] : b.coeff) add_term(p, ea + eb, ca * cb);
    return p;
}

Laurent divide_exact(const Laurent& num, const Laurent& den) {
    if (den.is_zero()) throw DivisibilityError("division by the zero polynomial");
    if (num.is_zero()) return {};
    // In an exact quotient h, the lowest exponent is pinned: bottom terms of
    // den*h cannot cancel, so min(h) = min(num) - min(den). Top-down
    // cancellation that needs to reach below that bound proves inexactness.
    const int min_quo_e = num.coeff.begin()->first - den.coeff.begin()->first;
    const int lead_e = std::prev(den.coeff.end())->first;
    const BigInt lead_c = std::prev(den.coeff.end())->second;
    Laurent rem = num;
    Laurent quo;
    while (!rem.is_zero()) {
        const auto top = std::prev(rem.coeff.end());
        const int e = top->first - lead_e;
        if (e < min_quo_e) throw DivisibilityError("no exact Laurent quotient");
        if (top->second % lead_c != 0)
            throw DivisibilityError("leading coefficient does not divide");
        const BigInt c = top->second / lead_c;
        for (const auto& [ed, cd] : den.coeff) add_term(rem, ed + e, -c * cd);
        add_term(quo, e, c);
    }
    return quo;
}

std::string to_string(const Laurent& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.coeff) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool unit = mag == 1;
        if (!unit || e == 0) out << mag.str();
        if (e != 0) {
            out << var;
            if (e != 1) out << '^' << e;
        }
    }
    return out.str();
}

}  // namespace khoflow
