#include "kdnf/bounds.hpp"

#include <stdexcept>

namespace kdnf {

BigInt big_pow(const BigInt& base, unsigned exp) {
    BigInt r = 1, b = base;
    for (; exp != 0; exp >>= 1) {
        if (exp & 1)
            r *= b;
        if (exp > 1)
            b *= b;
    }
    return r;
}

Rational rat_pow(const Rational& base, unsigned exp) {
    Rational r = 1, b = base;
    for (; exp != 0; exp >>= 1) {
        if (exp & 1)
            r *= b;
        if (exp > 1)
            b *= b;
    }
    return r;
}

BigInt clause_set_var_bound(std::size_t nformulas) {
    if (nformulas == 0)
        throw std::invalid_argument("clause_set_var_bound: empty set");
    return BigInt(nformulas) - 1;
}

BigInt set_var_upper_bound(int k, std::size_t nformulas) {
    if (k < 1)
        throw std::invalid_argument("set_var_upper_bound: k must be positive");
    return big_pow(BigInt(k) * BigInt(nformulas), static_cast<unsigned>(k) + 1);
}

Rational family_var_lower_bound(int m, int k) {
    if (k < 1 || m < 1)
        throw std::invalid_argument("family_var_lower_bound: m, k must be positive");
    Rational base = Rational(m, 4) * (Rational(1) - Rational(1, k));
    return rat_pow(base, static_cast<unsigned>(k));
}

Rational xor_var_lower_bound(int m, int k) {
    if (k < 1 || m < 1)
        throw std::invalid_argument("xor_var_lower_bound: m, k must be positive");
    Rational base = Rational(m, k + 2) * (Rational(1) - Rational(1, k));
    return Rational(k + 1) * rat_pow(base, static_cast<unsigned>(k));
}

std::string rational_str(const Rational& r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace kdnf
