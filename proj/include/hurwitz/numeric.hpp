#ifndef HURWITZ_NUMERIC_HPP
#define HURWITZ_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <vector>

namespace hurwitz {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// C(n, k); zero outside 0 <= k <= n.
inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// Largest integer <= q.
inline Int floor_rat(const Rat& q) {
    Int num = numerator(q), den = denominator(q);  // den > 0 canonical
    if (num >= 0) return num / den;
    return -((-num + den - 1) / den);
}

// Smallest integer >= q.
inline Int ceil_rat(const Rat& q) { return -floor_rat(-q); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

}  // namespace hurwitz

#endif
