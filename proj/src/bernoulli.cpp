#include "wcn/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace wcn {

namespace {

std::vector<BigRational> build_bernoulli_table() {
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
    std::vector<BigRational> b(kBernoulliCap + 1);
    b[0] = 1;
    std::vector<BigInt> binom(kBernoulliCap + 2);
    for (unsigned m = 1; m <= kBernoulliCap; ++m) {
        binom[0] = 1;
        for (unsigned j = 1; j <= m + 1; ++j)
            binom[j] = binom[j - 1] * (m + 2 - j) / j;
        BigRational acc = 0;
        for (unsigned j = 0; j < m; ++j) acc += BigRational(binom[j]) * b[j];
        b[m] = -acc / (m + 1);
    }
    return b;
}

}  // namespace

BigRational bernoulli(unsigned i) {
    if (i > kBernoulliCap)
        throw std::invalid_argument("bernoulli: index exceeds exact-recurrence cap");
    static const std::vector<BigRational> table = build_bernoulli_table();
    return table[i];
}

BigInt bernoulli_denominator(u64 two_n) {
    if (two_n == 0 || two_n % 2 != 0)
        throw std::invalid_argument("bernoulli_denominator: argument must be even and >= 2");
    BigInt prod = 1;
    for (u64 d : divisors(two_n))
        if (is_prime(d + 1)) prod *= d + 1;
    return prod;
}

}  // namespace wcn
