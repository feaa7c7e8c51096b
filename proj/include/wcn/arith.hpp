#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wcn {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

using BigInt = boost::multiprecision::cpp_int;

/// (a * b) mod m without overflow.
inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

/// base^exponent mod modulus. modulus >= 1; modulus == 0 is rejected.
u64 mod_pow(u64 base, u64 exponent, u64 modulus);

struct PrimePower {
    u64 prime = 0;
    u32 exponent = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime decomposition. Primes strictly increasing; empty list iff n == 1.
struct Factorization {
    u64 n = 1;
    std::vector<PrimePower> factors;

    bool squarefree() const;
    bool prime() const { return factors.size() == 1 && factors[0].exponent == 1; }
    bool composite() const { return n > 1 && !prime(); }
    std::size_t distinct_primes() const { return factors.size(); }
    u64 largest_prime() const { return factors.empty() ? 1 : factors.back().prime; }
    u32 max_exponent() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Shared immutable table of all primes below 1e6 (built once, safe to read concurrently).
const std::vector<u32>& small_primes();

/// Exact deterministic primality for the full 64-bit range.
bool is_prime(u64 n);

/// Trial division over the prime table, then Miller-Rabin + Brent-Pollard rho for leftovers.
Factorization factorize(u64 n);

/// All divisors of n, ascending.
std::vector<u64> divisors(u64 n);
std::vector<u64> divisors(const Factorization& f);

u64 euler_phi(const Factorization& f);
u64 carmichael_lambda(const Factorization& f);

/// lcm(p - 1) over the distinct prime divisors; defined for odd n >= 3.
u64 cw(const Factorization& f);

u64 radical(const Factorization& f);
int moebius(const Factorization& f);

/// S_l(m) = sum_{i=1}^{m-1} i^l mod m via the Carlitz-von Staudt closed form:
/// runs in the time it takes to factor m, not O(m).
u64 power_sum_mod(u64 l, u64 m);

/// phi_k(n): sum of k-th powers of the totatives of n; phi_k(1) = 0.
BigInt totative_power_sum(u64 n, u32 k);

/// Ordered reduced residues 1 = r_1 < r_2 < ... < r_phi(n) modulo n.
struct TotativeSet {
    u64 n = 0;
    std::vector<u64> residues;
};
TotativeSet reduced_residues(u64 n);

/// Visit the lower half r_1..r_{phi(n)/2} (all totatives < n/2) in increasing order.
template <class F>
void for_each_totative_half(u64 n, F&& fn) {
    for (u64 r = 1; 2 * r < n; ++r)
        if (std::gcd(r, n) == 1) fn(r);
}

/// Exact integer k-th root when n is a perfect k-th power, nullopt otherwise.
std::optional<u64> exact_root(u64 n, unsigned k);

}  // namespace wcn
