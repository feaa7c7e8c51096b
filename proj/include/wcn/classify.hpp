#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wcn/arith.hpp"
#include "wcn/bernoulli.hpp"

namespace wcn {

/// Korselt-style criterion: composite, odd, and p-1 | n-1 for every prime p | n.
bool is_weak_carmichael(const Factorization& f);

/// Direct congruence oracle over the lower half of the reduced residues:
/// 2 * sum r_i^(n-1) == phi(n) (mod n). Same verdict as is_weak_carmichael.
bool is_weak_carmichael_oracle(u64 n);

/// Korselt's criterion: squarefree weak Carmichael number.
bool is_carmichael(const Factorization& f);

/// Carmichael test through the von Staudt-Clausen denominator of B_{n-1},
/// computed as a prime product mod n. n must be an odd composite.
bool is_carmichael_bernoulli(const Factorization& f);

/// Width cap for the mod-n^2 arithmetic of the super-Carmichael congruence.
inline constexpr u64 kSuperCap = u64(1) << 31;

/// Weak Carmichael number whose defining congruence holds modulo n^2.
/// Uses the staged per-prime filter, short-circuiting at the first failing prime.
/// n above the width cap is rejected.
bool is_super_carmichael(const Factorization& f);

/// The three evaluation routes of the mod-n^2 congruence, exposed for
/// cross-checking. n (odd, composite, below the cap) need not be a WCN.
bool super_congruence_direct(u64 n);
bool super_congruence_halved(u64 n);
bool super_congruence_staged(const Factorization& f);

/// Fermat-liar census: F(n) = prod gcd(p-1, n-1), f(n) = F(n)/phi(n).
struct LiarStats {
    u64 n = 0;
    u64 liar_count = 0;                            // F(n)
    BigRational liar_fraction;                     // f(n)
    std::vector<std::pair<u64, u64>> per_prime;    // (p, gcd(p-1, n-1))
};
LiarStats fermat_liar_count(const Factorization& f);

/// a^(n-1) == 1 (mod n)? Base must be coprime to n.
bool is_fermat_pseudoprime(u64 n, u64 a);

/// gcd(n, phi(n)) == 1 (primes qualify).
bool is_k_number(const Factorization& f);

enum class LehmerStatus { not_in_l_infinity, found, cap_exceeded };
struct LehmerIndex {
    LehmerStatus status = LehmerStatus::not_in_l_infinity;
    u32 k = 0;  // meaningful when status == found
};
/// Smallest k with phi(n) | (n-1)^k, via prime-power valuations (no big powers).
/// not_in_l_infinity when rad(phi(n)) does not divide n-1. n must be composite.
LehmerIndex lehmer_index(const Factorization& f, u32 k_max = 64);

/// Divisor criterion p | n/p - 1 for every prime p | n, on squarefree composites.
bool is_giuga(const Factorization& f);
/// p^2 | n - p for every prime p | n (composite n).
bool is_weak_giuga(const Factorization& f);
/// Direct congruence: sum_{k<n} k^phi(n) == -1 (mod n), composite n.
bool giuga_congruence(const Factorization& f);
/// Composite n with S_{n-1}(n) == -1 (mod n).
bool is_giuga_counterexample(u64 n);

/// Smallest k in [2, k_max] such that exactly one prime factor has
/// (p-1)/gcd(p-1, n-1) == k while every other prime satisfies p-1 | n-1.
/// Input must be an odd squarefree composite with >= 2 prime factors.
std::optional<u64> almost_carmichael_order(const Factorization& f, u64 k_max);

/// No representation n = m^f with f >= 2 and m itself a weak Carmichael number.
/// Input must be a weak Carmichael number.
bool is_primitive_wcn(const Factorization& f);

struct NumberProfile {
    u64 n = 0;
    Factorization factorization;
    bool is_prime = false;
    bool is_prime_power = false;   // p^e with e >= 2
    bool is_weak_carmichael = false;
    bool is_carmichael = false;
    bool is_k_number = false;
    std::optional<u32> lehmer_index;
    bool giuga = false;
    bool weak_giuga = false;
    std::optional<u64> almost_order;
    u64 cw = 1;                    // lcm(p-1) over prime divisors
    u64 lambda = 1;
    u64 liar_count = 1;            // F(n)
    BigRational liar_fraction;     // f(n)
};

/// Full classification record; factorizes once and reuses it everywhere.
NumberProfile profile(u64 n);

}  // namespace wcn
