#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wcn/arith.hpp"

namespace wcn {

/// A constructed number kept in exponent form; `value` is present only when the
/// product fits 64 bits.
struct FamilyMember {
    std::vector<PrimePower> factors;
    std::optional<u64> value;

    BigInt big_value() const;
};

FamilyMember make_member(std::vector<PrimePower> factors);

/// Theorem-style membership check on the factored form: odd, composite, and
/// n == 1 (mod p-1) for every prime p, evaluated by modular exponentiation so
/// oversized members never have to be materialized.
bool is_weak_carmichael_exponent_form(const std::vector<PrimePower>& factors);

enum class FamilyKind { chernick, extended_chernick, lift, prime_power_pair, wong, k_number_power };

/// Presentation record for a parametric construction.
struct FamilyDescriptor {
    FamilyKind kind;
    std::vector<u64> base_primes;
    std::string exponent_rule;
    std::vector<std::pair<std::string, u64>> parameters;
};

/// (6m+1)(12m+1)(18m+1); Carmichael exactly when all three components are prime.
struct ChernickResult {
    u64 m = 0;
    u64 value = 0;
    std::array<u64, 3> components{};
    std::array<bool, 3> component_prime{};
    bool carmichael = false;

    FamilyDescriptor descriptor() const;
};
ChernickResult chernick(u64 m);

/// Solutions m0 of m0(ab+ac+bc) == -(a+b+c) (mod abc) as a residue class.
/// a < b < c pairwise coprime is required.
struct ResidueClass {
    u64 residue = 0;
    u64 modulus = 0;
};
ResidueClass chernick_m0(u64 a, u64 b, u64 c);

/// Extended product (6m+1)(12m+1)(18m+1) * w^l with w = 36m/d + 1.
/// `member` reports whether the constructed number is a weak Carmichael number;
/// that holds iff w^l == 1 (mod 36m) and (6m+1)(12m+1)(18m+1) == 1 (mod w-1).
/// `smallest_l` is the least exponent producing a member (0 when none exists).
struct ExtendedChernick {
    u64 m = 0, d = 0, l = 0;
    u64 w = 0;
    bool member = false;
    u64 smallest_l = 0;
    FamilyMember number;

    FamilyDescriptor descriptor() const;
};
ExtendedChernick extended_chernick(u64 m, u64 d, u64 l);

/// Admissible fourth primes w = 36m/d + 1 over divisors d of 36, excluding the
/// three Chernick components and even values.
std::vector<u64> chernick_w_set(u64 m);

/// Per-prime lift periods of a Carmichael number n = p_1...p_s: the smallest
/// d_i with p_i^{d_i} == 1 (mod lcm_{j != i}(p_j - 1)). Every n * p_i^{m d_i}
/// is then a weak Carmichael number.
struct LiftComponent {
    u64 prime = 0;
    u64 d = 0;
};
std::vector<LiftComponent> lift_carmichael(const Factorization& f);

/// The lifted member n * p_i^{m * d_i}.
FamilyMember lift_member(const Factorization& f, std::size_t index, u64 m);

/// For odd primes p < q with p not dividing q-1: smallest (u, v) with
/// p^u == 1 (mod q-1) and q^v == 1 (mod p-1). p^a q^b is a weak Carmichael
/// number iff u | a and v | b. nullopt when p | q-1 (no such number exists).
std::optional<std::pair<u64, u64>> prime_power_pair_family(u64 p, u64 q);

/// Exponent base (e_1,...,e_s) with e_i = lcm_{j != i} phi(p_j); every
/// p_1^{k_1 e_1}...p_s^{k_s e_s} is a weak Carmichael number. The primes must
/// be pairwise non-dividing: p_j never divides p_i - 1.
std::vector<u64> wong_family(const std::vector<u64>& primes);

/// n^{d * lambda(n)} for a K-number n > 2, returned in exponent form.
FamilyMember k_number_power(const Factorization& f, u64 d);

}  // namespace wcn
