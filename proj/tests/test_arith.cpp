#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "wcn/arith.hpp"
#include "wcn/bernoulli.hpp"

using namespace wcn;

namespace {

// brute-force oracles, kept deliberately naive and independent
u64 brute_power_sum(u64 l, u64 m) {
    u64 acc = 0;
    for (u64 i = 1; i < m; ++i) acc = (acc + mod_pow(i, l, m)) % m;
    return acc;
}

bool trial_division_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

u64 brute_lambda(u64 n) {
    // smallest m with a^m == 1 (mod n) for every coprime a
    for (u64 m = 1;; ++m) {
        bool ok = true;
        for (u64 a = 2; a < n && ok; ++a)
            if (std::gcd(a, n) == 1 && mod_pow(a, m, n) != 1) ok = false;
        if (ok) return m;
    }
}

BigInt big_pow_int(u64 b, unsigned e) { return boost::multiprecision::pow(BigInt(b), e); }

}  // namespace

TEST_CASE("mod_pow basics") {
    CHECK(mod_pow(5, 0, 7) == 1);
    CHECK(mod_pow(2, 10, 1000) == 24);
    CHECK(mod_pow(2, 560, 561) == 1);
    CHECK(mod_pow(3, 5, 1) == 0);
    CHECK_THROWS_AS(mod_pow(2, 3, 0), std::invalid_argument);
    // no overflow near the top of the range
    const u64 big = 0xFFFFFFFFFFFFFFC5ull;  // largest 64-bit prime
    CHECK(mod_pow(2, big - 1, big) == 1);
}

TEST_CASE("factorize canonical forms") {
    auto f = factorize(561);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == PrimePower{3, 1});
    CHECK(f.factors[1] == PrimePower{11, 1});
    CHECK(f.factors[2] == PrimePower{17, 1});

    CHECK(factorize(1).factors.empty());
    auto g = factorize(45441);
    REQUIRE(g.factors.size() == 3);
    CHECK(g.factors[0] == PrimePower{3, 5});
    CHECK(g.factors[1] == PrimePower{11, 1});
    CHECK(g.factors[2] == PrimePower{17, 1});
}

TEST_CASE("factorize round-trips on random 64-bit inputs") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 200; ++i) {
        const u64 n = rng() >> (i % 32);
        if (n == 0) continue;
        const auto f = factorize(n);
        u128 prod = 1;
        u64 prev = 0;
        for (const auto& [p, e] : f.factors) {
            CHECK(p > prev);
            CHECK(is_prime(p));
            prev = p;
            for (u32 j = 0; j < e; ++j) prod *= p;
        }
        CHECK(u64(prod) == n);
    }
}

TEST_CASE("is_prime agrees with trial division below 1e6") {
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(561));
    CHECK(is_prime(2017));
    for (u64 n = 0; n < 20000; ++n) CHECK(is_prime(n) == trial_division_prime(n));
    // spot-check the sieve boundary and larger pseudoprime traps
    for (u64 n : {999983ull, 1000003ull, 3215031751ull, 3825123056546413051ull})
        CHECK(is_prime(n) == trial_division_prime(n));
}

TEST_CASE("euler_phi and carmichael_lambda") {
    CHECK(euler_phi(factorize(561)) == 320);
    CHECK(euler_phi(factorize(9)) == 6);
    CHECK(euler_phi(factorize(1105)) == 768);
    CHECK(euler_phi(factorize(1)) == 1);

    CHECK(carmichael_lambda(factorize(561)) == 80);
    CHECK(carmichael_lambda(factorize(9)) == 6);
    CHECK(carmichael_lambda(factorize(15)) == 4);
    for (u64 n = 2; n <= 150; ++n)
        CHECK(carmichael_lambda(factorize(n)) == brute_lambda(n));
}

TEST_CASE("cw: lcm of p-1 over distinct primes") {
    CHECK(cw(factorize(45)) == 4);
    CHECK(cw(factorize(561)) == 80);
    CHECK(cw(factorize(343)) == 6);  // single prime power: p - 1
    CHECK(cw(factorize(2187)) == 2);
    CHECK_THROWS_AS(cw(factorize(10)), std::invalid_argument);
    CHECK_THROWS_AS(cw(factorize(1)), std::invalid_argument);
}

TEST_CASE("cw divides lambda for odd n up to 1e5") {
    for (u64 n = 3; n <= 100000; n += 2) {
        const auto f = factorize(n);
        CHECK(carmichael_lambda(f) % cw(f) == 0);
    }
}

TEST_CASE("radical and moebius") {
    CHECK(radical(factorize(320)) == 10);
    CHECK(radical(factorize(1)) == 1);
    CHECK(moebius(factorize(561)) == -1);
    CHECK(moebius(factorize(45)) == 0);
    CHECK(moebius(factorize(1)) == 1);
    CHECK(moebius(factorize(15)) == 1);
}

TEST_CASE("power_sum_mod closed form equals brute force") {
    CHECK(power_sum_mod(4, 10) == 3);
    CHECK(power_sum_mod(3, 7) == 0);
    CHECK(power_sum_mod(560, 561) == 290);
    for (u64 m = 2; m <= 300; ++m)
        for (u64 l = 1; l <= 60; ++l) CHECK(power_sum_mod(l, m) == brute_power_sum(l, m));
}

TEST_CASE("totative_power_sum") {
    CHECK(totative_power_sum(10, 0) == 4);
    CHECK(totative_power_sum(10, 1) == 20);
    CHECK(totative_power_sum(9, 2) == 159);
    CHECK(totative_power_sum(1, 7) == 0);
    // symmetry: phi_1(n) = n phi(n) / 2 for n >= 2
    for (u64 n = 2; n <= 200; ++n)
        CHECK(totative_power_sum(n, 1) == BigInt(n) * euler_phi(factorize(n)) / 2);
    // big accumulation path
    CHECK(totative_power_sum(97, 40) == [] {
        BigInt acc = 0;
        for (u64 t = 1; t < 97; ++t) acc += big_pow_int(t, 40);
        return acc;
    }());
}

TEST_CASE("Liouville recurrence and Gauss' formula") {
    // sum_{d|n} (n/d)^k phi_k(d) = 1^k + ... + n^k, with the d = 1 term
    // contributing n^k (the k-th power sum over the single residue of d = 1)
    for (u64 n = 1; n <= 50; ++n) {
        for (u32 k = 0; k <= 6; ++k) {
            BigInt lhs = big_pow_int(n, k);
            for (u64 d : divisors(n)) {
                if (d == 1) continue;
                lhs += big_pow_int(n / d, k) * totative_power_sum(d, k);
            }
            BigInt rhs = 0;
            for (u64 i = 1; i <= n; ++i) rhs += big_pow_int(i, k);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("degree-(2k-1) recurrence") {
    // sum_{i=0}^{2k-1} (-1)^i C(2k-1,i) 2^(2k-1-i) n^i phi_{2k-1-i}(n) = 0
    for (u64 n = 2; n <= 40; ++n) {
        for (u32 k = 1; k <= 4; ++k) {
            BigInt acc = 0;
            BigInt binom = 1;
            for (u32 i = 0; i <= 2 * k - 1; ++i) {
                BigInt term = binom * big_pow_int(2, 2 * k - 1 - i) * big_pow_int(n, i) *
                              totative_power_sum(n, 2 * k - 1 - i);
                acc += (i % 2 == 0) ? term : -term;
                binom = binom * (2 * k - 1 - i) / (i + 1);
            }
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == BigRational(-1, 2));
    CHECK(bernoulli(2) == BigRational(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(4) == BigRational(-1, 30));
    for (unsigned i = 5; i <= 63; i += 2) CHECK(bernoulli(i) == 0);
    CHECK_THROWS_AS(bernoulli(65), std::invalid_argument);
    CHECK(bernoulli_denominator(12) == 2730);
    CHECK_THROWS_AS(bernoulli_denominator(7), std::invalid_argument);
}

TEST_CASE("Faulhaber: Bernoulli formula equals the brute power sum") {
    for (u64 n = 2; n <= 30; ++n) {
        for (u32 k = 1; k <= 10; ++k) {
            BigRational s = 0;
            BigInt binom = 1;  // C(k+1, i)
            for (u32 i = 0; i <= k; ++i) {
                s += BigRational(binom * big_pow_int(n, k + 1 - i)) * bernoulli(i);
                binom = binom * (k + 1 - i) / (i + 1);
            }
            s /= k + 1;
            BigInt brute = 0;
            for (u64 j = 1; j < n; ++j) brute += big_pow_int(j, k);
            CHECK(s == BigRational(brute));
        }
    }
}

TEST_CASE("von Staudt-Clausen: exact denominators") {
    for (u64 two_n = 2; two_n <= 40; two_n += 2)
        CHECK(boost::multiprecision::denominator(bernoulli(unsigned(two_n))) ==
              bernoulli_denominator(two_n));
}

TEST_CASE("reduced residues") {
    CHECK(reduced_residues(9).residues == std::vector<u64>{1, 2, 4, 5, 7, 8});
    CHECK(reduced_residues(7).residues == std::vector<u64>{1, 2, 3, 4, 5, 6});
    CHECK(reduced_residues(15).residues == std::vector<u64>{1, 2, 4, 7, 8, 11, 13, 14});
    // symmetry r <-> n - r
    for (u64 n = 3; n <= 100; ++n) {
        const auto t = reduced_residues(n);
        CHECK(t.residues.size() == euler_phi(factorize(n)));
        for (u64 r : t.residues)
            CHECK(std::binary_search(t.residues.begin(), t.residues.end(), n - r));
    }
    // the streamed lower half matches the front of the full set
    std::vector<u64> half;
    for_each_totative_half(15, [&](u64 r) { half.push_back(r); });
    CHECK(half == std::vector<u64>{1, 2, 4, 7});
}

TEST_CASE("exact_root") {
    CHECK(exact_root(2025, 2) == 45);
    CHECK(exact_root(19683, 9) == 3);
    CHECK(exact_root(2026, 2) == std::nullopt);
    CHECK(exact_root(u64(1) << 62, 62) == 2);
    CHECK(exact_root(0, 5) == 0);
}

TEST_CASE("divisors") {
    CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<u64>{1});
    CHECK(divisors(49) == std::vector<u64>{1, 7, 49});
}
