#include "wcn/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace wcn {

namespace {

u64 cw_unchecked(const Factorization& f) {
    u64 r = 1;
    for (const auto& pp : f.factors) r = std::lcm(r, pp.prime - 1);
    return r;
}

void require_odd_composite(const Factorization& f, const char* who) {
    if (f.n < 2 || f.n % 2 == 0 || !f.composite())
        throw std::invalid_argument(std::string(who) + ": n must be an odd composite");
}

}  // namespace

bool is_weak_carmichael(const Factorization& f) {
    if (f.n % 2 == 0 || !f.composite()) return false;
    for (const auto& pp : f.factors)
        if ((f.n - 1) % (pp.prime - 1) != 0) return false;
    return true;
}

bool is_weak_carmichael_oracle(u64 n) {
    if (n % 2 == 0) return false;
    const Factorization f = factorize(n);
    if (!f.composite()) return false;
    const u64 phi = euler_phi(f);
    u64 acc = 0;
    for_each_totative_half(n, [&](u64 r) { acc = (acc + mod_pow(r, n - 1, n)) % n; });
    return (2 * acc) % n == phi % n;
}

bool is_carmichael(const Factorization& f) {
    return f.squarefree() && is_weak_carmichael(f);
}

bool is_carmichael_bernoulli(const Factorization& f) {
    require_odd_composite(f, "is_carmichael_bernoulli");
    if (!f.squarefree()) return false;
    // denominator of B_{n-1} is the product of primes p with p-1 | n-1;
    // n divides it iff n is squarefree and every prime factor appears in it.
    u64 prod_mod = 1;
    for (u64 d : divisors(f.n - 1))
        if (is_prime(d + 1)) prod_mod = mul_mod(prod_mod, (d + 1) % f.n, f.n);
    return prod_mod == 0;
}

bool super_congruence_direct(u64 n) {
    if (n >= kSuperCap)
        throw std::out_of_range("super_congruence_direct: n exceeds the mod-n^2 width cap");
    const u64 nn = n * n;
    const u64 phi = euler_phi(factorize(n));
    u64 acc = 0;
    for (u64 r = 1; r < n; ++r) {
        if (std::gcd(r, n) != 1) continue;
        acc = (acc + mod_pow(r, n - 1, nn)) % nn;
    }
    return acc == phi % nn;
}

bool super_congruence_halved(u64 n) {
    if (n >= kSuperCap)
        throw std::out_of_range("super_congruence_halved: n exceeds the mod-n^2 width cap");
    const u64 nn = n * n;
    const u64 phi = euler_phi(factorize(n));
    u64 s1 = 0, s2 = 0;
    for_each_totative_half(n, [&](u64 r) {
        s1 = (s1 + mod_pow(r, n - 1, nn)) % nn;
        s2 = (s2 + mod_pow(r, n - 2, nn)) % nn;
    });
    const u64 acc = (2 * u128(s1) % nn + mul_mod(n, s2, nn)) % nn;
    return acc == phi % nn;
}

bool super_congruence_staged(const Factorization& f) {
    const u64 n = f.n;
    if (n >= kSuperCap)
        throw std::out_of_range("super_congruence_staged: n exceeds the mod-n^2 width cap");
    const u64 phi = euler_phi(f);
    // one stage per prime power: congruence mod p^(2e) with Euler-reduced exponents,
    // cheapest exponents checked first
    struct Stage {
        u64 mod, lred, ured;
    };
    std::vector<Stage> stages;
    for (const auto& [p, e] : f.factors) {
        u64 pe = 1;
        for (u32 i = 0; i < e; ++i) pe *= p;
        const u64 mod = pe * pe;
        const u64 phi_mod = mod / p * (p - 1);
        const u64 phi_pe = pe / p * (p - 1);
        stages.push_back({mod, (n - 1) % phi_mod, (n - 2) % phi_pe});
    }
    std::sort(stages.begin(), stages.end(), [](const Stage& a, const Stage& b) {
        return std::max(a.lred, a.ured) < std::max(b.lred, b.ured);
    });
    for (const Stage& st : stages) {
        u64 s1 = 0, s2 = 0;
        for_each_totative_half(n, [&](u64 r) {
            s1 = (s1 + mod_pow(r, st.lred, st.mod)) % st.mod;
            s2 = (s2 + mod_pow(r, st.ured, st.mod)) % st.mod;
        });
        const u64 acc = (2 * u128(s1) % st.mod + mul_mod(n % st.mod, s2, st.mod)) % st.mod;
        if (acc != phi % st.mod) return false;
    }
    return true;
}

bool is_super_carmichael(const Factorization& f) {
    if (f.n % 2 == 0 || !f.composite()) return false;
    if (f.n >= kSuperCap)
        throw std::out_of_range("is_super_carmichael: n exceeds the mod-n^2 width cap");
    if (!is_weak_carmichael(f)) return false;
    return super_congruence_staged(f);
}

LiarStats fermat_liar_count(const Factorization& f) {
    if (f.n < 2) throw std::invalid_argument("fermat_liar_count: n must be >= 2");
    LiarStats st;
    st.n = f.n;
    st.liar_count = 1;
    for (const auto& pp : f.factors) {
        const u64 g = std::gcd(pp.prime - 1, f.n - 1);
        st.per_prime.emplace_back(pp.prime, g);
        st.liar_count *= g;
    }
    st.liar_fraction = BigRational(st.liar_count, euler_phi(f));
    return st;
}

bool is_fermat_pseudoprime(u64 n, u64 a) {
    if (n < 2) throw std::invalid_argument("is_fermat_pseudoprime: n must be >= 2");
    if (std::gcd(a % n, n) != 1)
        throw std::invalid_argument("is_fermat_pseudoprime: base must be coprime to n");
    return mod_pow(a, n - 1, n) == 1;
}

bool is_k_number(const Factorization& f) {
    if (f.n < 2) return false;
    // gcd(n, phi(n)) == 1: every exponent 1 and no prime divides another's p-1
    for (const auto& pp : f.factors) {
        if (pp.exponent > 1) return false;
        if (std::gcd(f.n, pp.prime - 1) != 1) return false;
    }
    return true;
}

LehmerIndex lehmer_index(const Factorization& f, u32 k_max) {
    if (!f.composite())
        throw std::invalid_argument("lehmer_index: n must be composite");
    const u64 phi = euler_phi(f);
    const Factorization phi_f = factorize(phi);
    const u64 nm1 = f.n - 1;
    u32 k = 1;
    for (const auto& [q, e] : phi_f.factors) {
        if (nm1 % q != 0) return {LehmerStatus::not_in_l_infinity, 0};
        u32 v = 0;
        u64 t = nm1;
        while (t % q == 0) {
            t /= q;
            ++v;
        }
        k = std::max(k, (e + v - 1) / v);  // ceil(e / v)
    }
    if (k > k_max) return {LehmerStatus::cap_exceeded, 0};
    return {LehmerStatus::found, k};
}

bool is_giuga(const Factorization& f) {
    if (!f.composite() || !f.squarefree()) return false;
    for (const auto& pp : f.factors)
        if ((f.n / pp.prime - 1) % pp.prime != 0) return false;
    return true;
}

bool is_weak_giuga(const Factorization& f) {
    if (!f.composite()) return false;
    for (const auto& pp : f.factors)
        if ((f.n - pp.prime) % (pp.prime * pp.prime) != 0) return false;
    return true;
}

bool giuga_congruence(const Factorization& f) {
    if (!f.composite()) return false;
    return power_sum_mod(euler_phi(f), f.n) == f.n - 1;
}

bool is_giuga_counterexample(u64 n) {
    if (n < 4) return false;
    const Factorization f = factorize(n);
    if (!f.composite()) return false;
    return power_sum_mod(n - 1, n) == n - 1;
}

std::optional<u64> almost_carmichael_order(const Factorization& f, u64 k_max) {
    if (f.n % 2 == 0 || !f.composite() || !f.squarefree() || f.distinct_primes() < 2)
        throw std::invalid_argument(
            "almost_carmichael_order: n must be an odd squarefree composite with >= 2 primes");
    u64 order = 0;
    for (const auto& pp : f.factors) {
        const u64 k = (pp.prime - 1) / std::gcd(pp.prime - 1, f.n - 1);
        if (k == 1) continue;
        if (order != 0) return std::nullopt;  // a second prime misses n-1
        order = k;
    }
    if (order < 2 || order > k_max) return std::nullopt;
    return order;
}

bool is_primitive_wcn(const Factorization& f) {
    if (!is_weak_carmichael(f))
        throw std::invalid_argument("is_primitive_wcn: n must be a weak Carmichael number");
    for (unsigned e = 2; (u64(1) << e) <= f.n; ++e) {
        const auto root = exact_root(f.n, e);
        if (root && *root >= 9 && is_weak_carmichael(factorize(*root))) return false;
    }
    return true;
}

NumberProfile profile(u64 n) {
    if (n < 2) throw std::invalid_argument("profile: n must be >= 2");
    NumberProfile p;
    p.n = n;
    p.factorization = factorize(n);
    const Factorization& f = p.factorization;
    p.is_prime = f.prime();
    p.is_prime_power = f.distinct_primes() == 1 && f.factors[0].exponent >= 2;
    p.is_weak_carmichael = is_weak_carmichael(f);
    p.is_carmichael = p.is_weak_carmichael && f.squarefree();
    p.is_k_number = is_k_number(f);
    p.giuga = is_giuga(f);
    p.weak_giuga = is_weak_giuga(f);
    p.cw = cw_unchecked(f);
    p.lambda = carmichael_lambda(f);
    const LiarStats liars = fermat_liar_count(f);
    p.liar_count = liars.liar_count;
    p.liar_fraction = liars.liar_fraction;
    if (f.composite()) {
        const LehmerIndex li = lehmer_index(f);
        if (li.status == LehmerStatus::found) p.lehmer_index = li.k;
        if (n % 2 == 1 && f.squarefree() && f.distinct_primes() >= 2)
            p.almost_order = almost_carmichael_order(f, ~u64(0));
    }
    return p;
}

}  // namespace wcn
