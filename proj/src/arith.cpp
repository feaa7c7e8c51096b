#include "wcn/arith.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace wcn {

u64 mod_pow(u64 base, u64 exponent, u64 modulus) {
    if (modulus == 0) throw std::invalid_argument("mod_pow: modulus must be >= 1");
    u64 result = 1 % modulus;
    base %= modulus;
    while (exponent > 0) {
        if (exponent & 1) result = mul_mod(result, base, modulus);
        base = mul_mod(base, base, modulus);
        exponent >>= 1;
    }
    return result;
}

bool Factorization::squarefree() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const PrimePower& pp) { return pp.exponent == 1; });
}

u32 Factorization::max_exponent() const {
    u32 m = 0;
    for (const auto& pp : factors) m = std::max(m, pp.exponent);
    return m;
}

namespace {

constexpr u32 kSieveLimit = 1'000'000;

std::vector<u32> build_prime_table() {
    std::vector<bool> composite(kSieveLimit, false);
    std::vector<u32> primes;
    primes.reserve(78640);
    for (u32 i = 2; i < kSieveLimit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (u64 j = u64(i) * i; j < kSieveLimit; j += i) composite[j] = true;
    }
    return primes;
}

// One strong-probable-prime round to base a.
bool sprp(u64 n, u64 a, u64 d, int s) {
    u64 x = mod_pow(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

u64 pollard_brent(u64 n) {
    // Brent's cycle-finding variant; n must be odd, composite, not a prime power <= table reach.
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1, q = 1, ys = 0;
        u64 r = 1;
        const u64 m = 128;
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mul_mod(y, y, n) + c) % n;
            for (u64 k = 0; k < r && d == 1; k += m) {
                ys = y;
                const u64 lim = std::min(m, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = (mul_mod(y, y, n) + c) % n;
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
            }
            r *= 2;
        }
        if (d == n) {
            // back-track one step at a time
            do {
                ys = (mul_mod(ys, ys, n) + c) % n;
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_recursive(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    const u64 d = pollard_brent(n);
    factor_recursive(d, out);
    factor_recursive(n / d, out);
}

}  // namespace

const std::vector<u32>& small_primes() {
    static const std::vector<u32> table = build_prime_table();
    return table;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 41 * 41) return true;
    int s = 0;
    u64 d = n - 1;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is exact for every 64-bit integer.
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (!sprp(n, a, d, s)) return false;
    return true;
}

Factorization factorize(u64 n) {
    Factorization f;
    f.n = n;
    if (n <= 1) return f;
    u64 rest = n;
    for (u32 p : small_primes()) {
        if (u64(p) * p > rest) break;
        if (rest % p == 0) {
            u32 e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            f.factors.push_back({p, e});
        }
    }
    if (rest > 1) {
        if (rest < u64(kSieveLimit) * kSieveLimit || is_prime(rest)) {
            f.factors.push_back({rest, 1});
        } else {
            std::vector<u64> primes;
            factor_recursive(rest, primes);
            std::sort(primes.begin(), primes.end());
            for (std::size_t i = 0; i < primes.size();) {
                std::size_t j = i;
                while (j < primes.size() && primes[j] == primes[i]) ++j;
                f.factors.push_back({primes[i], u32(j - i)});
                i = j;
            }
        }
    }
    return f;
}

std::vector<u64> divisors(const Factorization& f) {
    std::vector<u64> ds{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = ds.size();
        u64 pk = 1;
        for (u32 i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::vector<u64> divisors(u64 n) { return divisors(factorize(n)); }

u64 euler_phi(const Factorization& f) {
    u64 r = 1;
    for (const auto& [p, e] : f.factors) {
        r *= p - 1;
        for (u32 i = 1; i < e; ++i) r *= p;
    }
    return r;
}

u64 carmichael_lambda(const Factorization& f) {
    u64 r = 1;
    for (const auto& [p, e] : f.factors) {
        u64 comp;
        if (p == 2)
            comp = e == 1 ? 1 : (e == 2 ? 2 : u64(1) << (e - 2));
        else {
            comp = p - 1;
            for (u32 i = 1; i < e; ++i) comp *= p;
        }
        r = std::lcm(r, comp);
    }
    return r;
}

u64 cw(const Factorization& f) {
    if (f.n < 3 || f.n % 2 == 0)
        throw std::invalid_argument("cw: defined for odd n >= 3");
    u64 r = 1;
    for (const auto& pp : f.factors) r = std::lcm(r, pp.prime - 1);
    return r;
}

u64 radical(const Factorization& f) {
    u64 r = 1;
    for (const auto& pp : f.factors) r *= pp.prime;
    return r;
}

int moebius(const Factorization& f) {
    if (!f.squarefree()) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

u64 power_sum_mod(u64 l, u64 m) {
    if (l == 0) throw std::invalid_argument("power_sum_mod: l must be >= 1");
    if (m < 2) throw std::invalid_argument("power_sum_mod: m must be >= 2");
    if (l % 2 == 1) {
        // Pairing i with m-i cancels everything mod m except the middle term m/2.
        return m % 2 == 0 ? mod_pow(m / 2, l, m) : 0;
    }
    u64 s = 0;
    for (const auto& [p, e] : factorize(m).factors)
        if (l % (p - 1) == 0) s = (s + m / p) % m;
    return (m - s) % m;
}

BigInt totative_power_sum(u64 n, u32 k) {
    if (n == 1) return 0;  // phi_k(1) = 0 by convention
    // u64 path whenever the whole sum fits: it is below n^(k+1)
    const unsigned bits = 64 - __builtin_clzll(n | 1);
    if (u64(k + 1) * bits <= 63) {
        u64 acc = 0;
        for (u64 t = 1; t < n; ++t) {
            if (std::gcd(t, n) != 1) continue;
            u64 pw = 1;
            for (u32 i = 0; i < k; ++i) pw *= t;
            acc += pw;
        }
        return BigInt(acc);
    }
    BigInt acc = 0;
    for (u64 t = 1; t < n; ++t) {
        if (std::gcd(t, n) != 1) continue;
        acc += boost::multiprecision::pow(BigInt(t), k);
    }
    return acc;
}

TotativeSet reduced_residues(u64 n) {
    if (n < 2) throw std::invalid_argument("reduced_residues: n must be >= 2");
    TotativeSet t{n, {}};
    for (u64 r = 1; r < n; ++r)
        if (std::gcd(r, n) == 1) t.residues.push_back(r);
    return t;
}

std::optional<u64> exact_root(u64 n, unsigned k) {
    if (k == 0) return std::nullopt;
    if (k == 1 || n <= 1) return n;
    auto pow_clamped = [](u64 b, unsigned e) -> u64 {
        u128 r = 1;
        while (e--) {
            r *= b;
            if (r > ~u64(0)) return ~u64(0);
        }
        return u64(r);
    };
    u64 x = u64(std::llround(std::pow(double(n), 1.0 / k)));
    for (u64 c = x > 2 ? x - 2 : 1; c <= x + 2; ++c)
        if (pow_clamped(c, k) == n) return c;
    return std::nullopt;
}

}  // namespace wcn
