#include "wcn/construct.hpp"

#include <algorithm>
#include <stdexcept>

#include "wcn/classify.hpp"

namespace wcn {

namespace {

u64 mult_order(u64 a, u64 m) {
    if (m == 1) return 1;
    if (std::gcd(a % m, m) != 1)
        throw std::invalid_argument("mult_order: base not coprime to modulus");
    // order divides lambda(m); peel primes off the group exponent
    u64 order = carmichael_lambda(factorize(m));
    for (const auto& [q, e] : factorize(order).factors)
        for (u32 i = 0; i < e && mod_pow(a, order / q, m) == 1; ++i) order /= q;
    return order;
}

std::optional<u64> checked_product(const std::vector<PrimePower>& factors) {
    u128 acc = 1;
    for (const auto& [p, e] : factors)
        for (u32 i = 0; i < e; ++i) {
            acc *= p;
            if (acc > ~u64(0)) return std::nullopt;
        }
    return u64(acc);
}

}  // namespace

BigInt FamilyMember::big_value() const {
    BigInt acc = 1;
    for (const auto& [p, e] : factors) acc *= boost::multiprecision::pow(BigInt(p), e);
    return acc;
}

FamilyMember make_member(std::vector<PrimePower> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    FamilyMember m;
    m.value = checked_product(factors);
    m.factors = std::move(factors);
    return m;
}

bool is_weak_carmichael_exponent_form(const std::vector<PrimePower>& factors) {
    if (factors.empty()) return false;
    u64 total_exp = 0;
    for (const auto& [p, e] : factors) {
        if (p == 2) return false;
        total_exp += e;
    }
    if (total_exp < 2) return false;  // prime, not composite
    for (const auto& [p, e] : factors) {
        // n == 1 (mod p-1), with n evaluated by modular exponentiation
        const u64 mod = p - 1;
        u64 acc = 1 % mod;
        for (const auto& [q, eq] : factors) acc = mul_mod(acc, mod_pow(q, eq, mod), mod);
        if (acc != 1 % mod) return false;
    }
    return true;
}

FamilyDescriptor ChernickResult::descriptor() const {
    FamilyDescriptor d;
    d.kind = FamilyKind::chernick;
    d.base_primes.assign(components.begin(), components.end());
    d.exponent_rule = "(6m+1)(12m+1)(18m+1), all exponents 1";
    d.parameters = {{"m", m}};
    return d;
}

ChernickResult chernick(u64 m) {
    ChernickResult r;
    r.m = m;
    r.components = {6 * m + 1, 12 * m + 1, 18 * m + 1};
    r.value = r.components[0] * r.components[1] * r.components[2];
    bool all_prime = true;
    for (int i = 0; i < 3; ++i) {
        r.component_prime[i] = is_prime(r.components[i]);
        all_prime = all_prime && r.component_prime[i];
    }
    r.carmichael = all_prime && m >= 1;
    return r;
}

ResidueClass chernick_m0(u64 a, u64 b, u64 c) {
    if (!(a < b && b < c))
        throw std::invalid_argument("chernick_m0: need a < b < c");
    if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1)
        throw std::invalid_argument("chernick_m0: a, b, c must be pairwise coprime");
    const u64 abc = a * b * c;
    const u64 coeff = (a * b + a * c + b * c) % abc;
    const u64 rhs = (abc - (a + b + c) % abc) % abc;
    // solve coeff * m == rhs (mod abc); pairwise coprimality makes coeff a unit,
    // but solve the general linear congruence anyway
    const u64 g = std::gcd(coeff, abc);
    if (rhs % g != 0)
        throw std::invalid_argument("chernick_m0: congruence has no solution");
    const u64 mod = abc / g;
    // inverse of coeff/g modulo mod via extended gcd
    long long t = 0, newt = 1;
    long long r = (long long)mod, newr = (long long)((coeff / g) % mod);
    while (newr != 0) {
        const long long q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    u64 inv = u64((t % (long long)mod + (long long)mod) % (long long)mod);
    const u64 m0 = mul_mod((rhs / g) % mod, inv, mod);
    return {m0, mod};
}

FamilyDescriptor ExtendedChernick::descriptor() const {
    FamilyDescriptor desc;
    desc.kind = FamilyKind::extended_chernick;
    for (const auto& pp : number.factors) desc.base_primes.push_back(pp.prime);
    desc.exponent_rule = "exponent l with w^l == 1 (mod 36m)";
    desc.parameters = {{"m", m}, {"d", d}, {"l", l}, {"w", w}};
    return desc;
}

ExtendedChernick extended_chernick(u64 m, u64 d, u64 l) {
    if (m < 1 || l < 1) throw std::invalid_argument("extended_chernick: need m >= 1 and l >= 1");
    if (d == 0 || (36 * m) % d != 0)
        throw std::invalid_argument("extended_chernick: d must divide 36m");
    ExtendedChernick r;
    r.m = m;
    r.d = d;
    r.l = l;
    const u64 p = 6 * m + 1, q = 12 * m + 1, s = 18 * m + 1;
    for (u64 comp : {p, q, s})
        if (!is_prime(comp))
            throw std::invalid_argument("extended_chernick: 6m+1, 12m+1, 18m+1 must all be prime");
    r.w = 36 * m / d + 1;
    if (!is_prime(r.w))
        throw std::invalid_argument("extended_chernick: w = 36m/d + 1 must be prime");
    if (r.w == p || r.w == q || r.w == s)
        throw std::invalid_argument("extended_chernick: w must differ from the three components");

    r.number = make_member({{p, 1}, {q, 1}, {s, 1}, {r.w, u32(l)}});

    // membership: all of p-1, q-1, s-1 divide n-1 iff w^l == 1 (mod 36m),
    // and w-1 | n-1 iff p q s == 1 (mod w-1)
    const u64 cycle_mod = 36 * m;
    const bool pqr_ok =
        mul_mod(mul_mod(p % (r.w - 1), q % (r.w - 1), r.w - 1), s % (r.w - 1), r.w - 1) == 1 % (r.w - 1);
    if (std::gcd(r.w, cycle_mod) == 1 && pqr_ok) {
        const u64 ord = mult_order(r.w, cycle_mod);
        r.smallest_l = ord;
        r.member = l % ord == 0;
    } else {
        r.smallest_l = 0;
        r.member = false;
    }
    return r;
}

std::vector<u64> chernick_w_set(u64 m) {
    const u64 p = 6 * m + 1, q = 12 * m + 1, s = 18 * m + 1;
    std::vector<u64> out;
    for (u64 d : {1, 2, 3, 4, 6, 9, 12, 18, 36}) {
        const u64 w = 36 * m / d + 1;
        if (w % 2 == 1 && w != p && w != q && w != s && is_prime(w)) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<LiftComponent> lift_carmichael(const Factorization& f) {
    if (!is_carmichael(f))
        throw std::invalid_argument("lift_carmichael: n must be a Carmichael number");
    std::vector<LiftComponent> out;
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        u64 mod = 1;
        for (std::size_t j = 0; j < f.factors.size(); ++j)
            if (j != i) mod = std::lcm(mod, f.factors[j].prime - 1);
        out.push_back({f.factors[i].prime, mult_order(f.factors[i].prime, mod)});
    }
    return out;
}

FamilyMember lift_member(const Factorization& f, std::size_t index, u64 m) {
    const auto lifts = lift_carmichael(f);
    if (index >= lifts.size()) throw std::invalid_argument("lift_member: index out of range");
    std::vector<PrimePower> factors = f.factors;
    factors[index].exponent += u32(m * lifts[index].d);
    return make_member(std::move(factors));
}

std::optional<std::pair<u64, u64>> prime_power_pair_family(u64 p, u64 q) {
    if (p >= q) throw std::invalid_argument("prime_power_pair_family: need p < q");
    if (p == 2 || q == 2 || !is_prime(p) || !is_prime(q))
        throw std::invalid_argument("prime_power_pair_family: p, q must be distinct odd primes");
    if ((q - 1) % p == 0) return std::nullopt;  // no weak Carmichael p^a q^b exists
    return std::make_pair(mult_order(p, q - 1), mult_order(q, p - 1));
}

std::vector<u64> wong_family(const std::vector<u64>& primes) {
    if (primes.size() < 2) throw std::invalid_argument("wong_family: need at least two primes");
    for (u64 p : primes)
        if (!is_prime(p) || p == 2)
            throw std::invalid_argument("wong_family: inputs must be distinct odd primes");
    std::vector<u64> sorted = primes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("wong_family: primes must be distinct");
    for (u64 pi : primes)
        for (u64 pj : primes)
            if (pi != pj && (pi - 1) % pj == 0)
                throw std::invalid_argument("wong_family: condition violated, " +
                                            std::to_string(pj) + " divides " +
                                            std::to_string(pi) + " - 1");
    std::vector<u64> exps;
    for (u64 pi : primes) {
        u64 e = 1;
        for (u64 pj : primes)
            if (pj != pi) e = std::lcm(e, pj - 1);  // phi(p_j) = p_j - 1
        exps.push_back(e);
    }
    return exps;
}

FamilyMember k_number_power(const Factorization& f, u64 d) {
    if (f.n <= 2 || d < 1)
        throw std::invalid_argument("k_number_power: need a K-number n > 2 and d >= 1");
    if (!is_k_number(f))
        throw std::invalid_argument("k_number_power: gcd(n, phi(n)) must be 1");
    const u64 lambda = carmichael_lambda(f);
    std::vector<PrimePower> factors = f.factors;
    for (auto& pp : factors) pp.exponent = u32(pp.exponent * d * lambda);
    return make_member(std::move(factors));
}

}  // namespace wcn
