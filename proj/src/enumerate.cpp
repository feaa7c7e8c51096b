#include "wcn/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>

#include "wcn/classify.hpp"

namespace wcn {

namespace {

constexpr u64 kScanLimit = u64(1'000'000) * u64(1'000'000);  // sieve primes cover sqrt of this

using u8 = std::uint8_t;

bool odd_only_class(NumberClass c) {
    return c == NumberClass::weak || c == NumberClass::carmichael ||
           c == NumberClass::super_carmichael || c == NumberClass::prime_power;
}

struct SegmentState {
    std::vector<u64> rem;
    std::vector<u8> alive;
    std::vector<u8> distinct;
    std::vector<u8> nonsq;
};

// Core per-segment pass: divide out every sieve prime, updating the class
// predicate incrementally, then finish with the leftover prime.
void process_segment(u64 lo, u64 hi, const ScanConfig& cfg, SegmentState& st,
                     std::vector<ScanHit>& out) {
    const std::size_t len = hi - lo;
    const NumberClass cls = cfg.cls;
    const bool odd_only = odd_only_class(cls);

    st.rem.assign(len, 0);
    st.alive.assign(len, 0);
    st.distinct.assign(len, 0);
    st.nonsq.assign(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
        const u64 n = lo + i;
        st.rem[i] = n;
        st.alive[i] = n >= 2 && (!odd_only || (n & 1));
    }

    auto update = [&](std::size_t i, u64 n, u64 p, u32 e) {
        switch (cls) {
            case NumberClass::weak:
            case NumberClass::carmichael:
            case NumberClass::super_carmichael:
                if ((n - 1) % (p - 1) != 0) st.alive[i] = 0;
                break;
            case NumberClass::prime_power:
                if (st.distinct[i] > 1) st.alive[i] = 0;
                break;
            case NumberClass::k_number:
                if (e > 1 || std::gcd(n, p - 1) != 1) st.alive[i] = 0;
                break;
            case NumberClass::giuga:
                if (e > 1 || (n / p - 1) % p != 0) st.alive[i] = 0;
                break;
            case NumberClass::weak_giuga:
                if ((n - p) % (p * p) != 0) st.alive[i] = 0;
                break;
        }
    };

    for (u32 p : small_primes()) {
        if (u64(p) * p >= hi) break;
        if (odd_only && p == 2) continue;
        u64 start = (lo + p - 1) / p * p;
        if (start < p) start = p;
        u64 step = p;
        if (odd_only) {
            if (start % 2 == 0) start += p;
            step = 2 * u64(p);
        }
        for (u64 m = start; m < hi; m += step) {
            const std::size_t i = m - lo;
            u64 r = st.rem[i];
            u32 e = 0;
            while (r % p == 0) {
                r /= p;
                ++e;
            }
            st.rem[i] = r;
            st.distinct[i]++;
            if (e > 1) st.nonsq[i] = 1;
            if (st.alive[i]) update(i, m, p, e);
        }
    }

    for (std::size_t i = 0; i < len; ++i) {
        if (!st.alive[i]) continue;
        const u64 n = lo + i;
        if (st.rem[i] > 1) {
            st.distinct[i]++;
            update(i, n, st.rem[i], 1);
            if (!st.alive[i]) continue;
        }
        const bool prime = st.distinct[i] == 1 && !st.nonsq[i];
        bool member = false;
        switch (cls) {
            case NumberClass::weak:
                member = !prime;
                break;
            case NumberClass::carmichael:
                member = !prime && !st.nonsq[i];
                break;
            case NumberClass::super_carmichael:
                member = !prime;  // super filter applied below on the factorization
                break;
            case NumberClass::prime_power:
                member = st.distinct[i] == 1 && st.nonsq[i];
                break;
            case NumberClass::k_number:
                member = true;
                break;
            case NumberClass::giuga:
            case NumberClass::weak_giuga:
                member = !prime;
                break;
        }
        if (!member) continue;
        if (cfg.exclude_prime_powers && st.distinct[i] == 1 && st.nonsq[i]) continue;
        if (cfg.factor_count && st.distinct[i] != *cfg.factor_count) continue;
        ScanHit hit{n, factorize(n)};
        if (cfg.max_prime_window) {
            const u64 lp = hit.factorization.largest_prime();
            if (lp < cfg.max_prime_window->first || lp >= cfg.max_prime_window->second) continue;
        }
        if (cls == NumberClass::super_carmichael && !is_super_carmichael(hit.factorization))
            continue;
        out.push_back(std::move(hit));
    }
}

}  // namespace

const char* to_string(NumberClass c) {
    switch (c) {
        case NumberClass::weak: return "weak";
        case NumberClass::carmichael: return "carmichael";
        case NumberClass::giuga: return "giuga";
        case NumberClass::weak_giuga: return "weak-giuga";
        case NumberClass::k_number: return "k-number";
        case NumberClass::super_carmichael: return "super";
        case NumberClass::prime_power: return "prime-power";
    }
    return "?";
}

std::optional<NumberClass> number_class_from_string(const std::string& s) {
    std::string t = s;
    std::replace(t.begin(), t.end(), '_', '-');
    if (t == "weak") return NumberClass::weak;
    if (t == "carmichael") return NumberClass::carmichael;
    if (t == "giuga") return NumberClass::giuga;
    if (t == "weak-giuga") return NumberClass::weak_giuga;
    if (t == "k-number") return NumberClass::k_number;
    if (t == "super" || t == "super-carmichael") return NumberClass::super_carmichael;
    if (t == "prime-power") return NumberClass::prime_power;
    return std::nullopt;
}

void scan(const ScanConfig& cfg, const std::function<void(const ScanHit&)>& emit) {
    if (cfg.lo < 1 || cfg.hi <= cfg.lo) throw std::invalid_argument("scan: need 1 <= lo < hi");
    if (cfg.hi > kScanLimit) throw std::invalid_argument("scan: range exceeds supported bound 1e12");
    if (cfg.segment_size < 2) throw std::invalid_argument("scan: segment_size must be >= 2");
    if (cfg.cls == NumberClass::super_carmichael && cfg.hi > kSuperCap)
        throw std::invalid_argument("scan: super-carmichael scans are capped at 2^31");

    unsigned jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
    const u64 nseg = (cfg.hi - cfg.lo + cfg.segment_size - 1) / cfg.segment_size;
    jobs = unsigned(std::min<u64>(jobs, nseg));

    // waves of `jobs` segments: parallel compute, then in-order emission
    std::vector<std::vector<ScanHit>> results(jobs);
    for (u64 wave = 0; wave < nseg; wave += jobs) {
        const unsigned count = unsigned(std::min<u64>(jobs, nseg - wave));
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < count; ++t) {
            results[t].clear();
            threads.emplace_back([&, t] {
                const u64 slo = cfg.lo + (wave + t) * cfg.segment_size;
                const u64 shi = std::min(cfg.hi, slo + cfg.segment_size);
                SegmentState st;
                process_segment(slo, shi, cfg, st, results[t]);
            });
        }
        for (auto& th : threads) th.join();
        for (unsigned t = 0; t < count; ++t)
            for (const ScanHit& h : results[t]) emit(h);
    }
}

std::vector<ScanHit> scan(const ScanConfig& cfg) {
    std::vector<ScanHit> out;
    scan(cfg, [&](const ScanHit& h) { out.push_back(h); });
    return out;
}

u64 prime_power_count(u64 lo, u64 hi, unsigned) {
    if (hi <= lo) return 0;
    if (hi > kScanLimit) throw std::invalid_argument("prime_power_count: bound exceeds 1e12");
    u64 count = 0;
    for (u32 p : small_primes()) {
        if (p == 2) continue;
        const u128 sq = u128(p) * p;
        if (sq >= hi) break;
        u128 pw = sq;
        while (pw < hi) {
            if (pw >= lo) ++count;
            pw *= p;
        }
    }
    return count;
}

std::vector<std::pair<u64, u64>> twin_carmichael_pairs(u64 lo, u64 hi, unsigned jobs) {
    ScanConfig cfg;
    cfg.lo = std::max<u64>(lo, 1);
    cfg.hi = hi;
    cfg.cls = NumberClass::weak;
    cfg.exclude_prime_powers = true;
    cfg.jobs = jobs;
    std::vector<std::pair<u64, u64>> pairs;
    // members arrive ordered; a twin pair is two adjacent non-prime-power WCNs
    // that are both Carmichael
    u64 prev = 0;
    bool prev_cn = false;
    scan(cfg, [&](const ScanHit& h) {
        const bool cn = h.factorization.squarefree();
        if (prev_cn && cn) pairs.emplace_back(prev, h.n);
        prev = h.n;
        prev_cn = cn;
    });
    return pairs;
}

std::optional<u64> CountRow::tally(const std::string& name) const {
    for (const auto& [k, v] : tallies)
        if (k == name) return v;
    return std::nullopt;
}

namespace {

const std::vector<u64>& table45_thresholds() {
    static const std::vector<u64> t{1000,       10'000,     100'000,    1'000'000,
                                    2'000'000,  10'000'000, 100'000'000};
    return t;
}

std::vector<u64> thresholds_upto(u64 bound) {
    std::vector<u64> out;
    for (u64 t : table45_thresholds())
        if (t <= bound) out.push_back(t);
    return out;
}

void require_threshold(u64 bound, std::initializer_list<u64> allowed, const char* schema) {
    if (std::find(allowed.begin(), allowed.end(), bound) == allowed.end())
        throw std::invalid_argument(std::string(schema) +
                                    ": unsupported bound (see documented thresholds)");
}

struct WcnRecord {
    u64 n;
    u64 largest_prime;
    u32 distinct;
    bool carmichael;
    bool prime_power;
};

std::vector<WcnRecord> collect_wcn(u64 bound, unsigned jobs) {
    ScanConfig cfg;
    cfg.lo = 1;
    cfg.hi = bound;
    cfg.cls = NumberClass::weak;
    cfg.jobs = jobs;
    std::vector<WcnRecord> recs;
    scan(cfg, [&](const ScanHit& h) {
        recs.push_back({h.n, h.factorization.largest_prime(), u32(h.factorization.distinct_primes()),
                        h.factorization.squarefree(),
                        h.factorization.distinct_primes() == 1});
    });
    return recs;
}

// smallest member divisible by the largest prime appearing in the bucket
std::optional<ExtremalWitness> extremal_of(const std::vector<const WcnRecord*>& bucket,
                                           const std::string& which) {
    if (bucket.empty()) return std::nullopt;
    u64 pmax = 0;
    for (const auto* r : bucket) pmax = std::max(pmax, r->largest_prime);
    u64 witness = 0;
    for (const auto* r : bucket)
        if (r->largest_prime == pmax) {
            witness = r->n;
            break;  // records are ordered by n
        }
    return ExtremalWitness{which, pmax, witness};
}

std::vector<CountRow> table1_summary(u64 bound, unsigned jobs) {
    const auto recs = collect_wcn(bound, jobs);
    u64 cn = 0, pp = 0;
    for (const auto& r : recs) {
        cn += r.carmichael;
        pp += r.prime_power;
    }
    CountRow row;
    row.label = "[1," + std::to_string(bound) + ")";
    row.tallies = {{"weak", recs.size()},
                   {"carmichael", cn},
                   {"odd-prime-powers", pp},
                   {"other", recs.size() - cn - pp}};
    return {row};
}

std::vector<CountRow> table3(u64 bound, unsigned jobs) {
    require_threshold(bound, {1'000'000, 2'000'000, 10'000'000, 100'000'000}, "table3");
    const auto recs = collect_wcn(bound, jobs);

    struct Block {
        u64 a, b;
        std::vector<std::pair<u64, u64>> windows;  // [c, d) on the largest prime
    };
    std::vector<Block> blocks;
    blocks.push_back({1, 1'000'000, {{1, 1'000'000}}});
    if (bound >= 2'000'000) blocks.push_back({1'000'000, 2'000'000, {{1, 2'000'000}}});
    if (bound >= 10'000'000)
        blocks.push_back({2'000'000, 10'000'000, {{1, 1000}, {1000, 10'000}, {10'000, 10'000'000}}});
    if (bound >= 100'000'000)
        blocks.push_back(
            {10'000'000, 100'000'000, {{1, 1000}, {1000, 10'000}, {10'000, 100'000'000}}});

    std::vector<CountRow> rows;
    u64 grand_w2 = 0, grand_p = 0, grand_c = 0;
    for (const Block& blk : blocks) {
        u64 block_w2 = 0;
        for (const auto& [c, d] : blk.windows) {
            std::vector<const WcnRecord*> bucket;
            for (const auto& r : recs)
                if (r.n >= blk.a && r.n < blk.b && r.distinct == 2 && r.largest_prime >= c &&
                    r.largest_prime < d)
                    bucket.push_back(&r);
            CountRow row;
            row.label = "(" + std::to_string(blk.a) + "," + std::to_string(blk.b) + ";" +
                        std::to_string(c) + "," + std::to_string(d) + ")";
            row.tallies = {{"W_2", bucket.size()}};
            if (auto w = extremal_of(bucket, "W_2")) row.extremals.push_back(*w);
            block_w2 += bucket.size();
            rows.push_back(std::move(row));
        }
        const u64 P = prime_power_count(blk.a, blk.b);
        u64 C = 0;
        for (const auto& r : recs)
            if (r.n >= blk.a && r.n < blk.b && r.carmichael) ++C;
        CountRow total;
        total.label = "total(" + std::to_string(blk.a) + "," + std::to_string(blk.b) + ")";
        total.tallies = {{"W_2", block_w2}, {"P", P}, {"C", C}};
        rows.push_back(std::move(total));
        grand_w2 += block_w2;
        grand_p += P;
        grand_c += C;
    }
    CountRow grand;
    grand.label = "total";
    grand.tallies = {{"W_2", grand_w2}, {"P", grand_p}, {"C", grand_c}};
    rows.push_back(std::move(grand));
    return rows;
}

std::vector<CountRow> table4(u64 bound, unsigned jobs) {
    require_threshold(bound, {1000, 10'000, 100'000, 1'000'000, 2'000'000}, "table4");
    const auto recs = collect_wcn(bound, jobs);
    const auto bounds = thresholds_upto(bound);

    auto count = [&](u64 b, auto&& pred) {
        u64 c = 0;
        for (const auto& r : recs)
            if (r.n < b && pred(r)) ++c;
        return c;
    };

    std::vector<CountRow> rows;
    for (u32 k = 2; k <= 5; ++k) {
        for (u64 b : bounds) {
            // the published table starts each k at the first threshold where the
            // class can be populated
            if (k >= 4 && b == 1000) continue;
            if (k == 5 && b == 10'000) continue;
            CountRow row;
            row.label = "(" + std::to_string(b) + "," + std::to_string(k) + ")";
            const u64 wk = count(b, [&](const WcnRecord& r) {
                return !r.prime_power && !r.carmichael && r.distinct == k;
            });
            const u64 wtot =
                count(b, [&](const WcnRecord& r) { return !r.prime_power && !r.carmichael; });
            if (k == 2) {
                row.tallies = {{"C", count(b, [](const WcnRecord& r) { return r.carmichael; })},
                               {"W_k'", wk},
                               {"W'", wtot}};
            } else {
                row.tallies = {
                    {"C_k", count(b, [&](const WcnRecord& r) { return r.carmichael && r.distinct == k; })},
                    {"W_k'", wk}};
            }
            rows.push_back(std::move(row));
        }
    }
    CountRow total;
    total.label = "total";
    total.tallies = {{"C", count(bound, [](const WcnRecord& r) { return r.carmichael; })},
                     {"W'", count(bound, [](const WcnRecord& r) {
                          return !r.prime_power && !r.carmichael;
                      })}};
    rows.push_back(std::move(total));
    return rows;
}

std::vector<CountRow> table5(u64 bound, unsigned jobs) {
    require_threshold(bound, {1000, 10'000, 100'000, 1'000'000, 2'000'000, 10'000'000, 100'000'000},
                      "table5");
    const auto recs = collect_wcn(bound, jobs);
    std::vector<CountRow> rows;
    for (u64 b : thresholds_upto(bound)) {
        std::vector<const WcnRecord*> c3, w3;
        for (const auto& r : recs) {
            if (r.n >= b || r.distinct != 3) continue;
            if (r.carmichael)
                c3.push_back(&r);
            else if (!r.prime_power)
                w3.push_back(&r);
        }
        CountRow row;
        row.label = std::to_string(b);
        row.tallies = {{"C_3", c3.size()}, {"W_3'", w3.size()}};
        if (auto w = extremal_of(w3, "W_3'")) row.extremals.push_back(*w);
        if (auto w = extremal_of(c3, "C_3")) row.extremals.push_back(*w);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::vector<CountRow> count_table(u64 bound, TableSchema schema, unsigned jobs) {
    switch (schema) {
        case TableSchema::table1_summary: return table1_summary(bound, jobs);
        case TableSchema::table3: return table3(bound, jobs);
        case TableSchema::table4: return table4(bound, jobs);
        case TableSchema::table5: return table5(bound, jobs);
    }
    throw std::invalid_argument("count_table: unknown schema");
}

}  // namespace wcn
