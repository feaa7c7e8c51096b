#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wcn/arith.hpp"

namespace wcn {

enum class NumberClass { weak, carmichael, giuga, weak_giuga, k_number, super_carmichael, prime_power };

const char* to_string(NumberClass c);
std::optional<NumberClass> number_class_from_string(const std::string& s);

/// Range scan over [lo, hi). Workers split the range into segments; output is
/// deterministic (segment order) regardless of the worker count.
struct ScanConfig {
    u64 lo = 1;
    u64 hi = 0;
    NumberClass cls = NumberClass::weak;
    bool exclude_prime_powers = false;
    std::optional<u32> factor_count;                     // exact number of distinct primes
    std::optional<std::pair<u64, u64>> max_prime_window; // largest prime factor in [c, d)
    u64 segment_size = u64(1) << 20;
    unsigned jobs = 0;                                   // 0 = hardware concurrency
};

struct ScanHit {
    u64 n = 0;
    Factorization factorization;
};

/// Stream all members in ascending order.
void scan(const ScanConfig& cfg, const std::function<void(const ScanHit&)>& emit);
/// Convenience wrapper collecting the hits.
std::vector<ScanHit> scan(const ScanConfig& cfg);

/// Number of odd prime powers p^e with e >= 2 in [lo, hi).
u64 prime_power_count(u64 lo, u64 hi, unsigned jobs = 0);

/// Consecutive Carmichael numbers in [lo, hi) with no non-prime-power weak
/// Carmichael number strictly between them, ordered by the first member.
std::vector<std::pair<u64, u64>> twin_carmichael_pairs(u64 lo, u64 hi, unsigned jobs = 0);

enum class TableSchema { table1_summary, table3, table4, table5 };

struct ExtremalWitness {
    std::string which;  // which tally the witness belongs to
    u64 p_max = 0;      // largest prime over the class members
    u64 witness = 0;    // smallest member divisible by p_max
};

struct CountRow {
    std::string label;
    std::vector<std::pair<std::string, u64>> tallies;
    std::vector<ExtremalWitness> extremals;

    std::optional<u64> tally(const std::string& name) const;
};

/// Rows of the requested table schema for counts up to `bound`.
/// table3/table4/table5 accept only their published thresholds.
std::vector<CountRow> count_table(u64 bound, TableSchema schema, unsigned jobs = 0);

}  // namespace wcn
