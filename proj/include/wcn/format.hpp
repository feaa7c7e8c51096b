#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wcn/classify.hpp"

namespace wcn {

/// Canonical factorization string "p^e·p^e·..." (exponent omitted when 1).
/// `sep` defaults to the middle dot; TSV output swaps in '*' for portability.
std::string factorization_string(const Factorization& f, const std::string& sep = "·");
std::string factorization_string(const std::vector<PrimePower>& factors,
                                 const std::string& sep = "·");

/// Parse a factorization string back (accepts both separators). Throws when the
/// string does not reparse to a canonical factorization.
Factorization parse_factorization(const std::string& s);

/// Flat presentation record for CLI and file output.
struct OutputRecord {
    std::string n;                    // decimal
    std::string factorization;       // canonical "p^e·..." form
    std::vector<std::string> flags;  // class tags
    std::string liar_count;          // F
    std::string liar_fraction;       // f as "num/den"
    std::string cw;
    std::string lambda;
};

OutputRecord to_record(const NumberProfile& p);
std::vector<std::string> class_tags(const NumberProfile& p);

std::string to_json(const OutputRecord& r);
std::string to_tsv(const OutputRecord& r);
OutputRecord record_from_json(const std::string& line);
OutputRecord record_from_tsv(const std::string& line);

}  // namespace wcn
