#include "wcn/format.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wcn {

std::string factorization_string(const std::vector<PrimePower>& factors, const std::string& sep) {
    if (factors.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(factors[i].prime);
        if (factors[i].exponent > 1) out += "^" + std::to_string(factors[i].exponent);
    }
    return out;
}

std::string factorization_string(const Factorization& f, const std::string& sep) {
    return factorization_string(f.factors, sep);
}

Factorization parse_factorization(const std::string& s) {
    Factorization f;
    f.n = 1;
    if (s == "1") return f;
    std::string norm = s;
    // middle dot U+00B7 is 0xC2 0xB7; normalize both separators to '*'
    std::string dot = "·";
    for (std::size_t pos = 0; (pos = norm.find(dot, pos)) != std::string::npos;)
        norm.replace(pos, dot.size(), "*");
    std::stringstream ss(norm);
    std::string part;
    u64 prev = 0;
    while (std::getline(ss, part, '*')) {
        const auto caret = part.find('^');
        const u64 p = std::stoull(part.substr(0, caret));
        const u32 e = caret == std::string::npos ? 1 : u32(std::stoul(part.substr(caret + 1)));
        if (p <= prev || e == 0 || !is_prime(p))
            throw std::invalid_argument("parse_factorization: not canonical: " + s);
        for (u32 i = 0; i < e; ++i) f.n *= p;
        f.factors.push_back({p, e});
        prev = p;
    }
    if (f.factors.empty()) throw std::invalid_argument("parse_factorization: empty: " + s);
    return f;
}

std::vector<std::string> class_tags(const NumberProfile& p) {
    std::vector<std::string> tags;
    if (p.is_prime) return tags;  // classes live on composites; primes carry no tags
    if (p.is_prime_power && p.n % 2 == 1) tags.push_back("prime-power");
    if (p.is_weak_carmichael) tags.push_back("weak-carmichael");
    if (p.is_carmichael) tags.push_back("carmichael");
    if (p.is_k_number) tags.push_back("k-number");
    if (p.giuga) tags.push_back("giuga");
    if (p.weak_giuga) tags.push_back("weak-giuga");
    if (p.lehmer_index) tags.push_back("k-lehmer(" + std::to_string(*p.lehmer_index) + ")");
    if (p.almost_order) tags.push_back("almost-carmichael(" + std::to_string(*p.almost_order) + ")");
    return tags;
}

OutputRecord to_record(const NumberProfile& p) {
    OutputRecord r;
    r.n = std::to_string(p.n);
    r.factorization = factorization_string(p.factorization);
    r.flags = class_tags(p);
    r.liar_count = std::to_string(p.liar_count);
    r.liar_fraction = p.liar_fraction.str();
    r.cw = std::to_string(p.cw);
    r.lambda = std::to_string(p.lambda);
    return r;
}

std::string to_json(const OutputRecord& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["factorization"] = r.factorization;
    j["flags"] = r.flags;
    j["F"] = r.liar_count;
    j["f"] = r.liar_fraction;
    j["c_w"] = r.cw;
    j["lambda"] = r.lambda;
    return j.dump();
}

OutputRecord record_from_json(const std::string& line) {
    const auto j = nlohmann::json::parse(line);
    OutputRecord r;
    r.n = j.at("n").get<std::string>();
    r.factorization = j.at("factorization").get<std::string>();
    r.flags = j.at("flags").get<std::vector<std::string>>();
    r.liar_count = j.at("F").get<std::string>();
    r.liar_fraction = j.at("f").get<std::string>();
    r.cw = j.at("c_w").get<std::string>();
    r.lambda = j.at("lambda").get<std::string>();
    return r;
}

namespace {

std::string join(const std::vector<std::string>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep)) out.push_back(part);
    return out;
}

}  // namespace

std::string to_tsv(const OutputRecord& r) {
    // '*' separator instead of the middle dot keeps TSV ASCII-clean
    Factorization f = parse_factorization(r.factorization);
    return r.n + "\t" + factorization_string(f, "*") + "\t" + join(r.flags, ',') + "\t" +
           r.liar_count + "\t" + r.liar_fraction + "\t" + r.cw + "\t" + r.lambda;
}

OutputRecord record_from_tsv(const std::string& line) {
    const auto cols = split(line, '\t');
    if (cols.size() != 7) throw std::invalid_argument("record_from_tsv: expected 7 columns");
    OutputRecord r;
    r.n = cols[0];
    r.factorization = factorization_string(parse_factorization(cols[1]));
    if (!cols[2].empty()) r.flags = split(cols[2], ',');
    r.liar_count = cols[3];
    r.liar_fraction = cols[4];
    r.cw = cols[5];
    r.lambda = cols[6];
    return r;
}

}  // namespace wcn
