#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ffa/errors.hpp"
#include "ffa/field.hpp"

namespace ffa {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// record types
// ---------------------------------------------------------------------------

// For a fixed (d, c): the c-differential uniformity delta and the counts
// omega[i] = #{b : the c-derivative at a = 1 hits b exactly i times}.
struct SpectrumRecord {
    uint32_t c = 0;
    uint64_t d = 0;
    int delta = 0;
    std::vector<uint64_t> omega;  // indices 0..delta; delta is the last nonzero index
    std::string modulus;          // lowercase hex, e.g. "0x13"
    int degree = 0;               // recoverable from modulus: its bit length minus one
    int64_t elapsed_ms = 0;
};

inline bool operator==(const SpectrumRecord& x, const SpectrumRecord& y) {
    return x.c == y.c && x.d == y.d && x.delta == y.delta && x.omega == y.omega &&
           x.modulus == y.modulus && x.degree == y.degree && x.elapsed_ms == y.elapsed_ms;
}

enum class PropId {
    P1a,
    P1b,
    P2,
    P3,
    P4,
    P5,
    P6,
    P7,
    THM2_CONGRUENCE,
    SPECTRUM_OMEGA1,
    EQ418_SPECTRUM,
    CATALOG,
    APCN,
};

inline const char* to_string(PropId id) {
    switch (id) {
        case PropId::P1a: return "P1a";
        case PropId::P1b: return "P1b";
        case PropId::P2: return "P2";
        case PropId::P3: return "P3";
        case PropId::P4: return "P4";
        case PropId::P5: return "P5";
        case PropId::P6: return "P6";
        case PropId::P7: return "P7";
        case PropId::THM2_CONGRUENCE: return "THM2_CONGRUENCE";
        case PropId::SPECTRUM_OMEGA1: return "SPECTRUM_OMEGA1";
        case PropId::EQ418_SPECTRUM: return "EQ418_SPECTRUM";
        case PropId::CATALOG: return "CATALOG";
        case PropId::APCN: return "APCN";
    }
    throw Error("to_string: unknown PropId");
}

inline PropId prop_id_from_string(const std::string& s) {
    for (PropId id : {PropId::P1a, PropId::P1b, PropId::P2, PropId::P3, PropId::P4, PropId::P5,
                      PropId::P6, PropId::P7, PropId::THM2_CONGRUENCE, PropId::SPECTRUM_OMEGA1,
                      PropId::EQ418_SPECTRUM, PropId::CATALOG, PropId::APCN}) {
        if (s == to_string(id)) return id;
    }
    throw Error("prop_id_from_string: unknown id " + s);
}

// One certification run: either fully exhaustive (cases_checked = cases_total,
// sampled = false) or an explicitly flagged deterministic sample.  A report
// passes iff counterexamples is empty.
struct PropositionReport {
    PropId prop_id = PropId::P1a;
    int n = 0;
    std::string modulus;
    std::optional<std::string> c_hex;
    uint64_t cases_total = 0;
    uint64_t cases_checked = 0;
    bool sampled = false;
    std::vector<std::string> counterexamples;
    int64_t elapsed_ms = 0;

    bool pass() const { return counterexamples.empty(); }
};

inline bool operator==(const PropositionReport& x, const PropositionReport& y) {
    return x.prop_id == y.prop_id && x.n == y.n && x.modulus == y.modulus && x.c_hex == y.c_hex &&
           x.cases_total == y.cases_total && x.cases_checked == y.cases_checked &&
           x.sampled == y.sampled && x.counterexamples == y.counterexamples &&
           x.elapsed_ms == y.elapsed_ms;
}

// ---------------------------------------------------------------------------
// serialization (deterministic: keys sorted, counts decimal, hex lowercase)
// ---------------------------------------------------------------------------

inline json to_json(const SpectrumRecord& r) {
    json j;  // nlohmann object keys are emitted in sorted order
    j["c"] = to_hex(r.c);
    j["d"] = r.d;
    j["delta"] = r.delta;
    j["elapsed_ms"] = r.elapsed_ms;
    j["modulus"] = r.modulus;
    j["omega"] = r.omega;
    return j;
}

inline int degree_of_modulus_hex(const std::string& hex) {
    uint64_t v = std::stoull(hex, nullptr, 16);
    int deg = -1;
    while (v) {
        v >>= 1;
        ++deg;
    }
    return deg;
}

inline SpectrumRecord spectrum_record_from_json(const json& j) {
    SpectrumRecord r;
    r.c = static_cast<uint32_t>(std::stoul(j.at("c").get<std::string>(), nullptr, 16));
    r.d = j.at("d").get<uint64_t>();
    r.delta = j.at("delta").get<int>();
    r.elapsed_ms = j.at("elapsed_ms").get<int64_t>();
    r.modulus = j.at("modulus").get<std::string>();
    r.omega = j.at("omega").get<std::vector<uint64_t>>();
    r.degree = degree_of_modulus_hex(r.modulus);
    return r;
}

// CSV columns: modulus_hex, n, d, c_hex, delta, omega0, omega1, omega2, elapsed_ms.
// n = degree/4 is the tower index; 0 marks fields that are not degree-4n towers.
inline std::string to_csv_row(const SpectrumRecord& r) {
    auto om = [&r](size_t i) -> uint64_t { return i < r.omega.size() ? r.omega[i] : 0; };
    std::string row = r.modulus;
    row += "," + std::to_string(r.degree % 4 == 0 ? r.degree / 4 : 0);
    row += "," + std::to_string(r.d);
    row += "," + to_hex(r.c);
    row += "," + std::to_string(r.delta);
    for (size_t i = 0; i < 3; ++i) row += "," + std::to_string(om(i));
    row += "," + std::to_string(r.elapsed_ms);
    return row;
}

inline json to_json(const PropositionReport& r) {
    json j;
    j["cases_checked"] = r.cases_checked;
    j["cases_total"] = r.cases_total;
    if (r.c_hex) j["c_hex"] = *r.c_hex;
    j["counterexamples"] = r.counterexamples;
    j["elapsed_ms"] = r.elapsed_ms;
    j["modulus"] = r.modulus;
    j["n"] = r.n;
    j["prop_id"] = to_string(r.prop_id);
    j["sampled"] = r.sampled;
    return j;
}

inline PropositionReport proposition_report_from_json(const json& j) {
    PropositionReport r;
    r.prop_id = prop_id_from_string(j.at("prop_id").get<std::string>());
    r.n = j.at("n").get<int>();
    r.modulus = j.at("modulus").get<std::string>();
    if (j.contains("c_hex")) r.c_hex = j.at("c_hex").get<std::string>();
    r.cases_total = j.at("cases_total").get<uint64_t>();
    r.cases_checked = j.at("cases_checked").get<uint64_t>();
    r.sampled = j.at("sampled").get<bool>();
    r.counterexamples = j.at("counterexamples").get<std::vector<std::string>>();
    r.elapsed_ms = j.at("elapsed_ms").get<int64_t>();
    return r;
}

inline std::string to_csv_row(const PropositionReport& r) {
    std::string row = std::string(to_string(r.prop_id));
    row += "," + std::to_string(r.n);
    row += "," + r.modulus;
    row += "," + (r.c_hex ? *r.c_hex : std::string("-"));
    row += "," + std::to_string(r.cases_total);
    row += "," + std::to_string(r.cases_checked);
    row += r.sampled ? ",sampled" : ",exhaustive";
    row += r.pass() ? ",pass" : ",fail";
    row += "," + std::to_string(r.elapsed_ms);
    return row;
}

// ---------------------------------------------------------------------------
// text tables
// ---------------------------------------------------------------------------

inline std::string format_table(const std::vector<std::string>& header,
                                const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width(header.size());
    for (size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& row : rows)
        for (size_t i = 0; i < row.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    auto emit_row = [&width](const std::vector<std::string>& row) {
        std::string line;
        for (size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        line += "\n";
        return line;
    };
    std::string out = emit_row(header);
    for (const auto& row : rows) out += emit_row(row);
    return out;
}

inline std::string to_table(const std::vector<SpectrumRecord>& records) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(records.size());
    for (const auto& r : records) {
        std::string om;
        for (size_t i = 0; i < r.omega.size(); ++i)
            om += (i ? "," : "") + std::to_string(r.omega[i]);
        rows.push_back({r.modulus, std::to_string(r.d), to_hex(r.c), std::to_string(r.delta),
                        "(" + om + ")", std::to_string(r.elapsed_ms)});
    }
    return format_table({"modulus", "d", "c", "delta", "omega", "ms"}, rows);
}

inline std::string to_table(const PropositionReport& r) {
    return format_table(
        {"prop", "n", "modulus", "c", "total", "checked", "mode", "result", "ms"},
        {{to_string(r.prop_id), std::to_string(r.n), r.modulus, r.c_hex ? *r.c_hex : "-",
          std::to_string(r.cases_total), std::to_string(r.cases_checked),
          r.sampled ? "sampled" : "exhaustive", r.pass() ? "pass" : "fail",
          std::to_string(r.elapsed_ms)}});
}

}  // namespace ffa
