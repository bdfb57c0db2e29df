#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "ffa/cache.hpp"
#include "ffa/verifier.hpp"

namespace ffa {

enum class OutFormat { Json, Csv, Table };

inline OutFormat format_from_string(const std::string& s) {
    if (s == "json") return OutFormat::Json;
    if (s == "csv") return OutFormat::Csv;
    if (s == "table" || s == "text-table") return OutFormat::Table;
    throw Error("unknown format " + s);
}

inline const char* to_string(OutFormat f) {
    switch (f) {
        case OutFormat::Json: return "json";
        case OutFormat::Csv: return "csv";
        case OutFormat::Table: return "table";
    }
    return "json";
}

// ---------------------------------------------------------------------------
// report emission (deterministic bytes; every payload ends with one newline)
// ---------------------------------------------------------------------------

inline std::string emit_report(const SpectrumRecord& r, OutFormat f) {
    switch (f) {
        case OutFormat::Json: return to_json(r).dump() + "\n";
        case OutFormat::Csv: return to_csv_row(r) + "\n";
        case OutFormat::Table: return to_table(std::vector<SpectrumRecord>{r});
    }
    throw Error("emit_report: bad format");
}

inline std::string emit_report(const std::vector<SpectrumRecord>& rs, OutFormat f) {
    switch (f) {
        case OutFormat::Json: {
            json arr = json::array();
            for (const auto& r : rs) arr.push_back(to_json(r));
            return arr.dump() + "\n";
        }
        case OutFormat::Csv: {
            std::string out;
            for (const auto& r : rs) out += to_csv_row(r) + "\n";
            return out;
        }
        case OutFormat::Table: return to_table(rs);
    }
    throw Error("emit_report: bad format");
}

inline std::string emit_report(const PropositionReport& r, OutFormat f) {
    switch (f) {
        case OutFormat::Json: return to_json(r).dump() + "\n";
        case OutFormat::Csv: return to_csv_row(r) + "\n";
        case OutFormat::Table: return to_table(r);
    }
    throw Error("emit_report: bad format");
}

inline std::string emit_report(const std::vector<PropositionReport>& rs, OutFormat f) {
    switch (f) {
        case OutFormat::Json: {
            json arr = json::array();
            for (const auto& r : rs) arr.push_back(to_json(r));
            return arr.dump() + "\n";
        }
        case OutFormat::Csv: {
            std::string out;
            for (const auto& r : rs) out += to_csv_row(r) + "\n";
            return out;
        }
        case OutFormat::Table: {
            std::string out;
            for (const auto& r : rs) out += to_table(r);
            return out;
        }
    }
    throw Error("emit_report: bad format");
}

// ---------------------------------------------------------------------------
// run configuration
// ---------------------------------------------------------------------------

struct RunConfig {
    std::string command;
    int n = 0;  // tower index, or the raw degree m for field/catalog commands
    std::optional<uint64_t> modulus_override;
    CSelector c_selector;
    std::optional<std::string> output_path;
    OutFormat format = OutFormat::Json;
    unsigned threads = 0;  // 0: FFA_THREADS env or hardware count
    std::optional<bool> sampled;
    bool no_cache = false;
    std::filesystem::path cache_dir = default_cache_dir();
};

namespace detail {

inline uint64_t parse_hex(const std::string& s) {
    std::string body = s;
    if (body.rfind("0x", 0) == 0 || body.rfind("0X", 0) == 0) body = body.substr(2);
    if (body.empty() || body.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos)
        throw Error("not a hex value: " + s);
    return std::stoull(body, nullptr, 16);
}

inline void write_payload(const RunConfig& rc, const std::string& payload, std::ostream& out) {
    if (rc.output_path) {
        std::ofstream f(*rc.output_path, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError("cannot write " + *rc.output_path);
        f << payload;
    } else {
        out << payload;
    }
}

inline std::string selector_string(const CSelector& sel) {
    switch (sel.kind) {
        case CSelectorKind::AllUnitCircle: return "unit-circle";
        case CSelectorKind::Single: return to_hex(sel.c);
        case CSelectorKind::AllNonzeroNonone: return "all";
    }
    return "?";
}

// Cache-first execution: compute() yields (payload, exit code); hits replay
// the stored payload verbatim.
template <typename ComputeFn>
inline int cached_emit(const RunConfig& rc, const std::string& modulus, const std::string& d,
                       const std::string& c, const std::string& op, std::ostream& out,
                       ComputeFn&& compute) {
    const std::string key = cache_key(modulus, d, c, op);
    if (!rc.no_cache) {
        if (auto hit = Cache(rc.cache_dir).lookup(key)) {
            write_payload(rc, hit->payload, out);
            return hit->exit_code;
        }
    }
    std::pair<std::string, int> result = compute();
    if (!rc.no_cache)
        Cache(rc.cache_dir).store({key, utc_timestamp(), result.second, result.first});
    write_payload(rc, result.first, out);
    return result.second;
}

inline std::vector<uint32_t> select_cs(const VerifyCtx& ctx, const CSelector& sel) {
    std::vector<uint32_t> cs;
    switch (sel.kind) {
        case CSelectorKind::AllUnitCircle:
            for (uint32_t c : ctx.mu_q21)
                if (c != 1u) cs.push_back(c);
            break;
        case CSelectorKind::Single:
            cs.push_back(sel.c);
            break;
        case CSelectorKind::AllNonzeroNonone:
            for (uint64_t c = 2; c < ctx.F.size(); ++c) cs.push_back(static_cast<uint32_t>(c));
            break;
    }
    return cs;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// command handlers
// ---------------------------------------------------------------------------

inline int cmd_field_info(const RunConfig& rc, std::ostream& out) {
    const FieldSpec f =
        rc.modulus_override ? make_field(rc.n, *rc.modulus_override) : default_field(rc.n);
    std::string payload;
    if (rc.format == OutFormat::Json) {
        json j;
        j["degree"] = f.degree;
        j["generator"] = to_hex(f.generator);
        j["modulus"] = f.modulus_hex();
        j["order"] = f.order;
        j["order_factors"] = f.order_factors;
        payload = j.dump() + "\n";
    } else if (rc.format == OutFormat::Csv) {
        payload = f.modulus_hex() + "," + std::to_string(f.degree) + "," + to_hex(f.generator) +
                  "," + std::to_string(f.order) + "\n";
    } else {
        std::string factors;
        for (size_t i = 0; i < f.order_factors.size(); ++i)
            factors += (i ? "," : "") + std::to_string(f.order_factors[i]);
        payload = format_table({"degree", "modulus", "generator", "order", "prime factors"},
                               {{std::to_string(f.degree), f.modulus_hex(), to_hex(f.generator),
                                 std::to_string(f.order), factors}});
    }
    detail::write_payload(rc, payload, out);
    return 0;
}

inline int cmd_spectrum(const RunConfig& rc, std::optional<uint64_t> d_override, std::ostream& out,
                        std::ostream& err) {
    const VerifyCtx ctx(rc.n, rc.modulus_override);
    const uint64_t d = d_override.value_or(ctx.d);
    const std::string op = std::string("spectrum/") + to_string(rc.format);
    return detail::cached_emit(
        rc, ctx.F.modulus_hex(), std::to_string(d), detail::selector_string(rc.c_selector), op,
        out, [&]() -> std::pair<std::string, int> {
            std::optional<PowerFunction> override_fn;
            if (d_override && *d_override != ctx.d)
                override_fn = make_power_function(ctx.F, *d_override);
            const PowerFunction& use = override_fn ? *override_fn : ctx.Fd;
            if (!use.is_permutation)
                err << "warning: x^" << use.d << " is not a permutation of this field\n";
            std::vector<uint32_t> cs = detail::select_cs(ctx, rc.c_selector);
            std::vector<SpectrumRecord> records;
            records.reserve(cs.size());
            for (uint32_t c : cs) records.push_back(power_spectrum(use, c));
            std::string payload = cs.size() == 1 ? emit_report(records[0], rc.format)
                                                 : emit_report(records, rc.format);
            return {payload, 0};
        });
}

inline int cmd_verify_apcn(const RunConfig& rc, std::ostream& out) {
    const uint64_t q = 1ull << rc.n;
    const uint64_t d = q * q * q + q * q + q - 1;
    const std::string modulus = to_hex(default_modulus(4 * rc.n));
    const std::string op = std::string("verify-apcn/") + to_string(rc.format);
    return detail::cached_emit(rc, modulus, std::to_string(d), "unit-circle", op, out,
                               [&]() -> std::pair<std::string, int> {
                                   PropositionReport r = verify_apcn(rc.n, rc.threads);
                                   return {emit_report(r, rc.format), r.pass() ? 0 : 1};
                               });
}

inline int cmd_verify_prop(const RunConfig& rc, int id, bool symbolic, std::ostream& out) {
    const VerifyCtx ctx(rc.n, rc.modulus_override);
    std::optional<uint32_t> c_single;
    if (rc.c_selector.kind == CSelectorKind::Single) c_single = rc.c_selector.c;
    if (rc.c_selector.kind == CSelectorKind::AllNonzeroNonone)
        throw Error("verify prop: c-set must be the unit circle or a single c");
    std::string op = "verify-prop" + std::to_string(id);
    if (id == 5) op += symbolic ? "/symbolic" : "/exhaustive";
    const bool use_sample = rc.sampled.value_or(ctx.n >= 3);
    op += use_sample ? "/sampled" : "/full";
    op += std::string("/") + to_string(rc.format);
    return detail::cached_emit(
        rc, ctx.F.modulus_hex(), std::to_string(ctx.d), detail::selector_string(rc.c_selector),
        op, out, [&]() -> std::pair<std::string, int> {
            std::vector<PropositionReport> rs =
                run_prop(ctx, id, c_single, symbolic, use_sample, rc.threads);
            bool ok = true;
            for (const auto& r : rs) ok = ok && r.pass();
            return {emit_report(rs, rc.format), ok ? 0 : 1};
        });
}

inline int cmd_verify_congruence(const RunConfig& rc, std::ostream& out) {
    const std::string op =
        "verify-congruence/n" + std::to_string(rc.n) + "/" + to_string(rc.format);
    return detail::cached_emit(rc, "-", "-", "-", op, out,
                               [&]() -> std::pair<std::string, int> {
                                   PropositionReport r = congruence_check(rc.n);
                                   return {emit_report(r, rc.format), r.pass() ? 0 : 1};
                               });
}

inline int cmd_catalog(const RunConfig& rc, const std::string& family, std::ostream& out) {
    uint64_t d = 0;
    if (family == "inverse") {
        d = (1ull << rc.n) - 2;
    } else if (family == "paper_map") {
        if (rc.n % 4 != 0) throw BadTowerIndex("catalog: paper_map needs 4 | m");
        const uint64_t q = 1ull << (rc.n / 4);
        d = q * q * q + q * q + q - 1;
    }
    // other families fall through to catalog_scan, which rejects them
    const std::string modulus = rc.n >= 1 && rc.n <= 32 ? to_hex(default_modulus(rc.n)) : "-";
    const std::string op = "catalog/" + family + "/" + to_string(rc.format);
    return detail::cached_emit(
        rc, modulus, std::to_string(d), detail::selector_string(rc.c_selector), op, out,
        [&]() -> std::pair<std::string, int> {
            std::vector<SpectrumRecord> rs = catalog_scan(family, rc.n, rc.c_selector, rc.threads);
            return {emit_report(rs, rc.format), 0};
        });
}

// ---------------------------------------------------------------------------
// argument parsing
// ---------------------------------------------------------------------------

// args: natural order, program name excluded.  Exit codes: 0 pass,
// 1 counterexample found, 2 usage or configuration error.
inline int run_cli(std::vector<std::string> args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
    CLI::App app{"finite-field c-differential analysis toolkit"};
    app.require_subcommand(1);

    RunConfig rc;
    std::string format = "json";
    std::string modulus_hex, c_hex, c_set = "unit-circle", output, cache_dir;
    int threads = 0;
    bool sampled = false, full = false;

    auto add_common = [&](CLI::App* cmd, bool with_cache) {
        cmd->add_option("--format", format, "output format: json, csv, table")
            ->check(CLI::IsMember({"json", "csv", "table"}));
        cmd->add_option("--out", output, "write the report to this path instead of stdout");
        cmd->add_option("--threads", threads, "worker thread count (flag beats FFA_THREADS)")
            ->check(CLI::PositiveNumber);
        if (with_cache) {
            cmd->add_option("--cache-dir", cache_dir, "results cache directory");
            cmd->add_flag("--no-cache", rc.no_cache, "bypass the results cache");
        }
    };

    // field info
    CLI::App* field = app.add_subcommand("field", "field construction queries");
    field->require_subcommand(1);
    CLI::App* info = field->add_subcommand("info", "parameters of GF(2^m)");
    info->add_option("--m", rc.n, "extension degree m (1..32)")->required();
    info->add_option("--modulus", modulus_hex, "irreducible modulus, hex, overrides the default");
    add_common(info, false);

    // spectrum
    CLI::App* spectrum = app.add_subcommand("spectrum", "c-differential spectrum of x^d");
    spectrum->add_option("--n", rc.n, "tower index n; the field is GF(2^{4n})")->required();
    spectrum->add_option("--modulus", modulus_hex, "irreducible modulus, hex");
    std::string d_str;
    spectrum->add_option("--d", d_str, "exponent d (default q^3+q^2+q-1)");
    spectrum->add_option("--c", c_hex, "single c, hex");
    spectrum->add_option("--c-set", c_set, "c selection: unit-circle or all")
        ->check(CLI::IsMember({"unit-circle", "all"}));
    add_common(spectrum, true);

    // verify
    CLI::App* verify = app.add_subcommand("verify", "certification runs");
    verify->require_subcommand(1);
    CLI::App* apcn = verify->add_subcommand("apcn", "exhaustive APcN check over GF(2^{4n})");
    apcn->add_option("--n", rc.n, "tower index n (1..5)")->required();
    add_common(apcn, true);

    CLI::App* prop = verify->add_subcommand("prop", "proposition checkers");
    int prop_id = 0;
    std::string mode = "symbolic";
    prop->add_option("--id", prop_id, "proposition number 1..7")
        ->required()
        ->check(CLI::Range(1, 7));
    prop->add_option("--n", rc.n, "tower index n (1..5)")->required();
    prop->add_option("--modulus", modulus_hex, "irreducible modulus, hex");
    prop->add_option("--c", c_hex, "single c, hex (default: every c on the unit circle)");
    prop->add_option("--mode", mode, "factorization check mode (prop 5)")
        ->check(CLI::IsMember({"symbolic", "exhaustive"}));
    prop->add_flag("--sampled", sampled, "check the deterministic 4096-element b sample");
    prop->add_flag("--full", full, "force the exhaustive b domain even for n >= 3");
    add_common(prop, true);

    CLI::App* congruence = verify->add_subcommand("congruence", "gcd and exponent congruence");
    congruence->add_option("--n", rc.n, "exponent parameter n (1..16)")->required();
    add_common(congruence, true);

    // catalog
    CLI::App* catalog = app.add_subcommand("catalog", "uniformity-2 records for known families");
    std::string family;
    catalog->add_option("--family", family, "power family: inverse or paper_map")->required();
    catalog->add_option("--m", rc.n, "field degree m")->required();
    catalog->add_option("--c", c_hex, "single c, hex");
    catalog->add_option("--c-set", c_set, "c selection: unit-circle or all")
        ->check(CLI::IsMember({"unit-circle", "all"}));
    add_common(catalog, true);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        rc.format = format_from_string(format);
        rc.threads = static_cast<unsigned>(threads);
        if (!output.empty()) rc.output_path = output;
        if (!cache_dir.empty()) rc.cache_dir = cache_dir;
        if (!modulus_hex.empty()) rc.modulus_override = detail::parse_hex(modulus_hex);
        if (sampled && full) throw Error("--sampled and --full are mutually exclusive");
        if (sampled) rc.sampled = true;
        if (full) rc.sampled = false;
        if (!c_hex.empty()) {
            rc.c_selector.kind = CSelectorKind::Single;
            rc.c_selector.c = static_cast<uint32_t>(detail::parse_hex(c_hex));
        } else {
            rc.c_selector.kind = c_set == "all" ? CSelectorKind::AllNonzeroNonone
                                                : CSelectorKind::AllUnitCircle;
        }

        if (info->parsed()) {
            rc.command = "field info";
            return cmd_field_info(rc, out);
        }
        if (spectrum->parsed()) {
            rc.command = "spectrum";
            std::optional<uint64_t> d_override;
            if (!d_str.empty()) d_override = std::stoull(d_str, nullptr, 10);
            return cmd_spectrum(rc, d_override, out, err);
        }
        if (apcn->parsed()) {
            rc.command = "verify apcn";
            return cmd_verify_apcn(rc, out);
        }
        if (prop->parsed()) {
            rc.command = "verify prop";
            return cmd_verify_prop(rc, prop_id, mode == "symbolic", out);
        }
        if (congruence->parsed()) {
            rc.command = "verify congruence";
            return cmd_verify_congruence(rc, out);
        }
        if (catalog->parsed()) {
            rc.command = "catalog";
            return cmd_catalog(rc, family, out);
        }
        err << "no command selected\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ffa
