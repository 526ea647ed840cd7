// covsys command-line front end. Talks to the core exclusively through the
// C API in covsys.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "covsys.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;

int exitCodeFor(covsys_status status) {
    switch (status) {
        case COVSYS_OK:
            return kExitOk;
        case COVSYS_ERR_CAP_EXCEEDED:
        case COVSYS_ERR_OVERFLOW:
            return kExitResource;
        default:
            return kExitParse;
    }
}

int reportFailure(covsys_status status) {
    std::cerr << "error: " << covsys_last_error() << "\n";
    return exitCodeFor(status);
}

struct SystemHandle {
    covsys_system* sys = nullptr;
    ~SystemHandle() { covsys_system_free(sys); }
};

struct FieldHandle {
    covsys_field* field = nullptr;
    ~FieldHandle() { covsys_field_free(field); }
};

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { covsys_string_free(s); }
};

int loadSystem(const std::string& path, SystemHandle& handle) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return kExitParse;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    covsys_status status = covsys_system_parse(text.c_str(), &handle.sys);
    if (status != COVSYS_OK) return reportFailure(status);
    return kExitOk;
}

int cmdVerify(const std::string& path, std::size_t cap) {
    SystemHandle handle;
    if (int rc = loadSystem(path, handle)) return rc;
    int kind = 0;
    OwnedString report;
    covsys_status status = covsys_system_verify_report(handle.sys, cap, &kind, &report.s);
    if (status != COVSYS_OK) return reportFailure(status);
    std::cout << report.s;
    return kind == COVSYS_VERDICT_EXACT ? kExitOk : kExitNegative;
}

int cmdAnalyze(const std::string& path, std::size_t cap, bool asJson) {
    SystemHandle handle;
    if (int rc = loadSystem(path, handle)) return rc;
    int kind = 0;
    OwnedString verdict;
    covsys_status status = covsys_system_verify_report(handle.sys, cap, &kind, &verdict.s);
    if (status != COVSYS_OK) return reportFailure(status);
    if (kind != COVSYS_VERDICT_EXACT) {
        std::cout << verdict.s;
        return kExitNegative;
    }
    OwnedString report;
    status = covsys_system_analyze(handle.sys, cap, asJson ? 1 : 0, &report.s);
    if (status != COVSYS_OK) return reportFailure(status);
    std::cout << report.s;
    return kExitOk;
}

int cmdMap(const std::string& path, std::size_t cap) {
    SystemHandle handle;
    if (int rc = loadSystem(path, handle)) return rc;
    OwnedString dump;
    covsys_status status = covsys_system_map_dump(handle.sys, cap, &dump.s);
    if (status != COVSYS_OK) return reportFailure(status);
    std::cout << dump.s;
    return kExitOk;
}

int cmdConstruct(const std::string& fieldType, std::int64_t d, std::uint64_t seed, unsigned steps,
                 const std::vector<std::int64_t>& primes, std::size_t cap) {
    FieldHandle field;
    covsys_status status = fieldType == "rationals" ? covsys_field_rationals(&field.field)
                                                    : covsys_field_quadratic(d, &field.field);
    if (status != COVSYS_OK) return reportFailure(status);
    int capped = 0;
    OwnedString out;
    status = covsys_construct_random(field.field, seed, steps, primes.data(), primes.size(), cap,
                                     &capped, &out.s);
    if (status != COVSYS_OK) return reportFailure(status);
    std::cout << out.s;
    if (capped) std::cerr << "note: generation stopped early at the residue cap\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact covering systems over rings of integers"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::size_t cap = 100000;
    app.add_option("--cap", cap, "max residues enumerated per modulus")->capture_default_str();

    std::string path;
    bool asJson = false;

    auto* verify = app.add_subcommand("verify", "check a system for exactness");
    verify->add_option("input", path, "system JSON file")->required();

    auto* analyzeCmd = app.add_subcommand("analyze", "repetition-bound report for an exact system");
    analyzeCmd->add_option("input", path, "system JSON file")->required();
    analyzeCmd->add_flag("--json", asJson, "emit the JSON report");

    auto* mapCmd = app.add_subcommand("map", "dump digit-map images and cell patterns");
    mapCmd->add_option("input", path, "system JSON file")->required();

    std::string fieldType = "rationals";
    std::int64_t d = -1;
    std::uint64_t seed = 0;
    unsigned steps = 3;
    std::vector<std::int64_t> primes{2, 3};
    auto* construct = app.add_subcommand("construct", "generate a random exact system");
    construct->add_option("--field", fieldType, "rationals or quadratic")
        ->check(CLI::IsMember({"rationals", "quadratic"}))
        ->capture_default_str();
    construct->add_option("-d,--d", d, "squarefree parameter of the quadratic field")
        ->capture_default_str();
    construct->add_option("--seed", seed, "generation seed")->capture_default_str();
    construct->add_option("--steps", steps, "number of class splits")->capture_default_str();
    construct->add_option("--primes", primes, "rational primes for the split pool")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }

    if (verify->parsed()) return cmdVerify(path, cap);
    if (analyzeCmd->parsed()) return cmdAnalyze(path, cap, asJson);
    if (mapCmd->parsed()) return cmdMap(path, cap);
    if (construct->parsed()) return cmdConstruct(fieldType, d, seed, steps, primes, cap);
    return kExitParse;
}
