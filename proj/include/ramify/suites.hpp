#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ramify/dvr.hpp"
#include "ramify/eisenstein.hpp"
#include "ramify/group_traces.hpp"

namespace ramify {

using Json = nlohmann::ordered_json;

/// An Eisenstein polynomial over F_q[[t]] or Z_p, with its default precision.
struct FamilyMember {
    std::string polynomial;
    bool mixed = false;
    std::uint32_t q = 0;
    int precision = 8;

    DVRSpec spec(int precision) const;
    EisensteinExtension extension() const { return extension(precision); }
    EisensteinExtension extension(int precision) const;
    std::string label() const;
};

/// Tame x^e - t for e = 2..6 and the wild quadratic extensions; all Galois.
const std::vector<FamilyMember>& galois_family();

struct CaseResult {
    std::string id;
    bool pass = false;
    Json detail;
};

struct SuiteConfig {
    std::uint64_t seed = 7;
    /// Number of random cases for randomized suites; 0 selects the default.
    int cases = 0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;
    int passed() const;
    int failed() const;
    bool ok() const { return failed() == 0 && !cases.empty(); }
    Json to_json() const;
};

using CaseFn = std::function<CaseResult()>;

/// Runs the cases across OpenMP threads, or serially, and sorts the results by id.
/// A case that throws is recorded as a failure carrying the error.
std::vector<CaseResult> run_cases(const std::vector<CaseFn>& cases, bool parallel);

const std::vector<std::string>& suite_names();
/// Case list of a named suite; raises InvalidArgument for an unknown name.
std::vector<CaseFn> suite_cases(const std::string& name, const SuiteConfig& config);
SuiteReport run_suite(const std::string& name, const SuiteConfig& config, bool parallel = true);

std::string rational_json_string(const Rational& r);
Json rational_json(const Rational& r);
/// {"class_rep": coefficient, ..., "reduced": bool}.
Json hh0_json(const HH0Class& c);

}  // namespace ramify
