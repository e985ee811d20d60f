#ifndef TATEZETA_VERIFY_HPP
#define TATEZETA_VERIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tatezeta/zeta_poly.hpp"

namespace tatezeta {

enum class OutputFormat { json, csv, text };

struct VerifyReport {
    int m = 0;
    int k = 0;
    int degree = 0;
    bool vacuous = false;
    bool route_agreement = false;
    bool functional_eq = false;
    bool symmetry = false;
    int sturm_real_roots = 0;
    bool distinct = false;
    bool lrh_certified = false;
    std::map<std::string, double> numeric_residuals;
    double timing_ms = 0.0;  // never serialized; outputs must be byte-stable
    std::string note;

    bool passed() const {
        if (vacuous) return note.empty();
        return route_agreement && functional_eq && symmetry && lrh_certified;
    }
};

struct RunConfig {
    int m_max = 8;
    std::optional<std::vector<int>> k_filter;
    int precision_bits = 128;
    int weil_degree_bound = 12;
    int ortho_m_max = 16;  // clamped to m_max
    int ratio_m_max = 12;  // clamped to m_max
    int ratio_random_elements = 10;
    unsigned long seed = 42;
    double ratio_tol = 1e-8;
    double ortho_tol = 1e-10;
    OutputFormat format = OutputFormat::text;
    int jobs = 1;
};

struct NamedCheck {
    std::string name;
    bool pass = false;
    double residual = 0.0;
    std::string note;
};

struct SuiteResult {
    RunConfig config;
    std::vector<VerifyReport> reports;  // sorted by (m, k)
    std::vector<NamedCheck> weil_checks;
    std::vector<NamedCheck> ortho_checks;
    std::vector<NamedCheck> ratio_checks;
    bool all_pass = false;
    int certified_count = 0;
    int vacuous_count = 0;
};

// Exact certificate for one (m, k): both construction routes, the functional
// equation and symmetry identities, then the Sturm count of the critical-line
// restriction over (-B-1, B+1). Never throws; violations come back as a
// failed report with the note filled in.
VerifyReport lrh_verify(int m, int k);

// Randomized check of the strip-shrinking statement: q is built from roots
// placed in the closed strip |Re| <= c, and every root of
// (s+a) q(s+b) - (s-a) q(s-b) must come out strictly inside. Deterministic
// under the seed. Throws PropertyViolated with the counterexample.
bool strip_shrink_property(int trials, unsigned long seed);

SuiteResult run_suite(const RunConfig& cfg);

std::string to_json(const SuiteResult& suite);
std::string to_csv(const SuiteResult& suite);
std::string to_text(const SuiteResult& suite);

// Canonical polynomial tables. JSON: array of
//   {"coeffs":[...], "degree":d, "k":k, "m":m,
//    "normalization":"primitive-positive-leading", "roots":[{"im":..,"re":"0.5"}]}
// with keys sorted and 30 fixed decimals for root ordinates; byte-stable.
std::string export_table(const std::vector<ZetaPolyRecord>& records, OutputFormat format);
void export_table_file(const std::vector<ZetaPolyRecord>& records, const std::string& path,
                       OutputFormat format);

}  // namespace tatezeta

#endif
