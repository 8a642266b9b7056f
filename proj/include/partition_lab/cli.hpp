#pragma once

#include "partition_lab/closed_forms.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace plab::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

enum class Subcommand { compute, table, verify, qbinom, bench };

struct RunConfig {
    Subcommand subcommand = Subcommand::compute;
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint32_t max_n = 60;
    std::uint32_t max_k = 20;
    std::uint32_t nested_limit = 300;
    std::string method = "euler";  ///< bruteforce | euler | combinatorial | estimate
    std::string strategy = "nested";
    std::string format = "text";  ///< text | json | csv
    std::string suite = "all";
    std::string sublevels = "auto";
    std::optional<std::string> cache_path;
    std::optional<std::uint32_t> witness;
    bool check = false;
    bool parallel = false;
};

/// Result of one verification suite.
struct SuiteResult {
    std::string name;
    bool passed = true;
    bool gating = true;
    std::vector<std::string> lines;  ///< per-check detail (closed-forms prints one per class)
    std::string counterexample;      ///< first failure, when any
};

struct VerifyInputs {
    std::uint32_t max_n = 60;
    std::string suite = "all";
    /// Coefficient tables under test; replaceable for fault injection.
    std::span<const ResidueClassForm> s2 = s2_forms();
    std::span<const ResidueClassForm> s3 = s3_forms();
};

std::vector<std::string> suite_names();
std::vector<SuiteResult> run_suites(const VerifyInputs& inputs);

int run_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_table(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_verify(const VerifyInputs& inputs, std::ostream& out, std::ostream& err);
int run_qbinom(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace plab::cli
