#pragma once

#include "atcert/certificate.hpp"
#include "atcert/generate.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace atcert::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_rejected = 1,  // verify rejected, or any other failure
    exit_parse = 2,
    exit_k5_minor = 3,
    exit_resource = 4,
};

struct RunConfig {
    std::string command;           // analyze | certify | verify | decompose | gen
    std::string input_path;        // graph file
    std::string certificate_path;  // verify only
    std::string output_path = "-";
    std::optional<Mode> mode;
    bool is_signed = false;
    int exact_limit = default_exact_limit;
    std::optional<std::uint64_t> seed;
    CorpusKind kind = CorpusKind::planar;
    int n = 12;
    std::optional<std::vector<int>> anchor;
};

/// Executes one command. Artifacts go to config.output_path ("-" means `out`),
/// diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace atcert::cli
