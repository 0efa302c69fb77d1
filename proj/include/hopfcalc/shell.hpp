#pragma once

#include "hopfcalc/check.hpp"
#include "hopfcalc/scalar.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace hopfcalc {

inline constexpr const char* kReportSchema = "hopfcalc.report/1";
inline constexpr const char* kToolVersion = "0.1.0";

struct RunOptions {
    /// validate | universal | woronowicz | quantum-lie | characters | vfields |
    /// coderivations | bracket | verify
    std::string command;
    /// Positional arguments after the input file (bracket takes two references).
    std::vector<std::string> args;
    std::optional<std::string> ideal;
    std::string suite = "all";
    std::uint64_t seed = 0;
    /// "gf:<p>"; parsed by the runner so a bad value is an input error.
    std::optional<std::string> field_override;
};

using ResultValue = std::variant<bool, std::int64_t, std::string, std::vector<std::string>>;

struct ReportError {
    std::string message;
    /// 0 when the error has no source position.
    std::size_t line = 0;
    std::size_t column = 0;
};

/// Outcome of one command. Everything except elapsed_ms is a function of the
/// input text and the options.
struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> args;
    std::string digest;
    std::string field;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, ResultValue>> result;
    CheckList checks;
    std::optional<ReportError> error;
    int exit_code = 0;
    double elapsed_ms = 0;

    std::size_t count(CheckStatus status) const;
};

/// 0: every executed check passed; 1: a check failed (or the command's own
/// condition failed); 2: malformed input or arguments.
RunReport run_command(std::string_view hadf_text, const RunOptions& options);

std::string render_text(const RunReport& report);
/// Single JSON document with fixed key order and no timing.
std::string render_json(const RunReport& report);

/// FNV-1a 64 of the bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// "gf:<p>". Throws std::invalid_argument.
Field parse_field_override(std::string_view text);

}  // namespace hopfcalc
