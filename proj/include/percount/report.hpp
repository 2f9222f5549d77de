#pragma once

// Command execution and deterministic rendering (table, CSV, JSON).

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "percount/config.hpp"
#include "percount/error.hpp"
#include "percount/quotcount.hpp"

namespace percount {

inline constexpr const char* kReportSchema = "percount-report/1";

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitInternal = 3;

enum class OutputFormat { Table, Csv, Json };

struct CommandOptions {
    // Unset values fall back to the config (or 1 and the default zeta order
    // for the reference example, which has no config).
    std::optional<std::size_t> nmax;
    std::optional<std::size_t> zeta_order;
    CountMode mode = CountMode::Periodic;
    bool verbose = false;
};

struct TextTable {
    std::string title;
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
};

struct Report {
    std::string command;
    nlohmann::ordered_json json;
    std::vector<TextTable> tables;
    std::vector<std::string> notes;
    int exit_code = kExitOk;
};

const std::vector<std::string>& command_names();

// Dispatches everything except paper-example.
Report run_command(const std::string& command, const SystemConfig& cfg, const CommandOptions& opts);

Report run_subgroups(const SystemConfig& cfg, const CommandOptions& opts);
Report run_counts(const SystemConfig& cfg, const CommandOptions& opts);
Report run_relations(const SystemConfig& cfg, const CommandOptions& opts);
Report run_verify(const SystemConfig& cfg, const CommandOptions& opts);
Report run_twists(const SystemConfig& cfg, const CommandOptions& opts);
Report run_zeta(const SystemConfig& cfg, const CommandOptions& opts);
// The bundled reference system over F_5 and F_7; needs no config.
Report run_reference_example(const CommandOptions& opts);

std::string render(const Report& report, OutputFormat format);
std::string render_error(const Error& error, OutputFormat format);

int exit_code_for(ErrorCode code);

// Integers above 2^53 in magnitude become decimal strings.
nlohmann::ordered_json json_integer(const mpz_class& v);
std::string rational_string(const mpq_class& v);

}  // namespace percount
