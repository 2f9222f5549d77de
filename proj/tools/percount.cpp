#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "percount/config.hpp"
#include "percount/report.hpp"

namespace {

struct Args {
    std::string config_pos;
    std::string config_opt;
    std::size_t nmax = 0;
    std::size_t zeta_order = 0;
    std::uint64_t field_cap = 0;
    std::string format = "table";
    std::string mode = "periodic";
    bool verbose = false;
};

void add_common(CLI::App* cmd, Args& a, bool needs_config) {
    if (needs_config) {
        cmd->add_option("config-file", a.config_pos, "system config file (positional)");
        cmd->add_option("--config", a.config_opt, "system config file");
    }
    cmd->add_option("--nmax", a.nmax, "largest extension degree n")->check(CLI::PositiveNumber);
    cmd->add_option("--zeta-order", a.zeta_order, "zeta truncation order")->check(CLI::PositiveNumber);
    cmd->add_option("--field-cap", a.field_cap, "largest field size allowed")->check(CLI::PositiveNumber);
    cmd->add_option("--format", a.format, "output format")->check(CLI::IsMember({"table", "csv", "json"}));
    cmd->add_option("--mode", a.mode, "count periodic points or all points")
        ->check(CLI::IsMember({"periodic", "points"}));
    cmd->add_flag("--verbose", a.verbose, "include orbit representatives");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) percount::fail(percount::ErrorCode::InvalidArgument, "cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

percount::OutputFormat parse_format(const std::string& f) {
    if (f == "csv") return percount::OutputFormat::Csv;
    if (f == "json") return percount::OutputFormat::Json;
    return percount::OutputFormat::Table;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Periodic-point counts on quotients of P^1 over finite fields"};
    app.require_subcommand(1);
    Args args;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"subgroups", "list the subgroup lattice"},
        {"counts", "periodic and all-point counts for every subgroup quotient"},
        {"relations", "idempotent relations: lattice basis and partition relations"},
        {"verify", "count residuals of every relation"},
        {"twists", "twist-average identity and orbit incidence (abelian groups)"},
        {"zeta", "truncated zeta series and product relations"},
        {"paper-example", "the bundled reference system over F_5 and F_7"},
    };
    for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help), args, name != "paper-example");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? percount::kExitOk : percount::kExitInvalidInput;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    const percount::OutputFormat format = parse_format(args.format);
    percount::CommandOptions opts;
    opts.mode = args.mode == "points" ? percount::CountMode::AllPoints : percount::CountMode::Periodic;
    opts.verbose = args.verbose;
    if (args.nmax) opts.nmax = args.nmax;
    if (args.zeta_order) opts.zeta_order = args.zeta_order;

    try {
        percount::Report report;
        if (command == "paper-example") {
            report = percount::run_reference_example(opts);
        } else {
            if (!args.config_pos.empty() && !args.config_opt.empty() && args.config_pos != args.config_opt) {
                percount::fail(percount::ErrorCode::InvalidArgument, "config given twice with different paths");
            }
            const std::string path = args.config_opt.empty() ? args.config_pos : args.config_opt;
            if (path.empty()) percount::fail(percount::ErrorCode::InvalidArgument, "missing config file");
            percount::SystemConfig cfg = percount::parse_config_syntax(read_file(path));
            if (args.nmax) cfg.nmax = args.nmax;
            if (args.zeta_order) cfg.zeta_order = args.zeta_order;
            if (args.field_cap) cfg.field_cap = args.field_cap;
            percount::validate_config(cfg);
            report = percount::run_command(command, cfg, opts);
        }
        std::cout << percount::render(report, format);
        return report.exit_code;
    } catch (const percount::Error& e) {
        (format == percount::OutputFormat::Json ? std::cout : std::cerr) << percount::render_error(e, format);
        return percount::exit_code_for(e.code());
    } catch (const std::exception& e) {
        const percount::Error wrapped(percount::ErrorCode::InvariantViolation, e.what());
        (format == percount::OutputFormat::Json ? std::cout : std::cerr) << percount::render_error(wrapped, format);
        return percount::kExitInternal;
    }
}
