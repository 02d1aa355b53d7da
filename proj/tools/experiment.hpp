#pragma once

// Experiment runner behind the rfl-lab command line: configuration parsing
// and validation, dispatch to the lab operations, and CSV / JSON reports.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rfl/grid.hpp"
#include "rfl/operators.hpp"

namespace rfl::app {

inline constexpr std::string_view kVersion = "1.0.0";

enum ExitCode : int { kExitPass = 0, kExitViolation = 1, kExitInvalidInput = 2, kExitIo = 3 };

/// Rejected configuration; maps to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unreadable config or unwritable output; maps to exit code 3.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Mode { Verify, Bandwidth, Bernstein, ExpType, RadialPw, Lks, Evolve, KernelCompare, DumpSymbol };

std::string_view mode_name(Mode mode);
std::optional<Mode> parse_mode(std::string_view name);
const std::vector<Mode>& all_modes();

struct ExperimentConfig {
    Mode mode = Mode::Verify;
    int n = 2;
    int grid = 0;  // samples per axis; 0 picks 64 (32 at n >= 3)
    double spacing = 0.5;
    double alpha = 1.0;
    double theta = 1.0;
    double p = 2.0;
    double radius = 2.0;
    double epsilon = 0.25;
    int k_max = 0;           // 0 picks the mode default
    std::vector<double> x0;  // empty picks the mode default
    std::uint64_t seed = 0;
    std::string out;         // output prefix; writes <out>.csv and <out>.json
    std::string format = "csv";
    int m = 0;               // radial-pw weight exponent
    int trials = 100;        // lks sample count
    std::string symbol = "riesz-feller";
    int axis = 1;            // dump-symbol riesz-j axis
    bool entire = false;     // exp-type: entire extension instead of the Cauchy branch
    bool timing = false;     // evolve: fill the wall-time column

    GridSpec grid_spec() const;
    FellerParams feller() const;
};

/// Keys accepted in a JSON config file; they mirror the long flag names.
const std::vector<std::string>& config_keys();

/// Overlays the keys of `j` on `base`. Unknown keys raise InputError listing all of them.
ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base = {});
nlohmann::json config_to_json(const ExperimentConfig& config);

/// Fills mode-dependent defaults (grid size, k_max, x0 schedule).
void resolve_defaults(ExperimentConfig& config);

/// Range checks: 0 < alpha <= 1, p > 1, R within Nyquist, theta admissible for
/// negative x0, grid shape, format. Throws InputError.
void validate(const ExperimentConfig& config);

/// A CSV-shaped table whose cells are JSON scalars (null prints as empty).
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::json>> rows;
};

struct ExperimentReport {
    nlohmann::json config;
    Table table;
    nlohmann::json summary = nlohmann::json::object();
    bool pass = true;
};

/// Dispatches to the lab operation named by config.mode. Expects a resolved, valid config.
ExperimentReport run(const ExperimentConfig& config);

std::string to_csv(const Table& table);
nlohmann::json to_json(const ExperimentReport& report);

/// Writes <out>.csv / <out>.json when config.out is set and prints the report
/// in config.format to `os`. Throws IoError.
void emit(const ExperimentReport& report, const ExperimentConfig& config, std::ostream& os);

/// Full command line entry point; returns the process exit code.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Cell helpers: NaN and infinities become null.
nlohmann::json number(double v);

}  // namespace rfl::app
