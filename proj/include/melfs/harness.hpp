#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "melfs/dataset.hpp"
#include "melfs/mel.hpp"

namespace melfs {

enum class Algorithm { Mel, Pso };

std::string algorithm_name(Algorithm a);

/// A benchmark request: datasets x algorithms, repeated runs with seeds
/// seed, seed+1, ..., seed+repeats-1.
struct ExperimentSpec {
    std::vector<std::string> datasets;
    std::vector<Algorithm> algorithms;
    MelConfig config;
    std::string out_dir = "melfs_out";
    LabelColumn label_column = LabelColumn::Last;
    bool has_header = false;
    bool scale = false;           // opt-in min-max normalization
    int weight_trace_top_k = 0;   // 0 disables the weight dump
};

/// One (dataset, algorithm) cell of the result table.
struct SummaryRow {
    std::string dataset;
    std::string algorithm;
    bool failed = false;
    std::string error;
    std::size_t repeats = 0;
    double mean_accuracy = 0.0;
    double std_accuracy = 0.0;
    double mean_subset_size = 0.0;
    double std_subset_size = 0.0;
    double mean_wall_time = 0.0;
    double std_wall_time = 0.0;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised by parse_spec when --help (or --version) asks for text output.
struct HelpRequested : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses CLI arguments (without the program name) plus an optional
/// --config file; flags override file values override defaults. Unknown
/// keys are rejected. Throws UsageError with a message on bad input.
ExperimentSpec parse_spec(const std::vector<std::string>& args);

/// Runs every (dataset, algorithm) cell. Writes one convergence CSV per
/// run, summary.csv (deterministic metrics) and timings.csv (wall-clock,
/// inherently non-reproducible) under spec.out_dir. A failing cell is
/// recorded and the remaining cells still run.
std::vector<SummaryRow> run_experiment(const ExperimentSpec& spec);

/// One row per iteration 0..T, 17-significant-digit decimal formatting, so
/// re-emitting the same report is byte-identical.
void emit_convergence_csv(const RunReport& report, const std::filesystem::path& path);

/// %.17g rendering used for every floating-point value written to CSV.
std::string format_double(double v);

/// Text table for terminal output.
std::string render_summary_table(const std::vector<SummaryRow>& rows);

}  // namespace melfs
