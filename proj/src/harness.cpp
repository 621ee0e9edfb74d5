#include "melfs/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

namespace melfs {

std::string algorithm_name(Algorithm a) {
    return a == Algorithm::Mel ? "mel" : "pso";
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

struct Stats {
    double mean = 0.0;
    double stddev = 0.0;  // population formula
};

Stats stats_of(const std::vector<double>& xs) {
    Stats s;
    for (double x : xs) s.mean += x;
    s.mean /= static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(xs.size()));
    return s;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);  // binary keeps line endings fixed
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    return out;
}

void emit_weight_trace_row(std::ofstream& out, std::size_t iteration,
                           const std::vector<double>& w, int top_k) {
    std::vector<std::size_t> order(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) order[i] = i;
    const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(top_k), w.size());
    std::partial_sort(order.begin(), order.begin() + k, order.end(),
                      [&](std::size_t a, std::size_t b) {
                          if (w[a] != w[b]) return w[a] > w[b];
                          return a < b;
                      });
    for (std::size_t j = 0; j < k; ++j)
        out << iteration << ',' << order[j] << ',' << format_double(w[order[j]]) << '\n';
}

}  // namespace

void emit_convergence_csv(const RunReport& report, const std::filesystem::path& path) {
    auto out = open_for_write(path);
    out << "iteration,best_fitness,best_accuracy,subset_size\n";
    for (std::size_t t = 0; t < report.trace.size(); ++t) {
        const TracePoint& p = report.trace[t];
        out << t << ',' << format_double(p.best_fitness) << ','
            << format_double(p.best_accuracy) << ',' << p.best_subset_size << '\n';
    }
    if (!out.flush()) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::vector<SummaryRow> run_experiment(const ExperimentSpec& spec) {
    if (spec.datasets.empty()) throw UsageError("at least one dataset is required");
    if (spec.algorithms.empty()) throw UsageError("at least one algorithm is required");
    spec.config.validate();

    std::filesystem::create_directories(spec.out_dir);
    std::vector<SummaryRow> rows;

    for (const auto& dataset_path : spec.datasets) {
        const std::string stem = std::filesystem::path(dataset_path).stem().string();

        Dataset ds;
        bool load_failed = false;
        std::string load_error;
        try {
            ds = load_csv(dataset_path, spec.label_column, spec.has_header);
            if (spec.scale) ds = minmax_scale(ds);
        } catch (const std::exception& e) {
            load_failed = true;
            load_error = e.what();
        }

        for (Algorithm algo : spec.algorithms) {
            SummaryRow row;
            row.dataset = stem;
            row.algorithm = algorithm_name(algo);
            row.repeats = spec.config.repeats;

            if (load_failed) {
                row.failed = true;
                row.error = load_error;
                rows.push_back(row);
                continue;
            }

            try {
                std::vector<double> accs, sizes, times;
                for (std::size_t r = 0; r < spec.config.repeats; ++r) {
                    MelConfig cfg = spec.config;
                    cfg.seed = spec.config.seed + r;

                    RunReport report;
                    if (algo == Algorithm::Mel) {
                        if (spec.weight_trace_top_k > 0) {
                            auto trace_path = std::filesystem::path(spec.out_dir) /
                                              (stem + "_mel_seed" + std::to_string(cfg.seed) +
                                               "_weights.csv");
                            auto wout = open_for_write(trace_path);
                            wout << "iteration,feature_index,weight\n";
                            report = run_mel(ds, cfg,
                                             [&](std::size_t it, const std::vector<double>& w) {
                                                 emit_weight_trace_row(wout, it, w,
                                                                       spec.weight_trace_top_k);
                                             });
                        } else {
                            report = run_mel(ds, cfg);
                        }
                    } else {
                        report = run_pso_baseline(ds, cfg);
                    }

                    const auto csv_path = std::filesystem::path(spec.out_dir) /
                                          (stem + "_" + row.algorithm + "_seed" +
                                           std::to_string(cfg.seed) + ".csv");
                    emit_convergence_csv(report, csv_path);

                    accs.push_back(report.best_accuracy);
                    sizes.push_back(static_cast<double>(report.best_subset_size));
                    times.push_back(report.wall_time_seconds);
                }
                const Stats acc = stats_of(accs), size = stats_of(sizes), time = stats_of(times);
                row.mean_accuracy = acc.mean;
                row.std_accuracy = acc.stddev;
                row.mean_subset_size = size.mean;
                row.std_subset_size = size.stddev;
                row.mean_wall_time = time.mean;
                row.std_wall_time = time.stddev;
            } catch (const std::exception& e) {
                row.failed = true;
                row.error = e.what();
            }
            rows.push_back(row);
        }
    }

    auto summary = open_for_write(std::filesystem::path(spec.out_dir) / "summary.csv");
    summary << "# std columns use the population formula: sqrt(mean((x - mean)^2))\n";
    summary << "# per-run seeds are base_seed .. base_seed + repeats - 1;"
               " per-run files: <dataset>_<algorithm>_seed<seed>.csv\n";
    summary << "dataset,algorithm,status,repeats,base_seed,mean_accuracy,std_accuracy,"
               "mean_subset_size,std_subset_size\n";
    for (const auto& row : rows) {
        summary << row.dataset << ',' << row.algorithm << ','
                << (row.failed ? "failed" : "ok") << ',' << row.repeats << ','
                << spec.config.seed << ',';
        if (row.failed) {
            summary << ",,,\n";
        } else {
            summary << format_double(row.mean_accuracy) << ',' << format_double(row.std_accuracy)
                    << ',' << format_double(row.mean_subset_size) << ','
                    << format_double(row.std_subset_size) << '\n';
        }
    }
    if (!summary.flush()) throw std::runtime_error("write failed for summary.csv");

    // Wall-clock stats live in their own file: they vary run to run, while
    // summary.csv is byte-reproducible for identical specs.
    auto timings = open_for_write(std::filesystem::path(spec.out_dir) / "timings.csv");
    timings << "# wall-clock seconds, population std; values are not reproducible\n";
    timings << "dataset,algorithm,mean_wall_time_seconds,std_wall_time_seconds\n";
    for (const auto& row : rows) {
        timings << row.dataset << ',' << row.algorithm << ',';
        if (row.failed)
            timings << ",\n";
        else
            timings << format_double(row.mean_wall_time) << ','
                    << format_double(row.std_wall_time) << '\n';
    }
    if (!timings.flush()) throw std::runtime_error("write failed for timings.csv");

    return rows;
}

ExperimentSpec parse_spec(const std::vector<std::string>& args) {
    ExperimentSpec spec;
    std::vector<std::string> algo_names;
    std::string label_col = "last";

    CLI::App app{"melfs: feature-selection benchmark harness (MEL and standard PSO)"};
    app.set_config("--config", "", "key=value config file; CLI flags take precedence");
    app.allow_config_extras(CLI::config_extras_mode::error);

    app.add_option("--dataset", spec.datasets, "CSV dataset path (repeatable)")->required();
    app.add_option("--algo", algo_names, "algorithm to run: mel or pso (repeatable, default both)")
        ->check(CLI::IsMember({"mel", "pso"}));
    app.add_option("--repeats", spec.config.repeats, "runs per (dataset, algorithm)");
    app.add_option("--seed", spec.config.seed, "base RNG seed; run r uses seed + r");
    app.add_option("--iters", spec.config.iterations, "iterations per run");
    app.add_option("--np", spec.config.np, "population size (even)");
    app.add_option("--theta", spec.config.pso.theta, "binarization threshold");
    app.add_option("--alpha", spec.config.alpha, "fitness weight on error rate");
    app.add_option("--beta", spec.config.beta, "fitness weight on subset fraction");
    app.add_option("--c3", spec.config.pso.c3, "cross-subpopulation learning factor");
    app.add_option("--knn", spec.config.k_nn, "KNN neighbor count");
    app.add_option("--folds", spec.config.cv_folds, "cross-validation fold count");
    app.add_flag("--scale", spec.scale, "min-max scale features to [0,1] before running");
    app.add_option("--label-col", label_col, "label column position: first or last")
        ->check(CLI::IsMember({"first", "last"}));
    app.add_flag("--header", spec.has_header, "skip the first CSV row as a header");
    app.add_option("--out", spec.out_dir, "output directory");
    app.add_option("--weight-trace", spec.weight_trace_top_k,
                   "dump the top-K feature weights per iteration (mel only)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (algo_names.empty()) {
        spec.algorithms = {Algorithm::Mel, Algorithm::Pso};
    } else {
        for (const auto& name : algo_names) {
            const Algorithm a = name == "mel" ? Algorithm::Mel : Algorithm::Pso;
            if (std::find(spec.algorithms.begin(), spec.algorithms.end(), a) ==
                spec.algorithms.end())
                spec.algorithms.push_back(a);
        }
    }
    spec.label_column = label_col == "first" ? LabelColumn::First : LabelColumn::Last;
    if (spec.weight_trace_top_k < 0) throw UsageError("--weight-trace must be non-negative");

    try {
        spec.config.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return spec;
}

std::string render_summary_table(const std::vector<SummaryRow>& rows) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof(line), "%-20s %-5s %-22s %-22s %-22s\n", "dataset", "algo",
                  "accuracy (mean+/-std)", "subset size", "wall time [s]");
    out << line;
    for (const auto& row : rows) {
        if (row.failed) {
            std::snprintf(line, sizeof(line), "%-20s %-5s FAILED: %s\n", row.dataset.c_str(),
                          row.algorithm.c_str(), row.error.c_str());
            out << line;
            continue;
        }
        std::snprintf(line, sizeof(line),
                      "%-20s %-5s %9.4f +/- %-8.4f %9.1f +/- %-8.1f %9.2f +/- %-8.2f\n",
                      row.dataset.c_str(), row.algorithm.c_str(), row.mean_accuracy,
                      row.std_accuracy, row.mean_subset_size, row.std_subset_size,
                      row.mean_wall_time, row.std_wall_time);
        out << line;
    }
    return out.str();
}

}  // namespace melfs
