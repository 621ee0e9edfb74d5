#include "melfs/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <string_view>

#include "melfs/rng.hpp"

namespace melfs {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_csv_line(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            cells.push_back(trim(line.substr(start, i - start)));
            start = i + 1;
        }
    }
    return cells;
}

double parse_feature_cell(std::string_view cell, std::size_t row, std::size_t col) {
    double value = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    auto [ptr, ec] = std::from_chars(begin, end, value, std::chars_format::general);
    if (ec != std::errc{} || ptr != end) {
        throw std::runtime_error("row " + std::to_string(row) + ", column " + std::to_string(col) +
                                 ": cannot parse '" + std::string(cell) + "' as a number");
    }
    if (!std::isfinite(value)) {
        throw std::runtime_error("row " + std::to_string(row) + ", column " + std::to_string(col) +
                                 ": non-finite value");
    }
    return value;
}

}  // namespace

Dataset make_dataset(std::vector<double> samples, std::vector<int> labels,
                     std::size_t n_features) {
    if (n_features == 0) throw std::invalid_argument("dataset needs at least one feature");
    if (labels.empty()) throw std::invalid_argument("dataset has no samples");
    if (samples.size() != labels.size() * n_features)
        throw std::invalid_argument("sample matrix size does not match labels x features");
    for (double v : samples)
        if (!std::isfinite(v)) throw std::invalid_argument("dataset contains a non-finite value");

    Dataset ds;
    ds.n_samples = labels.size();
    ds.n_features = n_features;
    ds.samples = std::move(samples);
    ds.labels = std::move(labels);
    std::set<int> distinct(ds.labels.begin(), ds.labels.end());
    ds.class_ids.assign(distinct.begin(), distinct.end());
    return ds;
}

Dataset load_csv(const std::string& path, LabelColumn label_column, bool has_header) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");

    std::vector<double> samples;
    std::vector<int> labels;
    std::map<std::string, int, std::less<>> label_ids;  // token -> dense id, first appearance
    std::size_t n_features = 0;
    std::size_t row_number = 0;  // 1-based, counting every file line
    bool first_data_row = true;

    std::string line;
    while (std::getline(in, line)) {
        ++row_number;
        if (row_number == 1) {
            // strip a UTF-8 BOM if present
            if (line.size() >= 3 && line[0] == '\xEF' && line[1] == '\xBB' && line[2] == '\xBF')
                line.erase(0, 3);
            if (has_header) continue;
        }
        if (trim(line).empty()) continue;

        auto cells = split_csv_line(line);
        if (cells.size() < 2)
            throw std::runtime_error("row " + std::to_string(row_number) +
                                     ": need at least one feature and a label");
        if (first_data_row) {
            n_features = cells.size() - 1;
            first_data_row = false;
        } else if (cells.size() != n_features + 1) {
            throw std::runtime_error("row " + std::to_string(row_number) + " has " +
                                     std::to_string(cells.size()) + " cells, expected " +
                                     std::to_string(n_features + 1));
        }

        const std::size_t label_idx = label_column == LabelColumn::First ? 0 : cells.size() - 1;
        auto token = cells[label_idx];
        if (token.empty())
            throw std::runtime_error("row " + std::to_string(row_number) + ": empty label");
        auto it = label_ids.find(token);
        if (it == label_ids.end())
            it = label_ids.emplace(std::string(token), static_cast<int>(label_ids.size())).first;
        labels.push_back(it->second);

        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c == label_idx) continue;
            samples.push_back(parse_feature_cell(cells[c], row_number, c + 1));
        }
    }

    if (labels.empty()) throw std::runtime_error("'" + path + "' contains no data rows");
    return make_dataset(std::move(samples), std::move(labels), n_features);
}

FoldPlan stratified_kfold(const Dataset& ds, int k, std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("fold count must be at least 2");
    if (static_cast<std::size_t>(k) > ds.n_samples)
        throw std::invalid_argument("fold count exceeds sample count");

    FoldPlan plan;
    plan.k = k;
    plan.seed = seed;
    plan.assignment.assign(ds.n_samples, -1);

    Rng rng(seed);
    int cursor = 0;  // round-robin position, carried across classes
    for (int cls : ds.class_ids) {
        std::vector<std::size_t> rows;
        for (std::size_t i = 0; i < ds.n_samples; ++i)
            if (ds.labels[i] == cls) rows.push_back(i);
        rng.shuffle(rows);
        for (std::size_t j = 0; j < rows.size(); ++j) {
            plan.assignment[rows[j]] = cursor;
            cursor = (cursor + 1) % k;
        }
    }
    return plan;
}

Dataset minmax_scale(const Dataset& ds) {
    std::vector<double> scaled(ds.samples.size());
    for (std::size_t j = 0; j < ds.n_features; ++j) {
        double lo = ds.at(0, j), hi = ds.at(0, j);
        for (std::size_t i = 1; i < ds.n_samples; ++i) {
            lo = std::min(lo, ds.at(i, j));
            hi = std::max(hi, ds.at(i, j));
        }
        const double range = hi - lo;
        for (std::size_t i = 0; i < ds.n_samples; ++i)
            scaled[i * ds.n_features + j] = range > 0.0 ? (ds.at(i, j) - lo) / range : 0.0;
    }
    return make_dataset(std::move(scaled), ds.labels, ds.n_features);
}

}  // namespace melfs
