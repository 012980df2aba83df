#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hyperheat::experiments {

/// A scalar with its declared tolerance.
///
/// comparator is one of "<", "<=", ">", ">=", "==", "in" (threshold <= value <= upper)
/// or "report" (no verdict, always passes).
struct Metric {
    std::string name;
    double value = 0.0;
    std::string comparator = "report";
    double threshold = 0.0;
    double upper = 0.0;
    std::string provenance;
    bool pass = true;
};

Metric make_metric(std::string name, double value, std::string comparator, double threshold, std::string provenance,
                   double upper = 0.0);

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct ResultRecord {
    std::string experiment;
    std::string input_digest;
    std::uint64_t seed = 0;
    std::map<std::string, std::string> labels;
    std::vector<Metric> metrics;
    std::vector<Table> tables;

    bool all_pass() const;
    /// nullptr if absent.
    const Metric* find(const std::string& name) const;
    Table& add_table(std::string name, std::vector<std::string> columns);
};

/// 64-bit FNV-1a of `text` as 16 hex digits.
std::string digest(const std::string& text);

/// Writes dir/result.json (schema_version 1) and dir/<table>.csv for every table.
void emit_results(const ResultRecord& record, const std::string& dir);

/// The JSON document written by emit_results.
std::string results_json(const ResultRecord& record);
std::string table_csv(const Table& table);

}  // namespace hyperheat::experiments
