#include "hyperheat/experiments/results.hpp"

#include "hyperheat/errors.hpp"
#include "hyperheat/experiments/config.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hyperheat::experiments {

Metric make_metric(std::string name, double value, std::string comparator, double threshold, std::string provenance,
                   double upper) {
    Metric m{std::move(name), value, std::move(comparator), threshold, upper, std::move(provenance), true};
    const std::string& c = m.comparator;
    if (c == "<") m.pass = value < threshold;
    else if (c == "<=") m.pass = value <= threshold;
    else if (c == ">") m.pass = value > threshold;
    else if (c == ">=") m.pass = value >= threshold;
    else if (c == "==") m.pass = value == threshold;
    else if (c == "in") m.pass = threshold <= value && value <= upper;
    else if (c == "report") m.pass = true;
    else throw ParameterError("unknown comparator '" + c + "'");
    return m;
}

bool ResultRecord::all_pass() const {
    for (const auto& m : metrics) {
        if (!m.pass) return false;
    }
    return true;
}

const Metric* ResultRecord::find(const std::string& name) const {
    for (const auto& m : metrics) {
        if (m.name == name) return &m;
    }
    return nullptr;
}

Table& ResultRecord::add_table(std::string name, std::vector<std::string> columns) {
    tables.push_back(Table{std::move(name), std::move(columns), {}});
    return tables.back();
}

std::string digest(const std::string& text) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
    return buffer;
}

namespace {

nlohmann::json number(double value) {
    if (std::isfinite(value)) return value;
    return format_double(value);
}

}  // namespace

std::string results_json(const ResultRecord& record) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    doc["experiment"] = record.experiment;
    doc["input_digest"] = record.input_digest;
    doc["seed"] = record.seed;
    doc["pass"] = record.all_pass();
    doc["labels"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : record.labels) doc["labels"][key] = value;
    doc["metrics"] = nlohmann::ordered_json::array();
    for (const auto& m : record.metrics) {
        nlohmann::ordered_json entry;
        entry["name"] = m.name;
        entry["value"] = number(m.value);
        entry["comparator"] = m.comparator;
        entry["threshold"] = number(m.threshold);
        if (m.comparator == "in") entry["upper"] = number(m.upper);
        entry["provenance"] = m.provenance;
        entry["pass"] = m.pass;
        doc["metrics"].push_back(entry);
    }
    doc["tables"] = nlohmann::ordered_json::array();
    for (const auto& t : record.tables) {
        doc["tables"].push_back({{"name", t.name}, {"file", t.name + ".csv"}, {"columns", t.columns},
                                 {"rows", t.rows.size()}});
    }
    return doc.dump(2) + "\n";
}

std::string table_csv(const Table& table) {
    std::ostringstream out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
        out << '\n';
    }
    return out.str();
}

void emit_results(const ResultRecord& record, const std::string& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory '" + dir + "': " + ec.message());
    auto write = [&](const std::string& name, const std::string& content) {
        std::ofstream out(fs::path(dir) / name, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + name + "' in '" + dir + "'");
        out << content;
    };
    write("result.json", results_json(record));
    for (const auto& t : record.tables) write(t.name + ".csv", table_csv(t));
}

}  // namespace hyperheat::experiments
