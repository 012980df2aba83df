#include "hyperheat/experiments/config.hpp"

#include "hyperheat/bochner.hpp"
#include "hyperheat/errors.hpp"

#include <boost/algorithm/string/trim.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

namespace hyperheat::experiments {

const std::vector<std::string>& experiment_ids() {
    static const std::vector<std::string> ids{"smoothing", "scaling",  "criticality",        "contraction",
                                              "stability", "solve",    "admissibility-sweep"};
    return ids;
}

std::string canonical_id(const std::string& id) {
    if (id == "sweep") return "admissibility-sweep";
    const auto& ids = experiment_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw ParameterError("unknown experiment id '" + id + "'");
    return id;
}

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    std::array<char, 64> buffer{};
    const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), result.ptr);
}

double parse_double(const std::string& text) {
    const std::string t = boost::algorithm::trim_copy(text);
    if (t == "inf" || t == "infinity") return std::numeric_limits<double>::infinity();
    if (t == "-inf" || t == "-infinity") return -std::numeric_limits<double>::infinity();
    double value = 0.0;
    const char* first = t.data();
    if (!t.empty() && t.front() == '+') ++first;
    const auto result = std::from_chars(first, t.data() + t.size(), value);
    if (t.empty() || result.ec != std::errc{} || result.ptr != t.data() + t.size()) {
        throw ParameterError("not a number: '" + text + "'");
    }
    return value;
}

namespace {

template <class Int>
Int parse_integer(const std::string& text) {
    const std::string trimmed = boost::algorithm::trim_copy(text);
    Int value{};
    const auto result = std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), value);
    if (trimmed.empty() || result.ec != std::errc{} || result.ptr != trimmed.data() + trimmed.size()) {
        throw ParameterError("not an integer: '" + text + "'");
    }
    return value;
}

using Setter = std::function<void(ExperimentConfig&, const std::string&)>;
using Getter = std::function<std::string(const ExperimentConfig&)>;

struct Field {
    std::string section;
    std::string key;
    Setter set;
    Getter get;
};

#define HH_REAL(sec, name, member)                                                                  \
    Field{sec, name, [](ExperimentConfig& c, const std::string& t) { c.member = parse_double(t); }, \
          [](const ExperimentConfig& c) { return format_double(c.member); }}

const std::vector<Field>& fields() {
    static const std::vector<Field> table{
        Field{"experiment", "id", [](ExperimentConfig& c, const std::string& t) { c.id = canonical_id(t); },
              [](const ExperimentConfig& c) { return c.id; }},
        Field{"experiment", "seed",
              [](ExperimentConfig& c, const std::string& t) { c.seed = parse_integer<std::uint64_t>(t); },
              [](const ExperimentConfig& c) { return std::to_string(c.seed); }},
        Field{"experiment", "output", [](ExperimentConfig& c, const std::string& t) { c.output = t; },
              [](const ExperimentConfig& c) { return c.output; }},
        HH_REAL("model", "alpha", model.alpha),
        HH_REAL("model", "r", model.r),
        Field{"model", "n", [](ExperimentConfig& c, const std::string& t) { c.model.n = parse_integer<int>(t); },
              [](const ExperimentConfig& c) { return std::to_string(c.model.n); }},
        Field{"space", "family",
              [](ExperimentConfig& c, const std::string& t) { c.space.family = family_from_string(t); },
              [](const ExperimentConfig& c) { return to_string(c.space.family); }},
        HH_REAL("space", "s", space.s),
        HH_REAL("space", "p", space.p),
        HH_REAL("space", "q", space.q),
        HH_REAL("space", "s0", space.s0),
        HH_REAL("weight", "a", a),
        HH_REAL("weight", "v", v),
        HH_REAL("solver", "T", solver.T),
        Field{"solver", "slabs",
              [](ExperimentConfig& c, const std::string& t) { c.solver.slabs = parse_integer<std::size_t>(t); },
              [](const ExperimentConfig& c) { return std::to_string(c.solver.slabs); }},
        Field{"solver", "octaves",
              [](ExperimentConfig& c, const std::string& t) { c.solver.octaves = parse_integer<int>(t); },
              [](const ExperimentConfig& c) { return std::to_string(c.solver.octaves); }},
        Field{"solver", "per_octave",
              [](ExperimentConfig& c, const std::string& t) { c.solver.per_octave = parse_integer<int>(t); },
              [](const ExperimentConfig& c) { return std::to_string(c.solver.per_octave); }},
        Field{"solver", "time_grid",
              [](ExperimentConfig& c, const std::string& t) { c.solver.time_grid = time_grid_from_string(t); },
              [](const ExperimentConfig& c) { return to_string(c.solver.time_grid); }},
        HH_REAL("solver", "picard_tol", solver.picard_tol),
        Field{"solver", "picard_max_iter",
              [](ExperimentConfig& c, const std::string& t) { c.solver.picard_max_iter = parse_integer<int>(t); },
              [](const ExperimentConfig& c) { return std::to_string(c.solver.picard_max_iter); }},
        HH_REAL("solver", "dealias_factor", solver.dealias_factor),
        Field{"solver", "quadrature_order",
              [](ExperimentConfig& c, const std::string& t) { c.solver.quadrature_order = parse_integer<int>(t); },
              [](const ExperimentConfig& c) { return std::to_string(c.solver.quadrature_order); }},
        Field{"grid", "points",
              [](ExperimentConfig& c, const std::string& t) { c.grid.points = parse_integer<std::size_t>(t); },
              [](const ExperimentConfig& c) { return std::to_string(c.grid.points); }},
        HH_REAL("grid", "length", grid.length),
    };
    return table;
}

#undef HH_REAL

const std::vector<std::string>& section_order() {
    static const std::vector<std::string> order{"experiment", "model", "space", "weight", "solver", "grid"};
    return order;
}

}  // namespace

void ExperimentConfig::validate() const {
    canonical_id(id);
    model.validate();
    space.validate();
    solver.validate();
    TimeWeight{a / (2.0 * model.r), v, solver.T}.validate();
    if (grid.points < 8 || (grid.points & (grid.points - 1)) != 0) {
        throw ParameterError("grid.points must be a power of two >= 8");
    }
    if (!(grid.length > 0.0) || !std::isfinite(grid.length)) throw ParameterError("grid.length must be positive");
}

double ExperimentConfig::param(const std::string& key, double fallback) const {
    const auto it = params.find(key);
    return it == params.end() ? fallback : parse_double(it->second);
}

int ExperimentConfig::param_int(const std::string& key, int fallback) const {
    const auto it = params.find(key);
    return it == params.end() ? fallback : parse_integer<int>(it->second);
}

std::string ExperimentConfig::param_string(const std::string& key, const std::string& fallback) const {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

std::vector<double> ExperimentConfig::param_list(const std::string& key, const std::vector<double>& fallback) const {
    const auto it = params.find(key);
    if (it == params.end()) return fallback;
    std::vector<double> out;
    std::stringstream stream(it->second);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (!boost::algorithm::trim_copy(item).empty()) out.push_back(parse_double(item));
    }
    if (out.empty()) throw ParameterError("empty list for '" + key + "'");
    return out;
}

ExperimentConfig parse_config(const std::string& text) {
    boost::property_tree::ptree tree;
    std::istringstream stream(text);
    try {
        boost::property_tree::read_ini(stream, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw ParameterError(std::string("config: ") + e.what());
    }
    ExperimentConfig config;
    for (const auto& [section, children] : tree) {
        if (children.empty() && !children.data().empty()) {
            throw ParameterError("config: key '" + section + "' outside a section");
        }
        if (section == "params") {
            for (const auto& [key, value] : children) config.params[key] = value.data();
            continue;
        }
        const auto& order = section_order();
        if (std::find(order.begin(), order.end(), section) == order.end()) {
            throw ParameterError("config: unknown section [" + section + "]");
        }
        for (const auto& [key, value] : children) {
            const auto& table = fields();
            const auto field = std::find_if(table.begin(), table.end(),
                                            [&](const Field& f) { return f.section == section && f.key == key; });
            if (field == table.end()) throw ParameterError("config: unknown key '" + section + "." + key + "'");
            field->set(config, value.data());
        }
    }
    config.validate();
    return config;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open config '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string emit_config(const ExperimentConfig& config) {
    std::ostringstream out;
    for (const auto& section : section_order()) {
        out << '[' << section << "]\n";
        for (const auto& field : fields()) {
            if (field.section == section) out << field.key << " = " << field.get(config) << '\n';
        }
        out << '\n';
    }
    out << "[params]\n";
    for (const auto& [key, value] : config.params) out << key << " = " << value << '\n';
    return out.str();
}

}  // namespace hyperheat::experiments
