#include "cli/run_config.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace sqz::cli {

std::string to_string(OutputFormat f)
{
    return f == OutputFormat::json ? "json" : "csv";
}

OutputFormat parse_format(const std::string& s)
{
    if (s == "csv")
        return OutputFormat::csv;
    if (s == "json")
        return OutputFormat::json;
    throw ConfigError("unknown output format '" + s + "' (expected csv or json)");
}

void validate(const RunConfig& c)
{
    for (double v : {c.s0_re, c.s0_im, c.d0_re, c.d0_im, c.t_start, c.t_end, c.grid_l, c.tolerance, c.time,
                     c.s1_re, c.s1_im}) {
        if (!std::isfinite(v))
            throw ConfigError("configuration contains a non-finite number");
    }
    if (!(c.s0_re > 0.0))
        throw ConfigError("s0_re must be positive (non-normalizable initial state)");
    if (c.n_steps < 1)
        throw ConfigError("n_steps must be at least 1");
    if (c.grid_points < 16)
        throw ConfigError("grid_points must be at least 16");
    if (!(c.grid_l > 0.0))
        throw ConfigError("grid_l must be positive");
    if (c.n_max < 1)
        throw ConfigError("n_max must be at least 1");
    if (!(c.tolerance > 0.0))
        throw ConfigError("tolerance must be positive");
}

nlohmann::json to_json(const RunConfig& c)
{
    return nlohmann::json{
        {"s0_re", c.s0_re},
        {"s0_im", c.s0_im},
        {"d0_re", c.d0_re},
        {"d0_im", c.d0_im},
        {"t_start", c.t_start},
        {"t_end", c.t_end},
        {"n_steps", c.n_steps},
        {"grid_l", c.grid_l},
        {"grid_points", c.grid_points},
        {"n_max", c.n_max},
        {"tolerance", c.tolerance},
        {"format", to_string(c.format)},
        {"time", c.time},
        {"spec", c.spec},
        {"s1_re", c.s1_re},
        {"s1_im", c.s1_im},
    };
}

namespace {

template <class T>
void read(const nlohmann::json& j, const char* key, T& field)
{
    if (!j.contains(key))
        return;
    try {
        if constexpr (std::is_same_v<T, std::size_t>) {
            const auto& v = j.at(key);
            if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<long long>() < 0))
                throw ConfigError(std::string("config key '") + key + "' must be a non-negative integer");
        }
        field = j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config key '") + key + "': " + e.what());
    }
}

} // namespace

RunConfig merge_json(RunConfig c, const nlohmann::json& doc)
{
    const nlohmann::json& j = (doc.is_object() && doc.contains("config")) ? doc.at("config") : doc;
    if (!j.is_object())
        throw ConfigError("config must be a JSON object");

    static const std::set<std::string> known = {"s0_re", "s0_im",  "d0_re",    "d0_im",       "t_start", "t_end",
                                                "n_steps", "grid_l", "grid_points", "n_max",   "tolerance", "format",
                                                "time",  "spec",   "s1_re",    "s1_im"};
    for (const auto& item : j.items()) {
        if (!known.count(item.key()))
            throw ConfigError("unknown config key '" + item.key() + "'");
    }

    read(j, "s0_re", c.s0_re);
    read(j, "s0_im", c.s0_im);
    read(j, "d0_re", c.d0_re);
    read(j, "d0_im", c.d0_im);
    read(j, "t_start", c.t_start);
    read(j, "t_end", c.t_end);
    read(j, "n_steps", c.n_steps);
    read(j, "grid_l", c.grid_l);
    read(j, "grid_points", c.grid_points);
    read(j, "n_max", c.n_max);
    read(j, "tolerance", c.tolerance);
    read(j, "time", c.time);
    read(j, "spec", c.spec);
    read(j, "s1_re", c.s1_re);
    read(j, "s1_im", c.s1_im);
    if (j.contains("format")) {
        std::string f;
        read(j, "format", f);
        c.format = parse_format(f);
    }
    return c;
}

RunConfig load_config_file(const std::string& path, const RunConfig& base)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    return merge_json(base, j);
}

} // namespace sqz::cli
