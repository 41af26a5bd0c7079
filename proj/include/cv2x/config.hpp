#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cv2x/error.hpp"
#include "cv2x/network_config.hpp"

namespace cv2x::config {

inline std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline std::optional<double> to_double(std::string_view s)
{
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

inline std::optional<std::int64_t> to_int(std::string_view s)
{
    s = trim(s);
    std::int64_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

inline std::optional<bool> to_bool(std::string_view s)
{
    s = trim(s);
    if (s == "true" || s == "on" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "off" || s == "0" || s == "no") return false;
    return std::nullopt;
}

using Field = std::variant<double NetworkConfig::*, int NetworkConfig::*>;

struct FieldEntry {
    std::string_view name;
    Field field;
};

/// Every settable NetworkConfig member, keyed by its own name.
inline const std::vector<FieldEntry>& network_fields()
{
    static const std::vector<FieldEntry> fields = {
        {"lambda_m", &NetworkConfig::lambda_m},
        {"lambda_l", &NetworkConfig::lambda_l},
        {"lambda_s", &NetworkConfig::lambda_s},
        {"lambda_v", &NetworkConfig::lambda_v},
        {"p_m_dbm", &NetworkConfig::p_m_dbm},
        {"p_s_dbm", &NetworkConfig::p_s_dbm},
        {"p_v_dbm", &NetworkConfig::p_v_dbm},
        {"g_m_dbi", &NetworkConfig::g_m_dbi},
        {"g_s0_dbi", &NetworkConfig::g_s0_dbi},
        {"g_s1_dbi", &NetworkConfig::g_s1_dbi},
        {"g_v0_dbi", &NetworkConfig::g_v0_dbi},
        {"g_v1_dbi", &NetworkConfig::g_v1_dbi},
        {"alpha_m", &NetworkConfig::alpha_m},
        {"alpha_s", &NetworkConfig::alpha_s},
        {"m_m", &NetworkConfig::m_m},
        {"m_s0", &NetworkConfig::m_s0},
        {"m_s1", &NetworkConfig::m_s1},
        {"m_v0", &NetworkConfig::m_v0},
        {"m_v1", &NetworkConfig::m_v1},
        {"shadow_std_m_db", &NetworkConfig::shadow_std_m_db},
        {"shadow_std_s0_db", &NetworkConfig::shadow_std_s0_db},
        {"shadow_std_s1_db", &NetworkConfig::shadow_std_s1_db},
        {"v_max_kmh", &NetworkConfig::v_max_kmh},
        {"lambda_max_per_km", &NetworkConfig::lambda_max_per_km},
        {"region_radius_km", &NetworkConfig::region_radius_km},
        {"noise_power", &NetworkConfig::noise_power},
    };
    return fields;
}

inline const FieldEntry* find_field(std::string_view name)
{
    for (const auto& f : network_fields())
        if (f.name == name) return &f;
    return nullptr;
}

/// Sets a numeric NetworkConfig member; returns false for an unknown key.
/// Throws ValidationError when an integer member gets a non-integer value.
inline bool set_field(NetworkConfig& cfg, std::string_view key, double value)
{
    const FieldEntry* f = find_field(key);
    if (!f) return false;
    if (auto p = std::get_if<double NetworkConfig::*>(&f->field)) {
        cfg.*(*p) = value;
    } else {
        const auto ip = std::get<int NetworkConfig::*>(f->field);
        if (value != std::floor(value) || std::abs(value) > 1e9)
            throw ValidationError(std::string(key) + " must be an integer");
        cfg.*ip = static_cast<int>(value);
    }
    return true;
}

inline double get_field(const NetworkConfig& cfg, std::string_view key)
{
    const FieldEntry* f = find_field(key);
    if (!f) throw ValidationError("unknown parameter '" + std::string(key) + "'");
    if (auto p = std::get_if<double NetworkConfig::*>(&f->field)) return cfg.*(*p);
    return cfg.*std::get<int NetworkConfig::*>(f->field);
}

enum class BasePreset { Default, Reference };

inline BasePreset parse_preset(std::string_view s)
{
    if (s == "default") return BasePreset::Default;
    if (s == "reference") return BasePreset::Reference;
    throw ValidationError("preset must be default or reference, got '" + std::string(s) + "'");
}

inline NetworkConfig base_config(BasePreset p, Scenario s)
{
    return p == BasePreset::Reference ? reference_config(s) : default_config(s);
}

/// One `key = value` line, kept with its line number for diagnostics.
struct Entry {
    std::string key;
    std::string value;
    int line = 0;
};

/// Flat `key = value` text with `#` comments.
inline std::vector<Entry> parse_entries(std::string_view text)
{
    std::vector<Entry> out;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected 'key = value', got '" + std::string(line) + "'", line_no);
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError("missing key", line_no);
        if (value.empty()) throw ParseError("missing value for '" + std::string(key) + "'", line_no);
        for (const auto& e : out)
            if (e.key == key) throw ParseError("duplicate key '" + std::string(key) + "'", line_no);
        out.push_back({std::string(key), std::string(value), line_no});
    }
    return out;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open config file '" + path + "'", 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace cv2x::config
