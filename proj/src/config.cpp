// Copyright 2026 The catlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "catlab/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "catlab/errors.hpp"

namespace catlab {
namespace {

std::string trim(std::string_view s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) {
        ++a;
    }
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) {
        --b;
    }
    return std::string(s.substr(a, b - a));
}

// Drops a trailing comment, leaving '#' inside quotes alone.
std::string strip_comment(const std::string& line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') {
            quoted = !quoted;
        } else if (line[i] == '#' && !quoted) {
            return line.substr(0, i);
        }
    }
    return line;
}

bool valid_key(const std::string& key) {
    if (key.empty()) {
        return false;
    }
    for (char c : key) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.')) {
            return false;
        }
    }
    return true;
}

class LineError {
   public:
    LineError(const std::string& origin, int line) : origin_(origin), line_(line) {}
    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << origin_ << ":" << line_ << ": " << what;
        throw ConfigError(os.str());
    }

   private:
    const std::string& origin_;
    int line_;
};

std::optional<double> parse_number(const std::string& s) {
    std::string t;
    for (char c : s) {
        if (c != '_') {
            t.push_back(c);
        }
    }
    if (!t.empty() && t[0] == '+') {
        t.erase(0, 1);
    }
    double v = 0.0;
    const char* end = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(t.data(), end, v);
    if (ec != std::errc() || ptr != end || t.empty()) {
        return std::nullopt;
    }
    return v;
}

std::string parse_string(const std::string& s, const LineError& err) {
    if (s.size() < 2 || s.front() != '"' || s.back() != '"') {
        err.fail("malformed string " + s);
    }
    const std::string body = s.substr(1, s.size() - 2);
    if (body.find('"') != std::string::npos || body.find('\\') != std::string::npos) {
        err.fail("escapes are not supported in strings");
    }
    return body;
}

std::vector<std::string> split_array(const std::string& inner) {
    std::vector<std::string> items;
    std::string cur;
    bool quoted = false;
    for (char c : inner) {
        if (c == '"') {
            quoted = !quoted;
        }
        if (c == ',' && !quoted) {
            items.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    const std::string last = trim(cur);
    if (!last.empty()) {
        items.push_back(last);
    }
    return items;
}

ConfigValue parse_value(const std::string& text, const LineError& err) {
    if (text.empty()) {
        err.fail("missing value");
    }
    if (text == "true") {
        return true;
    }
    if (text == "false") {
        return false;
    }
    if (text.front() == '"') {
        return parse_string(text, err);
    }
    if (text.front() == '[') {
        if (text.back() != ']') {
            err.fail("arrays must close on the same line");
        }
        const std::vector<std::string> items = split_array(text.substr(1, text.size() - 2));
        if (items.empty()) {
            err.fail("empty array");
        }
        if (items.front().front() == '"') {
            std::vector<std::string> out;
            for (const std::string& it : items) {
                out.push_back(parse_string(it, err));
            }
            return out;
        }
        std::vector<double> out;
        for (const std::string& it : items) {
            const auto v = parse_number(it);
            if (!v) {
                err.fail("not a number: " + it);
            }
            out.push_back(*v);
        }
        return out;
    }
    const auto v = parse_number(text);
    if (!v) {
        err.fail("cannot parse value " + text);
    }
    return *v;
}

const char* type_name(const ConfigValue& v) {
    switch (v.index()) {
        case 0:
            return "boolean";
        case 1:
            return "number";
        case 2:
            return "string";
        case 3:
            return "number array";
        default:
            return "string array";
    }
}

[[noreturn]] void type_error(const std::string& key, const ConfigValue& v, const char* want) {
    std::ostringstream os;
    os << "key '" << key << "' is a " << type_name(v) << ", expected " << want;
    throw ConfigError(os.str());
}

int to_int(const std::string& key, double v) {
    if (std::floor(v) != v || std::abs(v) > 1e9) {
        throw ConfigError("key '" + key + "' must be an integer");
    }
    return static_cast<int>(v);
}

}  // namespace

Config Config::parse(const std::string& text, const std::string& origin) {
    Config cfg;
    cfg.origin_ = origin;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const LineError err(cfg.origin_, lineno);
        const std::string line = trim(strip_comment(raw));
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                err.fail("malformed section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            if (!valid_key(section)) {
                err.fail("invalid section name '" + section + "'");
            }
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            err.fail("expected key = value");
        }
        std::string key = trim(line.substr(0, eq));
        if (!valid_key(key)) {
            err.fail("invalid key '" + key + "'");
        }
        if (!section.empty()) {
            key = section + "." + key;
        }
        if (cfg.values_.count(key)) {
            err.fail("duplicate key '" + key + "'");
        }
        cfg.values_[key] = parse_value(trim(line.substr(eq + 1)), err);
    }
    return cfg;
}

Config Config::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        throw ConfigError("cannot open config file " + path);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse(ss.str(), path);
}

const ConfigValue* Config::find(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) {
        return nullptr;
    }
    used_.insert(key);
    return &it->second;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    const ConfigValue* v = find(key);
    if (!v) {
        return fallback;
    }
    if (const auto* s = std::get_if<std::string>(v)) {
        return *s;
    }
    type_error(key, *v, "a string");
}

double Config::get_double(const std::string& key, double fallback) const {
    const ConfigValue* v = find(key);
    if (!v) {
        return fallback;
    }
    if (const auto* d = std::get_if<double>(v)) {
        return *d;
    }
    type_error(key, *v, "a number");
}

int Config::get_int(const std::string& key, int fallback) const {
    const ConfigValue* v = find(key);
    if (!v) {
        return fallback;
    }
    if (const auto* d = std::get_if<double>(v)) {
        return to_int(key, *d);
    }
    type_error(key, *v, "an integer");
}

bool Config::get_bool(const std::string& key, bool fallback) const {
    const ConfigValue* v = find(key);
    if (!v) {
        return fallback;
    }
    if (const auto* b = std::get_if<bool>(v)) {
        return *b;
    }
    type_error(key, *v, "a boolean");
}

std::vector<double> Config::get_doubles(const std::string& key,
                                        std::vector<double> fallback) const {
    const ConfigValue* v = find(key);
    if (!v) {
        return fallback;
    }
    if (const auto* d = std::get_if<double>(v)) {
        return {*d};
    }
    if (const auto* a = std::get_if<std::vector<double>>(v)) {
        return *a;
    }
    type_error(key, *v, "a number or number array");
}

std::vector<int> Config::get_ints(const std::string& key, std::vector<int> fallback) const {
    if (!has(key)) {
        find(key);
        return fallback;
    }
    std::vector<int> out;
    for (double d : get_doubles(key, {})) {
        out.push_back(to_int(key, d));
    }
    return out;
}

std::vector<std::string> Config::get_strings(const std::string& key,
                                             std::vector<std::string> fallback) const {
    const ConfigValue* v = find(key);
    if (!v) {
        return fallback;
    }
    if (const auto* s = std::get_if<std::string>(v)) {
        return {*s};
    }
    if (const auto* a = std::get_if<std::vector<std::string>>(v)) {
        return *a;
    }
    type_error(key, *v, "a string or string array");
}

void Config::reject_unused() const {
    std::string unknown;
    for (const auto& [key, value] : values_) {
        if (!used_.count(key)) {
            unknown += unknown.empty() ? key : ", " + key;
        }
    }
    if (!unknown.empty()) {
        throw ConfigError(origin_ + ": unknown keys: " + unknown);
    }
}

}  // namespace catlab
