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

// Flat key = value configuration files.
//
// The accepted syntax is a subset of TOML: `key = value` lines, `#`
// comments, `[section]` headers (keys become `section.key`), and values that
// are quoted strings, numbers, booleans, or one-line arrays of numbers or
// strings. Every key must be consumed; leftovers are reported as errors so a
// typo never silently falls back to a default.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace catlab {

using ConfigValue =
    std::variant<bool, double, std::string, std::vector<double>, std::vector<std::string>>;

class Config {
   public:
    static Config parse(const std::string& text, const std::string& origin = "<string>");
    static Config load(const std::string& path);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    void set(const std::string& key, ConfigValue value) { values_[key] = std::move(value); }

    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    /// Accepts a scalar as a one-element list.
    std::vector<double> get_doubles(const std::string& key, std::vector<double> fallback) const;
    std::vector<int> get_ints(const std::string& key, std::vector<int> fallback) const;
    std::vector<std::string> get_strings(const std::string& key,
                                         std::vector<std::string> fallback) const;

    /// Throws ConfigError naming every key that was never read.
    void reject_unused() const;

    const std::string& origin() const { return origin_; }

   private:
    const ConfigValue* find(const std::string& key) const;

    std::string origin_;
    std::map<std::string, ConfigValue> values_;
    mutable std::set<std::string> used_;
};

}  // namespace catlab
