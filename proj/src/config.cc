// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mcsrecruit/config.h"

#include <charconv>
#include <istream>
#include <stdexcept>

#include "mcsrecruit/dataset.h"

namespace mcsrecruit {
namespace {

std::string Trimmed(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> SplitCommas(std::string_view s) {
  std::vector<std::string> parts;
  if (Trimmed(s).empty()) return parts;
  size_t start = 0;
  while (true) {
    const size_t comma = s.find(',', start);
    parts.push_back(Trimmed(s.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

template <typename T>
bool ParseWhole(const std::string& s, T& out) {
  const char* begin = s.data();
  if (!s.empty() && s.front() == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), out);
  return !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
}

[[noreturn]] void Malformed(const std::string& key, const std::string& value) {
  throw std::invalid_argument("config key '" + key + "': malformed value '" +
                              value + "'");
}

}  // namespace

KeyValueConfig KeyValueConfig::Parse(std::istream& in) {
  KeyValueConfig config;
  std::string line;
  int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = Trimmed(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos || Trimmed(text.substr(0, eq)).empty()) {
      throw ParseError(line_no, "expected 'key = value'");
    }
    config.Set(Trimmed(text.substr(0, eq)), Trimmed(text.substr(eq + 1)));
  }
  return config;
}

void KeyValueConfig::Assign(std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || Trimmed(assignment.substr(0, eq)).empty()) {
    throw std::invalid_argument("expected key=value, got '" +
                                std::string(assignment) + "'");
  }
  Set(Trimmed(assignment.substr(0, eq)), Trimmed(assignment.substr(eq + 1)));
}

void KeyValueConfig::Set(const std::string& key, const std::string& value) {
  values_[key] = value;
}

bool KeyValueConfig::Has(const std::string& key) const {
  return values_.count(key) > 0;
}

const std::string* KeyValueConfig::Find(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return nullptr;
  read_.insert(key);
  return &it->second;
}

std::string KeyValueConfig::GetString(const std::string& key,
                                      const std::string& fallback) const {
  const std::string* v = Find(key);
  return v ? *v : fallback;
}

double KeyValueConfig::GetDouble(const std::string& key, double fallback) const {
  const std::string* v = Find(key);
  if (!v) return fallback;
  double out = 0;
  if (!ParseWhole(*v, out)) Malformed(key, *v);
  return out;
}

int64_t KeyValueConfig::GetInt(const std::string& key, int64_t fallback) const {
  const std::string* v = Find(key);
  if (!v) return fallback;
  int64_t out = 0;
  if (!ParseWhole(*v, out)) Malformed(key, *v);
  return out;
}

bool KeyValueConfig::GetBool(const std::string& key, bool fallback) const {
  const std::string* v = Find(key);
  if (!v) return fallback;
  if (*v == "true" || *v == "1" || *v == "yes" || *v == "on") return true;
  if (*v == "false" || *v == "0" || *v == "no" || *v == "off") return false;
  Malformed(key, *v);
}

std::vector<double> KeyValueConfig::GetDoubles(const std::string& key,
                                               std::vector<double> fallback) const {
  const std::string* v = Find(key);
  if (!v) return fallback;
  std::vector<double> out;
  for (const std::string& part : SplitCommas(*v)) {
    double x = 0;
    if (!ParseWhole(part, x)) Malformed(key, *v);
    out.push_back(x);
  }
  return out;
}

std::vector<int64_t> KeyValueConfig::GetInts(const std::string& key,
                                             std::vector<int64_t> fallback) const {
  const std::string* v = Find(key);
  if (!v) return fallback;
  std::vector<int64_t> out;
  for (const std::string& part : SplitCommas(*v)) {
    const auto dash = part.find('-', 1);
    int64_t lo = 0, hi = 0;
    if (dash == std::string::npos) {
      if (!ParseWhole(part, lo)) Malformed(key, *v);
      out.push_back(lo);
      continue;
    }
    if (!ParseWhole(Trimmed(part.substr(0, dash)), lo) ||
        !ParseWhole(Trimmed(part.substr(dash + 1)), hi) || hi < lo) {
      Malformed(key, *v);
    }
    for (int64_t x = lo; x <= hi; ++x) out.push_back(x);
  }
  return out;
}

std::vector<std::string> KeyValueConfig::GetStrings(
    const std::string& key, std::vector<std::string> fallback) const {
  const std::string* v = Find(key);
  if (!v) return fallback;
  return SplitCommas(*v);
}

std::vector<std::string> KeyValueConfig::UnreadKeys() const {
  std::vector<std::string> unread;
  for (const auto& [key, value] : values_) {
    if (!read_.count(key)) unread.push_back(key);
  }
  return unread;
}

}  // namespace mcsrecruit
