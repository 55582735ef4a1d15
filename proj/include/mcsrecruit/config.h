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

// Flat "key = value" configuration files.
//
//   # comment
//   model = ic
//   p = 25, 50, 75, 100
//   grid.mask = 3, 10-14
//
// Later assignments override earlier ones. List values are comma-separated;
// integer lists accept inclusive "a-b" ranges.

#ifndef MCSRECRUIT_CONFIG_H_
#define MCSRECRUIT_CONFIG_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mcsrecruit {

class KeyValueConfig {
 public:
  // Throws ParseError on a line without '='.
  static KeyValueConfig Parse(std::istream& in);

  // Applies "key=value"; throws std::invalid_argument without '='.
  void Assign(std::string_view assignment);
  void Set(const std::string& key, const std::string& value);
  bool Has(const std::string& key) const;

  // Typed getters throw std::invalid_argument naming the key on a malformed
  // value.
  std::string GetString(const std::string& key, const std::string& fallback) const;
  double GetDouble(const std::string& key, double fallback) const;
  int64_t GetInt(const std::string& key, int64_t fallback) const;
  bool GetBool(const std::string& key, bool fallback) const;
  std::vector<double> GetDoubles(const std::string& key,
                                 std::vector<double> fallback) const;
  std::vector<int64_t> GetInts(const std::string& key,
                               std::vector<int64_t> fallback) const;
  std::vector<std::string> GetStrings(const std::string& key,
                                      std::vector<std::string> fallback) const;

  // Keys that were set but never read, for typo reporting.
  std::vector<std::string> UnreadKeys() const;

 private:
  const std::string* Find(const std::string& key) const;

  std::map<std::string, std::string> values_;
  mutable std::set<std::string> read_;
};

}  // namespace mcsrecruit

#endif  // MCSRECRUIT_CONFIG_H_
