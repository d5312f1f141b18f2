// Copyright 2026 The NetCB Authors.
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

#ifndef NETCB_ERRORS_H_
#define NETCB_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netcb {

// Node id outside [0, node_count).
class InvalidNodeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A statistic was requested on input where it is not defined (e.g. homophily
// of an edgeless graph).
class UndefinedStatisticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The simulation protocol was violated, e.g. recommending a node that is
// already active or was already recommended.
class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed dataset input. line() is 1-based; 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& file, std::size_t line, const std::string& what)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
        file_(file),
        line_(line) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

// Invalid experiment configuration. key() names the offending entry.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(const std::string& key, const std::string& what)
      : std::invalid_argument(key + ": " + what), key_(key) {}

  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

}  // namespace netcb

#endif  // NETCB_ERRORS_H_
