// Copyright 2026 The efl-color Authors
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

#ifndef EFL_TESTS_SUPPORT_FIXTURES_HPP
#define EFL_TESTS_SUPPORT_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <string>

namespace efl::testing {

inline std::string data_path(const std::string& name) {
  return std::string(EFL_DATA_DIR) + "/" + name;
}

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name), std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Matrix states of the six-clique fixture after each assignment.
inline constexpr const char* kSixC0 =
    ". ? ? ? ? .\n"
    "? . ? ? ? ?\n"
    "? ? . ? ? ?\n"
    "? ? ? . . ?\n"
    "? ? ? . . ?\n"
    ". ? ? ? ? .\n";
inline constexpr const char* kSixC1 =
    ". 1 1 1 ? .\n"
    "1 . 1 1 ? ?\n"
    "1 1 . 1 ? ?\n"
    "1 1 1 . . ?\n"
    "? ? ? . . ?\n"
    ". ? ? ? ? .\n";
inline constexpr const char* kSixC2 =
    ". 1 1 1 ? .\n"
    "1 . 1 1 ? ?\n"
    "1 1 . 1 2 2\n"
    "1 1 1 . . ?\n"
    "? ? 2 . . 2\n"
    ". ? 2 ? 2 .\n";
inline constexpr const char* kSixC3 =
    ". 1 1 1 3 .\n"
    "1 . 1 1 ? ?\n"
    "1 1 . 1 2 2\n"
    "1 1 1 . . ?\n"
    "3 ? 2 . . 2\n"
    ". ? 2 ? 2 .\n";
inline constexpr const char* kSixC4 =
    ". 1 1 1 3 .\n"
    "1 . 1 1 4 ?\n"
    "1 1 . 1 2 2\n"
    "1 1 1 . . ?\n"
    "3 4 2 . . 2\n"
    ". ? 2 ? 2 .\n";
inline constexpr const char* kSixC5 =
    ". 1 1 1 3 .\n"
    "1 . 1 1 4 3\n"
    "1 1 . 1 2 2\n"
    "1 1 1 . . ?\n"
    "3 4 2 . . 2\n"
    ". 3 2 ? 2 .\n";
inline constexpr const char* kSixC6 =
    ". 1 1 1 3 .\n"
    "1 . 1 1 4 3\n"
    "1 1 . 1 2 2\n"
    "1 1 1 . . 4\n"
    "3 4 2 . . 2\n"
    ". 3 2 4 2 .\n";

}  // namespace efl::testing

#endif  // EFL_TESTS_SUPPORT_FIXTURES_HPP
