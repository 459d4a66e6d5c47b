// Copyright 2026 The blockseq Authors
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

#ifndef BLOCKSEQ_TESTS_SUPPORT_FIXTURES_HPP_
#define BLOCKSEQ_TESTS_SUPPORT_FIXTURES_HPP_

#include <functional>
#include <optional>
#include <string>

#include "blockseq/core/design.hpp"
#include "blockseq/core/design_io.hpp"
#include "blockseq/core/error.hpp"

namespace blockseq::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(BLOCKSEQ_FIXTURE_DIR) + "/" + name;
}

inline BlockSystem load_fixture(const std::string& name) {
  return parse_design(read_text_file(fixture_path(name)));
}

inline BlockSystem psts(std::size_t n, std::vector<Block> blocks) {
  return BlockSystem::build(DesignKind::kPSTS, n, 2, 3, 1, std::move(blocks));
}

// Code of the blockseq::Error thrown by `f`, or nullopt if nothing throws.
inline std::optional<ErrorCode> error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace blockseq::testing

#endif  // BLOCKSEQ_TESTS_SUPPORT_FIXTURES_HPP_
