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

#ifndef BLOCKSEQ_CORE_DESIGN_IO_HPP_
#define BLOCKSEQ_CORE_DESIGN_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "blockseq/core/design.hpp"
#include "blockseq/core/goodness.hpp"

namespace blockseq {

// Line-oriented text. Designs:
//   kind STS
//   params 2 3 1
//   n 7
//   block 0 1 2
// Sequencings: "seq <n>" then the ids on one line. Lines starting with '#'
// are ignored on input. Structural problems raise ParseError with a line.
BlockSystem parse_design(std::string_view text,
                         Validation validation = Validation::kStrict);
std::string write_design(const BlockSystem& sys);

Sequencing parse_seq(std::string_view text);
std::string write_seq(const Sequencing& seq);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace blockseq

#endif  // BLOCKSEQ_CORE_DESIGN_IO_HPP_
