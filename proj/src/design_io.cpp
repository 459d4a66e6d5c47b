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

#include "blockseq/core/design_io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "blockseq/core/error.hpp"

namespace blockseq {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    const std::size_t j = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    if (i > j) out.push_back(line.substr(j, i - j));
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" +
                               std::string(tok) + "'");
  }
  return v;
}

// Calls f(line_number, tokens) for every non-blank, non-comment line.
template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    const std::vector<std::string_view> tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    f(line_no, tok);
  }
}

Block canonical(DesignKind kind, Block b) {
  if (kind == DesignKind::kMTS) {
    std::rotate(b.begin(), std::min_element(b.begin(), b.end()), b.end());
  } else if (!is_directed(kind)) {
    std::sort(b.begin(), b.end());
  }
  return b;
}

}  // namespace

BlockSystem parse_design(std::string_view text, Validation validation) {
  std::optional<DesignKind> kind;
  std::optional<std::array<std::uint64_t, 3>> params;
  std::optional<std::uint64_t> n;
  std::vector<Block> blocks;
  std::map<Block, std::size_t> seen;
  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& tok) {
    const std::string_view key = tok[0];
    auto expect = [&](std::size_t count) {
      if (tok.size() != count + 1) {
        throw ParseError(line, "'" + std::string(key) + "' takes " +
                                   std::to_string(count) + " value(s)");
      }
    };
    if (key == "kind") {
      expect(1);
      if (kind) throw ParseError(line, "repeated kind line");
      kind = parse_kind(tok[1]);
      if (!kind) throw ParseError(line, "unknown kind '" + std::string(tok[1]) + "'");
    } else if (key == "params") {
      expect(3);
      if (params) throw ParseError(line, "repeated params line");
      params = {parse_uint(tok[1], line), parse_uint(tok[2], line),
                parse_uint(tok[3], line)};
    } else if (key == "n") {
      expect(1);
      if (n) throw ParseError(line, "repeated n line");
      n = parse_uint(tok[1], line);
    } else if (key == "block") {
      if (!kind || !n) throw ParseError(line, "block before kind and n");
      Block b;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const std::uint64_t p = parse_uint(tok[i], line);
        if (p >= *n) throw ParseError(line, "point out of range");
        b.push_back(static_cast<Point>(p));
      }
      if (b.empty()) throw ParseError(line, "empty block");
      const auto [it, fresh] = seen.emplace(canonical(*kind, b), line);
      if (!fresh) {
        throw ParseError(line, "duplicate block (first on line " +
                                   std::to_string(it->second) + ")");
      }
      blocks.push_back(std::move(b));
    } else {
      throw ParseError(line, "unknown keyword '" + std::string(key) + "'");
    }
  });
  if (!kind) throw ParseError(0, "missing kind line");
  if (!n) throw ParseError(0, "missing n line");
  std::array<std::uint64_t, 3> tkl{2, 3, 1};
  if (params) {
    tkl = *params;
  } else if (*kind == DesignKind::kSQS) {
    tkl = {3, 4, 1};
  } else if (*kind == DesignKind::kBD) {
    throw ParseError(0, "BD designs need a params line");
  }
  return BlockSystem::build(*kind, static_cast<std::size_t>(*n),
                            static_cast<int>(tkl[0]), static_cast<int>(tkl[1]),
                            static_cast<int>(tkl[2]), std::move(blocks),
                            validation);
}

std::string write_design(const BlockSystem& sys) {
  std::ostringstream os;
  os << "kind " << kind_name(sys.kind()) << '\n'
     << "params " << sys.t() << ' ' << sys.k() << ' ' << sys.lambda() << '\n'
     << "n " << sys.n() << '\n';
  for (const Block& b : sys.blocks()) {
    os << "block";
    for (Point p : b) os << ' ' << p;
    os << '\n';
  }
  return os.str();
}

Sequencing parse_seq(std::string_view text) {
  std::optional<std::uint64_t> n;
  std::size_t header_line = 0;
  std::vector<Point> order;
  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& tok) {
    std::size_t i = 0;
    if (!n) {
      if (tok[0] != "seq" || tok.size() < 2) {
        throw ParseError(line, "expected 'seq <n>' header");
      }
      n = parse_uint(tok[1], line);
      header_line = line;
      i = 2;
    }
    for (; i < tok.size(); ++i) {
      const std::uint64_t p = parse_uint(tok[i], line);
      if (p >= *n) throw ParseError(line, "id out of range");
      order.push_back(static_cast<Point>(p));
    }
  });
  if (!n) throw ParseError(0, "missing 'seq <n>' header");
  if (order.size() != *n) {
    throw ParseError(header_line, "expected " + std::to_string(*n) +
                                      " ids, found " +
                                      std::to_string(order.size()));
  }
  try {
    return Sequencing::from_order(std::move(order));
  } catch (const Error&) {
    throw ParseError(header_line, "ids do not form a permutation");
  }
}

std::string write_seq(const Sequencing& seq) {
  std::string out = "seq " + std::to_string(seq.size()) + "\n";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(seq.at(i));
  }
  out += '\n';
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

}  // namespace blockseq
