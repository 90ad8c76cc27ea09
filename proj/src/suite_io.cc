// Copyright 2026 The LocusGP Authors
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

#include "locusgp/suite_io.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace locusgp {

namespace {

class ValueReader {
 public:
  ValueReader(std::string_view text, int line) : text_(text), line_(line) {}

  std::vector<Value> ReadList() {
    std::vector<Value> values;
    SkipSpace();
    if (AtEnd()) return values;
    values.push_back(ReadValue());
    SkipSpace();
    while (!AtEnd()) {
      Expect(',');
      values.push_back(ReadValue());
      SkipSpace();
    }
    return values;
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }

  void SkipSpace() {
    while (!AtEnd() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void Expect(char c) {
    SkipSpace();
    if (AtEnd() || text_[pos_] != c) {
      throw SuiteError(line_, std::string("expected '") + c + "' at column " +
                                  std::to_string(pos_ + 1));
    }
    ++pos_;
  }

  std::int64_t ReadInt() {
    SkipSpace();
    std::size_t start = pos_;
    if (!AtEnd() && text_[pos_] == '-') ++pos_;
    while (!AtEnd() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || end != text_.data() + pos_) {
      throw SuiteError(line_, "malformed integer at column " + std::to_string(start + 1));
    }
    return value;
  }

  Value ReadValue() {
    SkipSpace();
    if (!AtEnd() && text_[pos_] == '[') {
      ++pos_;
      std::vector<std::int64_t> elements;
      SkipSpace();
      if (!AtEnd() && text_[pos_] == ']') {
        ++pos_;
        return Value::Array(std::move(elements));
      }
      elements.push_back(ReadInt());
      SkipSpace();
      while (!AtEnd() && text_[pos_] == ',') {
        ++pos_;
        elements.push_back(ReadInt());
        SkipSpace();
      }
      Expect(']');
      return Value::Array(std::move(elements));
    }
    return Value::Int(ReadInt());
  }

  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

TestSuite ParseSuite(std::string_view text) {
  TestSuite suite;
  int line_number = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t newline = text.find('\n', start);
    std::string_view line =
        text.substr(start, newline == std::string_view::npos ? text.npos : newline - start);
    start = newline == std::string_view::npos ? text.size() : newline + 1;
    ++line_number;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    std::size_t arrow = line.find("->");
    if (arrow == std::string_view::npos) throw SuiteError(line_number, "expected 'args -> expected'");
    TestCase test;
    test.args = ValueReader(line.substr(0, arrow), line_number).ReadList();
    std::vector<Value> expected = ValueReader(line.substr(arrow + 2), line_number).ReadList();
    if (expected.size() != 1) throw SuiteError(line_number, "expected exactly one result value");
    test.expected = std::move(expected.front());
    suite.push_back(std::move(test));
  }
  return suite;
}

std::string FormatArgs(const std::vector<Value>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ", ";
    out += args[i].ToString();
  }
  return out;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream contents;
  contents << in.rdbuf();
  return contents.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
}

}  // namespace locusgp
