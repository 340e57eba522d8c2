/**
 * textsim — semantic text similarity toolkit
 *
 * Copyright (c) 2026 The textsim Authors
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <istream>
#include <string>
#include <vector>

#include "textsim/error.hpp"

namespace textsim::detail {

// RFC 4180 record reader: quoted fields, doubled-quote escapes, commas and
// newlines allowed inside quotes, CRLF or LF record ends. Completely blank
// lines are skipped.
class CsvReader {
 public:
  CsvReader(std::istream& in, std::string path) : in_(in), path_(std::move(path)) {}

  // Fills `fields` with the next record and `line` with the record's starting
  // 1-based line number. Returns false at end of input.
  bool next(std::vector<std::string>& fields, std::size_t& line) {
    fields.clear();
    int c = in_.get();
    while (c == '\n' || (c == '\r' && in_.peek() == '\n')) {  // skip blank lines
      if (c == '\r') in_.get();
      ++line_;
      c = in_.get();
    }
    if (c == std::istream::traits_type::eof()) return false;

    line = line_;
    std::string field;
    bool quoted = false;
    for (;; c = in_.get()) {
      if (c == std::istream::traits_type::eof()) {
        if (quoted) throw MalformedRow("unterminated quoted field", path_, line);
        break;
      }
      if (quoted) {
        if (c == '"') {
          if (in_.peek() == '"') {
            field.push_back('"');
            in_.get();
          } else {
            quoted = false;
          }
        } else {
          if (c == '\n') ++line_;
          field.push_back(static_cast<char>(c));
        }
        continue;
      }
      if (c == '"' && field.empty()) {
        quoted = true;
      } else if (c == ',') {
        fields.push_back(std::move(field));
        field.clear();
      } else if (c == '\n' || c == '\r') {
        if (c == '\r' && in_.peek() == '\n') in_.get();
        ++line_;
        break;
      } else {
        field.push_back(static_cast<char>(c));
      }
    }
    fields.push_back(std::move(field));
    return true;
  }

 private:
  std::istream& in_;
  std::string path_;
  std::size_t line_ = 1;
};

}  // namespace textsim::detail
