/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "csv.hpp"

#include <cmath>
#include <cstdio>

namespace cellecon {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool field_started = false;

  auto end_field = [&] {
    row.push_back(field);
    field.clear();
    field_started = false;
  };
  auto end_row = [&](long line) {
    if (quoted) throw parse_error("unterminated quoted field", line);
    if (field_started || !row.empty()) {
      end_field();
      rows.push_back(row);
      row.clear();
    }
  };

  long line = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      continue;
    }
    switch (ch) {
      case '"':
        quoted = true;
        field_started = true;
        break;
      case ',':
        end_field();
        field_started = true;  // the next field exists even if empty
        break;
      case '\r':
        break;
      case '\n':
        end_row(line);
        ++line;
        break;
      default:
        field += ch;
        field_started = true;
    }
  }
  end_row(line);
  return rows;
}

std::string format_fixed(double value, int decimals) {
  // Normalize a signed zero so -0.00 never appears in output.
  if (value == 0.0) value = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string format_gbp(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.0f", value);
  return buf;
}

CsvBuilder::CsvBuilder(std::vector<std::string> header) : n_cols_(header.size()) {
  add_row(std::move(header));
}

void CsvBuilder::add_row(std::vector<std::string> fields) {
  if (fields.size() != n_cols_)
    throw domain_error("csv row width does not match the header");
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) text_ += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") != std::string::npos) {
      text_ += '"';
      for (char ch : f) {
        if (ch == '"') text_ += '"';
        text_ += ch;
      }
      text_ += '"';
    } else {
      text_ += f;
    }
  }
  text_ += '\n';
}

}  // namespace cellecon
