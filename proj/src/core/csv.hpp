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

#ifndef CELLECON_CORE_CSV_HPP
#define CELLECON_CORE_CSV_HPP

#include <string>
#include <vector>

#include "errors.hpp"

namespace cellecon {

/// Splits RFC-4180-style CSV into rows of fields. Double quotes delimit
/// fields containing commas; blank lines are skipped.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

/// Fixed-decimal formatting; the only double-to-text path in emitted tables,
/// so identical inputs always serialize to identical bytes.
std::string format_fixed(double value, int decimals);

/// Integer-valued GBP amounts rendered without separators or decimals.
std::string format_gbp(double value);

/// Incremental CSV builder with a fixed column count.
class CsvBuilder {
 public:
  explicit CsvBuilder(std::vector<std::string> header);

  void add_row(std::vector<std::string> fields);
  const std::string& text() const { return text_; }

 private:
  std::size_t n_cols_;
  std::string text_;
};

}  // namespace cellecon

#endif  // CELLECON_CORE_CSV_HPP
