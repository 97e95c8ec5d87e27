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

#ifndef CELLECON_CORE_BUILTIN_DATA_HPP
#define CELLECON_CORE_BUILTIN_DATA_HPP

namespace cellecon {

// The shipped tariff corpora, embedded at build time from data/*.csv so the
// zero-config baseline needs no files at run time.
const char* builtin_tariffs_3g();
const char* builtin_tariffs_4g();

}  // namespace cellecon

#endif  // CELLECON_CORE_BUILTIN_DATA_HPP
