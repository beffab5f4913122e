// SPDX-License-Identifier: Apache-2.0
//
// ueant - handheld UE antenna pattern, polarization and blockage modelling
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ueant
{

    // Shortest decimal string that parses back to the same double. Output is
    // locale independent, so files produced on different machines compare
    // byte for byte.
    std::string format_double(double v);

    // Strict counterpart of format_double; the whole field must be consumed.
    double parse_double(std::string_view field); // throws ParseError

    // In-memory comma-separated table with one header line. Fields holding a
    // comma, quote or newline are quoted on write and unquoted on read.
    struct CsvTable
    {
        std::vector<std::string> header;
        std::vector<std::vector<std::string>> rows;

        // Header lookup; throws ParseError for an unknown column name.
        std::size_t column(const std::string &name) const;
    };

    std::string to_csv_text(const CsvTable &t);
    CsvTable from_csv_text(std::string_view text); // throws ParseError

    void write_csv(const std::string &path, const CsvTable &t); // throws IoError
    CsvTable read_csv(const std::string &path);                 // throws IoError/ParseError

    void write_text_file(const std::string &path, const std::string &text); // throws IoError
    std::string read_text_file(const std::string &path);                    // throws IoError

} // namespace ueant
