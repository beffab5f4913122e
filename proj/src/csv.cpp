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

#include "ueant/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "ueant/errors.hpp"

namespace ueant
{

    std::string format_double(double v)
    {
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof(buf), v);
        return std::string(buf, res.ptr);
    }

    double parse_double(std::string_view field)
    {
        double v = 0.0;
        const char *first = field.data();
        const char *last = first + field.size();
        const auto res = std::from_chars(first, last, v);
        if (res.ec != std::errc{} || res.ptr != last)
            throw ParseError("not a number: '" + std::string(field) + "'");
        return v;
    }

    std::size_t CsvTable::column(const std::string &name) const
    {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name)
                return i;
        throw ParseError("no column named '" + name + "'");
    }

    namespace
    {
        bool needs_quoting(const std::string &field)
        {
            return field.find_first_of(",\"\n\r") != std::string::npos;
        }

        void append_field(std::string &out, const std::string &field)
        {
            if (!needs_quoting(field))
            {
                out += field;
                return;
            }
            out += '"';
            for (char c : field)
            {
                if (c == '"')
                    out += '"';
                out += c;
            }
            out += '"';
        }

        void append_line(std::string &out, const std::vector<std::string> &fields)
        {
            for (std::size_t i = 0; i < fields.size(); ++i)
            {
                if (i > 0)
                    out += ',';
                append_field(out, fields[i]);
            }
            out += '\n';
        }

        // One record, RFC-style quoting. Returns the position after the
        // record's line break.
        std::size_t parse_record(std::string_view text, std::size_t pos,
                                 std::vector<std::string> &fields)
        {
            fields.clear();
            std::string cur;
            bool quoted = false;
            while (pos < text.size())
            {
                const char c = text[pos];
                if (quoted)
                {
                    if (c == '"')
                    {
                        if (pos + 1 < text.size() && text[pos + 1] == '"')
                        {
                            cur += '"';
                            pos += 2;
                            continue;
                        }
                        quoted = false;
                        ++pos;
                        continue;
                    }
                    cur += c;
                    ++pos;
                    continue;
                }
                if (c == '"' && cur.empty())
                {
                    quoted = true;
                    ++pos;
                    continue;
                }
                if (c == ',')
                {
                    fields.push_back(std::move(cur));
                    cur.clear();
                    ++pos;
                    continue;
                }
                if (c == '\n' || c == '\r')
                {
                    ++pos;
                    if (c == '\r' && pos < text.size() && text[pos] == '\n')
                        ++pos;
                    fields.push_back(std::move(cur));
                    return pos;
                }
                cur += c;
                ++pos;
            }
            if (quoted)
                throw ParseError("unterminated quoted field");
            fields.push_back(std::move(cur));
            return pos;
        }
    } // namespace

    std::string to_csv_text(const CsvTable &t)
    {
        std::string out;
        append_line(out, t.header);
        for (const auto &row : t.rows)
            append_line(out, row);
        return out;
    }

    CsvTable from_csv_text(std::string_view text)
    {
        CsvTable t;
        std::size_t pos = 0;
        if (text.empty())
            throw ParseError("empty CSV text");
        pos = parse_record(text, pos, t.header);
        std::vector<std::string> fields;
        while (pos < text.size())
        {
            pos = parse_record(text, pos, fields);
            if (fields.size() == 1 && fields[0].empty())
                continue; // trailing blank line
            if (fields.size() != t.header.size())
                throw ParseError("row with " + std::to_string(fields.size()) +
                                 " fields under a header of " + std::to_string(t.header.size()));
            t.rows.push_back(fields);
        }
        return t;
    }

    void write_csv(const std::string &path, const CsvTable &t)
    {
        write_text_file(path, to_csv_text(t));
    }

    CsvTable read_csv(const std::string &path)
    {
        return from_csv_text(read_text_file(path));
    }

    void write_text_file(const std::string &path, const std::string &text)
    {
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw IoError("cannot open '" + path + "' for writing");
        f.write(text.data(), static_cast<std::streamsize>(text.size()));
        if (!f)
            throw IoError("write to '" + path + "' failed");
    }

    std::string read_text_file(const std::string &path)
    {
        std::ifstream f(path, std::ios::binary);
        if (!f)
            throw IoError("cannot open '" + path + "' for reading");
        std::ostringstream ss;
        ss << f.rdbuf();
        if (f.bad())
            throw IoError("read from '" + path + "' failed");
        return ss.str();
    }

} // namespace ueant
