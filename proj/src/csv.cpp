#include "hubsim/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <tuple>

namespace hubsim
{

namespace
{

std::string fixed6(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

struct Line
{
    std::string_view source;
    std::string_view policy;
    std::uint32_t    n;
    std::string      text;
};

template <typename T>
T parse_number(std::string_view cell, std::string_view column)
{
    T    out{};
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), out);
    if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size())
    {
        throw std::invalid_argument("malformed " + std::string(column) + " cell '" + std::string(cell) + "'");
    }
    return out;
}

std::optional<std::uint64_t> optional_count(std::string_view cell, std::string_view column)
{
    if (cell.empty())
    {
        return std::nullopt;
    }
    return parse_number<std::uint64_t>(cell, column);
}

} // namespace

std::string format_csv(std::span<const PointSummary> summaries, std::span<const AnalyticPoint> analytic)
{
    if (summaries.empty() && analytic.empty())
    {
        throw std::invalid_argument("no rows to write");
    }

    std::vector<Line> lines;
    lines.reserve(summaries.size() + analytic.size());
    for (const auto& s : summaries)
    {
        std::string row = "sim," + std::string(policy_name(s.policy)) + "," + std::to_string(s.n) + "," +
                          std::to_string(s.trials) + "," + std::to_string(s.successes) + "," +
                          fixed6(s.success_rate) + "," + fixed6(s.mean_attempts) + "," + fixed6(s.success_stderr) +
                          "," + std::to_string(s.cache_hits) + "," + std::to_string(s.master_seed);
        lines.push_back({"sim", policy_name(s.policy), s.n, std::move(row)});
    }
    for (const auto& a : analytic)
    {
        std::string row = "analytic," + std::string(policy_name(a.policy)) + "," + std::to_string(a.n) + ",,," +
                          fixed6(a.success_rate) + "," + fixed6(a.mean_attempts) + "," + fixed6(0.0) + ",,";
        lines.push_back({"analytic", policy_name(a.policy), a.n, std::move(row)});
    }
    std::stable_sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
        return std::tie(a.source, a.policy, a.n) < std::tie(b.source, b.policy, b.n);
    });

    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& l : lines)
    {
        out += l.text;
        out += '\n';
    }
    return out;
}

void emit_csv(const std::string& path, std::span<const PointSummary> summaries, std::span<const AnalyticPoint> analytic)
{
    const std::string body = format_csv(summaries, analytic);
    std::ofstream     out(path, std::ios::binary | std::ios::trunc);
    if (!out)
    {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << body;
    out.flush();
    if (!out)
    {
        throw IoError("failed writing '" + path + "'");
    }
}

std::vector<CsvRow> parse_csv(std::string_view text)
{
    std::vector<CsvRow> rows;
    std::size_t         pos = text.find('\n');
    if (pos == std::string_view::npos || text.substr(0, pos) != kCsvHeader)
    {
        throw std::invalid_argument("CSV header does not match the results schema");
    }
    ++pos;
    while (pos < text.size())
    {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
        {
            end = text.size();
        }
        const auto line = text.substr(pos, end - pos);
        pos             = end + 1;
        if (line.empty())
        {
            continue;
        }

        std::vector<std::string_view> cells;
        std::size_t                   start = 0;
        for (;;)
        {
            const auto comma = line.find(',', start);
            cells.push_back(line.substr(start, comma - start));
            if (comma == std::string_view::npos)
            {
                break;
            }
            start = comma + 1;
        }
        if (cells.size() != 10)
        {
            throw std::invalid_argument("CSV row has " + std::to_string(cells.size()) + " cells, expected 10");
        }

        CsvRow row;
        row.source         = cells[0];
        row.policy         = cells[1];
        row.n              = parse_number<std::uint32_t>(cells[2], "N");
        row.trials         = optional_count(cells[3], "trials");
        row.successes      = optional_count(cells[4], "successes");
        row.success_rate   = parse_number<double>(cells[5], "success_rate");
        row.mean_attempts  = parse_number<double>(cells[6], "mean_attempts");
        row.success_stderr = parse_number<double>(cells[7], "success_stderr");
        row.cache_hits     = optional_count(cells[8], "cache_hits");
        row.seed           = optional_count(cells[9], "seed");
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace hubsim
