#include "hubsim/chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hubsim/csv.hpp"

namespace hubsim
{

namespace
{

constexpr double kWidth       = 820;
constexpr double kPanelHeight = 400;
constexpr double kLeft        = 80;
constexpr double kRight       = 240;
constexpr double kTop         = 50;
constexpr double kBottom      = 60;

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string label(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

struct Point
{
    double n;
    double y;
};

struct Series
{
    PolicyKind         policy;
    bool               simulated;
    std::vector<Point> success;
    std::vector<Point> attempts;
};

const char* colour(PolicyKind policy)
{
    return policy == PolicyKind::OrchestratedParallel ? "#1f77b4" : "#d62728";
}

std::string series_name(const Series& s)
{
    std::string name = s.policy == PolicyKind::OrchestratedParallel ? "Orchestrated" : "Naive sequential";
    return name + (s.simulated ? " (simulated)" : " (analytic)");
}

// Maps (log2 N, value) into one panel's plotting rectangle.
struct Frame
{
    double top;
    double x_lo, x_hi;
    double y_lo, y_hi;

    double px(double n) const
    {
        const double t = (std::log2(n) - x_lo) / (x_hi - x_lo);
        return kLeft + t * (kWidth - kLeft - kRight);
    }
    double py(double v) const
    {
        const double t = (v - y_lo) / (y_hi - y_lo);
        return top + kPanelHeight - kBottom - t * (kPanelHeight - kTop - kBottom);
    }
    double left() const { return kLeft; }
    double right() const { return kWidth - kRight; }
    double upper() const { return top + kTop; }
    double lower() const { return top + kPanelHeight - kBottom; }
};

double nice_ceiling(double v)
{
    if (v <= 1.0)
    {
        return 1.0;
    }
    const double step = std::pow(10.0, std::floor(std::log10(v)));
    for (double m : {1.0, 2.0, 2.5, 5.0, 10.0})
    {
        if (m * step >= v)
        {
            return m * step;
        }
    }
    return 10.0 * step;
}

void draw_panel(std::string& svg, const Frame& f, const std::vector<Series>& series, bool success_panel,
                const std::string& title, const std::string& y_label)
{
    // axes box
    svg += "<rect x=\"" + num(f.left()) + "\" y=\"" + num(f.upper()) + "\" width=\"" + num(f.right() - f.left()) +
           "\" height=\"" + num(f.lower() - f.upper()) + "\" fill=\"none\" stroke=\"#333\"/>\n";
    svg += "<text x=\"" + num((f.left() + f.right()) / 2) + "\" y=\"" + num(f.top + 28) +
           "\" text-anchor=\"middle\" font-size=\"15\">" + title + "</text>\n";

    for (int k = static_cast<int>(std::ceil(f.x_lo)); k <= static_cast<int>(std::floor(f.x_hi)); ++k)
    {
        const double n = std::exp2(k);
        const double x = f.px(n);
        svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(f.upper()) + "\" x2=\"" + num(x) + "\" y2=\"" +
               num(f.lower()) + "\" stroke=\"#ddd\"/>\n";
        svg += "<text x=\"" + num(x) + "\" y=\"" + num(f.lower() + 18) + "\" text-anchor=\"middle\" font-size=\"12\">" +
               label(n) + "</text>\n";
    }
    for (int i = 0; i <= 5; ++i)
    {
        const double v = f.y_lo + (f.y_hi - f.y_lo) * i / 5.0;
        const double y = f.py(v);
        svg += "<line x1=\"" + num(f.left()) + "\" y1=\"" + num(y) + "\" x2=\"" + num(f.right()) + "\" y2=\"" + num(y) +
               "\" stroke=\"#eee\"/>\n";
        svg += "<text x=\"" + num(f.left() - 8) + "\" y=\"" + num(y + 4) + "\" text-anchor=\"end\" font-size=\"12\">" +
               label(v) + "</text>\n";
    }
    svg += "<text x=\"" + num((f.left() + f.right()) / 2) + "\" y=\"" + num(f.lower() + 42) +
           "\" text-anchor=\"middle\" font-size=\"13\">Number of QPUs (N)</text>\n";
    const double mid_y = (f.upper() + f.lower()) / 2;
    svg += "<text x=\"" + num(f.left() - 52) + "\" y=\"" + num(mid_y) + "\" text-anchor=\"middle\" font-size=\"13\"" +
           " transform=\"rotate(-90 " + num(f.left() - 52) + " " + num(mid_y) + ")\">" + y_label + "</text>\n";

    for (const auto& s : series)
    {
        const auto& pts  = success_panel ? s.success : s.attempts;
        const char* fill = s.simulated ? colour(s.policy) : "white";
        std::string coords;
        for (const auto& p : pts)
        {
            coords += (coords.empty() ? "" : " ") + num(f.px(p.n)) + "," + num(f.py(p.y));
        }
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(colour(s.policy)) + "\" stroke-width=\"2\"" +
               (s.simulated ? "" : " stroke-dasharray=\"6 4\"") + " points=\"" + coords + "\"/>\n";
        for (const auto& p : pts)
        {
            svg += "<circle cx=\"" + num(f.px(p.n)) + "\" cy=\"" + num(f.py(p.y)) + "\" r=\"3.5\" fill=\"" + fill +
                   "\" stroke=\"" + colour(s.policy) + "\"/>\n";
        }
    }

    double ly = f.upper() + 10;
    for (const auto& s : series)
    {
        const double lx = f.right() + 16;
        svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 26) + "\" y2=\"" + num(ly) +
               "\" stroke=\"" + colour(s.policy) + "\" stroke-width=\"2\"" +
               (s.simulated ? "" : " stroke-dasharray=\"6 4\"") + "/>\n";
        svg += "<text x=\"" + num(lx + 32) + "\" y=\"" + num(ly + 4) + "\" font-size=\"12\">" + series_name(s) +
               "</text>\n";
        ly += 20;
    }
}

} // namespace

std::string render_chart(std::span<const PointSummary> summaries, std::span<const AnalyticPoint> analytic)
{
    if (summaries.empty() && analytic.empty())
    {
        throw std::invalid_argument("chart needs at least one point");
    }

    // key: (analytic?, policy)
    std::map<std::pair<bool, PolicyKind>, Series> grouped;
    auto series_for = [&](PolicyKind policy, bool simulated) -> Series& {
        auto [it, inserted] = grouped.try_emplace({!simulated, policy});
        if (inserted)
        {
            it->second.policy    = policy;
            it->second.simulated = simulated;
        }
        return it->second;
    };
    for (const auto& s : summaries)
    {
        auto& series = series_for(s.policy, true);
        series.success.push_back({double(s.n), s.success_rate});
        series.attempts.push_back({double(s.n), s.mean_attempts});
    }
    for (const auto& a : analytic)
    {
        auto& series = series_for(a.policy, false);
        series.success.push_back({double(a.n), a.success_rate});
        series.attempts.push_back({double(a.n), a.mean_attempts});
    }

    std::vector<Series> series;
    double              n_min = INFINITY, n_max = 0, attempts_max = 0;
    for (auto& [key, s] : grouped)
    {
        auto by_n = [](const Point& a, const Point& b) { return a.n < b.n; };
        std::sort(s.success.begin(), s.success.end(), by_n);
        std::sort(s.attempts.begin(), s.attempts.end(), by_n);
        for (const auto& p : s.attempts)
        {
            n_min        = std::min(n_min, p.n);
            n_max        = std::max(n_max, p.n);
            attempts_max = std::max(attempts_max, p.y);
        }
        series.push_back(std::move(s));
    }
    // analytic (dashed) underneath, simulated on top
    std::reverse(series.begin(), series.end());

    double x_lo = std::log2(n_min);
    double x_hi = std::log2(n_max);
    if (x_hi - x_lo < 1e-9)
    {
        x_lo -= 1;
        x_hi += 1;
    }

    const Frame success{0, x_lo, x_hi, 0.0, 1.0};
    const Frame attempts{kPanelHeight, x_lo, x_hi, 0.0, nice_ceiling(attempts_max * 1.1)};

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
           num(2 * kPanelHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(2 * kPanelHeight) +
           "\" font-family=\"sans-serif\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    draw_panel(svg, success, series, true, "(a) Teleportation success rate vs. number of QPUs",
               "Teleportation success rate");
    draw_panel(svg, attempts, series, false, "(b) Average entanglement attempts per teleportation",
               "Avg. entanglement attempts");
    svg += "</svg>\n";
    return svg;
}

void emit_chart(const std::string& path, std::span<const PointSummary> summaries, std::span<const AnalyticPoint> analytic)
{
    const std::string body = render_chart(summaries, analytic);
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

} // namespace hubsim
