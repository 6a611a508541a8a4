#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gkbo/harness.hpp"

namespace gkbo {

namespace {

namespace fs = std::filesystem;

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::ofstream open_out(const fs::path& p)
{
    std::ofstream f(p);
    if (!f) throw std::runtime_error("cannot write '" + p.string() + "'");
    return f;
}

void write_config_columns(std::ostream& os, const RunConfig& c)
{
    os << to_string(c.dynamics.method) << ',' << to_string(c.transition.kind) << ','
       << to_string(c.dynamics.consensus) << ',' << c.objective_id << ',' << c.dimension << ','
       << c.n_particles << ',' << fmt(c.dynamics.sigma_f) << ',' << fmt(c.dynamics.nu_f) << ','
       << fmt(c.dynamics.nu_l) << ',' << fmt(c.dynamics.epsilon) << ',' << fmt(c.dynamics.alpha)
       << ',' << fmt(c.transition.rho1_target) << ',' << fmt(c.transition.p_bar);
}

constexpr const char* config_header =
    "method,strategy,consensus,objective,d,N,sigma_F,nu_F,nu_L,epsilon,alpha,rho1_target,p_bar";

// ---- minimal SVG plotting -------------------------------------------------

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

const char* palette(std::size_t i)
{
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    return colors[i % 8];
}

void write_line_svg(const fs::path& path, const std::string& title, const std::string& xlabel,
                    const std::string& ylabel, const std::vector<Series>& series)
{
    const int w = 640, h = 480, ml = 70, mr = 20, mt = 40, mb = 50;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : series)
        for (const auto& [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (xmin > xmax) { xmin = 0; xmax = 1; }
    if (ymin > ymax) { ymin = 0; ymax = 1; }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    auto sx = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr); };
    auto sy = [&](double y) { return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb); };

    auto f = open_out(path);
    f << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h << "'>\n"
      << "<rect width='100%' height='100%' fill='white'/>\n"
      << "<text x='" << w / 2 << "' y='24' text-anchor='middle' font-size='16'>" << title
      << "</text>\n";
    // axes
    f << "<line x1='" << ml << "' y1='" << h - mb << "' x2='" << w - mr << "' y2='" << h - mb
      << "' stroke='black'/>\n"
      << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml << "' y2='" << h - mb
      << "' stroke='black'/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double x = xmin + (xmax - xmin) * i / 4.0;
        const double y = ymin + (ymax - ymin) * i / 4.0;
        f << "<text x='" << sx(x) << "' y='" << h - mb + 18
          << "' text-anchor='middle' font-size='11'>" << fmt(x) << "</text>\n"
          << "<text x='" << ml - 6 << "' y='" << sy(y) + 4
          << "' text-anchor='end' font-size='11'>" << fmt(y) << "</text>\n";
    }
    f << "<text x='" << (ml + w - mr) / 2 << "' y='" << h - 12
      << "' text-anchor='middle' font-size='13'>" << xlabel << "</text>\n"
      << "<text x='16' y='" << (mt + h - mb) / 2
      << "' text-anchor='middle' font-size='13' transform='rotate(-90 16 " << (mt + h - mb) / 2
      << ")'>" << ylabel << "</text>\n";
    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        f << "<polyline fill='none' stroke='" << palette(si) << "' stroke-width='1.5' points='";
        for (const auto& [x, y] : s.points) f << sx(x) << ',' << sy(y) << ' ';
        f << "'/>\n";
        for (const auto& [x, y] : s.points)
            f << "<circle cx='" << sx(x) << "' cy='" << sy(y) << "' r='3' fill='" << palette(si)
              << "'/>\n";
        f << "<text x='" << w - mr - 4 << "' y='" << mt + 16 * static_cast<int>(si) + 6
          << "' text-anchor='end' font-size='12' fill='" << palette(si) << "'>" << s.label
          << "</text>\n";
    }
    f << "</svg>\n";
}

void write_heatmap_svg(const fs::path& path, const std::string& title, const std::string& xlabel,
                       const std::string& ylabel, const std::vector<double>& xs,
                       const std::vector<double>& ys,
                       const std::map<std::pair<double, double>, double>& values)
{
    const int cell = 26, ml = 70, mt = 40, mb = 50, mr = 20;
    const int w = ml + mr + cell * static_cast<int>(xs.size());
    const int h = mt + mb + cell * static_cast<int>(ys.size());
    auto f = open_out(path);
    f << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h << "'>\n"
      << "<rect width='100%' height='100%' fill='white'/>\n"
      << "<text x='" << w / 2 << "' y='24' text-anchor='middle' font-size='16'>" << title
      << "</text>\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < ys.size(); ++j) {
            auto it = values.find({xs[i], ys[j]});
            const double v = it == values.end() ? 0.0 : it->second;
            // blue (0) -> yellow (1)
            const int r = static_cast<int>(255 * v);
            const int g = static_cast<int>(220 * v + 30 * (1 - v));
            const int b = static_cast<int>(160 * (1 - v));
            const int x = ml + cell * static_cast<int>(i);
            const int y = mt + cell * static_cast<int>(ys.size() - 1 - j);
            f << "<rect x='" << x << "' y='" << y << "' width='" << cell << "' height='" << cell
              << "' fill='rgb(" << r << ',' << g << ',' << b << ")'/>\n";
        }
    for (std::size_t i = 0; i < xs.size(); ++i)
        f << "<text x='" << ml + cell * static_cast<int>(i) + cell / 2 << "' y='" << h - mb + 16
          << "' text-anchor='middle' font-size='10'>" << fmt(xs[i]) << "</text>\n";
    for (std::size_t j = 0; j < ys.size(); ++j)
        f << "<text x='" << ml - 6 << "' y='"
          << mt + cell * static_cast<int>(ys.size() - 1 - j) + cell / 2 + 4
          << "' text-anchor='end' font-size='10'>" << fmt(ys[j]) << "</text>\n";
    f << "<text x='" << w / 2 << "' y='" << h - 12 << "' text-anchor='middle' font-size='13'>"
      << xlabel << "</text>\n"
      << "<text x='16' y='" << h / 2
      << "' text-anchor='middle' font-size='13' transform='rotate(-90 16 " << h / 2 << ")'>"
      << ylabel << "</text>\n</svg>\n";
}

// ---- summary.csv parsing (for plot re-rendering) --------------------------

struct SummaryTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t col(const std::string& name) const
    {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) throw std::runtime_error("summary.csv: missing column " + name);
        return static_cast<std::size_t>(it - header.begin());
    }
};

SummaryTable read_summary(const fs::path& path)
{
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read '" + path.string() + "'");
    SummaryTable t;
    std::string line;
    bool first = true;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (first) {
            t.header = fields;
            first = false;
        } else {
            t.rows.push_back(fields);
        }
    }
    return t;
}

} // namespace

void plot_from_summary(const std::string& out_dir)
{
    const fs::path dir(out_dir);
    const SummaryTable t = read_summary(dir / "summary.csv");
    if (t.rows.empty()) return;

    // Numeric parameter columns that actually vary become plot axes.
    const std::vector<std::string> candidates = {"sigma_F", "d",     "N",           "nu_F",
                                                 "nu_L",    "epsilon", "alpha",     "rho1_target",
                                                 "p_bar"};
    std::vector<std::string> axes;
    for (const auto& name : candidates) {
        const std::size_t c = t.col(name);
        std::set<std::string> distinct;
        for (const auto& r : t.rows) distinct.insert(r[c]);
        if (distinct.size() > 1) axes.push_back(name);
    }
    if (axes.empty() || axes.size() > 2) return; // nothing sensible to draw

    auto group_label = [&](const std::vector<std::string>& row) {
        return row[t.col("method")] + "/" + row[t.col("strategy")];
    };

    if (axes.size() == 1) {
        const std::size_t ax = t.col(axes[0]);
        for (const std::string metric : {"success_rate", "iter_mean"}) {
            const std::size_t mc = t.col(metric);
            std::map<std::string, Series> by_group;
            auto dat = open_out(dir / (metric + "_vs_" + axes[0] + ".dat"));
            dat << "# " << axes[0] << " " << metric << " group\n";
            for (const auto& row : t.rows) {
                const std::string g = group_label(row);
                auto& s = by_group[g];
                s.label = g;
                s.points.emplace_back(std::stod(row[ax]), std::stod(row[mc]));
                dat << row[ax] << ' ' << row[mc] << ' ' << g << '\n';
            }
            std::vector<Series> series;
            for (auto& [g, s] : by_group) {
                std::sort(s.points.begin(), s.points.end());
                series.push_back(std::move(s));
            }
            write_line_svg(dir / (metric + "_vs_" + axes[0] + ".svg"), metric + " vs " + axes[0],
                           axes[0], metric, series);
        }
        return;
    }

    // Two axes: success-rate heatmap (first group only, one file per group).
    const std::size_t ax = t.col(axes[0]), ay = t.col(axes[1]), sc = t.col("success_rate");
    std::map<std::string, std::map<std::pair<double, double>, double>> grids;
    std::set<double> xs, ys;
    for (const auto& row : t.rows) {
        const double x = std::stod(row[ax]), y = std::stod(row[ay]);
        xs.insert(x);
        ys.insert(y);
        grids[group_label(row)][{x, y}] = std::stod(row[sc]);
    }
    auto dat = open_out(dir / ("success_heatmap_" + axes[0] + "_" + axes[1] + ".dat"));
    dat << "# " << axes[0] << ' ' << axes[1] << " success_rate group\n";
    for (const auto& row : t.rows)
        dat << row[ax] << ' ' << row[ay] << ' ' << row[sc] << ' ' << group_label(row) << '\n';
    const std::vector<double> xv(xs.begin(), xs.end()), yv(ys.begin(), ys.end());
    for (const auto& [g, grid] : grids) {
        std::string safe = g;
        std::replace(safe.begin(), safe.end(), '/', '_');
        write_heatmap_svg(dir / ("success_heatmap_" + safe + ".svg"),
                          "success rate (" + g + ")", axes[0], axes[1], xv, yv, grid);
    }
}

void emit_report(const std::vector<ExperimentReport>& reports, const std::string& out_dir,
                 const EmitOptions& opts)
{
    const fs::path dir(out_dir);
    fs::create_directories(dir);

    {
        auto runs = open_out(dir / "runs.csv");
        runs << "experiment_id,run_id,seed," << config_header
             << ",iterations,stalled,success,final_accuracy,wall_time_ms\n";
        for (const auto& rep : reports) {
            for (std::size_t r = 0; r < rep.runs.size(); ++r) {
                const auto& run = rep.runs[r];
                runs << rep.grid_index << ',' << r << ',' << run.seed << ',';
                write_config_columns(runs, rep.config);
                runs << ',' << run.iterations_used << ',' << (run.stalled ? 1 : 0) << ','
                     << (run.success ? 1 : 0) << ',' << fmt(run.final_accuracy) << ','
                     << (opts.timing ? fmt(run.wall_time_ms) : "0") << '\n';
            }
        }
    }

    {
        auto summary = open_out(dir / "summary.csv");
        summary << "experiment_id," << config_header
                << ",M,success_rate,iter_mean,iter_min,iter_max\n";
        for (const auto& rep : reports) {
            summary << rep.grid_index << ',';
            write_config_columns(summary, rep.config);
            summary << ',' << rep.n_runs << ',' << fmt(rep.success_rate) << ','
                    << fmt(rep.iter_mean) << ',' << rep.iter_min << ',' << rep.iter_max << '\n';
        }
    }

    for (const auto& rep : reports) {
        for (std::size_t r = 0; r < rep.runs.size(); ++r) {
            const auto& run = rep.runs[r];
            if (run.trace.empty()) continue;
            fs::create_directories(dir / "traces");
            auto f = open_out(dir / "traces" /
                              ("exp" + std::to_string(rep.grid_index) + "_run" +
                               std::to_string(r) + ".csv"));
            f << "t,rho0,rho1,v0,v1,V,mean_gap_sq,accuracy\n";
            for (const auto& s : run.trace) {
                const auto gap = mean_gap_squared(s);
                f << fmt(s.t) << ',' << fmt(s.rho0) << ',' << fmt(s.rho1) << ',' << fmt(s.v0)
                  << ',' << fmt(s.v1) << ',' << fmt(s.V) << ','
                  << (gap ? fmt(*gap) : std::string("nan")) << ',' << fmt(s.accuracy) << '\n';
            }
        }
    }

    if (opts.plots) plot_from_summary(out_dir);
}

} // namespace gkbo
