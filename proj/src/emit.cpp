#include "hbflow/emit.hpp"
#include "hbflow/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hbflow {

namespace {

/// Shortest-faithful decimal for CSV/SVG; %.15g keeps runs byte-identical.
std::string num15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    q += '"';
    return q;
}

nlohmann::json tol_json(const num::tolerance& t) {
    return {{"abs_tol", t.abs_tol},
            {"rel_tol", t.rel_tol},
            {"max_iter", t.max_iter}};
}

} // namespace

void emit_csv(const figure_dataset& d, std::ostream& out) {
    out << "series,x,y\n";
    for (const auto& s : d.series_list)
        for (const auto& pt : s.points)
            out << csv_quote(s.label) << ',' << num15(pt[0]) << ','
                << num15(pt[1]) << '\n';
}

void emit_json(const figure_dataset& d, std::ostream& out) {
    nlohmann::json j;
    j["figure_id"] = d.figure_id;
    j["params"] = {{"B_values", d.spec.B_values},
                   {"n_values", d.spec.n_values},
                   {"eps", d.spec.eps},
                   {"r_grid", d.spec.r_grid},
                   {"z_grid", d.spec.z_grid},
                   {"tol_root", tol_json(d.spec.tol_root)},
                   {"tol_quad", tol_json(d.spec.tol_quad)},
                   {"version", d.version}};
    j["series"] = nlohmann::json::array();
    for (const auto& s : d.series_list) {
        nlohmann::json js;
        js["label"] = s.label;
        js["points"] = nlohmann::json::array();
        for (const auto& pt : s.points)
            js["points"].push_back({pt[0], pt[1]});
        j["series"].push_back(std::move(js));
    }
    out << j.dump(2) << '\n';
}

void emit_svg(const figure_dataset& d, std::ostream& out) {
    constexpr double width = 760.0, height = 500.0;
    constexpr double ml = 70.0, mr = 170.0, mt = 30.0, mb = 50.0;
    const double pw = width - ml - mr, ph = height - mt - mb;

    // Force figures span decades in B; use log x there.
    const bool logx = d.figure_id == "fig5" || d.figure_id == "fig6" ||
                      d.figure_id == "sweep:force";

    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const auto& s : d.series_list)
        for (const auto& pt : s.points) {
            if (first) {
                xmin = xmax = pt[0];
                ymin = ymax = pt[1];
                first = false;
            }
            xmin = std::min(xmin, pt[0]);
            xmax = std::max(xmax, pt[0]);
            ymin = std::min(ymin, pt[1]);
            ymax = std::max(ymax, pt[1]);
        }
    if (xmax <= xmin) xmax = xmin + 1.0;
    if (ymax <= ymin) ymax = ymin + 1.0;

    const auto xs = [&](double x) {
        const double t = logx ? (std::log(x) - std::log(xmin)) /
                                    (std::log(xmax) - std::log(xmin))
                              : (x - xmin) / (xmax - xmin);
        return ml + t * pw;
    };
    const auto ys = [&](double y) {
        return mt + (1.0 - (y - ymin) / (ymax - ymin)) * ph;
    };

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b",
                                    "#17becf", "#7f7f7f"};
    constexpr int ncolors = 8;

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
        << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << ml << "\" y=\"" << mt - 10.0
        << "\" font-size=\"14\" font-family=\"sans-serif\">" << d.figure_id
        << "</text>\n";
    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\""
        << ml + pw << "\" y2=\"" << mt + ph
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
        << "\" y2=\"" << mt + ph
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    // ticks
    for (int i = 0; i <= 5; ++i) {
        const double t = i / 5.0;
        const double xv = logx ? xmin * std::pow(xmax / xmin, t)
                               : xmin + t * (xmax - xmin);
        const double yv = ymin + t * (ymax - ymin);
        const double xp = ml + t * pw;
        const double yp = mt + (1.0 - t) * ph;
        out << "<line x1=\"" << xp << "\" y1=\"" << mt + ph << "\" x2=\"" << xp
            << "\" y2=\"" << mt + ph + 5.0 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << xp << "\" y=\"" << mt + ph + 20.0
            << "\" font-size=\"11\" font-family=\"sans-serif\" "
               "text-anchor=\"middle\">"
            << num15(std::round(xv * 1e6) / 1e6) << "</text>\n";
        out << "<line x1=\"" << ml - 5.0 << "\" y1=\"" << yp << "\" x2=\"" << ml
            << "\" y2=\"" << yp << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << ml - 8.0 << "\" y=\"" << yp + 4.0
            << "\" font-size=\"11\" font-family=\"sans-serif\" "
               "text-anchor=\"end\">"
            << num15(std::round(yv * 1e6) / 1e6) << "</text>\n";
    }
    // curves (marker-only series drawn as diamonds)
    int idx = 0;
    for (const auto& s : d.series_list) {
        const char* color = palette[idx % ncolors];
        ++idx;
        if (s.points.empty()) continue;
        if (s.points.size() == 1 || s.label.rfind("r0 ", 0) == 0) {
            for (const auto& pt : s.points) {
                const double x = xs(pt[0]), y = ys(pt[1]);
                out << "<path d=\"M " << x << ' ' << y - 5.0 << " L " << x + 5.0
                    << ' ' << y << " L " << x << ' ' << y + 5.0 << " L "
                    << x - 5.0 << ' ' << y << " Z\" fill=\"" << color
                    << "\"/>\n";
            }
        } else {
            out << "<polyline fill=\"none\" stroke=\"" << color
                << "\" stroke-width=\"1.5\" points=\"";
            for (const auto& pt : s.points)
                out << xs(pt[0]) << ',' << ys(pt[1]) << ' ';
            out << "\"/>\n";
        }
        const double ly = mt + 16.0 * idx;
        out << "<line x1=\"" << ml + pw + 10.0 << "\" y1=\"" << ly - 4.0
            << "\" x2=\"" << ml + pw + 30.0 << "\" y2=\"" << ly - 4.0
            << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << ml + pw + 35.0 << "\" y=\"" << ly
            << "\" font-size=\"11\" font-family=\"sans-serif\">" << s.label
            << "</text>\n";
    }
    out << "</svg>\n";
}

void emit_file(const figure_dataset& d, const std::string& format,
               const std::string& path) {
    const auto write = [&](std::ostream& out) {
        if (format == "csv")
            emit_csv(d, out);
        else if (format == "json")
            emit_json(d, out);
        else if (format == "svg")
            emit_svg(d, out);
        else
            throw parameter_error("emit_file: unknown format '" + format +
                                  "' (expected csv|json|svg)");
    };
    if (path.empty()) {
        write(std::cout);
        if (!std::cout)
            throw std::runtime_error("emit_file: failed writing to stdout");
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("emit_file: cannot open '" + path +
                                 "' for writing");
    write(out);
    out.flush();
    if (!out)
        throw std::runtime_error("emit_file: I/O failure writing '" + path +
                                 "'");
}

} // namespace hbflow
