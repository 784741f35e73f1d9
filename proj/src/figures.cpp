#include "hbflow/figures.hpp"
#include "hbflow/errors.hpp"
#include "hbflow/first_order.hpp"
#include "hbflow/force.hpp"
#include "hbflow/leading_order.hpp"
#include "hbflow/numerics.hpp"
#include "hbflow/yield_surface.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hbflow {

namespace {

constexpr double pi = std::numbers::pi;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(15);
    os << v;
    return os.str();
}

std::string tag(double B, double n) {
    return "B=" + fmt(B) + " n=" + fmt(n);
}

/// Radial grid avoiding the axis: midpoints of r_grid equal cells on (0, 1].
std::vector<double> midpoint_grid(int count) {
    std::vector<double> r(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        r[static_cast<std::size_t>(i)] = (i + 0.5) / count;
    return r;
}

/// Inclusive grid used where r = 0 is well defined (z0(0) = 1 exactly).
std::vector<double> inclusive_grid(int count) {
    std::vector<double> r(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        r[static_cast<std::size_t>(i)] =
            static_cast<double>(i) / (count - 1);
    return r;
}

std::vector<double> log_grid(double lo, double hi, int count) {
    std::vector<double> v(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        v[static_cast<std::size_t>(i)] =
            lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
    return v;
}

fluid_params make_params(double B, double n, const sweep_spec& s) {
    return fluid_params(B, n, s.eps);
}

/// Wrap per-point evaluation so solver failures report where they happened.
template <typename F>
auto at_point(F&& f, double B, double n, double r) -> decltype(f()) {
    try {
        return f();
    } catch (const solver_error& e) {
        throw solver_error("at " + tag(B, n) + " r=" + fmt(r) + ": " + e.what());
    }
}

void apply_tolerances(const sweep_spec& s) {
    num::default_root_tol() = s.tol_root;
    num::default_quad_tol() = s.tol_quad;
}

figure_dataset make_dataset(const sweep_spec& s, const std::string& id) {
    figure_dataset d;
    d.figure_id = id;
    d.spec = s;
    d.version = code_version();
    return d;
}

figure_dataset figure_yield_surfaces(const sweep_spec& s) {
    figure_dataset d = make_dataset(s, "fig2");
    const auto grid = inclusive_grid(s.r_grid);
    for (double n : s.n_values)
        for (double B : s.B_values) {
            const fluid_params p = make_params(B, n, s);
            data_series ser;
            ser.label = "z0 " + tag(B, n);
            for (double r : grid)
                ser.points.push_back(
                    {r, at_point([&] { return z0_of_r(p, r); }, B, n, r)});
            d.series_list.push_back(std::move(ser));
        }
    return d;
}

figure_dataset figure_plate_stress(const sweep_spec& s) {
    figure_dataset d = make_dataset(s, "fig3");
    const auto grid = midpoint_grid(s.r_grid);
    for (double n : s.n_values)
        for (double B : s.B_values) {
            const fluid_params p = make_params(B, n, s);
            data_series tau0, tau;
            tau0.label = "tau0 " + tag(B, n);
            tau.label = "tau0+eps*tau1 " + tag(B, n);
            for (double r : grid) {
                tau0.points.push_back(
                    {r, at_point([&] { return B / z0_of_r(p, r); }, B, n, r)});
                if (r > r_min)
                    tau.points.push_back(
                        {r, at_point([&] { return plate_stress(p, r); }, B, n,
                                     r)});
            }
            d.series_list.push_back(std::move(tau0));
            d.series_list.push_back(std::move(tau));
            data_series marks;
            marks.label = "r0 " + tag(B, n);
            if (const auto r0 = find_r0(p)) marks.points.push_back({*r0, B});
            d.series_list.push_back(std::move(marks));
        }
    return d;
}

figure_dataset figure_pressure(const sweep_spec& s, bool with_leading) {
    figure_dataset d = make_dataset(s, with_leading ? "fig4a" : "fig4b");
    const auto grid = midpoint_grid(s.r_grid);
    for (double n : s.n_values)
        for (double B : s.B_values) {
            const fluid_params p = make_params(B, n, s);
            data_series total;
            total.label = "p0+eps*p1 " + tag(B, n);
            data_series leading;
            leading.label = "p0 " + tag(B, n);
            for (double r : grid) {
                const double p0 =
                    at_point([&] { return pressure_zero(p, r); }, B, n, r);
                total.points.push_back(
                    {r, at_point([&] { return p0 + s.eps * p1_of_r(p, r); }, B,
                                 n, r)});
                if (with_leading) leading.points.push_back({r, p0});
            }
            d.series_list.push_back(std::move(total));
            if (with_leading) d.series_list.push_back(std::move(leading));
        }
    return d;
}

figure_dataset figure_force_components(const sweep_spec& s) {
    figure_dataset d = make_dataset(s, "fig5");
    for (double n : s.n_values) {
        data_series f, f0, f1, pr;
        f.label = "F n=" + fmt(n);
        f0.label = "F0 n=" + fmt(n);
        f1.label = "|eps*F1| n=" + fmt(n);
        pr.label = "eps*pi*pR n=" + fmt(n);
        for (double B : s.B_values) {
            const fluid_params p = make_params(B, n, s);
            const force_breakdown fb =
                at_point([&] { return total_force(p); }, B, n, 1.0);
            f.points.push_back({B, fb.F_total});
            f0.points.push_back({B, fb.F0});
            f1.points.push_back({B, std::abs(s.eps * fb.F1)});
            pr.points.push_back({B, s.eps * pi * fb.p_R});
        }
        d.series_list.push_back(std::move(f));
        d.series_list.push_back(std::move(f0));
        d.series_list.push_back(std::move(f1));
        d.series_list.push_back(std::move(pr));
    }
    return d;
}

figure_dataset figure_force_vs_index(const sweep_spec& s) {
    figure_dataset d = make_dataset(s, "fig6");
    for (double n : s.n_values) {
        data_series f;
        f.label = "F n=" + fmt(n);
        for (double B : s.B_values) {
            const fluid_params p = make_params(B, n, s);
            f.points.push_back(
                {B, at_point([&] { return total_force(p); }, B, n, 1.0)
                        .F_total});
        }
        d.series_list.push_back(std::move(f));
    }
    return d;
}

} // namespace

sweep_spec::sweep_spec()
    : tol_root(num::tolerance{}), tol_quad(num::tolerance{}) {}

const std::string& code_version() {
    static const std::string v = "hbflow 1.0.0";
    return v;
}

figure_dataset run_figure(const sweep_spec& spec_in, const std::string& figure_id) {
    sweep_spec s = spec_in;
    if (s.r_grid < 2 || s.z_grid < 2)
        throw parameter_error("run_figure: grids must have at least 2 points");
    if (s.eps <= 0.0 || s.eps >= 1.0)
        throw parameter_error("run_figure: eps must lie in (0, 1)");
    // Figure-specific defaults fill whatever the caller left empty.
    if (figure_id == "fig2") {
        if (s.B_values.empty()) s.B_values = {0.01, 0.1, 1.0, 10.0};
        if (s.n_values.empty()) s.n_values = {0.25, 0.5, 1.0};
    } else if (figure_id == "fig3" || figure_id == "fig4a") {
        if (s.B_values.empty()) s.B_values = {0.01, 0.1, 1.0, 10.0};
        if (s.n_values.empty()) s.n_values = {0.5};
    } else if (figure_id == "fig4b") {
        if (s.B_values.empty()) s.B_values = {0.01, 0.1, 1.0, 10.0};
        if (s.n_values.empty()) s.n_values = {0.5, 1.0, 1.5};
    } else if (figure_id == "fig5") {
        if (s.B_values.empty()) s.B_values = log_grid(0.01, 100.0, 25);
        if (s.n_values.empty()) s.n_values = {1.0};
    } else if (figure_id == "fig6") {
        if (s.B_values.empty()) s.B_values = log_grid(0.01, 100.0, 25);
        if (s.n_values.empty()) s.n_values = {0.25, 0.5, 1.0, 1.5};
    } else {
        throw parameter_error("run_figure: unknown figure id '" + figure_id +
                              "' (expected fig2|fig3|fig4a|fig4b|fig5|fig6)");
    }
    if (s.B_values.empty() || s.n_values.empty())
        throw parameter_error("run_figure: parameter lists must be non-empty");
    apply_tolerances(s);
    if (figure_id == "fig2") return figure_yield_surfaces(s);
    if (figure_id == "fig3") return figure_plate_stress(s);
    if (figure_id == "fig4a") return figure_pressure(s, true);
    if (figure_id == "fig4b") return figure_pressure(s, false);
    if (figure_id == "fig5") return figure_force_components(s);
    return figure_force_vs_index(s);
}

figure_dataset run_sweep(const sweep_spec& spec_in, const std::string& quantity) {
    sweep_spec s = spec_in;
    if (s.B_values.empty()) s.B_values = {0.01, 0.1, 1.0, 10.0};
    if (s.n_values.empty()) s.n_values = {0.5};
    if (s.r_grid < 2)
        throw parameter_error("run_sweep: r_grid must have at least 2 points");
    apply_tolerances(s);
    figure_dataset d = make_dataset(s, "sweep:" + quantity);
    if (quantity == "force") {
        for (double n : s.n_values) {
            data_series ser;
            ser.label = "F n=" + fmt(n);
            for (double B : s.B_values) {
                const fluid_params p = make_params(B, n, s);
                ser.points.push_back(
                    {B, at_point([&] { return total_force(p); }, B, n, 1.0)
                            .F_total});
            }
            d.series_list.push_back(std::move(ser));
        }
        return d;
    }
    const bool is_z0 = quantity == "z0";
    const bool is_pressure = quantity == "pressure";
    const bool is_plate = quantity == "plate_stress";
    if (!is_z0 && !is_pressure && !is_plate)
        throw parameter_error(
            "run_sweep: unknown quantity '" + quantity +
            "' (expected z0|pressure|plate_stress|force)");
    const auto grid = is_z0 ? inclusive_grid(s.r_grid) : midpoint_grid(s.r_grid);
    for (double n : s.n_values)
        for (double B : s.B_values) {
            const fluid_params p = make_params(B, n, s);
            data_series ser;
            ser.label = quantity + " " + tag(B, n);
            for (double r : grid) {
                if (is_plate && r <= r_min) continue;
                const double y = at_point(
                    [&] {
                        if (is_z0) return z0_of_r(p, r);
                        if (is_pressure)
                            return pressure_zero(p, r) + s.eps * p1_of_r(p, r);
                        return plate_stress(p, r);
                    },
                    B, n, r);
                ser.points.push_back({r, y});
            }
            d.series_list.push_back(std::move(ser));
        }
    return d;
}

} // namespace hbflow
