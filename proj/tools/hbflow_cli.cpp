#include "hbflow/emit.hpp"
#include "hbflow/errors.hpp"
#include "hbflow/figures.hpp"
#include "hbflow/first_order.hpp"
#include "hbflow/force.hpp"
#include "hbflow/leading_order.hpp"
#include "hbflow/yield_surface.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct cli_options {
    std::vector<double> B_values;
    std::vector<double> n_values;
    double eps = 0.1;
    int r_grid = 100;
    int z_grid = 50;
    double tol_root = 0.0; ///< 0 = keep library default
    double tol_quad = 0.0;
    std::string out_path;
    std::string format = "csv";
};

void add_common_flags(CLI::App* cmd, cli_options& o) {
    cmd->add_option("--B", o.B_values,
                    "Bingham numbers (repeatable; default: figure-specific)");
    cmd->add_option("--n", o.n_values,
                    "power-law indices (repeatable; default: figure-specific)");
    cmd->add_option("--eps", o.eps, "aspect ratio in (0,1)")
        ->capture_default_str();
    cmd->add_option("--r-grid", o.r_grid, "radial sample count")
        ->capture_default_str();
    cmd->add_option("--z-grid", o.z_grid, "vertical sample count")
        ->capture_default_str();
    cmd->add_option("--tol-root", o.tol_root,
                    "root-solve tolerance (sets abs and rel)");
    cmd->add_option("--tol-quad", o.tol_quad,
                    "quadrature tolerance (sets abs and rel)");
    cmd->add_option("--out", o.out_path, "output path (default: stdout)");
    cmd->add_option("--format", o.format, "csv | json | svg")
        ->capture_default_str();
}

hbflow::sweep_spec to_spec(const cli_options& o) {
    hbflow::sweep_spec s;
    s.B_values = o.B_values;
    s.n_values = o.n_values;
    s.eps = o.eps;
    s.r_grid = o.r_grid;
    s.z_grid = o.z_grid;
    if (o.tol_root > 0.0)
        s.tol_root = hbflow::num::tolerance{o.tol_root, o.tol_root, 200};
    if (o.tol_quad > 0.0)
        s.tol_quad = hbflow::num::tolerance{o.tol_quad, o.tol_quad, 200};
    return s;
}

void print_value(const char* name, double v) {
    std::printf("%-14s %.15g\n", name, v);
}

int run_point(double B, double n, double eps, double r, double z, bool has_z,
              const cli_options& o) {
    using namespace hbflow;
    if (o.tol_root > 0.0)
        num::default_root_tol() = num::tolerance{o.tol_root, o.tol_root, 200};
    if (o.tol_quad > 0.0)
        num::default_quad_tol() = num::tolerance{o.tol_quad, o.tol_quad, 200};
    const fluid_params p(B, n, eps);
    std::printf("# B=%.15g n=%.15g eps=%.15g r=%.15g", B, n, eps, r);
    if (has_z) std::printf(" z=%.15g", z);
    std::printf("\n");

    const double z0 = z0_of_r(p, r);
    print_value("z0", z0);
    if (r > 0.0 && z0 < 1.0) {
        print_value("z0_prime", z0_prime(p, r, z0));
        print_value("u0", plug_velocity(p, r));
        print_value("u0_prime", plug_velocity_prime(p, r));
        print_value("eta", eta_of_r(p, r));
        print_value("g", g_of_r(p, r));
        print_value("p1_prime", p1_prime(p, r));
    }
    print_value("p0", pressure_zero(p, r));
    print_value("p1", p1_of_r(p, r));
    if (r > r_min && r <= 1.0) print_value("plate_stress", plate_stress(p, r));
    if (has_z && r > 0.0 && z0 < 1.0) {
        const field_sample fs = sample_leading(p, r, z);
        std::printf("%-14s %s\n", "region",
                    fs.region == flow_region::pseudo_plug ? "pseudo_plug"
                                                          : "shear");
        print_value("u0_field", fs.u0_val);
        print_value("tau_rz0", fs.tau_rz0);
        print_value("u1_field", u_first(p, r, z));
        print_value("tau_rz1", tau_rz_first(p, r, z));
        print_value("u_total", fs.u0_val + eps * u_first(p, r, z));
        print_value("tau_total", fs.tau_rz0 + eps * tau_rz_first(p, r, z));
        print_value("sigma_rr", sigma_rr(p, r, z));
    }
    const force_breakdown fb = total_force(p);
    print_value("F0", fb.F0);
    print_value("F1", fb.F1);
    print_value("p_R", fb.p_R);
    print_value("F_total", fb.F_total);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "hbflow: asymptotic squeeze-flow fields and figure datasets for a "
        "Herschel-Bulkley fluid between parallel disks"};
    app.require_subcommand(1);

    cli_options fig_opts;
    std::string figure_id;
    CLI::App* fig = app.add_subcommand(
        "figure", "compute one figure dataset (fig2|fig3|fig4a|fig4b|fig5|fig6)");
    fig->add_option("id", figure_id, "figure id")->required();
    add_common_flags(fig, fig_opts);

    cli_options sweep_opts;
    std::string quantity = "force";
    CLI::App* sw = app.add_subcommand(
        "sweep", "sweep one quantity over the (B, n) grid");
    sw->add_option("--quantity", quantity, "z0 | pressure | plate_stress | force")
        ->capture_default_str();
    add_common_flags(sw, sweep_opts);

    cli_options pt_opts;
    double pt_B = 1.0, pt_n = 1.0, pt_eps = 0.1, pt_r = 0.5, pt_z = 0.0;
    CLI::App* pt = app.add_subcommand(
        "point", "evaluate all fields at one (B, n, eps, r[, z]) point");
    pt->add_option("--B", pt_B, "Bingham number")->required();
    pt->add_option("--n", pt_n, "power-law index")->required();
    pt->add_option("--eps", pt_eps, "aspect ratio")->capture_default_str();
    auto* r_opt = pt->add_option("--r", pt_r, "radial coordinate in [0, 1]");
    r_opt->required();
    auto* z_opt = pt->add_option("--z", pt_z, "vertical coordinate in [0, 1]");
    pt->add_option("--tol-root", pt_opts.tol_root,
                   "root-solve tolerance (sets abs and rel)");
    pt->add_option("--tol-quad", pt_opts.tol_quad,
                   "quadrature tolerance (sets abs and rel)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (fig->parsed()) {
            const hbflow::figure_dataset d =
                hbflow::run_figure(to_spec(fig_opts), figure_id);
            hbflow::emit_file(d, fig_opts.format, fig_opts.out_path);
        } else if (sw->parsed()) {
            const hbflow::figure_dataset d =
                hbflow::run_sweep(to_spec(sweep_opts), quantity);
            hbflow::emit_file(d, sweep_opts.format, sweep_opts.out_path);
        } else if (pt->parsed()) {
            return run_point(pt_B, pt_n, pt_eps, pt_r, pt_z,
                             z_opt->count() > 0, pt_opts);
        }
    } catch (const hbflow::parameter_error& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const hbflow::solver_error& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
