#ifndef HBFLOW_FIGURES_HPP
#define HBFLOW_FIGURES_HPP

#include "hbflow/numerics.hpp"

#include <array>
#include <string>
#include <vector>

namespace hbflow {

/// Parameter sweep request. Empty B/n lists mean "apply the figure's
/// defaults"; run_figure/run_sweep reject empty lists only after defaults
/// have been applied.
struct sweep_spec {
    std::vector<double> B_values;
    std::vector<double> n_values;
    double eps = 0.1;
    int r_grid = 100;
    int z_grid = 50;
    num::tolerance tol_root; ///< recorded in metadata; applied process-wide by the CLI
    num::tolerance tol_quad;

    sweep_spec();
};

/// One named curve of (x, y) samples.
struct data_series {
    std::string label;
    std::vector<std::array<double, 2>> points;
};

/// A complete figure dataset plus the provenance needed to reproduce it.
struct figure_dataset {
    std::string figure_id; ///< fig2|fig3|fig4a|fig4b|fig5|fig6|sweep:<quantity>
    sweep_spec spec;       ///< parameters/tolerances actually used (defaults filled in)
    std::string version;   ///< code version string
    std::vector<data_series> series_list;
};

/// Version string embedded in every dataset.
const std::string& code_version();

/// Compute the dataset behind one of the standard figures:
///   fig2  — pseudo-yield surface z0(r) per (B, n); includes r = 0
///   fig3  — plate stress invariant: dashed B/z0, solid B/z0 − ε(p1'+g),
///           plus the (r0, B) marker points where the truncation crosses B
///   fig4a — plate pressure: dotted p0, solid p0 + εp1 (n = 0.5)
///   fig4b — total plate pressure per n
///   fig5  — force components F, F0, |εF1|, επp_R versus B (n = 1)
///   fig6  — total force versus B per n
/// Throws parameter_error for an unknown id; solver failures propagate with
/// the (B, n, r) coordinates attached.
figure_dataset run_figure(const sweep_spec& spec, const std::string& figure_id);

/// Generic sweep of one named quantity:
///   z0 | pressure | plate_stress : radial profiles, one series per (B, n)
///   force                        : F_total versus B, one series per n
figure_dataset run_sweep(const sweep_spec& spec, const std::string& quantity);

} // namespace hbflow

#endif
