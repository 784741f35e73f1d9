#ifndef HBFLOW_EMIT_HPP
#define HBFLOW_EMIT_HPP

#include "hbflow/figures.hpp"

#include <iosfwd>
#include <string>

namespace hbflow {

/// CSV: header row `series,x,y`, one row per sample, 15 significant digits.
/// Reruns of the same dataset produce byte-identical output.
void emit_csv(const figure_dataset& d, std::ostream& out);

/// JSON with keys figure_id, params (grids, eps, tolerances, version) and
/// series[{label, points[[x,y]]}]. Numbers round-trip exactly.
void emit_json(const figure_dataset& d, std::ostream& out);

/// Minimal static SVG line plot (axes, ticks, legend; log scaling applied
/// automatically for the force figures).
void emit_svg(const figure_dataset& d, std::ostream& out);

/// Dispatch on format ("csv" | "json" | "svg") and write to `path`, or to
/// stdout when path is empty. I/O failures raise std::runtime_error naming
/// the path.
void emit_file(const figure_dataset& d, const std::string& format, const std::string& path);

} // namespace hbflow

#endif
