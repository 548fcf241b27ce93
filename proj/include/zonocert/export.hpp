#pragma once

#include "zonocert/dicing.hpp"
#include "zonocert/zonotope.hpp"

#include <string>

namespace zonocert {

enum class ExportFormat { Svg, Obj };

struct ExportOptions {
  ExportFormat format = ExportFormat::Svg;
  unsigned patch_radius = 0;
  int digits = 12; // significant digits of emitted coordinates
};

/// Significant digits from ZONOCERT_PRECISION, else 12.
int default_render_digits();

/// DV cell of a dicing. SVG (d = 2): the cell, its translates by lattice
/// points with basis coordinates in [-r, r], and the facet vectors as arrows.
/// OBJ (d = 3): zonotope vertices and one polygon per facet, for the cell and
/// each translate. Throws Error{DimensionMismatch}.
std::string export_geometry(const NormalSet& ns, const ExportOptions& options);

/// Bare zonotope without a lattice; only patch_radius = 0 is meaningful and
/// SVG output carries no arrows.
std::string export_geometry(const Zonotope& z, const ExportOptions& options);

} // namespace zonocert
