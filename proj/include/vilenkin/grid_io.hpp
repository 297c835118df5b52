#pragma once

// Plain-text grid files:
//   # base=<spec> resolution=<N> dims=<1|2> [kind=spectrum]
//   re,im            one line per cell, row-major for 2D

#include <iosfwd>
#include <string>
#include <variant>

#include "vilenkin/field.hpp"

namespace vilenkin {

using GridData = std::variant<GridFunction1D, GridFunction2D, Spectrum1D, Spectrum2D>;

void write_grid(std::ostream& out, const GridFunction1D& f);
void write_grid(std::ostream& out, const GridFunction2D& f);
void write_grid(std::ostream& out, const Spectrum1D& f);
void write_grid(std::ostream& out, const Spectrum2D& f);

/// Throws std::runtime_error on a malformed header, a bad line or a wrong cell count.
GridData read_grid(std::istream& in);
GridData read_grid_file(const std::string& path);

}  // namespace vilenkin
