#pragma once

#include <iosfwd>
#include <string>

#include "gkt/grid.hpp"

namespace gkt::io {

/// CSV with header `x[,y[,z]],value`, one row per grid point, axis 0 slowest.
GridFunction read_grid_csv(std::istream& in);
void write_grid_csv(std::ostream& out, const GridFunction& f);

/// Loads CSV or JSON by file extension (.csv / .json).
GridFunction load_grid_function(const std::string& path);

}  // namespace gkt::io
