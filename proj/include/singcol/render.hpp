#pragma once

#include <string>

#include "singcol/newton.hpp"

namespace singcol {

// Lattice grid with the staircase drawn; deterministic for fixed input.
std::string ascii_diagram(const NewtonDiagram& d);
std::string svg_diagram(const NewtonDiagram& d);

} // namespace singcol
