#pragma once

#include <string>
#include <vector>

#include "hypercolor/cell_complex.hpp"
#include "hypercolor/hypgeo.hpp"

namespace hypercolor {

struct SvgOptions {
    int size = 800;
    int samples_per_edge = 16;
    std::vector<int> highlight_qubits;  // drawn as marked circles
};

/// Disk-model picture of an embedded complex: unit circle frame, colored
/// faces with geodesic edges, the fundamental polygon outline, and optional
/// highlighted qubits.
std::string complex_to_svg(const CellComplex& cx, const Coloring& col,
                           const FundamentalPolygon* poly, const SvgOptions& opts = {});

}  // namespace hypercolor
