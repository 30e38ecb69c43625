#pragma once

#include <array>
#include <utility>
#include <vector>

#include "hypercolor/cell_complex.hpp"

namespace hypercolor {

/// Cubic graph with a proper 3-edge-coloring, as three fixed-point-free
/// involutions. Gluing a disk onto every bicolored cycle recovers the
/// trivalent 3-colorable cell complex, so this is the native encoding for
/// covering-space constructions.
struct CubicMap {
    int n = 0;
    std::array<std::vector<int>, 3> match;  // match[c][v] = partner of v along its color-c edge

    void validate() const;
    bool connected() const;
    /// Bicolored cycles avoiding color c (the faces that receive color c).
    /// Each cycle starts at its smallest vertex; steps alternate between the
    /// other two colors in enum order.
    std::vector<std::vector<int>> faces_of_color(Color c) const;
    /// (R,G,B)-face index triple per vertex, using per-color face numbering.
    std::vector<std::array<int, 3>> vertex_face_triples() const;
    bool has_duplicate_triples() const;
};

std::pair<CellComplex, Coloring> cubic_to_complex(const CubicMap& cm);
CubicMap cubic_from_complex(const CellComplex& cx, const Coloring& col);

/// The cube: six squares on the sphere, opposite faces sharing a color.
CubicMap cube_map();
/// Six hexagons tiling the torus.
CubicMap hex_torus_map();
/// Three p-gons on the genus-(p-2)/4 surface; requires p = 2 (mod 4).
CubicMap cyclic_three_face_map(int p);

/// Degree-m cover from a Z_m voltage per edge. voltage[c][v] is read at the
/// endpoint v with v < match[c][v]; traversing toward the larger endpoint
/// adds the voltage, the reverse subtracts it. Cover vertex (v,j) gets
/// index v*m + j.
CubicMap cyclic_cover(const CubicMap& base, int m,
                      const std::array<std::vector<int>, 3>& voltage);

/// Degree-m cover in which every face boundary lifts to a single cycle of m
/// times the length: every face's total voltage is a unit of Z_m. Throws
/// when no such voltage assignment exists.
CubicMap lengthening_cover(const CubicMap& base, int m);

/// Canonical connected degree-m cover whose faces keep their length.
/// Prefers covers in which no two vertices share their full face triple;
/// falls back to the first connected one.
CubicMap find_normal_cover(const CubicMap& base, int m, int solution_cap = 8192);

/// Deterministic complex for any (p, g) admitting a trivalent 3-colorable
/// tessellation, via explicit bases and covering constructions.
CellComplex structured_complex(int p, int g);

}  // namespace hypercolor
