#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypercolor/hypgeo.hpp"

namespace hypercolor {

enum class Color : std::uint8_t { R = 0, G = 1, B = 2 };

const char* color_name(Color c);
Color color_from_name(const std::string& s);
/// The color different from both arguments (a != b required).
Color third_color(Color a, Color b);

/// Combinatorial closed-surface map: faces with cyclically ordered
/// boundaries, edges carrying their two incident face-sides.
struct CellComplex {
    struct Side {
        int face = -1;
        int pos = -1;  // boundary position: side runs vertices[pos] -> vertices[pos+1]
    };
    struct Edge {
        std::array<int, 2> v{-1, -1};
        std::array<Side, 2> sides{};
        std::array<int, 2> faces() const { return {sides[0].face, sides[1].face}; }
    };
    struct Face {
        std::vector<int> vertices;  // cyclic boundary
        std::vector<int> edges;     // edges[i] joins vertices[i] and vertices[i+1]
    };

    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<Face> faces;
    int genus = 0;  // set by builders from the Euler characteristic
    std::vector<std::complex<double>> vertex_pos;  // empty when not embedded
    /// Face-local corner coordinates (one fundamental-domain representative
    /// per face); needed because a vertex orbit has one stored position but
    /// each incident face sees its own preimage of it.
    std::vector<std::vector<std::complex<double>>> face_corner_pos;

    bool has_embedding() const { return !vertex_pos.empty(); }
    bool has_corner_geometry() const { return !face_corner_pos.empty(); }
    long euler_characteristic() const {
        return static_cast<long>(vertex_count) - static_cast<long>(edges.size()) +
               static_cast<long>(faces.size());
    }
    std::vector<int> vertex_degrees() const;
    /// Faces incident to each vertex, with multiplicity.
    std::vector<std::vector<int>> faces_at_vertices() const;
    std::vector<std::vector<int>> edges_at_vertices() const;
    bool face_connected() const;
    /// Face adjacency counts (shared edges), n_f x n_f.
    std::vector<std::vector<int>> face_adjacency() const;
};

/// Flips face boundary orders in place until every edge is traversed once in
/// each direction. Returns false when no consistent orientation exists.
bool orient_faces(CellComplex& cx);

/// Builds a complex from face boundary walks alone; edges and their side
/// records are derived. Every unordered vertex pair occurrence is matched
/// greedily in face order, which fixes parallel edges deterministically.
CellComplex complex_from_face_cycles(int vertex_count,
                                     const std::vector<std::vector<int>>& face_vertices);

struct Coloring {
    std::vector<Color> face_color;
    std::vector<Color> edge_color;
};

struct ShrunkLattice {
    Color color;
    struct Link {
        int a = -1, b = -1;               // incident nodes (faces of `color`)
        std::array<int, 2> qubits{-1, -1};  // two vertices of the parent edge
        int parent_edge = -1;
    };
    std::vector<int> nodes;   // parent face indices of `color`
    std::vector<Link> links;
    std::vector<int> faces;   // parent faces of the other two colors
    long euler_characteristic() const {
        return static_cast<long>(nodes.size()) - static_cast<long>(links.size()) +
               static_cast<long>(faces.size());
    }
};

struct ValidationReport {
    struct Check {
        std::string name;
        bool pass = false;
        bool skipped = false;
        std::string note;
    };
    std::vector<Check> checks;
    bool all_pass = true;

    void add(const std::string& name, bool pass, const std::string& note = "");
    void skip(const std::string& name, const std::string& note);
    const Check* find(const std::string& name) const;
};

/// Canonical face-adjacency multigraph certificate; equal strings mean
/// isomorphic multigraphs. Intended for small face counts.
std::string face_adjacency_certificate(const CellComplex& cx);

/// Canonical certificate of the oriented map itself (faces+gluing),
/// invariant under relabeling. O(darts^2).
std::string map_certificate(const CellComplex& cx);

std::string complex_to_json(const CellComplex& cx, const TessellationSignature* sig,
                            const Coloring* coloring);
struct ParsedComplex {
    CellComplex complex;
    std::optional<Coloring> coloring;
    int p = 0, q = 0, g = 0;
};
ParsedComplex complex_from_json(const std::string& text);

}  // namespace hypercolor
