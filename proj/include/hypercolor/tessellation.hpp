#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercolor/cell_complex.hpp"
#include "hypercolor/hypgeo.hpp"

namespace hypercolor {

struct SearchBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Checks whether (p, n_f) can carry a trivalent 3-colorable complex at all;
/// returns the reason it cannot, or nullopt when feasible. Odd-sided faces
/// and face counts not divisible by 3 are structurally impossible: the three
/// faces around any vertex are pairwise adjacent, so they need three distinct
/// colors, which forces equal color classes and even faces.
std::optional<std::string> color_infeasibility(int p, long n_f);

struct SearchOptions {
    int max_faces = 8;
    long node_budget = 20'000'000;
    bool exhaust = false;  // keep searching after the first solution
};

/// Backtracking search over orientation-respecting gluings of n_f labeled
/// p-gons, pruned by trivalent vertex cycles and face-coloring feasibility.
/// Returns the first valid complex in canonical search order.
CellComplex combinatorial_search(const TessellationSignature& sig, const SearchOptions& opts = {});

/// All pairwise non-isomorphic solutions (capped), canonical order.
std::vector<CellComplex> enumerate_complexes(const TessellationSignature& sig, int max_solutions,
                                             const SearchOptions& opts = {});

/// Deterministic proper 3-coloring of faces (BFS order backtracking) plus the
/// induced edge coloring. Throws "not 3-colorable" when none exists.
Coloring three_color(const CellComplex& cx);

ShrunkLattice shrunk_lattice(const CellComplex& cx, const Coloring& col, Color color);

ValidationReport validate_complex(const CellComplex& cx, const TessellationSignature* sig);

/// ---- Geometric builder -------------------------------------------------

struct Patch {
    TessellationSignature sig;
    struct PFace {
        Mobius frame;                    // maps the standard face here
        DiskPoint center;
        std::vector<DiskPoint> vertices;
    };
    std::vector<PFace> faces;
    double keep_radius = 0.0;
};

struct PatchOptions {
    double rotation = 0.0;        // extra rotation applied to the seed
    bool vertex_at_origin = false;
    long face_budget = 0;         // 0: spec default 10*n_f*(4g+1)
};

/// Breadth-first {p,3} patch around the origin covering the fundamental
/// polygon with a one-face-diameter margin.
Patch build_universal_patch(const TessellationSignature& sig, const FundamentalPolygon& poly,
                            const PatchOptions& opts = {});

struct QuotientOptions {
    double tol = 1e-9;
    int word_length = 2;
};

/// Quotient of the patch by the side-pairing group, by identifying cells
/// whose images under short pairing words coincide. Throws
/// "pairing-incompatible tessellation" when the result is not a closed
/// trivalent complex with the expected face count.
CellComplex quotient_by_pairings(const Patch& patch, const FundamentalPolygon& poly,
                                 const QuotientOptions& opts = {});

/// Re-runs the identification on an already-quotiented complex; returns the
/// number of additional merges (0 means the quotient is stable).
int quotient_stability(const CellComplex& cx, const FundamentalPolygon& poly,
                       const QuotientOptions& opts = {});

struct GeometricResult {
    CellComplex complex;
    double seed_rotation = 0.0;
    bool vertex_seed = false;
    std::string note;
};

struct GeometricOptions {
    int sweep_steps = -1;  // -1: spec default sweep up to k = 4g*p
    bool try_vertex_seed = true;
    QuotientOptions quotient;
};

/// Full geometric construction: alignment candidates are taken from face
/// centers one paired-side distance apart, then the uniform rotation sweep.
/// Throws when no alignment closes the quotient.
GeometricResult geometric_complex(const TessellationSignature& sig, const GeometricOptions& opts = {});

}  // namespace hypercolor
