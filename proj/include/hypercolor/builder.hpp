#pragma once

#include <string>

#include "hypercolor/cell_complex.hpp"
#include "hypercolor/tessellation.hpp"

namespace hypercolor {

enum class BuilderKind { Auto, Geometric, Combinatorial };

struct BuildOptions {
    BuilderKind builder = BuilderKind::Auto;
    int search_max_faces = 8;
    long search_budget = 20'000'000;
    /// Auto mode attempts the geometric quotient only at genus 2 unless set;
    /// higher-genus alignments have not been observed and the patches grow fast.
    bool attempt_geometric_all = false;
};

struct BuildResult {
    CellComplex complex;
    Coloring coloring;
    std::string method;  // geometric | search | structured | covers
    std::string geometric_note;
};

/// Builds the (p,g) complex and its coloring: geometric quotient when it
/// aligns, combinatorial search at small face counts, covering-space
/// construction beyond. Throws with the documented reasons when no
/// trivalent 3-colorable complex exists.
BuildResult build_complex(int p, int g, const BuildOptions& opts = {});

}  // namespace hypercolor
