#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypercolor/cell_complex.hpp"
#include "hypercolor/gf2.hpp"

namespace hypercolor {

/// CSS color code: one plaquette generator per face, shared by the X and Z
/// sectors. Qubits are the vertices of the complex, in canonical order.
struct ColorCode {
    int n = 0;
    BinaryMatrix H;                  // |F| x n face-vertex incidence (mod 2)
    std::vector<Color> face_colors;  // per row
    int genus = 0;
};

/// Face-vertex incidence over GF(2). A vertex met twice by one face drops
/// out of that row.
BinaryMatrix plaquette_matrix(const CellComplex& cx);

ColorCode plaquette_code(const CellComplex& cx, const Coloring& col);

/// k = n - 2 rank(H); throws "complex/code inconsistency" unless it equals
/// 4g = 4 - 2*chi.
int logical_count(const ColorCode& code, int g);

struct DependencyReport {
    bool row_sums_equal = false;     // per-color row sums all equal
    bool row_sums_all_ones = false;  // and equal to the all-ones vector
    int rank = 0;
    bool rank_deficit_two = false;   // rank == |F| - 2
    bool pass() const { return row_sums_equal && row_sums_all_ones && rank_deficit_two; }
};

DependencyReport color_dependencies(const ColorCode& code);

struct LogicalSet {
    std::vector<BitVec> x, z;  // k operators each
    BinaryMatrix pairing;      // x[i] . z[j] parities; identity when paired
};

/// Symplectic logical basis: representatives of ker(H)/rowspace(H) for the X
/// sector, with Z duals chosen so that x[i] anticommutes with z[j] iff i==j.
LogicalSet logical_basis(const ColorCode& code);

/// GF(2) sum of the link supports along a closed walk (each node entered as
/// often as exited). Throws "open string" otherwise.
BitVec string_operator(const ShrunkLattice& sl, const std::vector<int>& links, int n_qubits);

bool in_rowspace(const ColorCode& code, const BitVec& v);

/// Sparse parity-check interchange format (1-based indices, LF endings).
std::string to_alist(const BinaryMatrix& H);
std::string code_to_json(const ColorCode& code);

struct CodeReport {
    int p = 0, g = 0;
    long n_f = 0;
    int n = 0, k = 0;
    int d_estimate = 0;
    double ratio = 0.0;
    std::optional<int> d_exact;
    std::string d_status = "skipped";  // exact | upper-bound | skipped
    std::string builder;
    bool singleton_ok = false, singleton_saturated = false, hamming_ok = false;
};

std::string report_to_json(const CodeReport& rep);

}  // namespace hypercolor
