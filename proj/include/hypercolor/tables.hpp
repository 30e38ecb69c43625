#pragma once

#include <string>
#include <vector>

namespace hypercolor {

/// One row of a per-genus parameter table. Code columns are filled only when
/// a trivalent 3-colorable tessellation exists for the row.
struct TableRow {
    int p = 0, q = 3;
    long n_f = 0;
    bool code_row = false;
    double ar = 0.0;
    double ratio = 0.0;  // d_h / AR
    int n = 0, k = 0, d = 0;
};

/// All p with an integer face count for this genus, ascending; code columns
/// derived from first principles (n = p*n_f/3, k = 4g, d from the geometric
/// estimate).
std::vector<TableRow> genus_table(int g, int p_max = 256);

std::string table_to_csv(int g, const std::vector<TableRow>& rows);
std::string table_to_markdown(int g, const std::vector<TableRow>& rows);
std::string table_to_json(int g, const std::vector<TableRow>& rows);

/// ---- Bundled reference values -------------------------------------------
/// Published parameter tables this construction reproduces; used only for
/// cross-checking, never inside computation paths.

struct ReferenceRow {
    int p;
    long n_f;
    double ar;
    int ar_decimals;
    double ratio;  // NaN when not printed in the source
    int ratio_decimals;
    int n, k, d;
};

struct ReferenceTable {
    int g;
    double d_h;  // NaN when not printed
    int d_h_decimals;
    std::vector<ReferenceRow> rows;
};

const std::vector<ReferenceTable>& reference_tables();

struct CellDiff {
    int g = 0, p = 0;
    std::string column;
    double computed = 0.0, printed = 0.0;
    bool match = false;
    /// A real-valued mismatch that equals another row's printed value to
    /// printed precision (a transcription defect in the source table).
    bool transposed = false;
};

/// Per-cell comparison of the computed genus table against the bundled
/// reference rows. Only rows present in the reference are compared.
std::vector<CellDiff> compare_to_reference(int g);

}  // namespace hypercolor
