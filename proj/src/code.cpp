#include "hypercolor/code.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hypercolor {

BinaryMatrix plaquette_matrix(const CellComplex& cx) {
    BinaryMatrix H(static_cast<int>(cx.faces.size()), cx.vertex_count);
    for (std::size_t f = 0; f < cx.faces.size(); ++f)
        for (int v : cx.faces[f].vertices) H.row(static_cast<int>(f)).flip(v);
    return H;
}

ColorCode plaquette_code(const CellComplex& cx, const Coloring& col) {
    ColorCode code;
    code.n = cx.vertex_count;
    code.H = plaquette_matrix(cx);
    code.face_colors = col.face_color;
    code.genus = cx.genus;
    return code;
}

int logical_count(const ColorCode& code, int g) {
    int r = rank_gf2(code.H);
    int k = code.n - 2 * r;
    if (k != 4 * g)
        throw std::runtime_error("complex/code inconsistency: k = " + std::to_string(k) +
                                 ", expected 4g = " + std::to_string(4 * g));
    return k;
}

DependencyReport color_dependencies(const ColorCode& code) {
    DependencyReport rep;
    BitVec sums[3] = {BitVec(code.n), BitVec(code.n), BitVec(code.n)};
    for (int i = 0; i < code.H.rows(); ++i)
        sums[static_cast<int>(code.face_colors[i])] ^= code.H.row(i);
    rep.row_sums_equal = (sums[0] == sums[1]) && (sums[1] == sums[2]);
    BitVec ones(code.n);
    for (int i = 0; i < code.n; ++i) ones.set(i);
    rep.row_sums_all_ones = (sums[0] == ones) && rep.row_sums_equal;
    rep.rank = rank_gf2(code.H);
    rep.rank_deficit_two = (rep.rank == code.H.rows() - 2);
    return rep;
}

LogicalSet logical_basis(const ColorCode& code) {
    GF2Span rowspace = row_span(code.H);
    auto kernel = kernel_basis(code.H);
    int k = static_cast<int>(kernel.size()) - rowspace.rank();
    if (k <= 0) throw std::runtime_error("logical basis: no logical qubits");

    // Kernel vectors independent modulo the rowspace, in deterministic order.
    std::vector<BitVec> reps;
    GF2Span accum = rowspace;
    for (const auto& v : kernel) {
        BitVec copy = v;
        if (accum.add(copy)) reps.push_back(v);
        if (static_cast<int>(reps.size()) == k) break;
    }
    if (static_cast<int>(reps.size()) != k)
        throw std::runtime_error("logical basis: dimension mismatch");

    // Pair Z duals against the X representatives: invert the overlap matrix.
    BinaryMatrix M(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (reps[i].dot(reps[j])) M.set(i, j);
    // Gauss-Jordan inversion over GF(2).
    BinaryMatrix aug = M;
    BinaryMatrix inv = BinaryMatrix::identity(k);
    for (int c = 0; c < k; ++c) {
        int pr = -1;
        for (int i = c; i < k; ++i)
            if (aug.get(i, c)) { pr = i; break; }
        if (pr < 0) throw std::runtime_error("logical basis: degenerate pairing");
        std::swap(aug.row(c), aug.row(pr));
        std::swap(inv.row(c), inv.row(pr));
        for (int i = 0; i < k; ++i)
            if (i != c && aug.get(i, c)) {
                aug.row(i) ^= aug.row(c);
                inv.row(i) ^= inv.row(c);
            }
    }
    LogicalSet out;
    out.x = reps;
    out.z.assign(k, BitVec(code.n));
    // z[j] = sum_i inv[i][j] * reps[i]  =>  x[i].z[j] = (M * inv)[i][j] = delta.
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i)
            if (inv.get(i, j)) out.z[j] ^= reps[i];
    out.pairing = BinaryMatrix(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (out.x[i].dot(out.z[j])) out.pairing.set(i, j);
    return out;
}

BitVec string_operator(const ShrunkLattice& sl, const std::vector<int>& links, int n_qubits) {
    std::vector<int> degree(sl.nodes.size(), 0);
    for (int l : links) {
        if (l < 0 || l >= static_cast<int>(sl.links.size()))
            throw std::invalid_argument("link index out of range");
        degree[sl.links[l].a]++;
        degree[sl.links[l].b]++;
    }
    for (int d : degree)
        if (d % 2 != 0) throw std::invalid_argument("open string: walk is not closed");
    BitVec support(n_qubits);
    for (int l : links) {
        support.flip(sl.links[l].qubits[0]);
        support.flip(sl.links[l].qubits[1]);
    }
    return support;
}

bool in_rowspace(const ColorCode& code, const BitVec& v) {
    return in_row_span(code.H, v);
}

std::string to_alist(const BinaryMatrix& H) {
    int m = H.rows(), n = H.cols();
    std::vector<std::vector<int>> col_list(n), row_list(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (H.get(i, j)) {
                col_list[j].push_back(i + 1);
                row_list[i].push_back(j + 1);
            }
    std::size_t maxc = 0, maxr = 0;
    for (auto& c : col_list) maxc = std::max(maxc, c.size());
    for (auto& r : row_list) maxr = std::max(maxr, r.size());
    std::ostringstream os;
    os << n << ' ' << m << '\n';
    os << maxc << ' ' << maxr << '\n';
    for (int j = 0; j < n; ++j) os << col_list[j].size() << (j + 1 < n ? " " : "\n");
    for (int i = 0; i < m; ++i) os << row_list[i].size() << (i + 1 < m ? " " : "\n");
    for (int j = 0; j < n; ++j) {
        for (std::size_t t = 0; t < col_list[j].size(); ++t)
            os << col_list[j][t] << (t + 1 < col_list[j].size() ? " " : "");
        os << '\n';
    }
    for (int i = 0; i < m; ++i) {
        for (std::size_t t = 0; t < row_list[i].size(); ++t)
            os << row_list[i][t] << (t + 1 < row_list[i].size() ? " " : "");
        os << '\n';
    }
    return os.str();
}

std::string code_to_json(const ColorCode& code) {
    nlohmann::json j;
    j["n"] = code.n;
    j["rows"] = code.H.rows();
    auto& sup = j["supports"] = nlohmann::json::array();
    for (int i = 0; i < code.H.rows(); ++i) sup.push_back(code.H.row(i).ones());
    auto& cols = j["colors"] = nlohmann::json::array();
    for (Color c : code.face_colors) cols.push_back(color_name(c));
    return j.dump(2);
}

std::string report_to_json(const CodeReport& rep) {
    nlohmann::json j;
    j["p"] = rep.p;
    j["g"] = rep.g;
    j["n_f"] = rep.n_f;
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["d_estimate"] = rep.d_estimate;
    j["ratio"] = rep.ratio;
    if (rep.d_exact) j["d_exact"] = *rep.d_exact;
    j["d_status"] = rep.d_status;
    j["builder"] = rep.builder;
    j["singleton_ok"] = rep.singleton_ok;
    j["singleton_saturated"] = rep.singleton_saturated;
    j["hamming_ok"] = rep.hamming_ok;
    return j.dump(2);
}

}  // namespace hypercolor
