#include "hypercolor/covers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <numeric>
#include <stdexcept>

#include "hypercolor/gf2.hpp"

namespace hypercolor {

void CubicMap::validate() const {
    for (int c = 0; c < 3; ++c) {
        if (static_cast<int>(match[c].size()) != n)
            throw std::invalid_argument("cubic map: wrong matching size");
        for (int v = 0; v < n; ++v) {
            int w = match[c][v];
            if (w < 0 || w >= n || w == v || match[c][w] != v)
                throw std::invalid_argument("cubic map: not a fixed-point-free involution");
        }
    }
}

bool CubicMap::connected() const {
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int c = 0; c < 3; ++c) {
            int w = match[c][v];
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

std::vector<std::vector<int>> CubicMap::faces_of_color(Color c) const {
    int ci = static_cast<int>(c);
    int c1 = -1, c2 = -1;
    for (int k = 0; k < 3; ++k) {
        if (k == ci) continue;
        (c1 < 0 ? c1 : c2) = k;
    }
    std::vector<std::vector<int>> out;
    std::vector<char> seen(n, 0);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<int> cyc;
        int v = start;
        int step = 0;
        do {
            cyc.push_back(v);
            seen[v] = 1;
            v = (step % 2 == 0) ? match[c1][v] : match[c2][v];
            ++step;
        } while (!(v == start && step % 2 == 0));
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<std::array<int, 3>> CubicMap::vertex_face_triples() const {
    std::vector<std::array<int, 3>> t(n, {-1, -1, -1});
    for (int c = 0; c < 3; ++c) {
        auto fs = faces_of_color(static_cast<Color>(c));
        for (std::size_t f = 0; f < fs.size(); ++f)
            for (int v : fs[f]) t[v][c] = static_cast<int>(f);
    }
    return t;
}

bool CubicMap::has_duplicate_triples() const {
    auto t = vertex_face_triples();
    std::sort(t.begin(), t.end());
    return std::adjacent_find(t.begin(), t.end()) != t.end();
}

std::pair<CellComplex, Coloring> cubic_to_complex(const CubicMap& cm) {
    cm.validate();
    CellComplex cx;
    cx.vertex_count = cm.n;
    Coloring col;

    std::map<std::pair<int, int>, int> edge_id;  // (color, min endpoint) -> id
    for (int c = 0; c < 3; ++c)
        for (int v = 0; v < cm.n; ++v) {
            int w = cm.match[c][v];
            if (v < w) {
                int id = static_cast<int>(cx.edges.size());
                CellComplex::Edge e;
                e.v = {v, w};
                cx.edges.push_back(e);
                col.edge_color.push_back(static_cast<Color>(c));
                edge_id[{c, v}] = id;
            }
        }

    auto eid = [&](int c, int a, int b) { return edge_id.at({c, std::min(a, b)}); };
    std::vector<int> side_fill(cx.edges.size(), 0);
    for (int c = 0; c < 3; ++c) {
        int c1 = -1, c2 = -1;
        for (int k = 0; k < 3; ++k) {
            if (k == c) continue;
            (c1 < 0 ? c1 : c2) = k;
        }
        auto cycles = cm.faces_of_color(static_cast<Color>(c));
        for (auto& cyc : cycles) {
            int fi = static_cast<int>(cx.faces.size());
            CellComplex::Face face;
            face.vertices = cyc;
            face.edges.resize(cyc.size());
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
                int step_color = (i % 2 == 0) ? c1 : c2;
                int e = eid(step_color, a, b);
                face.edges[i] = e;
                if (side_fill[e] >= 2) throw std::logic_error("edge with more than two sides");
                cx.edges[e].sides[side_fill[e]++] = {fi, static_cast<int>(i)};
            }
            cx.faces.push_back(std::move(face));
            col.face_color.push_back(static_cast<Color>(c));
        }
    }
    for (int filled : side_fill)
        if (filled != 2) throw std::logic_error("edge with missing side");

    if (!orient_faces(cx)) throw std::runtime_error("cubic map complex is non-orientable");
    long chi = cx.euler_characteristic();
    if (chi % 2 != 0) throw std::logic_error("odd Euler characteristic");
    cx.genus = static_cast<int>((2 - chi) / 2);
    return {std::move(cx), std::move(col)};
}

CubicMap cubic_from_complex(const CellComplex& cx, const Coloring& col) {
    CubicMap cm;
    cm.n = cx.vertex_count;
    for (int c = 0; c < 3; ++c) cm.match[c].assign(cm.n, -1);
    for (std::size_t e = 0; e < cx.edges.size(); ++e) {
        int c = static_cast<int>(col.edge_color[e]);
        int a = cx.edges[e].v[0], b = cx.edges[e].v[1];
        if (cm.match[c][a] != -1 || cm.match[c][b] != -1)
            throw std::invalid_argument("vertex with two edges of one color");
        cm.match[c][a] = b;
        cm.match[c][b] = a;
    }
    cm.validate();
    return cm;
}

CubicMap cube_map() {
    // Vertices are corner bit-triples (x,y,z) -> 4x+2y+z; colors by axis.
    CubicMap cm;
    cm.n = 8;
    for (int v = 0; v < 8; ++v) {
        cm.match[0].push_back(v ^ 4);  // R: x-flip
        cm.match[1].push_back(v ^ 2);  // G: y-flip
        cm.match[2].push_back(v ^ 1);  // B: z-flip
    }
    cm.validate();
    return cm;
}

CubicMap hex_torus_map() {
    // Vertices (i, s), i in Z_6, s in {0,1}, index 2i+s.
    CubicMap cm;
    cm.n = 12;
    for (int c = 0; c < 3; ++c) cm.match[c].assign(12, -1);
    auto idx = [](int i, int s) { return 2 * (((i % 6) + 6) % 6) + s; };
    for (int i = 0; i < 6; ++i) {
        cm.match[0][idx(i, 0)] = idx(i, 1);      // R
        cm.match[0][idx(i, 1)] = idx(i, 0);
        cm.match[1][idx(i, 1)] = idx(i + 2, 0);  // G
        cm.match[1][idx(i + 2, 0)] = idx(i, 1);
        cm.match[2][idx(i, 1)] = idx(i + 4, 0);  // B
        cm.match[2][idx(i + 4, 0)] = idx(i, 1);
    }
    cm.validate();
    return cm;
}

CubicMap cyclic_three_face_map(int p) {
    if (p < 10 || p % 4 != 2)
        throw std::invalid_argument("three-face complexes need p = 2 (mod 4), p >= 10");
    CubicMap cm;
    cm.n = p;
    for (int c = 0; c < 3; ++c) cm.match[c].assign(p, -1);
    for (int i = 0; i < p / 2; ++i) {
        cm.match[0][2 * i] = 2 * i + 1;  // R pairs (2i, 2i+1)
        cm.match[0][2 * i + 1] = 2 * i;
        int a = (2 * i + 1) % p, b = (2 * i + 2) % p;  // G pairs (odd, odd+1)
        cm.match[1][a] = b;
        cm.match[1][b] = a;
    }
    for (int v = 0; v < p; ++v) cm.match[2][v] = (v + p / 2) % p;  // B: antipodal
    cm.validate();
    return cm;
}

namespace {

int voltage_of_step(const std::array<std::vector<int>, 3>& voltage, int c, int from, int to,
                    int m) {
    int raw = voltage[c][std::min(from, to)];
    int val = (from < to) ? raw : (m - raw) % m;
    return val;
}

}  // namespace

CubicMap cyclic_cover(const CubicMap& base, int m,
                      const std::array<std::vector<int>, 3>& voltage) {
    if (m < 1) throw std::invalid_argument("cover degree must be positive");
    CubicMap cm;
    cm.n = base.n * m;
    for (int c = 0; c < 3; ++c) {
        cm.match[c].assign(cm.n, -1);
        for (int v = 0; v < base.n; ++v) {
            int w = base.match[c][v];
            int phi = voltage_of_step(voltage, c, v, w, m);
            for (int j = 0; j < m; ++j) cm.match[c][v * m + j] = w * m + ((j + phi) % m);
        }
    }
    cm.validate();
    return cm;
}

namespace {

struct EdgeIndex {
    // Canonical edge list of a cubic map: (color, min endpoint).
    std::vector<std::pair<int, int>> edges;
    std::map<std::pair<int, int>, int> id;

    explicit EdgeIndex(const CubicMap& cm) {
        for (int c = 0; c < 3; ++c)
            for (int v = 0; v < cm.n; ++v)
                if (v < cm.match[c][v]) {
                    id[{c, v}] = static_cast<int>(edges.size());
                    edges.emplace_back(c, v);
                }
    }
    int of(int c, int a, int b) const { return id.at({c, std::min(a, b)}); }
};

// Directed boundary walks of every face: steps (edge id, +1/-1 toward the
// larger endpoint).
std::vector<std::vector<std::pair<int, int>>> face_walks(const CubicMap& cm,
                                                         const EdgeIndex& ei) {
    std::vector<std::vector<std::pair<int, int>>> walks;
    for (int c = 0; c < 3; ++c) {
        int c1 = -1, c2 = -1;
        for (int k = 0; k < 3; ++k) {
            if (k == c) continue;
            (c1 < 0 ? c1 : c2) = k;
        }
        for (auto& cyc : cm.faces_of_color(static_cast<Color>(c))) {
            std::vector<std::pair<int, int>> walk;
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
                int sc = (i % 2 == 0) ? c1 : c2;
                walk.emplace_back(ei.of(sc, a, b), a < b ? +1 : -1);
            }
            walks.push_back(std::move(walk));
        }
    }
    return walks;
}

std::vector<char> spanning_tree_edges(const CubicMap& cm, const EdgeIndex& ei) {
    std::vector<char> in_tree(ei.edges.size(), 0);
    std::vector<char> seen(cm.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int c = 0; c < 3; ++c) {
            int w = cm.match[c][v];
            if (!seen[w]) {
                seen[w] = 1;
                in_tree[ei.of(c, v, w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return in_tree;
}

std::array<std::vector<int>, 3> assemble_voltage(const CubicMap& cm, const EdgeIndex& ei,
                                                 const std::vector<int>& values) {
    std::array<std::vector<int>, 3> voltage;
    for (int c = 0; c < 3; ++c) voltage[c].assign(cm.n, 0);
    for (std::size_t e = 0; e < ei.edges.size(); ++e)
        voltage[ei.edges[e].first][ei.edges[e].second] = values[e];
    return voltage;
}

}  // namespace

CubicMap lengthening_cover(const CubicMap& base, int m) {
    base.validate();
    if (m < 2) throw std::invalid_argument("lengthening cover needs m >= 2");
    EdgeIndex ei(base);
    auto walks = face_walks(base, ei);
    auto in_tree = spanning_tree_edges(base, ei);
    int ne = static_cast<int>(ei.edges.size());

    std::vector<int> free_edges;
    for (int e = 0; e < ne; ++e)
        if (!in_tree[e]) free_edges.push_back(e);
    std::vector<int> free_pos(ne, -1);
    for (std::size_t i = 0; i < free_edges.size(); ++i)
        free_pos[free_edges[i]] = static_cast<int>(i);

    // Per face: signed free-edge coefficients; the face sum must be a unit of
    // Z_m so the boundary lifts to one cycle of m times the length.
    struct Face {
        std::vector<std::pair<int, int>> terms;
        int hi = -1;
    };
    std::vector<Face> cons;
    for (auto& w : walks) {
        std::map<int, int> coeff;
        for (auto [e, sgn] : w)
            if (free_pos[e] >= 0) coeff[free_pos[e]] += sgn;
        Face fc;
        for (auto [idx, cf] : coeff) {
            int c = ((cf % m) + m) % m;
            if (c != 0) {
                fc.terms.emplace_back(idx, c);
                fc.hi = std::max(fc.hi, idx);
            }
        }
        if (fc.hi < 0) throw std::runtime_error("lengthening cover: face with constant sum");
        cons.push_back(std::move(fc));
    }
    std::vector<std::vector<int>> check_after(free_edges.size());
    for (std::size_t f = 0; f < cons.size(); ++f) check_after[cons[f].hi].push_back(static_cast<int>(f));

    std::vector<int> assign(free_edges.size(), 0);
    std::function<bool(std::size_t)> dfs = [&](std::size_t pos) -> bool {
        if (pos == free_edges.size()) return true;
        for (int val = 0; val < m; ++val) {
            assign[pos] = val;
            bool ok = true;
            for (int f : check_after[pos]) {
                int sum = 0;
                for (auto [idx, cf] : cons[f].terms) sum += cf * assign[idx];
                if (std::gcd(sum % m, m) != 1) {
                    ok = false;
                    break;
                }
            }
            if (ok && dfs(pos + 1)) return true;
        }
        return false;
    };
    if (!dfs(0)) throw std::runtime_error("lengthening cover: no unit face-sum assignment");

    std::vector<int> values(ne, 0);
    for (std::size_t i = 0; i < free_edges.size(); ++i) values[free_edges[i]] = assign[i];
    auto voltage = assemble_voltage(base, ei, values);
    CubicMap cover = cyclic_cover(base, m, voltage);
    if (!cover.connected()) throw std::runtime_error("lengthening cover is disconnected");
    return cover;
}

CubicMap find_normal_cover(const CubicMap& base, int m, int solution_cap) {
    base.validate();
    if (!base.connected()) throw std::invalid_argument("base must be connected");
    EdgeIndex ei(base);
    auto walks = face_walks(base, ei);
    auto in_tree = spanning_tree_edges(base, ei);
    int ne = static_cast<int>(ei.edges.size());

    std::vector<int> free_edges;
    for (int e = 0; e < ne; ++e)
        if (!in_tree[e]) free_edges.push_back(e);
    std::vector<int> free_pos(ne, -1);
    for (std::size_t i = 0; i < free_edges.size(); ++i) free_pos[free_edges[i]] = static_cast<int>(i);

    // Per face: signed coefficients of the free edges.
    struct FaceConstraint {
        std::vector<std::pair<int, int>> terms;  // (free index, coeff)
        int last_term_assigned = 0;
    };
    std::vector<FaceConstraint> cons;
    for (auto& w : walks) {
        std::map<int, int> coeff;
        for (auto [e, sgn] : w)
            if (free_pos[e] >= 0) coeff[free_pos[e]] += sgn;
        FaceConstraint fc;
        for (auto [idx, cf] : coeff) {
            int c = ((cf % m) + m) % m;
            fc.terms.emplace_back(idx, c);
        }
        cons.push_back(std::move(fc));
    }
    // Constraint becomes checkable once its highest-index free edge is set.
    std::vector<std::vector<int>> check_after(free_edges.size());
    std::vector<int> constant_cons;
    for (std::size_t f = 0; f < cons.size(); ++f) {
        int hi = -1;
        for (auto [idx, cf] : cons[f].terms)
            if (cf != 0) hi = std::max(hi, idx);
        if (hi < 0) constant_cons.push_back(static_cast<int>(f));
        else check_after[hi].push_back(static_cast<int>(f));
    }
    for (int f : constant_cons)
        (void)f;  // zero-coefficient faces hold trivially

    std::vector<int> assign(free_edges.size(), 0);
    CubicMap first_connected;
    bool have_first = false;
    int examined = 0;

    std::function<bool(std::size_t)> dfs = [&](std::size_t pos) -> bool {
        if (pos == free_edges.size()) {
            std::vector<int> values(ne, 0);
            for (std::size_t i = 0; i < free_edges.size(); ++i) values[free_edges[i]] = assign[i];
            auto voltage = assemble_voltage(base, ei, values);
            CubicMap cover = cyclic_cover(base, m, voltage);
            if (!cover.connected()) return false;
            ++examined;
            if (!have_first) {
                first_connected = cover;
                have_first = true;
            }
            if (!cover.has_duplicate_triples()) {
                first_connected = cover;
                return true;  // clean cover found
            }
            return examined >= solution_cap;
        }
        for (int val = 0; val < m; ++val) {
            assign[pos] = val;
            bool ok = true;
            for (int f : check_after[pos]) {
                int sum = 0;
                for (auto [idx, cf] : cons[f].terms) sum += cf * assign[idx];
                if (sum % m != 0) {
                    ok = false;
                    break;
                }
            }
            if (ok && dfs(pos + 1)) return true;
        }
        return false;
    };
    dfs(0);
    if (!have_first) throw std::runtime_error("no connected degree-" + std::to_string(m) + " cover found");
    return first_connected;
}

namespace {

CubicMap six_face_map(int p) {
    if (p == 4) return cube_map();
    if (p == 6) return hex_torus_map();
    if (p < 4 || p % 2 != 0) throw std::invalid_argument("six-face complexes need even p >= 4");
    if (p % 4 == 2) {
        // Two faces per color from a connected double cover of the
        // three-face complex.
        return find_normal_cover(cyclic_three_face_map(p), 2);
    }
    // p = 0 (mod 4): stretch the cube's six squares into p-gons.
    return lengthening_cover(cube_map(), p / 4);
}

}  // namespace

CellComplex structured_complex(int p, int g) {
    TessellationSignature sig(p, 3, g);
    long nf = face_count(sig);
    if (nf < 3) throw std::invalid_argument("fewer than 3 faces");
    if (p % 2 != 0) throw std::invalid_argument("not 3-colorable: odd-sided faces");
    if (nf % 3 != 0) throw std::invalid_argument("not 3-colorable: face count not divisible by 3");

    CubicMap cm;
    if (nf == 3) {
        cm = cyclic_three_face_map(p);
    } else if (nf == 6) {
        cm = six_face_map(p);
    } else if (nf % 6 == 0) {
        cm = find_normal_cover(six_face_map(p), static_cast<int>(nf / 6));
    } else {
        cm = find_normal_cover(cyclic_three_face_map(p), static_cast<int>(nf / 3));
    }
    auto [cx, col] = cubic_to_complex(cm);
    if (static_cast<long>(cx.faces.size()) != nf) throw std::logic_error("face count mismatch");
    if (cx.genus != g) throw std::logic_error("genus mismatch in structured construction");
    return cx;
}

}  // namespace hypercolor
