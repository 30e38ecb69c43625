#include "hypercolor/cell_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hypercolor {

const char* color_name(Color c) {
    switch (c) {
        case Color::R: return "R";
        case Color::G: return "G";
        case Color::B: return "B";
    }
    return "?";
}

Color color_from_name(const std::string& s) {
    if (s == "R") return Color::R;
    if (s == "G") return Color::G;
    if (s == "B") return Color::B;
    throw std::invalid_argument("unknown color: " + s);
}

Color third_color(Color a, Color b) {
    if (a == b) throw std::invalid_argument("third_color needs distinct colors");
    return static_cast<Color>(3 - static_cast<int>(a) - static_cast<int>(b));
}

std::vector<int> CellComplex::vertex_degrees() const {
    std::vector<int> deg(vertex_count, 0);
    for (const auto& e : edges) {
        deg[e.v[0]]++;
        deg[e.v[1]]++;
    }
    return deg;
}

std::vector<std::vector<int>> CellComplex::faces_at_vertices() const {
    std::vector<std::vector<int>> out(vertex_count);
    for (std::size_t f = 0; f < faces.size(); ++f)
        for (int v : faces[f].vertices) out[v].push_back(static_cast<int>(f));
    return out;
}

std::vector<std::vector<int>> CellComplex::edges_at_vertices() const {
    std::vector<std::vector<int>> out(vertex_count);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        out[edges[e].v[0]].push_back(static_cast<int>(e));
        out[edges[e].v[1]].push_back(static_cast<int>(e));
    }
    return out;
}

bool CellComplex::face_connected() const {
    if (faces.empty()) return true;
    std::vector<char> seen(faces.size(), 0);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!bfs.empty()) {
        int f = bfs.front();
        bfs.pop();
        for (int e : faces[f].edges)
            for (const auto& s : edges[e].sides)
                if (!seen[s.face]) {
                    seen[s.face] = 1;
                    ++count;
                    bfs.push(s.face);
                }
    }
    return count == faces.size();
}

std::vector<std::vector<int>> CellComplex::face_adjacency() const {
    std::vector<std::vector<int>> adj(faces.size(), std::vector<int>(faces.size(), 0));
    for (const auto& e : edges) {
        int f1 = e.sides[0].face, f2 = e.sides[1].face;
        adj[f1][f2]++;
        if (f1 != f2) adj[f2][f1]++;
    }
    return adj;
}

namespace {

// Traversal direction of edge e as recorded side k: +1 when the face walks
// the edge the same way it was first registered.
int side_direction(const CellComplex& cx, int e, int k) {
    const auto& s = cx.edges[e].sides[k];
    const auto& f = cx.faces[s.face];
    int a = f.vertices[s.pos];
    return a == cx.edges[e].v[0] ? +1 : -1;
}

void flip_face(CellComplex& cx, int fi) {
    auto& f = cx.faces[fi];
    int p = static_cast<int>(f.vertices.size());
    // Reversed boundary: new vertex i is old vertex p-1-i, so the edge at new
    // position i is the old edge (p-2-i) mod p.
    std::reverse(f.vertices.begin(), f.vertices.end());
    std::reverse(f.edges.begin(), f.edges.end());
    std::rotate(f.edges.begin(), f.edges.begin() + 1, f.edges.end());
    if (!cx.face_corner_pos.empty())
        std::reverse(cx.face_corner_pos[fi].begin(), cx.face_corner_pos[fi].end());
    for (int e : f.edges)
        for (auto& s : cx.edges[e].sides)
            if (s.face == fi) s.pos = -1;
    for (int i = 0; i < p; ++i) {
        int e = f.edges[i];
        for (auto& s : cx.edges[e].sides)
            if (s.face == fi && s.pos == -1) {
                s.pos = i;
                break;
            }
    }
}

}  // namespace

bool orient_faces(CellComplex& cx) {
    std::vector<int> state(cx.faces.size(), 0);  // 0 unseen, 1 keep, -1 flipped
    for (std::size_t start = 0; start < cx.faces.size(); ++start) {
        if (state[start]) continue;
        state[start] = 1;
        std::queue<int> bfs;
        bfs.push(static_cast<int>(start));
        while (!bfs.empty()) {
            int f = bfs.front();
            bfs.pop();
            for (int e : cx.faces[f].edges) {
                int d0 = side_direction(cx, e, 0);
                int d1 = side_direction(cx, e, 1);
                int f0 = cx.edges[e].sides[0].face;
                int f1 = cx.edges[e].sides[1].face;
                if (f0 == f1) {
                    if (d0 == d1) return false;  // face meets itself head-on
                    continue;
                }
                // Consistent orientation: the two traversals must differ.
                int other = (f0 == f) ? f1 : f0;
                bool consistent = (d0 != d1);
                if (state[other] == 0) {
                    if (!consistent) {
                        flip_face(cx, other);
                        state[other] = -1;
                    } else {
                        state[other] = 1;
                    }
                    bfs.push(other);
                } else if (!consistent) {
                    return false;
                }
            }
        }
    }
    return true;
}

CellComplex complex_from_face_cycles(int vertex_count,
                                     const std::vector<std::vector<int>>& face_vertices) {
    CellComplex cx;
    cx.vertex_count = vertex_count;
    cx.faces.resize(face_vertices.size());
    // Half-filled edges indexed by unordered vertex pair.
    std::map<std::pair<int, int>, std::vector<int>> open_edges;
    for (std::size_t fi = 0; fi < face_vertices.size(); ++fi) {
        const auto& vs = face_vertices[fi];
        cx.faces[fi].vertices = vs;
        cx.faces[fi].edges.resize(vs.size());
        for (std::size_t i = 0; i < vs.size(); ++i) {
            int a = vs[i], b = vs[(i + 1) % vs.size()];
            auto key = std::minmax(a, b);
            auto& bucket = open_edges[key];
            int eid;
            if (!bucket.empty()) {
                eid = bucket.back();
                bucket.pop_back();
                cx.edges[eid].sides[1] = {static_cast<int>(fi), static_cast<int>(i)};
            } else {
                eid = static_cast<int>(cx.edges.size());
                CellComplex::Edge e;
                e.v = {a, b};
                e.sides[0] = {static_cast<int>(fi), static_cast<int>(i)};
                e.sides[1] = {-1, -1};
                cx.edges.push_back(e);
                bucket.push_back(eid);
            }
            cx.faces[fi].edges[i] = eid;
        }
    }
    for (const auto& [key, bucket] : open_edges)
        if (!bucket.empty())
            throw std::invalid_argument("complex is not closed: boundary edges remain");
    long chi = cx.euler_characteristic();
    if (chi % 2 != 0) throw std::invalid_argument("odd Euler characteristic");
    cx.genus = static_cast<int>((2 - chi) / 2);
    return cx;
}

void ValidationReport::add(const std::string& name, bool pass, const std::string& note) {
    checks.push_back({name, pass, false, note});
    if (!pass) all_pass = false;
}

void ValidationReport::skip(const std::string& name, const std::string& note) {
    checks.push_back({name, true, true, note});
}

const ValidationReport::Check* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string face_adjacency_certificate(const CellComplex& cx) {
    auto adj = cx.face_adjacency();
    int n = static_cast<int>(adj.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s;
        s.reserve(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s += static_cast<char>('0' + adj[perm[i]][perm[j]]);
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

// Darts are face-sides: dart id = 2*edge + side slot.
struct DartMaps {
    std::vector<int> next;  // next dart counterclockwise along the same face
    std::vector<int> opp;   // same edge, other side
};

DartMaps build_darts(const CellComplex& cx) {
    int nd = static_cast<int>(cx.edges.size()) * 2;
    DartMaps dm;
    dm.next.assign(nd, -1);
    dm.opp.assign(nd, -1);
    for (std::size_t e = 0; e < cx.edges.size(); ++e) {
        dm.opp[2 * e] = static_cast<int>(2 * e + 1);
        dm.opp[2 * e + 1] = static_cast<int>(2 * e);
    }
    for (std::size_t f = 0; f < cx.faces.size(); ++f) {
        const auto& fc = cx.faces[f];
        int p = static_cast<int>(fc.edges.size());
        std::vector<int> dart_at(p, -1);
        for (int i = 0; i < p; ++i) {
            int e = fc.edges[i];
            for (int k = 0; k < 2; ++k)
                if (cx.edges[e].sides[k].face == static_cast<int>(f) &&
                    cx.edges[e].sides[k].pos == i)
                    dart_at[i] = static_cast<int>(2 * e + k);
        }
        for (int i = 0; i < p; ++i) dm.next[dart_at[i]] = dart_at[(i + 1) % p];
    }
    return dm;
}

}  // namespace

std::string map_certificate(const CellComplex& cx) {
    DartMaps dm = build_darts(cx);
    int nd = static_cast<int>(dm.next.size());
    std::string best;
    for (int start = 0; start < nd; ++start) {
        std::vector<int> label(nd, -1);
        std::vector<int> order;
        order.reserve(nd);
        label[start] = 0;
        order.push_back(start);
        std::string enc;
        for (std::size_t i = 0; i < order.size(); ++i) {
            int d = order[i];
            for (int nb : {dm.next[d], dm.opp[d]}) {
                if (label[nb] < 0) {
                    label[nb] = static_cast<int>(order.size());
                    order.push_back(nb);
                }
                enc += std::to_string(label[nb]);
                enc += ',';
            }
        }
        if (best.empty() || enc < best) best = enc;
    }
    return best;
}

std::string complex_to_json(const CellComplex& cx, const TessellationSignature* sig,
                            const Coloring* coloring) {
    nlohmann::json j;
    if (sig) j["signature"] = {{"p", sig->p}, {"q", sig->q}, {"g", sig->g}};
    else j["signature"] = {{"p", cx.faces.empty() ? 0 : static_cast<int>(cx.faces[0].vertices.size())},
                           {"q", 3},
                           {"g", cx.genus}};
    auto& vs = j["vertices"] = nlohmann::json::array();
    for (int v = 0; v < cx.vertex_count; ++v) {
        nlohmann::json jv = {{"id", v}};
        if (cx.has_embedding()) {
            jv["x"] = cx.vertex_pos[v].real();
            jv["y"] = cx.vertex_pos[v].imag();
        }
        vs.push_back(jv);
    }
    auto& es = j["edges"] = nlohmann::json::array();
    for (std::size_t e = 0; e < cx.edges.size(); ++e) {
        es.push_back({{"id", static_cast<int>(e)},
                      {"v", {cx.edges[e].v[0], cx.edges[e].v[1]}},
                      {"f", {cx.edges[e].sides[0].face, cx.edges[e].sides[1].face}}});
    }
    auto& fs = j["faces"] = nlohmann::json::array();
    for (std::size_t f = 0; f < cx.faces.size(); ++f) {
        nlohmann::json jf = {{"id", static_cast<int>(f)}, {"vertices", cx.faces[f].vertices}};
        if (coloring) jf["color"] = color_name(coloring->face_color[f]);
        fs.push_back(jf);
    }
    return j.dump(2);
}

ParsedComplex complex_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ParsedComplex out;
    out.p = j["signature"]["p"].get<int>();
    out.q = j["signature"]["q"].get<int>();
    out.g = j["signature"]["g"].get<int>();

    CellComplex& cx = out.complex;
    cx.vertex_count = static_cast<int>(j["vertices"].size());
    bool embedded = !j["vertices"].empty() && j["vertices"][0].contains("x");
    if (embedded) cx.vertex_pos.resize(cx.vertex_count);
    for (const auto& jv : j["vertices"]) {
        int id = jv["id"].get<int>();
        if (embedded) cx.vertex_pos[id] = {jv["x"].get<double>(), jv["y"].get<double>()};
    }

    std::vector<std::vector<int>> face_vertices(j["faces"].size());
    std::vector<std::string> face_colors(j["faces"].size());
    bool colored = !j["faces"].empty() && j["faces"][0].contains("color");
    for (const auto& jf : j["faces"]) {
        int id = jf["id"].get<int>();
        face_vertices[id] = jf["vertices"].get<std::vector<int>>();
        if (colored) face_colors[id] = jf["color"].get<std::string>();
    }

    // Rebuild edges from the edge list: match each face-side with an edge id
    // by vertex pair and declared face incidence; parallel edges are assigned
    // in id order.
    cx.faces.resize(face_vertices.size());
    struct Slot { int remaining = 2; };
    std::vector<CellComplex::Edge> edges(j["edges"].size());
    std::map<std::pair<int, int>, std::vector<int>> by_pair;
    std::vector<std::array<int, 2>> declared_faces(j["edges"].size());
    for (const auto& je : j["edges"]) {
        int id = je["id"].get<int>();
        edges[id].v = {je["v"][0].get<int>(), je["v"][1].get<int>()};
        declared_faces[id] = {je["f"][0].get<int>(), je["f"][1].get<int>()};
        edges[id].sides[0] = {-1, -1};
        edges[id].sides[1] = {-1, -1};
        by_pair[std::minmax(edges[id].v[0], edges[id].v[1])].push_back(id);
    }
    for (auto& [k, v] : by_pair) std::sort(v.begin(), v.end());

    for (std::size_t fi = 0; fi < face_vertices.size(); ++fi) {
        const auto& vs = face_vertices[fi];
        cx.faces[fi].vertices = vs;
        cx.faces[fi].edges.resize(vs.size());
        for (std::size_t i = 0; i < vs.size(); ++i) {
            int a = vs[i], b = vs[(i + 1) % vs.size()];
            auto key = std::minmax(a, b);
            int chosen = -1;
            for (int eid : by_pair[key]) {
                bool incident = declared_faces[eid][0] == static_cast<int>(fi) ||
                                declared_faces[eid][1] == static_cast<int>(fi);
                if (!incident) continue;
                int used = (edges[eid].sides[0].face >= 0) + (edges[eid].sides[1].face >= 0);
                int want = (declared_faces[eid][0] == static_cast<int>(fi)) +
                           (declared_faces[eid][1] == static_cast<int>(fi));
                int have = (edges[eid].sides[0].face == static_cast<int>(fi)) +
                           (edges[eid].sides[1].face == static_cast<int>(fi));
                if (used < 2 && have < want) {
                    chosen = eid;
                    break;
                }
            }
            if (chosen < 0) throw std::invalid_argument("edge list inconsistent with faces");
            int slot = edges[chosen].sides[0].face < 0 ? 0 : 1;
            edges[chosen].sides[slot] = {static_cast<int>(fi), static_cast<int>(i)};
            cx.faces[fi].edges[i] = chosen;
        }
    }
    cx.edges = std::move(edges);
    long chi = cx.euler_characteristic();
    cx.genus = static_cast<int>((2 - chi) / 2);

    if (colored) {
        Coloring col;
        col.face_color.resize(face_colors.size());
        for (std::size_t f = 0; f < face_colors.size(); ++f)
            col.face_color[f] = color_from_name(face_colors[f]);
        col.edge_color.resize(cx.edges.size());
        for (std::size_t e = 0; e < cx.edges.size(); ++e) {
            Color c1 = col.face_color[cx.edges[e].sides[0].face];
            Color c2 = col.face_color[cx.edges[e].sides[1].face];
            col.edge_color[e] = third_color(c1, c2);
        }
        out.coloring = std::move(col);
    }
    return out;
}

}  // namespace hypercolor
