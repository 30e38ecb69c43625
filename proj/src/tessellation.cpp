#include "hypercolor/tessellation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

namespace hypercolor {

std::optional<std::string> color_infeasibility(int p, long n_f) {
    if (n_f < 3) return "fewer than 3 faces";
    if (p % 2 != 0) return "not 3-colorable: odd-sided faces";
    if (n_f % 3 != 0) return "not 3-colorable: face count not divisible by 3";
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Combinatorial gluing search
// ---------------------------------------------------------------------------

namespace {

bool graph_three_colorable(const std::vector<std::vector<char>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> color(n, -1);
    std::function<bool(int)> go = [&](int f) -> bool {
        if (f == n) return true;
        for (int c = 0; c < 3; ++c) {
            bool ok = true;
            for (int o = 0; o < n && ok; ++o)
                if (adj[f][o] && color[o] == c) ok = false;
            if (adj[f][f]) ok = false;
            if (!ok) continue;
            color[f] = c;
            if (go(f + 1)) return true;
            color[f] = -1;
        }
        return false;
    };
    return go(0);
}

struct GluingSearch {
    int p, nf, n_sides;
    long node_budget;
    long nodes = 0;

    std::vector<int> match;      // side -> partner or -1
    std::vector<int> cls;        // corner -> class id
    struct Class {
        int size = 1;
        int ports = 2;
        std::array<int, 3> members{-1, -1, -1};
    };
    std::vector<Class> classes;  // indexed by class id (initially = corner id)
    std::vector<std::vector<char>> adj;
    std::vector<int> touched;    // glued side count per face
    int glued = 0;

    // Undo log.
    enum class Op { Match, Relabel, ClassData, Adj, Touched };
    struct Entry {
        Op op;
        int a, b, c, d;
    };
    std::vector<Entry> log;

    GluingSearch(int p_, int nf_, long budget)
        : p(p_), nf(nf_), n_sides(p_ * nf_), node_budget(budget), match(n_sides, -1),
          cls(n_sides), classes(n_sides), adj(nf_, std::vector<char>(nf_, 0)), touched(nf_, 0) {
        for (int c = 0; c < n_sides; ++c) {
            cls[c] = c;
            classes[c].members[0] = c;
        }
    }

    int face_of(int side) const { return side / p; }
    int corner(int f, int i) const { return f * p + ((i % p) + p) % p; }
    int left_side_of_corner(int c) const { return face_of(c) * p + ((c % p) + p - 1) % p; }
    int right_side_of_corner(int c) const { return c; }

    std::size_t mark() const { return log.size(); }
    void rollback(std::size_t m) {
        while (log.size() > m) {
            Entry e = log.back();
            log.pop_back();
            switch (e.op) {
                case Op::Match:
                    match[e.a] = -1;
                    match[e.b] = -1;
                    --glued;
                    break;
                case Op::Relabel: cls[e.a] = e.b; break;
                case Op::ClassData:
                    classes[e.a].size = e.b;
                    classes[e.a].ports = e.c;
                    if (e.d >= 0) {
                        // members beyond old size are cleared
                        for (int i = e.b; i < 3; ++i) classes[e.a].members[i] = -1;
                    }
                    break;
                case Op::Adj:
                    adj[e.a][e.b] = 0;
                    adj[e.b][e.a] = 0;
                    break;
                case Op::Touched:
                    --touched[e.a];
                    --touched[e.b];
                    break;
            }
        }
    }

    bool merge_corners(int x, int y, std::vector<int>& dirty) {
        int cx = cls[x], cy = cls[y];
        if (cx == cy) {
            log.push_back({Op::ClassData, cx, classes[cx].size, classes[cx].ports, -1});
            classes[cx].ports -= 2;
            if (classes[cx].ports == 0 && classes[cx].size != 3) return false;
            if (classes[cx].ports < 0) return false;
            dirty.push_back(cx);
            return true;
        }
        Class& A = classes[cx];
        Class& B = classes[cy];
        if (A.size + B.size > 3) return false;
        // The faces meeting at one vertex must be pairwise distinct, or no
        // proper 3-coloring can exist.
        for (int i = 0; i < A.size; ++i)
            for (int j = 0; j < B.size; ++j)
                if (face_of(A.members[i]) == face_of(B.members[j])) return false;
        log.push_back({Op::ClassData, cx, A.size, A.ports, 1});
        for (int j = 0; j < B.size; ++j) {
            log.push_back({Op::Relabel, B.members[j], cy, 0, 0});
            cls[B.members[j]] = cx;
            A.members[A.size + j] = B.members[j];
        }
        A.size += B.size;
        A.ports += B.ports - 2;
        if (A.ports == 0 && A.size != 3) return false;
        if (A.ports < 0) return false;
        if (A.size > 3) return false;
        dirty.push_back(cx);
        return true;
    }

    // Two unglued sides adjacent to the members of a full (size-3) class.
    bool open_sides_of_class(int cid, int out[2]) const {
        int k = 0;
        const Class& C = classes[cid];
        for (int i = 0; i < C.size; ++i) {
            int c = C.members[i];
            for (int s : {left_side_of_corner(c), right_side_of_corner(c)})
                if (match[s] < 0) {
                    if (k == 2) return false;
                    out[k++] = s;
                }
        }
        return k == 2;
    }

    bool apply(int s, int t) {
        if (++nodes > node_budget) throw SearchBudgetExceeded("search budget exceeded");
        if (s == t || match[s] >= 0 || match[t] >= 0) return false;
        int fs = face_of(s), ft = face_of(t);
        if (fs == ft) return false;  // self-adjacency can never be 3-colored

        bool new_pair = !adj[fs][ft];
        log.push_back({Op::Match, s, t, 0, 0});
        match[s] = t;
        match[t] = s;
        ++glued;
        log.push_back({Op::Touched, fs, ft, 0, 0});
        ++touched[fs];
        ++touched[ft];
        if (new_pair) {
            log.push_back({Op::Adj, fs, ft, 0, 0});
            adj[fs][ft] = adj[ft][fs] = 1;
            if (!graph_three_colorable(adj)) return false;
        }

        int i = s % p, j = t % p;
        std::vector<int> dirty;
        if (!merge_corners(corner(fs, i), corner(ft, j + 1), dirty)) return false;
        if (!merge_corners(corner(fs, i + 1), corner(ft, j), dirty)) return false;

        // Propagate forced closures: a full open vertex pins its last edge.
        for (std::size_t k = 0; k < dirty.size(); ++k) {
            int cid = dirty[k];
            if (cls[classes[cid].members[0]] != cid) continue;  // stale
            if (classes[cid].size == 3 && classes[cid].ports == 2) {
                int open[2];
                if (!open_sides_of_class(cid, open)) return false;
                if (open[0] == open[1]) return false;
                if (!apply(open[0], open[1])) return false;
            }
        }
        return true;
    }

    CellComplex extract() const {
        // Vertex ids in order of smallest member corner.
        int next_vid = 0;
        std::vector<int> vid(n_sides, -1);
        for (int c = 0; c < n_sides; ++c)
            if (vid[cls[c]] < 0) vid[cls[c]] = next_vid++;
        CellComplex cx;
        cx.vertex_count = next_vid;
        cx.faces.resize(nf);
        for (int f = 0; f < nf; ++f) {
            cx.faces[f].vertices.resize(p);
            cx.faces[f].edges.assign(p, -1);
            for (int i = 0; i < p; ++i) cx.faces[f].vertices[i] = vid[cls[corner(f, i)]];
        }
        for (int s = 0; s < n_sides; ++s) {
            int t = match[s];
            if (t < s) continue;
            int f = face_of(s), g2 = face_of(t);
            int i = s % p, j = t % p;
            CellComplex::Edge e;
            e.v = {vid[cls[corner(f, i)]], vid[cls[corner(f, i + 1)]]};
            e.sides[0] = {f, i};
            e.sides[1] = {g2, j};
            int id = static_cast<int>(cx.edges.size());
            cx.edges.push_back(e);
            cx.faces[f].edges[i] = id;
            cx.faces[g2].edges[j] = id;
        }
        long chi = cx.euler_characteristic();
        cx.genus = static_cast<int>((2 - chi) / 2);
        return cx;
    }

    // DFS over gluings; calls sink on every complete gluing. sink returns
    // true to stop the search.
    bool run(const std::function<bool(const GluingSearch&)>& sink) { return dfs(sink); }

  private:
    bool dfs(const std::function<bool(const GluingSearch&)>& sink) {
        if (glued * 2 == n_sides) return sink(*this);
        int s = -1;
        for (int k = 0; k < n_sides; ++k)
            if (match[k] < 0) {
                s = k;
                break;
            }
        int first_fresh = -1;
        for (int f = 0; f < nf; ++f)
            if (touched[f] == 0 && f != face_of(s)) {
                first_fresh = f;
                break;
            }
        for (int t = 0; t < n_sides; ++t) {
            if (t == s || match[t] >= 0) continue;
            int ft = face_of(t);
            if (touched[ft] == 0) {
                // Fresh faces are interchangeable and freely rotatable: only
                // the lowest-indexed one at side 0 needs trying.
                if (ft != first_fresh || t % p != 0) continue;
            }
            std::size_t m = mark();
            if (apply(s, t)) {
                if (dfs(sink)) return true;
            }
            rollback(m);
        }
        return false;
    }
};

}  // namespace

CellComplex combinatorial_search(const TessellationSignature& sig, const SearchOptions& opts) {
    long nf = face_count(sig);
    if (auto reason = color_infeasibility(sig.p, nf))
        throw std::invalid_argument("no trivalent 3-colorable complex for (p,g): " + *reason);
    if (nf > opts.max_faces)
        throw std::invalid_argument("combinatorial search limited to " +
                                    std::to_string(opts.max_faces) + " faces");
    GluingSearch gs(sig.p, static_cast<int>(nf), opts.node_budget);
    CellComplex result;
    bool found = gs.run([&](const GluingSearch& s) {
        CellComplex cx = s.extract();
        if (!cx.face_connected()) return false;
        result = std::move(cx);
        return true;
    });
    if (!found)
        throw std::invalid_argument("no trivalent 3-colorable complex for (p,g): search exhausted");
    if (result.genus != sig.g) throw std::logic_error("search produced wrong genus");
    return result;
}

std::vector<CellComplex> enumerate_complexes(const TessellationSignature& sig, int max_solutions,
                                             const SearchOptions& opts) {
    long nf = face_count(sig);
    if (auto reason = color_infeasibility(sig.p, nf))
        throw std::invalid_argument("no trivalent 3-colorable complex for (p,g): " + *reason);
    if (nf > opts.max_faces)
        throw std::invalid_argument("combinatorial search limited to " +
                                    std::to_string(opts.max_faces) + " faces");
    GluingSearch gs(sig.p, static_cast<int>(nf), opts.node_budget);
    std::vector<CellComplex> out;
    std::set<std::string> seen;
    gs.run([&](const GluingSearch& s) {
        CellComplex cx = s.extract();
        if (!cx.face_connected()) return false;
        std::string cert = map_certificate(cx);
        if (seen.insert(cert).second) out.push_back(std::move(cx));
        return static_cast<int>(out.size()) >= max_solutions;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Coloring and shrunk lattices
// ---------------------------------------------------------------------------

Coloring three_color(const CellComplex& cx) {
    int nf = static_cast<int>(cx.faces.size());
    auto adj = cx.face_adjacency();
    for (int f = 0; f < nf; ++f)
        if (adj[f][f] > 0) throw std::runtime_error("not 3-colorable: face adjacent to itself");

    // BFS order from face 0, most-constrained-first within the frontier.
    std::vector<int> order;
    std::vector<char> seen(nf, 0);
    std::queue<int> bfs;
    for (int start = 0; start < nf; ++start) {
        if (seen[start]) continue;
        seen[start] = 1;
        bfs.push(start);
        while (!bfs.empty()) {
            int f = bfs.front();
            bfs.pop();
            order.push_back(f);
            for (int o = 0; o < nf; ++o)
                if (adj[f][o] && !seen[o]) {
                    seen[o] = 1;
                    bfs.push(o);
                }
        }
    }

    std::vector<int> color(nf, -1);
    std::function<bool(int)> go = [&](int k) -> bool {
        if (k == nf) return true;
        int f = order[k];
        for (int c = 0; c < 3; ++c) {
            bool ok = true;
            for (int o = 0; o < nf && ok; ++o)
                if (adj[f][o] && color[o] == c) ok = false;
            if (!ok) continue;
            color[f] = c;
            if (go(k + 1)) return true;
            color[f] = -1;
        }
        return false;
    };
    if (!go(0)) throw std::runtime_error("not 3-colorable");

    Coloring col;
    col.face_color.resize(nf);
    for (int f = 0; f < nf; ++f) col.face_color[f] = static_cast<Color>(color[f]);
    col.edge_color.resize(cx.edges.size());
    for (std::size_t e = 0; e < cx.edges.size(); ++e) {
        Color c1 = col.face_color[cx.edges[e].sides[0].face];
        Color c2 = col.face_color[cx.edges[e].sides[1].face];
        col.edge_color[e] = third_color(c1, c2);
    }
    return col;
}

ShrunkLattice shrunk_lattice(const CellComplex& cx, const Coloring& col, Color color) {
    if (col.face_color.size() != cx.faces.size() || col.edge_color.size() != cx.edges.size())
        throw std::invalid_argument("coloring does not match complex");
    ShrunkLattice sl;
    sl.color = color;
    std::vector<int> node_of_face(cx.faces.size(), -1);
    for (std::size_t f = 0; f < cx.faces.size(); ++f) {
        if (col.face_color[f] == color) {
            node_of_face[f] = static_cast<int>(sl.nodes.size());
            sl.nodes.push_back(static_cast<int>(f));
        } else {
            sl.faces.push_back(static_cast<int>(f));
        }
    }
    // The color-c face at each vertex.
    auto fat = cx.faces_at_vertices();
    std::vector<int> cface_at(cx.vertex_count, -1);
    for (int v = 0; v < cx.vertex_count; ++v)
        for (int f : fat[v])
            if (col.face_color[f] == color) cface_at[v] = f;
    for (std::size_t e = 0; e < cx.edges.size(); ++e) {
        if (col.edge_color[e] != color) continue;
        int a = cx.edges[e].v[0], b = cx.edges[e].v[1];
        if (cface_at[a] < 0 || cface_at[b] < 0)
            throw std::invalid_argument("invalid coloring: vertex missing a face of the color");
        ShrunkLattice::Link link;
        link.a = node_of_face[cface_at[a]];
        link.b = node_of_face[cface_at[b]];
        link.qubits = {a, b};
        link.parent_edge = static_cast<int>(e);
        sl.links.push_back(link);
    }
    return sl;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace {

double corner_angle_at(Cx prev, Cx v, Cx next) {
    Mobius to0 = Mobius::point_to_origin(DiskPoint(v));
    Cx w1 = to0.apply(prev);
    Cx w2 = to0.apply(next);
    double two_pi = 2 * 3.14159265358979323846;
    double a = std::arg(w1) - std::arg(w2);
    while (a < 0) a += two_pi;
    if (a > two_pi) a -= two_pi;
    return std::min(a, two_pi - a);
}

}  // namespace

ValidationReport validate_complex(const CellComplex& cx, const TessellationSignature* sig) {
    ValidationReport rep;
    auto deg = cx.vertex_degrees();
    bool trivalent = std::all_of(deg.begin(), deg.end(), [](int d) { return d == 3; });
    rep.add("trivalent", trivalent);

    bool sides_ok = true;
    for (std::size_t e = 0; e < cx.edges.size(); ++e)
        for (const auto& s : cx.edges[e].sides) {
            if (s.face < 0 || s.face >= static_cast<int>(cx.faces.size())) sides_ok = false;
            else if (cx.faces[s.face].edges[s.pos] != static_cast<int>(e)) sides_ok = false;
        }
    rep.add("edge_incidence", sides_ok, "each edge carries exactly two face-sides");

    long sum_sides = 0;
    for (const auto& f : cx.faces) sum_sides += static_cast<long>(f.vertices.size());
    rep.add("handshake", sum_sides == 2 * static_cast<long>(cx.edges.size()) &&
                             3L * cx.vertex_count == 2 * static_cast<long>(cx.edges.size()));

    rep.add("face_connected", cx.face_connected());

    int self_adj = 0;
    for (const auto& e : cx.edges)
        if (e.sides[0].face == e.sides[1].face) ++self_adj;
    rep.add("self_adjacent_faces", true,
            self_adj == 0 ? "none" : std::to_string(self_adj) + " edge(s) bound one face twice");

    {
        CellComplex copy = cx;
        rep.add("orientable", orient_faces(copy));
    }

    if (sig) {
        bool face_sizes = std::all_of(cx.faces.begin(), cx.faces.end(), [&](const auto& f) {
            return static_cast<int>(f.vertices.size()) == sig->p;
        });
        rep.add("face_size_p", face_sizes);
        long expect_nf = 0;
        std::string note;
        bool nf_ok = false;
        try {
            expect_nf = face_count(*sig);
            nf_ok = static_cast<long>(cx.faces.size()) == expect_nf;
            note = "expected " + std::to_string(expect_nf);
        } catch (const std::exception& ex) {
            note = ex.what();
        }
        rep.add("face_count", nf_ok, note);
        rep.add("euler_characteristic", cx.euler_characteristic() == 2 - 2L * sig->g);
    } else {
        rep.add("euler_characteristic", cx.euler_characteristic() == 2 - 2L * cx.genus);
    }

    if (cx.has_corner_geometry()) {
        std::vector<double> total(cx.vertex_count, 0.0);
        for (std::size_t f = 0; f < cx.faces.size(); ++f) {
            const auto& vs = cx.faces[f].vertices;
            const auto& pos = cx.face_corner_pos[f];
            int n = static_cast<int>(vs.size());
            for (int i = 0; i < n; ++i)
                total[vs[i]] +=
                    corner_angle_at(pos[(i + n - 1) % n], pos[i], pos[(i + 1) % n]);
        }
        double worst = 0.0;
        for (double t : total) worst = std::max(worst, std::abs(t - 2 * 3.14159265358979323846));
        rep.add("vertex_angle_sums", worst < 1e-6, "max deviation " + std::to_string(worst));
    } else {
        rep.skip("vertex_angle_sums", "no embedding");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Geometric builder
// ---------------------------------------------------------------------------

namespace {

constexpr double kPi = 3.14159265358979323846;

class PointRegistry {
  public:
    explicit PointRegistry(double tol) : tol_(tol), cell_(std::max(tol * 8, 1e-7)) {}

    int find(Cx z) const {
        long long bx = bucket(z.real()), by = bucket(z.imag());
        for (long long dx = -1; dx <= 1; ++dx)
            for (long long dy = -1; dy <= 1; ++dy) {
                auto it = grid_.find(key(bx + dx, by + dy));
                if (it == grid_.end()) continue;
                for (int id : it->second)
                    if (std::abs(pts_[id] - z) <= tol_) return id;
            }
        return -1;
    }

    int insert(Cx z) {
        int id = find(z);
        if (id >= 0) return id;
        id = static_cast<int>(pts_.size());
        pts_.push_back(z);
        grid_[key(bucket(z.real()), bucket(z.imag()))].push_back(id);
        return id;
    }

    int size() const { return static_cast<int>(pts_.size()); }
    Cx point(int id) const { return pts_[id]; }

  private:
    long long bucket(double x) const { return static_cast<long long>(std::floor(x / cell_)); }
    static long long key(long long bx, long long by) { return bx * 2000003LL + by; }

    double tol_, cell_;
    std::vector<Cx> pts_;
    std::unordered_map<long long, std::vector<int>> grid_;
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<Mobius> pairing_words(const FundamentalPolygon& poly, int word_length) {
    std::vector<Mobius> gens;
    for (const auto& m : poly.pairings) {
        gens.push_back(m);
        gens.push_back(m.inverse());
    }
    std::vector<Mobius> words = gens;
    std::vector<Mobius> prev = gens;
    for (int len = 2; len <= word_length; ++len) {
        std::vector<Mobius> next;
        for (const auto& w : prev)
            for (const auto& gmap : gens) next.push_back((w * gmap).normalized());
        words.insert(words.end(), next.begin(), next.end());
        prev = std::move(next);
    }
    return words;
}

}  // namespace

Patch build_universal_patch(const TessellationSignature& sig, const FundamentalPolygon& poly,
                            const PatchOptions& opts) {
    long nf = face_count(sig);
    long budget = opts.face_budget > 0 ? opts.face_budget : 10L * nf * (4L * poly.g + 1);
    double rf = circumdiameter(sig.p, 3) / 2.0;
    double keep = poly.circumradius + 2.0 * rf;

    // Standard face: centered at the origin with a vertex on the +x axis.
    std::vector<Cx> seed(sig.p);
    double rad = std::tanh(rf / 2.0);
    for (int k = 0; k < sig.p; ++k)
        seed[k] = std::polar(rad, 2.0 * kPi * k / sig.p + opts.rotation);
    Cx seed_center = 0.0;
    if (opts.vertex_at_origin) {
        Mobius shift = Mobius::point_to_origin(DiskPoint(seed[0]));
        for (auto& z : seed) z = shift.apply(z);
        seed_center = shift.apply(0.0);
    }

    Patch patch;
    patch.sig = sig;
    patch.keep_radius = keep;

    PointRegistry centers(1e-9);
    std::queue<int> bfs;
    auto push_face = [&](Cx center, std::vector<DiskPoint> verts) -> bool {
        if (hyperbolic_distance(DiskPoint(), DiskPoint(center)) > keep) return false;
        if (centers.find(center) >= 0) return false;
        centers.insert(center);
        Patch::PFace pf;
        pf.center = DiskPoint(center);
        pf.vertices = std::move(verts);
        patch.faces.push_back(std::move(pf));
        bfs.push(static_cast<int>(patch.faces.size()) - 1);
        return true;
    };

    std::vector<DiskPoint> seed_pts;
    for (auto z : seed) seed_pts.push_back(DiskPoint(z));
    push_face(seed_center, seed_pts);
    while (!bfs.empty()) {
        int fi = bfs.front();
        bfs.pop();
        // Copy: patch.faces may reallocate while expanding.
        Patch::PFace f = patch.faces[fi];
        for (int s = 0; s < sig.p; ++s) {
            Cx a = f.vertices[s].z, b = f.vertices[(s + 1) % sig.p].z;
            // Midpoint of the geodesic edge.
            Mobius to0 = Mobius::point_to_origin(DiskPoint(a));
            Cx bb = to0.apply(b);
            double t = std::atanh(std::abs(bb));
            Cx mid = to0.inverse().apply(std::polar(std::tanh(t / 2.0), std::arg(bb)));
            Mobius flip = Mobius::rotation_about(DiskPoint(mid), kPi);
            std::vector<DiskPoint> verts(sig.p);
            for (int k = 0; k < sig.p; ++k) verts[k] = DiskPoint(flip.apply(f.vertices[k].z));
            push_face(flip.apply(f.center.z), std::move(verts));
            if (static_cast<long>(patch.faces.size()) > budget)
                throw std::runtime_error("patch overflow");
        }
    }
    return patch;
}

namespace {

struct QuotientCells {
    PointRegistry nodes{1e-9};
    PointRegistry mids{1e-9};
    std::vector<std::vector<int>> face_nodes;  // per patch face: vertex point ids
    std::vector<std::vector<int>> face_mids;   // per patch face: edge midpoint ids
};

QuotientCells collect_cells(const Patch& patch, double tol) {
    QuotientCells q{PointRegistry(tol), PointRegistry(tol), {}, {}};
    int p = patch.sig.p;
    for (const auto& f : patch.faces) {
        std::vector<int> vn(p), en(p);
        for (int i = 0; i < p; ++i) vn[i] = q.nodes.insert(f.vertices[i].z);
        for (int i = 0; i < p; ++i) {
            Cx a = f.vertices[i].z, b = f.vertices[(i + 1) % p].z;
            Mobius to0 = Mobius::point_to_origin(DiskPoint(a));
            Cx bb = to0.apply(b);
            double t = std::atanh(std::abs(bb));
            Cx mid = to0.inverse().apply(std::polar(std::tanh(t / 2.0), std::arg(bb)));
            en[i] = q.mids.insert(mid);
        }
        q.face_nodes.push_back(std::move(vn));
        q.face_mids.push_back(std::move(en));
    }
    return q;
}

void orbit_unite(const PointRegistry& reg, const std::vector<Mobius>& words, UnionFind& uf) {
    for (int id = 0; id < reg.size(); ++id) {
        Cx z = reg.point(id);
        for (const auto& w : words) {
            int other = reg.find(w.apply(z));
            if (other >= 0 && other != id) uf.unite(id, other);
        }
    }
}

}  // namespace

CellComplex quotient_by_pairings(const Patch& patch, const FundamentalPolygon& poly,
                                 const QuotientOptions& opts) {
    const int p = patch.sig.p;
    long nf = face_count(patch.sig);
    auto fail = [](const std::string& why) -> CellComplex {
        throw std::runtime_error("pairing-incompatible tessellation: " + why);
    };

    QuotientCells cells = collect_cells(patch, opts.tol);
    auto words = pairing_words(poly, opts.word_length);

    // Face orbits via centers.
    PointRegistry centers(opts.tol);
    std::vector<int> face_center_id(patch.faces.size());
    for (std::size_t f = 0; f < patch.faces.size(); ++f)
        face_center_id[f] = centers.insert(patch.faces[f].center.z);
    UnionFind face_uf(centers.size());
    orbit_unite(centers, words, face_uf);

    UnionFind node_uf(cells.nodes.size());
    orbit_unite(cells.nodes, words, node_uf);
    UnionFind mid_uf(cells.mids.size());
    orbit_unite(cells.mids, words, mid_uf);

    // Representative patch face per orbit: nearest center to the origin.
    // Rounded keys keep the comparisons strict-weak despite float noise.
    auto center_key = [&](int f) {
        double r = patch.faces[f].center.abs();
        double t = std::arg(patch.faces[f].center.z);
        return std::make_tuple(std::llround(r * 1e7), std::llround(t * 1e7), f);
    };
    std::map<int, int> face_rep;  // orbit root -> patch face index
    for (std::size_t f = 0; f < patch.faces.size(); ++f) {
        int root = face_uf.find(face_center_id[f]);
        auto it = face_rep.find(root);
        if (it == face_rep.end() || center_key(static_cast<int>(f)) < center_key(it->second))
            face_rep[root] = static_cast<int>(f);
    }
    if (static_cast<long>(face_rep.size()) != nf)
        return fail("face orbit count " + std::to_string(face_rep.size()) + ", expected " +
                    std::to_string(nf));

    // Canonical ordering of face orbits by representative center.
    std::vector<std::pair<int, int>> face_orbits(face_rep.begin(), face_rep.end());
    std::sort(face_orbits.begin(), face_orbits.end(), [&](const auto& a, const auto& b) {
        auto ka = center_key(a.second), kb = center_key(b.second);
        auto swap_rt = [](const std::tuple<long long, long long, int>& k) {
            return std::make_tuple(std::get<1>(k), std::get<0>(k), std::get<2>(k));
        };
        return swap_rt(ka) < swap_rt(kb);
    });

    // Vertex and edge numbering from the orbits used by representatives.
    std::map<int, int> vid, eid;
    std::vector<Cx> vpos;
    auto vertex_id = [&](int node, Cx where) {
        int root = node_uf.find(node);
        auto it = vid.find(root);
        if (it != vid.end()) return it->second;
        int id = static_cast<int>(vid.size());
        vid[root] = id;
        vpos.push_back(where);
        return id;
    };

    CellComplex cx;
    cx.faces.resize(face_orbits.size());
    cx.face_corner_pos.resize(face_orbits.size());
    std::map<int, std::vector<std::pair<int, int>>> edge_sides;  // edge orbit -> (face, pos)
    for (std::size_t fo = 0; fo < face_orbits.size(); ++fo) {
        int pf = face_orbits[fo].second;
        auto& face = cx.faces[fo];
        face.vertices.resize(p);
        face.edges.assign(p, -1);
        cx.face_corner_pos[fo].resize(p);
        for (int i = 0; i < p; ++i) {
            face.vertices[i] =
                vertex_id(cells.face_nodes[pf][i], patch.faces[pf].vertices[i].z);
            cx.face_corner_pos[fo][i] = patch.faces[pf].vertices[i].z;
        }
        for (int i = 0; i < p; ++i) {
            int root = mid_uf.find(cells.face_mids[pf][i]);
            edge_sides[root].push_back({static_cast<int>(fo), i});
        }
    }
    for (auto& [root, sides] : edge_sides) {
        if (sides.size() != 2)
            return fail("edge orbit with " + std::to_string(sides.size()) + " sides");
        (void)root;
    }
    // Deterministic edge order: by (face, pos) of the first side.
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> edge_list(edge_sides.begin(),
                                                                            edge_sides.end());
    std::sort(edge_list.begin(), edge_list.end(),
              [](const auto& a, const auto& b) { return a.second[0] < b.second[0]; });
    for (auto& [root, sides] : edge_list) {
        (void)root;
        int id = static_cast<int>(cx.edges.size());
        CellComplex::Edge e;
        auto [f0, i0] = sides[0];
        auto [f1, i1] = sides[1];
        e.v = {cx.faces[f0].vertices[i0], cx.faces[f0].vertices[(i0 + 1) % p]};
        e.sides[0] = {f0, i0};
        e.sides[1] = {f1, i1};
        cx.edges.push_back(e);
        cx.faces[f0].edges[i0] = id;
        cx.faces[f1].edges[i1] = id;
    }
    cx.vertex_count = static_cast<int>(vid.size());
    cx.vertex_pos = std::move(vpos);

    for (const auto& f : cx.faces)
        for (int e : f.edges)
            if (e < 0) return fail("face side without a glued edge orbit");
    auto deg = cx.vertex_degrees();
    if (!std::all_of(deg.begin(), deg.end(), [](int d) { return d == 3; }))
        return fail("vertex orbit with degree != 3");
    long chi = cx.euler_characteristic();
    if (chi != 2 - 2L * patch.sig.g)
        return fail("Euler characteristic " + std::to_string(chi));
    if (!cx.face_connected()) return fail("quotient not connected");
    cx.genus = patch.sig.g;
    if (!orient_faces(cx)) return fail("quotient not orientable");
    return cx;
}

int quotient_stability(const CellComplex& cx, const FundamentalPolygon& poly,
                       const QuotientOptions& opts) {
    if (!cx.has_embedding()) throw std::invalid_argument("complex has no embedding");
    auto words = pairing_words(poly, opts.word_length);
    int merges = 0;
    for (int i = 0; i < cx.vertex_count; ++i)
        for (int j = 0; j < cx.vertex_count; ++j) {
            if (i == j) continue;
            for (const auto& w : words)
                if (std::abs(w.apply(cx.vertex_pos[i]) - cx.vertex_pos[j]) < opts.tol) {
                    ++merges;
                    goto next_pair;
                }
        next_pair:;
        }
    return merges;
}

GeometricResult geometric_complex(const TessellationSignature& sig, const GeometricOptions& opts) {
    FundamentalPolygon poly = fundamental_polygon(sig.g);
    double dh = paired_side_distance(sig.g);
    int sweep = opts.sweep_steps >= 0 ? opts.sweep_steps : 4 * sig.g * sig.p;
    std::string last_error = "no candidate alignments";

    for (int seed_mode = 0; seed_mode < (opts.try_vertex_seed ? 2 : 1); ++seed_mode) {
        PatchOptions base_opts;
        base_opts.vertex_at_origin = (seed_mode == 1);
        Patch base;
        try {
            base = build_universal_patch(sig, poly, base_opts);
        } catch (const std::exception& ex) {
            last_error = ex.what();
            continue;
        }

        // Alignment candidates: rotations bringing a face center at distance
        // d_h onto the first pairing axis, then the uniform sweep.
        std::vector<double> rotations;
        double axis = kPi / (4.0 * sig.g);
        for (const auto& f : base.faces) {
            double d = hyperbolic_distance(DiskPoint(), f.center);
            if (std::abs(d - dh) < 1e-6 && f.center.abs() > 1e-9)
                rotations.push_back(axis - std::arg(f.center.z));
        }
        for (int k = 0; k <= sweep; ++k)
            rotations.push_back(k * kPi / (2.0 * sig.p * 4.0 * sig.g));

        // The patch rotates rigidly with the seed rotation; its symmetry
        // about the origin is p-fold (face seed) or 3-fold (vertex seed).
        double period = base_opts.vertex_at_origin ? 2.0 * kPi / 3.0 : 2.0 * kPi / sig.p;
        std::vector<double> tried;
        for (double rot : rotations) {
            double canon = std::remainder(rot, period);
            bool dup = false;
            for (double t : tried)
                if (std::abs(t - canon) < 1e-12) dup = true;
            if (dup) continue;
            tried.push_back(canon);

            PatchOptions po = base_opts;
            po.rotation = canon;
            try {
                Patch patch = build_universal_patch(sig, poly, po);
                CellComplex cx = quotient_by_pairings(patch, poly, opts.quotient);
                GeometricResult res;
                res.complex = std::move(cx);
                res.seed_rotation = canon;
                res.vertex_seed = base_opts.vertex_at_origin;
                res.note = "alignment found (seed rotation " + std::to_string(canon) + ")";
                return res;
            } catch (const std::exception& ex) {
                last_error = ex.what();
            }
        }
    }
    throw std::runtime_error(last_error.rfind("pairing-incompatible", 0) == 0
                                 ? last_error
                                 : "pairing-incompatible tessellation: " + last_error);
}

}  // namespace hypercolor
