// Acceptance suite: one line per criterion, exit code = number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hypercolor/builder.hpp"
#include "hypercolor/code.hpp"
#include "hypercolor/covers.hpp"
#include "hypercolor/distance.hpp"
#include "hypercolor/svg.hpp"
#include "hypercolor/tables.hpp"
#include "hypercolor/tessellation.hpp"

using namespace hypercolor;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what, const std::string& note = "") {
    std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
                note.empty() ? "" : " -- ", note.c_str());
    if (!pass) ++failures;
}

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point start = clock::now();
    return std::chrono::duration<double>(clock::now() - start).count();
}

struct BuiltCode {
    int p = 0, g = 0;
    BuildResult built;
    ColorCode code;
};

}  // namespace

int main() {
    // Build every code row of the genus 2..9 tables once, reused throughout.
    std::map<std::pair<int, int>, BuiltCode> codes;
    for (int g = 2; g <= 9; ++g)
        for (const auto& row : genus_table(g)) {
            if (!row.code_row) continue;
            BuiltCode bc;
            bc.p = row.p;
            bc.g = g;
            bc.built = build_complex(row.p, g, {});
            bc.code = plaquette_code(bc.built.complex, bc.built.coloring);
            codes[{row.p, g}] = std::move(bc);
        }

    // 1. Worked length constants.
    {
        bool ok = std::abs(edge_length(8, 3) - 0.7270398) < 1e-5 &&
                  std::abs(circumdiameter(8, 3) - 1.721412) < 1e-5 &&
                  std::abs(shrunk_edge_bound(8, 3) - 2.448452) < 1e-5 &&
                  std::abs(edge_length(10, 3) - 0.87917928) < 1e-5 &&
                  std::abs(circumdiameter(10, 3) - 2.354664) < 1e-5 &&
                  std::abs(shrunk_edge_bound(10, 3) - 3.23384) < 1e-5;
        report(1, ok, "l, D, AR for {8,3} and {10,3} reproduce the worked values to 1e-5");
    }

    // 2. Paired-side distances for genus 3..9.
    {
        const double expected[] = {3.9833, 4.596, 5.0591, 5.43275, 5.7464, 6.01699, 6.254948};
        bool ok = true;
        for (int g = 3; g <= 9; ++g)
            ok = ok && std::abs(paired_side_distance(g) - expected[g - 3]) < 2e-3;
        report(2, ok, "d_h(3..9) match the printed captions to 2e-3");
    }

    // 3. Face counts, exactly.
    {
        auto t1 = genus_table(2);
        std::map<int, long> got;
        for (const auto& r : t1) got[r.p] = r.n_f;
        bool ok = got.size() == 4 && got[8] == 6 && got[10] == 3 && got[12] == 2 && got[18] == 1;
        int checked = 4;
        for (const auto& ref : reference_tables()) {
            if (ref.g == 2) continue;
            auto rows = genus_table(ref.g);
            for (const auto& rr : ref.rows) {
                bool found = false;
                for (const auto& r : rows)
                    if (r.p == rr.p && r.n_f == rr.n_f) found = true;
                ok = ok && found;
                ++checked;
            }
        }
        report(3, ok, "n_f columns of every published table reproduced exactly",
               std::to_string(checked) + " cells");
    }

    // 4. [[n,k]] from constructed complexes.
    {
        bool ok = true;
        int count = 0;
        for (const auto& ref : reference_tables())
            for (const auto& rr : ref.rows) {
                if (rr.n == 0) continue;
                const auto& bc = codes.at({rr.p, ref.g});
                int n = bc.code.n;
                int k = 0;
                try {
                    k = logical_count(bc.code, ref.g);
                } catch (const std::exception&) {
                    ok = false;
                }
                if (n != rr.n || k != rr.k) ok = false;
                ++count;
            }
        report(4, ok, "all published [[n,k]] pairs rebuilt from constructed complexes",
               std::to_string(count) + " codes, k = n - 2 rank(H) = 4g");
    }

    // 5. Distance-estimate column and ratios.
    {
        bool d_ok = distance_estimate(8, 2) == 4 && distance_estimate(10, 2) == 2;
        int transposed = 0;
        bool ratio_ok = true;
        for (const auto& ref : reference_tables()) {
            for (const auto& rr : ref.rows) {
                if (rr.n == 0) continue;
                if (distance_estimate(rr.p, ref.g) != rr.d) d_ok = false;
            }
            for (const auto& diff : compare_to_reference(ref.g)) {
                if (diff.column != "dh_over_AR") continue;
                if (diff.match) continue;
                if (diff.transposed) ++transposed;
                else ratio_ok = false;
            }
        }
        report(5, d_ok && ratio_ok, "estimate d = 2*ceil(d_h/AR) matches every published d",
               transposed == 0
                   ? "all ratio cells within 1e-4"
                   : std::to_string(transposed) +
                         " genus-3 ratio cells match only after undoing a row transposition "
                         "in the source table (values verified against the adjacent row)");
    }

    // 6. Exact distances at desk scale: every code with kernel dimension <= 28.
    {
        bool ok = true;
        std::string note;
        const std::set<std::pair<int, int>> required = {
            {8, 2}, {10, 2}, {14, 3}, {10, 3}, {18, 4}, {12, 4}, {22, 5}};
        for (auto& [key, bc] : codes) {
            int kdim = (bc.code.n + 4 * bc.g) / 2;
            if (kdim > 28) continue;
            double t0 = now_seconds();
            EstimateComparison cmp = estimate_vs_exact(bc.code, bc.p, bc.g);
            double dt = now_seconds() - t0;
            bool exact = cmp.exact.exact && cmp.exact.value.has_value();
            if (!exact || dt > 300.0) ok = false;
            std::printf("    [[%d,%d]] (p=%d,g=%d): exact d = %d in %.2fs, estimate %d (%s)\n",
                        bc.code.n, 4 * bc.g, bc.p, bc.g, cmp.exact.value.value_or(-1), dt,
                        cmp.estimate, cmp.agree ? "agree" : "differ: recorded");
            if (required.count(key) && !exact) ok = false;
        }
        report(6, ok,
               "exhaustive search settles d exactly for every kernel dimension <= 28 code",
               "estimate disagreements are documented above, not failures");
    }

    // 7. The d = 4 family.
    {
        bool ok = true;
        double prev = 0.0, rate_g8 = 0.0;
        for (int g = 2; g <= 9; ++g) {
            int p = 4 + 2 * g;
            const auto& bc = codes.at({p, g});
            long nf = static_cast<long>(bc.built.complex.faces.size());
            int k = 4 * g;
            double rate = static_cast<double>(k) / bc.code.n;
            if (nf != 6 || bc.code.n != 8 + 4 * g || distance_estimate(p, g) != 4) ok = false;
            if (rate <= prev) ok = false;
            prev = rate;
            if (g == 8) rate_g8 = rate;
        }
        if (rate_g8 < 0.8 - 1e-12) ok = false;
        report(7, ok, "family p = 4+2g: n_f = 6, (n,k) = (8+4g,4g), estimate 4, k/n rising",
               "k/n reaches 0.8 at genus 8");
    }

    // 8. Quantum Singleton and Hamming bounds; last rows saturate.
    {
        bool ok = true;
        for (const auto& ref : reference_tables()) {
            const ReferenceRow* last = nullptr;
            for (const auto& rr : ref.rows) {
                if (rr.n == 0) continue;
                auto flags = bounds_check(rr.n, rr.k, rr.d);
                if (!flags.singleton_ok || !flags.hamming_ok) ok = false;
                last = &rr;
            }
            if (last) {
                auto flags = bounds_check(last->n, last->k, last->d);
                if (!flags.singleton_saturated) ok = false;
            }
        }
        report(8, ok, "every table code meets Singleton and Hamming; last rows saturate");
    }

    // 9. Property suites.
    {
        double t0 = now_seconds();
        bool ok = true;
        std::string why;
        auto need = [&](bool cond, const std::string& name) {
            if (!cond && why.empty()) why = name;
            ok = ok && cond;
        };
        for (auto& [key, bc] : codes) {
            (void)key;
            const ColorCode& code = bc.code;
            BinaryMatrix gram = code.H.gram(code.H);
            for (int i = 0; i < gram.rows(); ++i) need(gram.row(i).zero(), "H H^T = 0");
            for (int v = 0; v < code.n; ++v) {
                int w = 0;
                for (int i = 0; i < code.H.rows(); ++i) w += code.H.get(i, v);
                need(w == 3, "column weight 3");
            }
            need(rank_gf2(code.H) == code.H.rows() - 2, "rank = |F| - 2");
            need(color_dependencies(code).pass(), "color row sums");
            need(bc.built.complex.euler_characteristic() == 2 - 2L * bc.g, "Euler characteristic");
            auto fat = bc.built.complex.faces_at_vertices();
            auto eat = bc.built.complex.edges_at_vertices();
            for (int v = 0; v < code.n; ++v) {
                std::set<Color> fc, ec;
                for (int f : fat[v]) fc.insert(bc.built.coloring.face_color[f]);
                for (int e : eat[v]) ec.insert(bc.built.coloring.edge_color[e]);
                need(fc.size() == 3 && ec.size() == 3, "one face and edge per color per vertex");
            }
        }

        // Mobius group laws on 100 random points.
        std::mt19937 rng(2024);
        std::uniform_real_distribution<double> ang(0.0, 6.283185307);
        std::uniform_real_distribution<double> rad(0.0, 0.9);
        std::uniform_real_distribution<double> dst(0.0, 2.5);
        for (int i = 0; i < 100; ++i) {
            Mobius a = Mobius::rotation(ang(rng)) * Mobius::translation(dst(rng), ang(rng));
            Mobius b = Mobius::rotation(ang(rng)) * Mobius::translation(dst(rng), ang(rng));
            DiskPoint z(std::polar(rad(rng), ang(rng)));
            need(std::abs(a.inverse()(a(z)).z - z.z) < 1e-10, "Mobius inverse law");
            need(std::abs((a * b)(z).z - a(b(z)).z) < 1e-10, "Mobius composition");
            need((a * b)(z).abs() < 1.0, "disk preserved");
        }

        // Geometric vs combinatorial construction at genus 2, plus quotient
        // stability.
        GeometricResult geo = geometric_complex(TessellationSignature(8, 3, 2));
        CellComplex srch = combinatorial_search(TessellationSignature(8, 3, 2));
        need(geo.complex.vertex_count == srch.vertex_count &&
                 geo.complex.edges.size() == srch.edges.size() &&
                 geo.complex.faces.size() == srch.faces.size(),
             "builder agreement on (V,E,F)");
        SearchOptions so;
        so.exhaust = true;
        auto sols = enumerate_complexes(TessellationSignature(8, 3, 2), 16, so);
        bool member = false;
        for (const auto& s : sols)
            if (map_certificate(s) == map_certificate(geo.complex)) member = true;
        need(member, "geometric quotient among enumerated combinatorial complexes");
        need(quotient_stability(geo.complex, fundamental_polygon(2)) == 0, "quotient idempotence");
        bool deca_incompatible = false;
        try {
            geometric_complex(TessellationSignature(10, 3, 2));
        } catch (const std::exception&) {
            deca_incompatible = true;
        }
        need(deca_incompatible, "{10,3} genus-2 alignment correctly refused");

        double dt = now_seconds() - t0;
        report(9, ok && dt < 60.0, "property suites over every constructed code",
               ok ? ("completed in " + std::to_string(dt) + "s") : why);
    }

    // 10. Negative controls.
    {
        bool ok = true;
        std::string msg7, msg18;
        try {
            build_complex(7, 2, {});
            ok = false;
        } catch (const std::exception& ex) {
            msg7 = ex.what();
        }
        try {
            build_complex(18, 2, {});
            ok = false;
        } catch (const std::exception& ex) {
            msg18 = ex.what();
        }
        if (msg7.find("not 3-colorable") == std::string::npos) ok = false;
        if (msg18.find("fewer than 3 faces") == std::string::npos) ok = false;

        const auto& big = codes.at({8, 9});  // [[128,36]]
        DistanceBudget tiny;
        tiny.max_steps = 100;
        DistanceResult res = exact_distance(big.code, tiny);
        if (res.exact) ok = false;
        if (res.status() != "upper-bound") ok = false;
        report(10, ok, "documented failures for p=7 and p=18; exhausted budgets stay upper-bound");
    }

    std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
