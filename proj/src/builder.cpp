#include "hypercolor/builder.hpp"

#include "hypercolor/covers.hpp"

namespace hypercolor {

BuildResult build_complex(int p, int g, const BuildOptions& opts) {
    TessellationSignature sig(p, 3, g);
    long nf = face_count(sig);
    if (auto reason = color_infeasibility(p, nf)) throw std::invalid_argument(*reason);

    BuildResult out;
    bool try_geometric = opts.builder == BuilderKind::Geometric ||
                         (opts.builder == BuilderKind::Auto &&
                          (g == 2 || opts.attempt_geometric_all));
    if (try_geometric) {
        try {
            GeometricResult geo = geometric_complex(sig);
            out.complex = std::move(geo.complex);
            out.method = "geometric";
            out.geometric_note = geo.note;
            out.coloring = three_color(out.complex);
            return out;
        } catch (const std::exception& ex) {
            if (opts.builder == BuilderKind::Geometric) throw;
            out.geometric_note = ex.what();
        }
    } else if (opts.builder == BuilderKind::Auto) {
        out.geometric_note = "not attempted at this genus";
    }

    if (nf <= opts.search_max_faces) {
        try {
            SearchOptions so;
            so.max_faces = opts.search_max_faces;
            so.node_budget = opts.search_budget;
            out.complex = combinatorial_search(sig, so);
            out.method = "search";
            out.coloring = three_color(out.complex);
            return out;
        } catch (const SearchBudgetExceeded&) {
            out.complex = structured_complex(p, g);
            out.method = "structured";
            out.coloring = three_color(out.complex);
            return out;
        }
    }
    out.complex = structured_complex(p, g);
    out.method = "covers";
    out.coloring = three_color(out.complex);
    return out;
}

}  // namespace hypercolor
