#include <cstdio>
#include "hypercolor/tessellation.hpp"
#include "hypercolor/covers.hpp"

using namespace hypercolor;

// Instrumented copy of the search state via public API: replay a known-valid
// gluing (from the structured Bolza complex) through the searcher to see if
// the pruning machinery accepts it.
int main() {
    CellComplex bolza = structured_complex(8, 2);
    std::printf("bolza: V=%d E=%zu F=%zu\n", bolza.vertex_count, bolza.edges.size(), bolza.faces.size());
    // Print the gluing as (face,pos)<->(face,pos) pairs.
    for (const auto& e : bolza.edges)
        std::printf("(%d,%d)-(%d,%d) ", e.sides[0].face, e.sides[0].pos, e.sides[1].face, e.sides[1].pos);
    std::printf("\n");
    // Show three_color classes
    auto col = three_color(bolza);
    for (std::size_t f = 0; f < bolza.faces.size(); ++f) std::printf("f%zu=%s ", f, color_name(col.face_color[f]));
    std::printf("\n");
    return 0;
}
