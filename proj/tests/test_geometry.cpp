#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "hypercolor/code.hpp"
#include "hypercolor/covers.hpp"
#include "hypercolor/svg.hpp"
#include "hypercolor/tessellation.hpp"

using namespace hypercolor;

TEST_CASE("universal patch around the genus-2 octagon") {
    TessellationSignature sig(8, 3, 2);
    FundamentalPolygon poly = fundamental_polygon(2);
    Patch patch = build_universal_patch(sig, poly);
    CHECK(patch.faces.size() >= 6);

    // Seed face: regular octagon centered at the origin, circumradius D/2.
    const auto& seed = patch.faces[0];
    CHECK(seed.center.abs() < 1e-12);
    for (const auto& v : seed.vertices)
        CHECK(std::abs(hyperbolic_distance(DiskPoint(), v) - circumdiameter(8, 3) / 2) < 1e-9);

    // Distinct faces are interior-disjoint: centers at least two inradii
    // apart. The {8,3} inradius is acosh(cos(pi/3)/sin(pi/8)).
    double inradius = std::acosh(std::cos(3.14159265358979323846 / 3) /
                                 std::sin(3.14159265358979323846 / 8));
    for (std::size_t i = 0; i < patch.faces.size(); ++i)
        for (std::size_t j = i + 1; j < patch.faces.size(); ++j)
            CHECK(hyperbolic_distance(patch.faces[i].center, patch.faces[j].center) >
                  2 * inradius - 1e-6);

    // All points stay strictly inside the disk.
    for (const auto& f : patch.faces)
        for (const auto& v : f.vertices) CHECK(v.abs() <= 1.0 - 1e-6);

    // A face budget too small to cover the polygon overflows loudly.
    PatchOptions tight;
    tight.face_budget = 3;
    CHECK_THROWS_WITH_AS(build_universal_patch(sig, poly, tight),
                         doctest::Contains("patch overflow"), std::runtime_error);
}

TEST_CASE("quotient of the octagon patch is the 6-face complex") {
    TessellationSignature sig(8, 3, 2);
    FundamentalPolygon poly = fundamental_polygon(2);
    Patch patch = build_universal_patch(sig, poly);
    CellComplex cx = quotient_by_pairings(patch, poly);
    CHECK(cx.vertex_count == 16);
    CHECK(cx.edges.size() == 24);
    CHECK(cx.faces.size() == 6);
    CHECK(cx.euler_characteristic() == -2);
    CHECK(cx.genus == 2);
    CHECK(cx.has_embedding());
    CHECK(cx.has_corner_geometry());

    ValidationReport rep = validate_complex(cx, &sig);
    for (const auto& c : rep.checks) {
        bool passed_or_skipped = c.pass || c.skipped;
        CHECK_MESSAGE(passed_or_skipped, c.name);
    }
    const auto* angles = rep.find("vertex_angle_sums");
    REQUIRE(angles != nullptr);
    CHECK_FALSE(angles->skipped);
    CHECK(angles->pass);

    // Every face touches the four faces of the other colors twice each.
    auto adj = cx.face_adjacency();
    for (std::size_t f = 0; f < adj.size(); ++f) {
        CHECK(adj[f][f] == 0);
        int twos = 0, zeros = 0;
        for (std::size_t o = 0; o < adj.size(); ++o) {
            if (o == f) continue;
            if (adj[f][o] == 2) ++twos;
            else if (adj[f][o] == 0) ++zeros;
        }
        CHECK(twos == 4);
        CHECK(zeros == 1);
    }

    // Identification is stable: re-running the pairing words merges nothing.
    CHECK(quotient_stability(cx, poly) == 0);
}

TEST_CASE("identity pairings cannot close the patch") {
    TessellationSignature sig(8, 3, 2);
    FundamentalPolygon poly = fundamental_polygon(2);
    Patch patch = build_universal_patch(sig, poly);
    FundamentalPolygon crippled = poly;
    crippled.pairings = {Mobius::identity()};
    CHECK_THROWS_WITH_AS(quotient_by_pairings(patch, crippled),
                         doctest::Contains("pairing-incompatible"), std::runtime_error);
}

TEST_CASE("geometric construction succeeds exactly where it can") {
    GeometricResult geo = geometric_complex(TessellationSignature(8, 3, 2));
    CHECK(geo.complex.faces.size() == 6);
    CHECK(geo.complex.vertex_count == 16);

    // The {10,3} tessellation shares no symmetry with the octagon pairing
    // group, so the quotient must refuse rather than force a gluing.
    CHECK_THROWS_WITH_AS(geometric_complex(TessellationSignature(10, 3, 2)),
                         doctest::Contains("pairing-incompatible"), std::runtime_error);
}

TEST_CASE("geometric and combinatorial builders agree at genus 2") {
    GeometricResult geo = geometric_complex(TessellationSignature(8, 3, 2));
    CellComplex srch = combinatorial_search(TessellationSignature(8, 3, 2));

    CHECK(geo.complex.vertex_count == srch.vertex_count);
    CHECK(geo.complex.edges.size() == srch.edges.size());
    CHECK(geo.complex.faces.size() == srch.faces.size());

    // The geometric quotient appears among the enumerated combinatorial
    // complexes, identified by the full oriented-map certificate.
    SearchOptions so;
    so.exhaust = true;
    auto sols = enumerate_complexes(TessellationSignature(8, 3, 2), 16, so);
    std::string target = map_certificate(geo.complex);
    bool found = false;
    for (const auto& s : sols)
        if (map_certificate(s) == target) found = true;
    CHECK(found);

    // It also coincides with the covering-space construction.
    CHECK(map_certificate(structured_complex(8, 2)) == target);
}

TEST_CASE("SVG export draws the embedded complex") {
    GeometricResult geo = geometric_complex(TessellationSignature(8, 3, 2));
    Coloring col = three_color(geo.complex);
    FundamentalPolygon poly = fundamental_polygon(2);
    SvgOptions opts;
    opts.highlight_qubits = {0, 1, 2, 3};
    std::string svg = complex_to_svg(geo.complex, col, &poly, opts);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    std::size_t paths = 0, pos = 0;
    while ((pos = svg.find("<path", pos)) != std::string::npos) {
        ++paths;
        pos += 5;
    }
    CHECK(paths >= 7);  // six faces and the polygon outline
    CHECK(svg.find("#f2c230") != std::string::npos);  // highlighted qubits

    CellComplex plain = structured_complex(8, 2);
    CHECK_THROWS(complex_to_svg(plain, three_color(plain), &poly, {}));
}
