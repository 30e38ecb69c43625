#include "hypercolor/svg.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hypercolor {

namespace {

// Points along the geodesic from a to b, endpoints included.
std::vector<Cx> geodesic_points(Cx a, Cx b, int samples) {
    Mobius to0 = Mobius::point_to_origin(DiskPoint(a));
    Cx bb = to0.apply(b);
    double t = std::atanh(std::abs(bb));
    double ang = std::arg(bb);
    Mobius back = to0.inverse();
    std::vector<Cx> out;
    out.reserve(samples + 1);
    for (int i = 0; i <= samples; ++i) {
        double s = t * i / samples;
        out.push_back(back.apply(std::polar(std::tanh(s), ang)));
    }
    return out;
}

struct Mapper {
    double size;
    double px(double x) const { return (x + 1.05) / 2.1 * size; }
    double py(double y) const { return (1.05 - y) / 2.1 * size; }
};

const char* fill_of(Color c) {
    switch (c) {
        case Color::R: return "#e06c5c";
        case Color::G: return "#69b764";
        case Color::B: return "#5d8fd4";
    }
    return "#999999";
}

}  // namespace

std::string complex_to_svg(const CellComplex& cx, const Coloring& col,
                           const FundamentalPolygon* poly, const SvgOptions& opts) {
    if (!cx.has_embedding()) throw std::invalid_argument("SVG export needs an embedded complex");
    Mapper m{static_cast<double>(opts.size)};
    std::ostringstream os;
    os.precision(7);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opts.size
       << "\" height=\"" << opts.size << "\" viewBox=\"0 0 " << opts.size << " " << opts.size
       << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<circle cx=\"" << m.px(0) << "\" cy=\"" << m.py(0) << "\" r=\"" << opts.size / 2.1
       << "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"1.5\"/>\n";

    for (std::size_t f = 0; f < cx.faces.size(); ++f) {
        const auto& vs = cx.faces[f].vertices;
        bool local = cx.has_corner_geometry();
        os << "<path d=\"";
        for (std::size_t i = 0; i < vs.size(); ++i) {
            Cx a = local ? cx.face_corner_pos[f][i] : cx.vertex_pos[vs[i]];
            Cx b = local ? cx.face_corner_pos[f][(i + 1) % vs.size()]
                         : cx.vertex_pos[vs[(i + 1) % vs.size()]];
            auto pts = geodesic_points(a, b, opts.samples_per_edge);
            for (std::size_t k = (i == 0 ? 0 : 1); k < pts.size(); ++k)
                os << (i == 0 && k == 0 ? "M" : "L") << m.px(pts[k].real()) << " "
                   << m.py(pts[k].imag()) << " ";
        }
        os << "Z\" fill=\"" << fill_of(col.face_color[f])
           << "\" fill-opacity=\"0.55\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    }

    if (poly) {
        os << "<path d=\"";
        int n = poly->sides();
        for (int i = 0; i < n; ++i) {
            Cx a = poly->vertices[i].z, b = poly->vertices[(i + 1) % n].z;
            auto pts = geodesic_points(a, b, opts.samples_per_edge);
            for (std::size_t k = (i == 0 ? 0 : 1); k < pts.size(); ++k)
                os << (i == 0 && k == 0 ? "M" : "L") << m.px(pts[k].real()) << " "
                   << m.py(pts[k].imag()) << " ";
        }
        os << "Z\" fill=\"none\" stroke=\"#111111\" stroke-width=\"2.5\" stroke-dasharray=\"7 4\"/>\n";
    }

    for (int v = 0; v < cx.vertex_count; ++v) {
        Cx z = cx.vertex_pos[v];
        os << "<circle cx=\"" << m.px(z.real()) << "\" cy=\"" << m.py(z.imag())
           << "\" r=\"3\" fill=\"#222222\"/>\n";
    }
    for (int q : opts.highlight_qubits) {
        Cx z = cx.vertex_pos[q];
        os << "<circle cx=\"" << m.px(z.real()) << "\" cy=\"" << m.py(z.imag())
           << "\" r=\"7\" fill=\"#f2c230\" fill-opacity=\"0.9\" stroke=\"#7a5c00\" "
              "stroke-width=\"1.5\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace hypercolor
