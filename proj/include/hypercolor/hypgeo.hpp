#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypercolor {

using Cx = std::complex<double>;

/// Point of the hyperbolic plane in the Poincare disk model, |z| < 1.
struct DiskPoint {
    Cx z{0.0, 0.0};

    DiskPoint() = default;
    explicit DiskPoint(Cx v);
    DiskPoint(double x, double y) : DiskPoint(Cx(x, y)) {}

    double x() const { return z.real(); }
    double y() const { return z.imag(); }
    double abs() const { return std::abs(z); }
};

/// Orientation-preserving isometry of the disk as a unit-determinant
/// 2x2 complex matrix acting by z -> (az+b)/(cz+d).
struct Mobius {
    Cx a{1, 0}, b{0, 0}, c{0, 0}, d{1, 0};

    static Mobius identity() { return {}; }
    /// Rotation by theta about the origin.
    static Mobius rotation(double theta);
    /// Translation by hyperbolic distance t along the positive real axis.
    static Mobius translation_x(double t);
    /// Translation by t along the geodesic through the origin at angle `axis`.
    static Mobius translation(double t, double axis);
    static Mobius rotation_about(const DiskPoint& center, double theta);
    /// Isometry sending w to the origin.
    static Mobius point_to_origin(const DiskPoint& w);

    Mobius operator*(const Mobius& o) const;
    Mobius inverse() const;
    Cx apply(Cx z) const;
    DiskPoint operator()(const DiskPoint& p) const { return DiskPoint(apply(p.z)); }

    Cx det() const { return a * d - b * c; }
    Cx trace() const { return a + d; }
    Mobius normalized() const;
    /// True when the normalized trace classifies the map as a hyperbolic
    /// translation (fixed-point free inside the disk).
    bool is_hyperbolic_translation(double eps = 1e-9) const;
};

double hyperbolic_distance(const DiskPoint& p, const DiskPoint& q);

/// Gauss-Bonnet area of a hyperbolic triangle with the given interior angles.
double triangle_area(double alpha, double beta, double theta);

/// Area of the regular {p,q} polygon.
double face_area(int p, int q);

struct TessellationSignature {
    int p = 0;
    int q = 3;
    int g = 0;
    TessellationSignature() = default;
    TessellationSignature(int p_, int q_, int g_);
};

/// Number of {p,q} faces tiling the genus-g fundamental polygon,
/// n_f = 4q(g-1)/(pq-2p-2q). Throws when the ratio is not an integer.
long face_count(const TessellationSignature& sig);

double edge_length(int p, int q);
double circumdiameter(int p, int q);
double shrunk_edge_bound(int p, int q);

/// Distance between paired opposite sides of the {4g,4g} fundamental polygon.
double paired_side_distance(int g);

double estimate_ratio(int p, int g);
/// Geometric minimum-distance estimate d = 2*ceil(d_h / AR_{p,3}).
int distance_estimate(int p, int g);

struct FundamentalPolygon {
    int g = 0;
    double circumradius = 0.0;
    double inradius = 0.0;
    std::vector<DiskPoint> vertices;  // 4g vertices, counterclockwise, v0 on +x axis
    std::vector<Mobius> pairings;     // 2g maps, side i -> side i+2g

    int sides() const { return static_cast<int>(vertices.size()); }
    DiskPoint side_midpoint(int i) const;
    bool contains(const DiskPoint& p, double tol = 1e-12) const;
};

FundamentalPolygon fundamental_polygon(int g);

}  // namespace hypercolor
