#include "hypercolor/hypgeo.hpp"

#include <cmath>

namespace hypercolor {

namespace {
constexpr double kPi = 3.14159265358979323846;

double safe_acosh(double x) {
    if (x < 1.0) {
        if (x > 1.0 - 1e-12) x = 1.0;  // clamp roundoff at the Euclidean limit
        else throw std::domain_error("not hyperbolic: acosh argument below 1");
    }
    return std::acosh(x);
}

void require_hyperbolic(int p, int q) {
    if (p < 3 || q < 3) throw std::invalid_argument("not hyperbolic: p,q must be >= 3");
    if (q * p - 2 * p - 2 * q <= 0) throw std::invalid_argument("not hyperbolic: needs 1/p + 1/q < 1/2");
}
}  // namespace

DiskPoint::DiskPoint(Cx v) : z(v) {
    if (std::abs(v) >= 1.0) throw std::invalid_argument("DiskPoint outside the open unit disk");
}

Mobius Mobius::rotation(double theta) {
    Cx h = std::polar(1.0, theta / 2.0);
    return {h, 0.0, 0.0, std::conj(h)};
}

Mobius Mobius::translation_x(double t) {
    double ch = std::cosh(t / 2.0), sh = std::sinh(t / 2.0);
    return {ch, sh, sh, ch};
}

Mobius Mobius::translation(double t, double axis) {
    return rotation(axis) * translation_x(t) * rotation(-axis);
}

Mobius Mobius::point_to_origin(const DiskPoint& w) {
    // z -> (z - w)/(1 - conj(w) z), normalized to unit determinant.
    double s = std::sqrt(1.0 - std::norm(w.z));
    return {Cx(1.0 / s, 0.0), -w.z / s, -std::conj(w.z) / s, Cx(1.0 / s, 0.0)};
}

Mobius Mobius::rotation_about(const DiskPoint& center, double theta) {
    Mobius to0 = point_to_origin(center);
    return to0.inverse() * rotation(theta) * to0;
}

Mobius Mobius::operator*(const Mobius& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mobius Mobius::inverse() const { return {d, -b, -c, a}; }

Cx Mobius::apply(Cx z) const { return (a * z + b) / (c * z + d); }

Mobius Mobius::normalized() const {
    Cx s = std::sqrt(det());
    return {a / s, b / s, c / s, d / s};
}

bool Mobius::is_hyperbolic_translation(double eps) const {
    return std::abs(normalized().trace()) > 2.0 + eps;
}

double hyperbolic_distance(const DiskPoint& p, const DiskPoint& q) {
    double num = std::abs(p.z - q.z);
    double den = std::abs(1.0 - std::conj(p.z) * q.z);
    return 2.0 * std::atanh(num / den);
}

double triangle_area(double alpha, double beta, double theta) {
    if (alpha < 0 || beta < 0 || theta < 0) throw std::invalid_argument("negative angle");
    double sum = alpha + beta + theta;
    if (sum >= kPi) throw std::invalid_argument("not hyperbolic: angle sum >= pi");
    return kPi - sum;
}

double face_area(int p, int q) {
    require_hyperbolic(p, q);
    // 2p copies of the (pi/p, pi/q, pi/2) kite triangle.
    return 2.0 * p * triangle_area(kPi / p, kPi / q, kPi / 2.0);
}

TessellationSignature::TessellationSignature(int p_, int q_, int g_) : p(p_), q(q_), g(g_) {
    if (q != 3) throw std::invalid_argument("signature requires q = 3");
    if (p <= 6) throw std::invalid_argument("not hyperbolic: trivalent tessellations need p > 6");
    if (g < 2) throw std::invalid_argument("genus must be >= 2");
}

long face_count(const TessellationSignature& sig) {
    long num = 4L * sig.q * (sig.g - 1);
    long den = 1L * sig.p * sig.q - 2L * sig.p - 2L * sig.q;
    if (den <= 0) throw std::invalid_argument("not hyperbolic");
    if (num % den != 0) throw std::invalid_argument("incompatible (p,g): face count is not an integer");
    return num / den;
}

double edge_length(int p, int q) {
    require_hyperbolic(p, q);
    double cq = std::cos(kPi / q), sq = std::sin(kPi / q);
    return safe_acosh((cq * cq + std::cos(2.0 * kPi / p)) / (sq * sq));
}

double circumdiameter(int p, int q) {
    require_hyperbolic(p, q);
    double arg = (std::cos(kPi / p) * std::cos(kPi / q)) / (std::sin(kPi / p) * std::sin(kPi / q));
    return 2.0 * safe_acosh(arg);
}

double shrunk_edge_bound(int p, int q) { return edge_length(p, q) + circumdiameter(p, q); }

double paired_side_distance(int g) {
    if (g < 2) throw std::invalid_argument("genus must be >= 2");
    double a = kPi / (4.0 * g);
    return 2.0 * safe_acosh(std::cos(a) / std::sin(a));
}

double estimate_ratio(int p, int g) {
    return paired_side_distance(g) / shrunk_edge_bound(p, 3);
}

int distance_estimate(int p, int g) {
    face_count(TessellationSignature(p, 3, g));  // enforce the precondition
    double r = estimate_ratio(p, g);
    // The bound n_a > d_h/AR is strict, but near-integer ratios are treated
    // as attained to match how the source tables round.
    double nearest = std::round(r);
    long up = (std::abs(r - nearest) <= 1e-9) ? static_cast<long>(nearest)
                                              : static_cast<long>(std::ceil(r));
    return static_cast<int>(2 * up);
}

DiskPoint FundamentalPolygon::side_midpoint(int i) const {
    int n = sides();
    double theta = kPi * (2.0 * i + 1.0) / n;
    double r = std::tanh(inradius / 2.0);
    return DiskPoint(std::polar(r, theta));
}

bool FundamentalPolygon::contains(const DiskPoint& p, double tol) const {
    int n = sides();
    for (int i = 0; i < n; ++i) {
        const Cx z1 = vertices[i].z;
        const Cx z2 = vertices[(i + 1) % n].z;
        // Geodesic through z1, z2: circle orthogonal to the unit circle,
        // or a diameter when z1, z2, 0 are collinear.
        double cross = z1.real() * z2.imag() - z1.imag() * z2.real();
        if (std::abs(cross) < 1e-14) {
            Cx dir = z2 - z1;
            double side_p = dir.real() * p.z.imag() - dir.imag() * p.z.real();
            double side_0 = dir.real() * (-z1.imag()) - dir.imag() * (-z1.real());
            if (side_p * side_0 < -tol) return false;
            continue;
        }
        // Solve for the center c: 2 Re(conj(c) zi) = |zi|^2 + 1.
        double b1 = std::norm(z1) + 1.0, b2 = std::norm(z2) + 1.0;
        double det = 2.0 * cross;
        double cx = (b1 * z2.imag() - b2 * z1.imag()) / det;
        double cy = (b2 * z1.real() - b1 * z2.real()) / det;
        Cx c(cx, cy);
        double rho2 = std::norm(c) - 1.0;
        // Origin satisfies |0-c|^2 = |c|^2 > rho^2; inside means same side.
        if (std::norm(p.z - c) < rho2 - tol) return false;
    }
    return true;
}

FundamentalPolygon fundamental_polygon(int g) {
    if (g < 2) throw std::invalid_argument("genus must be >= 2");
    int n = 4 * g;
    FundamentalPolygon poly;
    poly.g = g;
    poly.circumradius = circumdiameter(n, n) / 2.0;
    poly.inradius = paired_side_distance(g) / 2.0;
    double rv = std::tanh(poly.circumradius / 2.0);
    poly.vertices.reserve(n);
    for (int k = 0; k < n; ++k)
        poly.vertices.push_back(DiskPoint(std::polar(rv, 2.0 * kPi * k / n)));
    double dh = paired_side_distance(g);
    poly.pairings.reserve(2 * g);
    for (int i = 0; i < 2 * g; ++i) {
        double axis = kPi * (2.0 * i + 1.0) / n;  // through the midpoint of side i
        poly.pairings.push_back(Mobius::translation(-dh, axis));
    }
    return poly;
}

}  // namespace hypercolor
