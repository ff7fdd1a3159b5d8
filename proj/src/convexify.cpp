#include "riselab/convexify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace riselab {

std::vector<double> convexify_1d(const std::vector<double>& xs, const std::vector<double>& v) {
    const std::size_t n = xs.size();
    if (n != v.size() || n == 0) throw std::invalid_argument("convexify_1d: size mismatch");
    if (n <= 2) return v;
    // monotone chain: keep indices whose consecutive slopes strictly increase
    std::vector<std::size_t> hull;
    hull.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        while (hull.size() >= 2) {
            const std::size_t a = hull[hull.size() - 2], b = hull.back();
            // pop b if it lies on or above the chord a -> i
            const double lhs = (v[b] - v[a]) * (xs[i] - xs[b]);
            const double rhs = (v[i] - v[b]) * (xs[b] - xs[a]);
            if (lhs >= rhs) hull.pop_back();
            else break;
        }
        hull.push_back(i);
    }
    std::vector<double> out(n);
    std::size_t seg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (seg + 1 < hull.size() && xs[hull[seg + 1]] < xs[i]) ++seg;
        const std::size_t a = hull[seg], b = hull[std::min(seg + 1, hull.size() - 1)];
        if (a == b || xs[i] <= xs[a]) {
            out[i] = v[a];
        } else {
            const double t = (xs[i] - xs[a]) / (xs[b] - xs[a]);
            out[i] = v[a] + t * (v[b] - v[a]);
        }
    }
    return out;
}

namespace {

struct Vec3 {
    double x, y, z;
};

Vec3 sub(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

struct Face {
    std::array<std::size_t, 3> v;
    Vec3 n;       // outward normal
    double off;   // n . p = off on the plane
    bool alive = true;
    std::vector<std::size_t> outside;
};

class QuickHull3 {
public:
    explicit QuickHull3(const std::vector<Vec3>& pts) : pts_(pts) {
        double span = 1.0;
        for (const Vec3& p : pts_)
            span = std::max({span, std::abs(p.x), std::abs(p.y), std::abs(p.z)});
        eps_ = 1e-12 * span;
    }

    // false if the points are coplanar within tolerance
    bool build() {
        if (!initial_simplex()) return false;
        std::vector<std::size_t> pending;
        for (std::size_t f = 0; f < faces_.size(); ++f)
            if (faces_[f].alive && !faces_[f].outside.empty()) pending.push_back(f);
        while (!pending.empty()) {
            const std::size_t f = pending.back();
            pending.pop_back();
            if (!faces_[f].alive || faces_[f].outside.empty()) continue;
            const std::size_t first_new = faces_.size();
            expand(f);
            for (std::size_t j = first_new; j < faces_.size(); ++j)
                if (!faces_[j].outside.empty()) pending.push_back(j);
        }
        return true;
    }

    const std::vector<Face>& faces() const { return faces_; }
    double eps() const { return eps_; }

private:
    const std::vector<Vec3>& pts_;
    std::vector<Face> faces_;
    Vec3 interior_{};
    double eps_;

    double height(const Face& f, std::size_t i) const { return dot(f.n, pts_[i]) - f.off; }

    void make_face(std::size_t a, std::size_t b, std::size_t c) {
        Face f;
        f.v = {a, b, c};
        f.n = cross(sub(pts_[b], pts_[a]), sub(pts_[c], pts_[a]));
        f.off = dot(f.n, pts_[a]);
        if (dot(f.n, interior_) > f.off) {  // flip outward
            std::swap(f.v[1], f.v[2]);
            f.n = {-f.n.x, -f.n.y, -f.n.z};
            f.off = -f.off;
        }
        faces_.push_back(std::move(f));
    }

    bool initial_simplex() {
        const std::size_t n = pts_.size();
        std::size_t i0 = 0, i1 = 0;
        double best = -1.0;
        // farthest pair among the 6 axis extremes
        std::array<std::size_t, 6> ext{0, 0, 0, 0, 0, 0};
        for (std::size_t i = 0; i < n; ++i) {
            if (pts_[i].x < pts_[ext[0]].x) ext[0] = i;
            if (pts_[i].x > pts_[ext[1]].x) ext[1] = i;
            if (pts_[i].y < pts_[ext[2]].y) ext[2] = i;
            if (pts_[i].y > pts_[ext[3]].y) ext[3] = i;
            if (pts_[i].z < pts_[ext[4]].z) ext[4] = i;
            if (pts_[i].z > pts_[ext[5]].z) ext[5] = i;
        }
        for (std::size_t a : ext)
            for (std::size_t b : ext) {
                const Vec3 d = sub(pts_[a], pts_[b]);
                const double l = dot(d, d);
                if (l > best) best = l, i0 = a, i1 = b;
            }
        if (best <= eps_ * eps_) return false;
        // farthest from the line i0-i1
        const Vec3 dir = sub(pts_[i1], pts_[i0]);
        std::size_t i2 = i0;
        best = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const Vec3 c = cross(dir, sub(pts_[i], pts_[i0]));
            const double l = dot(c, c);
            if (l > best) best = l, i2 = i;
        }
        if (best <= eps_ * eps_ * dot(dir, dir)) return false;
        // farthest from the plane i0-i1-i2
        const Vec3 nrm = cross(dir, sub(pts_[i2], pts_[i0]));
        const double nl = std::sqrt(dot(nrm, nrm));
        std::size_t i3 = i0;
        best = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = std::abs(dot(nrm, sub(pts_[i], pts_[i0])));
            if (d > best) best = d, i3 = i;
        }
        if (best <= eps_ * nl) return false;

        interior_ = {(pts_[i0].x + pts_[i1].x + pts_[i2].x + pts_[i3].x) / 4.0,
                     (pts_[i0].y + pts_[i1].y + pts_[i2].y + pts_[i3].y) / 4.0,
                     (pts_[i0].z + pts_[i1].z + pts_[i2].z + pts_[i3].z) / 4.0};
        make_face(i0, i1, i2);
        make_face(i0, i1, i3);
        make_face(i0, i2, i3);
        make_face(i1, i2, i3);
        // conflict lists
        for (std::size_t i = 0; i < n; ++i) {
            if (i == i0 || i == i1 || i == i2 || i == i3) continue;
            for (Face& f : faces_)
                if (height(f, i) > eps_) {
                    f.outside.push_back(i);
                    break;
                }
        }
        return true;
    }

    void expand(std::size_t fi) {
        // farthest conflict point of this face
        const Face& f0 = faces_[fi];
        std::size_t apex = f0.outside.front();
        double best = -1.0;
        for (std::size_t i : f0.outside) {
            const double h = height(f0, i);
            if (h > best) best = h, apex = i;
        }
        // all alive faces visible from the apex
        std::vector<std::size_t> visible;
        for (std::size_t j = 0; j < faces_.size(); ++j)
            if (faces_[j].alive && height(faces_[j], apex) > eps_) visible.push_back(j);
        // horizon = edges used exactly once within the visible patch
        struct Edge {
            std::size_t a, b;
        };
        std::vector<Edge> edges;
        for (std::size_t j : visible)
            for (int k = 0; k < 3; ++k) {
                std::size_t a = faces_[j].v[static_cast<std::size_t>(k)];
                std::size_t b = faces_[j].v[static_cast<std::size_t>((k + 1) % 3)];
                if (a > b) std::swap(a, b);
                edges.push_back({a, b});
            }
        std::sort(edges.begin(), edges.end(), [](const Edge& l, const Edge& r) {
            return l.a != r.a ? l.a < r.a : l.b < r.b;
        });
        std::vector<Edge> horizon;
        for (std::size_t k = 0; k < edges.size();) {
            std::size_t k2 = k;
            while (k2 < edges.size() && edges[k2].a == edges[k].a && edges[k2].b == edges[k].b) ++k2;
            if (k2 - k == 1) horizon.push_back(edges[k]);
            k = k2;
        }
        // gather orphaned conflict points and retire the visible faces
        std::vector<std::size_t> orphans;
        for (std::size_t j : visible) {
            for (std::size_t i : faces_[j].outside)
                if (i != apex) orphans.push_back(i);
            faces_[j].alive = false;
            faces_[j].outside.clear();
        }
        // attach new faces over the horizon
        const std::size_t first_new = faces_.size();
        for (const Edge& e : horizon) make_face(e.a, e.b, apex);
        for (std::size_t i : orphans)
            for (std::size_t j = first_new; j < faces_.size(); ++j)
                if (height(faces_[j], i) > eps_) {
                    faces_[j].outside.push_back(i);
                    break;
                }
    }
};

}  // namespace

std::vector<double> convexify_2d(const std::vector<double>& xs, const std::vector<double>& ys,
                                 const std::vector<double>& v) {
    const std::size_t nx = xs.size(), ny = ys.size();
    if (v.size() != nx * ny) throw std::invalid_argument("convexify_2d: size mismatch");
    std::vector<Vec3> pts(nx * ny);
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j) pts[i * ny + j] = {xs[i], ys[j], v[i * ny + j]};

    QuickHull3 hull(pts);
    if (!hull.build()) return v;  // coplanar lift: the data is affine already

    // lower envelope = max over downward faces of their plane values
    std::vector<double> out(v.size(), -std::numeric_limits<double>::infinity());
    bool any = false;
    for (const Face& f : hull.faces()) {
        if (!f.alive || f.n.z >= -hull.eps()) continue;
        any = true;
        for (std::size_t i = 0; i < nx; ++i)
            for (std::size_t j = 0; j < ny; ++j) {
                const double plane = (f.off - f.n.x * xs[i] - f.n.y * ys[j]) / f.n.z;
                out[i * ny + j] = std::max(out[i * ny + j], plane);
            }
    }
    if (!any) return v;
    // the hull never exceeds the data
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = std::min(out[k], v[k]);
    return out;
}

}  // namespace riselab
