#include "polyq/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polyq {

double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

IndexPartition index_partition(const RibbonTree& t, const EdgeRef& e) {
    const RibbonTree& sub = node_at(t, e);  // throws if absent
    int before = 0;
    const RibbonTree* cur = &t;
    for (int idx : e) {
        for (int j = 0; j < idx; ++j) before += cur->children()[j].leaf_count();
        cur = &cur->children()[idx];
    }
    IndexPartition part;
    for (int i = before + 1; i <= before + sub.leaf_count(); ++i) part.far_side.push_back(i);
    part.root_side.push_back(0);
    for (int i = 1; i <= t.leaf_count(); ++i)
        if (i <= before || i > before + sub.leaf_count()) part.root_side.push_back(i);
    return part;
}

double PolygonRealization::closure_residual() const {
    Vec3 s{0, 0, 0};
    for (const auto& v : vectors)
        for (int k = 0; k < 3; ++k) s[k] += v[k];
    return norm(s);
}

double bending_value(const PolygonRealization& u, const IndexPartition& part) {
    Vec3 s{0, 0, 0};
    for (int i : part.root_side) {
        if (i < 0 || i >= static_cast<int>(u.vectors.size()))
            throw std::out_of_range("partition index " + std::to_string(i) +
                                    " outside the polygon");
        for (int k = 0; k < 3; ++k) s[k] += u.vectors[i][k];
    }
    return norm(s);
}

namespace {

// rotation taking s onto t (equal norms assumed): minimal-angle axis s x t,
// with the stated fallbacks when the vectors are (anti)parallel or zero
struct Rotation {
    Vec3 axis{0, 0, 1};
    double c = 1, s = 0;  // cos, sin of the angle

    Vec3 apply(const Vec3& v) const {
        Vec3 ax = cross(axis, v);
        double ad = dot(axis, v);
        Vec3 out;
        for (int k = 0; k < 3; ++k)
            out[k] = v[k] * c + ax[k] * s + axis[k] * ad * (1 - c);
        return out;
    }
};

Rotation rotate_onto(const Vec3& from, const Vec3& to) {
    const double nf = norm(from), nt = norm(to);
    if (nf == 0 || nt == 0) return {};  // zero length: any rotation works, take identity
    Vec3 ax = cross(from, to);
    const double na = norm(ax);
    const double d = dot(from, to);
    if (na <= 1e-14 * nf * nt) {
        if (d > 0) return {};  // already aligned
        // antiparallel: half-turn about any axis orthogonal to `from`
        Vec3 perp = cross(Vec3{0, 0, 1}, from);
        if (norm(perp) <= 1e-14 * nf) perp = {1, 0, 0};
        const double np = norm(perp);
        return {{perp[0] / np, perp[1] / np, perp[2] / np}, -1, 0};
    }
    return {{ax[0] / na, ax[1] / na, ax[2] / na}, d / (nf * nt), na / (nf * nt)};
}

// vectors for the subtree hanging at `path`, root side first: entry 0 has
// length phi(path) and the rest follow the subtree's leaves in order
std::vector<Vec3> build(const RibbonTree& node, EdgeRef& path, const Labeling& phi) {
    const double d = phi.at(path);
    if (node.is_leaf()) return {{d, 0, 0}, {-d, 0, 0}};

    path.push_back(0);
    const double j = phi.at(path);
    std::vector<Vec3> ua = build(node.children()[0], path, phi);
    path.back() = 1;
    const double k = phi.at(path);
    std::vector<Vec3> ub = build(node.children()[1], path, phi);
    path.pop_back();

    // flat triangle with sides d, j, k in the xy-plane, root side along +x
    Vec3 t0{d, 0, 0}, t1, t2;
    if (d == 0) {
        t1 = {j, 0, 0};  // admissibility forces j == k here
        t2 = {-j, 0, 0};
    } else if (j == 0) {
        t1 = {0, 0, 0};
        t2 = {-d, 0, 0};
    } else {
        const double cosa = std::clamp((k * k - d * d - j * j) / (2 * d * j), -1.0, 1.0);
        const double sina = std::sqrt(std::max(0.0, 1 - cosa * cosa));
        t1 = {j * cosa, j * sina, 0};
        t2 = {-d - t1[0], -t1[1], 0};
    }

    std::vector<Vec3> out{t0};
    const Vec3 neg_t1{-t1[0], -t1[1], -t1[2]};
    const Vec3 neg_t2{-t2[0], -t2[1], -t2[2]};
    Rotation ga = rotate_onto(ua[0], neg_t1);
    for (std::size_t s = 1; s < ua.size(); ++s) out.push_back(ga.apply(ua[s]));
    Rotation gb = rotate_onto(ub[0], neg_t2);
    for (std::size_t s = 1; s < ub.size(); ++s) out.push_back(gb.apply(ub[s]));
    return out;
}

}  // namespace

PolygonRealization realize(const RibbonTree& t, const LengthVector& lv, const Labeling& phi) {
    if (!is_admissible(t, phi, lv))
        throw std::invalid_argument("labeling is not admissible for the boundary data");
    EdgeRef path;
    return PolygonRealization{build(t, path, phi)};
}

}  // namespace polyq
