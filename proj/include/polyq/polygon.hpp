#pragma once

#include <array>
#include <vector>

#include "polyq/bending.hpp"
#include "polyq/tree.hpp"

namespace polyq {

using Vec3 = std::array<double, 3>;

double norm(const Vec3& v);
Vec3 cross(const Vec3& a, const Vec3& b);
double dot(const Vec3& a, const Vec3& b);

// Splitting the tree at edge e cuts the external index set {0..n} in two:
// far_side holds the leaf indices beyond e, root_side the rest plus 0.
// For the root edge far_side is {1..n}; for the leaf-i edge it is {i}.
struct IndexPartition {
    std::vector<int> root_side;
    std::vector<int> far_side;
};
IndexPartition index_partition(const RibbonTree& t, const EdgeRef& e);

// closed polygon as edge vectors u_0..u_n summing to zero; u_0 is the root
// side, u_i the side at leaf i
struct PolygonRealization {
    std::vector<Vec3> vectors;
    double closure_residual() const;
};

// length of the diagonal cut off by e: |sum of u_i over root_side|
double bending_value(const PolygonRealization& u, const IndexPartition& part);

// Build a polygon whose diagonal lengths realize an admissible labeling:
// triangles are laid flat in the xy-plane with u_0 on +x, and a grafted part
// is rotated so its root vector sits antiparallel to the triangle side it
// replaces (minimal rotation; axis normalize(e_z x w0), then e_x, when the
// vectors are antiparallel; identity for zero length). Each bending value
// then reproduces phi(e) up to roundoff, which tests bound by
// 1e-9 * (1 + d + sum(c)). Throws std::invalid_argument when phi is not
// admissible for (t, lv).
PolygonRealization realize(const RibbonTree& t, const LengthVector& lv, const Labeling& phi);

}  // namespace polyq
