#pragma once

#include <string>
#include <vector>

namespace polyq {

// Plane tree with ordered children. Each node is the edge above it: the root
// node stands for the root edge, a leaf node for the edge at that leaf. The
// cyclic order at an internal vertex is "half-edge toward the parent, then the
// children left to right", which makes leaf numbering agree with the textual
// left-to-right order of '*' tokens (see external_cycle and its test).
class RibbonTree {
public:
    static RibbonTree leaf();
    // throws std::invalid_argument if children.size() == 1 (no valence-2 vertices)
    static RibbonTree internal(std::vector<RibbonTree> children);

    bool is_leaf() const { return children_.empty(); }
    const std::vector<RibbonTree>& children() const { return children_; }
    int leaf_count() const { return leaf_count_; }
    // every internal node has exactly two children
    bool is_trivalent() const;

    bool operator==(const RibbonTree& other) const;

private:
    RibbonTree() = default;
    std::vector<RibbonTree> children_;
    int leaf_count_ = 1;
};

// Path of child indices (0-based) from the root node; the empty path is the
// root edge. Lexicographic order on paths gives a deterministic edge order.
using EdgeRef = std::vector<int>;

// "" for the root edge, else dot-joined child indices like "1.0"
std::string edge_path_string(const EdgeRef& e);
EdgeRef parse_edge_path(const std::string& s);

// node whose parent edge is e; throws std::out_of_range if e does not exist
const RibbonTree& node_at(const RibbonTree& t, const EdgeRef& e);

// all edges in path order: root edge first, then depth-first
std::vector<EdgeRef> all_edges(const RibbonTree& t);
// edges between two internal vertices, i.e. non-root internal nodes
std::vector<EdgeRef> internal_edges(const RibbonTree& t);
// paths to the leaves in left-to-right order; leaf i (1-based) is entry i-1
std::vector<EdgeRef> leaf_edges(const RibbonTree& t);

// single vertex with n leaves hanging off it; corolla(1) is the lone leaf
RibbonTree corolla(int n);
// caterpillar(2) is the 2-corolla; caterpillar(n) grafts caterpillar(n-1)
// onto the second leaf, giving the right-leaning comb "(*,(*,(*,*)))"
RibbonTree caterpillar(int n);

// replace the i-th leaf (1-based, left-to-right) of t by s;
// throws std::out_of_range for bad i
RibbonTree graft(const RibbonTree& t, int i, const RibbonTree& s);

// Inverse of graft along an internal edge: cutting t at e yields the far-side
// subtree s, the near-side tree with a fresh leaf in its place, and the leaf
// index i with graft(near, i, s) == t. Throws std::invalid_argument if e is
// not an internal edge.
struct SplitResult {
    RibbonTree near;
    RibbonTree far;
    int leaf_index;
};
SplitResult split_at_edge(const RibbonTree& t, const EdgeRef& e);

// External half-edges in cyclic order, computed literally from the half-edge
// permutations: next(h) = first external iterate of h -> sigma(opposite(h)).
// Entry 0 is the root edge, entries 1..n are the leaf edges; a single
// (n+1)-cycle covering all externals, or std::logic_error.
std::vector<EdgeRef> external_cycle(const RibbonTree& t);

// canonical textual form; two trees are isomorphic iff the strings are equal
std::string canonical_form(const RibbonTree& t);
bool is_isomorphic(const RibbonTree& a, const RibbonTree& b);

// all trivalent plane trees with n leaves, deterministic order
// (left subtree size ascending, then recursively); counts are the Catalan
// numbers 1, 1, 2, 5, 14, 42, 132 for n = 1..7
std::vector<RibbonTree> enumerate_trivalent(int n);

// arity of a tree viewed as an abstract operad element: its leaf count
int project_leafcount(const RibbonTree& t);

}  // namespace polyq
