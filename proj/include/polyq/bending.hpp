#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "polyq/tree.hpp"
#include "polyq/welement.hpp"

namespace polyq {

// boundary data: root edge value d, leaf edge values c (leaf i gets c[i-1])
struct LengthVector {
    int d = 0;
    std::vector<int> c;
};

// integer edge labels for a fixed trivalent tree, keyed by edge path;
// map order (lexicographic on paths) is the deterministic edge order
using Labeling = std::map<EdgeRef, int>;

// A labeling is admissible when the three edges at every internal vertex
// satisfy the triangle inequalities and the boundary edges carry exactly the
// values of lv. phi must be defined on every edge of t and nowhere else;
// throws std::invalid_argument on domain mismatch, non-trivalent t, or
// lv.c size != leaf count.
bool is_admissible(const RibbonTree& t, const Labeling& phi, const LengthVector& lv);

// Brute-force enumeration of all admissible labelings, lexicographic in the
// internal edge values (edges in path order). The search box per internal
// edge is the sum of the leaf labels below it; Loose widens every box to
// d + sum(c) as a guard for that optimization (results must not differ).
enum class SearchBox { Tight, Loose };
std::vector<Labeling> enumerate_labelings(const RibbonTree& t, const LengthVector& lv,
                                          SearchBox box = SearchBox::Tight);

// Number of admissible labelings of t as an operad element in the boundary
// data: the image of t under the labeling-count morphism. Computed by
// splitting at the root vertex and composing, never by search; the search
// above is the oracle it is tested against. Leaf -> unit, and grafting goes
// to composition, which tests check against enumerate_labelings pointwise.
// Throws std::invalid_argument for non-trivalent t. Instances are shared
// through a registry keyed by canonical form.
const WElement& labeling_count_element(const RibbonTree& t);

// polygon-existence test for the boundary lengths: d <= sum(c) and every
// c_i <= d + sum of the other c_j
bool moduli_nonempty(const LengthVector& lv);

// no signed combination +-r_0 +- r_1 ... +- r_{n-1} vanishes (subset-sum
// check); throws std::invalid_argument on entries < 1
bool is_smooth(std::span<const int> r);

// Counts for the (n-1)-leaf caterpillar with root value i and unit leaf
// lengths, two routes: direct evaluation of the labeling-count element, and
// the three-term recurrence
//   row n=3:  1 for 0 <= i <= 2, else 0
//   b(n, 0) = b(n-1, 1)
//   b(n, i) = b(n-1, i-1) + b(n-1, i) + b(n-1, i+1)   for 1 <= i <= n-1
//   b(n, i) = 0                                        for i >= n
// n >= 3, i >= 0; throws std::invalid_argument otherwise.
Count caterpillar_count_direct(int n, int i);
Count caterpillar_count_recurrence(int n, int i);

// Lattice-point count of the moduli space for side lengths r (r[0] is the
// root value): labeling_count_element(t) at (r[0]; r[1]..). Preconditions
// are reported distinctly via LatticeCountError.
enum class LatticeCountErrorKind { TooFewEdges, EmptyModuli, NonpositiveLength, ArityMismatch };
class LatticeCountError : public std::invalid_argument {
public:
    LatticeCountError(LatticeCountErrorKind kind, const std::string& what)
        : std::invalid_argument(what), kind_(kind) {}
    LatticeCountErrorKind kind() const { return kind_; }

private:
    LatticeCountErrorKind kind_;
};
Count lattice_count(const RibbonTree& t, std::span<const int> r);

// see clear_multiplicity_registry
void clear_labeling_registry();

}  // namespace polyq
