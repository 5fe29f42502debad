#include "polyq/bending.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>

#include "polyq/kaehler.hpp"
#include "polyq/notation.hpp"

namespace polyq {

namespace {

bool triangle(int x, int y, int z) { return x <= y + z && y <= x + z && z <= x + y; }

void check_boundary_data(const RibbonTree& t, const LengthVector& lv) {
    if (!t.is_trivalent()) throw std::invalid_argument("tree must be trivalent");
    if (static_cast<int>(lv.c.size()) != t.leaf_count())
        throw std::invalid_argument("got " + std::to_string(lv.c.size()) +
                                    " leaf values for " + std::to_string(t.leaf_count()) +
                                    " leaves");
    if (lv.d < 0 || std::any_of(lv.c.begin(), lv.c.end(), [](int x) { return x < 0; }))
        throw std::invalid_argument("boundary values must be nonnegative");
}

}  // namespace

bool is_admissible(const RibbonTree& t, const Labeling& phi, const LengthVector& lv) {
    check_boundary_data(t, lv);
    const auto edges = all_edges(t);
    if (phi.size() != edges.size())
        throw std::invalid_argument("labeling has " + std::to_string(phi.size()) +
                                    " entries for " + std::to_string(edges.size()) + " edges");
    for (const auto& e : edges)
        if (!phi.count(e))
            throw std::invalid_argument("labeling misses edge " + edge_path_string(e));

    if (phi.at({}) != lv.d) return false;
    const auto leaves = leaf_edges(t);
    for (std::size_t i = 0; i < leaves.size(); ++i)
        if (phi.at(leaves[i]) != lv.c[i]) return false;
    for (const auto& e : edges) {
        if (node_at(t, e).is_leaf()) continue;
        EdgeRef left = e, right = e;
        left.push_back(0);
        right.push_back(1);
        if (!triangle(phi.at(e), phi.at(left), phi.at(right))) return false;
    }
    return true;
}

std::vector<Labeling> enumerate_labelings(const RibbonTree& t, const LengthVector& lv,
                                          SearchBox box) {
    check_boundary_data(t, lv);
    // work on flat edge-indexed arrays; maps are built only for the hits
    const auto edges = all_edges(t);
    std::map<EdgeRef, int> id;
    for (std::size_t k = 0; k < edges.size(); ++k) id[edges[k]] = static_cast<int>(k);

    std::vector<int> value(edges.size(), -1);
    value[0] = lv.d;  // root edge comes first in path order
    const auto leaves = leaf_edges(t);
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        int e = id.at(leaves[i]);
        if (value[e] >= 0 && value[e] != lv.c[i]) return {};  // lone-leaf tree, d != c_1
        value[e] = lv.c[i];
    }

    std::vector<int> internals;  // ids in path order = assignment order
    std::vector<int> slot(edges.size(), -1);
    for (std::size_t k = 0; k < edges.size(); ++k)
        if (!edges[k].empty() && !node_at(t, edges[k]).is_leaf()) {
            slot[k] = static_cast<int>(internals.size());
            internals.push_back(static_cast<int>(k));
        }

    std::vector<int> limit(internals.size());
    const int loose = lv.d + std::accumulate(lv.c.begin(), lv.c.end(), 0);
    for (std::size_t k = 0; k < internals.size(); ++k) {
        if (box == SearchBox::Loose) {
            limit[k] = loose;
        } else {
            // nothing below e can produce a diagonal longer than the sum of
            // the leaf values there
            const EdgeRef& e = edges[internals[k]];
            const auto& sub = node_at(t, e);
            int before = 0;
            const RibbonTree* cur = &t;
            for (int idx : e) {
                for (int j = 0; j < idx; ++j) before += cur->children()[j].leaf_count();
                cur = &cur->children()[idx];
            }
            limit[k] = std::accumulate(lv.c.begin() + before,
                                       lv.c.begin() + before + sub.leaf_count(), 0);
        }
    }

    // a vertex is checkable once its last internal edge is assigned
    struct Vertex {
        int e, left, right;
    };
    std::vector<std::vector<Vertex>> ready(internals.size() + 1);
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (node_at(t, edges[k]).is_leaf()) continue;
        EdgeRef left = edges[k], right = edges[k];
        left.push_back(0);
        right.push_back(1);
        Vertex v{static_cast<int>(k), id.at(left), id.at(right)};
        int when = std::max({slot[v.e], slot[v.left], slot[v.right]});
        ready[when + 1].push_back(v);
    }

    std::vector<Labeling> out;
    auto vertex_ok = [&](const Vertex& v) {
        return triangle(value[v.e], value[v.left], value[v.right]);
    };
    auto emit = [&] {
        Labeling phi;
        for (std::size_t k = 0; k < edges.size(); ++k) phi[edges[k]] = value[k];
        out.push_back(std::move(phi));
    };
    auto assign = [&](auto&& self, std::size_t k) -> void {
        if (k == internals.size()) {
            emit();
            return;
        }
        for (int v = 0; v <= limit[k]; ++v) {
            value[internals[k]] = v;
            bool ok = true;
            for (const auto& vx : ready[k + 1])
                if (!vertex_ok(vx)) {
                    ok = false;
                    break;
                }
            if (ok) self(self, k + 1);
        }
        value[internals[k]] = -1;
    };
    for (const auto& vx : ready[0])
        if (!vertex_ok(vx)) return out;
    assign(assign, 0);
    return out;
}

namespace {

std::mutex reg_mu;
// keyed by canonical form; element references stay valid across inserts
std::unordered_map<std::string, WElement> registry;

}  // namespace

const WElement& labeling_count_element(const RibbonTree& t) {
    if (!t.is_trivalent()) throw std::invalid_argument("tree must be trivalent");
    const std::string key = canonical_form(t);
    {
        std::scoped_lock lk(reg_mu);
        auto it = registry.find(key);
        if (it != registry.end()) return it->second;
    }
    // build outside the lock; split at the root vertex and compose the parts.
    // Composing with the unit is the identity, so leaf children are skipped.
    WElement built = w_unit();
    if (!t.is_leaf()) {
        const RibbonTree& a = t.children()[0];
        const RibbonTree& b = t.children()[1];
        built = clebsch_gordan_element();
        if (!a.is_leaf()) built = w_compose(built, 1, labeling_count_element(a));
        if (!b.is_leaf())
            built = w_compose(built, a.leaf_count() + 1, labeling_count_element(b));
    }
    std::scoped_lock lk(reg_mu);
    return registry.try_emplace(key, std::move(built)).first->second;
}

bool moduli_nonempty(const LengthVector& lv) {
    if (lv.d < 0 || std::any_of(lv.c.begin(), lv.c.end(), [](int x) { return x < 0; }))
        throw std::invalid_argument("boundary values must be nonnegative");
    const long long sum = std::accumulate(lv.c.begin(), lv.c.end(), 0ll);
    if (lv.d > sum) return false;
    for (int ci : lv.c)
        if (ci > lv.d + (sum - ci)) return false;
    return true;
}

bool is_smooth(std::span<const int> r) {
    long long total = 0;
    for (int x : r) {
        if (x < 1) throw std::invalid_argument("side lengths must be positive");
        total += x;
    }
    if (total % 2) return true;  // odd total: no signed sum can vanish
    const long long half = total / 2;
    std::vector<bool> reach(half + 1, false);
    reach[0] = true;
    for (int x : r)
        for (long long s = half; s >= x; --s)
            if (reach[s - x]) reach[s] = true;
    return !reach[half];
}

Count caterpillar_count_direct(int n, int i) {
    if (n < 3 || i < 0) throw std::invalid_argument("need n >= 3 and i >= 0");
    std::vector<int> ones(n - 1, 1);
    return labeling_count_element(caterpillar(n - 1)).eval(i, ones);
}

Count caterpillar_count_recurrence(int n, int i) {
    if (n < 3 || i < 0) throw std::invalid_argument("need n >= 3 and i >= 0");
    const int width = i + n + 2;
    std::vector<Count> row(width + 2, 0);
    for (int j = 0; j <= std::min(2, width + 1); ++j) row[j] = 1;
    for (int m = 4; m <= n; ++m) {
        std::vector<Count> next(width + 2, 0);
        next[0] = row[1];
        for (int j = 1; j <= width && j <= m - 1; ++j)
            next[j] = row[j - 1] + row[j] + row[j + 1];
        row = std::move(next);
    }
    return row[i];
}

Count lattice_count(const RibbonTree& t, std::span<const int> r) {
    const int n = static_cast<int>(r.size());
    if (n < 4)
        throw LatticeCountError(LatticeCountErrorKind::TooFewEdges,
                                "need at least 4 side lengths, got " + std::to_string(n));
    if (t.leaf_count() != n - 1)
        throw LatticeCountError(LatticeCountErrorKind::ArityMismatch,
                                std::to_string(n) + " side lengths need a tree with " +
                                    std::to_string(n - 1) + " leaves, got " +
                                    std::to_string(t.leaf_count()));
    for (int x : r)
        if (x < 1)
            throw LatticeCountError(LatticeCountErrorKind::NonpositiveLength,
                                    "side lengths must be positive");
    LengthVector lv{r[0], std::vector<int>(r.begin() + 1, r.end())};
    if (!moduli_nonempty(lv))
        throw LatticeCountError(LatticeCountErrorKind::EmptyModuli,
                                "side lengths admit no polygon");
    return labeling_count_element(t).eval(lv.d, lv.c);
}

void clear_labeling_registry() {
    std::scoped_lock lk(reg_mu);
    registry.clear();
}

}  // namespace polyq
