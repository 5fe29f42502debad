#include "polyq/tree.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "polyq/notation.hpp"

namespace polyq {

RibbonTree RibbonTree::leaf() { return RibbonTree{}; }

RibbonTree RibbonTree::internal(std::vector<RibbonTree> children) {
    if (children.size() < 2)
        throw std::invalid_argument("internal node needs at least two children");
    RibbonTree t;
    t.leaf_count_ = 0;
    for (const auto& ch : children) t.leaf_count_ += ch.leaf_count_;
    t.children_ = std::move(children);
    return t;
}

bool RibbonTree::is_trivalent() const {
    if (is_leaf()) return true;
    if (children_.size() != 2) return false;
    return children_[0].is_trivalent() && children_[1].is_trivalent();
}

bool RibbonTree::operator==(const RibbonTree& other) const {
    return children_ == other.children_;
}

std::string edge_path_string(const EdgeRef& e) {
    std::string out;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (k) out += '.';
        out += std::to_string(e[k]);
    }
    return out;
}

EdgeRef parse_edge_path(const std::string& s) {
    EdgeRef e;
    if (s.empty()) return e;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t dotpos = s.find('.', pos);
        std::string tok = s.substr(pos, dotpos == std::string::npos ? std::string::npos
                                                                    : dotpos - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad edge path: '" + s + "'");
        e.push_back(std::stoi(tok));
        if (dotpos == std::string::npos) break;
        pos = dotpos + 1;
    }
    return e;
}

const RibbonTree& node_at(const RibbonTree& t, const EdgeRef& e) {
    const RibbonTree* cur = &t;
    for (int idx : e) {
        if (idx < 0 || idx >= static_cast<int>(cur->children().size()))
            throw std::out_of_range("no edge at path " + edge_path_string(e));
        cur = &cur->children()[idx];
    }
    return *cur;
}

namespace {

void walk_edges(const RibbonTree& node, EdgeRef& path, std::vector<EdgeRef>& out) {
    out.push_back(path);
    for (int i = 0; i < static_cast<int>(node.children().size()); ++i) {
        path.push_back(i);
        walk_edges(node.children()[i], path, out);
        path.pop_back();
    }
}

}  // namespace

std::vector<EdgeRef> all_edges(const RibbonTree& t) {
    std::vector<EdgeRef> out;
    EdgeRef path;
    walk_edges(t, path, out);
    return out;
}

std::vector<EdgeRef> internal_edges(const RibbonTree& t) {
    std::vector<EdgeRef> out;
    for (auto& e : all_edges(t))
        if (!e.empty() && !node_at(t, e).is_leaf()) out.push_back(e);
    return out;
}

std::vector<EdgeRef> leaf_edges(const RibbonTree& t) {
    std::vector<EdgeRef> out;
    for (auto& e : all_edges(t))
        if (node_at(t, e).is_leaf()) out.push_back(e);
    return out;
}

RibbonTree corolla(int n) {
    if (n < 1) throw std::invalid_argument("corolla needs n >= 1");
    if (n == 1) return RibbonTree::leaf();
    std::vector<RibbonTree> ch(n, RibbonTree::leaf());
    return RibbonTree::internal(std::move(ch));
}

RibbonTree caterpillar(int n) {
    if (n < 1) throw std::invalid_argument("caterpillar needs n >= 1");
    RibbonTree t = RibbonTree::leaf();
    for (int k = 1; k < n; ++k)
        t = RibbonTree::internal({RibbonTree::leaf(), std::move(t)});
    return t;
}

namespace {

RibbonTree graft_rec(const RibbonTree& t, int& i, const RibbonTree& s, bool& done) {
    if (t.is_leaf()) {
        if (--i == 0) {
            done = true;
            return s;
        }
        return t;
    }
    std::vector<RibbonTree> ch;
    ch.reserve(t.children().size());
    for (const auto& c : t.children())
        ch.push_back(done ? c : graft_rec(c, i, s, done));
    return RibbonTree::internal(std::move(ch));
}

}  // namespace

RibbonTree graft(const RibbonTree& t, int i, const RibbonTree& s) {
    if (i < 1 || i > t.leaf_count())
        throw std::out_of_range("graft position " + std::to_string(i) + " out of 1.." +
                                std::to_string(t.leaf_count()));
    bool done = false;
    int pos = i;
    return graft_rec(t, pos, s, done);
}

namespace {

RibbonTree replace_by_leaf(const RibbonTree& t, const EdgeRef& e, std::size_t depth) {
    if (depth == e.size()) return RibbonTree::leaf();
    std::vector<RibbonTree> ch = t.children();
    ch[e[depth]] = replace_by_leaf(ch[e[depth]], e, depth + 1);
    return RibbonTree::internal(std::move(ch));
}

}  // namespace

SplitResult split_at_edge(const RibbonTree& t, const EdgeRef& e) {
    const RibbonTree& far = node_at(t, e);  // throws if absent
    if (e.empty() || far.is_leaf())
        throw std::invalid_argument("path " + edge_path_string(e) + " is not an internal edge");
    // leaves strictly to the left of the cut, walking down the path
    int before = 0;
    const RibbonTree* cur = &t;
    for (int idx : e) {
        for (int j = 0; j < idx; ++j) before += cur->children()[j].leaf_count();
        cur = &cur->children()[idx];
    }
    return SplitResult{replace_by_leaf(t, e, 0), far, before + 1};
}

std::vector<EdgeRef> external_cycle(const RibbonTree& t) {
    // flatten nodes; node k owns the edge above it with halves up=2k (at the
    // parent vertex) and down=2k+1 (at the node's own vertex)
    struct FlatNode {
        EdgeRef path;
        bool leaf;
        std::vector<int> children;
    };
    std::vector<FlatNode> nodes;
    EdgeRef path;
    auto flatten = [&](auto&& self, const RibbonTree& node) -> int {
        int id = static_cast<int>(nodes.size());
        nodes.push_back({path, node.is_leaf(), {}});
        for (int i = 0; i < static_cast<int>(node.children().size()); ++i) {
            path.push_back(i);
            int ch = self(self, node.children()[i]);
            path.pop_back();
            nodes[id].children.push_back(ch);
        }
        return id;
    };
    flatten(flatten, t);

    auto up = [](int k) { return 2 * k; };
    auto down = [](int k) { return 2 * k + 1; };
    int half_count = 2 * static_cast<int>(nodes.size());
    std::vector<int> sigma(half_count, -1);
    std::vector<bool> external(half_count, false);

    external[up(0)] = true;  // root-end vertex has valence 1
    sigma[up(0)] = up(0);
    for (int k = 0; k < static_cast<int>(nodes.size()); ++k) {
        if (nodes[k].leaf) {
            external[down(k)] = true;
            sigma[down(k)] = down(k);
        } else {
            // cyclic order at the vertex: toward the parent, then children
            const auto& ch = nodes[k].children;
            sigma[down(k)] = up(ch.front());
            for (std::size_t j = 0; j + 1 < ch.size(); ++j) sigma[up(ch[j])] = up(ch[j + 1]);
            sigma[up(ch.back())] = down(k);
        }
    }
    auto opposite = [](int h) { return h ^ 1; };
    auto next_external = [&](int h) {
        int cur = sigma[opposite(h)];
        int guard = 0;
        while (!external[cur]) {
            cur = sigma[opposite(cur)];
            if (++guard > half_count) throw std::logic_error("external cycle does not close");
        }
        return cur;
    };

    std::vector<EdgeRef> cycle;
    int start = up(0);
    int h = start;
    do {
        cycle.push_back(nodes[h / 2].path);
        h = next_external(h);
    } while (h != start && static_cast<int>(cycle.size()) <= t.leaf_count() + 1);
    if (h != start || static_cast<int>(cycle.size()) != t.leaf_count() + 1)
        throw std::logic_error("external half-edges do not form a single cycle");
    return cycle;
}

std::string canonical_form(const RibbonTree& t) { return serialize_tree(t); }

bool is_isomorphic(const RibbonTree& a, const RibbonTree& b) {
    return canonical_form(a) == canonical_form(b);
}

std::vector<RibbonTree> enumerate_trivalent(int n) {
    if (n < 1) throw std::invalid_argument("need n >= 1 leaves");
    if (n == 1) return {RibbonTree::leaf()};
    std::vector<RibbonTree> out;
    for (int a = 1; a < n; ++a)
        for (const auto& left : enumerate_trivalent(a))
            for (const auto& right : enumerate_trivalent(n - a))
                out.push_back(RibbonTree::internal({left, right}));
    return out;
}

int project_leafcount(const RibbonTree& t) { return t.leaf_count(); }

}  // namespace polyq
