#include "polyq/welement.hpp"

#include <array>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace polyq {

std::vector<int> tuple_substitute(std::span<const int> c, int i, int m, int k) {
    if (m < 1 || i < 1 || static_cast<std::size_t>(i - 1 + m) > c.size())
        throw std::out_of_range("block [" + std::to_string(i) + ", +" + std::to_string(m) +
                                ") does not fit a tuple of size " + std::to_string(c.size()));
    std::vector<int> out;
    out.reserve(c.size() - m + 1);
    out.insert(out.end(), c.begin(), c.begin() + (i - 1));
    out.push_back(k);
    out.insert(out.end(), c.begin() + (i - 1 + m), c.end());
    return out;
}

std::vector<int> tuple_block(std::span<const int> c, int i, int m) {
    if (m < 1 || i < 1 || static_cast<std::size_t>(i - 1 + m) > c.size())
        throw std::out_of_range("block [" + std::to_string(i) + ", +" + std::to_string(m) +
                                ") does not fit a tuple of size " + std::to_string(c.size()));
    return std::vector<int>(c.begin() + (i - 1), c.begin() + (i - 1 + m));
}

namespace {

struct KeyHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;  // FNV-1a
        for (int x : v) {
            h ^= static_cast<std::size_t>(static_cast<unsigned int>(x));
            h *= 1099511628211ull;
        }
        return h;
    }
};

void check_point(int arity, int d, std::span<const int> c) {
    if (static_cast<int>(c.size()) != arity)
        throw std::invalid_argument("expected " + std::to_string(arity) + " inputs, got " +
                                    std::to_string(c.size()));
    if (d < 0) throw std::invalid_argument("output label must be nonnegative");
    for (int x : c)
        if (x < 0) throw std::invalid_argument("input labels must be nonnegative");
}

}  // namespace

struct WElement::Impl {
    int arity;
    EvalFn raw;
    BoundFn bound;
    // sharded so concurrent sweeps do not serialize on one mutex; a racing
    // recomputation stores the same value, so first-write-wins is fine
    static constexpr std::size_t kShards = 16;
    struct Shard {
        std::shared_mutex mu;
        std::unordered_map<std::vector<int>, Count, KeyHash> map;
    };
    std::array<Shard, kShards> shards;
};

WElement::WElement(int arity, EvalFn eval, BoundFn support_bound)
    : impl_(std::make_shared<Impl>()) {
    if (arity < 1) throw std::invalid_argument("arity must be >= 1");
    if (!eval || !support_bound)
        throw std::invalid_argument("element needs both an evaluator and a support bound");
    impl_->arity = arity;
    impl_->raw = std::move(eval);
    impl_->bound = std::move(support_bound);
}

int WElement::arity() const { return impl_->arity; }

Count WElement::eval(int d, std::span<const int> c) const {
    check_point(impl_->arity, d, c);
    std::vector<int> key;
    key.reserve(c.size() + 1);
    key.push_back(d);
    key.insert(key.end(), c.begin(), c.end());
    auto& shard = impl_->shards[KeyHash{}(key) % Impl::kShards];
    {
        std::shared_lock lk(shard.mu);
        auto it = shard.map.find(key);
        if (it != shard.map.end()) return it->second;
    }
    Count v = impl_->raw(d, c);  // no lock held while recursing
    {
        std::unique_lock lk(shard.mu);
        shard.map.try_emplace(std::move(key), v);
    }
    return v;
}

Count WElement::eval(int d, std::initializer_list<int> c) const {
    return eval(d, std::span<const int>(c.begin(), c.size()));
}

Count WElement::eval_uncached(int d, std::span<const int> c) const {
    check_point(impl_->arity, d, c);
    return impl_->raw(d, c);
}

Count WElement::eval_uncached(int d, std::initializer_list<int> c) const {
    return eval_uncached(d, std::span<const int>(c.begin(), c.size()));
}

int WElement::support_bound(std::span<const int> c) const {
    if (static_cast<int>(c.size()) != impl_->arity)
        throw std::invalid_argument("expected " + std::to_string(impl_->arity) +
                                    " inputs, got " + std::to_string(c.size()));
    return impl_->bound(c);
}

WElement w_unit() {
    return WElement(
        1, [](int d, std::span<const int> c) -> Count { return d == c[0] ? 1 : 0; },
        [](std::span<const int> c) { return c[0]; });
}

WElement w_compose(const WElement& f, int i, const WElement& g) {
    const int n = f.arity();
    const int m = g.arity();
    if (i < 1 || i > n)
        throw std::out_of_range("compose slot " + std::to_string(i) + " out of 1.." +
                                std::to_string(n));
    auto raw = [f, g, i, m](int d, std::span<const int> c) -> Count {
        std::vector<int> block = tuple_block(c, i, m);
        const int kmax = g.support_bound(block);
        Count total = 0;
        for (int k = 0; k <= kmax; ++k) {
            Count gv = g.eval(k, block);
            if (gv == 0) continue;
            std::vector<int> outer = tuple_substitute(c, i, m, k);
            total += f.eval(d, outer) * gv;
        }
        return total;
    };
    // sound because f's bound is monotone in each slot and g vanishes above
    // its own bound; certify_element spot-checks both properties
    auto bound = [f, g, i, m](std::span<const int> c) -> int {
        std::vector<int> block = tuple_block(c, i, m);
        std::vector<int> outer = tuple_substitute(c, i, m, g.support_bound(block));
        return f.support_bound(outer);
    };
    return WElement(n + m - 1, std::move(raw), std::move(bound));
}

WElement pullback(std::function<int(int)> phi, const WElement& f,
                  WElement::BoundFn bound_transport) {
    if (!phi) throw std::invalid_argument("pullback needs a relabeling map");
    if (!bound_transport)
        throw std::invalid_argument("pullback needs a support-bound transport");
    auto apply = [phi](int x) {
        int y = phi(x);
        if (y < 0) throw std::invalid_argument("relabeling map left the nonnegative integers");
        return y;
    };
    auto raw = [apply, f](int d, std::span<const int> c) -> Count {
        std::vector<int> pc(c.size());
        for (std::size_t j = 0; j < c.size(); ++j) pc[j] = apply(c[j]);
        return f.eval(apply(d), pc);
    };
    WElement out(f.arity(), std::move(raw), std::move(bound_transport));
    certify_element(out);
    return out;
}

void certify_element(const WElement& f, int max_value, int window) {
    const int n = f.arity();
    // full box {0..max_value}^n when small, a handful of ramp patterns otherwise
    std::vector<std::vector<int>> samples;
    double box = 1;
    for (int j = 0; j < n; ++j) box *= max_value + 1;
    if (box <= 2048) {
        std::vector<int> c(n, 0);
        while (true) {
            samples.push_back(c);
            int j = 0;
            while (j < n && ++c[j] > max_value) c[j++] = 0;
            if (j == n) break;
        }
    } else {
        samples.emplace_back(n, 0);
        samples.emplace_back(n, max_value);
        std::vector<int> ramp(n);
        for (int j = 0; j < n; ++j) ramp[j] = j % (max_value + 1);
        samples.push_back(ramp);
    }
    for (const auto& c : samples) {
        const int b = f.support_bound(c);
        if (b < 0) throw std::invalid_argument("support bound is negative");
        for (int d = b + 1; d <= b + window; ++d)
            if (f.eval_uncached(d, c) != 0)
                throw std::invalid_argument("support bound violated: nonzero value at d = " +
                                            std::to_string(d) + " > bound " + std::to_string(b));
        for (int j = 0; j < n; ++j) {
            std::vector<int> up = c;
            ++up[j];
            if (f.support_bound(up) < b)
                throw std::invalid_argument("support bound is not monotone in slot " +
                                            std::to_string(j + 1));
        }
    }
}

}  // namespace polyq
