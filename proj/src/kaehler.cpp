#include "polyq/kaehler.hpp"

#include <deque>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "polyq/bending.hpp"

namespace polyq {

int clebsch_gordan(int d, int c1, int c2) {
    if (d < 0 || c1 < 0 || c2 < 0)
        throw std::invalid_argument("labels must be nonnegative");
    return (std::abs(c1 - c2) <= d && d <= c1 + c2) ? 1 : 0;
}

const WElement& clebsch_gordan_element() {
    static const WElement cg(
        2,
        [](int d, std::span<const int> c) -> Count { return clebsch_gordan(d, c[0], c[1]); },
        [](std::span<const int> c) { return c[0] + c[1]; });
    return cg;
}

namespace {

std::mutex reg_mu;
// entry k holds the arity-(k+1) element; deque keeps references stable
std::deque<WElement> registry;

}  // namespace

const WElement& multiplicity_element(int n) {
    if (n < 1) throw std::invalid_argument("arity must be >= 1");
    std::scoped_lock lk(reg_mu);
    while (static_cast<int>(registry.size()) < n) {
        if (registry.empty())
            registry.push_back(w_unit());
        else if (registry.size() == 1)
            registry.push_back(clebsch_gordan_element());
        else
            registry.push_back(w_compose(clebsch_gordan_element(), 2, registry.back()));
    }
    return registry[n - 1];
}

Count weight_oracle(int d, std::span<const int> c) {
    if (d < 0) throw std::invalid_argument("output label must be nonnegative");
    for (int x : c)
        if (x < 0) throw std::invalid_argument("input labels must be nonnegative");
    // counts of weight sums, index t <-> weight t - offset
    std::vector<Count> poly{1};
    long long offset = 0;
    for (int ci : c) {
        std::vector<Count> next(poly.size() + 2 * ci, 0);
        for (std::size_t s = 0; s < poly.size(); ++s)
            for (int w = 0; w <= 2 * ci; ++w) next[s + w] += poly[s];
        poly = std::move(next);
        offset += ci;
    }
    auto weight_count = [&](long long j) -> Count {
        long long t = j + offset;
        if (t < 0 || t >= static_cast<long long>(poly.size())) return 0;
        return poly[t];
    };
    return weight_count(d) - weight_count(d + 1);
}

SectionDim dim_h0(std::span<const int> r) {
    if (r.size() < 3)
        throw std::invalid_argument("need at least 3 side lengths");
    for (int x : r)
        if (x < 1) throw std::invalid_argument("side lengths must be positive");
    const int n = static_cast<int>(r.size());
    Count dim = multiplicity_element(n - 1).eval(r[0], r.subspan(1));
    return SectionDim{std::move(dim), is_smooth(r)};
}

void clear_multiplicity_registry() {
    std::scoped_lock lk(reg_mu);
    registry.clear();
}

}  // namespace polyq
