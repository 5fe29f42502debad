#include "polyq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <tuple>

#include "polyq/bending.hpp"
#include "polyq/kaehler.hpp"
#include "polyq/notation.hpp"
#include "polyq/tree.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polyq {

bool VerificationFailure::operator<(const VerificationFailure& o) const {
    return std::tie(check, tree, input, expected, got) <
           std::tie(o.check, o.tree, o.input, o.expected, o.got);
}

nlohmann::json VerificationReport::to_json(bool include_timing) const {
    nlohmann::json j{{"scope", scope},
                     {"max_leaves", max_leaves},
                     {"max_label", max_label},
                     {"tree_classes", tree_classes},
                     {"checks_run", checks_run},
                     {"pass", pass()}};
    j["failures"] = nlohmann::json::array();
    for (const auto& f : failures)
        j["failures"].push_back({{"check", f.check},
                                 {"tree", f.tree},
                                 {"input", f.input},
                                 {"expected", f.expected},
                                 {"got", f.got}});
    if (include_timing) j["wall_seconds"] = wall_seconds;
    return j;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string str(const Count& v) { return v.str(); }

}  // namespace

VerificationReport check_agreement(int max_leaves, int max_label, ExecMode mode) {
    if (max_leaves < 1 || max_label < 0)
        throw std::invalid_argument("need max_leaves >= 1 and max_label >= 0");
    const auto t0 = Clock::now();
    VerificationReport rep;
    rep.scope = "agreement";
    rep.max_leaves = max_leaves;
    rep.max_label = max_label;

    const int base = max_label + 1;
    for (int n = 1; n <= max_leaves; ++n) {
        const auto trees = enumerate_trivalent(n);
        rep.tree_classes += static_cast<long long>(trees.size());
        // prebuild both sides so the parallel loop only evaluates
        std::vector<const WElement*> counts;
        std::vector<std::string> names;
        for (const auto& t : trees) {
            counts.push_back(&labeling_count_element(t));
            names.push_back(canonical_form(t));
        }
        const WElement& mult = multiplicity_element(n);

        long long grid = 1;
        for (int j = 0; j <= n; ++j) grid *= base;
        const long long total = grid * static_cast<long long>(trees.size());
        rep.checks_run += total;

        // each grid point is hit exactly once, so the two top-level
        // evaluators run uncached; everything beneath them memoizes
        auto run_item = [&](long long idx, std::vector<VerificationFailure>& sink) {
            const long long ti = idx / grid;
            long long gi = idx % grid;
            std::vector<int> point(n + 1);
            for (int j = 0; j <= n; ++j, gi /= base) point[j] = static_cast<int>(gi % base);
            const int d = point[0];
            const std::span<const int> c(point.data() + 1, static_cast<std::size_t>(n));
            Count lab = counts[ti]->eval_uncached(d, c);
            Count tens = mult.eval_uncached(d, c);
            if (lab != tens)
                sink.push_back({"agreement", names[ti], point, str(tens), str(lab)});
        };

        if (mode == ExecMode::Parallel) {
#ifdef _OPENMP
#pragma omp parallel
            {
                std::vector<VerificationFailure> local;
#pragma omp for schedule(dynamic, 1024) nowait
                for (long long idx = 0; idx < total; ++idx) run_item(idx, local);
#pragma omp critical(polyq_verify_merge)
                rep.failures.insert(rep.failures.end(), local.begin(), local.end());
            }
#else
            for (long long idx = 0; idx < total; ++idx) run_item(idx, rep.failures);
#endif
        } else {
            for (long long idx = 0; idx < total; ++idx) run_item(idx, rep.failures);
        }
    }
    std::sort(rep.failures.begin(), rep.failures.end());
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

namespace {

// pointwise equality of two elements of equal arity on the box
// {0..max_label}^arity, d running to the common support bound plus a margin
void compare_elements(const std::string& check, const WElement& lhs, const WElement& rhs,
                      int max_label, VerificationReport& rep) {
    const int n = lhs.arity();
    std::vector<int> c(n, 0);
    while (true) {
        const int dmax = std::max(lhs.support_bound(c), rhs.support_bound(c)) + 2;
        for (int d = 0; d <= dmax; ++d) {
            ++rep.checks_run;
            Count a = lhs.eval(d, c);
            Count b = rhs.eval(d, c);
            if (a != b) {
                std::vector<int> point{d};
                point.insert(point.end(), c.begin(), c.end());
                rep.failures.push_back({check, "", point, str(a), str(b)});
            }
        }
        int j = 0;
        while (j < n && ++c[j] > max_label) c[j++] = 0;
        if (j == n) break;
    }
}

}  // namespace

VerificationReport check_operad_laws(int max_label) {
    const auto t0 = Clock::now();
    VerificationReport rep;
    rep.scope = "operad-laws";
    rep.max_label = max_label;

    const WElement unit = w_unit();
    const WElement& cg = clebsch_gordan_element();
    const WElement& three = labeling_count_element(caterpillar(3));  // arity 3

    // disjoint slots:  (x o_j y) o_i z == (x o_i z) o_{j+l-1} y  for i < j
    compare_elements("assoc-disjoint", w_compose(w_compose(cg, 2, cg), 1, cg),
                     w_compose(w_compose(cg, 1, cg), 3, cg), max_label, rep);
    // nested slots:  (x o_j y) o_i z == x o_j (y o_{i-j+1} z)  for j <= i < m+j
    compare_elements("assoc-nested", w_compose(w_compose(cg, 1, cg), 1, cg),
                     w_compose(cg, 1, w_compose(cg, 1, cg)), max_label, rep);
    compare_elements("assoc-nested", w_compose(w_compose(cg, 2, three), 3, cg),
                     w_compose(cg, 2, w_compose(three, 2, cg)), max_label, rep);
    // slot after the block:  (x o_j y) o_i z == (x o_{i-m+1} z) o_j y  for i >= j+m
    compare_elements("assoc-after", w_compose(w_compose(three, 1, cg), 3, cg),
                     w_compose(w_compose(three, 2, cg), 1, cg), max_label, rep);
    // unit laws
    compare_elements("unit-left", w_compose(unit, 1, cg), cg, max_label, rep);
    for (int i = 1; i <= 3; ++i)
        compare_elements("unit-right", w_compose(three, i, unit), three, max_label, rep);

    std::sort(rep.failures.begin(), rep.failures.end());
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

VerificationReport check_recurrence(int max_n) {
    if (max_n < 4) throw std::invalid_argument("need max_n >= 4");
    const auto t0 = Clock::now();
    VerificationReport rep;
    rep.scope = "recurrence";
    rep.max_leaves = max_n;

    for (int n = 4; n <= max_n; ++n) {
        for (int i = 0; i <= n + 2; ++i) {
            ++rep.checks_run;
            Count direct = caterpillar_count_direct(n, i);
            Count rec = caterpillar_count_recurrence(n, i);
            if (direct != rec)
                rep.failures.push_back(
                    {"recurrence-vs-direct", "", {n, i}, str(direct), str(rec)});
        }
        // peeling one triangle off the caterpillar: count(n, i) equals
        // sum over k in [|i-1|, i+1] of count(n-1, k), both sides direct
        for (int i = 0; i <= n + 1; ++i) {
            ++rep.checks_run;
            Count lhs = caterpillar_count_direct(n, i);
            Count rhs = 0;
            for (int k = std::max(0, i - 1); k <= i + 1; ++k)
                rhs += Count(clebsch_gordan(i, 1, k)) * caterpillar_count_direct(n - 1, k);
            if (lhs != rhs)
                rep.failures.push_back({"one-step-expansion", "", {n, i}, str(lhs), str(rhs)});
        }
    }
    std::sort(rep.failures.begin(), rep.failures.end());
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

}  // namespace polyq
