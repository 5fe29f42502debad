#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace polyq {

// multiplicities grow combinatorially, so counts are unbounded integers
using Count = boost::multiprecision::cpp_int;

// Tuple surgery used by composition. Positions are 1-based.
// substitute: replace the m-block starting at slot i of c by the single value k
// (length n+m-1 -> n); block: the m-block itself (c_i..c_{i+m-1}).
std::vector<int> tuple_substitute(std::span<const int> c, int i, int m, int k);
std::vector<int> tuple_block(std::span<const int> c, int i, int m);

// An arity-n element of the counting operad over the nonnegative integers:
// a function f(d; c_1..c_n) -> Count, realized intensionally as an evaluator
// plus a support bound B with the contract f(d; c) == 0 whenever d > B(c).
// The bound is what makes composition's infinite sum finite. Copies share
// the underlying evaluator and its memo cache; eval is safe to call
// concurrently (recomputation races store identical values).
class WElement {
public:
    using EvalFn = std::function<Count(int d, std::span<const int> c)>;
    using BoundFn = std::function<int(std::span<const int> c)>;

    WElement(int arity, EvalFn eval, BoundFn support_bound);

    int arity() const;
    // memoized; throws std::invalid_argument on arity mismatch or d < 0
    Count eval(int d, std::span<const int> c) const;
    Count eval(int d, std::initializer_list<int> c) const;
    // same computation, skips this element's cache (children still use
    // theirs); for sweeps that query each point exactly once
    Count eval_uncached(int d, std::span<const int> c) const;
    Count eval_uncached(int d, std::initializer_list<int> c) const;
    int support_bound(std::span<const int> c) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

// identity of composition: 1(d; c) = [d == c], bound c
WElement w_unit();

// (f o_i g)(d; c) = sum_k f(d; c with block i..i+m-1 replaced by k) * g(k; block),
// k running 0..g.support_bound(block). i is 1-based; throws std::out_of_range.
WElement w_compose(const WElement& f, int i, const WElement& g);

// (phi^* f)(d; c) = f(phi(d); phi(c_1)..phi(c_n)). The caller must supply a
// support bound for the pulled-back element; construction certifies it with a
// sampled scan and throws std::invalid_argument when the scan finds a nonzero
// value past the bound (e.g. phi = constant 0 against the unit), or when the
// transport is missing.
WElement pullback(std::function<int(int)> phi, const WElement& f,
                  WElement::BoundFn bound_transport);

// Spot-check of the support-bound contract: for sample tuples c with entries
// in {0..max_value}, evaluate d = B(c)+1 .. B(c)+window and throw
// std::invalid_argument on any nonzero. Also checks the bound is monotone
// nondecreasing in each coordinate on the same samples. A sampled scan, not a
// proof.
void certify_element(const WElement& f, int max_value = 2, int window = 6);

}  // namespace polyq
