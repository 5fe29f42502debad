#pragma once

#include <span>

#include "polyq/welement.hpp"

namespace polyq {

// Clebsch-Gordan rule for SO(3): R(c1) (x) R(c2) contains R(d) once exactly
// when |c1 - c2| <= d <= c1 + c2, else not at all.
int clebsch_gordan(int d, int c1, int c2);

// the rule as an arity-2 operad element, bound c1 + c2; one shared instance
const WElement& clebsch_gordan_element();

// Multiplicity of R(d) in R(c_1) (x) ... (x) R(c_n): the arity-n image of the
// multiplicity morphism. Built once per n by folding the Clebsch-Gordan
// element caterpillar-style (compose at slot 2), so instances and caches are
// shared; any fold order gives the same function, which tests check.
// n >= 1; n = 1 is the unit.
const WElement& multiplicity_element(int n);

// Independent route to the same multiplicity, never touching the operad:
// count weight vectors (m_1..m_n), m_i in {-c_i..c_i}, with sum d, minus
// those with sum d+1 (convolution of ones-vectors).
Count weight_oracle(int d, std::span<const int> c);

// dim of the space of holomorphic sections for side lengths r = (r_0..r_{n-1}):
// multiplicity_element(n-1) evaluated at (r_0; r_1..r_{n-1}). The count is
// valid on the nose only for smooth inputs, so the flag rides along instead
// of gating the computation. Throws std::invalid_argument for fewer than 3
// entries or a nonpositive one.
struct SectionDim {
    Count dim;
    bool smooth;
};
SectionDim dim_h0(std::span<const int> r);

// drop every registry-backed element and its caches; for benchmarks that
// need cold starts, not safe while other threads evaluate
void clear_multiplicity_registry();

}  // namespace polyq
