#pragma once

#include "k3scroll/clifford.hpp"
#include "k3scroll/scroll.hpp"

namespace k3s {

// Dual scrollar invariants d_i = h^0(L - iD) - h^0(L - (i+1)D), starting at
// d_0 = c + 2 + D^2/2 and ending when zero. Non-increasing for i >= 1.
std::vector<i64> dual_invariants(const K3Config& cfg, const CliffordData& cd);

// Codimension count of zero entries: r = D^2 + h^1(L - 2D) unless L ~ 2D,
// where r = D^2 - 1. When D is perfect, the case breakdown
// (D^2 - 1 / D^2 + Delta.D - 1 / D^2 + Delta.D) must agree; checked.
i64 singular_locus_dim(const K3Config& cfg, const CliffordData& cd);

// The scroll swept out by the pencil, via the dual invariants.
ScrollType scroll_of(const K3Config& cfg, const CliffordData& cd);

}  // namespace k3s
