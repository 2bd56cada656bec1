#pragma once

#include <chrono>
#include <cstddef>
#include <span>
#include <vector>

#include "specind/graph.hpp"

namespace specind {

struct ExactConfig {
  std::chrono::milliseconds timeout{120'000};
  std::size_t max_n = 600;
};

struct ExactResult {
  int alpha_k = 0;
  std::vector<Vertex> witness;  // sorted
  int k = 1;
  std::chrono::milliseconds elapsed{0};
};

/// Maximum set of vertices pairwise at distance > k, found as a maximum
/// clique of the complement of G^k (bitset branch and bound, greedy
/// colouring bounds, degeneracy order with ties by index).
ExactResult alpha_k_exact(const Graph& g, int k, const ExactConfig& cfg = {});

/// Plain independent-set branching on G^k itself; only for n <= 64.
int alpha_k_direct(const Graph& g, int k);

/// True iff the vertices are distinct and pairwise at distance > k.
bool verify_independent(const Graph& g, int k, std::span<const Vertex> set);

}  // namespace specind
