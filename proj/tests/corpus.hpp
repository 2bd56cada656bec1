#pragma once

#include <string>
#include <vector>

#include "specind/graph.hpp"
#include "specind/spectrum.hpp"

struct CorpusGraph {
  std::string name;
  specind::Graph graph;
  specind::Spectrum spec;
};

/// Family generators up to n = 512 followed by every fixtures/graphs/*.g6.
std::vector<CorpusGraph> load_corpus();
/// Family members only; no fixture files needed.
std::vector<CorpusGraph> generator_corpus();

struct PropertyOutcome {
  std::string name;
  int checked = 0;
  std::vector<std::string> failures;
};

/// Every applicable bound floor is at least the exact alpha_k, for k < D.
PropertyOutcome check_soundness(const std::vector<CorpusGraph>& corpus, std::size_t max_n);
/// Orthogonality, p_i(theta_0) = ||p_i||^2, sum p_i = H, q'_k maximal at theta_0.
PropertyOutcome check_predistance(const std::vector<CorpusGraph>& corpus);
/// Spectral excess equals the mean excess exactly for distance-regular graphs.
PropertyOutcome check_excess(const std::vector<CorpusGraph>& corpus);
/// Two runs of the bound aggregator produce identical JSON.
PropertyOutcome check_determinism(const std::vector<CorpusGraph>& corpus, std::size_t max_n);
/// Alternating pi sum vanishes; m_j pi_j = pi_0 on hypercubes for odd j.
PropertyOutcome check_pi_identities(const std::vector<CorpusGraph>& corpus);
