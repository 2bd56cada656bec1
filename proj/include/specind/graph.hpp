#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace specind {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple connected graph with a dense adjacency matrix and
/// sorted adjacency lists. Instances are immutable once built; every public
/// factory rejects disconnected input.
class Graph {
 public:
  /// Builds from an edge list. Duplicate edges collapse; loops and
  /// out-of-range endpoints throw InvalidArgument; a disconnected result
  /// throws DisconnectedGraph.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges, std::string label = {});

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool adjacent(Vertex u, Vertex v) const noexcept { return adj_[index(u, v)] != 0; }
  std::span<const Vertex> neighbors(Vertex u) const noexcept { return lists_[static_cast<std::size_t>(u)]; }
  int degree(Vertex u) const noexcept { return static_cast<int>(lists_[static_cast<std::size_t>(u)].size()); }
  const std::string& label() const noexcept { return label_; }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  bool is_regular() const noexcept;

  Graph with_label(std::string label) const;

  /// Equality compares adjacency only, not labels.
  friend bool operator==(const Graph& a, const Graph& b) noexcept { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  Graph() = default;
  std::size_t index(Vertex u, Vertex v) const noexcept {
    return static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v);
  }

  std::size_t n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> lists_;
  std::string label_;
};

struct DistanceMatrix {
  std::size_t n = 0;
  std::vector<int> dist;  // row-major n x n
  int diameter = 0;

  int at(Vertex u, Vertex v) const noexcept {
    return dist[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)];
  }
};

enum class Family {
  Cycle,
  Complete,
  CompleteBipartite,
  Hypercube,
  Circulant,
  Kneser,
  Odd,
  Prism,
  MoebiusLadder,
  Petersen,
};

/// A named family plus its integer parameters.
///
/// Parameter conventions and vertex orderings:
///   cycle:n               vertices 0..n-1, i ~ i+1 mod n
///   complete:n            vertices 0..n-1
///   complete_bipartite:a,b  first part 0..a-1, second a..a+b-1
///   hypercube:d           vertex = bit vector, adjacency by one bit flip
///   circulant:n;s1,...,sm vertices 0..n-1, i ~ i +- s_j mod n
///   kneser:n,k            k-subsets of {0..n-1} in colexicographic order
///   odd:l                 kneser:2l-1,l-1
///   prism:r               outer cycle 0..r-1, inner cycle r..2r-1, rungs i ~ i+r
///   moebius_ladder:r      cycle 0..2r-1 plus chords i ~ i+r
///   petersen              kneser:5,2
struct FamilySpec {
  Family family = Family::Cycle;
  std::vector<int> params;

  /// Parses "odd:5", "kneser:6,2", "circulant:10;1,2" (or "circulant:10,1,2"), "petersen".
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
};

std::string_view family_name(Family family) noexcept;

Graph generate(const FamilySpec& spec);

/// Decodes one graph6 line (an optional ">>graph6<<" header is accepted).
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// "u v" pairs, 0-indexed, one per line; '#' starts a comment.
Graph parse_edge_list(std::string_view text);

/// Loads a graph file: ".g6" files are graph6 (first non-empty line),
/// everything else is read as an edge list.
Graph load_graph(const std::filesystem::path& path);

DistanceMatrix distance_matrix(const Graph& g);

/// Edge iff 1 <= dist <= k; k >= diameter yields the complete graph.
Graph power_graph(const Graph& g, int k);
Graph power_graph(const Graph& g, const DistanceMatrix& dm, int k);

}  // namespace specind
