#include "specind/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>

#include "specind/error.hpp"

namespace specind {

namespace {

bool is_connected(std::size_t n, const std::vector<std::vector<Vertex>>& lists) {
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : lists[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n;
}

std::vector<int> parse_int_list(std::string_view text, std::string_view original) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find_first_of(",;", pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(pos, end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::InvalidFamilyParameters, "cannot parse parameters in '" + std::string(original) + "'");
    }
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

void require(bool ok, const FamilySpec& spec, const char* why) {
  if (!ok) throw Error(ErrorKind::InvalidFamilyParameters, spec.to_string() + ": " + why);
}

Graph kneser_graph(int n, int k, std::string label) {
  // Gosper's hack enumerates k-subsets in increasing bitmask order, which is colex order.
  std::vector<std::uint64_t> subsets;
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (s < limit) {
    subsets.push_back(s);
    std::uint64_t c = s & (~s + 1);
    std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      if ((subsets[i] & subsets[j]) == 0) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph::from_edges(subsets.size(), edges, std::move(label));
}

Graph circulant_graph(int n, const std::vector<int>& jumps, std::string label) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int s : jumps) {
      int j = (i + s) % n;
      edges.emplace_back(std::min(i, j), std::max(i, j));
    }
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges, std::move(label));
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::string label) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "graph must have at least one vertex");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n * n, 0);
  g.lists_.resize(n);
  g.label_ = std::move(label);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
    }
    if (u == v) throw Error(ErrorKind::InvalidArgument, "loops are not allowed");
    if (g.adj_[g.index(u, v)]) continue;
    g.adj_[g.index(u, v)] = 1;
    g.adj_[g.index(v, u)] = 1;
    g.lists_[static_cast<std::size_t>(u)].push_back(v);
    g.lists_[static_cast<std::size_t>(v)].push_back(u);
    ++g.edge_count_;
  }
  for (auto& list : g.lists_) std::sort(list.begin(), list.end());
  if (!is_connected(n, g.lists_)) {
    throw Error(ErrorKind::DisconnectedGraph, "graph on " + std::to_string(n) + " vertices is not connected");
  }
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < n_; ++u) {
    for (Vertex v : lists_[u]) {
      if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

bool Graph::is_regular() const noexcept {
  for (const auto& list : lists_) {
    if (list.size() != lists_[0].size()) return false;
  }
  return true;
}

Graph Graph::with_label(std::string label) const {
  Graph copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

std::string_view family_name(Family family) noexcept {
  switch (family) {
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::CompleteBipartite: return "complete_bipartite";
    case Family::Hypercube: return "hypercube";
    case Family::Circulant: return "circulant";
    case Family::Kneser: return "kneser";
    case Family::Odd: return "odd";
    case Family::Prism: return "prism";
    case Family::MoebiusLadder: return "moebius_ladder";
    case Family::Petersen: return "petersen";
  }
  return "?";
}

FamilySpec FamilySpec::parse(std::string_view text) {
  static constexpr Family kAll[] = {Family::Cycle,     Family::Complete, Family::CompleteBipartite, Family::Hypercube,
                                    Family::Circulant, Family::Kneser,   Family::Odd,               Family::Prism,
                                    Family::MoebiusLadder, Family::Petersen};
  std::size_t colon = text.find(':');
  std::string_view name = text.substr(0, colon);
  FamilySpec spec;
  bool found = false;
  for (Family f : kAll) {
    if (family_name(f) == name) {
      spec.family = f;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::InvalidFamilyParameters, "unknown family '" + std::string(name) + "'");
  if (colon != std::string_view::npos) spec.params = parse_int_list(text.substr(colon + 1), text);
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out(family_name(family));
  for (std::size_t i = 0; i < params.size(); ++i) {
    out += i == 0 ? ":" : (family == Family::Circulant && i == 1 ? ";" : ",");
    out += std::to_string(params[i]);
  }
  return out;
}

Graph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  const std::string label = spec.to_string();
  auto arity = [&](std::size_t count) { require(p.size() == count, spec, "wrong number of parameters"); };
  switch (spec.family) {
    case Family::Cycle: {
      arity(1);
      require(p[0] >= 3, spec, "cycle needs n >= 3");
      return circulant_graph(p[0], {1}, label);
    }
    case Family::Complete: {
      arity(1);
      require(p[0] >= 2, spec, "complete graph needs n >= 2");
      std::vector<Edge> edges;
      for (int i = 0; i < p[0]; ++i)
        for (int j = i + 1; j < p[0]; ++j) edges.emplace_back(i, j);
      return Graph::from_edges(static_cast<std::size_t>(p[0]), edges, label);
    }
    case Family::CompleteBipartite: {
      arity(2);
      require(p[0] >= 1 && p[1] >= 1, spec, "both parts must be non-empty");
      std::vector<Edge> edges;
      for (int i = 0; i < p[0]; ++i)
        for (int j = 0; j < p[1]; ++j) edges.emplace_back(i, p[0] + j);
      return Graph::from_edges(static_cast<std::size_t>(p[0] + p[1]), edges, label);
    }
    case Family::Hypercube: {
      arity(1);
      require(p[0] >= 1 && p[0] <= 20, spec, "hypercube dimension must be in [1, 20]");
      const int n = 1 << p[0];
      std::vector<Edge> edges;
      for (int v = 0; v < n; ++v)
        for (int b = 0; b < p[0]; ++b)
          if ((v ^ (1 << b)) > v) edges.emplace_back(v, v ^ (1 << b));
      return Graph::from_edges(static_cast<std::size_t>(n), edges, label);
    }
    case Family::Circulant: {
      require(p.size() >= 2, spec, "circulant needs n and at least one jump");
      const int n = p[0];
      require(n >= 3, spec, "circulant needs n >= 3");
      std::vector<int> jumps(p.begin() + 1, p.end());
      int g = n;
      for (int s : jumps) {
        require(s >= 1 && s <= n / 2, spec, "jumps must lie in [1, n/2]");
        g = std::gcd(g, s);
      }
      if (g != 1) {
        throw Error(ErrorKind::DisconnectedGraph, label + ": gcd(n, s_1, ..., s_m) = " + std::to_string(g));
      }
      return circulant_graph(n, jumps, label);
    }
    case Family::Kneser: {
      arity(2);
      require(p[1] >= 1 && p[0] <= 62, spec, "kneser needs k >= 1 and n <= 62");
      require(p[0] >= 2 * p[1], spec, "kneser needs n >= 2k");
      require(binomial(p[0], p[1]) <= 20000, spec, "too many vertices");
      return kneser_graph(p[0], p[1], label);
    }
    case Family::Odd: {
      arity(1);
      require(p[0] >= 2 && p[0] <= 8, spec, "odd graph needs 2 <= l <= 8");
      return kneser_graph(2 * p[0] - 1, p[0] - 1, label);
    }
    case Family::Prism: {
      arity(1);
      require(p[0] >= 3, spec, "prism needs r >= 3");
      const int r = p[0];
      std::vector<Edge> edges;
      for (int i = 0; i < r; ++i) {
        edges.emplace_back(i, (i + 1) % r);
        edges.emplace_back(r + i, r + (i + 1) % r);
        edges.emplace_back(i, r + i);
      }
      return Graph::from_edges(static_cast<std::size_t>(2 * r), edges, label);
    }
    case Family::MoebiusLadder: {
      arity(1);
      require(p[0] >= 2, spec, "moebius ladder needs r >= 2");
      return circulant_graph(2 * p[0], {1, p[0]}, label);
    }
    case Family::Petersen: {
      arity(0);
      return kneser_graph(5, 2, label);
    }
  }
  throw Error(ErrorKind::InvalidFamilyParameters, "unhandled family");
}

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  auto bad = [](const std::string& why) { return Error(ErrorKind::MalformedGraph6, why); };
  for (char c : text) {
    if (c < 63 || c > 126) throw bad("character outside the printable graph6 range");
  }
  if (text.empty()) throw bad("empty input");

  std::size_t pos = 0;
  std::size_t n = 0;
  auto take6 = [&](int count) {
    if (pos + static_cast<std::size_t>(count) > text.size()) throw bad("truncated size header");
    std::size_t value = 0;
    for (int i = 0; i < count; ++i) value = (value << 6) | static_cast<std::size_t>(text[pos++] - 63);
    return value;
  };
  if (text[0] != 126) {
    n = take6(1);
  } else if (text.size() > 1 && text[1] != 126) {
    pos = 1;
    n = take6(3);
  } else {
    pos = 2;
    n = take6(6);
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) {
    throw bad("expected " + std::to_string(expected) + " data bytes, got " + std::to_string(text.size() - pos));
  }
  if (n == 0) throw bad("graph has no vertices");
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      int byte = text[pos + bit / 6] - 63;
      if (byte & (1 << (5 - bit % 6))) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  auto put6 = [&](std::size_t value, int count) {
    for (int i = count - 1; i >= 0; --i) out.push_back(static_cast<char>(63 + ((value >> (6 * i)) & 63)));
  };
  if (n <= 62) {
    put6(n, 1);
  } else if (n <= 258047) {
    out.push_back(126);
    put6(n, 3);
  } else {
    out.append(2, static_cast<char>(126));
    put6(n, 6);
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  int max_vertex = -1;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long u = 0;
    long long v = 0;
    if (!(fields >> u)) continue;
    std::string rest;
    if (!(fields >> v) || (fields >> rest) || u < 0 || v < 0 || u > 1'000'000 || v > 1'000'000) {
      throw Error(ErrorKind::MalformedEdgeList, "line " + std::to_string(line_no) + ": expected 'u v'");
    }
    if (u == v) throw Error(ErrorKind::MalformedEdgeList, "line " + std::to_string(line_no) + ": loop");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    max_vertex = std::max<int>(max_vertex, static_cast<int>(std::max(u, v)));
  }
  if (max_vertex < 0) throw Error(ErrorKind::MalformedEdgeList, "no edges");
  return Graph::from_edges(static_cast<std::size_t>(max_vertex + 1), edges);
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();
  const std::string label = path.stem().string();
  if (path.extension() == ".g6") {
    std::istringstream lines(content);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \r\t") != std::string::npos) return parse_graph6(line).with_label(label);
    }
    throw Error(ErrorKind::MalformedGraph6, path.string() + " is empty");
  }
  return parse_edge_list(content).with_label(label);
}

DistanceMatrix distance_matrix(const Graph& g) {
  const std::size_t n = g.order();
  DistanceMatrix dm;
  dm.n = n;
  dm.dist.assign(n * n, -1);
  std::vector<Vertex> queue(n);
  for (std::size_t s = 0; s < n; ++s) {
    int* row = dm.dist.data() + s * n;
    row[s] = 0;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = static_cast<Vertex>(s);
    while (head < tail) {
      Vertex u = queue[head++];
      for (Vertex v : g.neighbors(u)) {
        if (row[v] < 0) {
          row[v] = row[u] + 1;
          queue[tail++] = v;
        }
      }
    }
    dm.diameter = std::max(dm.diameter, row[queue[tail - 1]]);
  }
  return dm;
}

Graph power_graph(const Graph& g, int k) { return power_graph(g, distance_matrix(g), k); }

Graph power_graph(const Graph& g, const DistanceMatrix& dm, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "power must be >= 1");
  std::vector<Edge> edges;
  const std::size_t n = g.order();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      int d = dm.at(static_cast<Vertex>(u), static_cast<Vertex>(v));
      if (d >= 1 && d <= k) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  std::string label = g.label().empty() ? std::string() : g.label() + "^" + std::to_string(k);
  return Graph::from_edges(n, edges, std::move(label));
}

}  // namespace specind
