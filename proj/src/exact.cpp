#include "specind/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>

#include "specind/error.hpp"

namespace specind {

namespace {

using Clock = std::chrono::steady_clock;

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  /// Index of the lowest set bit; call only when any().
  std::size_t first() const {
    for (std::size_t i = 0;; ++i) {
      if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  void and_not(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Smallest-last order, reversed so the densest core comes first.
std::vector<std::size_t> degeneracy_order(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = adj[v].size();
  std::vector<bool> gone(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!gone[v] && (pick == n || deg[v] < deg[pick])) pick = v;
    }
    gone[pick] = true;
    order.push_back(pick);
    for (std::size_t u : adj[pick]) {
      if (!gone[u]) --deg[u];
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

struct CliqueSearch {
  std::vector<Bitset> nbr;  // in search order
  std::vector<std::size_t> current;
  std::vector<std::size_t> best;
  Clock::time_point deadline;
  std::size_t nodes = 0;

  void expand(Bitset p) {
    if ((++nodes & 1023U) == 0 && Clock::now() > deadline) {
      throw Error(ErrorKind::Timeout, "exact search exceeded its time budget");
    }
    // Greedy colouring in index order; colour classes are independent sets.
    std::vector<std::size_t> verts;
    std::vector<std::size_t> colors;
    Bitset uncolored = p;
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset q = uncolored;
      while (q.any()) {
        const std::size_t v = q.first();
        q.reset(v);
        uncolored.reset(v);
        q.and_not(nbr[v]);
        verts.push_back(v);
        colors.push_back(color);
      }
    }
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (current.size() + colors[i] <= best.size()) return;
      const std::size_t v = verts[i];
      current.push_back(v);
      Bitset next = p;
      next &= nbr[v];
      if (next.any()) {
        expand(std::move(next));
      } else if (current.size() > best.size()) {
        best = current;
      }
      current.pop_back();
      p.reset(v);
    }
  }
};

// Independent-set branching over 64-bit masks.
struct MaskSearch {
  std::vector<std::uint64_t> nbr;
  int best = 0;

  void run(std::uint64_t p, int size) {
    if (p == 0) {
      best = std::max(best, size);
      return;
    }
    if (size + std::popcount(p) <= best) return;
    // A vertex of degree <= 1 inside p can always be taken.
    int pick = -1;
    int pick_deg = -1;
    for (std::uint64_t rest = p; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int deg = std::popcount(nbr[static_cast<std::size_t>(v)] & p);
      if (deg <= 1) {
        run(p & ~(nbr[static_cast<std::size_t>(v)] | (std::uint64_t{1} << v)), size + 1);
        return;
      }
      if (deg > pick_deg) {
        pick = v;
        pick_deg = deg;
      }
    }
    const std::uint64_t bit = std::uint64_t{1} << pick;
    run(p & ~(nbr[static_cast<std::size_t>(pick)] | bit), size + 1);
    run(p & ~bit, size);
  }
};

}  // namespace

ExactResult alpha_k_exact(const Graph& g, int k, const ExactConfig& cfg) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be at least 1");
  const std::size_t n = g.order();
  if (n > cfg.max_n) {
    throw Error(ErrorKind::SizeLimitExceeded, "graph has " + std::to_string(n) + " vertices, limit " + std::to_string(cfg.max_n));
  }
  const auto start = Clock::now();
  const DistanceMatrix dm = distance_matrix(g);

  // Complement of G^k: u ~ v iff dist(u, v) > k.
  std::vector<std::vector<std::size_t>> far(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && dm.at(static_cast<Vertex>(u), static_cast<Vertex>(v)) > k) far[u].push_back(v);
    }
  }
  const auto order = degeneracy_order(far);
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

  CliqueSearch search;
  search.nbr.assign(n, Bitset(n));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v : far[u]) search.nbr[pos[u]].set(pos[v]);
  }
  search.deadline = start + cfg.timeout;
  Bitset all(n);
  for (std::size_t i = 0; i < n; ++i) all.set(i);
  search.expand(std::move(all));

  ExactResult out;
  out.k = k;
  for (std::size_t i : search.best) out.witness.push_back(static_cast<Vertex>(order[i]));
  std::sort(out.witness.begin(), out.witness.end());
  out.alpha_k = static_cast<int>(out.witness.size());
  out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return out;
}

int alpha_k_direct(const Graph& g, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be at least 1");
  const std::size_t n = g.order();
  if (n > 64) throw Error(ErrorKind::SizeLimitExceeded, "direct search is limited to 64 vertices");
  const DistanceMatrix dm = distance_matrix(g);
  MaskSearch search;
  search.nbr.assign(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && dm.at(static_cast<Vertex>(u), static_cast<Vertex>(v)) <= k) search.nbr[u] |= std::uint64_t{1} << v;
    }
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  search.run(all, 0);
  return search.best;
}

bool verify_independent(const Graph& g, int k, std::span<const Vertex> set) {
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex v : set) {
    if (v < 0 || v >= n) throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " out of range");
  }
  std::vector<int> dist(g.order());
  for (std::size_t i = 0; i < set.size(); ++i) {
    // Breadth-first search from set[i], cut off at depth k.
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<Vertex> queue{set[i]};
    dist[static_cast<std::size_t>(set[i])] = 0;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      if (dist[static_cast<std::size_t>(u)] == k) continue;
      for (Vertex w : g.neighbors(u)) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          queue.push_back(w);
        }
      }
    }
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (dist[static_cast<std::size_t>(set[j])] >= 0) return false;
    }
  }
  return true;
}

}  // namespace specind
