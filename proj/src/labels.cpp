#include "oddred/labels.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <thread>

namespace oddred {

Labeling::Labeling(int vertex_count, std::uint32_t bits) : vertex_count_(vertex_count), bits_(bits) {
  if (vertex_count < 0 || vertex_count > 32) throw InvalidArgument("labelings support at most 32 vertices");
  if (vertex_count < 32 && (bits >> vertex_count) != 0) throw InvalidArgument("labeling has bits beyond its vertices");
}

Labeling Labeling::from_bitstring(const std::string& bits) {
  if (bits.size() > 32) throw InvalidArgument("labelings support at most 32 vertices");
  std::uint32_t value = 0;
  for (std::size_t v = 0; v < bits.size(); ++v) {
    if (bits[v] != '0' && bits[v] != '1') throw FormatError("labeling bitstring must contain only 0 and 1");
    if (bits[v] == '1') value |= 1U << v;
  }
  return Labeling(static_cast<int>(bits.size()), value);
}

int Labeling::ones() const { return std::popcount(bits_); }

std::string Labeling::bitstring() const {
  std::string out(static_cast<std::size_t>(vertex_count_), '0');
  for (int v = 0; v < vertex_count_; ++v) {
    if (at(v)) out[static_cast<std::size_t>(v)] = '1';
  }
  return out;
}

namespace {

int label_vertex_count(const RedBlueGraph& h) {
  const int count = h.graph().vertex_count();
  if (count % 2 != 0) throw InvalidArgument("labelings need an even number of vertices");
  if (count > kMaxLabelVertices) {
    throw LimitExceeded("label scan over " + std::to_string(count) + " vertices exceeds the limit of " +
                        std::to_string(kMaxLabelVertices));
  }
  return count;
}

// The c-th bitstring in lexicographic order, vertex 0 being the leading character.
std::uint32_t lex_bits(std::uint64_t c, int count) {
  std::uint32_t bits = 0;
  for (int v = 0; v < count; ++v) {
    if ((c >> (count - 1 - v)) & 1U) bits |= 1U << v;
  }
  return bits;
}

}  // namespace

std::vector<Labeling> enumerate_labelings(const RedBlueGraph& h) {
  const int count = label_vertex_count(h);
  const int parity = (count / 2) % 2;
  std::vector<Labeling> out;
  out.reserve(std::size_t{1} << (count > 0 ? count - 1 : 0));
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << count); ++c) {
    if (std::popcount(c) % 2 == parity) out.emplace_back(count, lex_bits(c, count));
  }
  return out;
}

EdgeSet label_edge_set(const RedBlueGraph& h, const Labeling& labeling) {
  const Graph& g = h.graph();
  if (labeling.vertex_count() != g.vertex_count()) throw DimensionMismatch("labeling does not match the graph");
  EdgeSet out;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    bool equal = labeling.at(edge.u) == labeling.at(edge.v);
    if (equal != h.is_red(e)) out.push_back(e);
  }
  return out;
}

namespace {

struct PackedEdge {
  int u;
  int v;
  bool red;
};

// First labeling (in lexicographic order) with x(E_L) < 1, scanning indices in
// [begin, end). Integer weights are x scaled by a common denominator.
template <typename Weight, typename Threshold>
std::optional<std::uint64_t> scan(const std::vector<PackedEdge>& edges, const std::vector<Weight>& weights,
                                  const Threshold& one, int count, int parity, std::uint64_t begin,
                                  std::uint64_t end, const std::atomic<std::uint64_t>* cutoff) {
  for (std::uint64_t c = begin; c < end; ++c) {
    if (std::popcount(c) % 2 != parity) continue;
    if (cutoff != nullptr && (c & 0xFFF) == 0 && cutoff->load(std::memory_order_relaxed) < c) return std::nullopt;
    const std::uint32_t bits = lex_bits(c, count);
    Weight sum = 0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const bool equal = (((bits >> edges[e].u) ^ (bits >> edges[e].v)) & 1U) == 0;
      if (equal != edges[e].red) sum += weights[e];
    }
    if (sum < one) return c;
  }
  return std::nullopt;
}

template <typename Weight, typename Threshold>
std::optional<std::uint64_t> first_violation(const std::vector<PackedEdge>& edges, const std::vector<Weight>& weights,
                                             const Threshold& one, int count, int threads) {
  const int parity = (count / 2) % 2;
  const std::uint64_t total = std::uint64_t{1} << count;
  if (threads <= 1 || total < 4096) {
    return scan(edges, weights, one, count, parity, 0, total, nullptr);
  }
  // Contiguous chunks; the smallest violating index across chunks wins.
  const std::uint64_t chunks = static_cast<std::uint64_t>(threads) * 8;
  const std::uint64_t size = (total + chunks - 1) / chunks;
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  std::atomic<std::uint64_t> next_chunk{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        std::uint64_t chunk = next_chunk.fetch_add(1);
        if (chunk >= chunks) return;
        std::uint64_t begin = chunk * size;
        if (begin >= total || begin > best.load()) return;
        std::uint64_t end = std::min(total, begin + size);
        if (auto hit = scan(edges, weights, one, count, parity, begin, end, &best)) {
          std::uint64_t current = best.load();
          while (*hit < current && !best.compare_exchange_weak(current, *hit)) {
          }
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (best.load() == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return best.load();
}

}  // namespace

QMembership q_membership(const RedBlueGraph& h, std::span<const Rational> x, int threads) {
  const Graph& g = h.graph();
  if (x.size() != static_cast<std::size_t>(g.edge_count())) {
    throw DimensionMismatch("point has " + std::to_string(x.size()) + " entries for " +
                            std::to_string(g.edge_count()) + " edges");
  }
  const int count = label_vertex_count(h);
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (sgn(x[e]) < 0) return NegativeEntry{static_cast<int>(e)};
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    Rational sum = 0;
    for (int e : g.incident_edges(v)) sum += x[static_cast<std::size_t>(e)];
    if (sum != 1) return DegreeViolation{v, sum};
  }

  std::vector<PackedEdge> edges;
  for (int e = 0; e < g.edge_count(); ++e) edges.push_back({g.edge(e).u, g.edge(e).v, h.is_red(e)});

  std::optional<std::uint64_t> hit;
  Integer scale = common_denominator(x);
  auto scaled = scaled_to_int64(x, scale);
  auto one = to_int64(scale);
  if (scaled && one && *one < std::numeric_limits<std::int64_t>::max() / (g.edge_count() + 1)) {
    hit = first_violation(edges, *scaled, *one, count, threads);
  } else {
    std::vector<Rational> weights(x.begin(), x.end());
    hit = first_violation(edges, weights, Rational(1), count, threads);
  }
  if (!hit) return InQ{};
  Labeling labeling(count, lex_bits(*hit, count));
  Rational value = 0;
  for (int e : label_edge_set(h, labeling)) value += x[static_cast<std::size_t>(e)];
  return LabelViolation{labeling, value};
}

Counterexample build_counterexample() {
  // Vertices v1..v10 become 0..9; v1..v5 on the left.
  auto e = [](int a, int b) { return Edge(a - 1, b - 1); };
  std::vector<Edge> blue{e(1, 6), e(1, 7), e(2, 8), e(2, 6), e(3, 7), e(3, 9),
                         e(3, 10), e(4, 8), e(4, 10), e(5, 8), e(5, 9)};
  std::vector<Edge> red{e(2, 7), e(4, 9), e(5, 10)};
  std::vector<Edge> all = blue;
  all.insert(all.end(), red.begin(), red.end());
  Graph g(10, all, Bipartition{{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}});
  Counterexample out{RedBlueGraph::with_red_edges(std::move(g), red), {}};
  const Graph& host = out.graph.graph();
  out.point.assign(static_cast<std::size_t>(host.edge_count()), Rational(1, 3));
  out.point[static_cast<std::size_t>(host.require_edge(0, 5))] = Rational(2, 3);
  return out;
}

ReductionInstance reduce_maxcut_to_separation(const Graph& g, int k) {
  if (!is_cubic(g)) throw InvalidArgument("max-cut reduction needs a cubic graph");
  const int m = g.edge_count();
  if (k < 0 || k > m - 2) {
    throw InvalidArgument("trivial instance: k must lie in [0, " + std::to_string(m - 2) + "]");
  }
  ReductionInstance out;
  out.source = g;
  out.k = k;
  out.doubled = doubled_graph(g, RedConvention::IdentityEdges);
  out.alpha = Rational(1, 2 * (m - k + 1));
  const Graph& h = out.doubled.graph();
  out.point.resize(static_cast<std::size_t>(h.edge_count()));
  for (int e = 0; e < h.edge_count(); ++e) {
    out.point[static_cast<std::size_t>(e)] = out.doubled.is_red(e) ? Rational(1 - 3 * out.alpha) : out.alpha;
  }
  return out;
}

int brute_force_max_cut(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxCutVertices) throw LimitExceeded("max-cut enumeration is limited to " + std::to_string(kMaxCutVertices) + " vertices");
  if (n <= 1) return 0;
  int best = 0;
  // The last vertex stays on the zero side, so each cut is seen once.
  for (std::uint32_t s = 0; s < (1U << (n - 1)); ++s) {
    int cut = 0;
    for (const auto& e : g.edges()) cut += static_cast<int>(((s >> e.u) ^ (s >> e.v)) & 1U);
    best = std::max(best, cut);
  }
  return best;
}

}  // namespace oddred
