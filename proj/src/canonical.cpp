#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "spexg/graph.hpp"

namespace spexg {
namespace {

// Canonical label = the relabeling maximizing the upper-triangle bit string
// read in graph6 order (x01, x02, x12, x03, ...). Backtracking over the ties
// left by color refinement, with two prunings: partial-key comparison against
// the incumbent, and collapsing cell vertices whose transposition is an
// automorphism of the whole graph.
struct Canonizer {
  int n = 0;
  std::array<std::uint64_t, 64> adj{};

  using Cells = std::vector<std::vector<int>>;

  std::vector<std::uint64_t> best_key;
  std::vector<int> best_order;  // old vertex at each canonical position
  bool have_best = false;

  static void push_bit(std::vector<std::uint64_t>& key, long long k, bool bit) {
    std::size_t w = static_cast<std::size_t>(k >> 6);
    if (w >= key.size()) key.push_back(0);
    if (bit) key[w] |= std::uint64_t{1} << (63 - (k & 63));
  }

  // Key bits among the first t placed vertices (a prefix of the full key).
  std::vector<std::uint64_t> prefix_key(const std::vector<int>& order, int t) const {
    std::vector<std::uint64_t> key;
    long long k = 0;
    for (int j = 1; j < t; ++j)
      for (int i = 0; i < j; ++i, ++k)
        push_bit(key, k, (adj[order[i]] >> order[j]) & 1u);
    return key;
  }

  // -1 / 0 / +1 comparing the first `bits` bits of a against b.
  static int cmp_prefix(const std::vector<std::uint64_t>& a,
                        const std::vector<std::uint64_t>& b, long long bits) {
    long long full = bits >> 6;
    for (long long w = 0; w < full; ++w) {
      std::uint64_t x = w < (long long)a.size() ? a[w] : 0;
      std::uint64_t y = w < (long long)b.size() ? b[w] : 0;
      if (x != y) return x < y ? -1 : 1;
    }
    int rem = static_cast<int>(bits & 63);
    if (rem) {
      std::uint64_t mask = ~std::uint64_t{0} << (64 - rem);
      std::uint64_t x = (full < (long long)a.size() ? a[full] : 0) & mask;
      std::uint64_t y = (full < (long long)b.size() ? b[full] : 0) & mask;
      if (x != y) return x < y ? -1 : 1;
    }
    return 0;
  }

  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::uint64_t> masks(cells.size(), 0);
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) masks[c] |= std::uint64_t{1} << v;
      for (std::size_t ci = 0; ci < cells.size() && !changed; ++ci) {
        if (cells[ci].size() <= 1) continue;
        std::vector<std::pair<std::vector<int>, int>> sigs;  // (signature, vertex)
        sigs.reserve(cells[ci].size());
        for (int v : cells[ci]) {
          std::vector<int> sig(cells.size());
          for (std::size_t c = 0; c < cells.size(); ++c)
            sig[c] = std::popcount(adj[v] & masks[c]);
          sigs.emplace_back(std::move(sig), v);
        }
        bool all_equal = std::all_of(sigs.begin() + 1, sigs.end(), [&](const auto& s) {
          return s.first == sigs[0].first;
        });
        if (all_equal) continue;
        // Order sub-cells by signature descending; ties keep vertex order.
        std::stable_sort(sigs.begin(), sigs.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });
        Cells merged;
        for (std::size_t i = 0; i < sigs.size();) {
          std::vector<int> cell;
          std::size_t j = i;
          while (j < sigs.size() && sigs[j].first == sigs[i].first)
            cell.push_back(sigs[j++].second);
          std::sort(cell.begin(), cell.end());
          merged.push_back(std::move(cell));
          i = j;
        }
        Cells next;
        next.reserve(cells.size() + merged.size() - 1);
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (c == ci)
            for (auto& m : merged) next.push_back(std::move(m));
          else
            next.push_back(std::move(cells[c]));
        }
        cells = std::move(next);
        changed = true;
      }
    }
  }

  // Swapping u and w is an automorphism iff their rows agree off {u, w}.
  bool transposition_is_automorphism(int u, int w) const {
    std::uint64_t off = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << w));
    return (adj[u] & off) == (adj[w] & off);
  }

  void recurse(Cells cells) {
    refine(cells);

    int t = 0;
    std::vector<int> order;
    order.reserve(n);
    for (auto& c : cells)
      for (int v : c) order.push_back(v);
    for (auto& c : cells) {
      if (c.size() != 1) break;
      ++t;
    }

    if (have_best && t > 1) {
      auto part = prefix_key(order, t);
      long long bits = static_cast<long long>(t) * (t - 1) / 2;
      if (cmp_prefix(part, best_key, bits) < 0) return;
    }

    if (t == n) {
      auto key = prefix_key(order, n);
      if (!have_best || cmp_prefix(key, best_key, static_cast<long long>(n) * (n - 1) / 2) > 0) {
        best_key = std::move(key);
        best_order = order;
        have_best = true;
      }
      return;
    }

    std::size_t target = 0;
    while (cells[target].size() == 1) ++target;
    const std::vector<int> cell = cells[target];
    std::vector<bool> skip(cell.size(), false);
    for (std::size_t a = 0; a < cell.size(); ++a) {
      if (skip[a]) continue;
      for (std::size_t b = a + 1; b < cell.size(); ++b)
        if (!skip[b] && transposition_is_automorphism(cell[a], cell[b])) skip[b] = true;
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c == target) {
          child.push_back({cell[a]});
          std::vector<int> rest;
          for (std::size_t b = 0; b < cell.size(); ++b)
            if (b != a) rest.push_back(cell[b]);
          child.push_back(std::move(rest));
        } else {
          child.push_back(cells[c]);
        }
      }
      recurse(std::move(child));
    }
  }
};

}  // namespace

CanonicalResult canonical_form_labeled(const Graph& g) {
  const int n = g.order();
  if (n > 64)
    throw std::invalid_argument("canonical_form: order > 64 not supported");
  if (n == 0) return {g, {}};

  Canonizer cz;
  cz.n = n;
  for (int v = 0; v < n; ++v) cz.adj[v] = g.row64(v);

  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  cz.recurse({all});

  std::vector<int> labeling(n);
  for (int pos = 0; pos < n; ++pos) labeling[cz.best_order[pos]] = pos;
  Graph canon(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (g.has_edge(cz.best_order[i], cz.best_order[j])) canon.add_edge(i, j);
  return {std::move(canon), std::move(labeling)};
}

Graph canonical_form(const Graph& g) { return canonical_form_labeled(g).graph; }

}  // namespace spexg
