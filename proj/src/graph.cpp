#include "spexg/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace spexg {

int VertexSet::count() const {
  int c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

bool VertexSet::intersects(const VertexSet& o) const {
  std::size_t k = std::min(w_.size(), o.w_.size());
  for (std::size_t i = 0; i < k; ++i)
    if (w_[i] & o.w_[i]) return true;
  return false;
}

bool VertexSet::contains(const VertexSet& o) const {
  for (std::size_t i = 0; i < o.w_.size(); ++i) {
    std::uint64_t mine = i < w_.size() ? w_[i] : 0;
    if (o.w_[i] & ~mine) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  if (o.cap_ > cap_) {
    cap_ = o.cap_;
    w_.resize((cap_ + 63) / 64, 0);
  }
  for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= i < o.w_.size() ? o.w_[i] : 0;
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  std::size_t k = std::min(w_.size(), o.w_.size());
  for (std::size_t i = 0; i < k; ++i) w_[i] &= ~o.w_[i];
  return *this;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for_each([&](int v) { out.push_back(v); });
  return out;
}

Graph::Graph(int n) : n_(n), words_(std::max(1, (n + 63) / 64)) {
  if (n < 0) throw std::invalid_argument("Graph: negative order");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

void Graph::add_edge(int i, int j) {
  check(i);
  check(j);
  if (i == j) throw std::invalid_argument("Graph: loops are not allowed");
  if (has_edge(i, j)) return;
  bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
  bits_[static_cast<std::size_t>(j) * words_ + (i >> 6)] |= std::uint64_t{1} << (i & 63);
  ++m_;
}

void Graph::remove_edge(int i, int j) {
  check(i);
  check(j);
  if (!has_edge(i, j)) return;
  bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] &= ~(std::uint64_t{1} << (j & 63));
  bits_[static_cast<std::size_t>(j) * words_ + (i >> 6)] &= ~(std::uint64_t{1} << (i & 63));
  --m_;
}

int Graph::degree(int v) const {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

VertexSet Graph::neighbors(int v) const {
  VertexSet s(n_);
  auto r = row(v);
  std::copy(r.begin(), r.end(), s.w_.begin());
  return s;
}

VertexSet Graph::all_vertices() const {
  VertexSet s(n_);
  for (int v = 0; v < n_; ++v) s.set(v);
  return s;
}

bool Graph::check_invariants() const {
  long long pop = 0;
  for (int i = 0; i < n_; ++i) {
    if (has_edge(i, i)) return false;
    for (auto w : row(i)) pop += std::popcount(w);
    for (int wi = words_ - 1; wi >= 0; --wi) {
      // no bits at positions >= n
      std::uint64_t word = bits_[static_cast<std::size_t>(i) * words_ + wi];
      int hi = n_ - wi * 64;
      if (hi < 64 && hi >= 0 && (word >> (hi < 0 ? 0 : hi)) != 0) return false;
    }
  }
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (has_edge(i, j) != has_edge(j, i)) return false;
  return pop == 2 * m_;
}

// ---------------------------------------------------------------------------
// graph6

namespace {
constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'
}  // namespace

Graph from_graph6(std::string_view text, int cap) {
  if (text.empty())
    throw Graph6ParseError(Graph6Error::bad_header, "graph6: empty input");
  std::size_t pos = 0;
  auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };

  long long n = 0;
  if (byte(0) == kG6Hi) {
    // Long form: '~' then 18 bits over three bytes. The 8-byte form for
    // n > 258047 is not supported here.
    if (text.size() < 4)
      throw Graph6ParseError(Graph6Error::bad_header, "graph6: truncated order field");
    if (byte(1) == kG6Hi)
      throw Graph6ParseError(Graph6Error::bad_header, "graph6: order beyond supported range");
    for (int i = 1; i <= 3; ++i) {
      int c = byte(i);
      if (c < kG6Lo || c > kG6Hi)
        throw Graph6ParseError(Graph6Error::bad_character, "graph6: bad order byte");
      n = (n << 6) | (c - kG6Lo);
    }
    pos = 4;
  } else {
    int c = byte(0);
    if (c < kG6Lo)
      throw Graph6ParseError(Graph6Error::bad_header, "graph6: bad leading byte");
    n = c - kG6Lo;
    pos = 1;
  }
  if (n > cap)
    throw Graph6ParseError(Graph6Error::order_exceeds_cap,
                           "graph6: order " + std::to_string(n) + " exceeds cap " +
                               std::to_string(cap));

  const long long nbits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() - pos < need)
    throw Graph6ParseError(Graph6Error::truncated_body, "graph6: body too short");
  if (text.size() - pos > need)
    throw Graph6ParseError(Graph6Error::trailing_bytes, "graph6: trailing bytes");

  Graph g(static_cast<int>(n));
  long long k = 0;
  int acc = 0, left = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (left == 0) {
        int c = byte(pos++);
        if (c < kG6Lo || c > kG6Hi)
          throw Graph6ParseError(Graph6Error::bad_character, "graph6: bad body byte");
        acc = c - kG6Lo;
        left = 6;
      }
      --left;
      if ((acc >> left) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Lo));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(kG6Hi));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Lo));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Lo));
    out.push_back(static_cast<char>((n & 0x3f) + kG6Lo));
  } else {
    throw std::invalid_argument("graph6: order beyond supported range");
  }
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + kG6Lo));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + kG6Lo));
  return out;
}

// ---------------------------------------------------------------------------

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("is_connected: empty graph");
  VertexSet seen(n);
  std::vector<int> stack{0};
  seen.set(0);
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    auto r = g.row(v);
    for (std::size_t wi = 0; wi < r.size(); ++wi) {
      std::uint64_t fresh = r[wi] & ~seen.words()[wi];
      while (fresh) {
        int u = static_cast<int>(wi * 64 + std::countr_zero(fresh));
        fresh &= fresh - 1;
        seen.set(u);
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  s.degrees.resize(g.order());
  s.min = g.order() > 0 ? g.order() : 0;
  for (int v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    s.degrees[v] = d;
    s.min = std::min(s.min, d);
    s.max = std::max(s.max, d);
    if (d == 0) ++s.isolated_count;
  }
  if (g.order() == 0) s.min = 0;
  return s;
}

long long edges_within(const Graph& g, const VertexSet& s) {
  long long twice = 0;
  s.for_each([&](int v) {
    auto r = g.row(v);
    auto w = s.words();
    for (std::size_t i = 0; i < r.size() && i < w.size(); ++i)
      twice += std::popcount(r[i] & w[i]);
  });
  return twice / 2;
}

long long edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.intersects(b))
    throw std::invalid_argument("edges_between: sets must be disjoint");
  long long c = 0;
  a.for_each([&](int v) {
    auto r = g.row(v);
    auto w = b.words();
    for (std::size_t i = 0; i < r.size() && i < w.size(); ++i)
      c += std::popcount(r[i] & w[i]);
  });
  return c;
}

}  // namespace spexg
