#ifndef SPEXG_GRAPH_HPP
#define SPEXG_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spexg {

/// Default order cap for graphs crossing the process boundary (one machine
/// word per adjacency row). Constructors may exceed it explicitly; rows then
/// spill into multiple words.
inline constexpr int kDefaultOrderCap = 64;

/// Set of vertex indices backed by a bit vector.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int capacity)
      : cap_(capacity), w_((capacity + 63) / 64, 0) {
    if (capacity < 0) throw std::invalid_argument("VertexSet: negative capacity");
  }

  int capacity() const { return cap_; }

  bool test(int v) const {
    return v >= 0 && v < cap_ && (w_[v >> 6] >> (v & 63)) & 1u;
  }
  void set(int v, bool on = true) {
    check(v);
    if (on)
      w_[v >> 6] |= std::uint64_t{1} << (v & 63);
    else
      w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  int count() const;
  bool empty() const { return count() == 0; }
  bool intersects(const VertexSet& o) const;
  bool contains(const VertexSet& o) const;  // o subset of *this

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& o) const = default;

  std::vector<int> to_vector() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t bits = w_[wi];
      while (bits) {
        int b = std::countr_zero(bits);
        f(static_cast<int>(wi * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const { return w_; }
  std::span<std::uint64_t> words() { return w_; }

 private:
  void check(int v) const {
    if (v < 0 || v >= cap_) throw std::out_of_range("VertexSet: vertex out of range");
  }
  friend class Graph;
  int cap_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Dense undirected simple graph. Adjacency rows are fixed-width bit
/// vectors; the edge count is cached and kept consistent by the mutators.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  long long size() const { return m_; }
  int words_per_row() const { return words_; }

  bool has_edge(int i, int j) const {
    check(i);
    check(j);
    return (bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1u;
  }
  void add_edge(int i, int j);
  void remove_edge(int i, int j);

  int degree(int v) const;
  VertexSet neighbors(int v) const;
  VertexSet all_vertices() const;

  std::span<const std::uint64_t> row(int i) const {
    check(i);
    return {bits_.data() + static_cast<std::size_t>(i) * words_,
            static_cast<std::size_t>(words_)};
  }
  /// First word of row i; the whole row when order() <= 64.
  std::uint64_t row64(int i) const {
    check(i);
    return bits_[static_cast<std::size_t>(i) * words_];
  }

  bool operator==(const Graph& o) const = default;

  /// Symmetry, loop-freeness and the cached edge count; cheap enough to call
  /// from tests on every constructed graph.
  bool check_invariants() const;

 private:
  void check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
  }
  int n_ = 0;
  int words_ = 1;
  long long m_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// graph6 parse failures, one kind per failure mode.
enum class Graph6Error {
  bad_header,
  bad_character,
  truncated_body,
  trailing_bytes,
  order_exceeds_cap,
};

class Graph6ParseError : public std::runtime_error {
 public:
  Graph6ParseError(Graph6Error kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Graph6Error kind() const { return kind_; }

 private:
  Graph6Error kind_;
};

/// Decode a header-less graph6 string. `cap` bounds the accepted order;
/// callers that build large named families raise it explicitly.
Graph from_graph6(std::string_view text, int cap = kDefaultOrderCap);

/// Encode the labeled adjacency as graph6 (no relabeling).
std::string to_graph6(const Graph& g);

/// True iff a traversal from vertex 0 reaches all vertices. The empty graph
/// has no connectivity notion and is rejected.
bool is_connected(const Graph& g);

struct DegreeStats {
  std::vector<int> degrees;
  int min = 0;
  int max = 0;
  int isolated_count = 0;
};

DegreeStats degree_stats(const Graph& g);

/// Relabeling of g that is identical for all isomorphic inputs.
/// Color refinement with backtracking over ties; requires order() <= 64.
Graph canonical_form(const Graph& g);

/// Canonical form plus the labeling that produced it (new index of old vertex v
/// is labeling[v]).
struct CanonicalResult {
  Graph graph;
  std::vector<int> labeling;
};
CanonicalResult canonical_form_labeled(const Graph& g);

long long edges_within(const Graph& g, const VertexSet& s);
long long edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);

}  // namespace spexg

#endif  // SPEXG_GRAPH_HPP
