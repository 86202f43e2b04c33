#ifndef REXCALC_REXGRAPH_HPP
#define REXCALC_REXGRAPH_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rexcalc/symgroup.hpp"

namespace rexcalc {

enum class EdgeKind { Distant, Adjacent };

/// Edge of the expanded expressions graph. Adjacent edges are stored in the
/// Manin-Schechtman direction i(i+1)i -> (i+1)i(i+1), i.e. `move` is an
/// AdjacentUp taking vertex `from` to vertex `to`. Distant edges have from < to.
struct RexEdge {
  int from = 0;
  int to = 0;
  BraidMove move;
  EdgeKind kind = EdgeKind::Distant;
};

/// One step out of a vertex: the neighbor and the move that reaches it.
struct RexStep {
  int neighbor = 0;
  BraidMove move;
  EdgeKind kind = EdgeKind::Distant;
};

/// Rex(w) with distant/adjacent edge classification (the expanded expressions graph).
class RexGraph {
public:
  RexGraph(Permutation element, int rank);

  const Permutation &element() const { return element_; }
  int rank() const { return rank_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<Word> &vertices() const { return vertices_; }
  const Word &word(int v) const { return vertices_.at(v); }
  const std::vector<RexEdge> &edges() const { return edges_; }
  const std::vector<RexStep> &steps(int v) const { return steps_.at(v); }

  std::optional<int> find(const Word &w) const;
  /// Like find but throws InvalidArgument.
  int index_of(const Word &w) const;

  /// Sorted neighbor indices for each vertex.
  std::vector<std::vector<int>> adjacency() const;

  std::size_t count(EdgeKind kind) const;

private:
  Permutation element_;
  int rank_;
  std::vector<Word> vertices_;
  std::vector<RexEdge> edges_;
  std::vector<std::vector<RexStep>> steps_;
};

RexGraph build_rex_graph(const Permutation &p);
/// Rex graph of the element represented by a reduced word (rank defaults to min_rank).
RexGraph build_rex_graph(const Word &w, int rank = 0);

/// Connected component of the distant-edge subgraph.
struct Cloud {
  std::vector<int> members; // rex vertex indices, ascending (= lexicographic)
  int representative = 0;   // lexicographically minimal member
};

std::vector<Cloud> clouds(const RexGraph &g);

/// Oriented edge of the conflated graph together with the rex edge retained for it.
struct ConflatedEdge {
  int from = 0;
  int to = 0;
  int word_from = 0; // rex vertex inside cloud `from`
  int word_to = 0;   // rex vertex inside cloud `to`
  BraidMove move;    // AdjacentUp taking word_from to word_to
};

struct ConflatedStep {
  int neighbor = 0;
  int edge = 0;
  bool forward = true; // along the orientation
};

/// Quotient of Rex(w) by distant edges with the Manin-Schechtman orientation.
class ConflatedGraph {
public:
  explicit ConflatedGraph(std::shared_ptr<const RexGraph> rex);

  const RexGraph &rex() const { return *rex_; }
  std::shared_ptr<const RexGraph> rex_ptr() const { return rex_; }
  int rank() const { return rex_->rank(); }
  std::size_t vertex_count() const { return clouds_.size(); }
  const std::vector<Cloud> &clouds() const { return clouds_; }
  const Cloud &cloud(int v) const { return clouds_.at(v); }
  const Word &representative(int v) const { return rex_->word(clouds_.at(v).representative); }
  const std::vector<ConflatedEdge> &edges() const { return edges_; }
  const std::vector<ConflatedStep> &steps(int v) const { return steps_.at(v); }
  int cloud_of(int rex_vertex) const { return cloud_of_.at(rex_vertex); }
  /// Cloud containing the word; throws InvalidArgument if w is not a vertex.
  int cloud_of_word(const Word &w) const;

  std::optional<ConflatedStep> step_between(int u, int v) const;
  bool is_forward(int u, int v) const;

  std::vector<std::vector<int>> adjacency() const;

  std::vector<int> sources() const;
  std::vector<int> sinks() const;

  std::string label(int v) const;

private:
  std::shared_ptr<const RexGraph> rex_;
  std::vector<Cloud> clouds_;
  std::vector<int> cloud_of_;
  std::vector<ConflatedEdge> edges_;
  std::vector<std::vector<ConflatedStep>> steps_;
};

ConflatedGraph build_conflated(const RexGraph &g);
ConflatedGraph build_conflated(std::shared_ptr<const RexGraph> g);

/// Unique source and sink. Throws NonUniqueSourceSink listing all candidates.
std::pair<int, int> source_sink(const ConflatedGraph &c);

enum class GraphKind { Expanded, Conflated };

/// Vertex sequence in one of the graphs. A sequence of n vertices has length n.
struct Path {
  GraphKind kind = GraphKind::Conflated;
  std::vector<int> vertices;

  std::size_t length() const { return vertices.size(); }
  bool operator==(const Path &) const = default;
};

bool is_valid_path(const RexGraph &g, const Path &p);
bool is_valid_path(const ConflatedGraph &c, const Path &p);

/// Words along an expanded path.
std::vector<Word> path_words(const RexGraph &g, const Path &p);

/// Projection pi: cloud sequence of an expanded path, distant steps omitted.
Path project(const ConflatedGraph &c, const Path &expanded);

/// Shortest distant-only path between two members of one cloud (BFS, neighbors
/// in index order). Throws InvalidArgument if they lie in different clouds.
std::vector<int> distant_path(const RexGraph &g, int from, int to);

/// Lifts a conflated path to the expanded graph, starting at `start_word` (rex
/// index, default: the representative of the first cloud). Before each adjacent
/// move a shortest distant path reaches the word where the retained edge applies.
/// When `end_word` is given the lift finishes with a distant path to it.
Path lift_conflated_path(const ConflatedGraph &c, const Path &p,
                         std::optional<int> start_word = std::nullopt,
                         std::optional<int> end_word = std::nullopt);

/// Calls `visit` for every walk from a to z with at most max_len vertices that
/// visits every vertex, ordered by length and then lexicographically by vertex
/// index. Returning false from `visit` stops the enumeration.
void for_each_complete_path(const std::vector<std::vector<int>> &adjacency, int a, int z,
                            std::size_t max_len,
                            const std::function<bool(const std::vector<int> &)> &visit);
std::vector<Path> enumerate_complete_paths(const ConflatedGraph &c, int a, int z,
                                           std::size_t max_len);
std::vector<Path> enumerate_complete_paths(const RexGraph &g, int a, int z,
                                           std::size_t max_len);

/// Default path length bound 2 * |V| + 4.
std::size_t default_max_len(std::size_t vertex_count);

/// Shortest path following oriented edges forward (reverse = backward) from
/// `from` to `to`, neighbors in index order; nullopt when none exists.
std::optional<Path> oriented_path(const ConflatedGraph &c, int from, int to, bool reverse = false);

/// Every step follows the orientation (or, when reverse, goes against it).
bool is_oriented(const ConflatedGraph &c, const Path &p, bool reverse = false);
bool is_straight(const ConflatedGraph &c, const Path &p);

/// Canonical simplified form of a complete path containing a direct subpath
/// (a straight run between source and sink). Supported for conflated graphs of
/// longest elements and for the three-vertex lines of 23121 and 12312;
/// other graphs raise UnsupportedElement, missing direct subpaths NoDirectSubpath.
Path simplify_path(const ConflatedGraph &c, const Path &p);

std::string to_dot(const RexGraph &g);
std::string to_dot(const ConflatedGraph &c);

} // namespace rexcalc

#endif
