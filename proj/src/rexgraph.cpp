#include "rexcalc/rexgraph.hpp"

#include <algorithm>
#include <bit>
#include <tuple>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace rexcalc {

RexGraph::RexGraph(Permutation element, int rank)
    : element_(std::move(element)), rank_(rank), vertices_(reduced_words(element_)) {
  steps_.resize(vertices_.size());
  for (int v = 0; v < static_cast<int>(vertices_.size()); ++v) {
    for (auto &[move, next] : braid_moves(vertices_[v])) {
      const int u = index_of(next);
      const EdgeKind kind = move.is_distant() ? EdgeKind::Distant : EdgeKind::Adjacent;
      steps_[v].push_back({u, move, kind});
      if (kind == EdgeKind::Distant ? v < u : move.kind == BraidMove::Kind::AdjacentUp)
        edges_.push_back({v, u, move, kind});
    }
    std::sort(steps_[v].begin(), steps_[v].end(),
              [](const RexStep &a, const RexStep &b) { return a.neighbor < b.neighbor; });
  }
  std::sort(edges_.begin(), edges_.end(), [](const RexEdge &a, const RexEdge &b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
}

std::optional<int> RexGraph::find(const Word &w) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), w);
  if (it == vertices_.end() || *it != w) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

int RexGraph::index_of(const Word &w) const {
  auto v = find(w);
  if (!v) throw InvalidArgument(word_to_string(w) + " is not a reduced expression of this element");
  return *v;
}

std::vector<std::vector<int>> RexGraph::adjacency() const {
  std::vector<std::vector<int>> adj(vertices_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    for (const auto &s : steps_[v]) adj[v].push_back(s.neighbor);
  return adj;
}

std::size_t RexGraph::count(EdgeKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [kind](const RexEdge &e) { return e.kind == kind; }));
}

RexGraph build_rex_graph(const Permutation &p) { return RexGraph(p, p.rank()); }

RexGraph build_rex_graph(const Word &w, int rank) {
  if (rank == 0) rank = min_rank(w);
  if (!is_reduced(w, rank)) throw InvalidArgument(word_to_string(w) + " is not reduced");
  return RexGraph(word_to_perm(w, rank), rank);
}

std::vector<Cloud> clouds(const RexGraph &g) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<int> comp(n, -1);
  std::vector<Cloud> out;
  for (int v = 0; v < n; ++v) {
    if (comp[v] != -1) continue;
    Cloud cl;
    std::deque<int> queue{v};
    comp[v] = static_cast<int>(out.size());
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      cl.members.push_back(u);
      for (const auto &s : g.steps(u))
        if (s.kind == EdgeKind::Distant && comp[s.neighbor] == -1) {
          comp[s.neighbor] = comp[v];
          queue.push_back(s.neighbor);
        }
    }
    std::sort(cl.members.begin(), cl.members.end());
    cl.representative = cl.members.front();
    out.push_back(std::move(cl));
  }
  // Vertices are visited in lexicographic order, so clouds are already sorted by representative.
  return out;
}

ConflatedGraph::ConflatedGraph(std::shared_ptr<const RexGraph> rex)
    : rex_(std::move(rex)), clouds_(rexcalc::clouds(*rex_)) {
  cloud_of_.assign(rex_->vertex_count(), -1);
  for (int c = 0; c < static_cast<int>(clouds_.size()); ++c)
    for (int m : clouds_[c].members) cloud_of_[m] = c;

  // Retain, per cloud pair, the projected edge with the least (source, target) word pair.
  std::map<std::pair<int, int>, ConflatedEdge> kept;
  for (const auto &e : rex_->edges()) {
    if (e.kind != EdgeKind::Adjacent) continue;
    const int a = cloud_of_[e.from], b = cloud_of_[e.to];
    auto it = kept.find({a, b});
    const bool better = it == kept.end() ||
                        std::tie(rex_->word(e.from), rex_->word(e.to)) <
                            std::tie(rex_->word(it->second.word_from), rex_->word(it->second.word_to));
    if (better) kept[{a, b}] = ConflatedEdge{a, b, e.from, e.to, e.move};
  }
  steps_.resize(clouds_.size());
  for (auto &[key, edge] : kept) {
    const int idx = static_cast<int>(edges_.size());
    edges_.push_back(edge);
    steps_[edge.from].push_back({edge.to, idx, true});
    steps_[edge.to].push_back({edge.from, idx, false});
  }
  for (auto &s : steps_)
    std::sort(s.begin(), s.end(),
              [](const ConflatedStep &a, const ConflatedStep &b) { return a.neighbor < b.neighbor; });
}

int ConflatedGraph::cloud_of_word(const Word &w) const { return cloud_of_.at(rex_->index_of(w)); }

std::optional<ConflatedStep> ConflatedGraph::step_between(int u, int v) const {
  for (const auto &s : steps_.at(u))
    if (s.neighbor == v) return s;
  return std::nullopt;
}

bool ConflatedGraph::is_forward(int u, int v) const {
  auto s = step_between(u, v);
  return s && s->forward;
}

std::vector<std::vector<int>> ConflatedGraph::adjacency() const {
  std::vector<std::vector<int>> adj(clouds_.size());
  for (std::size_t v = 0; v < clouds_.size(); ++v)
    for (const auto &s : steps_[v]) adj[v].push_back(s.neighbor);
  return adj;
}

std::vector<int> ConflatedGraph::sources() const {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(clouds_.size()); ++v)
    if (std::none_of(steps_[v].begin(), steps_[v].end(), [](const ConflatedStep &s) { return !s.forward; }))
      out.push_back(v);
  return out;
}

std::vector<int> ConflatedGraph::sinks() const {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(clouds_.size()); ++v)
    if (std::none_of(steps_[v].begin(), steps_[v].end(), [](const ConflatedStep &s) { return s.forward; }))
      out.push_back(v);
  return out;
}

std::string ConflatedGraph::label(int v) const { return word_to_string(representative(v)); }

ConflatedGraph build_conflated(const RexGraph &g) {
  return ConflatedGraph(std::make_shared<const RexGraph>(g));
}

ConflatedGraph build_conflated(std::shared_ptr<const RexGraph> g) { return ConflatedGraph(std::move(g)); }

std::pair<int, int> source_sink(const ConflatedGraph &c) {
  const auto src = c.sources();
  const auto snk = c.sinks();
  if (src.size() != 1 || snk.size() != 1) {
    std::ostringstream os;
    os << "expected a unique source and sink; sources:";
    for (int v : src) os << ' ' << c.label(v);
    os << "; sinks:";
    for (int v : snk) os << ' ' << c.label(v);
    throw NonUniqueSourceSink(os.str());
  }
  return {src.front(), snk.front()};
}

bool is_valid_path(const RexGraph &g, const Path &p) {
  if (p.kind != GraphKind::Expanded || p.vertices.empty()) return false;
  for (int v : p.vertices)
    if (v < 0 || v >= static_cast<int>(g.vertex_count())) return false;
  for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) {
    const auto &st = g.steps(p.vertices[k]);
    if (std::none_of(st.begin(), st.end(), [&](const RexStep &s) { return s.neighbor == p.vertices[k + 1]; }))
      return false;
  }
  return true;
}

bool is_valid_path(const ConflatedGraph &c, const Path &p) {
  if (p.kind != GraphKind::Conflated || p.vertices.empty()) return false;
  for (int v : p.vertices)
    if (v < 0 || v >= static_cast<int>(c.vertex_count())) return false;
  for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k)
    if (!c.step_between(p.vertices[k], p.vertices[k + 1])) return false;
  return true;
}

std::vector<Word> path_words(const RexGraph &g, const Path &p) {
  std::vector<Word> out;
  for (int v : p.vertices) out.push_back(g.word(v));
  return out;
}

Path project(const ConflatedGraph &c, const Path &expanded) {
  Path out{GraphKind::Conflated, {}};
  for (int v : expanded.vertices) {
    const int cl = c.cloud_of(v);
    if (out.vertices.empty() || out.vertices.back() != cl) out.vertices.push_back(cl);
  }
  return out;
}

std::vector<int> distant_path(const RexGraph &g, int from, int to) {
  std::vector<int> parent(g.vertex_count(), -1);
  std::deque<int> queue{from};
  parent[from] = from;
  while (!queue.empty() && parent[to] == -1) {
    const int u = queue.front();
    queue.pop_front();
    for (const auto &s : g.steps(u))
      if (s.kind == EdgeKind::Distant && parent[s.neighbor] == -1) {
        parent[s.neighbor] = u;
        queue.push_back(s.neighbor);
      }
  }
  if (parent[to] == -1)
    throw InvalidArgument(word_to_string(g.word(from)) + " and " + word_to_string(g.word(to)) +
                          " are not in the same cloud");
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

Path lift_conflated_path(const ConflatedGraph &c, const Path &p, std::optional<int> start_word,
                         std::optional<int> end_word) {
  if (!is_valid_path(c, p)) throw InvalidArgument("lift_conflated_path: invalid conflated path");
  const RexGraph &g = c.rex();
  int cur = start_word.value_or(c.cloud(p.vertices.front()).representative);
  if (c.cloud_of(cur) != p.vertices.front())
    throw InvalidArgument("lift_conflated_path: start word is not in the first cloud");
  Path out{GraphKind::Expanded, {cur}};
  auto walk_to = [&](int target) {
    const auto hop = distant_path(g, cur, target);
    out.vertices.insert(out.vertices.end(), hop.begin() + 1, hop.end());
    cur = target;
  };
  for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) {
    const auto step = *c.step_between(p.vertices[k], p.vertices[k + 1]);
    const ConflatedEdge &e = c.edges()[step.edge];
    const int enter = step.forward ? e.word_from : e.word_to;
    const int leave = step.forward ? e.word_to : e.word_from;
    walk_to(enter);
    out.vertices.push_back(leave);
    cur = leave;
  }
  if (end_word) {
    if (c.cloud_of(*end_word) != p.vertices.back())
      throw InvalidArgument("lift_conflated_path: end word is not in the last cloud");
    walk_to(*end_word);
  }
  return out;
}

void for_each_complete_path(const std::vector<std::vector<int>> &adjacency, int a, int z,
                            std::size_t max_len,
                            const std::function<bool(const std::vector<int> &)> &visit) {
  const std::size_t n = adjacency.size();
  if (n > 64) throw InvalidArgument("for_each_complete_path supports at most 64 vertices");
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<int> walk;
  bool stop = false;
  // Iterative deepening gives length-then-lexicographic order.
  for (std::size_t len = 1; len <= max_len && !stop; ++len) {
    std::function<void(std::uint64_t)> dfs = [&](std::uint64_t seen) {
      if (stop) return;
      const std::size_t remaining = len - walk.size();
      if (static_cast<std::size_t>(std::popcount(all & ~seen)) > remaining) return;
      if (remaining == 0) {
        if (walk.back() == z && seen == all && !visit(walk)) stop = true;
        return;
      }
      for (int next : adjacency[walk.back()]) {
        walk.push_back(next);
        dfs(seen | (std::uint64_t{1} << next));
        walk.pop_back();
        if (stop) return;
      }
    };
    walk.assign(1, a);
    dfs(std::uint64_t{1} << a);
  }
}

std::vector<Path> enumerate_complete_paths(const ConflatedGraph &c, int a, int z, std::size_t max_len) {
  std::vector<Path> out;
  for_each_complete_path(c.adjacency(), a, z, max_len, [&](const std::vector<int> &w) {
    out.push_back({GraphKind::Conflated, w});
    return true;
  });
  return out;
}

std::vector<Path> enumerate_complete_paths(const RexGraph &g, int a, int z, std::size_t max_len) {
  std::vector<Path> out;
  for_each_complete_path(g.adjacency(), a, z, max_len, [&](const std::vector<int> &w) {
    out.push_back({GraphKind::Expanded, w});
    return true;
  });
  return out;
}

std::size_t default_max_len(std::size_t vertex_count) { return 2 * vertex_count + 4; }

std::optional<Path> oriented_path(const ConflatedGraph &c, int from, int to, bool reverse) {
  std::vector<int> parent(c.vertex_count(), -1);
  std::deque<int> queue{from};
  parent[from] = from;
  while (!queue.empty() && parent[to] == -1) {
    const int u = queue.front();
    queue.pop_front();
    for (const auto &s : c.steps(u))
      if (s.forward != reverse && parent[s.neighbor] == -1) {
        parent[s.neighbor] = u;
        queue.push_back(s.neighbor);
      }
  }
  if (parent[to] == -1) return std::nullopt;
  Path p{GraphKind::Conflated, {to}};
  while (p.vertices.back() != from) p.vertices.push_back(parent[p.vertices.back()]);
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

bool is_oriented(const ConflatedGraph &c, const Path &p, bool reverse) {
  for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) {
    auto s = c.step_between(p.vertices[k], p.vertices[k + 1]);
    if (!s || s->forward == reverse) return false;
  }
  return true;
}

bool is_straight(const ConflatedGraph &c, const Path &p) {
  return is_oriented(c, p, false) || is_oriented(c, p, true);
}

namespace {

/// Number of maximal straight runs in a vertex sequence (0 for a single vertex).
int straight_runs(const ConflatedGraph &c, std::vector<int>::const_iterator first,
                  std::vector<int>::const_iterator last) {
  int runs = 0;
  std::optional<bool> dir;
  for (auto it = first; it + 1 < last; ++it) {
    const bool fwd = c.is_forward(*it, *(it + 1));
    if (!dir || *dir != fwd) ++runs;
    dir = fwd;
  }
  return runs;
}

enum class SimplifyMode { LongestElement, ThreeLine };

SimplifyMode simplify_mode(const ConflatedGraph &c) {
  const RexGraph &g = c.rex();
  const int m = min_rank(g.vertices().front());
  const int rank = g.rank();
  if (m >= 2 && g.element() == word_to_perm(longest_element(m), rank)) return SimplifyMode::LongestElement;
  if (rank >= 4 && (g.element() == word_to_perm({2, 3, 1, 2, 1}, rank) ||
                    g.element() == word_to_perm({1, 2, 3, 1, 2}, rank)))
    return SimplifyMode::ThreeLine;
  throw UnsupportedElement("simplified paths are only defined for longest elements and 23121/12312");
}

} // namespace

Path simplify_path(const ConflatedGraph &c, const Path &p) {
  if (!is_valid_path(c, p)) throw InvalidArgument("simplify_path: invalid conflated path");
  const auto [s, t] = source_sink(c);
  const auto &v = p.vertices;
  // A lone direct run is already simplified, whatever the element.
  if (s != t && is_straight(c, p) &&
      ((v.front() == s && v.back() == t) || (v.front() == t && v.back() == s)))
    return p;
  const SimplifyMode mode = simplify_mode(c);
  auto other = [s = s, t = t](int x) { return x == s ? t : s; };

  if (s == t) return Path{GraphKind::Conflated, {v.front()}};

  // First direct subpath d = v[i..j].
  std::optional<std::pair<std::size_t, std::size_t>> direct;
  for (std::size_t i = 0; i < v.size() && !direct; ++i) {
    if (v[i] != s && v[i] != t) continue;
    const bool forward = v[i] == s;
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (c.is_forward(v[j - 1], v[j]) != forward) break;
      if (v[j] == other(v[i])) {
        direct = {i, j};
        break;
      }
    }
  }
  if (!direct) throw NoDirectSubpath("path has no direct subpath between source and sink");
  const auto [i, j] = *direct;

  const int alpha_runs = straight_runs(c, v.begin(), v.begin() + static_cast<long>(i) + 1);
  const int beta_runs = straight_runs(c, v.begin() + static_cast<long>(j), v.end());
  const int d_start = v[i];
  const int first = alpha_runs == 0 || alpha_runs % 2 == 1 ? d_start : other(d_start);
  const int directs = std::max(alpha_runs - 1, 0) + 1 + std::max(beta_runs - 1, 0);

  // Turning points among s/t; consecutive entries are joined by a direct run.
  std::vector<int> turns{first};
  for (int k = 0; k < directs; ++k) turns.push_back(other(turns.back()));
  // A run in from the other end point, or out to it, is a direct traversal too.
  const auto is_end = [s = s, t = t](int x) { return x == s || x == t; };
  if (is_end(v.front()) && v.front() != turns.front()) turns.insert(turns.begin(), v.front());
  if (is_end(v.back()) && v.back() != turns.back()) turns.push_back(v.back());
  // Z o Zbar o Z = Z and its mirror.
  while (turns.size() >= 4) turns.erase(turns.begin() + 1, turns.begin() + 3);

  if (mode == SimplifyMode::ThreeLine && turns.size() == 3) {
    if (!is_end(v.back())) turns.pop_back();
    else if (!is_end(v.front())) turns.erase(turns.begin());
  }

  Path out{GraphKind::Conflated, {v.front()}};
  auto append = [&](int from, int to, bool reverse) {
    if (from == to) return;
    auto seg = oriented_path(c, from, to, reverse);
    if (!seg) throw InternalError("simplify_path: missing straight path");
    out.vertices.insert(out.vertices.end(), seg->vertices.begin() + 1, seg->vertices.end());
  };
  // Straight run into the first of s/t: reverse-oriented into s, oriented into t.
  append(v.front(), turns.front(), turns.front() == s);
  for (std::size_t k = 0; k + 1 < turns.size(); ++k) append(turns[k], turns[k + 1], turns[k] == t);
  // Out of s along the orientation, out of t against it.
  append(turns.back(), v.back(), turns.back() == t);
  return out;
}

std::string to_dot(const RexGraph &g) {
  std::ostringstream os;
  os << "graph rex {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    os << "  \"" << word_to_string(g.word(static_cast<int>(v))) << "\";\n";
  for (const auto &e : g.edges()) {
    os << "  \"" << word_to_string(g.word(e.from)) << "\" -- \"" << word_to_string(g.word(e.to)) << "\"";
    if (e.kind == EdgeKind::Distant) os << " [style=dashed]";
    else os << " [style=solid, dir=forward]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const ConflatedGraph &c) {
  std::ostringstream os;
  os << "digraph conflated {\n";
  for (std::size_t v = 0; v < c.vertex_count(); ++v) {
    const auto &cl = c.cloud(static_cast<int>(v));
    os << "  \"" << c.label(static_cast<int>(v)) << "\" [label=\"";
    for (std::size_t k = 0; k < cl.members.size(); ++k)
      os << (k ? "," : "") << word_to_string(c.rex().word(cl.members[k]));
    os << "\"];\n";
  }
  for (const auto &e : c.edges())
    os << "  \"" << c.label(e.from) << "\" -> \"" << c.label(e.to) << "\" [style=solid];\n";
  os << "}\n";
  return os.str();
}

} // namespace rexcalc
