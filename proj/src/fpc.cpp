#include "rexcalc/fpc.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <unordered_map>
#include <unordered_set>

namespace rexcalc {

std::size_t default_budget() {
  const char *env = std::getenv("REXCALC_BUDGET");
  if (!env || !*env) return kDefaultBudget;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size() || v == 0) throw InvalidArgument("");
    return static_cast<std::size_t>(v);
  } catch (const std::exception &) {
    throw InvalidArgument(std::string("REXCALC_BUDGET must be a positive integer, got '") + env + "'");
  }
}

MorphismMatrix conflated_path_morphism(const ConflatedGraph &c, const Path &p) {
  const int last = c.cloud(p.vertices.back()).representative;
  const Path lift = lift_conflated_path(c, p, std::nullopt, last);
  return path_morphism(path_words(c.rex(), lift), c.rank());
}

BSElement apply_conflated_path(const ConflatedGraph &c, const Path &p, const BSElement &e) {
  const int last = c.cloud(p.vertices.back()).representative;
  const Path lift = lift_conflated_path(c, p, std::nullopt, last);
  return apply_path(path_words(c.rex(), lift), e);
}

int resolve_vertex(const ConflatedGraph &c, const std::string &name) {
  if (name == "s" || name == "t" || name == "c") {
    const auto [s, t] = source_sink(c);
    if (name == "s") return s;
    if (name == "t") return t;
    if (c.vertex_count() != 3 || s == t)
      throw InvalidArgument("'c' needs a graph with exactly one vertex besides source and sink");
    return 3 - s - t;
  }
  if (!name.empty() && name[0] == '#') {
    int k = -1;
    try {
      k = std::stoi(name.substr(1));
    } catch (const std::exception &) {
    }
    if (k < 0 || k >= static_cast<int>(c.vertex_count()))
      throw InvalidArgument("vertex index out of range: " + name);
    return k;
  }
  return c.cloud_of_word(parse_word(name));
}

Path conflated_path(const ConflatedGraph &c, const std::vector<std::string> &names) {
  Path p{GraphKind::Conflated, {}};
  for (const auto &n : names) p.vertices.push_back(resolve_vertex(c, n));
  if (!is_valid_path(c, p)) throw InvalidArgument("not a path in the conflated graph");
  return p;
}

namespace {

// Interned path matrices with memoized one-step extensions.
class MatrixPool {
public:
  MatrixPool(const ConflatedGraph &c, std::size_t budget) : c_(c), budget_(budget) {}

  int intern(MorphismMatrix m) {
    const std::size_t h = m.hash();
    auto range = by_hash_.equal_range(h);
    for (auto it = range.first; it != range.second; ++it)
      if (mats_[it->second] == m) return it->second;
    if (mats_.size() >= budget_)
      throw BudgetExceeded("more than " + std::to_string(budget_) + " distinct path morphisms");
    mats_.push_back(std::move(m));
    const int id = static_cast<int>(mats_.size()) - 1;
    by_hash_.emplace(h, id);
    return id;
  }

  int identity(int v) { return intern(MorphismMatrix::identity(c_.representative(v), c_.rank())); }

  /// Matrix of (path so far) followed by the step v -> u.
  int extend(int id, int v, int u) {
    const auto key = (static_cast<std::uint64_t>(id) << 16) | (static_cast<std::uint64_t>(v) << 8) |
                     static_cast<std::uint64_t>(u);
    auto it = steps_.find(key);
    if (it != steps_.end()) return it->second;
    const int r = intern(compose(edge(v, u), mats_[id]));
    steps_.emplace(key, r);
    return r;
  }

  const MorphismMatrix &matrix(int id) const { return mats_[id]; }
  std::size_t size() const { return mats_.size(); }

private:
  const MorphismMatrix &edge(int v, int u) {
    const auto key = std::make_pair(v, u);
    auto it = edges_.find(key);
    if (it == edges_.end())
      it = edges_.emplace(key, conflated_path_morphism(c_, Path{GraphKind::Conflated, {v, u}})).first;
    return it->second;
  }

  const ConflatedGraph &c_;
  std::size_t budget_;
  std::vector<MorphismMatrix> mats_;
  std::unordered_multimap<std::size_t, int> by_hash_;
  std::unordered_map<std::uint64_t, int> steps_;
  std::map<std::pair<int, int>, MorphismMatrix> edges_;
};

struct SearchNode {
  int vertex;
  std::uint64_t tag;
  int matrix;
  int parent;
};

struct NodeKey {
  int vertex;
  std::uint64_t tag;
  int matrix;
  bool operator==(const NodeKey &) const = default;
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey &k) const {
    return (static_cast<std::size_t>(k.matrix) * 1000003u) ^ (k.tag * 0x9e3779b97f4a7c15ULL) ^
           static_cast<std::size_t>(k.vertex);
  }
};

// Per end vertex: distinct matrices in discovery order with the node that found each.
using Group = std::vector<std::pair<int, int>>;

struct SearchSpec {
  std::function<std::uint64_t(int)> initial;
  std::function<std::uint64_t(std::uint64_t, int)> visit;
  std::function<bool(std::uint64_t)> accept;
  // Lower bound on the further vertices needed before acceptance.
  std::function<std::size_t(std::uint64_t)> missing;
};

// Breadth-first search over (vertex, tag, matrix) from one start. Node order is
// length first, then lexicographic in vertex indices.
std::map<int, Group> search_from(const ConflatedGraph &c, MatrixPool &pool, int start, std::size_t max_len,
                                 const SearchSpec &spec, std::vector<SearchNode> &nodes) {
  std::map<int, Group> groups;
  std::unordered_set<NodeKey, NodeKeyHash> seen;
  std::vector<int> frontier;
  const SearchNode root{start, spec.initial(start), pool.identity(start), -1};
  nodes.push_back(root);
  seen.insert({root.vertex, root.tag, root.matrix});
  frontier.push_back(static_cast<int>(nodes.size()) - 1);
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<int> next;
    for (int idx : frontier) {
      const SearchNode node = nodes[idx];
      if (spec.accept(node.tag)) {
        auto &g = groups[node.vertex];
        if (std::none_of(g.begin(), g.end(), [&](const auto &e) { return e.first == node.matrix; }))
          g.emplace_back(node.matrix, idx);
      }
      if (len == max_len) continue;
      for (const auto &step : c.steps(node.vertex)) {
        const std::uint64_t tag = spec.visit(node.tag, step.neighbor);
        if (spec.missing(tag) > max_len - len - 1) continue;
        const int m = pool.extend(node.matrix, node.vertex, step.neighbor);
        if (!seen.insert({step.neighbor, tag, m}).second) continue;
        nodes.push_back({step.neighbor, tag, m, idx});
        next.push_back(static_cast<int>(nodes.size()) - 1);
      }
    }
    frontier = std::move(next);
  }
  return groups;
}

Path node_path(const std::vector<SearchNode> &nodes, int idx) {
  Path p{GraphKind::Conflated, {}};
  for (int k = idx; k != -1; k = nodes[k].parent) p.vertices.push_back(nodes[k].vertex);
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

FpcVerdict run_search(const ConflatedGraph &c, const Word &element, std::size_t max_len,
                      std::optional<std::pair<int, int>> endpoints, std::size_t budget, const SearchSpec &spec) {
  FpcVerdict verdict{element, max_len, true, std::nullopt, 0, 0};
  MatrixPool pool(c, budget);
  const int nv = static_cast<int>(c.vertex_count());
  for (int a = 0; a < nv && verdict.holds; ++a) {
    if (endpoints && endpoints->first != a) continue;
    std::vector<SearchNode> nodes;
    auto groups = search_from(c, pool, a, max_len, spec, nodes);
    verdict.states += nodes.size();
    for (auto &[z, g] : groups) {
      if (endpoints && endpoints->second != z) continue;
      if (g.size() < 2) continue;
      const auto &mp = pool.matrix(g[0].first);
      const auto &mq = pool.matrix(g[1].first);
      const Mask col = *first_difference(mp, mq);
      verdict.holds = false;
      verdict.counterexample = FpcWitness{node_path(nodes, g[0].second), node_path(nodes, g[1].second), col,
                                          BSElement::basis(mp.domain(), c.rank(), col), mp.column(col),
                                          mq.column(col)};
      break;
    }
  }
  verdict.morphisms = pool.size();
  return verdict;
}

int element_rank(const Word &w) { return std::max(2, min_rank(w)); }

} // namespace

FpcVerdict check_fpc(const Word &w, std::size_t max_len, std::optional<std::pair<int, int>> endpoints,
                     std::size_t budget) {
  const ConflatedGraph c = build_conflated(build_rex_graph(w, element_rank(w)));
  const std::size_t nv = c.vertex_count();
  if (nv > 64) throw InvalidArgument("check_fpc supports at most 64 conflated vertices");
  if (max_len < nv) throw InvalidArgument("maxLen must be at least the number of conflated vertices");
  if (endpoints && (endpoints->first < 0 || endpoints->second < 0 || endpoints->first >= static_cast<int>(nv) ||
                    endpoints->second >= static_cast<int>(nv)))
    throw InvalidArgument("endpoint out of range");
  const std::uint64_t all = nv == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nv) - 1;
  SearchSpec spec{
      [](int v) { return std::uint64_t{1} << v; },
      [](std::uint64_t tag, int v) { return tag | (std::uint64_t{1} << v); },
      [all](std::uint64_t tag) { return tag == all; },
      [all](std::uint64_t tag) { return static_cast<std::size_t>(std::popcount(all & ~tag)); },
  };
  return run_search(c, w, max_len, endpoints, budget, spec);
}

FpcVerdict check_refined_conjecture(int n, std::size_t max_len, std::size_t budget) {
  if (n < 2 || n > 4) throw InvalidArgument("check_refined_conjecture: rank must be in 2..4");
  const Word w0 = longest_element(n);
  const ConflatedGraph c = build_conflated(build_rex_graph(w0, n));
  const auto [s, t] = source_sink(c);
  auto mark = [s = s, t = t](std::uint64_t tag, int v) {
    return tag | (v == s ? 1u : 0u) | (v == t ? 2u : 0u);
  };
  SearchSpec spec{
      [mark](int v) { return mark(0, v); },
      mark,
      [](std::uint64_t tag) { return tag == 3; },
      [](std::uint64_t tag) { return static_cast<std::size_t>(std::popcount(3u & ~tag)); },
  };
  return run_search(c, w0, max_len, std::nullopt, budget, spec);
}

CounterexampleReport reproduce_counterexample() {
  constexpr int rank = 4;
  auto words = [](std::initializer_list<const char *> list) {
    std::vector<Word> out;
    for (const char *s : list) out.push_back(parse_word(s));
    return out;
  };
  const auto v1 = words({"13231", "31231", "31213", "32123", "31213", "13213", "13231", "12321", "13231"});
  const auto v2 = words({"13231", "12321", "13231", "31231", "31213", "32123", "31213", "13213", "13231"});
  std::vector<Polynomial> slots(6, Polynomial::one(rank));
  slots[3] = Polynomial::variable(rank, 3);
  const BSElement x = from_tensor(parse_word("13231"), rank, slots);

  auto reversed = [](std::vector<Word> p) {
    std::reverse(p.begin(), p.end());
    return p;
  };
  const BSElement i1 = apply_path(v1, x);
  const BSElement i2 = apply_path(v2, x);
  return CounterexampleReport{
      v1,
      v2,
      x,
      i1,
      i2,
      apply_path(reversed(v1), x),
      apply_path(reversed(v2), x),
      matrices_equal(path_morphism(v1, rank), path_morphism(v2, rank)),
      dot_cap(dot_cap(i1, 4), 0),
      dot_cap(dot_cap(i2, 4), 0),
  };
}

namespace {

ConflatedGraph longest_graph(int n) { return build_conflated(build_rex_graph(longest_element(n), n)); }

MorphismMatrix straight_matrix(const ConflatedGraph &c, int from, int to, bool reverse) {
  auto p = oriented_path(c, from, to, reverse);
  if (!p) throw InternalError("no oriented path between the requested vertices");
  return conflated_path_morphism(c, *p);
}

} // namespace

ZamReport check_zam_identities(int n) {
  if (n < 3 || n > 4) throw InvalidArgument("check_zam_identities: rank must be 3 or 4");
  const ConflatedGraph c = longest_graph(n);
  const auto [s, t] = source_sink(c);
  MorphismMatrix z = straight_matrix(c, s, t, false);
  MorphismMatrix zbar = straight_matrix(c, t, s, true);
  const MorphismMatrix zbar_z = compose(zbar, z);
  const MorphismMatrix z_zbar = compose(z, zbar);
  ZamReport r{n, z, zbar};
  r.zzbarz = compose(z, zbar_z) == z;
  r.zbarzzbar = compose(zbar, z_zbar) == zbar;
  r.idempotent = compose(zbar_z, zbar_z) == zbar_z;
  r.proper = !(zbar_z == MorphismMatrix::identity(c.representative(s), n));
  return r;
}

DudUdu::DudUdu(int n) : graph_(longest_graph(n)) {
  if (n < 2 || n > 4) throw InvalidArgument("DUD/UDU checks need rank 2..4");
  std::tie(s_, t_) = source_sink(graph_);
}

const MorphismMatrix &DudUdu::straight(int from, int to, bool reverse) {
  const auto key = std::make_tuple(from, to, reverse);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, straight_matrix(graph_, from, to, reverse)).first;
  return it->second;
}

// DUD_{x,y}: x down to the sink, up to the source, down to y.
MorphismMatrix DudUdu::dud(int x, int y) {
  return compose(straight(s_, y, false), compose(straight(t_, s_, true), straight(x, t_, false)));
}

// UDU_{x,y}: x up to the source, down to the sink, up to y.
MorphismMatrix DudUdu::udu(int x, int y) {
  return compose(straight(t_, y, true), compose(straight(s_, t_, false), straight(x, s_, true)));
}

bool check_dud_udu(int n, int x, int y) {
  DudUdu d(n);
  const int nv = static_cast<int>(d.graph().vertex_count());
  if (x < 0 || y < 0 || x >= nv || y >= nv) throw InvalidArgument("vertex out of range");
  return d.dud(x, y) == d.udu(x, y);
}

DudUduReport check_dud_udu_all(int n) {
  DudUdu d(n);
  DudUduReport r{n, 0, {}, false, false};
  const int nv = static_cast<int>(d.graph().vertex_count());
  for (int x = 0; x < nv; ++x)
    for (int y = 0; y < nv; ++y) {
      ++r.pairs;
      if (!(d.dud(x, y) == d.udu(x, y))) r.failures.emplace_back(x, y);
    }
  const int s = d.source(), t = d.sink();
  r.dud_ts_is_zbar = d.dud(t, s) == straight_matrix(d.graph(), t, s, true);
  r.udu_st_is_z = d.udu(s, t) == straight_matrix(d.graph(), s, t, false);
  return r;
}

std::vector<Equivalence> check_equivalence_lemmas() {
  std::vector<Equivalence> out;
  auto add = [&](const ConflatedGraph &c, const std::string &name, const std::vector<std::string> &lhs,
                 const std::vector<std::string> &rhs, bool expected) {
    Equivalence e{name, c.rex().vertices().front(), conflated_path(c, lhs), conflated_path(c, rhs), expected, false};
    e.element = c.representative(e.lhs.vertices.front());
    e.equal = conflated_path_morphism(c, e.lhs) == conflated_path_morphism(c, e.rhs);
    out.push_back(std::move(e));
  };

  const ConflatedGraph zam = longest_graph(4);
  const std::string A = "212321", B = "213231", C = "232123";
  add(zam, "[A,B,A,B] ~ [A,B]", {A, B, A, B}, {A, B}, true);
  add(zam, "[B,A,B,A] ~ [B,A]", {B, A, B, A}, {B, A}, true);
  add(zam, "[B,C] ~ [B,C,B,C]", {B, C}, {B, C, B, C}, true);
  add(zam, "[A,B,C,B,A,B,C] ~ [A,B,C]", {A, B, C, B, A, B, C}, {A, B, C}, true);

  for (const char *word : {"23121", "12312"}) {
    const ConflatedGraph c = build_conflated(build_rex_graph(parse_word(word), 4));
    const std::string tag = std::string(" on ") + word;
    add(c, "P1 ~ P2" + tag, {"s", "c", "t", "c"}, {"s", "c", "t", "c", "s", "c"}, true);
    add(c, "Q1 ~ Q2" + tag, {"c", "s", "c", "t", "c"}, {"c", "t", "c", "s", "c"}, true);
    add(c, "Q3 ~ Q1" + tag, {"c", "s", "c", "t", "c", "s", "c"}, {"c", "s", "c", "t", "c"}, true);
    add(c, "Q4 ~ Q2" + tag, {"c", "t", "c", "s", "c", "t", "c"}, {"c", "t", "c", "s", "c"}, true);
  }
  return out;
}

std::string to_string(GraphShape s) {
  switch (s) {
  case GraphShape::Point: return "•";
  case GraphShape::Edge: return "•→•";
  case GraphShape::Line3: return "•→•→•";
  case GraphShape::Zam: return "Zam";
  case GraphShape::Other: break;
  }
  return "other";
}

GraphShape classify_shape(const ConflatedGraph &c) {
  const std::size_t nv = c.vertex_count(), ne = c.edges().size();
  if (nv == 1 && ne == 0) return GraphShape::Point;
  if (nv == 2 && ne == 1) return GraphShape::Edge;
  const auto src = c.sources(), snk = c.sinks();
  if (src.size() != 1 || snk.size() != 1) return GraphShape::Other;
  if (nv == 3 && ne == 2) {
    const auto p = oriented_path(c, src[0], snk[0]);
    if (p && p->length() == 3) return GraphShape::Line3;
  }
  if (nv == 8 && ne == 8) {
    for (std::size_t v = 0; v < nv; ++v)
      if (c.steps(static_cast<int>(v)).size() != 2) return GraphShape::Other;
    // Two oriented halves of length 5 (vertices) between source and sink.
    const auto p = oriented_path(c, src[0], snk[0]);
    if (p && p->length() == 5) return GraphShape::Zam;
  }
  return GraphShape::Other;
}

std::vector<std::pair<Word, GraphShape>> s4_table() {
  std::vector<std::pair<Word, GraphShape>> out;
  for (const char *w : {"", "1", "2", "21", "12", "3", "31", "32", "321", "312", "23", "231", "2312", "123"})
    out.emplace_back(parse_word(w), GraphShape::Point);
  for (const char *w : {"121", "3121", "232", "2321", "1231", "1232"}) out.emplace_back(parse_word(w), GraphShape::Edge);
  for (const char *w : {"23121", "12321", "12312"}) out.emplace_back(parse_word(w), GraphShape::Line3);
  out.emplace_back(parse_word("123121"), GraphShape::Zam);
  return out;
}

std::vector<SweepRow> check_s4_sweep(std::size_t max_len, std::size_t budget) {
  const Permutation counterexample = word_to_perm(parse_word("12321"), 4);
  std::vector<SweepRow> rows;
  for (const auto &[w, expected] : s4_table()) {
    const ConflatedGraph c = build_conflated(build_rex_graph(w, 4));
    const std::size_t len = max_len ? max_len : std::max<std::size_t>(9, default_max_len(c.vertex_count()));
    SweepRow row{w, classify_shape(c), expected, c.rex().element() != counterexample,
                 check_fpc(w, len, std::nullopt, budget)};
    rows.push_back(std::move(row));
  }
  return rows;
}

Word family_word(int n) {
  if (n < 3) throw InvalidArgument("family_word needs n >= 3");
  Word w;
  for (int i = 1; i < n; ++i) w.push_back(i);
  for (int i = n - 2; i >= 1; --i) w.push_back(i);
  return w;
}

namespace {

// Vertices of a line-shaped conflated graph starting at `first`.
std::vector<int> line_order(const ConflatedGraph &c, int first) {
  std::vector<int> order{first};
  int prev = -1;
  while (true) {
    const auto &st = c.steps(order.back());
    int next = -1;
    for (const auto &s : st)
      if (s.neighbor != prev) next = s.neighbor;
    if (st.size() > 2 || (order.size() == 1 && st.size() != 1))
      throw InternalError("conflated graph is not a line with " + c.label(first) + " at one end");
    if (next == -1) break;
    prev = order.back();
    order.push_back(next);
  }
  if (order.size() != c.vertex_count()) throw InternalError("conflated graph is not a line");
  return order;
}

FamilyReport compare_on_basis(const ConflatedGraph &c, FamilyReport r) {
  const Path lp = lift_conflated_path(c, r.p, std::nullopt, c.cloud(r.p.vertices.back()).representative);
  const Path lq = lift_conflated_path(c, r.q, std::nullopt, c.cloud(r.q.vertices.back()).representative);
  const auto wp = path_words(c.rex(), lp), wq = path_words(c.rex(), lq);
  const Word &dom = c.representative(r.p.vertices.front());
  const Mask dim = Mask{1} << dom.size();
  for (Mask col = 0; col < dim; ++col) {
    const BSElement e = BSElement::basis(dom, c.rank(), col);
    BSElement ip = apply_path(wp, e), iq = apply_path(wq, e);
    if (!(ip == iq)) {
      r.unequal = true;
      r.column = col;
      r.input = e;
      r.image_p = std::move(ip);
      r.image_q = std::move(iq);
      break;
    }
  }
  return r;
}

} // namespace

FamilyReport check_family(int n, bool source_first) {
  if (n < 4 || n > 6) throw InvalidArgument("check_family: n must be in 4..6");
  const Word w = family_word(n);
  const ConflatedGraph c = build_conflated(build_rex_graph(w, n));
  const auto [s, t] = source_sink(c);
  const auto e = line_order(c, source_first ? s : t);
  const std::size_t m = e.size();
  // p = [E2, E1, E2, ..., Em, ..., E2], q = [E2, ..., Em, ..., E1, E2] (0-based e[1] = E2).
  Path p{GraphKind::Conflated, {e[1], e[0]}};
  for (std::size_t k = 1; k < m; ++k) p.vertices.push_back(e[k]);
  for (std::size_t k = m - 1; k-- > 1;) p.vertices.push_back(e[k]);
  Path q{GraphKind::Conflated, {}};
  for (std::size_t k = 1; k < m; ++k) q.vertices.push_back(e[k]);
  for (std::size_t k = m - 1; k-- > 0;) q.vertices.push_back(e[k]);
  q.vertices.push_back(e[1]);

  const BSElement zero(c.representative(e[1]), n);
  FamilyReport r{w, m, source_first, p, q, false, std::nullopt, zero, zero, zero};
  return compare_on_basis(c, std::move(r));
}

FamilyReport check_extra_counterexample() {
  constexpr int rank = 4;
  const Word w = parse_word("12321");
  const ConflatedGraph c = build_conflated(build_rex_graph(w, rank));
  const Path p = conflated_path(c, {"s", "c", "t", "c", "s", "c"});
  const Path q = conflated_path(c, {"s", "c", "t", "c"});
  std::vector<Polynomial> slots(6, Polynomial::one(rank));
  slots[1] = Polynomial::variable(rank, 2);
  const BSElement x = from_tensor(c.representative(p.vertices.front()), rank, slots);
  BSElement ip = apply_conflated_path(c, p, x), iq = apply_conflated_path(c, q, x);
  const bool unequal = !(ip == iq);
  return FamilyReport{w, c.vertex_count(), true, p, q, unequal, std::nullopt, x, std::move(ip), std::move(iq)};
}

} // namespace rexcalc
