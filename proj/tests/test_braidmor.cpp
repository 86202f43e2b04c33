#include <doctest.h>

#include <functional>
#include <random>

#include "rexcalc/braidmor.hpp"
#include "rexcalc/rexgraph.hpp"

using namespace rexcalc;

namespace {

Polynomial P(const std::string &text, int rank) { return Polynomial::parse(rank, text); }

BSElement tensor(const Word &w, int rank, const std::vector<std::string> &slots) {
  std::vector<Polynomial> ps;
  for (const auto &s : slots) ps.push_back(P(s, rank));
  return from_tensor(w, rank, ps);
}

std::string x(int i) { return "x" + std::to_string(i); }

std::vector<Word> words(std::initializer_list<const char *> list) {
  std::vector<Word> out;
  for (const char *s : list) out.push_back(parse_word(s));
  return out;
}

Polynomial random_poly(std::mt19937 &rng, int rank) {
  Polynomial p(rank);
  for (int t = 0; t < 3; ++t) {
    Polynomial m(rank, static_cast<int>(rng() % 5) - 2);
    const int deg = static_cast<int>(rng() % 3);
    for (int d = 0; d < deg; ++d) m *= Polynomial::variable(rank, 1 + static_cast<int>(rng() % rank));
    p += m;
  }
  return p;
}

} // namespace

TEST_CASE("adjacent up generator images") {
  for (int i = 1; i <= 3; ++i) {
    const int rank = i + 2;
    const Word src{i, i + 1, i}, dst{i + 1, i, i + 1};
    const auto up = BraidMove::up(0, i);
    CAPTURE(i);
    // f(1|x_i|1|1) = (x_i + x_{i+1}) 1^(x) - 1^(x) x_{i+2}
    CHECK(apply_edge(tensor(src, rank, {"1", x(i), "1", "1"}), up) ==
          tensor(dst, rank, {x(i) + " + " + x(i + 1), "1", "1", "1"}) - tensor(dst, rank, {"1", "1", "1", x(i + 2)}));
    // f(1|x_{i+1}|1|1) = 1|1|1|x_{i+2}
    CHECK(apply_edge(tensor(src, rank, {"1", x(i + 1), "1", "1"}), up) ==
          tensor(dst, rank, {"1", "1", "1", x(i + 2)}));
    CHECK(apply_edge(BSElement::one(src, rank), up) == BSElement::one(dst, rank));
  }
}

TEST_CASE("adjacent down generator images") {
  // Window i,i-1,i with i = j + 1 for AdjacentDown(j).
  for (int i = 2; i <= 4; ++i) {
    const int rank = i + 1;
    const Word src{i, i - 1, i}, dst{i - 1, i, i - 1};
    const auto down = BraidMove::down(0, i - 1);
    CAPTURE(i);
    // f(1|x_{i+1}|1|1) = 1|1|1|(x_i + x_{i+1}) - x_{i-1}|1|1|1
    CHECK(apply_edge(tensor(src, rank, {"1", x(i + 1), "1", "1"}), down) ==
          tensor(dst, rank, {"1", "1", "1", x(i) + " + " + x(i + 1)}) - tensor(dst, rank, {x(i - 1), "1", "1", "1"}));
    // f(1|1|x_i|1) = x_{i-1}|1|1|1
    CHECK(apply_edge(tensor(src, rank, {"1", "1", x(i), "1"}), down) == tensor(dst, rank, {x(i - 1), "1", "1", "1"}));
  }
}

TEST_CASE("local tables") {
  for (int rank = 3; rank <= 6; ++rank) {
    for (int i = 1; i + 1 < rank; ++i) {
      for (const auto &move : {BraidMove::up(0, i), BraidMove::down(0, i)}) {
        const auto &t = local_table(move, rank);
        REQUIRE(t.images.size() == 8);
        CHECK(t.image(0) == BSElement::one(t.target, rank));
        for (Mask m = 0; m < 8; ++m)
          for (const auto &[row, c] : t.image(m).coeffs()) {
            CHECK(c.is_homogeneous());
            CHECK(c.degree() == 2 * (std::popcount(m) - std::popcount(row)));
          }
      }
    }
  }
  // Distant: 1|x_i|1 goes to 1|1|x_i.
  const auto &d = local_table(BraidMove::distant(0, 1, 3), 4);
  CHECK(d.target == Word{3, 1});
  CHECK(d.image(1) == BSElement::basis({3, 1}, 4, 2));
  CHECK(d.image(2) == BSElement::basis({3, 1}, 4, 1));
  CHECK(d.image(3) == BSElement::basis({3, 1}, 4, 3));
}

TEST_CASE("edge matrix columns") {
  const MorphismMatrix m = edge_matrix(BraidMove::up(0, 1), {1, 2, 1}, 4);
  CHECK(m.column(0) == BSElement::one({2, 1, 2}, 4));
  // Column of 1|x1|1|1 after normalizing (x1 + x2) 1^(x) - 1^(x) x3.
  const BSElement col = m.column(1);
  CHECK(col.coeffs().size() == 3);
  CHECK(col.coeff(0) == P("-x3", 4));
  CHECK(col.coeff(2) == P("1", 4));
  CHECK(col.coeff(4) == P("1", 4));
  CHECK(m.entry(0, 1) == P("-x3", 4));

  const MorphismMatrix dm = edge_matrix(BraidMove::distant(0, 2, 4), {2, 4}, 5);
  CHECK(dm.nonzeros() == 4);
  for (Mask c = 0; c < 4; ++c) {
    const Mask swapped = ((c & 1) << 1) | ((c >> 1) & 1);
    CHECK(dm.column(c) == BSElement::basis({4, 2}, 5, swapped));
  }
  CHECK_THROWS_AS(edge_matrix(BraidMove::up(0, 1), {2, 1, 2}, 4), InvalidArgument);
}

TEST_CASE("distant edges permute masks") {
  const BSElement e = tensor({1, 3, 2, 3, 1}, 4, {"1", "1", "1", x(3), "1", "1"});
  const BSElement img = apply_edge(e, BraidMove::distant(0, 1, 3));
  BSElement expected({3, 1, 2, 3, 1}, 4);
  for (const auto &[m, c] : e.coeffs()) expected.add_term((m & ~Mask{3}) | ((m & 1) << 1) | ((m >> 1) & 1), c);
  CHECK(img == expected);
}

TEST_CASE("down move on the counterexample element") {
  const BSElement e = tensor({1, 3, 2, 3, 1}, 4, {"1", "1", "1", x(3), "1", "1"});
  const BSElement img = apply_edge(e, BraidMove::down(1, 2));
  CHECK(img == tensor({1, 2, 3, 2, 1}, 4, {"1", x(2), "1", "1", "1", "1"}));
}

TEST_CASE("bimodule linearity on random elements") {
  std::mt19937 rng(99);
  const int rank = 5;
  int checked = 0;
  while (checked < 1000) {
    Word w(3 + rng() % 3);
    for (int &l : w) l = 1 + static_cast<int>(rng() % (rank - 1));
    const auto moves = braid_moves(w);
    if (moves.empty()) continue;
    const BraidMove mv = moves[rng() % moves.size()].first;
    std::vector<Polynomial> slots;
    for (std::size_t j = 0; j <= w.size(); ++j) slots.push_back(random_poly(rng, rank));
    const BSElement e = from_tensor(w, rank, slots);
    const Polynomial p = random_poly(rng, rank);
    CAPTURE(word_to_string(w));
    CAPTURE(mv.to_string());
    CHECK(apply_edge(left_mul(p, e), mv) == left_mul(p, apply_edge(e, mv)));
    CHECK(apply_edge(right_mul(e, p), mv) == right_mul(apply_edge(e, mv), p));
    ++checked;
  }
}

TEST_CASE("round trips") {
  const Word w{2, 4, 1, 3};
  const BraidMove d = BraidMove::distant(0, 2, 4);
  CHECK(compose(edge_matrix(d.inverse(), d.apply(w), 5), edge_matrix(d, w, 5)) == MorphismMatrix::identity(w, 5));
  CHECK(path_morphism(words({"2413", "4213", "2413"}), 5) == MorphismMatrix::identity(w, 5));
  CHECK(path_morphism(words({"2413"}), 5) == MorphismMatrix::identity(w, 5));
  // Up o Down o Up = Up, Down o Up is idempotent but not the identity.
  const MorphismMatrix up = path_morphism(words({"121", "212"}), 3);
  const MorphismMatrix down = path_morphism(words({"212", "121"}), 3);
  CHECK(compose(up, compose(down, up)) == up);
  CHECK(compose(compose(down, up), compose(down, up)) == compose(down, up));
  CHECK_FALSE(compose(down, up) == MorphismMatrix::identity({1, 2, 1}, 3));
}

TEST_CASE("path morphisms: evaluation agrees with matrices and entries are homogeneous") {
  std::mt19937 rng(5);
  const RexGraph g = build_rex_graph(parse_word("12321"));
  for (int iter = 0; iter < 30; ++iter) {
    std::vector<int> walk{static_cast<int>(rng() % g.vertex_count())};
    const int len = 1 + static_cast<int>(rng() % 8);
    for (int k = 0; k < len; ++k) {
      const auto &st = g.steps(walk.back());
      walk.push_back(st[rng() % st.size()].neighbor);
    }
    std::vector<Word> path;
    for (int v : walk) path.push_back(g.word(v));
    const MorphismMatrix m = path_morphism(path, 4);
    for (Mask c = 0; c < m.dimension(); ++c) {
      CHECK(apply_path(path, BSElement::basis(path.front(), 4, c)) == m.column(c));
      for (const auto &[r, poly] : m.column(c).coeffs()) {
        CHECK(poly.is_homogeneous());
        CHECK(poly.degree() == 2 * (std::popcount(c) - std::popcount(r)));
      }
    }
  }
}

TEST_CASE("composition") {
  const auto a = path_morphism(words({"13231", "12321"}), 4);
  const auto b = path_morphism(words({"12321", "13231"}), 4);
  const auto c = path_morphism(words({"13231", "31231"}), 4);
  CHECK(compose(c, compose(b, a)) == compose(compose(c, b), a));
  CHECK(compose(a, MorphismMatrix::identity({1, 3, 2, 3, 1}, 4)) == a);
  CHECK(compose(b, a) == path_morphism(words({"13231", "12321", "13231"}), 4));
  CHECK_THROWS_AS(compose(a, a), InvalidArgument);
  CHECK_THROWS_AS(matrices_equal(a, b), InvalidArgument);
  CHECK(first_difference(compose(b, a), MorphismMatrix::identity({1, 3, 2, 3, 1}, 4)).has_value());
  CHECK(move_between({1, 2, 1}, {2, 1, 2}) == BraidMove::up(0, 1));
  CHECK_FALSE(move_between({1, 2, 1}, {1, 2, 1}).has_value());
  CHECK_THROWS_AS(path_morphism(words({"121", "121"}), 3), InvalidArgument);
}

TEST_CASE("disjoint square and distant hexagon are consistent") {
  CHECK(path_morphism(words({"121343", "212343", "212434"}), 5) ==
        path_morphism(words({"121343", "121434", "212434"}), 5));
  // Two ways around the distant hexagon of 246.
  CHECK(path_morphism(words({"246", "426", "462", "642"}), 7) ==
        path_morphism(words({"246", "264", "624", "642"}), 7));
}

TEST_CASE("oriented simple paths through the expanded graph of w0 agree") {
  const RexGraph g = build_rex_graph(longest_element(4), 4);
  const int s = g.index_of(parse_word("121321")), t = g.index_of(parse_word("323123"));
  std::vector<std::vector<Word>> paths;
  std::vector<int> walk{s};
  std::vector<bool> used(g.vertex_count());
  used[s] = true;
  std::function<void()> dfs = [&] {
    if (walk.back() == t) {
      std::vector<Word> p;
      for (int v : walk) p.push_back(g.word(v));
      paths.push_back(p);
      return;
    }
    for (const auto &st : g.steps(walk.back())) {
      if (used[st.neighbor] || st.move.kind == BraidMove::Kind::AdjacentDown) continue;
      used[st.neighbor] = true;
      walk.push_back(st.neighbor);
      dfs();
      walk.pop_back();
      used[st.neighbor] = false;
    }
  };
  dfs();
  REQUIRE(paths.size() > 2);
  const MorphismMatrix first = path_morphism(paths.front(), 4);
  for (const auto &p : paths) CHECK(path_morphism(p, 4) == first);
}
