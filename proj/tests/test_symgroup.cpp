#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "rexcalc/symgroup.hpp"

using namespace rexcalc;

TEST_CASE("parse and print words") {
  CHECK(parse_word("12321") == Word{1, 2, 3, 2, 1});
  CHECK(parse_word("10,11,3") == Word{10, 11, 3});
  CHECK(parse_word("1 3 2") == Word{1, 3, 2});
  CHECK(parse_word("").empty());
  CHECK(word_to_string({1, 2, 3}) == "123");
  CHECK(word_to_string({10, 2}) == "10,2");
  CHECK_THROWS_AS(parse_word("102"), InvalidArgument);
  CHECK_THROWS_AS(parse_word("1a"), InvalidArgument);
  CHECK_THROWS_AS(parse_word("1,0"), InvalidArgument);
  CHECK(min_rank({1, 2, 3, 2, 1}) == 4);
  CHECK(min_rank({}) == 1);
}

TEST_CASE("permutation algebra") {
  const Permutation s1 = Permutation::simple_reflection(3, 1);
  const Permutation s2 = Permutation::simple_reflection(3, 2);
  CHECK(s1.images() == std::vector<int>{2, 1, 3});
  // (a*b)(j) = a(b(j))
  const Permutation p = s1 * s2;
  CHECK(p(3) == s1(s2(3)));
  CHECK(p.images() == std::vector<int>{2, 3, 1});
  CHECK(p * p.inverse() == Permutation::identity(3));
  CHECK(Permutation::identity(5).length() == 0);
  CHECK(Permutation({3, 2, 1}).length() == 3);
  CHECK_THROWS_AS(Permutation({1, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(Permutation::simple_reflection(3, 3), InvalidArgument);
  CHECK_THROWS_AS(s1 * Permutation::identity(4), InvalidArgument);
}

TEST_CASE("words to permutations") {
  CHECK(word_to_perm({1, 2, 1}, 3) == word_to_perm({2, 1, 2}, 3));
  CHECK(word_to_perm({1, 3}, 4) == word_to_perm({3, 1}, 4));
  CHECK(word_to_perm({1, 2}, 3) == Permutation::simple_reflection(3, 1) * Permutation::simple_reflection(3, 2));
  CHECK(is_reduced({1, 2, 3, 2, 1}, 4));
  CHECK_FALSE(is_reduced({1, 1}, 2));
  CHECK_FALSE(is_reduced({1, 2, 1, 2}, 3));
  CHECK_THROWS_AS(word_to_perm({4}, 4), InvalidArgument);
  CHECK(longest_element(4) == Word{1, 2, 1, 3, 2, 1});
  CHECK(word_to_perm(longest_element(5), 5).images() == std::vector<int>{5, 4, 3, 2, 1});
}

TEST_CASE("braid moves") {
  const auto up = BraidMove::up(0, 1);
  CHECK(up.source_window() == Word{1, 2, 1});
  CHECK(up.target_window() == Word{2, 1, 2});
  CHECK(up.apply({1, 2, 1, 3}) == Word{2, 1, 2, 3});
  CHECK(up.inverse() == BraidMove::down(0, 1));
  CHECK(BraidMove::down(1, 2).apply({1, 3, 2, 3}) == Word{1, 2, 3, 2});
  CHECK_THROWS_AS(up.apply({2, 1, 2}), InvalidArgument);
  CHECK_FALSE(BraidMove::distant(0, 1, 2).applies_to({1, 2}));

  const auto moves = braid_moves({1, 3, 2, 3, 1});
  std::set<Word> targets;
  for (const auto &[m, w] : moves) {
    targets.insert(w);
    CHECK(m.inverse().apply(w) == Word{1, 3, 2, 3, 1});
  }
  CHECK(targets == std::set<Word>{{3, 1, 2, 3, 1}, {1, 2, 3, 2, 1}, {1, 3, 2, 1, 3}});
}

TEST_CASE("reduced word counts") {
  // Descent-recursion counts.
  const std::vector<std::pair<const char *, std::size_t>> counts{
      {"12321", 6}, {"21321", 5}, {"1214", 8}, {"246", 6}, {"121321", 16},
      {"1234121321", 768}, {"23121", 5}, {"12312", 5}, {"2321", 3}};
  for (const auto &[w, n] : counts) {
    const Word word = parse_word(w);
    const auto words = reduced_words(word_to_perm(word, min_rank(word)));
    CAPTURE(w);
    CHECK(words.size() == n);
    CHECK(std::is_sorted(words.begin(), words.end()));
  }
  CHECK(reduced_words(Permutation::identity(3)) == std::vector<Word>{Word{}});
}

TEST_CASE("reduced words of random elements") {
  std::mt19937 rng(2024);
  for (int iter = 0; iter < 1000; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 4);
    Word w(rng() % 9);
    for (int &l : w) l = 1 + static_cast<int>(rng() % (n - 1));
    const Permutation p = word_to_perm(w, n);
    const Word r = reduced_word(p);
    CHECK(word_to_perm(r, n) == p);
    CHECK(static_cast<int>(r.size()) == p.length());
    CHECK(is_reduced(r, n));
    if (iter % 50 == 0) {
      const auto all = reduced_words(p);
      CHECK(std::find(all.begin(), all.end(), r) != all.end());
      for (const auto &v : all) CHECK(word_to_perm(v, n) == p);
    }
  }
}

TEST_CASE("n statistic") {
  CHECK(n_statistic({1, 2, 3, 2, 1}) == 9);
  CHECK(n_statistic({}) == 0);
  // An adjacent up move raises it by one.
  CHECK(n_statistic(BraidMove::up(0, 2).apply({2, 3, 2})) == n_statistic({2, 3, 2}) + 1);
}
