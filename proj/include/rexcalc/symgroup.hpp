#ifndef REXCALC_SYMGROUP_HPP
#define REXCALC_SYMGROUP_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rexcalc/error.hpp"

namespace rexcalc {

/// A word in the simple reflections; letter i stands for s_i = (i i+1).
/// Letters are 1-based, positions into the word 0-based.
using Word = std::vector<int>;

/// "12321" -> {1,2,3,2,1}. Accepts comma/space separated forms too ("10,11").
Word parse_word(std::string_view text);
/// Concatenated digits when every letter is < 10, comma separated otherwise.
std::string word_to_string(const Word &w);

/// Smallest n such that every letter of w is a generator of S_n.
int min_rank(const Word &w);

/// Permutation of {1..n} in one-line notation.
class Permutation {
public:
  explicit Permutation(int n);
  /// images[k] is the image of k+1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n) { return Permutation(n); }
  static Permutation simple_reflection(int n, int i);

  int rank() const { return static_cast<int>(images_.size()); }
  /// Image of j (1-based).
  int operator()(int j) const { return images_[j - 1]; }
  const std::vector<int> &images() const { return images_; }

  /// Composition as functions: (a*b)(j) = a(b(j)).
  friend Permutation operator*(const Permutation &a, const Permutation &b);
  Permutation inverse() const;

  /// Coxeter length = number of inversions.
  int length() const;

  bool operator==(const Permutation &) const = default;
  auto operator<=>(const Permutation &) const = default;

  std::size_t hash() const;
  std::string to_string() const;

private:
  std::vector<int> images_;
};

Permutation word_to_perm(const Word &w, int n);
bool is_reduced(const Word &w, int n);
/// Inductive reduced word 1 | 21 | 321 | ... for the longest element of S_n.
Word longest_element(int n);

/// One braid relation at a position of a word.
struct BraidMove {
  enum class Kind { Distant, AdjacentUp, AdjacentDown };

  Kind kind = Kind::Distant;
  /// 0-based start index of the window.
  int position = 0;
  /// Distant: the letter pair (first, second) being swapped.
  /// Adjacent: the lower letter i of the i,i+1 pair.
  int first = 0;
  int second = 0;

  static BraidMove distant(int position, int i, int j) { return {Kind::Distant, position, i, j}; }
  static BraidMove up(int position, int i) { return {Kind::AdjacentUp, position, i, i + 1}; }
  static BraidMove down(int position, int i) { return {Kind::AdjacentDown, position, i, i + 1}; }

  bool is_distant() const { return kind == Kind::Distant; }
  int window_size() const { return is_distant() ? 2 : 3; }
  /// Letters of the window before the move.
  Word source_window() const;
  /// Letters of the window after the move.
  Word target_window() const;
  BraidMove inverse() const;

  bool applies_to(const Word &w) const;
  /// Throws InvalidArgument when the move does not apply.
  Word apply(const Word &w) const;

  bool operator==(const BraidMove &) const = default;
  std::string to_string() const;
};

/// All words one braid relation away from w, each with the move producing it.
std::vector<std::pair<BraidMove, Word>> braid_moves(const Word &w);

/// All reduced expressions of p, in lexicographic order.
std::vector<Word> reduced_words(const Permutation &p);
/// Some reduced word of p (bubble-sort derived).
Word reduced_word(const Permutation &p);

/// Sum of the letters of w.
int n_statistic(const Word &w);

} // namespace rexcalc

template <> struct std::hash<rexcalc::Permutation> {
  std::size_t operator()(const rexcalc::Permutation &p) const { return p.hash(); }
};

#endif
