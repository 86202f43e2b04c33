#include "rexcalc/symgroup.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace rexcalc {

Word parse_word(std::string_view text) {
  Word w;
  const bool separated = text.find_first_of(", ") != std::string_view::npos;
  if (!separated) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
        throw InvalidArgument("invalid letter '" + std::string(1, c) + "' in word '" +
                              std::string(text) + "'");
      w.push_back(c - '0');
    }
    return w;
  }
  int cur = 0;
  bool have = false;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur = cur * 10 + (c - '0');
      have = true;
    } else if (c == ',' || c == ' ') {
      if (have) w.push_back(cur);
      cur = 0;
      have = false;
    } else {
      throw InvalidArgument("invalid character in word '" + std::string(text) + "'");
    }
  }
  if (have) w.push_back(cur);
  for (int l : w)
    if (l < 1) throw InvalidArgument("letters must be positive");
  return w;
}

std::string word_to_string(const Word &w) {
  const bool small = std::all_of(w.begin(), w.end(), [](int l) { return l < 10; });
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!small && k > 0) out += ',';
    out += std::to_string(w[k]);
  }
  return out;
}

int min_rank(const Word &w) {
  int m = 1;
  for (int l : w) m = std::max(m, l + 1);
  return m;
}

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  if (n < 1) throw InvalidArgument("permutation rank must be positive");
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = rank();
  if (n < 1) throw InvalidArgument("permutation rank must be positive");
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v - 1])
      throw InvalidArgument("images do not form a bijection of {1..n}");
    seen[v - 1] = true;
  }
}

Permutation Permutation::simple_reflection(int n, int i) {
  if (i < 1 || i >= n) throw InvalidArgument("generator index out of range");
  Permutation p(n);
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

Permutation operator*(const Permutation &a, const Permutation &b) {
  if (a.rank() != b.rank()) throw InvalidArgument("rank mismatch in permutation product");
  std::vector<int> img(a.images_.size());
  for (int j = 1; j <= b.rank(); ++j) img[j - 1] = a(b(j));
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int j = 1; j <= rank(); ++j) img[(*this)(j)-1] = j;
  return Permutation(std::move(img));
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t a = 0; a < images_.size(); ++a)
    for (std::size_t b = a + 1; b < images_.size(); ++b)
      if (images_[a] > images_[b]) ++inv;
  return inv;
}

std::size_t Permutation::hash() const {
  std::size_t h = images_.size();
  for (int v : images_) h = h * 1000003u ^ static_cast<std::size_t>(v);
  return h;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < images_.size(); ++k) os << (k ? " " : "") << images_[k];
  os << ']';
  return os.str();
}

Permutation word_to_perm(const Word &w, int n) {
  Permutation p(n);
  std::vector<int> img = p.images();
  for (int l : w) {
    if (l < 1 || l >= n)
      throw InvalidArgument("letter " + std::to_string(l) + " out of range for S_" +
                            std::to_string(n));
    // right multiplication by s_l swaps positions l, l+1
    std::swap(img[l - 1], img[l]);
  }
  return Permutation(std::move(img));
}

bool is_reduced(const Word &w, int n) {
  return static_cast<int>(w.size()) == word_to_perm(w, n).length();
}

Word longest_element(int n) {
  if (n < 2) throw InvalidArgument("longest_element needs n >= 2");
  Word w;
  for (int m = 1; m < n; ++m)
    for (int l = m; l >= 1; --l) w.push_back(l);
  return w;
}

Word BraidMove::source_window() const {
  switch (kind) {
  case Kind::Distant: return {first, second};
  case Kind::AdjacentUp: return {first, first + 1, first};
  case Kind::AdjacentDown: return {first + 1, first, first + 1};
  }
  return {};
}

Word BraidMove::target_window() const { return inverse().source_window(); }

BraidMove BraidMove::inverse() const {
  switch (kind) {
  case Kind::Distant: return distant(position, second, first);
  case Kind::AdjacentUp: return down(position, first);
  case Kind::AdjacentDown: return up(position, first);
  }
  return *this;
}

bool BraidMove::applies_to(const Word &w) const {
  if (position < 0 || position + window_size() > static_cast<int>(w.size())) return false;
  if (is_distant() && std::abs(first - second) < 2) return false;
  const Word src = source_window();
  return std::equal(src.begin(), src.end(), w.begin() + position);
}

Word BraidMove::apply(const Word &w) const {
  if (!applies_to(w))
    throw InvalidArgument("move " + to_string() + " does not apply to " + word_to_string(w));
  Word out = w;
  const Word dst = target_window();
  std::copy(dst.begin(), dst.end(), out.begin() + position);
  return out;
}

std::string BraidMove::to_string() const {
  std::ostringstream os;
  switch (kind) {
  case Kind::Distant: os << "Distant(" << first << "," << second << ")"; break;
  case Kind::AdjacentUp: os << "AdjacentUp(" << first << ")"; break;
  case Kind::AdjacentDown: os << "AdjacentDown(" << first << ")"; break;
  }
  os << "@" << position;
  return os.str();
}

std::vector<std::pair<BraidMove, Word>> braid_moves(const Word &w) {
  std::vector<std::pair<BraidMove, Word>> out;
  const int k = static_cast<int>(w.size());
  for (int p = 0; p + 1 < k; ++p) {
    const int a = w[p], b = w[p + 1];
    if (std::abs(a - b) >= 2) {
      BraidMove m = BraidMove::distant(p, a, b);
      out.emplace_back(m, m.apply(w));
    }
    if (p + 2 < k && w[p + 2] == a && std::abs(a - b) == 1) {
      BraidMove m = b == a + 1 ? BraidMove::up(p, a) : BraidMove::down(p, b);
      out.emplace_back(m, m.apply(w));
    }
  }
  return out;
}

Word reduced_word(const Permutation &p) {
  // Bubble sort the one-line notation; each adjacent swap is a right descent.
  std::vector<int> img = p.images();
  Word rev;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t j = 0; j + 1 < img.size(); ++j) {
      if (img[j] > img[j + 1]) {
        std::swap(img[j], img[j + 1]);
        rev.push_back(static_cast<int>(j) + 1);
        swapped = true;
      }
    }
  }
  return Word(rev.rbegin(), rev.rend());
}

std::vector<Word> reduced_words(const Permutation &p) {
  std::set<Word> seen;
  std::deque<Word> queue;
  Word seed = reduced_word(p);
  seen.insert(seed);
  queue.push_back(std::move(seed));
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (auto &[move, next] : braid_moves(w))
      if (seen.insert(next).second) queue.push_back(next);
  }
  return {seen.begin(), seen.end()};
}

int n_statistic(const Word &w) { return std::accumulate(w.begin(), w.end(), 0); }

} // namespace rexcalc
