#include "rexcalc/braidmor.hpp"

#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace rexcalc {

namespace {

/// A summand left * G * right of a two-sided rewrite, G a window generator.
struct TwoSided {
  Polynomial left;
  Polynomial right;
  int generator; // 0 = 1^(x), 1 = second generator
};

/// Writes q as a sum of products a*b with a invariant under s_left and b
/// invariant under s_right (left, right distinct letters). Variables fixed by
/// s_left go to a, otherwise to b; the one variable moved by both is rewritten
/// x_k = (x_k + x_o) - x_o with x_o the other variable moved by s_left.
std::vector<std::pair<Polynomial, Polynomial>> split_two_sided(const Polynomial &q, int left,
                                                               int right) {
  const int rank = q.rank();
  auto moved_by = [](int k, int s) { return k == s || k == s + 1; };
  std::vector<std::pair<Polynomial, Polynomial>> out;
  for (const auto &[mono, coeff] : q.terms()) {
    std::vector<std::pair<Polynomial, Polynomial>> pairs{
        {Polynomial(rank, coeff), Polynomial::one(rank)}};
    for (int k = 1; k <= rank; ++k) {
      const int e = mono.exp[k - 1];
      if (e == 0) continue;
      Monomial xk;
      xk.exp[k - 1] = static_cast<std::uint8_t>(e);
      const Polynomial power = Polynomial::monomial(rank, xk);
      if (!moved_by(k, left)) {
        for (auto &pr : pairs) pr.first *= power;
      } else if (!moved_by(k, right)) {
        for (auto &pr : pairs) pr.second *= power;
      } else {
        const int o = k == left ? left + 1 : left;
        if (moved_by(o, right)) throw InternalError("split_two_sided: letters are not adjacent");
        const Polynomial sym = Polynomial::variable(rank, k) + Polynomial::variable(rank, o);
        const Polynomial neg = -Polynomial::variable(rank, o);
        std::vector<std::pair<Polynomial, Polynomial>> expanded;
        Rational binom = 1;
        Polynomial sym_pow = Polynomial::one(rank);
        for (int j = 0; j <= e; ++j) {
          Polynomial neg_pow = Polynomial::one(rank);
          for (int t = 0; t < e - j; ++t) neg_pow *= neg;
          for (const auto &pr : pairs)
            expanded.emplace_back(pr.first * sym_pow, pr.second * neg_pow * binom);
          sym_pow *= sym;
          binom = binom * (e - j) / (j + 1);
        }
        pairs = std::move(expanded);
      }
    }
    for (auto &pr : pairs) out.push_back(std::move(pr));
  }
  return out;
}

/// Rewrites the window basis monomial `mask` into generator form.
std::vector<TwoSided> rewrite_to_generators(const BraidMove &move, int rank, Mask mask,
                                            const Polynomial &generator_variable) {
  const Word src = move.source_window();
  const int m = static_cast<int>(src.size());
  // inner[j] is the slot right of factor j.
  std::vector<Polynomial> inner;
  for (int j = 0; j < m; ++j) inner.push_back(basis_slot(src, rank, mask, j));

  struct Partial {
    Polynomial left, slot1, right;
  };
  std::vector<Partial> partials;
  // The last slot leaves through right linearity.
  Polynomial right = inner[m - 1];
  if (m == 3) {
    for (auto &[a, b] : split_two_sided(inner[1], src[1], src[2]))
      partials.push_back({Polynomial::one(rank), inner[0] * a, right * b});
  } else {
    partials.push_back({Polynomial::one(rank), inner[0], right});
  }

  std::vector<TwoSided> out;
  for (auto &p : partials) {
    if (move.is_distant()) {
      for (auto &[a, b] : split_two_sided(p.slot1, src[0], src[1]))
        out.push_back({p.left * a, b * p.right, 0});
    } else {
      // slot1 = inv0 + inv1 * v with inv0, inv1 invariant under s_{src[0]}.
      const Polynomial dv = generator_variable.demazure(src[0]);
      if (!dv.is_constant() || dv.is_zero())
        throw InternalError("generator variable is not a basis over the invariants");
      const Polynomial inv1 = p.slot1.demazure(src[0]) * (Rational(1) / dv.terms()[0].second);
      const Polynomial inv0 = p.slot1 - inv1 * generator_variable;
      if (!inv0.is_zero()) out.push_back({p.left * inv0, p.right, 0});
      if (!inv1.is_zero()) out.push_back({p.left * inv1, p.right, 1});
    }
  }
  return out;
}

BSElement tensor(const Word &w, int rank, std::vector<Polynomial> slots) {
  return from_tensor(w, rank, slots);
}

} // namespace

LocalImageTable derive_local_table(const BraidMove &move, int rank) {
  LocalImageTable t;
  t.move = move;
  t.move.position = 0;
  t.source = move.source_window();
  t.target = move.target_window();
  t.rank = rank;
  for (int l : t.source)
    if (l < 1 || l >= rank)
      throw InvalidArgument("braid move " + move.to_string() + " out of range for rank " +
                            std::to_string(rank));
  if (move.is_distant() && std::abs(move.first - move.second) < 2)
    throw InvalidArgument("distant move needs |i - j| >= 2");

  auto one = [&] { return Polynomial::one(rank); };
  auto x = [&](int i) { return Polynomial::variable(rank, i); };

  // Images of the defining generators.
  const BSElement g0_image = BSElement::one(t.target, rank);
  std::optional<BSElement> g1_image;
  Polynomial generator_variable = one();
  if (move.kind == BraidMove::Kind::AdjacentUp) {
    // f(1 (x) x_i (x) 1 (x) 1) = (x_i + x_{i+1}) (x) 1 (x) 1 (x) 1 - 1 (x) 1 (x) 1 (x) x_{i+2}
    const int i = move.first;
    generator_variable = x(i);
    g1_image = tensor(t.target, rank, {x(i) + x(i + 1), one(), one(), one()}) -
               tensor(t.target, rank, {one(), one(), one(), x(i + 2)});
  } else if (move.kind == BraidMove::Kind::AdjacentDown) {
    // Window (i', i'-1, i') with i' = i + 1:
    // f(1 (x) x_{i'+1} (x) 1 (x) 1) = 1 (x) 1 (x) 1 (x) (x_{i'} + x_{i'+1}) - x_{i'-1} (x) 1 (x) 1 (x) 1
    const int ip = move.first + 1;
    generator_variable = x(ip + 1);
    g1_image = tensor(t.target, rank, {one(), one(), one(), x(ip) + x(ip + 1)}) -
               tensor(t.target, rank, {x(ip - 1), one(), one(), one()});
  }

  const int m = static_cast<int>(t.source.size());
  for (Mask mask = 0; mask < (Mask{1} << m); ++mask) {
    BSElement image(t.target, rank);
    for (const auto &term : rewrite_to_generators(move, rank, mask, generator_variable)) {
      const BSElement &g = term.generator == 0 ? g0_image : *g1_image;
      image += right_mul(left_mul(term.left, g), term.right);
    }
    // Degree 0: coefficient at nu has graded degree 2(|mask| - |nu|).
    for (const auto &[nu, c] : image.coeffs()) {
      const int expected = 2 * (std::popcount(mask) - std::popcount(nu));
      if (!c.is_homogeneous() || c.degree() != expected)
        throw InternalError("local image for " + move.to_string() + " is not homogeneous");
    }
    t.images.push_back(std::move(image));
  }
  if (!(t.images[0] == g0_image)) throw InternalError("local table does not fix 1^(x)");
  return t;
}

const LocalImageTable &local_table(const BraidMove &move, int rank) {
  using Key = std::tuple<int, int, int, int>;
  static std::mutex mutex;
  static std::map<Key, std::unique_ptr<LocalImageTable>> cache;
  const Key key{static_cast<int>(move.kind), move.first, move.second, rank};
  std::lock_guard lock(mutex);
  auto &slot = cache[key];
  if (!slot) slot = std::make_unique<LocalImageTable>(derive_local_table(move, rank));
  return *slot;
}

BSElement apply_edge(const BSElement &e, const BraidMove &move) {
  if (!move.applies_to(e.word()))
    throw InvalidArgument("move " + move.to_string() + " does not apply to " +
                          word_to_string(e.word()));
  const LocalImageTable &table = local_table(move, e.rank());
  const int pos = move.position;
  const int m = move.window_size();
  const Mask window = (Mask{1} << m) - 1;
  const Mask prefix_bits = (Mask{1} << pos) - 1;
  const Mask suffix_bits = ~((Mask{1} << (pos + m)) - 1);
  const Word target_word = move.apply(e.word());
  const Word prefix(e.word().begin(), e.word().begin() + pos);

  BSElement out(target_word, e.rank());
  for (const auto &[eps, c] : e.coeffs()) {
    const BSElement &image = table.image((eps >> pos) & window);
    const Mask kept = eps & suffix_bits;
    for (const auto &[nu, q] : image.coeffs()) {
      const Mask middle = nu << pos;
      if (q.is_constant()) {
        out.add_term((eps & prefix_bits) | middle | kept, c * q);
        continue;
      }
      // q multiplies the slot left of the window; renormalize the prefix.
      std::vector<Polynomial> slots{c};
      for (int j = 0; j < pos; ++j) slots.push_back(basis_slot(prefix, e.rank(), eps, j));
      slots.back() *= q;
      const BSElement head = from_tensor(prefix, e.rank(), slots);
      for (const auto &[pi, r] : head.coeffs()) out.add_term(pi | middle | kept, r);
    }
  }
  return out;
}

MorphismMatrix::MorphismMatrix(Word domain, Word codomain, int rank)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), rank_(rank) {
  if (domain_.size() != codomain_.size())
    throw InvalidArgument("morphism matrices need equal-length words");
  const std::size_t dim = std::size_t{1} << domain_.size();
  columns_.reserve(dim);
  for (std::size_t c = 0; c < dim; ++c) columns_.emplace_back(codomain_, rank_);
}

MorphismMatrix MorphismMatrix::identity(const Word &w, int rank) {
  MorphismMatrix id(w, w, rank);
  for (Mask c = 0; c < id.dimension(); ++c) id.columns_[c] = BSElement::basis(w, rank, c);
  return id;
}

void MorphismMatrix::set_column(Mask c, BSElement image) {
  if (image.word() != codomain_ || image.rank() != rank_)
    throw InvalidArgument("column does not live in the codomain");
  columns_.at(c) = std::move(image);
}

BSElement MorphismMatrix::apply(const BSElement &e) const {
  if (e.word() != domain_) throw InvalidArgument("element is not in the domain");
  BSElement out(codomain_, rank_);
  for (const auto &[c, p] : e.coeffs()) out += left_mul(p, columns_[c]);
  return out;
}

bool MorphismMatrix::operator==(const MorphismMatrix &o) const {
  return domain_ == o.domain_ && codomain_ == o.codomain_ && rank_ == o.rank_ &&
         columns_ == o.columns_;
}

std::size_t MorphismMatrix::hash() const {
  std::size_t h = 0;
  for (std::size_t c = 0; c < columns_.size(); ++c)
    h = h * 0x100000001b3ULL ^ (columns_[c].hash() + c);
  return h;
}

std::size_t MorphismMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto &col : columns_) n += col.coeffs().size();
  return n;
}

MorphismMatrix compose(const MorphismMatrix &a, const MorphismMatrix &b) {
  if (a.domain() != b.codomain() || a.rank() != b.rank())
    throw InvalidArgument("compose: codomain " + word_to_string(b.codomain()) +
                          " does not match domain " + word_to_string(a.domain()));
  MorphismMatrix r(b.domain(), a.codomain(), a.rank());
  for (Mask c = 0; c < b.dimension(); ++c) r.set_column(c, a.apply(b.column(c)));
  return r;
}

MorphismMatrix edge_matrix(const BraidMove &move, const Word &word, int rank) {
  MorphismMatrix m(word, move.apply(word), rank);
  for (Mask c = 0; c < m.dimension(); ++c)
    m.set_column(c, apply_edge(BSElement::basis(word, rank, c), move));
  return m;
}

std::optional<BraidMove> move_between(const Word &from, const Word &to) {
  for (auto &[move, next] : braid_moves(from))
    if (next == to) return move;
  return std::nullopt;
}

namespace {

BraidMove require_move(const Word &from, const Word &to) {
  auto mv = move_between(from, to);
  if (!mv)
    throw InvalidArgument("invalid path: " + word_to_string(from) + " and " +
                          word_to_string(to) + " are not joined by a braid relation");
  return *mv;
}

} // namespace

MorphismMatrix path_morphism(const std::vector<Word> &path, int rank) {
  if (path.empty()) throw InvalidArgument("path_morphism: empty vertex sequence");
  MorphismMatrix acc = MorphismMatrix::identity(path.front(), rank);
  for (std::size_t k = 0; k + 1 < path.size(); ++k)
    acc = compose(edge_matrix(require_move(path[k], path[k + 1]), path[k], rank), acc);
  return acc;
}

BSElement apply_path(const std::vector<Word> &path, const BSElement &e) {
  if (path.empty() || path.front() != e.word())
    throw InvalidArgument("apply_path: path does not start at the element's word");
  BSElement cur = e;
  for (std::size_t k = 0; k + 1 < path.size(); ++k)
    cur = apply_edge(cur, require_move(path[k], path[k + 1]));
  return cur;
}

bool matrices_equal(const MorphismMatrix &a, const MorphismMatrix &b) {
  if (a.domain() != b.domain() || a.codomain() != b.codomain() || a.rank() != b.rank())
    throw InvalidArgument("matrices_equal: shape mismatch");
  return a == b;
}

std::optional<Mask> first_difference(const MorphismMatrix &a, const MorphismMatrix &b) {
  if (a.domain() != b.domain() || a.codomain() != b.codomain())
    throw InvalidArgument("first_difference: shape mismatch");
  for (Mask c = 0; c < a.dimension(); ++c)
    if (!(a.column(c) == b.column(c))) return c;
  return std::nullopt;
}

} // namespace rexcalc
