#ifndef REXCALC_POLYRING_HPP
#define REXCALC_POLYRING_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "rexcalc/error.hpp"

namespace rexcalc {

class Permutation;

using Rational = mpq_class;

/// Maximum number of polynomial variables x_1..x_n supported by Monomial.
inline constexpr int kMaxVars = 8;

/// Exponent vector of a monomial in x_1..x_kMaxVars.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};

  int total_degree() const;
  /// Graded degree: deg(x_i) = 2.
  int degree() const { return 2 * total_degree(); }

  bool operator==(const Monomial &) const = default;

  static Monomial variable(int i);
};

Monomial operator*(const Monomial &a, const Monomial &b);

/// Graded lexicographic comparison: total degree first, then lexicographic
/// with x_1 > x_2 > ... Returns true when `a` is strictly greater than `b`.
bool grlex_greater(const Monomial &a, const Monomial &b);

/// Exact multivariate polynomial over the rationals in x_1..x_n.
///
/// Terms are kept sorted in descending graded-lex order with no zero
/// coefficients, so structural equality is mathematical equality.
class Polynomial {
public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(int rank);
  Polynomial(int rank, const Rational &constant);

  static Polynomial zero(int rank) { return Polynomial(rank); }
  static Polynomial one(int rank) { return Polynomial(rank, 1); }
  /// x_i, 1-based.
  static Polynomial variable(int rank, int i);
  static Polynomial monomial(int rank, const Monomial &m, const Rational &c = 1);
  /// Parses the canonical text form (and anything reasonably close to it):
  /// "3*x1^2*x2 - 1/2*x3 + 4". Throws InvalidArgument on malformed input.
  static Polynomial parse(int rank, std::string_view text);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const std::vector<Term> &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// True when every term has the same graded degree (zero counts as homogeneous).
  bool is_homogeneous() const;
  /// Graded degree of the leading term; -1 for the zero polynomial.
  int degree() const;

  Polynomial operator-() const;
  Polynomial &operator+=(const Polynomial &o);
  Polynomial &operator-=(const Polynomial &o);
  Polynomial &operator*=(const Polynomial &o);
  Polynomial &operator*=(const Rational &c);

  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(Polynomial a, const Rational &c) { return a *= c; }
  friend Polynomial operator*(const Rational &c, Polynomial a) { return a *= c; }

  bool operator==(const Polynomial &o) const;

  /// Action of the simple reflection s_i (swap x_i and x_{i+1}), 1-based.
  Polynomial reflect(int i) const;
  /// Action of an arbitrary permutation: x_j -> x_{p(j)}.
  Polynomial act(const Permutation &p) const;
  bool is_invariant(int i) const;
  /// Demazure operator (p - s_i p) / (x_i - x_{i+1}).
  Polynomial demazure(int i) const;

  std::size_t hash() const;
  std::string to_string() const;

private:
  void check_rank(const Polynomial &o) const;
  void normalize();

  int rank_ = 0;
  std::vector<Term> terms_;
};

Polynomial act(const Permutation &p, const Polynomial &q);
Polynomial demazure(int i, const Polynomial &p);
bool is_invariant(const Polynomial &p, int i);

/// Splits p = inv0 + inv1 * x_i with inv0, inv1 invariant under s_i.
std::pair<Polynomial, Polynomial> split_over_invariants(const Polynomial &p, int i);

} // namespace rexcalc

template <> struct std::hash<rexcalc::Polynomial> {
  std::size_t operator()(const rexcalc::Polynomial &p) const { return p.hash(); }
};

#endif
