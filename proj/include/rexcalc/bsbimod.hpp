#ifndef REXCALC_BSBIMOD_HPP
#define REXCALC_BSBIMOD_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rexcalc/polyring.hpp"
#include "rexcalc/symgroup.hpp"

namespace rexcalc {

/// Bit j of a mask selects x_{word[j]} (instead of 1) in the slot right of factor j.
using Mask = std::uint32_t;

inline constexpr int kMaxFactors = 24;

/// Element of the Bott-Samelson bimodule B_{w_1} ... B_{w_k} over R = Q[x_1..x_n].
///
/// Stored in left normal form: sum over masks e of coeff(e) * (1 (x) b_1 (x) ... (x) b_k)
/// with b_j = x_{w_j} when bit j-1 of e is set and b_j = 1 otherwise. R is free over
/// R^{s_i} with basis {1, x_i}, so this form is unique and equality is map equality.
class BSElement {
public:
  BSElement(Word word, int rank);

  /// 1 (x) 1 (x) ... (x) 1.
  static BSElement one(Word word, int rank);
  /// The basis element for mask e with coefficient 1.
  static BSElement basis(Word word, int rank, Mask e);

  const Word &word() const { return word_; }
  int rank() const { return rank_; }
  int length() const { return static_cast<int>(word_.size()); }
  const std::map<Mask, Polynomial> &coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of a basis mask (zero when absent).
  Polynomial coeff(Mask e) const;
  /// Adds c to the coefficient of e, dropping it if the sum vanishes.
  void add_term(Mask e, const Polynomial &c);

  BSElement &operator+=(const BSElement &o);
  BSElement &operator-=(const BSElement &o);
  friend BSElement operator+(BSElement a, const BSElement &b) { return a += b; }
  friend BSElement operator-(BSElement a, const BSElement &b) { return a -= b; }
  BSElement operator-() const;

  bool operator==(const BSElement &o) const;

  /// The element as a list of slot polynomials per term: [coeff, b_1, ..., b_k].
  std::vector<std::vector<Polynomial>> expand() const;

  std::size_t hash() const;
  /// "(x1 + x2)*[1|1|x3|1]" style human readable form.
  std::string to_string() const;

private:
  void check_compatible(const BSElement &o) const;

  Word word_;
  int rank_;
  std::map<Mask, Polynomial> coeffs_;
};

/// Normal form of slot_0 (x) slot_1 (x) ... (x) slot_k. Slots are processed
/// right to left: slot j is split over R^{s_{w_j}} into inv0 + inv1 * x_{w_j}
/// and the invariant parts slide into slot j-1.
BSElement from_tensor(const Word &word, std::span<const Polynomial> slots);
BSElement from_tensor(const Word &word, int rank, std::span<const Polynomial> slots);

BSElement left_mul(const Polynomial &p, const BSElement &e);
BSElement right_mul(const BSElement &e, const Polynomial &p);

/// Image under multiplication R (x)_{R^s} R -> R on factor `factor` (0-based):
/// the two slots around the factor merge and the word loses that letter.
BSElement dot_cap(const BSElement &e, int factor);

/// Graded degree of the basis element e in a word of length k: 2*|e| - k.
int basis_degree(Mask e, int k);

/// x_{word[j]} or 1 per bit; used for the slots of a basis element.
Polynomial basis_slot(const Word &word, int rank, Mask e, int j);

} // namespace rexcalc

#endif
