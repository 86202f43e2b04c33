#ifndef REXCALC_BRAIDMOR_HPP
#define REXCALC_BRAIDMOR_HPP

#include <optional>
#include <vector>

#include "rexcalc/bsbimod.hpp"
#include "rexcalc/symgroup.hpp"

namespace rexcalc {

/// Images of every basis monomial of a braid window under the local braid
/// morphism, i.e. the unique degree 0 map sending 1^(x) to 1^(x).
struct LocalImageTable {
  BraidMove move; // position is ignored
  Word source;
  Word target;
  int rank = 0;
  /// images[mask] lives in the bimodule of `target`.
  std::vector<BSElement> images;

  const BSElement &image(Mask window_mask) const { return images.at(window_mask); }
};

/// Builds the table for a move kind at rank n by rewriting each window basis
/// monomial into a two-sided combination of the defining generators (1^(x),
/// plus the second generator for the adjacent cases) and mapping those.
LocalImageTable derive_local_table(const BraidMove &move, int rank);
/// Cached variant of derive_local_table. Safe to call concurrently.
const LocalImageTable &local_table(const BraidMove &move, int rank);

/// Id (x) ... (x) f (x) ... (x) Id applied to e.
BSElement apply_edge(const BSElement &e, const BraidMove &move);

/// Left-R-linear map between Bott-Samelson bimodules in normal-form bases.
/// Column c is the image of basis element c of the domain.
class MorphismMatrix {
public:
  MorphismMatrix(Word domain, Word codomain, int rank);

  static MorphismMatrix identity(const Word &w, int rank);

  const Word &domain() const { return domain_; }
  const Word &codomain() const { return codomain_; }
  int rank() const { return rank_; }
  std::size_t dimension() const { return columns_.size(); }

  const BSElement &column(Mask c) const { return columns_.at(c); }
  void set_column(Mask c, BSElement image);
  Polynomial entry(Mask row, Mask col) const { return columns_.at(col).coeff(row); }

  /// Image of an arbitrary element of the domain.
  BSElement apply(const BSElement &e) const;

  bool operator==(const MorphismMatrix &o) const;
  std::size_t hash() const;

  /// Number of nonzero entries.
  std::size_t nonzeros() const;

private:
  Word domain_;
  Word codomain_;
  int rank_;
  std::vector<BSElement> columns_;
};

/// (a o b): first b, then a.
MorphismMatrix compose(const MorphismMatrix &a, const MorphismMatrix &b);
MorphismMatrix edge_matrix(const BraidMove &move, const Word &word, int rank);

/// The move taking `from` to `to`; nullopt when they are not one braid relation apart.
std::optional<BraidMove> move_between(const Word &from, const Word &to);

/// Ordered product of edge matrices along a vertex sequence of words.
MorphismMatrix path_morphism(const std::vector<Word> &path, int rank);
/// Evaluates a path on one element without building the matrix.
BSElement apply_path(const std::vector<Word> &path, const BSElement &e);

/// Entrywise equality. Throws InvalidArgument when the shapes differ.
bool matrices_equal(const MorphismMatrix &a, const MorphismMatrix &b);

/// First column where a and b differ, if any.
std::optional<Mask> first_difference(const MorphismMatrix &a, const MorphismMatrix &b);

} // namespace rexcalc

template <> struct std::hash<rexcalc::MorphismMatrix> {
  std::size_t operator()(const rexcalc::MorphismMatrix &m) const { return m.hash(); }
};

#endif
