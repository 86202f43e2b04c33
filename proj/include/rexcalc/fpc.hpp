#ifndef REXCALC_FPC_HPP
#define REXCALC_FPC_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rexcalc/braidmor.hpp"
#include "rexcalc/rexgraph.hpp"

namespace rexcalc {

/// Default cap on the number of distinct path matrices a single check may intern.
inline constexpr std::size_t kDefaultBudget = 200000;
/// kDefaultBudget, or the value of REXCALC_BUDGET when set.
std::size_t default_budget();

/// Morphism of a conflated path lifted between the representatives of its end clouds.
MorphismMatrix conflated_path_morphism(const ConflatedGraph &c, const Path &p);
/// Evaluates a conflated path on one element of the first representative's bimodule.
BSElement apply_conflated_path(const ConflatedGraph &c, const Path &p, const BSElement &e);

/// Resolves conflated-vertex names: "s", "t", "c" (the unique vertex that is
/// neither, when there is one), a cloud member word, or a vertex index "#k".
int resolve_vertex(const ConflatedGraph &c, const std::string &name);
Path conflated_path(const ConflatedGraph &c, const std::vector<std::string> &names);

/// Two paths with equal endpoints whose morphisms differ, plus a basis element
/// on which they disagree.
struct FpcWitness {
  Path p;
  Path q;
  Mask column = 0;
  BSElement input;
  BSElement image_p;
  BSElement image_q;
};

struct FpcVerdict {
  Word element;
  std::size_t bound = 0;
  bool holds = true;
  std::optional<FpcWitness> counterexample;
  std::size_t states = 0;      // distinct (vertex, visited, matrix) prefixes explored
  std::size_t morphisms = 0;   // distinct matrices interned
};

/// Bounded Forking Path Conjecture check on the conflated graph of w: every pair
/// of complete paths of length <= max_len with the same endpoints must induce
/// the same morphism. `endpoints` restricts to one (start, end) vertex pair.
/// Throws BudgetExceeded when more than `budget` matrices are needed.
FpcVerdict check_fpc(const Word &w, std::size_t max_len,
                     std::optional<std::pair<int, int>> endpoints = std::nullopt,
                     std::size_t budget = default_budget());

/// Refined conjecture on w_{0,n}: paths (not necessarily complete) of length
/// <= max_len through both source and sink with equal endpoints agree.
FpcVerdict check_refined_conjecture(int n, std::size_t max_len, std::size_t budget = default_budget());

struct CounterexampleReport {
  std::vector<Word> v1;
  std::vector<Word> v2;
  BSElement x;
  BSElement image_v1;
  BSElement image_v2;
  /// The same paths read from the last vertex to the first.
  BSElement image_v1_reversed;
  BSElement image_v2_reversed;
  bool matrices_equal = true;
  /// dot_cap at both outer factors, in B_3B_2B_3.
  BSElement capped_v1;
  BSElement capped_v2;
};

CounterexampleReport reproduce_counterexample();

struct ZamReport {
  int n = 0;
  MorphismMatrix z;
  MorphismMatrix zbar;
  bool zzbarz = false;     // Z o Zbar o Z = Z
  bool zbarzzbar = false;  // Zbar o Z o Zbar = Zbar
  bool idempotent = false; // (Zbar o Z)^2 = Zbar o Z
  bool proper = false;     // Zbar o Z != Id
  bool ok() const { return zzbarz && zbarzzbar && idempotent && proper; }
};

ZamReport check_zam_identities(int n);

/// Cached oriented-path matrices on the conflated graph of w_{0,n}.
class DudUdu {
public:
  explicit DudUdu(int n);
  const ConflatedGraph &graph() const { return graph_; }
  int source() const { return s_; }
  int sink() const { return t_; }
  MorphismMatrix dud(int x, int y);
  MorphismMatrix udu(int x, int y);

private:
  const MorphismMatrix &straight(int from, int to, bool reverse);
  ConflatedGraph graph_;
  int s_ = 0;
  int t_ = 0;
  std::map<std::tuple<int, int, bool>, MorphismMatrix> cache_;
};

bool check_dud_udu(int n, int x, int y);

struct DudUduReport {
  int n = 0;
  std::size_t pairs = 0;
  std::vector<std::pair<int, int>> failures;
  bool dud_ts_is_zbar = false;
  bool udu_st_is_z = false;
  bool ok() const { return failures.empty() && dud_ts_is_zbar && udu_st_is_z; }
};

DudUduReport check_dud_udu_all(int n);

struct Equivalence {
  std::string name;
  Word element;
  Path lhs;
  Path rhs;
  bool expected_equal = true;
  bool equal = false;
  bool ok() const { return equal == expected_equal; }
};

std::vector<Equivalence> check_equivalence_lemmas();

enum class GraphShape { Point, Edge, Line3, Zam, Other };
std::string to_string(GraphShape s);
GraphShape classify_shape(const ConflatedGraph &c);

struct SweepRow {
  Word word;
  GraphShape shape = GraphShape::Other;
  GraphShape expected_shape = GraphShape::Other;
  bool expected_holds = true;
  FpcVerdict verdict;
  bool ok() const { return shape == expected_shape && verdict.holds == expected_holds; }
};

/// The elements of S_4 with their expected conflated graph shapes.
std::vector<std::pair<Word, GraphShape>> s4_table();

/// check_fpc over all of S_4. max_len = 0 selects max(9, 2|V|+4) per element.
std::vector<SweepRow> check_s4_sweep(std::size_t max_len = 0, std::size_t budget = default_budget());

struct FamilyReport {
  Word element;
  std::size_t line_length = 0;
  bool source_first = true; // E_1 is the source
  Path p;
  Path q;
  bool unequal = false;
  std::optional<Mask> column;
  BSElement input;
  BSElement image_p;
  BSElement image_q;
};

/// 12...(n-1)...21 of S_n.
Word family_word(int n);
/// Compares p = [E2,E1,E2,...,Em,...,E2] and q = [E2,...,Em,...,E1,E2] on the
/// line Gamma of family_word(n), column by column. E_1 is the source when
/// source_first, the sink otherwise.
FamilyReport check_family(int n, bool source_first = true);

/// [s,c,t,c,s,c] versus [s,c,t,c] on 12321 evaluated at 1(x)x2(x)1(x)1(x)1(x)1.
FamilyReport check_extra_counterexample();

} // namespace rexcalc

#endif
