#ifndef REXCALC_SERIALIZE_HPP
#define REXCALC_SERIALIZE_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "rexcalc/braidmor.hpp"
#include "rexcalc/fpc.hpp"
#include "rexcalc/rexgraph.hpp"

namespace rexcalc {

using json = nlohmann::ordered_json;

inline constexpr const char *kElementSchema = "rexcalc.element/1";
inline constexpr const char *kMatrixSchema = "rexcalc.matrix/1";
inline constexpr const char *kGraphSchema = "rexcalc.graph/1";
inline constexpr const char *kVerdictSchema = "rexcalc.verdict/1";

json word_json(const Word &w);

/// {schema, word, rank, entries: [{mask, polynomial}]}, masks ascending.
json to_json(const BSElement &e);
BSElement element_from_json(const json &j);

/// {schema, domain, codomain, rank, entries: [{row, col, polynomial}]}, sparse, sorted by (col, row).
json to_json(const MorphismMatrix &m);

json to_json(const RexGraph &g);
json to_json(const ConflatedGraph &c);
std::string to_text(const RexGraph &g);
std::string to_text(const ConflatedGraph &c);

json path_json(const ConflatedGraph &c, const Path &p);
json to_json(const ConflatedGraph &c, const FpcVerdict &v);

/// Element from slot polynomials separated by ';': "1;1;1;x3;1;1" has word.size()+1 slots.
BSElement parse_element_spec(const Word &word, int rank, std::string_view spec);

} // namespace rexcalc

#endif
