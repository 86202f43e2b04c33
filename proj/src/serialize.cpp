#include "rexcalc/serialize.hpp"

#include <sstream>

namespace rexcalc {

json word_json(const Word &w) { return json(w); }

json to_json(const BSElement &e) {
  json entries = json::array();
  for (const auto &[mask, c] : e.coeffs()) entries.push_back({{"mask", mask}, {"polynomial", c.to_string()}});
  return {{"schema", kElementSchema}, {"word", word_json(e.word())}, {"rank", e.rank()}, {"entries", entries}};
}

BSElement element_from_json(const json &j) {
  try {
    BSElement e(j.at("word").get<Word>(), j.at("rank").get<int>());
    for (const auto &entry : j.at("entries"))
      e.add_term(entry.at("mask").get<Mask>(), Polynomial::parse(e.rank(), entry.at("polynomial").get<std::string>()));
    return e;
  } catch (const json::exception &ex) {
    throw InvalidArgument(std::string("malformed element JSON: ") + ex.what());
  }
}

json to_json(const MorphismMatrix &m) {
  json entries = json::array();
  for (Mask col = 0; col < m.dimension(); ++col)
    for (const auto &[row, c] : m.column(col).coeffs())
      entries.push_back({{"row", row}, {"col", col}, {"polynomial", c.to_string()}});
  return {{"schema", kMatrixSchema},
          {"domain", word_json(m.domain())},
          {"codomain", word_json(m.codomain())},
          {"rank", m.rank()},
          {"entries", entries}};
}

json to_json(const RexGraph &g) {
  json vertices = json::array();
  for (const auto &w : g.vertices()) vertices.push_back(word_to_string(w));
  json edges = json::array();
  for (const auto &e : g.edges())
    edges.push_back({{"from", word_to_string(g.word(e.from))},
                     {"to", word_to_string(g.word(e.to))},
                     {"kind", e.kind == EdgeKind::Distant ? "distant" : "adjacent"},
                     {"move", e.move.to_string()}});
  return {{"schema", kGraphSchema},
          {"kind", "expanded"},
          {"rank", g.rank()},
          {"permutation", g.element().to_string()},
          {"vertices", vertices},
          {"edges", edges}};
}

json to_json(const ConflatedGraph &c) {
  json vertices = json::array();
  for (std::size_t v = 0; v < c.vertex_count(); ++v) {
    json members = json::array();
    for (int m : c.cloud(static_cast<int>(v)).members) members.push_back(word_to_string(c.rex().word(m)));
    vertices.push_back({{"label", c.label(static_cast<int>(v))}, {"members", members}});
  }
  json edges = json::array();
  for (const auto &e : c.edges())
    edges.push_back({{"from", c.label(e.from)},
                     {"to", c.label(e.to)},
                     {"via", {word_to_string(c.rex().word(e.word_from)), word_to_string(c.rex().word(e.word_to))}}});
  json j{{"schema", kGraphSchema},
         {"kind", "conflated"},
         {"rank", c.rank()},
         {"permutation", c.rex().element().to_string()},
         {"vertices", vertices},
         {"edges", edges}};
  const auto src = c.sources(), snk = c.sinks();
  j["source"] = src.size() == 1 ? json(c.label(src[0])) : json(nullptr);
  j["sink"] = snk.size() == 1 ? json(c.label(snk[0])) : json(nullptr);
  return j;
}

std::string to_text(const RexGraph &g) {
  std::ostringstream os;
  os << "expanded graph, " << g.vertex_count() << " vertices, " << g.count(EdgeKind::Distant) << " distant and "
     << g.count(EdgeKind::Adjacent) << " adjacent edges\n";
  for (const auto &w : g.vertices()) os << "  " << word_to_string(w) << '\n';
  for (const auto &e : g.edges())
    os << "  " << word_to_string(g.word(e.from)) << (e.kind == EdgeKind::Distant ? " -- " : " -> ")
       << word_to_string(g.word(e.to)) << '\n';
  return os.str();
}

std::string to_text(const ConflatedGraph &c) {
  std::ostringstream os;
  os << "conflated graph, " << c.vertex_count() << " vertices, " << c.edges().size() << " edges\n";
  for (std::size_t v = 0; v < c.vertex_count(); ++v) {
    os << "  " << c.label(static_cast<int>(v)) << " {";
    const auto &m = c.cloud(static_cast<int>(v)).members;
    for (std::size_t k = 0; k < m.size(); ++k) os << (k ? "," : "") << word_to_string(c.rex().word(m[k]));
    os << "}\n";
  }
  for (const auto &e : c.edges()) os << "  " << c.label(e.from) << " -> " << c.label(e.to) << '\n';
  return os.str();
}

json path_json(const ConflatedGraph &c, const Path &p) {
  json out = json::array();
  for (int v : p.vertices) out.push_back(c.label(v));
  return out;
}

json to_json(const ConflatedGraph &c, const FpcVerdict &v) {
  json j{{"schema", kVerdictSchema},
         {"element", word_to_string(v.element)},
         {"bound", v.bound},
         {"holds", v.holds},
         {"states", v.states},
         {"morphisms", v.morphisms}};
  if (v.counterexample) {
    const auto &w = *v.counterexample;
    j["counterexample"] = {{"p", path_json(c, w.p)},     {"q", path_json(c, w.q)},
                           {"column", w.column},         {"input", to_json(w.input)},
                           {"image_p", to_json(w.image_p)}, {"image_q", to_json(w.image_q)}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

BSElement parse_element_spec(const Word &word, int rank, std::string_view spec) {
  std::vector<Polynomial> slots;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = spec.find(';', start);
    slots.push_back(Polynomial::parse(rank, spec.substr(start, end == std::string_view::npos ? end : end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return from_tensor(word, rank, slots);
}

} // namespace rexcalc
