#include "cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <regex>

#include "rexcalc/fpc.hpp"
#include "rexcalc/serialize.hpp"

namespace rexcalc::cli {
namespace {

struct RunConfig {
  int rank = 0;
  std::string word;
  std::size_t max_len = 0;
  std::string format = "text";
  std::optional<std::size_t> budget;
};

std::size_t budget_of(const RunConfig &cfg) { return cfg.budget ? *cfg.budget : default_budget(); }

// Splits a path spec on whitespace, commas and arrows.
std::vector<std::string> path_tokens(const std::string &spec) {
  static const std::regex sep(R"((\s|,|->|→)+)");
  std::vector<std::string> out;
  for (std::sregex_token_iterator it(spec.begin(), spec.end(), sep, -1), end; it != end; ++it)
    if (it->length() > 0) out.push_back(*it);
  return out;
}

RexGraph graph_of(const RunConfig &cfg) {
  const Word w = parse_word(cfg.word);
  int rank = cfg.rank ? cfg.rank : std::max(2, min_rank(w));
  if (rank < min_rank(w)) throw InvalidArgument("rank too small for word " + cfg.word);
  if (!is_reduced(w, rank)) throw InvalidArgument(cfg.word + " is not a reduced word");
  return build_rex_graph(w, rank);
}

int cmd_graph(const RunConfig &cfg, bool conflated, std::ostream &out) {
  const RexGraph g = graph_of(cfg);
  if (conflated) {
    const ConflatedGraph c = build_conflated(g);
    if (cfg.format == "dot") out << to_dot(c);
    else if (cfg.format == "json") out << to_json(c).dump(2) << '\n';
    else out << to_text(c);
  } else {
    if (cfg.format == "dot") out << to_dot(g);
    else if (cfg.format == "json") out << to_json(g).dump(2) << '\n';
    else out << to_text(g);
  }
  return kOk;
}

int cmd_eval(const RunConfig &cfg, bool conflated, const std::string &path_spec, const std::string &element_spec,
             std::ostream &out) {
  const RexGraph g = graph_of(cfg);
  const auto tokens = path_tokens(path_spec);
  if (conflated) {
    const ConflatedGraph c = build_conflated(g);
    Path p{GraphKind::Conflated, {}};
    if (tokens.empty()) p.vertices.push_back(c.cloud_of_word(parse_word(cfg.word)));
    else p = conflated_path(c, tokens);
    const BSElement x = parse_element_spec(c.representative(p.vertices.front()), g.rank(), element_spec);
    out << to_json(apply_conflated_path(c, p, x)).dump() << '\n';
    return kOk;
  }
  std::vector<Word> words;
  if (tokens.empty()) words.push_back(parse_word(cfg.word));
  for (const auto &t : tokens) {
    words.push_back(parse_word(t));
    if (!g.find(words.back())) throw InvalidArgument(t + " is not a reduced expression of " + cfg.word);
  }
  const BSElement x = parse_element_spec(words.front(), g.rank(), element_spec);
  out << to_json(apply_path(words, x)).dump() << '\n';
  return kOk;
}

int cmd_fpc(const RunConfig &cfg, std::ostream &out) {
  const RexGraph g = graph_of(cfg);
  const ConflatedGraph c = build_conflated(g);
  const std::size_t len = cfg.max_len ? cfg.max_len : default_max_len(c.vertex_count());
  const FpcVerdict v = check_fpc(parse_word(cfg.word), len, std::nullopt, budget_of(cfg));
  if (cfg.format == "json") {
    out << to_json(c, v).dump(2) << '\n';
  } else {
    out << word_to_string(v.element) << " maxLen=" << len << ": " << (v.holds ? "Holds" : "CounterexampleFound")
        << '\n';
    if (v.counterexample) {
      out << "  p = " << path_json(c, v.counterexample->p).dump() << "\n  q = "
          << path_json(c, v.counterexample->q).dump() << "\n  column " << v.counterexample->column << '\n';
    }
  }
  return v.holds ? kOk : kUnexpected;
}

std::string mark(bool ok) { return ok ? "ok" : "UNEXPECTED"; }

int verify_fpc_s4(const RunConfig &cfg, std::ostream &out) {
  const auto rows = check_s4_sweep(cfg.max_len, budget_of(cfg));
  bool all = true;
  json j = json::array();
  for (const auto &r : rows) {
    all = all && r.ok();
    if (cfg.format == "json") {
      const ConflatedGraph c = build_conflated(build_rex_graph(r.word, 4));
      json row = to_json(c, r.verdict);
      row["shape"] = to_string(r.shape);
      row["expected_shape"] = to_string(r.expected_shape);
      row["expected_holds"] = r.expected_holds;
      j.push_back(row);
    } else {
      out << (r.word.empty() ? std::string("e") : word_to_string(r.word)) << '\t' << to_string(r.shape) << '\t'
          << (r.verdict.holds ? "Holds" : "CounterexampleFound") << "\tmaxLen=" << r.verdict.bound << '\t'
          << mark(r.ok()) << '\n';
    }
  }
  if (cfg.format == "json") out << j.dump(2) << '\n';
  return all ? kOk : kUnexpected;
}

int verify_zam(const RunConfig &cfg, std::ostream &out) {
  const int n = cfg.rank ? cfg.rank : 4;
  const ZamReport z = check_zam_identities(n);
  const DudUduReport d = check_dud_udu_all(n);
  if (cfg.format == "json") {
    out << json{{"rank", n},
                {"Z o Zbar o Z = Z", z.zzbarz},
                {"Zbar o Z o Zbar = Zbar", z.zbarzzbar},
                {"(Zbar o Z)^2 = Zbar o Z", z.idempotent},
                {"Zbar o Z != Id", z.proper},
                {"DUD = UDU pairs", d.pairs},
                {"DUD = UDU failures", d.failures.size()},
                {"DUD_{t,s} = Zbar", d.dud_ts_is_zbar},
                {"UDU_{s,t} = Z", d.udu_st_is_z}}
               .dump(2)
        << '\n';
  } else {
    out << "rank " << n << '\n'
        << "  Z o Zbar o Z = Z          " << mark(z.zzbarz) << '\n'
        << "  Zbar o Z o Zbar = Zbar    " << mark(z.zbarzzbar) << '\n'
        << "  (Zbar o Z)^2 = Zbar o Z   " << mark(z.idempotent) << '\n'
        << "  Zbar o Z != Id            " << mark(z.proper) << '\n'
        << "  DUD = UDU on " << d.pairs << " pairs   " << mark(d.failures.empty()) << '\n'
        << "  DUD_{t,s} = Zbar          " << mark(d.dud_ts_is_zbar) << '\n'
        << "  UDU_{s,t} = Z             " << mark(d.udu_st_is_z) << '\n';
  }
  return z.ok() && d.ok() ? kOk : kUnexpected;
}

int verify_lemmas(const RunConfig &cfg, std::ostream &out) {
  bool all = true;
  json j = json::array();
  for (const auto &e : check_equivalence_lemmas()) {
    all = all && e.ok();
    if (cfg.format == "json") j.push_back({{"name", e.name}, {"equal", e.equal}, {"expected", e.expected_equal}});
    else out << e.name << '\t' << (e.equal ? "equal" : "different") << '\t' << mark(e.ok()) << '\n';
  }
  if (cfg.format == "json") out << j.dump(2) << '\n';
  return all ? kOk : kUnexpected;
}

json family_json(const FamilyReport &r) {
  json j{{"element", word_to_string(r.element)}, {"vertices", r.line_length}, {"unequal", r.unequal}};
  if (r.column) j["column"] = *r.column;
  j["input"] = to_json(r.input);
  j["image_p"] = to_json(r.image_p);
  j["image_q"] = to_json(r.image_q);
  return j;
}

int verify_family(const RunConfig &cfg, std::ostream &out) {
  if (!cfg.word.empty()) {
    // Manual mode: no expected verdict, the result is only reported.
    const RexGraph g = graph_of(cfg);
    const ConflatedGraph c = build_conflated(g);
    const std::size_t len = cfg.max_len ? cfg.max_len : default_max_len(c.vertex_count());
    const FpcVerdict v = check_fpc(parse_word(cfg.word), len, std::nullopt, budget_of(cfg));
    if (cfg.format == "json") out << to_json(c, v).dump(2) << '\n';
    else
      out << cfg.word << " (" << c.vertex_count() << " conflated vertices, maxLen=" << len
          << "): " << (v.holds ? "Holds" : "CounterexampleFound") << " [no expected value]\n";
    return kOk;
  }
  std::vector<int> ranks;
  if (cfg.rank) ranks.push_back(cfg.rank);
  else ranks = {4, 5, 6};
  bool all = true;
  json j = json::array();
  for (int n : ranks) {
    const FamilyReport r = check_family(n);
    all = all && r.unequal;
    if (cfg.format == "json") j.push_back(family_json(r));
    else
      out << word_to_string(r.element) << "\tf(p) " << (r.unequal ? "!=" : "==") << " f(q)"
          << (r.column ? "\tcolumn " + std::to_string(*r.column) : std::string()) << '\t' << mark(r.unequal) << '\n';
  }
  const FamilyReport extra = check_extra_counterexample();
  all = all && extra.unequal;
  if (cfg.format == "json") {
    j.push_back(family_json(extra));
    out << j.dump(2) << '\n';
  } else {
    out << "12321 [s,c,t,c,s,c] vs [s,c,t,c] at 1|x2|1|1|1|1\t" << (extra.unequal ? "differ" : "agree") << '\t'
        << mark(extra.unequal) << '\n';
  }
  return all ? kOk : kUnexpected;
}

int verify_refined(const RunConfig &cfg, std::ostream &out) {
  const int n = cfg.rank ? cfg.rank : 4;
  const std::size_t len = cfg.max_len ? cfg.max_len : 10;
  const FpcVerdict v = check_refined_conjecture(n, len, budget_of(cfg));
  const ConflatedGraph c = build_conflated(build_rex_graph(longest_element(n), n));
  if (cfg.format == "json") {
    out << to_json(c, v).dump(2) << '\n';
  } else {
    out << "refined conjecture, rank " << n << ", maxLen " << len << ": "
        << (v.holds ? "Holds" : "VIOLATED") << " (" << v.morphisms << " distinct morphisms)\n";
    if (v.counterexample)
      out << "  p = " << path_json(c, v.counterexample->p).dump() << "\n  q = "
          << path_json(c, v.counterexample->q).dump() << '\n';
  }
  return v.holds ? kOk : kUnexpected;
}

int verify_counterexample(const RunConfig &cfg, std::ostream &out) {
  const CounterexampleReport r = reproduce_counterexample();
  const bool caps_differ = !(r.capped_v1 == r.capped_v2);
  if (cfg.format == "json") {
    out << json{{"x", to_json(r.x)},
                {"f(v1)(x)", to_json(r.image_v1)},
                {"f(v2)(x)", to_json(r.image_v2)},
                {"reversed f(v1)(x)", to_json(r.image_v1_reversed)},
                {"reversed f(v2)(x)", to_json(r.image_v2_reversed)},
                {"matrices_equal", r.matrices_equal},
                {"capped f(v1)(x)", to_json(r.capped_v1)},
                {"capped f(v2)(x)", to_json(r.capped_v2)}}
               .dump(2)
        << '\n';
  } else {
    out << "x        = " << r.x.to_string() << '\n'
        << "f(v1)(x) = " << r.image_v1.to_string() << '\n'
        << "f(v2)(x) = " << r.image_v2.to_string() << '\n'
        << "matrices equal: " << (r.matrices_equal ? "yes" : "no") << '\n'
        << "capped f(v1)(x) = " << r.capped_v1.to_string() << '\n'
        << "capped f(v2)(x) = " << r.capped_v2.to_string() << '\n';
  }
  return !r.matrices_equal && caps_differ ? kOk : kUnexpected;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"rexcalc: reduced expression graphs, braid morphisms and forking path checks"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto *graph = app.add_subcommand("graph", "Print the expanded or conflated graph of a reduced word");
  bool conflated = false;
  graph->add_option("word", cfg.word, "Reduced word, e.g. 12321")->required();
  auto *expanded_flag = graph->add_flag("--expanded", "Expanded graph (default)");
  graph->add_flag("--conflated", conflated, "Conflated graph")->excludes(expanded_flag);
  graph->add_option("--format", cfg.format)->check(CLI::IsMember({"dot", "json", "text"}));
  graph->add_option("--rank", cfg.rank, "Rank n of S_n (default: smallest possible)");

  auto *eval = app.add_subcommand("eval", "Evaluate a path morphism on an element");
  std::string path_spec, element_spec;
  bool eval_conflated = false;
  eval->add_option("word", cfg.word, "Reduced word of the element")->required();
  eval->add_option("--path", path_spec, "Vertices separated by spaces, commas or ->")->required();
  eval->add_option("--element", element_spec, "Slot polynomials separated by ';'")->required();
  eval->add_flag("--conflated", eval_conflated, "Path vertices are clouds (s, t, c, member words, #k)");
  eval->add_option("--rank", cfg.rank);

  auto *fpc = app.add_subcommand("fpc", "Bounded forking path check for one element");
  fpc->add_option("word", cfg.word)->required();
  fpc->add_option("--max-len", cfg.max_len, "Longest path length in vertices (default 2|V|+4)");
  fpc->add_option("--budget", cfg.budget, "Maximum number of distinct path morphisms");
  fpc->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));
  fpc->add_option("--rank", cfg.rank);

  auto *verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  verify->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"fpc-s4", "zam", "lemmas", "family", "refined", "counterexample"}));
  verify->add_option("--rank", cfg.rank);
  verify->add_option("--max-len", cfg.max_len);
  verify->add_option("--word", cfg.word, "family: manual mode for an arbitrary element");
  verify->add_option("--budget", cfg.budget);
  verify->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));

  std::vector<const char *> argv{"rexcalc"};
  for (const auto &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (cfg.budget && *cfg.budget == 0) throw InvalidArgument("--budget must be positive");
    if (graph->parsed()) return cmd_graph(cfg, conflated, out);
    if (eval->parsed()) return cmd_eval(cfg, eval_conflated, path_spec, element_spec, out);
    if (fpc->parsed()) return cmd_fpc(cfg, out);
    if (suite == "fpc-s4") return verify_fpc_s4(cfg, out);
    if (suite == "zam") return verify_zam(cfg, out);
    if (suite == "lemmas") return verify_lemmas(cfg, out);
    if (suite == "family") return verify_family(cfg, out);
    if (suite == "refined") return verify_refined(cfg, out);
    return verify_counterexample(cfg, out);
  } catch (const BudgetExceeded &e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const InternalError &e) {
    err << "internal error: " << e.what() << '\n';
    return kUnexpected;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

} // namespace rexcalc::cli
