// Command line driver for graph products of cyclic groups: canonical
// word arithmetic, centralizers, automorphism generator families, and
// small brute-force enumerations.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphprod/json_io.hpp"
#include "graphprod/oracle.hpp"

using nlohmann::json;
using namespace graphprod;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitNotFound = 2;

struct CliConfig {
  std::string graph_path;
  std::string format = "text";
  int depth = 8;
  int radius = 4;
  unsigned seed = 0;
  bool json_out() const { return format == "json"; }
};

bool log_enabled() {
  const char* env = std::getenv("GRAPHPROD_LOG");
  return env && *env;
}

void log_line(const std::string& msg) {
  if (log_enabled()) std::cerr << "[graphprod] " << msg << "\n";
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("bad JSON in '" + path + "': " + e.what());
  }
  return j;
}

Automorphism automorphism_from_file(const GraphRef& g, const std::string& path) {
  LoadedMap loaded = vertex_map_from_json(g, load_json_file(path));
  if (!loaded.inverse)
    throw Error("automorphism file '" + path + "' has no \"inverse\" block");
  return Automorphism(g, loaded.images, *loaded.inverse);
}

int cmd_normalize(const CliConfig& cfg, const std::string& word) {
  GraphRef g = load_graph_file(cfg.graph_path);
  GroupElement e = parse_element(g, word);
  if (cfg.json_out())
    emit(json{{"word", e.str()},
              {"length", e.length()},
              {"cyclically_reduced", is_cyclically_reduced(e)}});
  else
    std::cout << e.str() << "\n";
  return kExitOk;
}

int cmd_centralizer(const CliConfig& cfg, const std::string& word) {
  GraphRef g = load_graph_file(cfg.graph_path);
  GroupElement e = parse_element(g, word);
  CentralizerPresentation pres = centralizer(e);
  if (cfg.json_out()) {
    emit(centralizer_to_json(pres));
    return kExitOk;
  }
  if (pres.whole_group) {
    std::cout << "C(1) = G (whole group)\n";
    return kExitOk;
  }
  std::cout << "basic form:";
  for (const auto& f : pres.basic.factors)
    std::cout << " (" << f.root.str() << ")^" << f.exponent;
  std::cout << "\n";
  std::cout << "C(" << e.str() << ") = ";
  for (const auto& f : pres.factors) std::cout << "<" << f.str() << "> x ";
  std::cout << "<";
  bool first = true;
  for (int z : pres.link.members()) {
    if (!first) std::cout << " ";
    first = false;
    std::cout << g->name(z);
  }
  std::cout << ">";
  if (!pres.conjugator.is_identity())
    std::cout << "  conjugated by " << pres.conjugator.str();
  std::cout << "\n";
  return kExitOk;
}

int cmd_rank(const CliConfig& cfg, const std::string& word) {
  GraphRef g = load_graph_file(cfg.graph_path);
  int r = rank(parse_element(g, word));
  if (cfg.json_out())
    emit(json{{"rank", r}});
  else
    std::cout << r << "\n";
  return kExitOk;
}

int cmd_generators(const CliConfig& cfg, const std::string& which) {
  GraphRef g = load_graph_file(cfg.graph_path);
  std::vector<Generator> gens;
  json extra;
  if (which == "all") {
    gens = generating_set(g);
  } else if (which == "star") {
    gens = star_generating_set(g);
  } else if (which == "one") {
    gens = subgroup_one_set(g);
  } else if (which == "whitehead") {
    gens = whitehead_type_I(g);
    WhiteheadCoverage cov = check_generators_in_whitehead(g);
    auto all = generating_set(g);
    json table = json::array();
    for (const auto& wit : cov.witnesses)
      table.push_back(json{{"generator", describe(*g, all[wit.generator_index].desc)},
                           {"realized_as", wit.how}});
    extra = json{{"covered", cov.all_covered}, {"witnesses", table}};
  } else {
    throw Error("unknown generator family '" + which +
                "' (expected all|star|one|whitehead)");
  }
  if (cfg.json_out()) {
    json arr = json::array();
    for (const auto& gen : gens) arr.push_back(generator_to_json(*g, gen));
    json out{{"count", gens.size()}, {"generators", arr}};
    if (!extra.is_null()) out["whitehead"] = extra;
    emit(out);
    return kExitOk;
  }
  for (const auto& gen : gens) std::cout << describe(*g, gen.desc) << "\n";
  std::cout << gens.size() << " generator(s)\n";
  if (!extra.is_null()) {
    std::cout << (extra["covered"].get<bool>()
                      ? "every generator is realized by a Whitehead automorphism"
                      : "NOT all generators realized")
              << "\n";
    for (const auto& row : extra["witnesses"])
      std::cout << "  " << row["generator"].get<std::string>() << "  <-  "
                << row["realized_as"].get<std::string>() << "\n";
  }
  return kExitOk;
}

int cmd_apply(const CliConfig& cfg, const std::string& auto_path,
              const std::string& word) {
  GraphRef g = load_graph_file(cfg.graph_path);
  LoadedMap loaded = vertex_map_from_json(g, load_json_file(auto_path));
  auto rep = is_well_defined(*g, loaded.images);
  if (!rep.ok) throw Error("map is not well-defined: " + rep.witness);
  GroupElement image = apply_map(loaded.images, parse_element(g, word));
  if (cfg.json_out())
    emit(json{{"word", image.str()}});
  else
    std::cout << image.str() << "\n";
  return kExitOk;
}

int cmd_check(const CliConfig& cfg, const std::string& auto_path) {
  GraphRef g = load_graph_file(cfg.graph_path);
  LoadedMap loaded = vertex_map_from_json(g, load_json_file(auto_path));
  auto rep = is_well_defined(*g, loaded.images);
  json out{{"well_defined", rep.ok}};
  if (!rep.ok) out["witness"] = rep.witness;
  if (rep.ok && loaded.inverse) {
    Automorphism aut(g, loaded.images, *loaded.inverse);
    json conj = json::array(), simple = json::array();
    for (int v : conjugating_set(aut).members()) conj.push_back(g->name(v));
    for (int v : simple_set(aut).members()) simple.push_back(g->name(v));
    out["conjugating_set"] = conj;
    out["simple_set"] = simple;
    out["quasi_simple"] = is_quasi_simple(aut);
    auto gamma = induced_graph_automorphism(aut);
    json gmap = json::object();
    for (int v = 0; v < g->vertex_count(); ++v) gmap[g->name(v)] = g->name(gamma[v]);
    out["induced_graph_automorphism"] = gmap;
  } else if (rep.ok) {
    out["note"] = "no inverse supplied; set-level reports need one";
  }
  if (cfg.json_out()) {
    emit(out);
  } else {
    std::cout << "well-defined: " << (rep.ok ? "yes" : "no") << "\n";
    if (!rep.ok) std::cout << "  witness: " << rep.witness << "\n";
    if (out.contains("conjugating_set")) {
      std::cout << "conjugating set: " << out["conjugating_set"].dump() << "\n";
      std::cout << "simple set: " << out["simple_set"].dump() << "\n";
      std::cout << "quasi-simple: "
                << (out["quasi_simple"].get<bool>() ? "yes" : "no") << "\n";
      std::cout << "induced graph automorphism: "
                << out["induced_graph_automorphism"].dump() << "\n";
    }
  }
  return kExitOk;
}

int cmd_decompose(const CliConfig& cfg, const std::string& auto_path) {
  GraphRef g = load_graph_file(cfg.graph_path);
  Automorphism target = automorphism_from_file(g, auto_path);
  auto gens = generating_set(g);
  std::vector<Automorphism> pool;
  std::vector<std::string> labels;
  for (const auto& gen : gens) {
    pool.push_back(gen.aut);
    labels.push_back(describe(*g, gen.desc));
    pool.push_back(inverse(gen.aut));
    labels.push_back(describe(*g, gen.desc) + "^-1");
  }
  log_line("searching words over " + std::to_string(pool.size()) +
           " generators to depth " + std::to_string(cfg.depth));
  auto word = decompose_over_generators(target, pool, cfg.depth);
  if (!word) {
    if (cfg.json_out())
      emit(json{{"found", false}, {"depth", cfg.depth}});
    else
      std::cout << "not found at depth <= " << cfg.depth << "\n";
    return kExitNotFound;
  }
  json arr = json::array();
  for (int idx : *word) arr.push_back(labels[idx]);
  if (cfg.json_out()) {
    emit(json{{"found", true}, {"word", arr}});
  } else {
    if (word->empty()) std::cout << "identity\n";
    for (int idx : *word) std::cout << labels[idx] << "\n";
  }
  return kExitOk;
}

int cmd_ball(const CliConfig& cfg) {
  GraphRef g = load_graph_file(cfg.graph_path);
  Ball ball = enumerate_ball(g, cfg.radius);
  if (cfg.json_out())
    emit(json{{"radius", cfg.radius}, {"size", ball.elements.size()}});
  else
    std::cout << ball.elements.size() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph products of finitely generated cyclic groups"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  CliConfig cfg;
  app.add_option("--graph", cfg.graph_path, "graph JSON file")->required();
  app.add_option("--format", cfg.format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--depth", cfg.depth, "composition search depth")
      ->check(CLI::PositiveNumber);
  app.add_option("--radius", cfg.radius, "ball radius")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomized helpers");

  std::string word, which = "all", auto_path;
  auto* normalize = app.add_subcommand("normalize", "canonical form of a word");
  normalize->add_option("word", word, "word to normalize");
  auto* cent = app.add_subcommand("centralizer", "centralizer presentation");
  cent->add_option("word", word)->required();
  auto* rank_cmd = app.add_subcommand("rank", "rank of an element");
  rank_cmd->add_option("word", word)->required();
  auto* gens = app.add_subcommand("generators", "generator families");
  gens->add_option("--which", which, "all|star|one|whitehead");
  auto* apply = app.add_subcommand("apply", "apply an automorphism to a word");
  apply->add_option("--auto", auto_path, "automorphism JSON file")->required();
  apply->add_option("word", word)->required();
  auto* check = app.add_subcommand("check", "classify an automorphism");
  check->add_option("--auto", auto_path)->required();
  auto* decomp = app.add_subcommand("decompose", "write as a generator word");
  decomp->add_option("--auto", auto_path)->required();
  auto* ball = app.add_subcommand("ball", "count elements of a Cayley ball");

  CLI11_PARSE(app, argc, argv);

  try {
    if (normalize->parsed()) return cmd_normalize(cfg, word);
    if (cent->parsed()) return cmd_centralizer(cfg, word);
    if (rank_cmd->parsed()) return cmd_rank(cfg, word);
    if (gens->parsed()) return cmd_generators(cfg, which);
    if (apply->parsed()) return cmd_apply(cfg, auto_path, word);
    if (check->parsed()) return cmd_check(cfg, auto_path);
    if (decomp->parsed()) return cmd_decompose(cfg, auto_path);
    if (ball->parsed()) return cmd_ball(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}
