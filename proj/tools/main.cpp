#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "shcrystal/acceptance.hpp"
#include "shcrystal/axiom_verifier.hpp"
#include "shcrystal/crystal_graph.hpp"
#include "shcrystal/jeu_de_taquin.hpp"
#include "shcrystal/lattice_walk.hpp"
#include "shcrystal/mixed_insertion.hpp"
#include "shcrystal/unprimed_operators.hpp"

using namespace shc;

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kVerificationFailed = 2;
constexpr int kUsage = 64;

// Reported as exit code 2 rather than a domain error.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string show(Point p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

std::string show(const std::optional<Word>& w) { return w ? w->str() : "∅"; }

// A representative as typed, without canonicalizing.
std::string raw(const LetterString& s) {
  std::string out;
  for (Letter l : s) out += l.str();
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Rows separated by newlines or '/'.
ShiftedTableau parse_tableau(std::string text) {
  for (char& ch : text)
    if (ch == '/') ch = '\n';
  ShiftedTableau t = ShiftedTableau::parse(text);
  if (!is_semistandard(t)) throw std::invalid_argument("not a semistandard tableau in canonical form");
  return t;
}

bool looks_like_tableau(const std::string& text) {
  return text.find_first_of("/.\n") != std::string::npos;
}

Cell parse_cell(const std::string& text) {
  int r = 0, c = 0;
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> r >> comma >> c) || comma != ',') throw std::invalid_argument("corner must look like r,c");
  return {r, c};
}

SkewShape parse_shape(const std::string& outer, const std::string& inner) {
  return SkewShape(StrictPartition::parse(outer), StrictPartition::parse(inner));
}

void print_path(const SlideRecord& rec) {
  std::cout << "path";
  for (Cell c : rec.path) std::cout << " (" << c.row << "," << c.col << ")";
  std::cout << "\n";
  if (rec.special_prime_applied) std::cout << "diagonal prime change\n";
}

struct Options {
  std::string word, tableau, kind = "f", dir = "f", corner, outer, inner, format = "text", policy = "top-right";
  std::string graph, graph2, output;
  int i = 1, n = 2, power = 1, max_size = 0;
  std::uint64_t seed = 20240601;
  bool trace = false, p_variant = false;
};

int cmd_walk(const Options& o) {
  LatticeWalk lw = walk(subword(Word::parse(o.word), o.i));
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["steps"] = nlohmann::ordered_json::array();
    for (Step s : lw.steps) j["steps"].push_back(step_name(s));
    j["points"] = nlohmann::ordered_json::array();
    for (Point p : lw.points) j["points"].push_back({p.x, p.y});
    j["endpoint"] = {lw.endpoint().x, lw.endpoint().y};
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::cout << "steps";
  for (Step s : lw.steps) std::cout << " " << step_name(s);
  std::cout << "\npoints";
  for (Point p : lw.points) std::cout << " " << show(p);
  std::cout << "\nendpoint " << show(lw.endpoint()) << "\n";
  return kOk;
}

int cmd_op(const Options& o) {
  Word w = Word::parse(o.word);
  const bool primed = o.kind == "fprime" || o.kind == "eprime";
  const Dir d = o.kind == "f" || o.kind == "fprime" ? Dir::Lower : Dir::Raise;
  std::optional<Word> cur = w;
  for (int k = 0; k < o.power && cur; ++k) cur = apply_operator(*cur, o.i, d, primed);
  std::cout << show(cur) << "\n";
  return kOk;
}

int cmd_criticals(const Options& o) {
  Word w = Word::parse(o.word);
  Restriction r = restrict_to(w, o.i);
  const Dir d = o.dir == "f" ? Dir::Lower : Dir::Raise;
  auto all = find_criticals(r.sub, d);
  auto fin = final_critical(r.sub, d);
  for (const CriticalSubstring& c : all) {
    const bool is_final = fin && fin->kind == c.kind && fin->start == c.start && fin->length == c.length;
    std::cout << (is_final ? "* " : "  ") << kind_name(c.kind) << " positions " << r.positions[c.start] + 1 << "-"
              << r.positions[c.start + c.length - 1] + 1 << " at " << show(c.location) << " in "
              << raw(c.representative) << "\n";
  }
  if (all.empty()) std::cout << "none\n";
  return kOk;
}

int cmd_rectify(const Options& o) {
  ShiftedTableau t = looks_like_tableau(o.tableau) ? parse_tableau(o.tableau) : diagonal_tableau(Word::parse(o.tableau));
  const RectifyPolicy p = o.policy == "bottom-left" ? RectifyPolicy::BottomLeft : RectifyPolicy::TopRight;
  std::cout << rectify(t, p).str();
  return kOk;
}

int cmd_slide(const Options& o) {
  ShiftedTableau t = parse_tableau(o.tableau);
  Cell c = parse_cell(o.corner);
  auto [out, rec] = o.dir == "in" ? inner_slide(t, c) : outer_slide(t, c);
  std::cout << out.str();
  print_path(rec);
  return kOk;
}

int cmd_rsk(const Options& o) {
  Word w = Word::parse(o.word);
  if (o.trace) {
    for (std::size_t k = 1; k <= w.size(); ++k) {
      LetterString prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
      RSKResult step = shifted_rsk(Word(prefix));
      const InsertionStep& last = step.steps.back();
      std::cout << "insert " << w[k - 1].str() << " -> cell (" << last.cell.row << "," << last.cell.col << ")"
                << (last.schensted ? "" : " column bump") << "\n"
                << step.P.str();
    }
    std::cout << "\n";
  }
  RSKResult r = shifted_rsk(w);
  std::cout << "P\n" << r.P.str() << "Q\n" << r.Q.str();
  return kOk;
}

int cmd_crystal(const Options& o) {
  CrystalGraph g = build_crystal(parse_shape(o.outer, o.inner), o.n);
  if (o.format == "dot") {
    std::cout << to_dot(g);
  } else if (o.format == "json") {
    std::cout << to_json(g);
  } else {
    std::cout << g.size() << " vertices, " << g.edges.size() << " edges\n";
    for (int v = 0; v < g.size(); ++v) {
      std::cout << v << " " << g.words[v].str() << " wt";
      for (int x : g.weights[v]) std::cout << " " << x;
      std::cout << "\n";
    }
    for (const CrystalEdge& e : g.edges)
      std::cout << e.src << " -" << e.i << (e.primed ? "'" : "") << "-> " << e.dst << "\n";
  }
  return kOk;
}

int cmd_lr(const Options& o) {
  LRTable t = lr_coefficients(parse_shape(o.outer, o.inner), o.n);
  for (const auto& [nu, f] : t.by_components) std::cout << "(" << nu.str() << ") " << f << "\n";
  if (!t.agree()) throw VerificationFailure("component count disagrees with the LR tableau count");
  return kOk;
}

int cmd_schurq(const Options& o) {
  SkewShape s = parse_shape(o.outer, o.inner);
  std::cout << (o.p_variant ? schur_p(s, o.n) : schur_q(s, o.n)).str() << "\n";
  return kOk;
}

int cmd_verify(const Options& o) {
  LabeledGraph g = graph_from_json(read_file(o.graph));
  bool ok = true;
  for (const AxiomReport& r : check_all(g)) {
    ok = ok && r.pass;
    std::cout << r.axiom << " " << (r.pass ? "PASS" : "FAIL") << "\n";
    for (const std::string& w : r.witnesses) std::cout << "  " << w << "\n";
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_isomorphism(const Options& o) {
  LabeledGraph g = graph_from_json(read_file(o.graph)), h = graph_from_json(read_file(o.graph2));
  Isomorphism iso = canonical_isomorphism(g, h);
  if (!iso.ok) {
    std::cout << "no isomorphism: " << iso.witness << "\n";
    return kVerificationFailed;
  }
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (int v = 0; v < g.size(); ++v) j.push_back({{"g", g.id(v)}, {"h", h.id(iso.map[v])}});
  if (o.output.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(o.output);
    if (!out) throw std::invalid_argument("cannot write " + o.output);
    out << j.dump(2) << "\n";
    std::cout << "wrote " << g.size() << " pairs to " << o.output << "\n";
  }
  return kOk;
}

int cmd_selftest(const Options& o) {
  AcceptanceOptions opt;
  opt.max_size = o.max_size;
  opt.seed = o.seed;
  auto results = run_acceptance(opt, [](const CriterionResult& r) { std::cout << r.line() << std::endl; });
  return acceptance_exit_code(results) == 0 ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Shifted tableau crystals: lattice walks, operators, insertion and axiom checks"};
  app.require_subcommand(1);

  auto* walk_cmd = app.add_subcommand("walk", "lattice walk of a word");
  walk_cmd->add_option("word", o.word)->required();
  walk_cmd->add_option("--i", o.i, "index i of the (i,i+1) walk");
  walk_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* op_cmd = app.add_subcommand("op", "apply F, E, F' or E'");
  op_cmd->add_option("word", o.word)->required();
  op_cmd->add_option("--kind", o.kind)->check(CLI::IsMember({"f", "e", "fprime", "eprime"}));
  op_cmd->add_option("--i", o.i)->check(CLI::PositiveNumber);
  op_cmd->add_option("--power", o.power, "apply repeatedly")->check(CLI::NonNegativeNumber);

  auto* crit_cmd = app.add_subcommand("criticals", "critical substrings of a word");
  crit_cmd->add_option("word", o.word)->required();
  crit_cmd->add_option("--dir", o.dir)->check(CLI::IsMember({"f", "e"}));
  crit_cmd->add_option("--i", o.i)->check(CLI::PositiveNumber);

  auto* rect_cmd = app.add_subcommand("rectify", "rectify a tableau (rows split by '/') or a word");
  rect_cmd->add_option("tableau", o.tableau)->required();
  rect_cmd->add_option("--policy", o.policy)->check(CLI::IsMember({"top-right", "bottom-left"}));

  auto* slide_cmd = app.add_subcommand("slide", "one jeu de taquin slide");
  slide_cmd->add_option("tableau", o.tableau)->required();
  slide_cmd->add_option("--corner", o.corner, "row,col (0-based)")->required();
  slide_cmd->add_option("--dir", o.dir)->check(CLI::IsMember({"in", "out"}))->required();

  auto* rsk_cmd = app.add_subcommand("rsk", "mixed insertion");
  rsk_cmd->add_option("word", o.word)->required();
  rsk_cmd->add_flag("--trace", o.trace, "print P after every letter");

  auto shape_opts = [&](CLI::App* c) {
    c->add_option("--outer", o.outer)->required();
    c->add_option("--inner", o.inner);
    c->add_option("--n", o.n, "alphabet bound")->check(CLI::PositiveNumber);
  };
  auto* crystal_cmd = app.add_subcommand("crystal", "crystal graph on a skew shape");
  shape_opts(crystal_cmd);
  crystal_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "dot"}));
  auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficients");
  shape_opts(lr_cmd);
  auto* q_cmd = app.add_subcommand("schurq", "Schur Q polynomial");
  shape_opts(q_cmd);
  q_cmd->add_flag("--p", o.p_variant, "Schur P instead");

  auto* verify_cmd = app.add_subcommand("verify-axioms", "check the local axioms on a graph file");
  verify_cmd->add_option("graph", o.graph)->required();
  auto* iso_cmd = app.add_subcommand("isomorphism", "canonical isomorphism between two graph files");
  iso_cmd->add_option("first", o.graph)->required();
  iso_cmd->add_option("second", o.graph2)->required();
  iso_cmd->add_option("--output", o.output, "mapping file");

  auto* self_cmd = app.add_subcommand("selftest", "run the acceptance criteria");
  self_cmd->add_option("--max-size", o.max_size)->check(CLI::NonNegativeNumber);
  self_cmd->add_option("--seed", o.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  const std::pair<CLI::App*, int (*)(const Options&)> table[] = {
      {walk_cmd, cmd_walk},     {op_cmd, cmd_op},         {crit_cmd, cmd_criticals},  {rect_cmd, cmd_rectify},
      {slide_cmd, cmd_slide},   {rsk_cmd, cmd_rsk},       {crystal_cmd, cmd_crystal}, {lr_cmd, cmd_lr},
      {q_cmd, cmd_schurq},      {verify_cmd, cmd_verify}, {iso_cmd, cmd_isomorphism}, {self_cmd, cmd_selftest},
  };
  try {
    for (auto [cmd, fn] : table)
      if (cmd->parsed()) return fn(o);
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kUsage;
}
