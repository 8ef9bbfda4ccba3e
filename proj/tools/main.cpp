#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "gramholes/diagrams.hpp"
#include "gramholes/gram.hpp"
#include "gramholes/parallel.hpp"
#include "gramholes/symdet.hpp"
#include "gramholes/verify.hpp"

using namespace gramholes;

namespace {

constexpr std::size_t kDefaultDetCap = 100;

struct JobConfig {
  std::string command;
  int n = 1;
  int k = 2;
  std::string engine = "auto";
  std::string subst;
  int jobs = default_jobs();
  std::string out;
  std::string format = "text";
  std::size_t cap = 0;  // 0: command default
  std::string from_file;
  std::vector<std::string> claims;
  bool n_given = false;
};

struct BadArgs : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// "x1=0,x{1,2}=d-1": commas inside braces or parentheses belong to the value or name
std::map<std::string, Polynomial> parse_subst(const std::string& text, const VarSetPtr& vars) {
  std::map<std::string, Polynomial> out;
  std::vector<std::string> items;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '{' || c == '(') ++depth;
    if (c == '}' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      items.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) items.push_back(cur);
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw BadArgs("substitution '" + item + "' lacks '='");
    std::string name = item.substr(0, eq);
    std::erase(name, ' ');
    if (!vars->index_of(name)) throw BadArgs("unknown variable '" + name + "'");
    out[name] = Polynomial::parse(vars, item.substr(eq + 1));
  }
  return out;
}

void emit(const JobConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw std::runtime_error("cannot write " + cfg.out);
  f << text;
}

GramMatrix load_or_build(const JobConfig& cfg, std::size_t cap) {
  if (!cfg.from_file.empty()) {
    std::ifstream f(cfg.from_file);
    if (!f) throw BadArgs("cannot read " + cfg.from_file);
    GramMatrix g = gram_from_json(nlohmann::json::parse(f));
    if (g.dim() > cap)
      throw ResourceCapError("matrix dimension " + std::to_string(g.dim()) + " exceeds cap " + std::to_string(cap));
    return g;
  }
  return gram_matrix(cfg.n, cfg.k, cap, cfg.jobs);
}

std::string matrix_text(const PolyMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) os << (j ? "\t" : "") << m.at(i, j).to_string();
    os << '\n';
  }
  return os.str();
}

nlohmann::json matrix_json(const PolyMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

int cmd_enum(const JobConfig& cfg) {
  const auto ds = enumerate_diagrams(cfg.n, cfg.k);
  if (cfg.format == "json") {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& d : ds) a.push_back(diagram_to_json(d));
    emit(cfg, a.dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (std::size_t i = 0; i < ds.size(); ++i) os << i << '\t' << to_string(ds[i]) << '\n';
    emit(cfg, os.str());
  }
  return 0;
}

int cmd_gram(const JobConfig& cfg) {
  const GramMatrix g = load_or_build(cfg, cfg.cap ? cfg.cap : kDefaultBuildCap);
  if (cfg.format == "json")
    emit(cfg, gram_to_json(g).dump(1) + "\n");
  else if (cfg.format == "csv")
    emit(cfg, gram_to_csv(g));
  else
    emit(cfg, matrix_text(g.to_poly()));
  return 0;
}

int cmd_subst(const JobConfig& cfg) {
  const GramMatrix g = load_or_build(cfg, cfg.cap ? cfg.cap : kDefaultBuildCap);
  const PolyMatrix m = g.to_poly().substitute(parse_subst(cfg.subst, g.vars));
  if (cfg.format == "json")
    emit(cfg, nlohmann::json{{"n", g.n}, {"k", g.k}, {"substitutions", cfg.subst}, {"entries", matrix_json(m)}}
                      .dump(1) +
                  "\n");
  else
    emit(cfg, matrix_text(m));
  return 0;
}

int cmd_det(const JobConfig& cfg) {
  const GramMatrix g = load_or_build(cfg, cfg.cap ? cfg.cap : kDefaultDetCap);
  PolyMatrix m = g.to_poly();
  if (!cfg.subst.empty()) m = m.substitute(parse_subst(cfg.subst, g.vars));
  const DetResult r = determinant(m, parse_engine(cfg.engine), cfg.jobs);
  if (cfg.format == "json") {
    const std::string id = cfg.from_file.empty()
                               ? "G(n=" + std::to_string(g.n) + ",k=" + std::to_string(g.k) + ")"
                               : cfg.from_file;
    emit(cfg, nlohmann::json{{"matrix", id},
                             {"substitutions", cfg.subst},
                             {"engine", engine_name(r.engine)},
                             {"seconds", r.seconds},
                             {"terms", r.det.size()},
                             {"det", r.det.to_string()}}
                      .dump(1) +
                  "\n");
  } else {
    emit(cfg, r.det.to_string() + "\n");
  }
  return 0;
}

int cmd_blocks(const JobConfig& cfg) {
  if (diagram_count(cfg.n, 2) > (cfg.cap ? cfg.cap : kDefaultBuildCap))
    throw ResourceCapError("Gram dimension exceeds cap");
  const auto blocks = catalan_blocks(cfg.n, 2);
  nlohmann::json a = nlohmann::json::array();
  std::ostringstream os;
  Polynomial product = Polynomial::constant(VarSet::for_holes(2), Int(1));
  for (const auto& b : blocks) {
    const DetResult r = determinant(b.matrix, parse_engine(cfg.engine), cfg.jobs);
    product *= r.det;
    a.push_back({{"state", b.state.matching}, {"size", b.diagrams.size()}, {"det", r.det.to_string()}});
    os << to_string(b.state) << "\t" << b.diagrams.size() << "x" << b.diagrams.size() << "\t" << r.det.size()
       << " terms\n";
  }
  if (cfg.format == "json") {
    emit(cfg, nlohmann::json{{"n", cfg.n}, {"blocks", a}, {"product", product.to_string()}}.dump(1) + "\n");
  } else {
    os << "product: " << product.size() << " terms, degree " << product.total_degree() << '\n';
    emit(cfg, os.str());
  }
  return 0;
}

int cmd_delta(const JobConfig& cfg) {
  const auto e = delta_diag(cfg.n);
  if (cfg.format == "json")
    emit(cfg, nlohmann::json{{"n", cfg.n}, {"alpha", e.alpha}, {"beta", e.beta}, {"pure", e.pure}}.dump() + "\n");
  else
    emit(cfg, "d^" + std::to_string(e.alpha) + "*z1^" + std::to_string(e.beta) + "\n");
  return e.pure ? 0 : 1;
}

int cmd_reduce(const JobConfig& cfg) {
  const EmbedReduction r = embed_reduce(cfg.n, cfg.jobs);
  nlohmann::json gbar = nlohmann::json::array();
  for (const auto& row : r.g_bar) {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& e : row) jr.push_back({{"numerator", e.numerator.to_string()}, {"denom_power", e.denom_power}});
    gbar.push_back(jr);
  }
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : r.steps) steps.push_back({{"row", s.row}, {"source", s.source}, {"scalar", s.scalar_name}});
  nlohmann::json order = nlohmann::json::array();
  for (const auto& d : r.order) order.push_back(diagram_to_json(d));
  if (cfg.format == "json") {
    emit(cfg, nlohmann::json{{"n", r.n},
                             {"m", r.m},
                             {"sign", r.sign},
                             {"order", order},
                             {"steps", steps},
                             {"row_denominator", r.row_denominator},
                             {"g_bar", gbar}}
                      .dump(1) +
                  "\n");
  } else {
    std::ostringstream os;
    os << "basis " << r.order.size() << ", embedded block " << r.m << ", reduced " << r.g_bar.size() << "x"
       << r.g_bar.size() << ", sign " << r.sign << "\nscalars:";
    for (const auto& s : r.steps) os << ' ' << s.scalar_name;
    os << "\n";
    for (const auto& row : r.g_bar) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        os << (j ? "\t" : "") << "(" << row[j].numerator.to_string() << ")";
        if (row[j].denom_power) os << "/(1-d^2)^" << row[j].denom_power;
      }
      os << '\n';
    }
    emit(cfg, os.str());
  }
  return 0;
}

int cmd_verify(const JobConfig& cfg) {
  Workbench wb(cfg.jobs);
  std::vector<VerificationReport> reports;
  std::vector<const ClaimInfo*> todo;
  if (cfg.claims.empty()) {
    for (const auto& c : claim_registry()) todo.push_back(&c);
  } else {
    for (const auto& id : cfg.claims) {
      const ClaimInfo* c = find_claim(id);
      if (!c) throw BadArgs("unknown claim '" + id + "'");
      todo.push_back(c);
    }
  }
  bool ok = true;
  for (const ClaimInfo* c : todo) {
    reports.push_back(c->run(cfg.n_given ? cfg.n : c->default_n, wb));
    if (reports.back().verdict == Verdict::kFail) {
      ok = false;
      std::cerr << "claim " << c->id << " failed: " << reports.back().witness.dump() << '\n';
    }
  }
  if (cfg.format == "json") {
    emit(cfg, reports_to_json(reports).dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << summary_table(reports);
    for (const auto& r : reports) os << r.claim << ": " << r.witness.dump() << '\n';
    emit(cfg, os.str());
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gram determinants of diagrams in a disk with holes"};
  app.require_subcommand(1);
  JobConfig cfg;

  auto common = [&](CLI::App* sub, bool with_k) {
    sub->add_option("--n", cfg.n, "number of chords")->check(CLI::Range(1, 16))->each([&](const std::string&) {
      cfg.n_given = true;
    });
    if (with_k) sub->add_option("--k", cfg.k, "number of holes")->check(CLI::Range(0, kMaxHoles));
    sub->add_option("--jobs", cfg.jobs, "worker threads (default GRAMHOLES_JOBS or 1)")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--format", cfg.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--cap", cfg.cap, "dimension cap override");
  };
  auto engine_opt = [&](CLI::App* sub) {
    sub->add_option("--engine", cfg.engine, "auto, bareiss or minors")
        ->check(CLI::IsMember({"auto", "bareiss", "minors"}));
  };

  auto* e = app.add_subcommand("enum", "list the diagram basis");
  common(e, true);
  auto* g = app.add_subcommand("gram", "build the Gram matrix");
  common(g, true);
  g->add_option("--from-file", cfg.from_file, "Gram matrix JSON to re-emit");
  auto* d = app.add_subcommand("det", "symbolic determinant");
  common(d, true);
  engine_opt(d);
  d->add_option("--subst", cfg.subst, "substitutions, e.g. x1=0,x2=0");
  d->add_option("--from-file", cfg.from_file, "Gram matrix JSON instead of building one");
  auto* b = app.add_subcommand("blocks", "Catalan block determinants (k = 2)");
  common(b, false);
  engine_opt(b);
  auto* dl = app.add_subcommand("delta", "exponents of the diagonal product (k = 2)");
  common(dl, false);
  auto* r = app.add_subcommand("reduce", "embedding reduction (k = 2)");
  common(r, false);
  auto* v = app.add_subcommand("verify", "run registered claims");
  common(v, false);
  v->add_option("--claim", cfg.claims, "claim id (repeatable); default all");
  auto* s = app.add_subcommand("subst", "Gram matrix with substitutions applied");
  common(s, true);
  s->add_option("--subst", cfg.subst, "substitutions, e.g. x1=0,x2=0")->required();
  s->add_option("--from-file", cfg.from_file, "Gram matrix JSON instead of building one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return 2;
  }

  try {
    if (e->parsed()) return cmd_enum(cfg);
    if (g->parsed()) return cmd_gram(cfg);
    if (d->parsed()) return cmd_det(cfg);
    if (b->parsed()) return cmd_blocks(cfg);
    if (dl->parsed()) return cmd_delta(cfg);
    if (r->parsed()) return cmd_reduce(cfg);
    if (v->parsed()) return cmd_verify(cfg);
    if (s->parsed()) return cmd_subst(cfg);
  } catch (const ResourceCapError& ex) {
    std::cerr << "refused: " << ex.what() << " (use --cap to override)\n";
    return 3;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return 2;
}
