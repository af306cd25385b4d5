#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "chordkit/chordality.hpp"
#include "chordkit/elimination.hpp"
#include "chordkit/errors.hpp"
#include "chordkit/exact.hpp"
#include "chordkit/families.hpp"
#include "chordkit/graph_io.hpp"
#include "chordkit/safe_edges.hpp"
#include "chordkit/separators.hpp"

namespace chordkit::cli {

namespace {

struct InputOptions {
  std::string file;
  std::string family;
};

struct Options {
  int limit = SolverOptions::kDefaultLimit;
  bool allow_large = false;
  std::optional<int> threads;

  InputOptions input;

  std::string gen_format = "graph6";
  std::string convert_to = "edgelist";
  bool exact = false;
  bool witness = false;
  std::string order;
  bool chordal = true;
  int tfm_k = 0;
  int tfm_c = 0;
};

void add_input(CLI::App* sub, InputOptions& in) {
  sub->add_option("input", in.file, "Graph file (graph6 or edge list); '-' or omitted reads stdin");
  sub->add_option("--family", in.family, "Generate the input, e.g. rook:4x4, grid:3x7, tau:2,3,5");
}

int default_threads() {
  if (const char* env = std::getenv("CHORDKIT_THREADS")) {
    try {
      int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot open '" + path + "'");
  return read_all(f);
}

Graph load_graph(const InputOptions& opt, std::istream& in) {
  if (!opt.family.empty()) {
    if (!opt.file.empty()) throw InvalidInput("give either an input file or --family, not both");
    return generate(FamilySpec::parse(opt.family));
  }
  if (opt.file.empty() || opt.file == "-") return parse_graph(read_all(in));
  return parse_graph(read_file(opt.file));
}

SolverOptions solver_options(const Options& o) {
  if (o.limit < 1) throw InvalidInput("--limit must be positive");
  if (o.limit > SolverOptions::kDefaultLimit && !o.allow_large) {
    throw InvalidInput("--limit above " + std::to_string(SolverOptions::kDefaultLimit) +
                       " needs --allow-large (tables grow as 2^n)");
  }
  if (o.limit > SolverOptions::kMaxLimit) {
    throw InvalidInput("--limit cannot exceed " + std::to_string(SolverOptions::kMaxLimit));
  }
  SolverOptions s;
  s.limit = o.limit;
  s.threads = o.threads.value_or(default_threads());
  if (s.threads < 1) throw InvalidInput("--threads must be positive");
  return s;
}

std::string join(const std::vector<int>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

std::string edges_or_dash(const EdgeSet& e) { return e.empty() ? std::string("-") : to_string(e); }

std::string emit(const Graph& g, const std::string& format) {
  if (format == "graph6") return to_graph6(g) + "\n";
  if (format == "edgelist") return to_edge_list(g);
  if (format == "dot") return to_dot(g);
  throw InvalidInput("unknown format '" + format + "'");
}

int cmd_gen(const Options& o, std::ostream& out) {
  if (o.input.family.empty()) throw InvalidInput("gen needs --family");
  out << emit(generate(FamilySpec::parse(o.input.family)), o.gen_format);
  return kOk;
}

int cmd_convert(const Options& o, std::istream& in, std::ostream& out) {
  out << emit(load_graph(o.input, in), o.convert_to);
  return kOk;
}

int cmd_analyze(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(o.input, in);
  const int kappa = vertex_connectivity(g);
  std::ostringstream head;
  head << "n=" << g.vertex_count() << " m=" << g.edge_count() << " kappa=" << kappa;
  if (!o.exact) {
    out << head.str() << " chordal=" << (check_chordal(g).chordal ? "yes" : "no") << '\n';
    return kOk;
  }
  const TauPhiResult r = exact_tau_phi(g, solver_options(o));
  out << head.str() << " mfi=" << r.mfi << " tw=" << r.tw << " tau=" << r.tau << " phi=" << r.phi << '\n';
  if (o.witness) {
    out << "min_fill_order=" << r.min_fill_witness.to_string() << '\n';
    out << "min_width_order=" << r.min_width_witness.to_string() << '\n';
  }
  return kOk;
}

int cmd_reduce(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(o.input, in);
  const ReductionTrace t = reduce(g);
  out << t.log();
  out << "total_fill=" << t.total_fill_added << '\n';
  out << "residual_n=" << t.residual.vertex_count() << " residual_m=" << t.residual.edge_count() << '\n';
  out << "residual_vertices=" << (t.residual.empty() ? std::string("-") : to_string(t.residual.vertices())) << '\n';
  out << "residual_edges=" << edges_or_dash(t.residual.edges()) << '\n';
  return kOk;
}

int cmd_triangulate(const Options& o, std::istream& in, std::ostream& out) {
  if (o.order.empty()) throw InvalidInput("triangulate needs --order FILE|recipe|recipe:FAMILY");
  Graph g;
  EliminationOrdering alpha;
  const std::string prefix = "recipe:";
  if (o.order == "recipe" || o.order.rfind(prefix, 0) == 0) {
    const std::string fam = o.order == "recipe" ? o.input.family : o.order.substr(prefix.size());
    if (fam.empty()) throw InvalidInput("--order recipe needs --family");
    const FamilySpec spec = FamilySpec::parse(fam);
    g = (o.input.file.empty() && o.input.family.empty()) ? generate(spec) : load_graph(o.input, in);
    const RecipeOrdering r = recipe_ordering(spec);
    alpha = EliminationOrdering(g, r.ordering.order());
  } else {
    g = load_graph(o.input, in);
    alpha = EliminationOrdering::parse(g, read_file(o.order));
  }
  const TriangulationReport rep = apply_ordering(g, alpha);
  out << "order=" << alpha.to_string() << '\n';
  out << "fill=" << edges_or_dash(rep.fill) << '\n';
  out << "madj_sizes=" << join(rep.madj_sizes) << '\n';
  out << "total_fill=" << rep.total_fill << " width=" << rep.width << " sum_madj=" << rep.sum_madj() << '\n';
  return kOk;
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(o.input, in);
  const ChordalityVerdict v = check_chordal(g);
  if (v.chordal) {
    out << "chordal; peo " << join(*v.peo) << '\n';
  } else {
    out << "non-chordal; witness " << join(*v.witness) << '\n';
  }
  return kOk;
}

int cmd_tfm(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(o.input, in);
  out << (tfm_decide(g, o.tfm_k, o.tfm_c, solver_options(o)) ? "yes" : "no") << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"chordkit: triangulations, fill-in and treewidth on small graphs", "chordkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--limit", o.limit, "Largest component the exact solvers accept")->capture_default_str();
  app.add_flag("--allow-large", o.allow_large, "Acknowledge memory use for --limit above the default");
  app.add_option("--threads", o.threads, "Solver worker threads (default: CHORDKIT_THREADS or 1)");

  auto* gen = app.add_subcommand("gen", "Generate a family graph");
  gen->add_option("--family", o.input.family, "Family, e.g. rook:4x4")->required();
  gen->add_option("--format", o.gen_format, "graph6 | edgelist | dot")->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "Report n, m, kappa and, with --exact, mfi, tw, tau, phi");
  add_input(analyze, o.input);
  analyze->add_flag("--exact", o.exact, "Run the exact solvers");
  analyze->add_flag("--witness", o.witness, "Print optimal orderings");

  auto* reduce_cmd = app.add_subcommand("reduce", "Eliminate safe vertices and print the trace");
  add_input(reduce_cmd, o.input);

  auto* tri = app.add_subcommand("triangulate", "Apply an elimination ordering");
  add_input(tri, o.input);
  tri->add_option("--order", o.order, "Ordering file, 'recipe' (uses --family) or recipe:FAMILY")->required();

  auto* check = app.add_subcommand("check", "Chordality check with certificate");
  add_input(check, o.input);
  check->add_flag("--chordal", o.chordal, "Check chordality (default)");

  auto* tfm = app.add_subcommand("tfm", "Decide TFM(k, c)");
  add_input(tfm, o.input);
  tfm->add_option("--k", o.tfm_k, "Allowed width excess")->required()->check(CLI::NonNegativeNumber);
  tfm->add_option("--c", o.tfm_c, "Allowed fill excess")->required()->check(CLI::NonNegativeNumber);

  auto* convert = app.add_subcommand("convert", "Transcode between graph6, edge list and DOT");
  add_input(convert, o.input);
  convert->add_option("--to", o.convert_to, "graph6 | edgelist | dot")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (analyze->parsed()) return cmd_analyze(o, in, out);
    if (reduce_cmd->parsed()) return cmd_reduce(o, in, out);
    if (tri->parsed()) return cmd_triangulate(o, in, out);
    if (check->parsed()) return cmd_check(o, in, out);
    if (tfm->parsed()) return cmd_tfm(o, in, out);
    if (convert->parsed()) return cmd_convert(o, in, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  err << "error: no command\n";
  return kBadInput;
}

}  // namespace chordkit::cli
