#include "graphent/cli.hpp"

#include "graphent/classify.hpp"
#include "graphent/cycles.hpp"
#include "graphent/filtration.hpp"
#include "graphent/graph.hpp"
#include "graphent/int_matrix.hpp"
#include "graphent/leavitt.hpp"
#include "graphent/oracle.hpp"
#include "graphent/report.hpp"
#include "graphent/spectral.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace graphent::cli {

namespace {

/// Raised for bad input; mapped to kExitInputError.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string format = "table";
  double tol = kDefaultTolerance;
  int digits = 6;

  bool json() const { return format == "json"; }
  std::string num(double v) const { return format_number(v, digits); }
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const std::string &path) {
  const std::string text = read_file(path);
  try {
    return parse_graph(text);
  } catch (const ParseError &e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::invalid_argument &e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string graph_label(const std::string &path) {
  return std::filesystem::path(path).stem().string();
}

std::string join(const std::vector<std::string> &parts, const char *sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i)
      out += sep;
    out += parts[i];
  }
  return out;
}

void print_triple_row(std::ostream &out, const GlobalOptions &opt, const GrowthTriple &t) {
  out << std::left << std::setw(10) << to_string(t.algebra) << std::setw(14)
      << t.dimension.to_string() << std::setw(8) << t.gkdim.to_string() << std::setw(14)
      << opt.num(t.entropy) << std::setw(7) << t.growth_class << to_string(t.method);
  if (t.bounds)
    out << " in [" << opt.num(t.bounds->first) << ", " << opt.num(t.bounds->second)
        << "] at k=" << *t.k_max;
  out << '\n';
}

void print_triple_header(std::ostream &out) {
  out << std::left << std::setw(10) << "algebra" << std::setw(14) << "dimension" << std::setw(8)
      << "gkdim" << std::setw(14) << "entropy" << std::setw(7) << "class"
      << "method\n";
}

bool check_triples(const std::vector<const GrowthTriple *> &triples, std::ostream &err) {
  bool ok = true;
  for (const auto *t : triples) {
    if (!satisfies_trichotomy(*t)) {
      err << "internal check failed: " << to_string(t->algebra)
          << " triple violates the growth trichotomy\n";
      ok = false;
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------

int cmd_classify(const GlobalOptions &opt, const std::string &file, std::size_t kmax,
                 std::ostream &out, std::ostream &err) {
  const Graph g = load_graph(file);
  const Classification c = classify(g, ClassifyOptions{kmax, opt.tol});
  if (opt.json()) {
    out << classification_json(graph_label(file), g, c).dump(2) << '\n';
  } else {
    print_triple_header(out);
    print_triple_row(out, opt, c.path);
    print_triple_row(out, opt, c.leavitt);
  }
  return check_triples({&c.path, &c.leavitt}, err) ? kExitOk : kExitCheckFailed;
}

int cmd_analyze(const GlobalOptions &opt, const std::string &file, std::size_t kmax,
                std::ostream &out, std::ostream &err) {
  const Graph g = load_graph(file);
  const VertexClass vc = vertex_classes(g);
  const ExcResult exc = satisfies_exc(g);
  const Classification c = classify(g, ClassifyOptions{kmax, opt.tol});
  const GrowthTriple ext = classify_extended(g, opt.tol);
  const PerronRoot rho = perron_root(adjacency_matrix(g), opt.tol);
  std::optional<CycleChainReport> chains;
  if (exc.holds)
    chains = chain_stats(g);

  auto names = [&](const std::set<VertexId> &vs) {
    std::vector<std::string> out_names;
    for (VertexId v : vs)
      out_names.push_back(g.vertex_name(v));
    return out_names;
  };

  if (opt.json()) {
    nlohmann::json j = classification_json(graph_label(file), g, c);
    j["extended"] = to_json(ext);
    j["sinks"] = names(vc.sinks);
    j["sources"] = names(vc.sources);
    j["exc"] = exc.holds;
    j["perron_root"] = {{"value", rho.value}, {"lo", rho.lo.get_d()}, {"hi", rho.hi.get_d()}};
    if (chains) {
      j["cycles"] = cycles_json(g, chains->cycles);
      j["d1"] = chains->d1;
      j["d2"] = chains->d2;
    }
    out << j.dump(2) << '\n';
  } else {
    out << "graph      " << graph_label(file) << " (" << g.vertex_count() << " vertices, "
        << g.edge_count() << " edges)\n";
    out << "sinks      " << join(names(vc.sinks), " ") << '\n';
    out << "sources    " << join(names(vc.sources), " ") << '\n';
    out << "rho(A_E)   " << opt.num(rho.value) << '\n';
    out << "EXC        " << (exc.holds ? "yes" : "no") << '\n';
    if (chains)
      out << "cycles     " << chains->cycles.size() << " (d1=" << chains->d1
          << ", d2=" << chains->d2 << ")\n";
    else if (exc.witness)
      out << "witness    " << join(exc.witness->first.edge_names(g), " ") << " / "
          << join(exc.witness->second.edge_names(g), " ") << '\n';
    out << '\n';
    print_triple_header(out);
    print_triple_row(out, opt, c.path);
    print_triple_row(out, opt, ext);
    print_triple_row(out, opt, c.leavitt);
  }
  return check_triples({&c.path, &c.leavitt, &ext}, err) ? kExitOk : kExitCheckFailed;
}

int cmd_entropy(const GlobalOptions &opt, const std::string &kind, const std::string &file,
                std::size_t kmax, std::ostream &out) {
  const Graph g = load_graph(file);
  double value = 0.0;
  std::string method = "spectral";
  std::optional<EntropyEstimate> est;
  if (kind == "path") {
    value = entropy_path(g, opt.tol);
  } else if (kind == "extended") {
    value = entropy_extended(g, opt.tol);
  } else {
    const Classification c = classify(g, ClassifyOptions{kmax, opt.tol});
    value = c.leavitt.entropy;
    method = std::string(to_string(c.leavitt.method));
    if (c.leavitt.method == EntropyMethod::CountpathsEstimate)
      est = entropy_leavitt_estimate(g, kmax, opt.tol);
  }
  if (opt.json()) {
    nlohmann::json j{{"graph", graph_label(file)}, {"algebra", kind}, {"entropy", value},
                     {"method", method}};
    if (est)
      j["estimate"] = leavitt_report_json(graph_label(file), *est, 0.02);
    out << j.dump(2) << '\n';
  } else {
    out << opt.num(value) << '\n';
    if (est)
      out << "# " << method << " at k=" << kmax << "; ratio estimate " << opt.num(est->ratio_h)
          << "; bounds [" << opt.num(est->entropy_path) << ", "
          << opt.num(est->entropy_extended) << "]\n";
  }
  return kExitOk;
}

int cmd_gkdim(const GlobalOptions &opt, const std::string &kind, const std::string &file,
              std::ostream &out) {
  const Graph g = load_graph(file);
  const ExtendedNat d = kind == "path" ? gk_dim_path(g) : gk_dim_leavitt(g);
  if (opt.json())
    out << nlohmann::json{{"graph", graph_label(file)}, {"algebra", kind},
                          {"gkdim", d.is_finite() ? nlohmann::json(d.value().get_ui())
                                                  : nlohmann::json("inf")}}
               .dump(2)
        << '\n';
  else
    out << d.to_string() << '\n';
  return kExitOk;
}

int cmd_cycles(const GlobalOptions &opt, const std::string &file, std::size_t cap,
               std::ostream &out) {
  const Graph g = load_graph(file);
  const auto cycles = enumerate_cycles(g, cap);
  const ExcResult exc = satisfies_exc(g);
  std::optional<CycleChainReport> chains;
  if (exc.holds)
    chains = chain_stats(g);
  if (opt.json()) {
    nlohmann::json j{{"graph", graph_label(file)}, {"cycles", cycles_json(g, cycles)},
                     {"exc", exc.holds}};
    if (chains) {
      j["d1"] = chains->d1;
      j["d2"] = chains->d2;
      j["exits"] = chains->exits;
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  for (const auto &c : cycles) {
    std::vector<std::string> vs;
    for (VertexId v : c.vertices(g))
      vs.push_back(g.vertex_name(v));
    out << join(c.edge_names(g), " ") << "    (" << join(vs, " -> ") << ")\n";
  }
  out << cycles.size() << " cycle(s); EXC " << (exc.holds ? "holds" : "fails");
  if (chains)
    out << "; d1=" << chains->d1 << " d2=" << chains->d2;
  out << '\n';
  return kExitOk;
}

void print_graph(std::ostream &out, const GlobalOptions &opt, const Graph &g) {
  if (opt.json())
    out << to_json(g) << '\n';
  else
    out << to_text(g);
}

int cmd_leavitt_seq(const GlobalOptions &opt, const std::string &file, std::size_t kmax,
                    const std::string &csv_path, std::ostream &out) {
  if (kmax < 3)
    throw InputError("--kmax must be at least 3");
  const Graph g = load_graph(file);
  const LeavittQuotientSeq seq = leavitt_sequence(g, kmax);
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv)
      throw InputError("cannot write '" + csv_path + "'");
    csv << leavitt_csv(seq);
  }
  EntropyEstimate est;
  est.k_max = kmax;
  est.entropy_path = entropy_path(g, opt.tol);
  est.entropy_extended = entropy_extended(g, opt.tol);
  if (seq.q[kmax] > 0) {
    est.last_h = seq.h[kmax];
    if (seq.q[kmax - 1] > 0)
      est.ratio_h = log_ratio(seq.q[kmax], seq.q[kmax - 1]);
  }
  if (opt.json()) {
    out << leavitt_report_json(graph_label(file), est, 0.02).dump(2) << '\n';
  } else {
    out << "h_" << kmax << " = " << opt.num(est.last_h) << '\n';
    out << "ratio_h = " << opt.num(est.ratio_h) << '\n';
    out << "entropy_path = " << opt.num(est.entropy_path) << '\n';
    out << "entropy_extended = " << opt.num(est.entropy_extended) << '\n';
    out << "q_" << kmax << " has " << seq.q[kmax].get_str().size() << " digits\n";
  }
  return kExitOk;
}

struct OracleOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 200;
  std::size_t max_vertices = 4;
  std::size_t max_edges = 6;
  std::size_t max_k = 8;
};

int cmd_oracle_check(const GlobalOptions &opt, const OracleOptions &o, std::ostream &out,
                     std::ostream &err) {
  std::size_t checks = 0;
  for (std::size_t t = 0; t < o.trials; ++t) {
    const Graph g = oracle::random_graph(o.seed + t, o.max_vertices, o.max_edges);
    const IntMatrix a = adjacency_matrix(g);
    for (std::size_t k = 0; k <= o.max_k; ++k) {
      const BigInt formula = leavitt_quotient_dim(g, k);
      const BigInt brute = oracle::count_basis(g, k).count;
      const std::size_t paths = oracle::enum_paths(g, k).paths.size();
      const BigInt norm = norm_11(mat_pow(a, k));
      checks += 2;
      if (formula != brute || norm != BigInt(static_cast<unsigned long>(paths))) {
        err << "mismatch at seed " << (o.seed + t) << ", k=" << k << ": countpaths "
            << formula.get_str() << " vs basis " << brute.get_str() << "; norm "
            << norm.get_str() << " vs paths " << paths << '\n';
        out << to_text(g);
        return kExitCheckFailed;
      }
    }
  }
  if (opt.json())
    out << nlohmann::json{{"trials", o.trials}, {"checks", checks}, {"mismatches", 0}}.dump(2)
        << '\n';
  else
    out << o.trials << " graphs, " << checks << " checks, 0 mismatches\n";
  return kExitOk;
}

int cmd_seq(const GlobalOptions &opt, const std::vector<std::string> &op,
            const std::string &seq_file, std::ostream &out) {
  DimSequence seq;
  try {
    seq = read_sequence(read_file(seq_file));
  } catch (const std::invalid_argument &e) {
    throw InputError(seq_file + ": " + e.what());
  }
  if (op.empty())
    throw InputError("seq needs an operation: entropy, gk, subsample K or scale N");
  auto argument = [&]() -> unsigned long {
    if (op.size() != 2)
      throw InputError("seq " + op[0] + " needs one numeric argument");
    try {
      return std::stoul(op[1]);
    } catch (const std::exception &) {
      throw InputError("'" + op[1] + "' is not a natural number");
    }
  };
  auto print_seq = [&](const DimSequence &s) {
    if (opt.json()) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto &q : s.quotients())
        arr.push_back(q.get_str());
      out << nlohmann::json{{"quotients", arr}}.dump(2) << '\n';
    } else {
      for (const auto &q : s.quotients())
        out << q.get_str() << '\n';
    }
  };

  try {
    if (op[0] == "entropy") {
      const double h = entropy_of(seq);
      if (opt.json())
        out << nlohmann::json{{"entropy_estimate", h}, {"horizon", seq.size() - 1}}.dump(2)
            << '\n';
      else
        out << opt.num(h) << '\n';
    } else if (op[0] == "gk") {
      const GkEstimate gk = gk_dim_of(seq);
      if (opt.json())
        out << nlohmann::json{{"gk_estimate", gk.infinite ? nlohmann::json("inf")
                                                           : nlohmann::json(gk.value)},
                              {"horizon", seq.size() - 1}}
                   .dump(2)
            << '\n';
      else
        out << (gk.infinite ? std::string("inf") : opt.num(gk.value)) << '\n';
    } else if (op[0] == "subsample") {
      print_seq(subsample(seq, argument()));
    } else if (op[0] == "scale") {
      print_seq(matrix_scale(seq, argument()));
    } else {
      throw InputError("unknown seq operation '" + op[0] + "'");
    }
  } catch (const std::invalid_argument &e) {
    throw InputError(e.what());
  }
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Dimension, GK-dimension and algebraic entropy of path algebras and Leavitt "
               "path algebras of finite graphs",
               "graphent"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--tol", opt.tol, "Perron root enclosure width")->check(CLI::PositiveNumber);
  app.add_option("--digits", opt.digits, "Significant digits in printed numbers")
      ->check(CLI::Range(1, 15));

  std::string file;
  std::string kind;
  std::size_t kmax = kDefaultLeavittKmax;
  std::size_t cap = kDefaultCycleCap;
  std::string csv_path;
  std::string seq_file;
  std::vector<std::string> seq_op;
  OracleOptions oracle_opt;

  auto *analyze = app.add_subcommand("analyze", "Full report");
  analyze->add_option("file", file, "Graph file")->required();
  analyze->add_option("--kmax", kmax, "Leavitt horizon");

  auto *entropy = app.add_subcommand("entropy", "Entropy of one algebra");
  entropy->add_option("algebra", kind)->required()->check(
      CLI::IsMember({"path", "extended", "leavitt"}));
  entropy->add_option("file", file, "Graph file")->required();
  entropy->add_option("--kmax", kmax, "Leavitt horizon");

  auto *gkdim = app.add_subcommand("gkdim", "GK-dimension");
  gkdim->add_option("algebra", kind)->required()->check(CLI::IsMember({"path", "leavitt"}));
  gkdim->add_option("file", file, "Graph file")->required();

  auto *classify_cmd = app.add_subcommand("classify", "Growth triples");
  classify_cmd->add_option("file", file, "Graph file")->required();
  classify_cmd->add_option("--kmax", kmax, "Leavitt horizon");

  auto *cycles = app.add_subcommand("cycles", "Simple cycles and chain statistics");
  cycles->add_option("file", file, "Graph file")->required();
  cycles->add_option("--cap", cap, "Maximum number of cycles");

  auto *trim_cmd = app.add_subcommand("trim", "Remove sinks and sources repeatedly");
  trim_cmd->add_option("file", file, "Graph file")->required();

  auto *components_cmd = app.add_subcommand("components", "Weakly connected components");
  components_cmd->add_option("file", file, "Graph file")->required();

  auto *leavitt_seq = app.add_subcommand("leavitt-seq", "Leavitt layer dimensions");
  leavitt_seq->add_option("file", file, "Graph file")->required();
  leavitt_seq->add_option("--kmax", kmax, "Horizon");
  leavitt_seq->add_option("--csv", csv_path, "Write k,q_k_digits,h_k,ratio_h_k rows here");

  auto *oracle_cmd = app.add_subcommand("oracle-check", "Randomized brute-force comparison");
  oracle_cmd->add_option("--seed", oracle_opt.seed);
  oracle_cmd->add_option("--trials", oracle_opt.trials);
  oracle_cmd->add_option("--max-vertices", oracle_opt.max_vertices)->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--max-edges", oracle_opt.max_edges);
  oracle_cmd->add_option("--max-k", oracle_opt.max_k);

  auto *seq = app.add_subcommand("seq", "Estimators and transforms on dimension sequences");
  seq->add_option("operation", seq_op, "entropy | gk | subsample K | scale N")->required();
  seq->add_option("--seq-file", seq_file, "Raw quotient list or leavitt-seq CSV")->required();

  std::vector<const char *> argv;
  argv.reserve(args.size());
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "graphent: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*analyze)
      return cmd_analyze(opt, file, kmax, out, err);
    if (*entropy)
      return cmd_entropy(opt, kind, file, kmax, out);
    if (*gkdim)
      return cmd_gkdim(opt, kind, file, out);
    if (*classify_cmd)
      return cmd_classify(opt, file, kmax, out, err);
    if (*cycles)
      return cmd_cycles(opt, file, cap, out);
    if (*trim_cmd) {
      print_graph(out, opt, trim(load_graph(file)));
      return kExitOk;
    }
    if (*components_cmd) {
      const auto parts = components(load_graph(file));
      if (opt.json()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &c : parts)
          arr.push_back(nlohmann::json::parse(to_json(c)));
        out << arr.dump(2) << '\n';
      } else {
        for (std::size_t i = 0; i < parts.size(); ++i) {
          out << "# component " << (i + 1) << '\n';
          out << to_text(parts[i]);
        }
      }
      return kExitOk;
    }
    if (*leavitt_seq)
      return cmd_leavitt_seq(opt, file, kmax, csv_path, out);
    if (*oracle_cmd)
      return cmd_oracle_check(opt, oracle_opt, out, err);
    if (*seq)
      return cmd_seq(opt, seq_op, seq_file, out);
  } catch (const InputError &e) {
    err << "graphent: " << e.what() << '\n';
    return kExitInputError;
  } catch (const CycleLimitError &e) {
    err << "graphent: " << e.what() << '\n';
    return kExitInputError;
  } catch (const oracle::LimitExceeded &e) {
    err << "graphent: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

} // namespace graphent::cli
