#include "singular_lrt_cli/cli.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <system_error>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "singular_lrt/calibration.hpp"
#include "singular_lrt/coalescent.hpp"
#include "singular_lrt/simulation.hpp"

namespace slrt::cli {
namespace {

using json = nlohmann::ordered_json;

enum class OutputFormat { csv, json };

constexpr std::string_view eol = "\r\n";

double parse_real(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw std::invalid_argument(fmt::format("invalid {} '{}'", what, text));
  }
  return value;
}

std::int64_t parse_integer(std::string_view text, std::string_view what) {
  const double value = parse_real(text, what);
  if (value != std::floor(value) || std::abs(value) > 9.0e15) {
    throw std::invalid_argument(fmt::format("{} must be an integer, got '{}'", what, text));
  }
  return static_cast<std::int64_t>(value);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int parse_tree(std::string_view text) {
  const auto i = parse_integer(text, "tree index");
  if (i < 1 || i > 3) throw std::domain_error("tree index must be 1, 2 or 3");
  return static_cast<int>(i);
}

ThresholdModel parse_threshold_model(std::string_view text) {
  if (text == "t1") return ThresholdModel::T1;
  if (text == "t3") return ThresholdModel::T3;
  throw std::invalid_argument(fmt::format("model must be t1 or t3, got '{}'", text));
}

TrinomialCounts parse_counts(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw std::invalid_argument("counts must be three values a,b,c");
  std::array<std::int64_t, 3> c{};
  for (int i = 0; i < 3; ++i) {
    auto& part = parts[static_cast<std::size_t>(i)];
    const auto* end = part.data() + part.size();
    const auto [ptr, ec] = std::from_chars(part.data(), end, c[static_cast<std::size_t>(i)]);
    if (ec != std::errc{} || ptr != end) {
      throw std::invalid_argument(fmt::format("invalid count '{}'", part));
    }
  }
  return TrinomialCounts(c);
}

std::string three_digits(double x) { return fmt::format("{:#.3g}", x); }

void write_probs(std::ostream& out, OutputFormat format, const GeneTreeProbs& g) {
  if (format == OutputFormat::json) {
    out << json{{"concordant", g.concordant_index},
                {"probs", {g.probs[0], g.probs[1], g.probs[2]}}}
               .dump()
        << '\n';
    return;
  }
  out << "p1,p2,p3" << eol;
  out << format_real(g.probs[0]) << ',' << format_real(g.probs[1]) << ','
      << format_real(g.probs[2]) << eol;
}

struct ProbsArgs {
  std::optional<double> t;
  std::optional<double> phi0;
  int tree = 1;
};

struct LrtArgs {
  std::string counts;
  std::string model;
};

struct ThresholdArgs {
  std::string model;
  std::string epsilons;
  std::string ns = "30,100,1000,1e4,1e5,1e6";
  bool paper_rounding = false;
};

struct SimulateArgs {
  std::string model = "t3";
  double phi0 = 1.0;
  std::int64_t n = 1000;
  std::int64_t replicates = 1000;
  std::uint64_t seed = 1;
  std::string reference = "approx";
  std::string mu_source = "true";
};

struct DensityArgs {
  std::string spec;
  std::string grid;
};

void run_probs(const ProbsArgs& a, OutputFormat format, std::ostream& out) {
  if (a.t.has_value() == a.phi0.has_value()) {
    throw std::invalid_argument("exactly one of --t and --phi0 is required");
  }
  const auto g = a.t ? gene_tree_probabilities(BranchLength(*a.t), a.tree)
                     : gene_tree_probabilities_from_phi(*a.phi0, a.tree);
  write_probs(out, format, g);
}

void run_lrt(const LrtArgs& a, OutputFormat format, std::ostream& out) {
  const auto counts = parse_counts(a.counts);
  const auto model = parse_model(a.model);
  const auto lr = likelihood_ratio(counts, model);

  ExperimentConfig config;
  config.model = model;
  config.n = counts.total();
  config.mu_source = MuSource::PluginMle;
  const double p_approx = replicate_pvalue(config, counts);
  config.reference = Reference::ChiSq1;
  const double p_chisq1 = replicate_pvalue(config, counts);

  if (format == OutputFormat::json) {
    out << json{{"lambda", lr.lambda},
                {"phi_hat", lr.null_fit.phi_hat},
                {"tree", lr.null_fit.tree_index},
                {"p_approx", p_approx},
                {"p_chisq1", p_chisq1}}
               .dump()
        << '\n';
    return;
  }
  out << "lambda,phi_hat,tree,p_approx,p_chisq1" << eol;
  out << format_real(lr.lambda) << ',' << format_real(lr.null_fit.phi_hat) << ','
      << lr.null_fit.tree_index << ',' << format_real(p_approx) << ','
      << format_real(p_chisq1) << eol;
}

void run_thresholds(const ThresholdArgs& a, OutputFormat format, std::ostream& out) {
  const auto model = parse_threshold_model(a.model);
  const auto eps = parse_real_list(a.epsilons);
  const auto ns = parse_count_list(a.ns);
  const auto rows = threshold_table(model, eps, ns);

  const auto real = [&](double x) {
    return a.paper_rounding ? three_digits(x) : format_real(x);
  };
  const auto eps_text = [&](double x) {
    return a.paper_rounding ? fmt::format("{:g}", x) : format_real(x);
  };

  if (format == OutputFormat::json) {
    json doc = json::array();
    for (const auto& row : rows) {
      for (const auto& cell : row.entries) {
        if (a.paper_rounding) {
          doc.push_back({{"epsilon", eps_text(row.epsilon)},
                         {"mu_tilde", real(row.mu_tilde)},
                         {"n", cell.n},
                         {"phi_tilde", real(cell.phi_tilde)},
                         {"t_tilde", real(cell.t_tilde)}});
        } else {
          doc.push_back({{"epsilon", row.epsilon},
                         {"mu_tilde", row.mu_tilde},
                         {"n", cell.n},
                         {"phi_tilde", cell.phi_tilde},
                         {"t_tilde", cell.t_tilde}});
        }
      }
    }
    out << doc.dump() << '\n';
    return;
  }
  out << "epsilon,mu_tilde,n,phi_tilde,t_tilde" << eol;
  for (const auto& row : rows) {
    for (const auto& cell : row.entries) {
      out << eps_text(row.epsilon) << ',' << real(row.mu_tilde) << ',' << cell.n << ','
          << real(cell.phi_tilde) << ',' << real(cell.t_tilde) << eol;
    }
  }
}

void run_simulate(const SimulateArgs& a, OutputFormat format, std::ostream& out,
                  std::ostream& err) {
  ExperimentConfig config;
  config.model = parse_model(a.model);
  config.phi0 = a.phi0;
  config.n = a.n;
  config.replicates = a.replicates;
  config.seed = a.seed;
  config.reference = a.reference == "approx" ? Reference::Approx : Reference::ChiSq1;
  config.mu_source = a.mu_source == "true" ? MuSource::TrueParam : MuSource::PluginMle;
  validate(config);

  const auto ecdf = run_experiment(config);
  const double deviation = sup_uniform_deviation(ecdf);

  if (format == OutputFormat::json) {
    json doc{{"sup_uniform_deviation", deviation}, {"pvalues", ecdf.sorted_pvalues}};
    out << doc.dump() << '\n';
    return;
  }
  out << "rank,pvalue,cumfrac" << eol;
  for (std::size_t i = 0; i < ecdf.size(); ++i) {
    out << (i + 1) << ',' << format_real(ecdf.sorted_pvalues[i]) << ','
        << format_real(ecdf.cumfrac(i)) << eol;
  }
  err << "sup_uniform_deviation=" << format_real(deviation) << '\n';
}

void run_density(const DensityArgs& a, OutputFormat format, std::ostream& out) {
  const auto spec = parse_density_spec(a.spec);
  const auto grid = split(a.grid, ',');
  if (grid.size() != 3) throw std::invalid_argument("grid must be lo,hi,steps");
  const double lo = parse_real(grid[0], "grid bound");
  const double hi = parse_real(grid[1], "grid bound");
  const auto steps = parse_integer(grid[2], "grid steps");
  if (!(lo > 0.0) || hi < lo || steps < 1 || (steps == 1 && hi != lo)) {
    throw std::domain_error("grid needs 0 < lo <= hi and steps >= 1 (steps = 1 only when lo = hi)");
  }

  json rows = json::array();
  if (format == OutputFormat::csv) out << "lambda,pdf,cdf" << eol;
  for (std::int64_t i = 0; i < steps; ++i) {
    const double lambda =
        steps == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
    const double f = pdf(lambda, spec);
    const double F = cdf(lambda, spec);
    if (format == OutputFormat::json) {
      rows.push_back({{"lambda", lambda}, {"pdf", f}, {"cdf", F}});
    } else {
      out << format_real(lambda) << ',' << format_real(f) << ',' << format_real(F) << eol;
    }
  }
  if (format == OutputFormat::json) {
    out << json{{"spec", describe(spec)}, {"rows", rows}}.dump() << '\n';
  }
}

}  // namespace

std::string format_real(double x) { return fmt::format("{:.17g}", x); }

ModelId parse_model(std::string_view text) {
  if (text == "t3") return ModelId::t3();
  if (text == "t1") return ModelId::t1(1);
  if (text.starts_with("t1:")) return ModelId::t1(parse_tree(text.substr(3)));
  throw std::invalid_argument(fmt::format("model must be t1:<1|2|3> or t3, got '{}'", text));
}

DensitySpec parse_density_spec(std::string_view text) {
  DensitySpec spec;
  if (text == "mix") {
    spec = SingularityMixtureT1{};
  } else if (text.starts_with("t1:")) {
    spec = T1Approx{parse_real(text.substr(3), "mu0")};
  } else if (text.starts_with("t3:")) {
    const auto parts = split(text.substr(3), ',');
    if (parts.size() != 2) throw std::invalid_argument("t3 spec must be t3:<mu0>,<alpha0>");
    spec = T3Approx{parse_real(parts[0], "mu0"), parse_real(parts[1], "alpha0")};
  } else if (text.starts_with("chisq:")) {
    spec = ChiSq{static_cast<int>(parse_integer(text.substr(6), "degrees of freedom"))};
  } else {
    throw std::invalid_argument(
        fmt::format("density spec must be t1:<mu0>, t3:<mu0>,<alpha0>, chisq:<k> or mix, got '{}'",
                    text));
  }
  validate(spec);
  return spec;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> values;
  for (auto part : split(text, ',')) values.push_back(parse_real(part, "list entry"));
  return values;
}

std::vector<std::int64_t> parse_count_list(std::string_view text) {
  std::vector<std::int64_t> values;
  for (auto part : split(text, ',')) values.push_back(parse_integer(part, "list entry"));
  return values;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Likelihood ratio tests for gene-tree topology counts near the star tree",
               "singular-lrt"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  OutputFormat format = OutputFormat::csv;
  const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::csv},
                                                    {"json", OutputFormat::json}};
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->capture_default_str();

  ProbsArgs probs;
  auto* probs_cmd = app.add_subcommand("probs", "Gene-tree topology probabilities");
  auto* t_opt = probs_cmd->add_option("--t", probs.t, "Internal branch length (coalescent units)");
  probs_cmd->add_option("--phi0", probs.phi0, "exp(-t)")->excludes(t_opt);
  probs_cmd->add_option("--tree", probs.tree, "Concordant topology")
      ->check(CLI::Range(1, 3))
      ->capture_default_str();
  probs_cmd->footer("Example:\n  singular-lrt probs --t 0.291 --tree 1");

  LrtArgs lrt;
  auto* lrt_cmd = app.add_subcommand("lrt", "Likelihood ratio statistic and p-values");
  lrt_cmd->add_option("--counts", lrt.counts, "Topology counts a,b,c")->required();
  lrt_cmd->add_option("--model", lrt.model, "t1:<1|2|3> or t3")->required();
  lrt_cmd->footer("Example:\n  singular-lrt lrt --counts 360,340,300 --model t1:1");

  ThresholdArgs thr;
  auto* thr_cmd = app.add_subcommand("thresholds", "Total-variation thresholds for chi-square 1");
  thr_cmd->add_option("--model", thr.model, "t1 or t3")->required();
  thr_cmd->add_option("--epsilons", thr.epsilons, "Comma-separated distances")->required();
  thr_cmd->add_option("--ns", thr.ns, "Comma-separated sample sizes")->capture_default_str();
  thr_cmd->add_flag("--paper-rounding", thr.paper_rounding,
                    "Three significant figures, as in published tables");
  thr_cmd->footer("Example:\n  singular-lrt thresholds --model t1 --epsilons 5e-3 --ns 30");

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "ECDF of simulated p-values");
  sim_cmd->add_option("--model", sim.model, "t1:<1|2|3> or t3")->capture_default_str();
  sim_cmd->add_option("--phi0", sim.phi0, "Generating exp(-t)")->capture_default_str();
  sim_cmd->add_option("--n", sim.n, "Loci per replicate")->capture_default_str();
  sim_cmd->add_option("--replicates", sim.replicates, "Number of replicates")
      ->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed, "Master seed")->capture_default_str();
  sim_cmd->add_option("--reference", sim.reference, "Reference law")
      ->check(CLI::IsMember({"approx", "chisq1"}))
      ->capture_default_str();
  sim_cmd->add_option("--mu-source", sim.mu_source, "Parameter for the reference law")
      ->check(CLI::IsMember({"true", "plugin"}))
      ->capture_default_str();
  sim_cmd->footer(
      "Example:\n  singular-lrt simulate --model t3 --phi0 1 --n 1000 --replicates 100000 "
      "--reference approx --seed 7");

  DensityArgs den;
  auto* den_cmd = app.add_subcommand("density", "Sampled pdf and cdf of a reference law");
  den_cmd->add_option("--spec", den.spec, "t1:<mu0> | t3:<mu0>,<alpha0> | chisq:<k> | mix")
      ->required();
  den_cmd->add_option("--grid", den.grid, "lo,hi,steps")->required();
  den_cmd->footer("Example:\n  singular-lrt density --spec t3:1,0.5236 --grid 0.01,20,200");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("singular-lrt");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*probs_cmd) run_probs(probs, format, out);
    if (*lrt_cmd) run_lrt(lrt, format, out);
    if (*thr_cmd) run_thresholds(thr, format, out);
    if (*sim_cmd) run_simulate(sim, format, out, err);
    if (*den_cmd) run_density(den, format, out);
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_ok;
}

}  // namespace slrt::cli
