// msb: Betti signed barcodes, Hilbert decompositions and matching
// dissimilarities from the command line.
//
// Exit codes: 0 ok, 1 usage error, 2 parse or validity error,
// 3 stability assertion failure.

#include "msb/bifiltration.hpp"
#include "msb/generators.hpp"
#include "msb/hilbert.hpp"
#include "msb/io.hpp"
#include "msb/matching.hpp"
#include "msb/resolution.hpp"
#include "msb/stability.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace msb;

constexpr int kUsage = 1;
constexpr int kInput = 2;
constexpr int kAssertion = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Either kind of input file the distance and Hilbert commands accept.
struct Loaded {
  std::optional<Presentation> presentation;
  std::optional<SignedBarcode> signed_barcode;
};

Loaded load(const std::string& path) {
  const std::string text = read_file(path);
  const std::string magic = format_magic(text);
  if (magic == "sbarc") return {std::nullopt, parse_signed_barcode(text)};
  if (magic == "mpres") return {parse_presentation(text), std::nullopt};
  if (magic == "mchain") return {homology_presentation(parse_chain_pair(text)), std::nullopt};
  throw ParseError(1, 1, path + ": unknown format '" + magic + "'");
}

Presentation load_presentation(const std::string& path) {
  Loaded l = load(path);
  if (!l.presentation) throw UsageError(path + " is a signed barcode; this command needs a presentation");
  return *std::move(l.presentation);
}

SignedBarcode as_signed(const Loaded& l) {
  return l.signed_barcode ? *l.signed_barcode : betti(*l.presentation).signed_barcode;
}

std::vector<Grade> parse_points(const std::string& spec) {
  std::vector<Grade> out;
  std::stringstream points(spec);
  std::string point;
  while (std::getline(points, point, ';')) {
    std::vector<double> coords;
    std::stringstream cs(point);
    std::string c;
    while (std::getline(cs, c, ',')) {
      try {
        std::size_t used = 0;
        coords.push_back(std::stod(c, &used));
        if (used != c.size()) throw std::invalid_argument(c);
      } catch (const std::exception&) {
        throw UsageError("bad coordinate '" + c + "' in --at");
      }
    }
    if (coords.empty()) throw UsageError("empty point in --at");
    out.push_back(Eigen::Map<const Eigen::VectorXd>(coords.data(), static_cast<Index>(coords.size())));
  }
  if (out.empty()) throw UsageError("--at needs at least one point");
  return out;
}

std::vector<double> numbers(const std::vector<std::string>& params, std::size_t first = 0) {
  std::vector<double> out;
  for (std::size_t i = first; i < params.size(); ++i) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(params[i], &used));
      if (used != params[i].size()) throw std::invalid_argument(params[i]);
    } catch (const std::exception&) {
      throw UsageError("bad numeric parameter '" + params[i] + "'");
    }
  }
  return out;
}

Index whole(double v, const char* what) {
  if (v != static_cast<double>(static_cast<long long>(v)) || v < 0)
    throw UsageError(std::string(what) + " must be a nonnegative integer");
  return static_cast<Index>(v);
}

Presentation generate(const std::string& name, const std::vector<std::string>& params, PrimeField field) {
  const std::vector<double> v = numbers(params);
  auto need = [&](std::size_t n, const char* usage) {
    if (v.size() != n) throw UsageError(std::string("usage: gen ") + usage);
  };
  if (name == "free") {
    if (v.empty()) throw UsageError("usage: gen free x1 [x2 ...]");
    return gen_free(Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Index>(v.size())), field);
  }
  if (name == "hook") {
    if (v.size() % 2 != 0 || v.empty()) throw UsageError("usage: gen hook a1 .. an b1 .. bn");
    const auto n = static_cast<Index>(v.size() / 2);
    return gen_hook(Eigen::Map<const Eigen::VectorXd>(v.data(), n), Eigen::Map<const Eigen::VectorXd>(v.data() + n, n),
                    field);
  }
  if (name == "staircase") {
    need(1, "staircase K");
    return gen_staircase(whole(v[0], "K"), field);
  }
  if (name == "chain") {
    need(2, "chain M EPS");
    return gen_chain(whole(v[0], "M"), v[1], field);
  }
  if (name == "interval") {
    if (v.empty() || v.size() % 2 != 0) throw UsageError("usage: gen interval A1 B1 [A2 B2 ...]");
    std::vector<Presentation> parts;
    for (std::size_t i = 0; i < v.size(); i += 2) parts.push_back(gen_one_param_interval(v[i], v[i + 1], field));
    return direct_sum(parts);
  }
  if (name == "random") {
    need(4, "random SEED GENS RELS GRID");
    return gen_random(static_cast<std::uint64_t>(whole(v[0], "SEED")), whole(v[1], "GENS"), whole(v[2], "RELS"),
                      whole(v[3], "GRID"));
  }
  throw UsageError("unknown generator '" + name + "' (free, hook, staircase, chain, interval, random)");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-")
    std::cout << text;
  else
    write_file(out_path, text);
}

int run(int argc, char** argv) {
  CLI::App app{"Betti signed barcodes, Hilbert decompositions and signed matching distances"};
  app.require_subcommand(1);

  std::string file, file_b, at, metric = "bottleneck", out, name;
  double p = 1.0;
  bool signed_out = false, print_matching = false;
  long long degree = 0, field_p = 2, trials = 200;
  double delta = 0.05;
  std::uint64_t seed = 0;
  std::vector<std::string> params;

  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of a presentation (mpres or mchain)");
  betti_cmd->add_option("FILE", file)->required();
  betti_cmd->add_flag("--signed", signed_out, "print the Betti signed barcode instead of per-degree barcodes");

  auto* reduce_cmd = app.add_subcommand("reduce", "reduced signed barcode (HB for a presentation)");
  reduce_cmd->add_option("FILE", file)->required();

  auto* hilbert_cmd = app.add_subcommand("hilbert", "evaluate the Hilbert function");
  hilbert_cmd->add_option("FILE", file)->required();
  hilbert_cmd->add_option("--at", at, "points x1,x2[;y1,y2...]")->required();

  auto* dist_cmd = app.add_subcommand("dist", "signed bottleneck or Wasserstein dissimilarity");
  dist_cmd->add_option("A", file)->required();
  dist_cmd->add_option("B", file_b)->required();
  dist_cmd->add_option("--metric", metric)->check(CLI::IsMember({"bottleneck", "wasserstein"}));
  dist_cmd->add_option("--p", p, "Wasserstein exponent (>= 1, or inf)");
  dist_cmd->add_flag("--print-matching", print_matching);

  auto* gen_cmd = app.add_subcommand("gen", "write a named presentation");
  gen_cmd->add_option("NAME", name)->required();
  gen_cmd->add_option("PARAMS", params);
  gen_cmd->add_option("-o,--output", out);
  gen_cmd->add_option("--field", field_p);

  auto* ingest_cmd = app.add_subcommand("ingest", "presentation of a homology module of a bifiltration");
  ingest_cmd->add_option("BIFILTRATION", file)->required();
  ingest_cmd->add_option("--degree", degree);
  ingest_cmd->add_option("-o,--output", out);
  ingest_cmd->add_option("--field", field_p, "override the file's field");

  auto* stab_cmd = app.add_subcommand("check-stability", "fuzz the stability bounds on random presentations");
  stab_cmd->add_option("--trials", trials);
  stab_cmd->add_option("--delta", delta);
  stab_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  if (betti_cmd->parsed()) {
    const BettiNumbers b = betti(load_presentation(file));
    std::cout << (signed_out ? serialize_signed_barcode(b.signed_barcode) : serialize_betti(b.degrees));
  } else if (reduce_cmd->parsed()) {
    const Loaded l = load(file);
    std::cout << serialize_signed_barcode(l.presentation ? minimal_hilbert_decomposition(*l.presentation)
                                                         : reduce_signed(*l.signed_barcode));
  } else if (hilbert_cmd->parsed()) {
    const Loaded l = load(file);
    for (const Grade& x : parse_points(at)) {
      const Index dim = l.presentation ? l.presentation->dim() : l.signed_barcode->dim();
      if (x.size() != dim) throw UsageError("--at point has " + std::to_string(x.size()) + " coordinates, need " + std::to_string(dim));
      const long long v = l.presentation ? pointwise_dim(*l.presentation, x) : hilbert_eval(*l.signed_barcode, x);
      std::cout << v << '\n';
    }
  } else if (dist_cmd->parsed()) {
    const SignedBarcode a = as_signed(load(file));
    const SignedBarcode b = as_signed(load(file_b));
    if (a.dim() != b.dim()) throw UsageError("inputs have different dimensions");
    if (!(p >= 1.0)) throw UsageError("--p must be at least 1");
    const MatchingResult r =
        metric == "bottleneck" ? bottleneck_signed(a, b) : wasserstein_signed(a, b, PNorm(p));
    if (print_matching)
      std::cout << serialize_matching(r, true);
    else
      std::cout << format_double(r.value) << '\n';
  } else if (gen_cmd->parsed()) {
    emit(serialize_presentation(generate(name, params, PrimeField(static_cast<std::uint32_t>(field_p)))), out);
  } else if (ingest_cmd->parsed()) {
    Bifiltration bf = parse_bifiltration(read_file(file));
    if (ingest_cmd->count("--field"))
      bf = Bifiltration(PrimeField(static_cast<std::uint32_t>(field_p)), bf.dim(), bf.cells());
    if (degree < 0) throw UsageError("--degree must be nonnegative");
    emit(serialize_presentation(chain_to_presentation(bf, static_cast<Index>(degree))), out);
  } else if (stab_cmd->parsed()) {
    StabilityConfig cfg;
    cfg.trials = static_cast<Index>(trials);
    cfg.deltas = {delta};
    cfg.seed = seed;
    const StabilityReport rep = check_stability(cfg);
    std::cout << "trials " << rep.trials.size() << '\n'
              << "max_bottleneck_ratio " << format_double(rep.max_bottleneck_ratio) << '\n'
              << "max_wasserstein_ratio " << format_double(rep.max_wasserstein_ratio) << '\n'
              << "bottleneck_violations " << rep.bottleneck_violations << '\n'
              << "wasserstein_violations " << rep.wasserstein_violations << '\n';
    if (!rep.passed()) {
      std::cerr << "stability bound violated\n";
      return kAssertion;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "msb: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "msb: " << e.what() << '\n';
    return kInput;
  } catch (const std::invalid_argument& e) {
    // validity and dimension errors from the library
    std::cerr << "msb: " << e.what() << '\n';
    return kInput;
  } catch (const std::domain_error& e) {
    std::cerr << "msb: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "msb: " << e.what() << '\n';
    return kInput;
  }
}
