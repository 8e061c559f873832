#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "rectdist/barcode.hpp"
#include "rectdist/bottleneck.hpp"
#include "rectdist/oracle.hpp"
#include "rectdist/random.hpp"

namespace rectdist::cli {

namespace {

struct Options {
  std::string format = "text";

  std::string rect_a;
  std::string rect_b;

  std::string file_a;
  std::string file_b;
  std::string matching_out;
  std::size_t trials = 0;

  std::size_t count = 0;
  std::size_t dim = 2;
  std::string range = "-5..5";
  double inf_prob = 0.0;
  std::uint64_t seed = 0;
};

Barcode read_barcode(const std::string& path, Format format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  try {
    return parse_barcode(in, format);
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

std::pair<long long, long long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("range must look like LO..HI");
  std::size_t used_lo = 0;
  std::size_t used_hi = 0;
  const std::string lo_text = text.substr(0, dots);
  const std::string hi_text = text.substr(dots + 2);
  const long long lo = std::stoll(lo_text, &used_lo);
  const long long hi = std::stoll(hi_text, &used_hi);
  if (used_lo != lo_text.size() || used_hi != hi_text.size()) {
    throw std::invalid_argument("range must look like LO..HI");
  }
  return {lo, hi};
}

int cmd_dist(const Options& opt, std::ostream& out) {
  const Rectangle r = parse_rectangle(opt.rect_a);
  const Rectangle q = parse_rectangle(opt.rect_b);
  out << interleaving_distance(r, q) << '\n';
  return kSuccess;
}

int cmd_bottleneck(const Options& opt, std::ostream& out) {
  const Format format = parse_format(opt.format);
  const Barcode left = read_barcode(opt.file_a, format);
  const Barcode right = read_barcode(opt.file_b, format);
  const BottleneckResult result = bottleneck_distance(left, right);
  out << result.value << '\n';
  if (!opt.matching_out.empty()) {
    std::ofstream file(opt.matching_out, std::ios::binary);
    if (!file) throw ParseError(0, 0, "cannot write '" + opt.matching_out + "'");
    file << matching_to_json(result.matching, left.size(), right.size());
  }
  return kSuccess;
}

// One PASS/FAIL line per check; returns whether all passed.
class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  void check(bool ok, const std::string& what) {
    out_ << (ok ? "PASS " : "FAIL ") << what << '\n';
    all_ok_ = all_ok_ && ok;
  }
  void note(const std::string& what) { out_ << "SKIP " << what << '\n'; }
  bool all_ok() const { return all_ok_; }

 private:
  std::ostream& out_;
  bool all_ok_ = true;
};

void verify_bottleneck(Report& report, const Barcode& left, const Barcode& right, const std::string& label) {
  const BottleneckResult fast = bottleneck_distance(left, right);
  const ExtReal slow = oracle::enumerate_bottleneck(left, right);
  const ExtReal witness = matching_cost(build_cost_matrix(left, right), fast.matching);
  report.check(fast.value == slow && witness == fast.value,
               label + ": matching search " + fast.value.to_string() + ", enumeration " + slow.to_string() +
                   ", witness cost " + witness.to_string());
}

Barcode subsample(std::mt19937_64& rng, const Barcode& barcode) {
  const std::size_t limit = std::min(barcode.size(), oracle::kEnumerationLimit);
  std::uniform_int_distribution<std::size_t> size_dist(0, limit);
  std::vector<std::size_t> index(barcode.size());
  std::iota(index.begin(), index.end(), 0);
  std::shuffle(index.begin(), index.end(), rng);
  index.resize(size_dist(rng));
  Barcode out(barcode.dim());
  for (std::size_t i : index) out.push_back(barcode[i]);
  return out;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const Format format = parse_format(opt.format);
  const Barcode left = read_barcode(opt.file_a, format);
  const Barcode right = read_barcode(opt.file_b, format);
  require_compatible(left, right);
  Report report(out);

  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      const ExtReal formula = interleaving_distance(left[i], right[j]);
      const ExtReal oracle = oracle::oracle_interleaving_distance(left[i], right[j]);
      if (formula != oracle) {
        ++mismatches;
        report.check(false, "interleaving left[" + std::to_string(i) + "] vs right[" + std::to_string(j) +
                                "]: formula " + formula.to_string() + ", oracle " + oracle.to_string());
      }
    }
  }
  if (mismatches == 0) {
    report.check(true, "interleaving distance on " + std::to_string(left.size() * right.size()) + " bar pairs");
  }

  std::size_t zero_mismatches = 0;
  for (const Barcode* side : {&left, &right}) {
    for (const auto& bar : side->bars()) {
      const ExtReal formula = zero_distance(bar);
      const ExtReal oracle = oracle::oracle_interleaving_distance(oracle::ModuleSupport(bar), std::nullopt);
      if (formula != oracle) {
        ++zero_mismatches;
        report.check(false, "distance to zero of " + format_rectangle(bar) + ": formula " + formula.to_string() +
                                ", oracle " + oracle.to_string());
      }
    }
  }
  if (zero_mismatches == 0) {
    report.check(true, "distance to zero on " + std::to_string(left.size() + right.size()) + " bars");
  }

  if (left.size() <= oracle::kEnumerationLimit && right.size() <= oracle::kEnumerationLimit) {
    verify_bottleneck(report, left, right, "bottleneck");
  } else {
    report.note("bottleneck enumeration: more than " + std::to_string(oracle::kEnumerationLimit) +
                " bars on a side");
  }

  std::mt19937_64 rng(0);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    verify_bottleneck(report, subsample(rng, left), subsample(rng, right),
                      "bottleneck trial " + std::to_string(t));
  }
  return report.all_ok() ? kSuccess : kVerificationFailed;
}

int cmd_gen(const Options& opt, std::ostream& out) {
  RandomBarParams params;
  params.dim = opt.dim;
  std::tie(params.lo, params.hi) = parse_range(opt.range);
  params.inf_prob = opt.inf_prob;
  params.validate();
  std::mt19937_64 rng(opt.seed);
  out << serialize_barcode(random_barcode(rng, opt.count, params), parse_format(opt.format));
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact interleaving and bottleneck distances between rectangle persistence modules"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Barcode file format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* dist = app.add_subcommand("dist", "Interleaving distance between two rectangle literals");
  dist->add_option("rect_a", opt.rect_a, "First rectangle, e.g. \"(0,2) x (0,2)\"")->required();
  dist->add_option("rect_b", opt.rect_b, "Second rectangle")->required();

  auto* bottleneck = app.add_subcommand("bottleneck", "Bottleneck distance between two barcode files");
  bottleneck->add_option("file_a", opt.file_a)->required();
  bottleneck->add_option("file_b", opt.file_b)->required();
  bottleneck->add_option("--matching", opt.matching_out, "Write an optimal matching as JSON to this path");

  auto* verify = app.add_subcommand("verify", "Cross-check the distances against the definition-level oracle");
  verify->add_option("file_a", opt.file_a)->required();
  verify->add_option("file_b", opt.file_b)->required();
  verify->add_option("--trials", opt.trials, "Extra checks on random sub-barcodes of at most 8 bars per side");

  auto* gen = app.add_subcommand("gen", "Print a random barcode");
  gen->add_option("--count", opt.count, "Number of bars")->required();
  gen->add_option("--dim", opt.dim, "Number of parameters")->capture_default_str();
  gen->add_option("--range", opt.range, "Endpoint range LO..HI")->capture_default_str();
  gen->add_option("--inf-prob", opt.inf_prob, "Probability of each infinite endpoint")->capture_default_str();
  gen->add_option("--seed", opt.seed, "Random seed")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*dist) return cmd_dist(opt, out);
    if (*bottleneck) return cmd_bottleneck(opt, out);
    if (*verify) return cmd_verify(opt, out);
    if (*gen) return cmd_gen(opt, out);
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kDimensionMismatch;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace rectdist::cli
