#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ufe/characterization.hpp"
#include "ufe/enumerator.hpp"
#include "ufe/errors.hpp"
#include "ufe/export.hpp"
#include "ufe/oracle.hpp"
#include "ufe/priority.hpp"

namespace ufe::cli {
namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

// Usage-level failure detected after CLI11 parsing succeeded.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  Count k = 0;
  std::vector<Count> ks;
  Count n = 0;
  bool distinct = false;
  bool nontrivial_only = false;
  bool check = false;
  std::string format;
  std::string output;
  unsigned threads = 0;
  std::string input;
};

unsigned thread_count(unsigned flag) {
  if (flag != 0) return flag;
  if (const char* env = std::getenv("UFE_THREADS")) {
    try {
      std::size_t used = 0;
      const long v = std::stol(env, &used);
      if (v > 0 && env[used] == '\0') return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("UFE_THREADS must be a positive integer, got '") + env + "'");
  }
  return 0;
}

// Options are shared between subcommands, so defaults are filled in after
// parsing rather than with CLI11's default_val.
std::string default_format(const std::string& subcommand) {
  if (subcommand == "tree") return "dot";
  if (subcommand == "construct") return "json";
  return "text";
}

std::string join_denominators(const std::vector<BigInt>& xs) {
  std::string s;
  for (const BigInt& x : xs) {
    if (!s.empty()) s += ' ';
    s += x.get_str();
  }
  return s;
}

std::string read_input(const std::string& input) {
  const auto first = input.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (input[first] == '{' || input[first] == '[')) return input;
  std::ifstream file(input);
  if (!file) throw UsageError("cannot read '" + input + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

int cmd_enumerate(const Config& cfg, std::ostream& out) {
  const Base base = make_base(cfg.k);
  EnumerateOptions opts{cfg.threads};
  const FrontierMap sol = enumerate_up_to(base, cfg.n, opts);
  std::vector<SolutionArray> picked;
  for (const SolutionArray& a : sol.at(cfg.n)) {
    if ((cfg.nontrivial_only || cfg.distinct) && !is_nontrivial(a)) continue;
    if (cfg.distinct && !is_distinct(a)) continue;
    picked.push_back(a);
  }
  if (cfg.format == "json") {
    out << "[";
    for (std::size_t i = 0; i < picked.size(); ++i) {
      out << (i ? ",\n " : "\n ") << array_document(picked[i]).dump();
    }
    out << "\n]\n";
  } else {
    for (const SolutionArray& a : picked) {
      out << join_denominators(solution_from_array(a)) << "\t" << to_string(a) << "\n";
    }
  }
  return kOk;
}

int cmd_count(const Config& cfg, std::ostream& out) {
  const CountTable table = compute_count_table(cfg.ks, cfg.n, cfg.distinct, {cfg.threads});
  out << (cfg.format == "csv" ? render_csv(table) : render_text(table));
  return kOk;
}

int cmd_tree(const Config& cfg, std::ostream& out) {
  const EnumerationTree tree = build_tree(make_base(cfg.k), cfg.n, {cfg.threads});
  out << (cfg.format == "json" ? tree_to_json(tree) : tree_to_dot(tree));
  return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const std::vector<SolutionArray> arrays = arrays_from_json(read_input(cfg.input), cfg.k);
  int status = kOk;
  for (const SolutionArray& a : arrays) {
    const Rational sum = sum_value(a);
    const bool ok = sum == Rational(1);
    out << to_string(a) << ": sum " << sum << ", " << (ok ? "solution" : "not a solution")
        << ", n = " << term_count(a) << (is_nontrivial(a) ? ", nontrivial" : ", trivial")
        << "\n";
    if (!ok) {
      status = kDomainError;
      continue;
    }
    for (const ReductionStep& step : reduction_chain(a)) {
      out << "  " << to_string(step.app) << " -> " << to_string(step.child) << "\n";
    }
  }
  return status;
}

int cmd_exists(const Config& cfg, std::ostream& out) {
  const Base base = make_base(cfg.k);
  const Threshold th = min_n_nontrivial(base);
  if (th.special_case && cfg.n == 3) {
    out << "yes (special case (3,3))\n";
  } else if (exists_nontrivial(base, cfg.n)) {
    out << "yes (n >= n_min = " << th.n_min << ")\n";
  } else {
    out << "no (n < n_min = " << th.n_min << ")\n";
  }
  return kOk;
}

int cmd_construct(const Config& cfg, std::ostream& out) {
  const SolutionArray a = construct_nontrivial(make_base(cfg.k), cfg.n);
  if (cfg.format == "text") {
    out << join_denominators(solution_from_array(a)) << "\t" << to_string(a) << "\n";
  } else {
    out << array_document(a).dump() << "\n";
  }
  return kOk;
}

int cmd_oracle(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Base base = make_base(cfg.k);
  const std::set<Denominators> found = brute_force(base, cfg.n);
  for (const Denominators& xs : found) out << join_denominators(xs) << "\n";
  if (!cfg.check) return kOk;

  std::set<Denominators> enumerated;
  const FrontierMap sol = enumerate_up_to(base, cfg.n, {cfg.threads});
  for (const SolutionArray& a : sol.at(cfg.n)) {
    enumerated.insert(solution_from_array(a));
  }
  if (enumerated == found) {
    err << "check: oracle and enumerator agree on " << found.size() << " solutions\n";
    return kOk;
  }
  for (const Denominators& xs : found) {
    if (!enumerated.count(xs)) err << "only in oracle: " << join_denominators(xs) << "\n";
  }
  for (const Denominators& xs : enumerated) {
    if (!found.count(xs)) err << "only in enumerator: " << join_denominators(xs) << "\n";
  }
  return kDomainError;
}

}  // namespace

const CLI::Validator positive_integer(
    [](std::string& v) -> std::string {
      if (v.empty() || v.size() > 19 || v.find_first_not_of("0123456789") != std::string::npos ||
          std::stoull(v) == 0) {
        return "expected a positive integer, got '" + v + "'";
      }
      return {};
    },
    "POSITIVE");

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solutions of 1/x_1 + ... + 1/x_n = 1 with every x_i of the form 2^a k^b, a <= 2"};
  app.name("ufe");
  app.require_subcommand(1);

  Config cfg;
  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output, "Write to this file instead of standard output");
    sub->add_option("--threads", cfg.threads, "Worker threads (default: UFE_THREADS or all cores)");
  };
  auto k_option = [&cfg](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "Base k (not a power of 2)")->required()->check(positive_integer);
  };
  auto n_option = [&cfg](CLI::App* sub, const char* name, const char* help) {
    sub->add_option(name, cfg.n, help)->required()->check(positive_integer);
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "List all solutions with n terms");
  k_option(enumerate);
  n_option(enumerate, "--n", "Number of terms");
  enumerate->add_flag("--distinct", cfg.distinct, "Only nontrivial solutions in distinct integers");
  enumerate->add_flag("--nontrivial-only", cfg.nontrivial_only, "Only nontrivial solutions");
  enumerate->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  common(enumerate);

  CLI::App* count = app.add_subcommand("count", "Print nontrivial solution counts for n <= max-n");
  count->add_option("--k", cfg.ks, "One or more bases k")->required()->expected(1, -1)->check(positive_integer);
  n_option(count, "--max-n", "Largest number of terms");
  count->add_flag("--distinct", cfg.distinct, "Count solutions in distinct integers");
  count->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "text"}));
  common(count);

  CLI::App* tree = app.add_subcommand("tree", "Export the priority-expansion tree");
  k_option(tree);
  n_option(tree, "--max-n", "Largest number of terms");
  tree->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"dot", "json"}));
  common(tree);

  CLI::App* verify = app.add_subcommand("verify", "Check arrays and print their reduction chains");
  k_option(verify);
  verify->add_option("input", cfg.input, "JSON file, or inline JSON (one document or a list)")
      ->required();
  common(verify);

  CLI::App* exists = app.add_subcommand("exists", "Decide whether a nontrivial solution exists");
  k_option(exists);
  n_option(exists, "--n", "Number of terms");
  common(exists);

  CLI::App* construct = app.add_subcommand("construct", "Build an explicit nontrivial solution");
  k_option(construct);
  n_option(construct, "--n", "Number of terms");
  construct->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  common(construct);

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force all solutions with n terms");
  k_option(oracle);
  n_option(oracle, "--n", "Number of terms");
  oracle->add_flag("--check", cfg.check, "Compare against the move-based enumerator");
  common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    cfg.threads = thread_count(cfg.threads);
    std::ostringstream buffer;
    int status = kOk;
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (cfg.format.empty()) cfg.format = default_format(name);
    if (name == "enumerate") status = cmd_enumerate(cfg, buffer);
    else if (name == "count") status = cmd_count(cfg, buffer);
    else if (name == "tree") status = cmd_tree(cfg, buffer);
    else if (name == "verify") status = cmd_verify(cfg, buffer);
    else if (name == "exists") status = cmd_exists(cfg, buffer);
    else if (name == "construct") status = cmd_construct(cfg, buffer);
    else if (name == "oracle") status = cmd_oracle(cfg, buffer, err);

    if (cfg.output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(cfg.output);
      if (!file) throw UsageError("cannot write '" + cfg.output + "'");
      file << buffer.str();
    }
    return status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const KMismatchError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace ufe::cli
