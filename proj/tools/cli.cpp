#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "darboux/bessel.hpp"
#include "darboux/chebyshev.hpp"
#include "darboux/error.hpp"
#include "darboux/expr.hpp"
#include "darboux/riccati.hpp"
#include "darboux/serialize.hpp"
#include "darboux/verify.hpp"

namespace darboux::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

constexpr const char* kGrammarHelp = R"(Operator grammar: atoms D (d/dx), x and integer literals; + - * / ^ and
parentheses. ^ binds tightest, then * and /, then + and -, all
left-associative; unary minus is allowed. An expression containing D is an
operator. Operator*operator is composition; a product with a function
operand multiplies coefficients (D*x means x*D). Division is only by
functions. Example: "D^2 + (1/x)*D - 1/x^2".)";

std::string format_double(double v) {
  std::ostringstream s;
  s << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return s.str();
}

struct Grid {
  std::vector<double> points;
};

// "a:b:n" -> n points from a to b inclusive.
Grid parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 3) throw std::invalid_argument("grid must look like a:b:n");
  std::size_t used = 0;
  const double a = std::stod(parts[0], &used);
  if (used != parts[0].size()) throw std::invalid_argument("bad grid start '" + parts[0] + "'");
  const double b = std::stod(parts[1], &used);
  if (used != parts[1].size()) throw std::invalid_argument("bad grid end '" + parts[1] + "'");
  const int n = std::stoi(parts[2], &used);
  if (used != parts[2].size() || n < 1) throw std::invalid_argument("grid count must be a positive integer");
  if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("grid points must be positive (x > 0)");
  if (n == 1 && a != b) throw std::invalid_argument("a single-point grid needs a == b");
  Grid g;
  for (int i = 0; i < n; ++i) g.points.push_back(n == 1 ? a : a + (b - a) * i / (n - 1));
  return g;
}

std::string ladder_line(const LadderState& s) {
  const RatFun rest = s.f - RatFun(s.beta);
  std::string out = "f_" + std::to_string(s.j) + " = " + to_string(s.beta);
  if (rest.is_zero()) return out;
  const bool negative = sgn(rest.num().leading()) < 0;
  return out + (negative ? " - " : " + ") + to_string(negative ? -rest : rest);
}

// Writes to --out when given, otherwise to the caller's stream.
class Sink {
 public:
  Sink(std::ostream& fallback, const std::string& path) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ostream& fallback_;
  std::ofstream file_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Darboux/Riccati ladder toolkit for half-integer Bessel and Chebyshev identities"};
  app.footer(kGrammarHelp);
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  auto* ladder_cmd = app.add_subcommand("ladder", "Exact rational Riccati solutions f_j, beta_j = j - 1/2");
  int depth = 1;
  std::string branch = "minus";
  std::string format = "text";
  ladder_cmd->add_option("--depth", depth, "Number of rungs")->required()->check(CLI::Range(1, std::numeric_limits<int>::max()));
  ladder_cmd->add_option("--branch", branch, "Starting branch: minus (1/2 - x) or plus (1/2 + x)")
      ->check(CLI::IsMember({"minus", "plus"}));
  ladder_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run the exact verification suites");
  std::string suite = "all";
  std::optional<int> max_n;
  std::string verify_format = "text";
  verify_cmd->add_option("--suite", suite, "riccati, chebyshev, darboux, euler or all")
      ->check(CLI::IsMember({"riccati", "chebyshev", "darboux", "euler", "all"}));
  verify_cmd->add_option("--max-n", max_n, "Suite size (ladder depth, max n, half-steps or pairs)")
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  verify_cmd->add_option("--format", verify_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* factor_cmd = app.add_subcommand("factor", "Right-divide an operator by D - g and Darboux-transform it");
  std::string op_expr;
  std::string g_expr;
  factor_cmd->add_option("--op", op_expr, "Operator expression")->required();
  factor_cmd->add_option("--g", g_expr, "Function g of x")->required();

  auto* bessel_cmd = app.add_subcommand("bessel-compare", "Plus-branch ladder vs -x K'/K for K_(j-1/2)");
  int max_order = 10;
  std::string grid_spec = "0.5:5:10";
  double tolerance = 1e-10;
  bessel_cmd->add_option("--max-order", max_order, "Largest j")->check(CLI::Range(1, std::numeric_limits<int>::max()));
  bessel_cmd->add_option("--grid", grid_spec, "a:b:n, n points from a to b (a > 0)");
  bessel_cmd->add_option("--tol", tolerance, "Maximum allowed absolute error");

  auto* cf_cmd = app.add_subcommand("cf", "Unrolled continued fraction for a ladder or Chebyshev ratio");
  std::string target = "bessel";
  int cf_depth = 1;
  std::string cf_branch = "minus";
  std::vector<double> eval_points;
  std::string cf_format = "text";
  cf_cmd->add_option("--target", target, "bessel or chebyshev")->check(CLI::IsMember({"bessel", "chebyshev"}));
  cf_cmd->add_option("--depth", cf_depth, "Depth (ladder rung or Chebyshev n)")->required()->check(CLI::Range(1, std::numeric_limits<int>::max()));
  cf_cmd->add_option("--branch", cf_branch, "Ladder branch for target bessel")
      ->check(CLI::IsMember({"minus", "plus"}));
  cf_cmd->add_option("--eval", eval_points, "Evaluate at these points");
  cf_cmd->add_option("--format", cf_format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  try {
    Sink sink(out, out_path);
    std::ostream& os = sink.stream();

    if (*ladder_cmd) {
      const auto states = ladder(depth, parse_branch(branch));
      if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& s : states) arr.push_back(to_json_value(s));
        os << arr.dump(2) << "\n";
      } else {
        for (const auto& s : states) os << ladder_line(s) << "\n";
      }
      return kOk;
    }

    if (*verify_cmd) {
      const VerificationReport report = run_suite(suite, max_n);
      if (verify_format == "json") {
        os << to_json_value(report).dump(2) << "\n";
      } else {
        os << format_text(report);
      }
      return report.passed() ? kOk : kFailed;
    }

    if (*factor_cmd) {
      DiffOp a;
      RatFun g;
      try {
        a = parse_operator(op_expr);
      } catch (const ParseError& e) {
        err << "error: --op: " << e.what() << "\n";
        return kUsage;
      }
      try {
        g = parse_function(g_expr);
      } catch (const ParseError& e) {
        err << "error: --g: " << e.what() << "\n";
        return kUsage;
      }
      if (a.order() < 1) {
        err << "error: --op must have order >= 1\n";
        return kUsage;
      }
      const auto [q, r] = right_divide(a, g);
      os << "A = " << to_string(a) << "\n";
      os << "g = " << to_string(g) << "\n";
      os << "Q = " << to_string(q) << "\n";
      os << "R = " << to_string(r) << "\n";
      if (r.is_zero()) {
        os << "A^ = " << to_string(compose(first_order_factor(g), q)) << "\n";
      } else {
        os << "not divisible: g is not a kernel logarithmic derivative\n";
      }
      return kOk;
    }

    if (*bessel_cmd) {
      Grid grid;
      try {
        grid = parse_grid(grid_spec);
      } catch (const std::exception& e) {
        err << "error: --grid: " << e.what() << "\n";
        return kUsage;
      }
      const auto report = compare_ladder_to_bessel(max_order, grid.points);
      os << "j,x,ladder_value,bessel_value,abs_err\n";
      for (const auto& row : report.rows) {
        os << row.j << "," << format_double(row.x) << ","
           << (row.ladder_value ? format_double(*row.ladder_value) : "pole") << ","
           << format_double(row.bessel_value) << "," << (row.abs_err ? format_double(*row.abs_err) : "nan")
           << "\n";
      }
      err << "max_abs_err = " << format_double(report.max_abs_err) << " (tolerance "
          << format_double(tolerance) << ")\n";
      return report.max_abs_err <= tolerance ? kOk : kFailed;
    }

    if (*cf_cmd) {
      const ContinuedFraction cf = target == "bessel"
                                       ? ladder_continued_fraction(cf_depth, parse_branch(cf_branch))
                                       : chebyshev_continued_fraction(static_cast<unsigned>(cf_depth));
      if (cf_format == "csv") {
        os << "x,depth,value\n";
        for (double x0 : eval_points) os << format_double(x0) << "," << cf_depth << "," << format_double(cf_eval(cf, x0)) << "\n";
        return kOk;
      }
      if (cf_format == "json") {
        nlohmann::json j = to_json_value(cf);
        j["collapsed"] = to_json_value(collapse(cf));
        if (!eval_points.empty()) {
          nlohmann::json values = nlohmann::json::array();
          for (double x0 : eval_points) values.push_back({{"x", x0}, {"value", cf_eval(cf, x0)}});
          j["values"] = std::move(values);
        }
        os << j.dump(2) << "\n";
        return kOk;
      }
      os << to_string(cf) << "\n";
      os << "collapsed: " << to_string(collapse(cf)) << "\n";
      for (double x0 : eval_points) os << "value at " << format_double(x0) << ": " << format_double(cf_eval(cf, x0)) << "\n";
      return kOk;
    }
  } catch (const ContinuedFractionPole& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace darboux::cli
