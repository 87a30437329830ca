// Command-line front end for the pattern workbench.
#include <CLI11.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <random>
#include <regex>
#include <sstream>

#include "mbqc/clifford.hpp"
#include "mbqc/dsl.hpp"
#include "mbqc/graphs.hpp"
#include "mbqc/library.hpp"
#include "mbqc/random_patterns.hpp"
#include "mbqc/rewrite.hpp"
#include "mbqc/simulator.hpp"

using namespace mbqc;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Raised for bad arguments detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open " + path);
  }
  return {std::istreambuf_iterator<char>(in), {}};
}

dsl::PatternDocument load(const std::string& path) { return dsl::parse(read_source(path)); }

std::string number(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x == 0.0 ? 0.0 : x);
  std::string s(buf);
  // Values that round to zero print without a sign.
  if (s.starts_with("-") && s.find_first_not_of("-0.") == std::string::npos) {
    s.erase(0, 1);
  }
  return s;
}

std::string complex_text(Complex z, int decimals) {
  const std::string re = number(z.real(), decimals);
  const std::string im = number(std::abs(z.imag()), decimals);
  return re + (z.imag() < 0 && im.find_first_not_of("0.") != std::string::npos ? "-" : "+") + im +
         "i";
}

void print_matrix(std::ostream& out, const Matrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out << "  " << complex_text(m(r, c), 9);
    }
    out << '\n';
  }
}

double parse_real(const std::string& text, const std::string& whole) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size()) {
    throw UsageError("malformed complex number '" + whole + "'");
  }
  return x;
}

// `0.5`, `-i`, `0.3-0.4i`, `2i`.
Complex parse_complex(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      text += c;
    }
  }
  if (text.empty() || text.back() != 'i') {
    return {parse_real(text, raw), 0.0};
  }
  text.pop_back();
  // Split before the last sign that is not an exponent sign.
  std::size_t split = 0;
  for (std::size_t k = 1; k < text.size(); ++k) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      split = k;
    }
  }
  const std::string re = text.substr(0, split);
  std::string im = text.substr(split);
  if (im.empty() || im == "+" || im == "-") {
    im += "1";
  }
  return {re.empty() ? 0.0 : parse_real(re, raw), parse_real(im, raw)};
}

Vector parse_input(const std::string& text, std::size_t n_inputs) {
  const Eigen::Index dim = static_cast<Eigen::Index>(1) << n_inputs;
  if (text.find_first_not_of("0123456789") == std::string::npos && !text.empty()) {
    const long k = std::stol(text);
    if (k >= dim) {
      throw UsageError("basis index " + text + " out of range for " + std::to_string(dim) +
                       " basis states");
    }
    Vector v = Vector::Zero(dim);
    v(k) = 1.0;
    return v;
  }
  std::vector<Complex> amps;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    amps.push_back(parse_complex(item));
  }
  if (static_cast<Eigen::Index>(amps.size()) != dim) {
    throw UsageError("expected " + std::to_string(dim) + " amplitudes, got " +
                     std::to_string(amps.size()));
  }
  return Eigen::Map<Vector>(amps.data(), dim);
}

Matrix builtin_matrix(const std::string& name) {
  const double r = 1.0 / std::sqrt(2.0);
  static const std::regex j_form(R"(j\((.*)\))");
  std::smatch m;
  if (std::regex_match(name, m, j_form)) {
    return library::j_matrix(dsl::parse_angle(m[1].str()));
  }
  Matrix u;
  if (name == "identity") {
    u = Matrix::Identity(2, 2);
  } else if (name == "h") {
    u.resize(2, 2);
    u << r, r, r, -r;
  } else if (name == "phase") {
    u = Matrix::Identity(2, 2);
    u(1, 1) = Complex(0, 1);
  } else if (name == "cz") {
    u = Matrix::Identity(4, 4);
    u(3, 3) = -1.0;
  } else if (name == "cnot") {
    u = Matrix::Zero(4, 4);
    u(0, 0) = u(2, 2) = u(3, 1) = u(1, 3) = 1.0;
  } else if (name == "swap") {
    u = Matrix::Zero(4, 4);
    u(0, 0) = u(3, 3) = u(1, 2) = u(2, 1) = 1.0;
  } else {
    throw UsageError("unknown builtin matrix '" + name + "'");
  }
  return u;
}

// One row per line, entries separated by whitespace.
Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open " + path);
  }
  std::vector<std::vector<Complex>> rows;
  for (std::string line; std::getline(in, line);) {
    std::stringstream ss(line);
    std::vector<Complex> row;
    for (std::string item; ss >> item;) {
      row.push_back(parse_complex(item));
    }
    if (!row.empty()) {
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) {
    throw UsageError(path + " holds no matrix");
  }
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.front().size()) {
      throw UsageError(path + ": ragged matrix rows");
    }
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      m(i, k) = rows[i][k];
    }
  }
  return m;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      sizes.push_back(std::stoul(item));
    } catch (const std::exception&) {
      throw UsageError("malformed size '" + item + "'");
    }
  }
  return sizes;
}

int cmd_validate(const std::string& file) {
  const auto doc = load(file);
  const ValidityReport report = validate(doc.pattern);
  std::cout << report.summary() << '\n';
  return report.runnable() ? kOk : kFailed;
}

int cmd_standardize(const std::string& file, bool extended, bool trace, bool paper_order) {
  const auto doc = load(file);
  const Standardization result =
      extended ? standardize_extended(doc.pattern) : standardize(doc.pattern);
  std::cout << dsl::serialize(result.pattern, doc.name,
                              paper_order ? dsl::Order::Paper : dsl::Order::Execution);
  if (trace) {
    std::istringstream lines(format_trace(result.trace));
    for (std::string line; std::getline(lines, line);) {
      std::cout << "# " << line << '\n';
    }
  }
  return kOk;
}

int cmd_simulate(const std::string& file, const std::string& input, bool branches) {
  const auto doc = load(file);
  const Pattern& p = doc.pattern;
  if (branches || !input.empty()) {
    const Vector psi = parse_input(input.empty() ? "0" : input, p.inputs().size());
    std::cout << format_branch_report(run_all_branches(p, psi), true);
  }
  const bool deterministic = is_deterministic(p);
  std::cout << "deterministic: " << (deterministic ? "yes" : "no") << '\n';
  if (deterministic) {
    std::cout << "unitary:\n";
    print_matrix(std::cout, extract_unitary(p));
  }
  return kOk;
}

int cmd_verify(const std::string& file, const std::string& against) {
  const auto doc = load(file);
  const Matrix expected =
      std::ifstream(against).good() ? read_matrix_file(against) : builtin_matrix(against);
  if (!is_deterministic(doc.pattern)) {
    std::cout << "match: no (pattern is not deterministic)\n";
    return kFailed;
  }
  const Matrix u = extract_unitary(doc.pattern);
  if (u.rows() != expected.rows() || u.cols() != expected.cols()) {
    std::cout << "match: no (shape " << u.rows() << "x" << u.cols() << " vs " << expected.rows()
              << "x" << expected.cols() << ")\n";
    return kFailed;
  }
  const bool ok = collinear(u, expected, 1e-9) && equal_up_to_phase(u, expected, 1e-9);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", phase_distance(u, expected));
  std::cout << "match: " << (ok ? "yes" : "no") << " (distance " << buf << ")\n";
  return ok ? kOk : kFailed;
}

int cmd_graph(const std::string& file, const std::string& kind, bool dot) {
  const auto doc = load(file);
  if (kind == "entanglement") {
    const EntanglementGraph g = entanglement_graph(doc.pattern);
    if (dot) {
      std::cout << to_dot(g);
    } else {
      std::cout << "vertices: " << g.vertices.size() << "\nedges: " << g.edges.size() << '\n';
      for (const auto& [a, b] : g.edges) {
        std::cout << "  " << a << " -- " << b << '\n';
      }
    }
    return kOk;
  }
  if (kind != "dependency") {
    throw UsageError("--kind must be 'entanglement' or 'dependency'");
  }
  const DependencyGraph g = dependency_graph(doc.pattern);
  if (dot) {
    std::cout << to_dot(g);
    return kOk;
  }
  std::size_t layers = 0;
  for (std::size_t l : g.layer) {
    layers = std::max(layers, l);
  }
  std::cout << "depth: " << layers << '\n';
  for (std::size_t l = 1; l <= layers; ++l) {
    std::cout << "layer " << l << ':';
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
      if (g.layer[k] == l) {
        std::cout << ' ' << to_string(g.nodes[k]);
      }
    }
    std::cout << '\n';
  }
  return kOk;
}

int cmd_library(const std::string& name, const std::vector<std::string>& params) {
  std::vector<Angle> angles;
  int n = 3;
  if (name == "ghz") {
    if (params.size() > 1) {
      throw UsageError("ghz takes one parameter n");
    }
    if (!params.empty()) {
      try {
        n = std::stoi(params[0]);
      } catch (const std::exception&) {
        throw UsageError("ghz size must be an integer");
      }
    }
  } else {
    for (const auto& s : params) {
      try {
        angles.push_back(dsl::parse_angle(s));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
  }
  Pattern p;
  try {
    p = library::by_name(name, angles, n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << dsl::serialize(p, name);
  return kOk;
}

int cmd_bench(const std::string& sizes_text, std::size_t seeds) {
  const std::vector<std::size_t> sizes = parse_sizes(sizes_text);
  if (sizes.empty() || seeds == 0) {
    throw UsageError("bench needs at least one size and one seed");
  }
  std::vector<double> xs;
  std::vector<double> ys;
  std::printf("%6s %10s %10s %12s\n", "n", "mean", "max", "max/n^2");
  for (std::size_t n : sizes) {
    double total = 0.0;
    std::size_t worst = 0;
    for (std::size_t seed = 0; seed < seeds; ++seed) {
      std::mt19937_64 rng(seed * 1000003 + n);
      const Pattern p = random::wild_pattern(rng, n);
      const std::size_t steps = standardize(p).trace.size();
      total += static_cast<double>(steps);
      worst = std::max(worst, steps);
      xs.push_back(static_cast<double>(n));
      ys.push_back(static_cast<double>(steps));
    }
    std::printf("%6zu %10.1f %10zu %12.4f\n", n, total / static_cast<double>(seeds), worst,
                static_cast<double>(worst) / static_cast<double>(n * n));
  }
  // Least-squares fit steps = a n^2 + b n + c.
  Eigen::MatrixXd design(xs.size(), 3);
  Eigen::VectorXd rhs(ys.size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    design.row(k) << xs[k] * xs[k], xs[k], 1.0;
    rhs(k) = ys[k];
  }
  const Eigen::Vector3d fit = design.colPivHouseholderQr().solve(rhs);
  std::printf("fit: steps = %.4g n^2 + %.4g n + %.4g\n", fit(0), fit(1), fit(2));
  return kOk;
}

int cmd_theorems() {
  const TheoremReport report = verify_no_dependency_theorems(theorem_suite());
  std::cout << report.to_text() << (report.passed() ? "all checks passed" : "FAILED") << '\n';
  return report.passed() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measurement pattern workbench"};
  app.require_subcommand(1);

  std::string file;
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "Pattern document (default: standard input)");
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check the definiteness conditions");
  add_file(validate_cmd);

  bool extended = false;
  bool trace = false;
  bool paper_order = false;
  auto* standardize_cmd = app.add_subcommand("standardize", "Rewrite to standard form");
  add_file(standardize_cmd);
  standardize_cmd->add_flag("--extended", extended, "Also apply signal shifting");
  standardize_cmd->add_flag("--trace", trace, "Append the rewrite trace as comments");
  standardize_cmd->add_flag("--paper-order", paper_order, "Print commands right to left");

  std::string input;
  bool branches = false;
  auto* simulate_cmd = app.add_subcommand("simulate", "Run every branch, extract the unitary");
  add_file(simulate_cmd);
  simulate_cmd->add_option("--input", input, "Basis index or comma-separated amplitudes");
  simulate_cmd->add_flag("--branches", branches, "Print the branch report");

  std::string against;
  auto* verify_cmd = app.add_subcommand("verify", "Compare the unitary up to global phase");
  add_file(verify_cmd);
  verify_cmd
      ->add_option("--against", against,
                   "Matrix file, or identity|h|phase|cz|cnot|swap|j(<angle>)")
      ->required();

  std::string kind = "entanglement";
  bool dot = false;
  auto* graph_cmd = app.add_subcommand("graph", "Entanglement or dependency graph");
  add_file(graph_cmd);
  graph_cmd->add_option("--kind", kind, "entanglement or dependency")
      ->check(CLI::IsMember({"entanglement", "dependency"}));
  graph_cmd->add_flag("--dot", dot, "Emit Graphviz DOT");

  std::string name;
  std::vector<std::string> params;
  auto* library_cmd = app.add_subcommand("library", "Emit a builtin pattern");
  library_cmd->add_option("name", name, "Pattern name")
      ->required()
      ->check(CLI::IsMember(library::names()));
  library_cmd->add_option("params", params, "Angles (ghz: n)");

  std::string sizes = "20,50,100,200";
  std::size_t seeds = 20;
  auto* bench_cmd = app.add_subcommand("bench", "Rewrite step counts on random patterns");
  bench_cmd->add_option("--sizes", sizes, "Comma-separated sequence lengths");
  bench_cmd->add_option("--seeds", seeds, "Patterns per size");

  auto* theorems_cmd = app.add_subcommand("theorems", "Check the no-dependency theorems");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(file);
    if (*standardize_cmd) return cmd_standardize(file, extended, trace, paper_order);
    if (*simulate_cmd) return cmd_simulate(file, input, branches);
    if (*verify_cmd) return cmd_verify(file, against);
    if (*graph_cmd) return cmd_graph(file, kind, dot);
    if (*library_cmd) return cmd_library(name, params);
    if (*bench_cmd) return cmd_bench(sizes, seeds);
    if (*theorems_cmd) return cmd_theorems();
  } catch (const dsl::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
