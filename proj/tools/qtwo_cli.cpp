#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qtwo/checks.hpp"
#include "qtwo/enumerate.hpp"
#include "qtwo/graph6.hpp"
#include "qtwo/matrix_json.hpp"
#include "qtwo/named.hpp"
#include "qtwo/pipeline.hpp"

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("QTWO_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 1;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

std::string strip(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    in = &file;
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(*in, line)) {
    std::string t = strip(line);
    if (!t.empty()) lines.push_back(t);
  }
  return lines;
}

// One graph from an --input value: a file holding a graph6 line, a name in
// the build_named grammar, or a literal graph6 string.
qtwo::Graph load_graph_arg(const std::string& input) {
  if (std::ifstream f(input); f) {
    std::string line;
    while (std::getline(f, line)) {
      std::string t = strip(line);
      if (!t.empty()) return qtwo::graph6_decode(t);
    }
    throw std::runtime_error(input + " holds no graph6 line");
  }
  try {
    return qtwo::build_named(input);
  } catch (const std::invalid_argument&) {
  }
  return qtwo::graph6_decode(input);
}

int print_report(const qtwo::VerificationReport& rep) {
  for (const qtwo::CheckLine& line : rep.lines) {
    std::cout << (line.pass ? "PASS " : "FAIL ") << line.name;
    if (!line.detail.empty()) std::cout << " (" << line.detail << ")";
    std::cout << "\n";
  }
  std::cout << (rep.pass ? "all checks passed" : "some checks FAILED") << "\n";
  return rep.pass ? 0 : 1;
}

// Re-verifies one JSON document: a classification record, a report with
// "records", or a bare witness ({"graph6", "matrix"}).
bool certify_document(const nlohmann::json& j, std::string& why) {
  if (j.contains("records")) {
    for (const auto& rec : j.at("records"))
      if (!qtwo::verify_record(rec, &why)) return false;
    return true;
  }
  if (j.contains("status")) return qtwo::verify_record(j, &why);
  if (j.contains("matrix") && j.contains("graph6")) {
    qtwo::Graph g = qtwo::graph6_decode(j.at("graph6").get<std::string>());
    qtwo::SymMatrix m = qtwo::matrix_from_json(j.at("matrix"));
    if (m.order() != g.order() || !qtwo::matrix_fits_pattern(m, g)) {
      why = "matrix does not fit the graph pattern";
      return false;
    }
    if (!qtwo::verify_involution(m, 1e-8).pass) {
      why = "matrix fails the involution check";
      return false;
    }
    return true;
  }
  why = "unrecognized document shape";
  return false;
}

int run_certify(const std::string& input) {
  std::ifstream f(input);
  if (!f) throw std::runtime_error("cannot open " + input);
  std::stringstream buffer;
  buffer << f.rdbuf();
  std::string text = buffer.str();

  std::vector<nlohmann::json> docs;
  try {
    docs.push_back(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error&) {
    // JSONL: one document per line.
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      std::string t = strip(line);
      if (!t.empty()) docs.push_back(nlohmann::json::parse(t));
    }
  }
  if (docs.empty()) throw std::runtime_error(input + " holds no JSON document");

  bool all = true;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    std::string why;
    bool ok = certify_document(docs[i], why);
    std::cout << (ok ? "PASS" : "FAIL") << " document " << i + 1;
    if (!ok) std::cout << ": " << why;
    std::cout << "\n";
    all = all && ok;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decides, certifies, and constructs two-eigenvalue witnesses "
               "for patterns of regular graphs of degree at most four"};
  app.require_subcommand(1);

  int opt_n = 0, opt_r = 4, opt_restarts = 40;
  double opt_tol = 1e-8;
  std::uint64_t opt_seed = default_seed();
  bool opt_exact = false;
  std::string opt_input, opt_output, opt_format = "json";

  CLI::App* gen = app.add_subcommand(
      "gen", "enumerate connected regular graphs as graph6 lines");
  gen->add_option("--n", opt_n, "vertex count")->required();
  gen->add_option("--r", opt_r, "degree (default 4)");
  gen->add_option("--output", opt_output, "output file (default stdout)");

  CLI::App* filter = app.add_subcommand(
      "filter", "run the obstruction filter chain over a graph6 stream");
  filter->add_option("--input", opt_input, "graph6 file, '-' for stdin");
  filter->add_option("--output", opt_output, "output file (default stdout)");

  CLI::App* witness = app.add_subcommand(
      "witness", "construct or search a two-eigenvalue witness for one graph");
  witness->add_option("--input", opt_input,
                      "graph name, graph6 string, or file with a graph6 line")
      ->required();
  witness->add_option("--restarts", opt_restarts, "search restarts (default 40)");
  witness->add_option("--seed", opt_seed, "search seed (default $QTWO_SEED or 1)");
  witness->add_option("--tol", opt_tol, "residual tolerance (default 1e-8)");
  witness->add_flag("--exact", opt_exact, "snap a numeric witness to exact values");
  witness->add_option("--output", opt_output, "output file (default stdout)");

  CLI::App* certify = app.add_subcommand(
      "certify", "re-verify stored witnesses, certificates, or records");
  certify->add_option("--input", opt_input, "JSON or JSONL file")->required();

  CLI::App* census = app.add_subcommand(
      "census", "enumerate n = 6..10, filter to diameter 2, classify survivors");
  census->add_option("--format", opt_format, "json or csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));
  census->add_option("--output", opt_output, "output file (default stdout)");

  CLI::App* verify_theorem = app.add_subcommand(
      "verify-theorem", "rebuild and re-verify the full degree <= 4 list");
  CLI::App* verify_cat = app.add_subcommand(
      "verify-catalog", "load and re-verify every stored catalog matrix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      std::ostringstream out;
      for (const qtwo::Graph& g : qtwo::enumerate_regular(opt_n, opt_r))
        out << qtwo::graph6_encode(g) << "\n";
      write_output(opt_output, out.str());
      return 0;
    }
    if (*filter) {
      std::ostringstream out;
      std::vector<std::string> lines = read_lines(opt_input);
      for (std::size_t i = 0; i < lines.size(); ++i) {
        qtwo::Graph g = qtwo::graph6_decode(lines[i]);
        nlohmann::json j = qtwo::filter_report_to_json(qtwo::run_filter_chain(g));
        j["id"] = "#" + std::to_string(i + 1);
        j["graph6"] = lines[i];
        out << j.dump() << "\n";
      }
      write_output(opt_output, out.str());
      return 0;
    }
    if (*witness) {
      qtwo::Graph g = load_graph_arg(opt_input);
      qtwo::ClassifyConfig cfg;
      cfg.run_search = true;
      cfg.exact_round = opt_exact;
      cfg.search.restarts = opt_restarts;
      cfg.search.seed = opt_seed;
      cfg.search.residual_tol = opt_tol;
      qtwo::ClassificationRecord rec = qtwo::classify(g, cfg);
      rec.id = opt_input;
      write_output(opt_output, qtwo::record_to_json(rec).dump(2) + "\n");
      return rec.status == "q=2" ? 0 : 1;
    }
    if (*certify) return run_certify(opt_input);
    if (*census) {
      qtwo::CensusReport report = qtwo::run_diameter2_census();
      if (opt_format == "csv") {
        write_output(opt_output, qtwo::census_to_csv(report));
      } else {
        write_output(opt_output, qtwo::census_to_json(report).dump(2) + "\n");
      }
      for (const qtwo::ClassificationRecord& rec : report.records) {
        std::string why;
        if (!qtwo::verify_record(qtwo::record_to_json(rec), &why)) {
          std::cerr << "record " << rec.id << " failed self-verification: "
                    << why << "\n";
          return 1;
        }
      }
      return 0;
    }
    if (*verify_theorem) return print_report(qtwo::verify_theorem_list());
    if (*verify_cat) return print_report(qtwo::verify_catalog());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
