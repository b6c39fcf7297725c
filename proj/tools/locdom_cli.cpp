// locdom: command-line front end for the locating-domination toolkit.
//
//   locdom lambda <file> [--all-codes] [--bounded K]
//   locdom classify <file>
//   locdom assoc <file> --set 0,2,5 [--dot out.dot] [--labels] [--subgraph 0,2]
//   locdom family <kind> --n N | --r R --s S [--emit graph6|edges]
//   locdom census --max-n N [--jobs J] [--out report.json] [--csv summary.csv]
//   locdom verify --suite {table1,thm3,cactus,parity} [--seed S] [--trials T] [--max-n N]
//
// Exit codes: 0 success, 1 a checked property was violated, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "locdom/locdom.hpp"
#include "locdom/report.hpp"

namespace {

using locdom::report::Json;

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<locdom::GraphDocument> load(const std::string& path) {
  return locdom::parse_documents(locdom::read_text(path));
}

locdom::VertexSet to_set(const std::vector<std::size_t>& members, std::size_t n, const char* flag) {
  locdom::VertexSet s;
  for (std::size_t v : members) {
    if (v >= n) throw UsageError(std::string(flag) + ": vertex " + std::to_string(v) + " is outside 0.." +
                                 std::to_string(n == 0 ? 0 : n - 1));
    s.insert(v);
  }
  return s;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

// A single graph prints as one flat object; several go under "results".
void emit(const std::string& command, std::vector<Json> results) {
  Json out = locdom::report::header(command);
  if (results.size() == 1) {
    for (auto& [key, value] : results.front().items()) out[key] = value;
  } else {
    out["results"] = std::move(results);
  }
  std::cout << out.dump(2) << '\n';
}

std::string echo(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) out += (i > 1 ? " " : "") + std::string(argv[i]);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact locating-dominating sets, associated graphs and the bipartite complement relation"};
  app.require_subcommand(1);

  std::string file;
  bool all_codes = false;
  std::size_t bounded = 0;
  auto* lambda_cmd = app.add_subcommand("lambda", "Location-domination number of each input graph");
  lambda_cmd->add_option("file", file, "graph6 or edge-list file, '-' for stdin")->required();
  lambda_cmd->add_flag("--all-codes", all_codes, "List every LD-code");
  auto* bounded_opt = lambda_cmd->add_option("--bounded", bounded, "Search LD-sets of size <= K only");

  auto* classify_cmd = app.add_subcommand("classify", "Classify a connected bipartite graph");
  classify_cmd->add_option("file", file, "graph6 or edge-list file, '-' for stdin")->required();

  std::vector<std::size_t> set_members, sub_members;
  std::string dot_path;
  bool labels = false;
  auto* assoc_cmd = app.add_subcommand("assoc", "Associated graph of a distinguishing set");
  assoc_cmd->add_option("file", file, "graph6 or edge-list file, '-' for stdin")->required();
  assoc_cmd->add_option("--set", set_members, "Distinguishing set, e.g. 0,2,5")->required()->delimiter(',');
  assoc_cmd->add_option("--dot", dot_path, "Write DOT to this path ('-' for stdout)");
  assoc_cmd->add_flag("--labels", labels, "Report label multiplicities");
  auto* sub_opt = assoc_cmd->add_option("--subgraph", sub_members, "Labels S' for H_{S'}, e.g. 0,2")->delimiter(',');

  std::string kind, emit_format = "graph6";
  std::size_t fam_n = 0, fam_r = 0, fam_s = 0;
  auto* family_cmd = app.add_subcommand("family", "Generate a named graph");
  family_cmd->add_option("kind", kind, "path|cycle|star|complete_bipartite|bistar|extremal|banner")->required();
  auto* n_opt = family_cmd->add_option("--n", fam_n, "Order (path, cycle, star)");
  auto* r_opt = family_cmd->add_option("--r", fam_r, "Smaller side or first star size");
  auto* s_opt = family_cmd->add_option("--s", fam_s, "Larger side or second star size");
  family_cmd->add_option("--emit", emit_format, "Output format")->check(CLI::IsMember({"graph6", "edges"}));
  n_opt->excludes(r_opt)->excludes(s_opt);

  std::size_t max_n = 9, jobs = 1;
  std::string out_path, csv_path;
  bool entries = false, timing = false;
  auto* census_cmd = app.add_subcommand("census", "Exhaustive check over connected bipartite graphs");
  census_cmd->add_option("--max-n", max_n, "Largest order")->required()->check(CLI::Range(1, 10));
  census_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  census_cmd->add_option("--out", out_path, "Write the JSON report here instead of stdout");
  census_cmd->add_option("--csv", csv_path, "Write a per-graph CSV summary");
  census_cmd->add_flag("--entries", entries, "Include every classification in the report");
  census_cmd->add_flag("--timing", timing, "Include wall-clock time");

  std::string suite;
  std::uint64_t seed = 1;
  std::size_t trials = 500, verify_max_n = 7;
  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  verify_cmd->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"table1", "thm3", "cactus", "parity"}));
  verify_cmd->add_option("--seed", seed, "Random seed");
  verify_cmd->add_option("--trials", trials, "Random trials");
  verify_cmd->add_option("--max-n", verify_max_n, "Largest order for thm3")->check(CLI::Range(1, 9));
  verify_cmd->add_flag("--timing", timing, "Include wall-clock time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return exit_usage;
  }

  const std::string command = echo(argc, argv);
  try {
    if (*lambda_cmd) {
      std::vector<Json> results;
      for (const auto& doc : load(file)) {
        if (*bounded_opt) {
          results.push_back(locdom::report::bounded_json(doc.graph, bounded, locdom::lambda_bounded(doc.graph, bounded)));
        } else {
          results.push_back(locdom::report::ld_json(doc.graph, locdom::lambda_bruteforce(doc.graph, all_codes)));
        }
      }
      emit(command, std::move(results));
      return exit_ok;
    }

    if (*classify_cmd) {
      std::vector<Json> results;
      for (const auto& doc : load(file))
        results.push_back(locdom::report::classification_json(locdom::classify(doc.graph)));
      emit(command, std::move(results));
      return exit_ok;
    }

    if (*assoc_cmd) {
      const auto docs = load(file);
      if (docs.size() != 1) throw UsageError("assoc expects exactly one graph");
      const auto& g = docs.front().graph;
      const auto ag = locdom::build_associated(g, to_set(set_members, g.order(), "--set"));
      if (!dot_path.empty()) {
        if (dot_path == "-") {
          std::cout << locdom::export_dot(ag);
          return exit_ok;
        }
        write_file(dot_path, locdom::export_dot(ag));
      }
      Json j = locdom::report::associated_json(ag, labels);
      if (*sub_opt) j["subgraph"] = locdom::report::label_subgraph_json(
                        locdom::label_subgraph(ag, to_set(sub_members, g.order(), "--subgraph")));
      emit(command, {std::move(j)});
      return exit_ok;
    }

    if (*family_cmd) {
      const auto k = locdom::parse_family(kind);
      if (!k) throw UsageError("unknown family '" + kind + "'");
      locdom::FamilySpec spec{*k, fam_n, fam_r, fam_s};
      const bool sized = *k == locdom::FamilyKind::path || *k == locdom::FamilyKind::cycle ||
                         *k == locdom::FamilyKind::star;
      if (sized && !*n_opt) throw UsageError(kind + " needs --n");
      if (!sized && *k != locdom::FamilyKind::banner) {
        if (!*r_opt || !*s_opt) throw UsageError(kind + " needs --r and --s");
        spec.n = fam_r + fam_s;
      }
      const auto g = locdom::generate(spec);
      std::cout << (emit_format == "edges" ? locdom::to_edge_list(g) : locdom::to_graph6(g) + "\n");
      return exit_ok;
    }

    if (*census_cmd) {
      const auto res = locdom::run_census(max_n, jobs);
      Json j = locdom::report::header(command);
      j["census"] = locdom::report::census_json(res, entries, timing);
      if (out_path.empty())
        std::cout << j.dump(2) << '\n';
      else
        write_file(out_path, j.dump(2) + "\n");
      if (!csv_path.empty()) write_file(csv_path, locdom::report::census_csv(res));
      if (!res.ok()) {
        std::cerr << res.counterexamples().size() << " counterexample(s)\n";
        return exit_violation;
      }
      return exit_ok;
    }

    if (*verify_cmd) {
      locdom::SuiteResult res;
      if (suite == "table1") res = locdom::verify_closed_forms();
      if (suite == "thm3") res = locdom::verify_complement_gap(verify_max_n);
      if (suite == "cactus") res = locdom::verify_cactus(seed, trials);
      if (suite == "parity") res = locdom::verify_associated(seed, trials);
      Json j = locdom::report::header(command);
      j["result"] = locdom::report::suite_json(res, timing);
      std::cout << j.dump(2) << '\n';
      return res.ok() ? exit_ok : exit_violation;
    }
  } catch (const locdom::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
