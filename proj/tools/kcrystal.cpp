#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "kcrystal/graph.hpp"
#include "kcrystal/keys.hpp"
#include "kcrystal/kohnert.hpp"
#include "kcrystal/polynomial.hpp"
#include "kcrystal/serialize.hpp"
#include "kcrystal/skyline.hpp"
#include "kcrystal/suites.hpp"
#include "kcrystal/tableau.hpp"

namespace {

using namespace kcrystal;

WeakComposition partition_arg(const std::string& text) {
  WeakComposition parts;
  for (int p : parse_composition(text))
    if (p > 0) parts.push_back(p);
  if (!is_partition(parts)) throw std::invalid_argument("shape '" + text + "' is not a partition");
  return parts;
}

int lascoux_cmd(const std::string& weight, std::optional<int> n_opt, bool atom, const std::string& format) {
  const WeakComposition a = parse_composition(weight);
  const int n = n_opt.value_or(static_cast<int>(a.size()));
  if (static_cast<int>(a.size()) > n) throw std::invalid_argument("weight longer than n");
  const BetaPolynomial p = atom ? lascoux_atom(a, n) : lascoux(a, n);
  if (format == "json")
    std::cout << polynomial_to_json(p).dump() << '\n';
  else
    std::cout << p.str() << '\n';
  return 0;
}

int enumerate_cmd(const std::string& kind, const std::string& shape, const std::string& weight, std::optional<int> n_opt,
                  bool count) {
  std::vector<Json> lines;
  std::size_t total = 0;
  if (kind == "svt") {
    if (shape.empty()) throw std::invalid_argument("svt needs --shape");
    const WeakComposition lambda = partition_arg(shape);
    const auto all = enumerate_svt(n_opt.value_or(static_cast<int>(lambda.size())), lambda);
    total = all.size();
    if (!count)
      for (const auto& t : all) lines.push_back(tableau_to_json(t));
  } else if (kind == "kohnert" || kind == "skyline") {
    if (weight.empty()) throw std::invalid_argument(kind + " needs --weight");
    WeakComposition a = parse_composition(weight);
    const int n = n_opt.value_or(static_cast<int>(a.size()));
    if (static_cast<int>(a.size()) > n) throw std::invalid_argument("weight longer than n");
    a.resize(static_cast<std::size_t>(n), 0);
    if (kind == "kohnert") {
      const auto all = closure(a);
      total = all.size();
      if (!count)
        for (const auto& d : all) lines.push_back(diagram_to_json(d));
    } else {
      const auto all = enumerate_skyline(a, n);
      total = all.size();
      if (!count)
        for (const auto& s : all) lines.push_back(skyline_to_json(s));
    }
  } else {
    throw std::invalid_argument("unknown kind '" + kind + "' (svt, kohnert, skyline)");
  }
  if (count) {
    std::cout << total << '\n';
  } else {
    for (const auto& j : lines) std::cout << j.dump() << '\n';
  }
  return 0;
}

int graph_cmd(const std::string& shape, std::optional<int> n_opt, bool with_k) {
  const WeakComposition lambda = partition_arg(shape);
  std::cout << to_dot(crystal_graph(lambda, n_opt.value_or(static_cast<int>(lambda.size())), with_k));
  return 0;
}

int keys_report_cmd(const std::string& shape, int n) {
  for (const auto& row : conjecture61_report(partition_arg(shape), n)) {
    Json j{{"shape", row.shape},
           {"w", row.w.word()},
           {"map", row.map == KeyMap::kCalK ? "calK" : "K"},
           {"involution", row.involution},
           {"mode", row.atom ? "atom" : "ideal"},
           {"match", row.match}};
    if (!row.match) j["witness"] = row.witness;
    std::cout << j.dump() << '\n';
  }
  return 0;
}

int verify_cmd(const std::string& suite, const Bounds& bounds, const std::string& format, bool timing,
               std::optional<int> workers) {
  const auto results = run_suite(suite, bounds, workers.value_or(default_workers()));
  int pass = 0, fail = 0, report = 0;
  double total_ms = 0;
  for (const auto& r : results) {
    (r.status == Status::kPass ? pass : r.status == Status::kFail ? fail : report)++;
    total_ms += r.elapsed_ms;
    if (format == "json") {
      Json j{{"suite", r.suite}, {"case", r.case_name}, {"status", to_string(r.status)}};
      if (!r.witness.empty()) j["witness"] = r.witness;
      if (timing) j["elapsed_ms"] = r.elapsed_ms;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << to_string(r.status) << "  " << r.case_name;
      if (!r.witness.empty()) std::cout << "  [" << r.witness << "]";
      if (timing) std::cout << "  (" << r.elapsed_ms << " ms)";
      std::cout << '\n';
    }
  }
  if (format == "json") {
    Json j{{"suite", suite}, {"summary", {{"pass", pass}, {"fail", fail}, {"report", report}}}};
    if (timing) j["elapsed_ms"] = total_ms;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << suite << ": " << pass << " pass, " << fail << " fail, " << report << " report";
    if (timing) std::cout << " (" << total_ms << " ms)";
    std::cout << '\n';
  }
  return fail == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Set-valued tableaux, K-crystals and Lascoux polynomials"};
  app.require_subcommand(1);

  std::string weight, shape, format = "text", kind, suite;
  std::optional<int> n, workers;
  bool atom = false, count = false, with_k = false, timing = false;
  Bounds bounds;
  std::string bound_shape;

  auto* las = app.add_subcommand("lascoux", "Print a Lascoux polynomial or atom");
  las->add_option("--weight", weight, "weak composition, e.g. 0,2,2")->required();
  las->add_option("--n", n, "number of variables (default: length of weight)");
  las->add_flag("--atom", atom, "print the Lascoux atom instead");
  las->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* en = app.add_subcommand("enumerate", "List tableaux, K-Kohnert diagrams or skyline fillings as JSON lines");
  en->add_option("kind", kind, "svt | kohnert | skyline")->required()->check(CLI::IsMember({"svt", "kohnert", "skyline"}));
  en->add_option("--shape", shape, "partition (svt)");
  en->add_option("--weight", weight, "weak composition (kohnert, skyline)");
  en->add_option("--n", n, "number of letters");
  en->add_flag("--count", count, "print only the number of objects");

  auto* gr = app.add_subcommand("graph", "Crystal graph in DOT format");
  gr->add_option("--shape", shape, "partition")->required();
  gr->add_option("--n", n, "number of letters");
  gr->add_flag("--with-k", with_k, "add dashed f_i^K edges (rectangles only)");
  gr->add_option("--format", format)->check(CLI::IsMember({"dot"}));

  int report_n = 3;
  auto* kr = app.add_subcommand("keys-report", "Compare key-defined subsets against Lascoux characters, JSON lines");
  kr->add_option("--shape", shape, "partition")->required();
  kr->add_option("--n", report_n, "number of letters")->required();

  auto* ve = app.add_subcommand("verify", "Run a verification suite");
  ve->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  ve->add_option("--max-n", bounds.max_n)->check(CLI::Range(1, 8));
  ve->add_option("--max-side", bounds.max_side)->check(CLI::Range(1, 6));
  ve->add_option("--max-cells", bounds.max_cells)->check(CLI::Range(1, 12));
  ve->add_option("--max-degree", bounds.max_degree)->check(CLI::Range(0, 8));
  ve->add_option("--shape", bound_shape, "restrict to one partition");
  ve->add_option("--n", n, "restrict to one n");
  ve->add_option("--workers", workers, "worker threads (default: KCRYSTAL_WORKERS or hardware)")->check(CLI::PositiveNumber);
  ve->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  ve->add_flag("--timing", timing, "include elapsed times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // usage errors share exit status 2 with runtime errors
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*las) return lascoux_cmd(weight, n, atom, format);
    if (*en) return enumerate_cmd(kind, shape, weight, n, count);
    if (*gr) return graph_cmd(shape, n, with_k);
    if (*kr) return keys_report_cmd(shape, report_n);
    if (*ve) {
      if (!bound_shape.empty()) bounds.shape = partition_arg(bound_shape);
      bounds.n = n;
      return verify_cmd(suite, bounds, format, timing, workers);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
