#include "stg/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <atomic>
#include <sstream>
#include <thread>

#include "stg/criteria.hpp"
#include "stg/errors.hpp"
#include "stg/expr.hpp"
#include "stg/io.hpp"
#include "stg/kgraph.hpp"
#include "stg/lpa.hpp"
#include "stg/steinberg.hpp"

namespace stg {

using nlohmann::json;

namespace {

json verdict_json(const Verdict& v) {
  json out;
  out["answer"] = v.yes ? "yes" : "no";
  if (v.witness) out["witness"] = v.describe_witness();
  json trace = json::array();
  for (const auto& [name, pass] : v.criteria_trace)
    trace.push_back({{"criterion", name}, {"pass", pass}});
  out["criteria_trace"] = trace;
  return out;
}

std::vector<long long> parse_ints(const std::string& s) {
  std::vector<long long> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (cur.empty()) throw ValidationError("empty integer in '" + s + "'");
      out.push_back(std::stoll(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

std::vector<std::string> parse_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

// Window "lo..hi" expanded over every coordinate of a rank-k free group.
std::vector<GroupElem> parse_window(const AbelianGroup& g, const std::string& spec) {
  auto dots = spec.find("..");
  if (dots == std::string::npos)
    throw ValidationError("window must look like lo..hi");
  long long lo = std::stoll(spec.substr(0, dots));
  long long hi = std::stoll(spec.substr(dots + 2));
  if (lo > hi) throw ValidationError("window is empty");
  std::vector<GroupElem> out;
  GroupElem cur(g.rank(), lo);
  while (true) {
    out.push_back(cur);
    int i = g.rank() - 1;
    for (; i >= 0; --i) {
      if (++cur[i] <= hi) break;
      cur[i] = lo;
    }
    if (i < 0) break;
  }
  return out;
}

struct FileJob {
  std::string path;
  json result;
  int exit = 0;
};

// Runs fn over the files, optionally in parallel; results keep input order.
int map_files(const std::vector<std::string>& files, int jobs,
              const std::function<void(FileJob&)>& fn, std::vector<FileJob>& out) {
  out.clear();
  for (const auto& f : files) out.push_back({f, {}, 0});
  auto work = [&](FileJob& job) {
    try {
      fn(job);
    } catch (const ValidationError& e) {
      job.result = {{"error", e.what()}};
      job.exit = 2;
    } catch (const DomainError& e) {
      job.result = {{"error", e.what()}};
      job.exit = 2;
    } catch (const ResourceError& e) {
      job.result = {{"error", std::string("resource cap: ") + e.what()}};
      job.exit = 2;
    }
  };
  if (jobs <= 1 || out.size() <= 1) {
    for (auto& job : out) work(job);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= out.size()) return;
          work(out[i]);
        }
      });
    for (auto& t : pool) t.join();
  }
  int worst = 0;
  for (const auto& job : out) worst = std::max(worst, job.exit);
  return worst;
}

json file_header(const FileJob& job) {
  json j;
  j["path"] = job.path;
  try {
    j["digest"] = digest_file(job.path);
  } catch (const ValidationError&) {
    j["digest"] = nullptr;
  }
  return j;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"strong-grading decision toolkit"};
  app.require_subcommand(1);
  std::string output;
  int jobs = 1;
  app.add_option("--output", output, "write the report document to a file");
  app.add_option("--jobs", jobs, "parallelise across input files")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> files;
  std::string group_spec = "z", vertex, window, gamma_s, delta_s, set_s, expr_text;
  std::string eval_file;
  long long degree_opt = 0;

  CLI::App* graph = app.add_subcommand("graph", "graph-level checks");
  CLI::App* graph_check = graph->add_subcommand("check", "strong grading of the path algebra");
  graph_check->add_option("--group", group_spec, "z or zmod:<n>");
  graph_check->add_option("files", files)->required()->expected(-1);
  CLI::App* graph_certify =
      graph->add_subcommand("certify", "unit factorisation certificate");
  graph_certify->add_option("--vertex", vertex)->required();
  graph_certify->add_option("--degree", degree_opt)->required();
  graph_certify->add_option("files", files)->required()->expected(-1);

  CLI::App* gpd = app.add_subcommand("gpd", "groupoid checks");
  CLI::App* gpd_check = gpd->add_subcommand("check", "the four strong-grading criteria");
  gpd_check->add_option("--window", window, "degree window lo..hi for free gradings");
  gpd_check->add_option("files", files)->required()->expected(-1);
  CLI::App* gpd_factor =
      gpd->add_subcommand("factor", "inclusion-exclusion indicator factorisation");
  gpd_factor->add_option("--gamma", gamma_s)->required();
  gpd_factor->add_option("--delta", delta_s)->required();
  gpd_factor->add_option("--set", set_s)->required();
  gpd_factor->add_option("files", files)->required()->expected(-1);

  CLI::App* alg = app.add_subcommand("alg", "structure-constant algebra checks");
  CLI::App* alg_check = alg->add_subcommand("check", "strong grading via local units");
  alg_check->add_option("files", files)->required()->expected(-1);

  CLI::App* dade = app.add_subcommand("dade", "module-category probes");
  CLI::App* dade_probe_cmd = dade->add_subcommand("probe", "natural map on shifted regular modules");
  dade_probe_cmd->add_option("files", files)->required()->expected(-1);

  CLI::App* paction = app.add_subcommand("paction", "partial action checks");
  CLI::App* paction_check = paction->add_subcommand("check", "globality and strong grading");
  paction_check->add_option("files", files)->required()->expected(-1);

  CLI::App* kp = app.add_subcommand("kp", "higher-rank graph checks");
  CLI::App* kp_check = kp->add_subcommand("check", "strong Z^k grading");
  kp_check->add_option("files", files)->required()->expected(-1);
  CLI::App* kp_validate = kp->add_subcommand("validate", "square table validation");
  kp_validate->add_option("files", files)->required()->expected(-1);

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a path algebra expression");
  eval_cmd->add_option("file", eval_file)->required();
  eval_cmd->add_option("expression", expr_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream dummy;
    int code = app.exit(e, dummy, dummy);
    std::cerr << dummy.str();
    return code == 0 ? 0 : 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  json report;
  report["schema"] = "report/1";
  int status = 0;
  std::vector<FileJob> done;

  auto run_per_file = [&](const std::string& command,
                          const std::function<void(FileJob&)>& fn) {
    report["command"] = command;
    status = map_files(files, jobs, fn, done);
    json results = json::array();
    for (const auto& job : done) {
      json r = file_header(job);
      r.update(job.result);
      results.push_back(r);
    }
    report["results"] = results;
  };

  try {
    if (graph_check->parsed()) {
      run_per_file("graph check", [&](FileJob& job) {
        Graph g = parse_graph(load_document(job.path));
        Verdict v;
        if (group_spec == "z")
          v = strongly_z_graded(g);
        else if (group_spec.rfind("zmod:", 0) == 0)
          v = strongly_zmod_graded(g, std::stoll(group_spec.substr(5)));
        else
          throw ValidationError("--group must be z or zmod:<n>");
        job.result["verdict"] = verdict_json(v);
        job.exit = v.yes ? 0 : 1;
      });
    } else if (graph_certify->parsed()) {
      run_per_file("graph certify", [&](FileJob& job) {
        Graph g = parse_graph(load_document(job.path));
        try {
          Certificate c = unit_factorization_certificate(g, vertex, degree_opt);
          json pairs = json::array();
          for (const auto& [x, y] : c.pairs)
            pairs.push_back({{"x", show_element(x)}, {"y", show_element(y)}});
          job.result["certificate"] = {{"vertex", c.vertex},
                                       {"degree", c.degree},
                                       {"pairs", pairs},
                                       {"verified", c.verified}};
          job.exit = 0;
        } catch (const DomainError& e) {
          job.result["verdict"] = {{"answer", "no"}, {"witness", e.what()}};
          job.exit = 1;
        }
      });
    } else if (gpd_check->parsed()) {
      run_per_file("gpd check", [&](FileJob& job) {
        Groupoid g = parse_groupoid(load_document(job.path));
        GroupoidReport rep = validate_groupoid(g);
        if (!rep.valid) {
          job.result["error"] = "invalid groupoid: " + rep.violation;
          job.exit = 2;
          return;
        }
        StrongGradingReport r =
            window.empty() ? strong_grading_check(g)
                           : strong_grading_check(g, parse_window(g.group, window));
        job.result["verdict"] = {{"answer", r.yes() ? "yes" : "no"},
                                 {"products_fill", r.products_fill},
                                 {"inverses_fill", r.inverses_fill},
                                 {"domains_cover", r.domains_cover},
                                 {"codomains_cover", r.codomains_cover}};
        if (!r.yes()) job.result["verdict"]["witness"] = r.failure;
        job.exit = r.yes() ? 0 : 1;
      });
    } else if (gpd_factor->parsed()) {
      run_per_file("gpd factor", [&](FileJob& job) {
        Groupoid g = parse_groupoid(load_document(job.path));
        GroupoidReport rep = validate_groupoid(g);
        if (!rep.valid) {
          job.result["error"] = "invalid groupoid: " + rep.violation;
          job.exit = 2;
          return;
        }
        GroupElem gamma = g.group.reduce(parse_ints(gamma_s));
        GroupElem delta = g.group.reduce(parse_ints(delta_s));
        std::set<std::string> u;
        for (const auto& m : parse_names(set_s)) u.insert(m);
        try {
          IndicatorExpression e = inclusion_exclusion_factorization(g, u, gamma, delta);
          auto value = evaluate_indicator_expression(g, e);
          std::map<std::string, long long> target;
          for (const auto& m : u) target[m] = 1;
          bool ok = value == target;
          json terms = json::array();
          for (const auto& t : e.terms)
            terms.push_back({{"coeff", t.coeff}, {"v", t.v}, {"w", t.w}});
          job.result["expression"] = terms;
          job.result["verdict"] = {{"answer", ok ? "yes" : "no"}};
          if (!ok) throw InternalInconsistency("factorisation does not re-evaluate");
          job.exit = 0;
        } catch (const DomainError& e) {
          job.result["verdict"] = {{"answer", "no"}, {"witness", e.what()}};
          job.exit = 1;
        }
      });
    } else if (alg_check->parsed()) {
      run_per_file("alg check", [&](FileJob& job) {
        StructAlgebra a = parse_algebra(load_document(job.path));
        AlgebraReport rep = validate_algebra(a);
        if (!rep.valid) {
          job.result["error"] = "invalid algebra: " + rep.violation;
          job.exit = 2;
          return;
        }
        AlgebraGradingReport r = strongly_graded_algebra_check(a);
        job.result["verdict"] = {{"answer", r.yes() ? "yes" : "no"},
                                 {"units_in_products", r.units_in_products},
                                 {"components_fill", r.components_fill}};
        if (!r.yes()) job.result["verdict"]["witness"] = r.failure;
        job.exit = r.yes() ? 0 : 1;
      });
    } else if (dade_probe_cmd->parsed()) {
      run_per_file("dade probe", [&](FileJob& job) {
        StructAlgebra a = parse_algebra(load_document(job.path));
        AlgebraReport rep = validate_algebra(a);
        if (!rep.valid) {
          job.result["error"] = "invalid algebra: " + rep.violation;
          job.exit = 2;
          return;
        }
        DadeProbe p = dade_probe(a);
        json shifts = json::array();
        for (const auto& [alpha, iso] : p.per_shift)
          shifts.push_back({{"shift", alpha}, {"natural_map_iso", iso}});
        job.result["verdict"] = {{"answer", p.all_iso ? "yes" : "no"},
                                 {"per_shift", shifts}};
        job.exit = p.all_iso ? 0 : 1;
      });
    } else if (paction_check->parsed()) {
      run_per_file("paction check", [&](FileJob& job) {
        PartialAction p = parse_paction(load_document(job.path));
        validate_partial_action(p);
        Groupoid t = transformation_groupoid(p);
        StrongGradingReport r = strong_grading_check(t);
        job.result["verdict"] = {{"answer", r.yes() ? "yes" : "no"},
                                 {"is_global", is_global(p)},
                                 {"morphisms", t.morphisms.size()}};
        if (!r.yes()) job.result["verdict"]["witness"] = r.failure;
        job.exit = r.yes() ? 0 : 1;
      });
    } else if (kp_check->parsed()) {
      run_per_file("kp check", [&](FileJob& job) {
        KGraph g = parse_kgraph(load_document(job.path));
        KGraphReport rep = validate_kgraph(g);
        if (!rep.valid) {
          job.result["error"] = "invalid k-graph: " + rep.violation;
          job.exit = 2;
          return;
        }
        Verdict v = strongly_zk_graded(g);
        job.result["verdict"] = verdict_json(v);
        job.exit = v.yes ? 0 : 1;
      });
    } else if (kp_validate->parsed()) {
      run_per_file("kp validate", [&](FileJob& job) {
        KGraph g = parse_kgraph(load_document(job.path));
        KGraphReport rep = validate_kgraph(g);
        job.result["verdict"] = {{"answer", rep.valid ? "yes" : "no"}};
        if (!rep.valid) job.result["verdict"]["witness"] = rep.violation;
        job.exit = rep.valid ? 0 : 1;
      });
    } else if (eval_cmd->parsed()) {
      report["command"] = "eval";
      FileJob job{eval_file, {}, 0};
      try {
        Graph g = parse_graph(load_document(job.path));
        LpaElement<long long> e = parse_lpa_expression(g, expr_text);
        LpaElement<long long> nf = ck2_reduce(g, e);
        job.result["expression"] = expr_text;
        job.result["value"] = show_element(nf);
        auto d = degree(nf);
        job.result["degree"] = d ? json(*d) : json(nullptr);
      } catch (const ValidationError& e) {
        job.result = {{"error", e.what()}};
        job.exit = 2;
      } catch (const DomainError& e) {
        job.result = {{"error", e.what()}};
        job.exit = 2;
      }
      json r = file_header(job);
      r.update(job.result);
      report["results"] = json::array({r});
      status = job.exit;
    }
  } catch (const ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }

  std::string text = report.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "cannot write '" << output << "'\n";
      return 2;
    }
    out << text;
  }
  auto t1 = std::chrono::steady_clock::now();
  std::cerr << "elapsed_ms="
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
            << "\n";
  return status;
}

}  // namespace stg
