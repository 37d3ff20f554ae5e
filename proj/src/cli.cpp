#include "lmriv/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "lmriv/analyzer.hpp"
#include "lmriv/corpus.hpp"
#include "lmriv/laplacian_matching.hpp"
#include "lmriv/matching.hpp"
#include "lmriv/tu_census.hpp"
#include "lmriv/verify.hpp"

namespace lmriv {

namespace {

using Json = nlohmann::ordered_json;

/// Worst outcome seen so far; input failure outranks a size cap, which
/// outranks an invariant failure, which outranks a discovery.
class Outcome {
 public:
  void raise(int code) {
    if (rank(code) > rank(code_)) code_ = code;
  }
  int code() const { return code_; }

 private:
  static int rank(int code) {
    switch (code) {
      case exit_code::input_failure:
        return 4;
      case exit_code::size_cap:
        return 3;
      case exit_code::invariant_failure:
        return 2;
      case exit_code::two_place_discovery:
        return 1;
      default:
        return 0;
    }
  }
  int code_ = exit_code::ok;
};

Json big(const Integer& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

Json bigs(const std::vector<Integer>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(big(v));
  return out;
}

Json coefficients(const IntPoly& p) {
  Json out = Json::array();
  for (int k = 0; k <= p.degree(); ++k) out.push_back(big(p[k]));
  return out;
}

std::string rational_text(const Rational& r) { return r.get_str(); }

void emit(std::ostream& out, const Json& record) { out << record.dump() << '\n'; }

struct Options {
  std::string kind = "laplacian";
  std::string width = "1e-12";
  std::string suite = "all";
  int jobs = 0;
  int max_size = CensusLimits{}.max_edges;
  int index = 0;  // 0: the order of the graph
  std::vector<std::string> inputs;

  CensusLimits limits() const { return CensusLimits{max_size}; }
};

/// Graphs for the single-graph commands: positional arguments, or standard
/// input lines when there are none.
std::vector<CorpusRecord> gather(const Options& opts, std::istream& in) {
  if (opts.inputs.empty()) return read_corpus(in);
  std::ostringstream joined;
  for (const auto& text : opts.inputs) joined << text << '\n';
  std::istringstream stream(joined.str());
  return read_corpus(stream);
}

std::vector<CorpusRecord> open_corpus(const Options& opts, std::istream& in) {
  if (opts.inputs.size() > 1) throw std::invalid_argument("expected a single corpus file");
  if (opts.inputs.empty() || opts.inputs.front() == "-") return read_corpus(in);
  return read_corpus_file(opts.inputs.front());
}

bool usable(const CorpusRecord& record, std::ostream& err, Outcome& outcome) {
  if (record.graph) return true;
  err << "lmriv: line " << record.line << ": malformed graph6: " << record.error << '\n';
  outcome.raise(exit_code::input_failure);
  return false;
}

/// Renders each root at `digits` decimals, adding digits (and refining) until
/// neighbouring renderings differ.
Json render_roots(RootSet roots, const Rational& width) {
  roots.refine(width);
  int digits = 9;
  std::vector<std::string> values;
  for (;;) {
    values.clear();
    for (const auto& r : roots.roots()) {
      values.push_back(to_decimal(r.interval.exact() ? r.interval.lo : r.interval.midpoint(), digits));
    }
    if (std::adjacent_find(values.begin(), values.end()) == values.end()) break;
    ++digits;
    Rational finer = 1;
    for (int k = 0; k <= digits; ++k) finer /= 10;
    roots.refine(std::min(width, finer));
  }
  Json out = Json::array();
  for (std::size_t k = 0; k < roots.roots().size(); ++k) {
    const auto& r = roots.roots()[k];
    out.push_back(Json{{"value", values[k]},
                       {"multiplicity", r.multiplicity},
                       {"lo", rational_text(r.interval.lo)},
                       {"hi", rational_text(r.interval.hi)}});
  }
  return out;
}

int cmd_poly(const Options& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  Outcome outcome;
  for (const auto& record : gather(opts, in)) {
    if (!usable(record, err, outcome)) continue;
    const Graph& g = *record.graph;
    Json j{{"graph", record.text}, {"kind", opts.kind}, {"degree", g.order()}};
    if (opts.kind == "matching") {
      j["coefficients"] = coefficients(matching_polynomial(g));
      j["matching_counts"] = bigs(matching_counts_oracle(g).counts);
      emit(out, j);
      continue;
    }
    const IntPoly direct = lm_direct(g).poly;
    j["coefficients"] = coefficients(direct);
    j["b"] = bigs(LaplacianMatchingPoly{direct}.b());
    Json routes{{"direct", true}};
    bool agree = true;
    try {
      const bool sub = lm_subdivision(g).poly == direct;
      routes["subdivision"] = sub;
      agree = agree && sub;
    } catch (const InternalInconsistency& e) {
      routes["subdivision"] = false;
      agree = false;
      err << "lmriv: " << record.text << ": " << e.what() << '\n';
    }
    if (g.size() <= opts.max_size) {
      const bool tu = lm_tu(g, opts.limits()).poly == direct;
      routes["tu_census"] = tu;
      agree = agree && tu;
    } else {
      routes["tu_census"] = nullptr;
      err << "lmriv: " << record.text << ": census route skipped, " << g.size()
          << " edges exceed --max-size " << opts.max_size << '\n';
    }
    j["routes"] = routes;
    j["routes_agree"] = agree;
    if (!agree) outcome.raise(exit_code::invariant_failure);
    emit(out, j);
  }
  return outcome.code();
}

int cmd_roots(const Options& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  const Rational width = parse_rational(opts.width);
  if (width <= 0) throw std::invalid_argument("--width must be positive");
  Outcome outcome;
  for (const auto& record : gather(opts, in)) {
    if (!usable(record, err, outcome)) continue;
    const Graph& g = *record.graph;
    const IntPoly p = opts.kind == "matching" ? matching_polynomial(g) : lm_direct(g).poly;
    const RootSet roots = isolate_real_roots(p);
    Json j{{"graph", record.text}, {"kind", opts.kind}, {"width", opts.width}};
    j["real_root_count"] = roots.total_multiplicity();
    j["roots"] = render_roots(roots, width);
    if (roots.total_multiplicity() != g.order()) {
      err << "lmriv: " << record.text << ": only " << roots.total_multiplicity() << " of "
          << g.order() << " roots are real\n";
      outcome.raise(exit_code::invariant_failure);
    }
    emit(out, j);
  }
  return outcome.code();
}

std::vector<Suite> selected_suites(const std::string& name) {
  if (name == "all") return {Suite::Identities, Suite::Roots, Suite::Census, Suite::Partitions};
  if (auto s = parse_suite(name)) return {*s};
  throw std::invalid_argument("unknown suite '" + name + "'");
}

int cmd_verify(const Options& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto suites = selected_suites(opts.suite);
  const auto records = open_corpus(opts, in);

  struct Item {
    std::vector<Json> failures;
    long checks = 0;
    bool skipped = false;
    std::string size_cap;
  };
  std::vector<Item> items(records.size());
  parallel_for(records.size(), opts.jobs, [&](std::size_t k) {
    const auto& record = records[k];
    if (!record.graph) return;
    Item& item = items[k];
    if (!is_connected(*record.graph)) {
      item.skipped = true;
      return;
    }
    for (Suite suite : suites) {
      try {
        const SuiteOutcome o = run_suite(*record.graph, suite, opts.limits());
        item.checks += o.checks;
        for (const auto& f : o.failures) {
          item.failures.push_back(Json{{"graph", record.text},
                                       {"line", record.line},
                                       {"suite", to_string(suite)},
                                       {"invariant", f.invariant},
                                       {"detail", f.detail}});
        }
      } catch (const SizeCapError& e) {
        item.size_cap = e.what();
        return;
      } catch (const InternalInconsistency& e) {
        ++item.checks;
        item.failures.push_back(Json{{"graph", record.text},
                                     {"line", record.line},
                                     {"suite", to_string(suite)},
                                     {"invariant", "internal_consistency"},
                                     {"detail", e.what()}});
      }
    }
  });

  Outcome outcome;
  long checks = 0, failures = 0, graphs = 0, skipped = 0, capped = 0;
  for (std::size_t k = 0; k < records.size(); ++k) {
    if (!usable(records[k], err, outcome)) continue;
    const Item& item = items[k];
    if (item.skipped) {
      ++skipped;
      err << "lmriv: line " << records[k].line << ": skipped disconnected graph " << records[k].text
          << '\n';
      continue;
    }
    ++graphs;
    if (!item.size_cap.empty()) {
      ++capped;
      err << "lmriv: line " << records[k].line << ": " << item.size_cap << '\n';
      outcome.raise(exit_code::size_cap);
    }
    checks += item.checks;
    for (const auto& f : item.failures) {
      ++failures;
      emit(out, f);
    }
  }
  if (failures > 0) outcome.raise(exit_code::invariant_failure);

  Json names = Json::array();
  for (Suite s : suites) names.push_back(to_string(s));
  emit(out, Json{{"summary",
                  {{"command", "verify"},
                   {"suites", names},
                   {"records", records.size()},
                   {"graphs", graphs},
                   {"skipped_disconnected", skipped},
                   {"size_capped", capped},
                   {"checks", checks},
                   {"failures", failures}}}});
  return outcome.code();
}

Json report_json(const VariationReport& r) {
  Json obstructions = Json::array();
  for (const auto& o : r.obstructions) {
    Json witness = Json::object();
    for (const auto& [name, value] : o.witness) witness[name] = value;
    obstructions.push_back(Json{{"tag", to_string(o.tag)}, {"witness", witness}});
  }
  Json quotient = nullptr;
  if (r.quotient_relation) quotient = *r.quotient_relation;
  return Json{{"graph", r.graph},
              {"edge", {r.edge.u, r.edge.v}},
              {"degrees", {r.degree_u, r.degree_v}},
              {"deltas", r.deltas},
              {"interlacing", r.interlacing_ok},
              {"lambda1_strict", r.lambda1_strict},
              {"sum_increment", big(r.sum_increment)},
              {"one_place", r.one_place},
              {"two_place", r.two_place},
              {"quotient_relation", quotient},
              {"obstructions", obstructions},
              {"near_miss", r.near_miss}};
}

int cmd_scan(const Options& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  ReportOptions report_options;
  report_options.width = parse_rational(opts.width);
  if (report_options.width <= 0) throw std::invalid_argument("--width must be positive");
  const auto records = open_corpus(opts, in);
  const ScanResult result = scan_corpus(records, opts.jobs, report_options);

  Outcome outcome;
  for (const auto& notice : result.notices) {
    err << "lmriv: line " << notice.line << ": " << notice.message << '\n';
  }
  if (result.summary.malformed > 0) outcome.raise(exit_code::input_failure);
  for (const auto& r : result.reports) emit(out, report_json(r));

  const ScanSummary& s = result.summary;
  for (const auto& hit : s.two_place_hits) {
    err << "lmriv: POTENTIAL DISCOVERY: two-place variation at " << hit << '\n';
  }
  if (s.one_place > 0) {
    err << "lmriv: one-place variation detected (" << s.one_place << " pairs)\n";
    outcome.raise(exit_code::invariant_failure);
  }
  if (s.two_place > 0) outcome.raise(exit_code::two_place_discovery);

  Json min_near_miss = nullptr;
  if (s.min_near_miss) min_near_miss = *s.min_near_miss;
  emit(out, Json{{"summary",
                  {{"command", "scan"},
                   {"records", s.records},
                   {"graphs", s.graphs},
                   {"skipped_disconnected", s.skipped_disconnected},
                   {"malformed", s.malformed},
                   {"reports", s.reports},
                   {"one_place", s.one_place},
                   {"two_place", s.two_place},
                   {"covered_false", s.covered_false},
                   {"observed_false", s.observed_false},
                   {"two_place_hits", s.two_place_hits},
                   {"min_near_miss", min_near_miss}}}});
  return outcome.code();
}

Json ratio_fields(const RatioCheck& r) {
  return Json{{"spanning_trees", big(r.spanning_trees)},
              {"unicyclic_spanning", big(r.unicyclic_spanning)},
              {"girth", r.girth},
              {"cycle_dim", r.cycle_dim},
              {"holds", r.holds}};
}

int cmd_census(const Options& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  Outcome outcome;
  for (const auto& record : gather(opts, in)) {
    if (!usable(record, err, outcome)) continue;
    const Graph& g = *record.graph;
    const int i = opts.index == 0 ? g.order() : opts.index;
    if (i < 1 || i > g.order()) {
      err << "lmriv: " << record.text << ": index " << i << " outside 1.." << g.order() << '\n';
      outcome.raise(exit_code::input_failure);
      continue;
    }
    try {
      Json j{{"graph", record.text}, {"i", i}, {"b_i", big(coefficient_b(g, i, opts.limits()))}};
      j["spanning_trees"] = big(spanning_tree_count(g));
      try {
        const Json ratio = ratio_fields(ratio_check(g, opts.limits()));
        for (const auto& [key, value] : ratio.items()) {
          if (key != "spanning_trees") j[key] = value;
        }
        if (!ratio["holds"].get<bool>()) outcome.raise(exit_code::invariant_failure);
      } catch (const DomainError& e) {
        j["ratio_error"] = e.what();
      }
      emit(out, j);
    } catch (const SizeCapError& e) {
      err << "lmriv: " << record.text << ": " << e.what() << '\n';
      outcome.raise(exit_code::size_cap);
    }
  }
  return outcome.code();
}

int cmd_ratio(const Options& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  Outcome outcome;
  for (const auto& record : gather(opts, in)) {
    if (!usable(record, err, outcome)) continue;
    const Graph& g = *record.graph;
    try {
      const RatioCheck r = ratio_check(g, opts.limits());
      Json j{{"graph", record.text}};
      const Json fields = ratio_fields(r);
      for (const auto& [key, value] : fields.items()) j[key] = value;
      j["lhs"] = big(r.spanning_trees * r.cycle_dim);
      j["rhs"] = big(r.unicyclic_spanning * r.girth);
      if (!r.holds) outcome.raise(exit_code::invariant_failure);

      long partitions = 0, checks = 0, exceeding = 0;
      std::optional<Rational> min_ratio;
      const auto candidates = non_edges(g);
      for_each_admissible_partition(g, [&](const AdmissiblePartition& p) {
        ++partitions;
        for (const Edge& e : candidates) {
          const PartitionRatio pr = partition_ratio_check(g, e, p, opts.limits());
          ++checks;
          if (pr.exceeds_one) ++exceeding;
          if (!min_ratio || pr.ratio < *min_ratio) min_ratio = pr.ratio;
        }
      });
      j["partitions"] = Json{{"admissible", partitions},
                             {"checks", checks},
                             {"exceeding_one", exceeding},
                             {"min_ratio", min_ratio ? Json(rational_text(*min_ratio)) : Json()}};
      emit(out, j);
    } catch (const DomainError& e) {
      err << "lmriv: " << record.text << ": " << e.what() << '\n';
      outcome.raise(exit_code::input_failure);
    } catch (const SizeCapError& e) {
      err << "lmriv: " << record.text << ": " << e.what() << '\n';
      outcome.raise(exit_code::size_cap);
    }
  }
  return outcome.code();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Laplacian matching polynomials, exact roots and edge-variation scans", "lmriv"};
  app.require_subcommand(1);
  Options opts;

  auto graphs_arg = [&](CLI::App* sub) {
    sub->add_option("graphs", opts.inputs, "graph6 records (default: standard input)");
  };
  auto limits_arg = [&](CLI::App* sub) {
    sub->add_option("--max-size", opts.max_size, "edge budget for census enumeration")
        ->check(CLI::Range(1, 63));
  };
  auto kind_arg = [&](CLI::App* sub) {
    sub->add_option("--kind", opts.kind, "matching or laplacian")
        ->check(CLI::IsMember({"matching", "laplacian"}));
  };

  auto* poly = app.add_subcommand("poly", "coefficients of M(G, x) or LM(G, x)");
  kind_arg(poly);
  limits_arg(poly);
  graphs_arg(poly);

  auto* roots = app.add_subcommand("roots", "certified real roots");
  kind_arg(roots);
  roots->add_option("--width", opts.width, "certified interval width");
  graphs_arg(roots);

  auto* verify = app.add_subcommand("verify", "run invariant suites over a graph6 corpus");
  verify->add_option("--suite", opts.suite, "identities, roots, census, partitions or all")
      ->check(CLI::IsMember({"identities", "roots", "census", "partitions", "all"}));
  verify->add_option("--jobs", opts.jobs, "worker threads (default: all cores)");
  limits_arg(verify);
  verify->add_option("corpus", opts.inputs, "graph6 file, or - for standard input");

  auto* scan = app.add_subcommand("scan", "edge-variation reports over a graph6 corpus");
  scan->add_option("--jobs", opts.jobs, "worker threads (default: all cores)");
  scan->add_option("--width", opts.width, "certified interval width");
  scan->add_option("corpus", opts.inputs, "graph6 file, or - for standard input");

  auto* census = app.add_subcommand("census", "TU-subgraph census and spanning counts");
  census->add_option("-i,--index", opts.index, "coefficient index (default: n)");
  limits_arg(census);
  graphs_arg(census);

  auto* ratio = app.add_subcommand("ratio", "spanning tree / unicyclic counting bound");
  limits_arg(ratio);
  graphs_arg(ratio);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::input_failure;
  }

  try {
    if (*poly) return cmd_poly(opts, in, out, err);
    if (*roots) return cmd_roots(opts, in, out, err);
    if (*verify) return cmd_verify(opts, in, out, err);
    if (*scan) return cmd_scan(opts, in, out, err);
    if (*census) return cmd_census(opts, in, out, err);
    if (*ratio) return cmd_ratio(opts, in, out, err);
  } catch (const SizeCapError& e) {
    err << "lmriv: " << e.what() << '\n';
    return exit_code::size_cap;
  } catch (const InternalInconsistency& e) {
    err << "lmriv: " << e.what() << '\n';
    return exit_code::invariant_failure;
  } catch (const std::exception& e) {
    err << "lmriv: " << e.what() << '\n';
    return exit_code::input_failure;
  }
  return exit_code::input_failure;
}

}  // namespace lmriv
