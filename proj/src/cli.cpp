#include "zagreb/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "zagreb/enumerate.hpp"
#include "zagreb/families.hpp"
#include "zagreb/graph6.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/operations.hpp"
#include "zagreb/report.hpp"
#include "zagreb/verify.hpp"

namespace zagreb {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OrderRange {
  std::size_t from = 0;
  std::size_t to = 0;
};

// "7" or "4..8"
OrderRange parse_range(const std::string& text) {
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("bad order range '" + text + "' (expected N or A..B)");
    }
    return std::stoul(s);
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::size_t n = number(text);
    return {n, n};
  }
  OrderRange r{number(text.substr(0, dots)), number(text.substr(dots + 2))};
  if (r.from > r.to) throw UsageError("empty order range '" + text + "'");
  return r;
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("bad vertex list '" + text + "'");
    }
    out.push_back(static_cast<Vertex>(std::stoul(item)));
  }
  return out;
}

std::vector<IndexId> parse_index_list(const std::string& text) {
  if (text == "all") return {std::begin(kAllIndices), std::end(kAllIndices)};
  std::vector<IndexId> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto id = parse_index(item);
    if (!id) throw UsageError("unknown index '" + item + "' (m1, m2, em1, em2, all)");
    out.push_back(*id);
  }
  if (out.empty()) throw UsageError("no index selected");
  return out;
}

// Writes to --out when given, else to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : target_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open '" + path + "' for writing");
      target_ = &file_;
    }
  }
  std::ostream& stream() { return *target_; }

 private:
  std::ofstream file_;
  std::ostream* target_;
};

std::vector<Graph6Record> read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return read_graph6_stream(in);
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "'");
  return read_graph6_stream(file);
}

struct Options {
  // shared
  std::string n_range = "4..7";
  std::size_t cyclomatic = 3;
  std::string index = "em1";
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  bool allow_large = false;
  std::string out;
  std::string format;
  // compute
  std::string input = "-";
  // transform
  std::string op;
  std::string graph;
  std::string path;
  std::string subtree;
  Vertex u = 0;
  Vertex v = 0;
  Vertex root = 0;
  Vertex y = 0;
  // families
  std::string family;
  std::size_t edges = 0;
  bool with_em1 = false;
  // enumerate
  bool no_dedup = false;
  std::string csv;
  std::string min_witnesses;
  std::string max_witnesses;
  // verify
  std::vector<std::string> claims;
  std::size_t trials = 1000;
  std::size_t exhaustive_order = 7;
  std::size_t min_sites = 100;
};

int cmd_compute(const Options& o, std::istream& in, std::ostream& out) {
  const auto ids = parse_index_list(o.index);
  const std::string format = o.format.empty() ? "csv" : o.format;
  if (format != "csv" && format != "json") throw UsageError("compute --format must be csv or json");
  const auto records = read_input(o.input, in);
  Sink sink(o.out, out);
  if (format == "csv") {
    sink.stream() << "graph6,index,value\n";
    for (const auto& r : records) {
      for (IndexId id : ids) {
        sink.stream() << r.text << ',' << index_name(id) << ',' << compute_index(id, r.graph).value << '\n';
      }
    }
  } else {
    json rows = json::array();
    for (const auto& r : records) {
      json row = {{"graph6", r.text}, {"line", r.line_number}, {"n", r.graph.order()}, {"m", r.graph.size()}};
      for (IndexId id : ids) row[std::string(index_name(id))] = compute_index(id, r.graph).value;
      rows.push_back(std::move(row));
    }
    sink.stream() << json{{"schema", kReportSchema}, {"kind", "indices"}, {"graphs", rows}}.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_transform(const Options& o, std::istream& in, std::ostream& out) {
  Graph g;
  if (!o.graph.empty()) {
    g = graph6_decode(o.graph);
  } else {
    const auto records = read_input(o.input, in);
    if (records.empty()) throw UsageError("transform needs a graph (--graph or one graph6 line on input)");
    g = records.front().graph;
  }
  RewriteSpec spec;
  if (o.op == "I") {
    spec = ShiftPendantsSite{o.u, o.v};
  } else if (o.op == "II") {
    spec = CollapsePathSite{parse_vertex_list(o.path)};
  } else if (o.op == "III") {
    spec = TreeToPathSite{o.root, parse_vertex_list(o.subtree), o.y};
  } else if (o.op == "IV") {
    spec = MergePendantsSite{o.u, o.v};
  } else {
    throw UsageError("--op must be one of I, II, III, IV");
  }
  const RewriteResult r = apply_rewrite(g, spec);
  json mapping = json::array();
  for (Vertex x : r.mapping) mapping.push_back(x == kNoVertex ? json(nullptr) : json(x));
  Sink sink(o.out, out);
  sink.stream() << json{{"schema", kReportSchema},
                        {"kind", "rewrite"},
                        {"operation", o.op},
                        {"site", describe(spec)},
                        {"before", graph6_encode(g)},
                        {"after", graph6_encode(r.graph)},
                        {"em1_before", r.em1_before},
                        {"em1_after", r.em1_after},
                        {"delta", r.delta()},
                        {"mapping", mapping}}
                       .dump(2)
                << '\n';
  return kExitOk;
}

int cmd_families(const Options& o, std::ostream& out) {
  const OrderRange range = parse_range(o.n_range);
  std::optional<Reference> ref;
  if (o.family != "snm") {
    ref = parse_reference(o.family);
    if (!ref || !reference_info(*ref).has_constructor) {
      throw UsageError("unknown family '" + o.family + "' (path, star, cycle, snn, snn1, snn2, snk4, snm)");
    }
  } else if (o.edges == 0) {
    throw UsageError("family snm needs --m");
  }
  Sink sink(o.out, out);
  if (o.with_em1) sink.stream() << "graph6,n,em1,expected\n";
  for (std::size_t n = range.from; n <= range.to; ++n) {
    const Graph g = ref ? construct(*ref, n) : s_n_m(n, o.edges);
    if (!o.with_em1) {
      sink.stream() << graph6_encode(g) << '\n';
      continue;
    }
    sink.stream() << graph6_encode(g) << ',' << n << ',' << em1(g).value << ',';
    if (ref) {
      sink.stream() << expected_em1(*ref, n);
    } else {
      sink.stream() << "";
    }
    sink.stream() << '\n';
  }
  return kExitOk;
}

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
  std::ofstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  for (const auto& l : lines) file << l << '\n';
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const OrderRange range = parse_range(o.n_range);
  const auto ids = parse_index_list(o.index);
  json reports = json::array();
  std::vector<std::string> csv_rows;
  std::vector<std::string> mins;
  std::vector<std::string> maxs;
  for (std::size_t n = range.from; n <= range.to; ++n) {
    for (IndexId id : ids) {
      EnumSpec spec;
      spec.n = n;
      spec.cyclomatic = o.cyclomatic;
      spec.workers = o.workers;
      spec.allow_large = o.allow_large;
      spec.dedup = !o.no_dedup;
      const ExtremalReport r = extremal_scan(spec, id);
      reports.push_back(to_json(r));
      csv_rows.push_back(extremal_csv_row(r));
      mins.insert(mins.end(), r.min.witnesses.begin(), r.min.witnesses.end());
      maxs.insert(maxs.end(), r.max.witnesses.begin(), r.max.witnesses.end());
    }
  }
  Sink sink(o.out, out);
  sink.stream() << json{{"schema", kReportSchema}, {"kind", "extremal-scans"}, {"reports", reports}}.dump(2) << '\n';
  if (!o.csv.empty()) {
    std::vector<std::string> lines{extremal_csv_header()};
    lines.insert(lines.end(), csv_rows.begin(), csv_rows.end());
    write_lines(o.csv, lines);
  }
  if (!o.min_witnesses.empty()) write_lines(o.min_witnesses, mins);
  if (!o.max_witnesses.empty()) write_lines(o.max_witnesses, maxs);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.claims.empty()) throw UsageError("verify needs a claim (theorem-1..5, lemma-1..4)");
  std::vector<VerdictReport> verdicts;
  for (const auto& text : o.claims) {
    const auto claim = parse_claim(text);
    if (!claim) throw UsageError("unknown claim '" + text + "' (theorem-1..5, lemma-1..4)");
    if (is_theorem(*claim)) {
      const OrderRange range = parse_range(o.n_range);
      verdicts.push_back(verify_theorem(*claim, {range.from, range.to, o.workers, o.allow_large}));
    } else {
      verdicts.push_back(verify_lemma(*claim, {o.trials, o.seed, o.exhaustive_order, o.min_sites, o.workers}));
    }
  }
  bool all_pass = true;
  json doc;
  if (verdicts.size() == 1) {
    doc = to_json(verdicts.front());
    all_pass = verdicts.front().status == Status::Pass;
  } else {
    json list = json::array();
    for (const auto& v : verdicts) {
      list.push_back(to_json(v));
      all_pass = all_pass && v.status == Status::Pass;
    }
    doc = {{"schema", kReportSchema}, {"kind", "verdicts"}, {"verdicts", list}};
  }
  Sink sink(o.out, out);
  sink.stream() << doc.dump(2) << '\n';
  return all_pass ? kExitOk : kExitVerificationFailed;
}

int cmd_brace_census(const Options& o, std::ostream& out) {
  const OrderRange range = parse_range(o.n_range);
  Sink sink(o.out, out);
  for (std::size_t n = range.from; n <= range.to; ++n) {
    EnumSpec spec;
    spec.n = n;
    spec.cyclomatic = o.cyclomatic;
    spec.workers = o.workers;
    spec.allow_large = o.allow_large;
    for (const auto& form : brace_census(spec)) sink.stream() << form.bytes << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zagreb-type graph indices, extremal rewrites and exhaustive verification", "zagreb"};
  app.require_subcommand(1);
  Options o;

  auto* compute = app.add_subcommand("compute", "Compute indices for graph6 lines");
  compute->add_option("input", o.input, "graph6 file, '-' for standard input");
  compute->add_option("--index", o.index, "Comma-separated m1,m2,em1,em2 or 'all'");
  compute->add_option("--format", o.format, "csv (default) or json");
  compute->add_option("--out", o.out, "Output file");

  auto* transform = app.add_subcommand("transform", "Apply one rewrite and report the EM1 change");
  transform->add_option("--op", o.op, "I, II, III or IV")->required();
  transform->add_option("--graph", o.graph, "Input graph in graph6");
  transform->add_option("--in", o.input, "Read the first graph6 line of this file instead");
  transform->add_option("--u", o.u, "Site vertex u (I, IV)");
  transform->add_option("--v", o.v, "Site vertex v (I, IV)");
  transform->add_option("--path", o.path, "Comma-separated path v1,...,vl (II)");
  transform->add_option("--root", o.root, "Subtree root (III)");
  transform->add_option("--subtree", o.subtree, "Comma-separated subtree vertices without the root (III)");
  transform->add_option("--y", o.y, "Neighbour of the root whose edge is subdivided (III)");
  transform->add_option("--out", o.out, "Output file");

  auto* families = app.add_subcommand("families", "Emit named graph families as graph6");
  families->add_option("--family", o.family, "path, star, cycle, snn, snn1, snn2, snk4 or snm")->required();
  families->add_option("--n", o.n_range, "Order or range A..B");
  families->add_option("--m", o.edges, "Edge count for snm");
  families->add_flag("--em1", o.with_em1, "Emit CSV with EM1 and the closed-form value");
  families->add_option("--out", o.out, "Output file");

  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive extremal scan over connected graphs");
  enumerate->add_option("--n", o.n_range, "Order or range A..B");
  enumerate->add_option("--cyclomatic", o.cyclomatic, "Cyclomatic number m-n+1");
  enumerate->add_option("--index", o.index, "Comma-separated indices or 'all'");
  enumerate->add_option("--workers", o.workers, "Worker threads");
  enumerate->add_flag("--allow-large", o.allow_large, "Permit n = 9 for cyclomatic number >= 3");
  enumerate->add_flag("--no-dedup", o.no_dedup, "List labeled witnesses instead of isomorphism classes");
  enumerate->add_option("--out", o.out, "JSON output file");
  enumerate->add_option("--csv", o.csv, "Also write a CSV summary here");
  enumerate->add_option("--min-witnesses", o.min_witnesses, "Write minimum witnesses as graph6 lines");
  enumerate->add_option("--max-witnesses", o.max_witnesses, "Write maximum witnesses as graph6 lines");

  auto* verify = app.add_subcommand("verify", "Check extremal theorems and rewrite lemmas");
  verify->add_option("claims", o.claims, "theorem-1..5 or lemma-1..4")->required();
  verify->add_option("--n", o.n_range, "Order range for theorems");
  verify->add_option("--trials", o.trials, "Random graphs added to the lemma corpus");
  verify->add_option("--seed", o.seed, "Seed for the random corpus");
  verify->add_option("--exhaustive-order", o.exhaustive_order, "All connected graphs up to this order join the lemma corpus");
  verify->add_option("--min-sites", o.min_sites, "Sites a lemma must exercise to pass");
  verify->add_option("--workers", o.workers, "Worker threads");
  verify->add_flag("--allow-large", o.allow_large, "Permit n = 9 for tricyclic scans");
  verify->add_option("--out", o.out, "Output file");

  auto* census = app.add_subcommand("brace-census", "Pendant-free graphs of a cyclomatic class");
  census->add_option("--n", o.n_range, "Order or range A..B");
  census->add_option("--cyclomatic", o.cyclomatic, "Cyclomatic number (>= 1)");
  census->add_option("--workers", o.workers, "Worker threads");
  census->add_flag("--allow-large", o.allow_large, "Permit n = 9 for cyclomatic number >= 3");
  census->add_option("--out", o.out, "Output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "zagreb: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(o, in, out);
    if (transform->parsed()) return cmd_transform(o, in, out);
    if (families->parsed()) return cmd_families(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (census->parsed()) return cmd_brace_census(o, out);
  } catch (const std::exception& e) {
    err << "zagreb: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace zagreb
