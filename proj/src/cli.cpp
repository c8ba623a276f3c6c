#include "leafnet/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <istream>
#include <json.hpp>
#include <mutex>
#include <ostream>
#include <random>

#include "leafnet/classify.hpp"
#include "leafnet/constructions.hpp"
#include "leafnet/deadline.hpp"
#include "leafnet/faultcost.hpp"
#include "leafnet/hamilton.hpp"
#include "leafnet/mlst.hpp"
#include "leafnet/parallel.hpp"

namespace leafnet::cli {

using Record = nlohmann::ordered_json;

long SurveyRow::total() const {
  long t = 0;
  for (const auto& [phi, c] : counts) t += c;
  return t;
}

namespace {

std::string trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

Record ml_json(int ml) { return ml == kInfinite ? Record(nullptr) : Record(ml); }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (!t.empty()) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

SurveyRow survey_internal(int n, const GraphClassFilter& filter, int threads) {
  const auto start = Clock::now();
  const std::vector<Graph> graphs = generate_nonisomorphic(n, filter);
  std::vector<int> phi(graphs.size());
  parallel_for(graphs.size(), threads, [&](std::size_t i) { phi[i] = fault_cost_value(graphs[i]); });
  SurveyRow row{n, filter.describe(), {}, 0, "internal-generator"};
  for (int p : phi) ++row.counts[p];
  row.wall_time = seconds_since(start);
  return row;
}

SurveyRow survey_stream(std::istream& in, const GraphClassFilter& filter, int threads, long* errors) {
  const auto start = Clock::now();
  const std::vector<std::string> lines = read_lines(in);
  std::vector<std::optional<int>> phi(lines.size());
  std::atomic<long> bad{0};
  int order = -1;
  std::mutex order_mutex;
  parallel_for(lines.size(), threads, [&](std::size_t i) {
    try {
      const Graph g = parse_graph6(lines[i]);
      if (!filter.accepts(g)) return;
      phi[i] = fault_cost_value(g);
      std::lock_guard lock(order_mutex);
      order = order < 0 || order == g.order() ? g.order() : 0;
    } catch (const Error&) {
      ++bad;
    }
  });
  SurveyRow row{std::max(order, 0), filter.describe(), {}, 0, "external-stream"};
  for (const auto& p : phi) {
    if (p) ++row.counts[*p];
  }
  row.wall_time = seconds_since(start);
  if (errors) *errors = bad;
  return row;
}

namespace {

bool same_profiles(const MlProfile& a, const MlProfile& b) { return a.ml == b.ml && a.profiles == b.profiles; }

}  // namespace

std::string oracle_disagreement(const Graph& g) {
  const int n = g.order();
  const MlProfile fast = ml_profile(g);
  if (n <= 12 && !same_profiles(fast, brute_ml_profile(g))) return "ml profiles differ";
  if (fast.ml > independence_number(g)) return "ml exceeds the independence number";

  const int delta = g.max_degree();
  std::vector<int> deleted(n);
  for (int v = 0; v < n; ++v) {
    deleted[v] = ml_number(g, g.vertices() & ~bit(v));
    if (deleted[v] < fast.ml - 1 || deleted[v] > fast.ml + delta) return "ml(G - v) out of range";
  }
  const bool guaranteed = std::all_of(deleted.begin(), deleted.end(), [&](int m) { return m <= fast.ml; });
  if (guaranteed && !std::all_of(deleted.begin(), deleted.end(), [&](int m) { return m >= fast.ml - 1; })) {
    return "leaf-guaranteed graph breaks the two-value law";
  }

  if (!is_two_connected(g)) return {};
  const FaultCostReport report = fault_cost(g);
  if (fault_cost_value(g) != report.phi) return "fault_cost_value disagrees with fault_cost";
  if (n <= 10) {
    const FaultCostReport brute = brute_fault_cost(g);
    if (brute.phi != report.phi) return "fault cost differs from brute force";
    if ((report.phi == 0) != brute_1_hamiltonian(g)) return "fault cost 0 without 1-hamiltonicity";
  }
  return {};
}

namespace {

CheckResult agreement(std::string name, const std::vector<Graph>& graphs, int threads) {
  std::vector<std::string> problems(graphs.size());
  parallel_for(graphs.size(), threads, [&](std::size_t i) { problems[i] = oracle_disagreement(graphs[i]); });
  long bad = 0;
  std::string first;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (problems[i].empty()) continue;
    if (bad++ == 0) first = emit_graph6(graphs[i]) + ": " + problems[i];
  }
  std::string detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(bad) + " disagreements";
  if (bad > 0) detail += "; first " + first;
  return {std::move(name), bad == 0, std::move(detail)};
}

std::vector<Graph> two_connected_up_to(int n) {
  GraphClassFilter f;
  f.connectivity = ConnectivityFilter::TwoConnected;
  std::vector<Graph> out;
  for (int k = 3; k <= n; ++k) {
    for (auto& g : generate_nonisomorphic(k, f)) out.push_back(std::move(g));
  }
  return out;
}

CheckResult expect(std::string name, int got, int want) {
  return {std::move(name), got == want, "got " + std::to_string(got) + ", expected " + std::to_string(want)};
}

CheckResult expect(std::string name, bool ok, std::string detail) { return {std::move(name), ok, std::move(detail)}; }

std::vector<CheckResult> construction_checks() {
  std::vector<CheckResult> out;
  for (int m = 3; m <= 6; ++m) {
    out.push_back(expect("phi(G_" + std::to_string(m) + ")", fault_cost_value(build_Gm(m).graph), m % 2 ? m + 1 : m + 2));
  }
  for (int m = 5; m <= 6; ++m) {
    out.push_back(expect("phi(H_" + std::to_string(m) + ")", fault_cost_value(build_Hm(m).graph), m % 2 ? m - 2 : m - 1));
  }
  const auto xi8 = build_Xi8();
  out.push_back(expect("Xi8 has no hamiltonian vw-path",
                       !hamiltonian_path_between(xi8.graph, xi8.role("v"), xi8.role("w")), "search"));
  const auto ring = build_cubic_fc3(2);
  out.push_back(expect("cubic_fc3(2) is cubic", is_regular(ring.graph, 3), std::to_string(ring.graph.order()) + " vertices"));
  out.push_back(expect("phi(cubic_fc3(2))", fault_cost_value(ring.graph), 3));
  for (const auto& c : build_weak_fragments_fig5()) {
    out.push_back(expect(c.name + " is weak", as_fragment(c).cls >= FragmentClass::Weak, "fragment_class"));
  }
  for (const auto& c : build_medium_fragments_fig6()) {
    out.push_back(expect(c.name + " is medium", as_fragment(c).cls == FragmentClass::Medium, "fragment_class"));
  }
  for (const auto& c : build_tfc1_fig7()) {
    out.push_back(expect("phi(" + c.name + ")", fault_cost_value(c.graph), 1));
  }
  out.push_back(expect("fig7 strong fragment", as_fragment(build_strong_fragment_fig7()).cls == FragmentClass::Strong,
                       "fragment_class"));
  for (const auto& [phi, c] : build_min_order_exemplars()) out.push_back(expect("phi(" + c.name + ")", fault_cost_value(c.graph), phi));
  const auto b12 = build_bipartite12();
  out.push_back(expect("bipartite12 is 2-leaf-stable",
                       classify_leaf_guaranteed(b12.graph).label == LeafClass::LeafStable, "classify"));
  const auto pg = classify_leaf_guaranteed(build_petersen_Gk(2).graph);
  out.push_back(expect("Petersen G_2 is 2-leaf-guaranteed", pg.ml == 2 && pg.leaf_guaranteed(), "classify"));
  out.push_back(expect("H'(K2) is 1-hamiltonian",
                       is_1_hamiltonian(embed_1_leaf_guaranteed(Graph::from_edges(2, {{0, 1}})).graph), "search"));
  out.push_back(expect("phi(Xi9)", fault_cost_value(find_xi9().graph), 2));
  return out;
}

}  // namespace

std::vector<CheckResult> oracle_checks(Tier tier, int threads) {
  std::vector<CheckResult> out;
  out.push_back(agreement("2-connected graphs, n <= 7", two_connected_up_to(7), threads));
  for (auto& c : construction_checks()) out.push_back(std::move(c));
  if (tier == Tier::Extended) {
    GraphClassFilter f;
    f.connectivity = ConnectivityFilter::TwoConnected;
    out.push_back(agreement("2-connected graphs, n = 8", generate_nonisomorphic(8, f), threads));
    f.regular_degree = 3;
    std::vector<Graph> cubic;
    for (int n = 4; n <= 12; n += 2) {
      for (auto& g : generate_nonisomorphic(n, f)) cubic.push_back(std::move(g));
    }
    out.push_back(agreement("2-connected cubic graphs, n <= 12", cubic, threads));
    const auto g3 = classify_leaf_guaranteed(build_petersen_Gk(3).graph);
    out.push_back(expect("Petersen G_3 is 3-leaf-guaranteed", g3.ml == 3 && g3.leaf_guaranteed(),
                         "ml " + std::to_string(g3.ml)));
  }
  return out;
}

namespace {

struct Settings {
  int threads = 1;
  Format format = Format::Jsonl;
  std::optional<double> timeout_secs;
  bool require_2c = true;
  std::optional<int> girth_min;
  Tier tier = Tier::Default;
};

// CSV cell for a JSON value: arrays become ';'-joined lists.
std::string cell(const Record& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + cell(v[i]);
    return s;
  }
  return v.dump();
}

void emit_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string& c = cells[i];
    if (i) out << ',';
    if (c.find_first_of(",\"\n") != std::string::npos) {
      out << '"';
      for (char ch : c) out << (ch == '"' ? "\"\"" : std::string(1, ch));
      out << '"';
    } else {
      out << c;
    }
  }
  out << '\n';
}

struct Outcome {
  Record record;
  bool error = false;
  bool skipped = false;
};

class StreamRunner {
 public:
  StreamRunner(const Settings& s, std::vector<std::string> columns, std::function<Record(const Graph&)> work)
      : s_(s), columns_(std::move(columns)), work_(std::move(work)) {}

  // Returns the number of error records written.
  long run(std::istream& in, std::ostream& out) {
    if (s_.format == Format::Csv) {
      auto header = columns_;
      header.push_back("error");
      emit_csv_row(out, header);
    }
    long errors = 0;
    long line_no = 0;
    constexpr std::size_t kChunk = 4096;
    std::string line;
    bool done = false;
    while (!done) {
      std::vector<std::pair<long, std::string>> chunk;
      while (chunk.size() < kChunk) {
        if (!std::getline(in, line)) {
          done = true;
          break;
        }
        ++line_no;
        std::string t = trim(line);
        if (!t.empty()) chunk.emplace_back(line_no, std::move(t));
      }
      std::vector<Outcome> results(chunk.size());
      parallel_for(chunk.size(), s_.threads,
                   [&](std::size_t i) { results[i] = handle(chunk[i].first, chunk[i].second); });
      for (const auto& r : results) {
        if (r.skipped) continue;
        errors += r.error;
        write(out, r);
      }
    }
    return errors;
  }

 private:
  Outcome handle(long line_no, const std::string& text) const {
    try {
      const Graph g = parse_graph6(text);
      if (s_.girth_min) {
        const auto gi = girth(g);
        if (gi && *gi < *s_.girth_min) return {{}, false, true};
      }
      std::optional<std::chrono::duration<double>> limit;
      if (s_.timeout_secs) limit = std::chrono::duration<double>(*s_.timeout_secs);
      DeadlineScope scope(limit);
      Record r;
      r["graph6"] = text;
      r["n"] = g.order();
      r.update(work_(g));
      return {std::move(r)};
    } catch (const Error& e) {
      Record r;
      r["graph6"] = text;
      r["line"] = line_no;
      r["error"] = std::string(to_string(e.code()));
      r["message"] = e.what();
      return {std::move(r), true};
    }
  }

  void write(std::ostream& out, const Outcome& r) const {
    if (s_.format == Format::Jsonl) {
      out << r.record.dump() << '\n';
      return;
    }
    std::vector<std::string> cells;
    for (const auto& c : columns_) cells.push_back(r.record.contains(c) ? cell(r.record[c]) : "");
    cells.push_back(r.error ? r.record["error"].get<std::string>() : "");
    emit_csv_row(out, cells);
  }

  const Settings& s_;
  std::vector<std::string> columns_;
  std::function<Record(const Graph&)> work_;
};

Record ml_record(const Graph& g) {
  Record r;
  const int ml = ml_number(g);
  r["ml"] = ml_json(ml);
  return r;
}

Record fc_record(const Graph& g, bool require_2c) {
  Record r;
  if (!is_two_connected(g)) {
    if (require_2c) throw Error(ErrorCode::NotTwoConnected, "fault cost needs a 2-connected graph");
    r["ml"] = ml_json(ml_number(g));
    r["phi"] = nullptr;
    return r;
  }
  const FaultCostReport rep = fault_cost(g);
  r["ml"] = ml_json(rep.ml);
  r["phi"] = rep.phi;
  r["per_vertex"] = rep.per_vertex_cost;
  r["optimal_profile"] = rep.optimal_profile.to_vector();
  return r;
}

Record classify_record(const Graph& g) {
  const ClassLabel label = classify_leaf_guaranteed(g);
  Record r;
  r["ml"] = ml_json(label.ml);
  r["class"] = std::string(to_string(label.label));
  Record deleted = Record::array();
  for (int m : label.vertex_deleted_mls) deleted.push_back(ml_json(m));
  r["vertex_deleted_ml"] = deleted;
  return r;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

int need_param(const std::optional<std::string>& p, const std::string& family) {
  if (!p) throw Error(ErrorCode::PreconditionViolated, family + " needs an integer parameter");
  try {
    return std::stoi(*p);
  } catch (const std::exception&) {
    throw Error(ErrorCode::PreconditionViolated, "not an integer: " + *p);
  }
}

std::vector<LabelledConstruction> construct(const std::string& family, const std::optional<std::string>& param) {
  const std::string f = lower(family);
  auto one = [](LabelledConstruction c) { return std::vector<LabelledConstruction>{std::move(c)}; };
  auto graph_param = [&] {
    if (!param) throw Error(ErrorCode::PreconditionViolated, family + " needs a graph6 parameter");
    return parse_graph6(*param);
  };
  if (f == "gm") return one(build_Gm(need_param(param, family)));
  if (f == "hm") return one(build_Hm(need_param(param, family)));
  if (f == "xi8") return one(build_Xi8());
  if (f == "embed1") return one(embed_1_leaf_guaranteed(graph_param()));
  if (f == "embedk") return one(embed_k_leaf_guaranteed(graph_param()));
  if (f == "petersen_gk") return one(build_petersen_Gk(need_param(param, family)));
  if (f == "bipartite12") return one(build_bipartite12());
  if (f == "type1") return one(build_type1_fig4());
  if (f == "type2") return one(build_type2_fig4());
  if (f == "cubic_fc3") return one(build_cubic_fc3(need_param(param, family)));
  if (f == "fig5") return build_weak_fragments_fig5();
  if (f == "fig6") return build_medium_fragments_fig6();
  if (f == "fig7") return build_tfc1_fig7();
  if (f == "fig7_strong") return one(build_strong_fragment_fig7());
  if (f == "exemplars") {
    std::vector<LabelledConstruction> out;
    for (auto& [phi, c] : build_min_order_exemplars()) out.push_back(std::move(c));
    return out;
  }
  if (f == "xi9") return find_xi9_candidates();
  throw Error(ErrorCode::UnknownFamily, "unknown family " + family);
}

GraphClassFilter make_filter(const std::string& connectivity, std::optional<int> regular, bool bipartite,
                             std::optional<int> girth_min) {
  GraphClassFilter f;
  if (connectivity == "2") {
    f.connectivity = ConnectivityFilter::TwoConnected;
  } else if (connectivity == "3") {
    f.connectivity = ConnectivityFilter::ThreeConnected;
  } else if (connectivity != "any") {
    throw Error(ErrorCode::PreconditionViolated, "connectivity must be any, 2 or 3");
  }
  f.regular_degree = regular;
  f.bipartite_only = bipartite;
  f.min_girth = girth_min;
  return f;
}

void emit_survey(std::ostream& out, const SurveyRow& row, Format format, bool timing) {
  if (format == Format::Csv) {
    std::vector<std::string> header = {"order", "filter", "source", "phi", "count"};
    if (timing) header.push_back("wall_time");
    emit_csv_row(out, header);
    for (const auto& [phi, c] : row.counts) {
      std::vector<std::string> cells = {std::to_string(row.order), row.filter, row.source, std::to_string(phi),
                                        std::to_string(c)};
      if (timing) cells.push_back(std::to_string(row.wall_time));
      emit_csv_row(out, cells);
    }
    return;
  }
  Record r;
  r["order"] = row.order;
  r["filter"] = row.filter;
  r["source"] = row.source;
  Record counts = Record::object();
  for (const auto& [phi, c] : row.counts) counts[std::to_string(phi)] = c;
  r["counts"] = counts;
  r["total"] = row.total();
  if (timing) r["wall_time"] = row.wall_time;
  out << r.dump() << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum leaf spanning trees and fault cost of graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  std::string format = "jsonl";
  std::string tier = "default";
  app.add_option("--threads", s.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
  app.add_option("--timeout-secs", s.timeout_secs, "per-graph time limit");
  app.add_flag("--require-2-connected,!--no-require-2-connected", s.require_2c,
               "reject graphs that are not 2-connected in fc");
  app.add_option("--girth-min", s.girth_min, "skip graphs of smaller girth");
  app.add_option("--tier", tier, "default or extended")->check(CLI::IsMember({"default", "extended"}));

  std::string input;
  auto* ml = app.add_subcommand("ml", "minimum leaf number per graph6 line");
  auto* fc = app.add_subcommand("fc", "fault cost per graph6 line");
  auto* classify = app.add_subcommand("classify", "leaf-guaranteed class per graph6 line");
  for (auto* sub : {ml, fc, classify}) sub->add_option("input", input, "graph6 file (default stdin)");

  auto* survey = app.add_subcommand("survey", "count graphs by fault cost");
  int survey_order = 0;
  std::string source = "internal";
  std::string connectivity = "2";
  std::optional<int> regular;
  bool bipartite = false;
  bool timing = false;
  survey->add_option("--order", survey_order, "order for the internal generator");
  survey->add_option("--source", source, "internal or stdin")->check(CLI::IsMember({"internal", "stdin"}));
  survey->add_option("--connectivity", connectivity, "any, 2 or 3");
  survey->add_option("--regular", regular, "only d-regular graphs");
  survey->add_flag("--bipartite", bipartite, "only bipartite graphs");
  survey->add_flag("--timing", timing, "include wall time");

  auto* gen = app.add_subcommand("generate", "emit graph6 lines, one per isomorphism class");
  int gen_order = 0;
  std::string gen_connectivity = "any";
  gen->add_option("order", gen_order)->required();
  gen->add_option("--connectivity", gen_connectivity, "any, 2 or 3");
  gen->add_option("--regular", regular, "only d-regular graphs");
  gen->add_flag("--bipartite", bipartite, "only bipartite graphs");

  auto* cons = app.add_subcommand("construct", "build a named graph family");
  std::string family;
  std::optional<std::string> param;
  bool graph6_only = false;
  cons->add_option("family", family)->required();
  cons->add_option("param", param);
  cons->add_flag("--graph6-only", graph6_only, "bare graph6 lines without roles");

  auto* frag = app.add_subcommand("fragment", "fragment class of (H, a, x, y)");
  std::string frag_g6;
  int fa = 0, fx = 0, fy = 0;
  frag->add_option("graph6", frag_g6)->required();
  frag->add_option("a", fa)->required();
  frag->add_option("x", fx)->required();
  frag->add_option("y", fy)->required();

  auto* oracle = app.add_subcommand("oracle-check", "cross-check against brute force");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  s.format = format == "csv" ? Format::Csv : Format::Jsonl;
  s.tier = tier == "extended" ? Tier::Extended : Tier::Default;

  try {
    if (ml->parsed() || fc->parsed() || classify->parsed()) {
      std::ifstream file;
      if (!input.empty()) {
        file.open(input);
        if (!file) throw Error(ErrorCode::PreconditionViolated, "cannot open " + input);
      }
      std::istream& src = input.empty() ? in : file;
      std::vector<std::string> cols;
      std::function<Record(const Graph&)> work;
      if (ml->parsed()) {
        cols = {"graph6", "n", "ml"};
        work = ml_record;
      } else if (fc->parsed()) {
        cols = {"graph6", "n", "ml", "phi", "per_vertex", "optimal_profile"};
        const bool req = s.require_2c;
        work = [req](const Graph& g) { return fc_record(g, req); };
      } else {
        cols = {"graph6", "n", "ml", "class", "vertex_deleted_ml"};
        work = classify_record;
      }
      StreamRunner runner(s, cols, work);
      return runner.run(src, out) > 0 ? 2 : 0;
    }
    if (survey->parsed()) {
      const GraphClassFilter filter = make_filter(connectivity, regular, bipartite, s.girth_min);
      if (source == "internal") {
        if (survey_order < 1) throw Error(ErrorCode::TooSmall, "--order is required for the internal source");
        emit_survey(out, survey_internal(survey_order, filter, s.threads), s.format, timing);
        return 0;
      }
      long errors = 0;
      emit_survey(out, survey_stream(in, filter, s.threads, &errors), s.format, timing);
      return errors > 0 ? 2 : 0;
    }
    if (gen->parsed()) {
      const GraphClassFilter filter = make_filter(gen_connectivity, regular, bipartite, s.girth_min);
      for (const Graph& g : generate_nonisomorphic(gen_order, filter)) out << emit_graph6(g) << '\n';
      return 0;
    }
    if (cons->parsed()) {
      for (const auto& c : construct(family, param)) {
        if (graph6_only) {
          out << emit_graph6(c.graph) << '\n';
          continue;
        }
        Record r;
        r["family"] = family;
        r["name"] = c.name;
        r["graph6"] = emit_graph6(c.graph);
        r["n"] = c.graph.order();
        Record roles = Record::object();
        for (const auto& [k, v] : c.roles) roles[k] = v;
        r["roles"] = roles;
        out << r.dump() << '\n';
      }
      return 0;
    }
    if (frag->parsed()) {
      const FragmentSpec spec = fragment_class(parse_graph6(frag_g6), fa, fx, fy);
      Record r;
      r["graph6"] = frag_g6;
      r["a"] = fa;
      r["x"] = fx;
      r["y"] = fy;
      r["class"] = std::string(to_string(spec.cls));
      Record ws = Record::array();
      for (const auto& [deleted, path] : spec.witnesses) {
        Record w;
        w["deleted"] = deleted < 0 ? Record(nullptr) : Record(deleted);
        w["path"] = path.order;
        ws.push_back(w);
      }
      r["witnesses"] = ws;
      out << r.dump() << '\n';
      return 0;
    }
    if (oracle->parsed()) {
      bool all = true;
      if (s.format == Format::Csv) emit_csv_row(out, {"check", "pass", "detail"});
      for (const auto& c : oracle_checks(s.tier, s.threads)) {
        all = all && c.pass;
        if (s.format == Format::Csv) {
          emit_csv_row(out, {c.name, c.pass ? "true" : "false", c.detail});
        } else {
          Record r;
          r["check"] = c.name;
          r["pass"] = c.pass;
          r["detail"] = c.detail;
          out << r.dump() << '\n';
        }
      }
      return all ? 0 : 2;
    }
  } catch (const Error& e) {
    err << "leafnet: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace leafnet::cli
