#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "thue/analysis.hpp"
#include "thue/engine.hpp"
#include "thue/error.hpp"
#include "thue/families.hpp"
#include "thue/generators.hpp"
#include "thue/json_io.hpp"
#include "thue/oracle.hpp"

namespace {

using namespace thue;

enum Exit : int { kOk = 0, kFailed = 1, kExhausted = 2, kInputError = 3 };

void emit(const std::string& path, const Json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
  } else {
    write_json_file(path, j);
  }
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("THUE_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadInput, "THUE_SEED is not an unsigned integer");
    }
  }
  return 0;
}

struct GenerateArgs {
  std::string family;
  std::vector<int> params;
  std::string out;
};

int cmd_generate(const GenerateArgs& a) {
  emit(a.out, graph_to_json(generate_family(a.family, a.params), a.family));
  return kOk;
}

struct ColorArgs {
  std::string graph;
  std::string lists_file;
  std::size_t universe = 0;
  std::size_t list_size = 0;
  std::optional<std::uint64_t> seed;
  std::size_t max_steps = 0;
  std::string mode = "ec";
  std::string family;
  std::size_t retries = 0;
  std::string seeds;  // "a:b" batch range
  std::string out;
  std::string out_colouring;
  std::string out_record;
  std::string out_lists;
  std::string csv;
};

ListAssignment make_lists(const ColorArgs& a, const PlaneGraph& g, std::size_t fallback_l) {
  if (!a.lists_file.empty()) return lists_from_json(read_json_file(a.lists_file));
  const std::size_t l = a.list_size ? a.list_size : fallback_l;
  if (l == 0) throw Error(ErrorCode::BadInput, "--list-size is required without --lists");
  if (a.universe) {
    if (a.universe < l) throw Error(ErrorCode::BadInput, "--universe must be at least --list-size");
    return random_lists(g.vertex_count(), l, a.universe, a.seed.value_or(default_seed()) ^ 0x5bd1e995ULL);
  }
  return identical_lists(g.vertex_count(), l);
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  try {
    if (colon == std::string::npos) {
      const auto x = std::stoull(s);
      return {x, x + 1};
    }
    const auto lo = std::stoull(s.substr(0, colon));
    const auto hi = std::stoull(s.substr(colon + 1));
    if (hi <= lo) throw Error(ErrorCode::BadInput, "empty seed range");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::BadInput, "seed range must look like a:b");
  }
}

int cmd_color(const ColorArgs& a) {
  const Json gj = read_json_file(a.graph);
  const PlaneGraph g = graph_from_json(gj);
  const std::uint64_t seed = a.seed.value_or(default_seed());

  if (a.mode == "family") {
    std::string fam = a.family;
    if (fam.empty()) fam = family_from_json(gj).value_or("");
    if (fam.empty()) throw Error(ErrorCode::BadInput, "family mode needs --family or a tagged graph");
    const FamilyInstance inst{fam, g, make_lists(a, g, family_min_list_size(fam))};
    const FamilyColouring fc = colour_family(inst, seed);
    Json j = colouring_to_json(fc.colouring);
    j["construction_trace"] = fc.trace;
    j["max_pruned"] = fc.max_pruned;
    j["seed"] = seed;
    emit(a.out_colouring.empty() ? a.out : a.out_colouring, j);
    if (!a.out_lists.empty()) write_json_file(a.out_lists, lists_to_json(inst.lists));
    return verify_facial_nonrepetitive(g, fc.colouring) ? kFailed : kOk;
  }
  if (a.mode != "ec") throw Error(ErrorCode::BadInput, "--mode must be ec or family");

  const std::size_t fallback = 5 * std::max<std::size_t>(1, g.max_degree());
  const ListAssignment lists = make_lists(a, g, fallback);
  const std::size_t budget = a.max_steps ? a.max_steps : default_step_budget(g);
  if (!a.out_lists.empty()) write_json_file(a.out_lists, lists_to_json(lists));

  if (!a.seeds.empty()) {
    const auto [lo, hi] = parse_range(a.seeds);
    std::ofstream csv_file;
    if (!a.csv.empty()) {
      csv_file.open(a.csv);
      if (!csv_file) throw Error(ErrorCode::BadInput, "cannot write " + a.csv);
    }
    std::ostream& csv = a.csv.empty() ? std::cout : csv_file;
    csv << "seed,steps,outcome\n";
    bool all = true;
    for (std::uint64_t s = lo; s < hi; ++s) {
      const RunOutcome o = run(g, lists, s, budget);
      const bool ok = o.status == RunStatus::Success;
      all = all && ok;
      if (ok && verify_facial_nonrepetitive(g, o.colouring)) return kFailed;
      csv << s << ',' << o.steps << ',' << (ok ? "success" : "exhausted") << '\n';
    }
    return all ? kOk : kExhausted;
  }

  RunOutcome o = run(g, lists, seed, budget);
  for (std::size_t r = 0; r < a.retries && o.status == RunStatus::Exhausted; ++r) {
    o = run(g, lists, seed + r + 1, budget);
  }
  emit(a.out, outcome_to_json(o));
  if (!a.out_colouring.empty()) write_json_file(a.out_colouring, colouring_to_json(o.colouring));
  if (!a.out_record.empty()) write_json_file(a.out_record, record_to_json(o.record));
  if (o.status == RunStatus::Exhausted) return kExhausted;
  return verify_facial_nonrepetitive(g, o.colouring) ? kFailed : kOk;
}

int cmd_verify(const std::string& graph, const std::string& colouring) {
  const PlaneGraph g = graph_from_json(read_json_file(graph));
  const PartialColouring c = colouring_from_json(read_json_file(colouring));
  if (c.size() != g.vertex_count()) throw Error(ErrorCode::BadInput, "colouring size does not match the graph");
  if (const auto v = verify_facial_nonrepetitive(g, c)) {
    std::cout << Json{{"ok", false}, {"violation", violation_to_json(*v)}}.dump(2) << '\n';
    return kFailed;
  }
  std::cout << Json{{"ok", true}}.dump(2) << '\n';
  return kOk;
}

struct DecodeArgs {
  std::string graph, lists, record, colouring, out;
};

int cmd_decode(const DecodeArgs& a) {
  const PlaneGraph g = graph_from_json(read_json_file(a.graph));
  const ListAssignment lists = lists_from_json(read_json_file(a.lists));
  const Record record = record_from_json(read_json_file(a.record));
  const Json cj = read_json_file(a.colouring);
  // Accept either a colouring file or a full run outcome.
  const PartialColouring c = colouring_from_json(cj);
  try {
    emit(a.out, choices_to_json(reconstruct(g, lists, record, c)));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Inconsistent) throw;
    std::cerr << e.what() << '\n';
    return kFailed;
  }
  return kOk;
}

struct AnalyzeArgs {
  unsigned delta_min = 1;
  unsigned delta_max = 6;
  std::size_t m_max = 10;
  std::string format = "json";
  std::string out;
};

int cmd_analyze(const AnalyzeArgs& a) {
  if (a.delta_min < 1 || a.delta_max < a.delta_min || a.m_max < 1) {
    throw Error(ErrorCode::BadInput, "need 1 <= delta-min <= delta-max and m-max >= 1");
  }
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "delta,a_m,lambda0,lambda0_sq,l,l_below_5delta,ceiling_margin_ok,chain_margin,note\n";
  for (unsigned d = a.delta_min; d <= a.delta_max; ++d) {
    Json row;
    row["delta"] = d;
    Json am = Json::array();
    for (const auto& x : a_sequence(a.m_max, d)) am.push_back(x.str());
    row["a"] = am;
    std::string csv_tail;
    if (d <= 2) {
      row["note"] = "handled by path/cycle bounds";
      csv_tail = ",,,,,,,handled by path/cycle bounds";
    } else {
      const CubicRoots r = char_roots(d);
      Json roots = Json::array();
      for (const auto& x : r.roots) roots.push_back({x.real(), x.imag()});
      row["roots"] = roots;
      row["lambda0"] = r.dominant();
      const auto cert = growth_certificate(d, std::max<std::size_t>(a.m_max, 2));
      row["lambda0_sq"] = cert.lambda0_sq;
      row["l"] = cert.l;
      row["lambda0_sq_below_l"] = cert.lambda0_sq_below_l;
      row["chain_margin"] = cert.chain_margin;
      bool below = true, ceiling = true;
      if (d >= 4) {
        const ListSize s = list_size(d);
        below = s.below_five_delta;
        ceiling = s.ceiling_margin_ok;
        row["l_below_5delta"] = below;
        row["ceiling_margin_ok"] = ceiling;
      } else {
        row["note"] = "l = 5 delta";
      }
      std::ostringstream t;
      t.precision(12);
      t << ',' << r.dominant() << ',' << cert.lambda0_sq << ',' << cert.l << ',' << below << ',' << ceiling << ','
        << cert.chain_margin << ',' << (d == 3 ? "l = 5 delta" : "");
      csv_tail = t.str();
    }
    std::string joined;
    for (const auto& x : am) joined += (joined.empty() ? "" : " ") + x.get<std::string>();
    csv << d << ',' << joined << csv_tail << '\n';
    rows.push_back(row);
  }
  if (a.format == "csv") {
    if (a.out.empty() || a.out == "-") {
      std::cout << csv.str();
    } else {
      std::ofstream f(a.out);
      if (!f) throw Error(ErrorCode::BadInput, "cannot write " + a.out);
      f << csv.str();
    }
  } else if (a.format == "json") {
    emit(a.out, Json{{"rows", rows}});
  } else {
    throw Error(ErrorCode::BadInput, "--format must be json or csv");
  }
  return kOk;
}

struct OracleArgs {
  std::string graph, lists, out;
  std::size_t k_max = 4;
};

int cmd_oracle(const OracleArgs& a) {
  const PlaneGraph g = graph_from_json(read_json_file(a.graph));
  Json report{{"instance", a.graph}};
  bool found = false;
  if (!a.lists.empty()) {
    const ListAssignment l = lists_from_json(read_json_file(a.lists));
    const auto r = feasible_for_lists(g, l);
    report["lists"] = lists_to_json(l);
    report["result"] = r.feasible() ? "feasible" : "infeasible";
    if (r.witness) report["witness"] = *r.witness;
    report["nodes_expanded"] = r.nodes_expanded;
    found = r.feasible();
  } else {
    const auto r = pi_f_exact(g, a.k_max);
    report["k_max"] = a.k_max;
    if (r.k) {
      report["k"] = *r.k;
      report["result"] = "feasible";
      report["witness"] = r.witness;
    } else {
      report["result"] = "infeasible";
    }
    report["nodes_expanded"] = r.nodes_expanded;
    found = r.k.has_value();
  }
  emit(a.out, report);
  return found ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Facial non-repetitive list colouring of plane graphs"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Build a family graph");
  g->add_option("--family", gen.family, "Family tag")->required();
  g->add_option("--params", gen.params, "Family parameters")->required()->delimiter(',');
  g->add_option("-o,--out", gen.out, "Output file (stdout by default)");

  ColorArgs col;
  std::uint64_t seed_value = 0;
  auto* c = app.add_subcommand("color", "Colour a graph with the random engine or a family colourer");
  c->add_option("--graph", col.graph, "Graph JSON")->required();
  c->add_option("--lists", col.lists_file, "List assignment JSON");
  c->add_option("--universe", col.universe, "Draw random lists from colours 1..U");
  c->add_option("--list-size", col.list_size, "List length l");
  auto* seed_opt = c->add_option("--seed", seed_value, "Seed (default: $THUE_SEED or 0)");
  c->add_option("--max-steps", col.max_steps, "Step budget T (default 64 n max(1, degree))");
  c->add_option("--mode", col.mode, "ec or family")->check(CLI::IsMember({"ec", "family"}));
  c->add_option("--family", col.family, "Family tag for family mode");
  c->add_option("--retries", col.retries, "Fresh seeds to try after exhaustion");
  c->add_option("--seeds", col.seeds, "Batch seed range a:b, writes CSV");
  c->add_option("--csv", col.csv, "CSV output for --seeds");
  c->add_option("-o,--out", col.out, "Run outcome output");
  c->add_option("--out-colouring", col.out_colouring, "Colouring output");
  c->add_option("--out-record", col.out_record, "Record output");
  c->add_option("--out-lists", col.out_lists, "Write the list assignment used");

  std::string vg, vc;
  auto* v = app.add_subcommand("verify", "Check a colouring for facial repetitions");
  v->add_option("--graph", vg, "Graph JSON")->required();
  v->add_option("--colouring", vc, "Colouring JSON")->required();

  DecodeArgs dec;
  auto* d = app.add_subcommand("decode", "Recover drawn list indices from a record");
  d->add_option("--graph", dec.graph)->required();
  d->add_option("--lists", dec.lists)->required();
  d->add_option("--record", dec.record)->required();
  d->add_option("--colouring", dec.colouring)->required();
  d->add_option("-o,--out", dec.out);

  AnalyzeArgs an;
  auto* a = app.add_subcommand("analyze", "Counting sequence, roots and list thresholds");
  a->add_option("--delta-min", an.delta_min);
  a->add_option("--delta-max", an.delta_max);
  a->add_option("--m-max", an.m_max);
  a->add_option("--format", an.format)->check(CLI::IsMember({"json", "csv"}));
  a->add_option("-o,--out", an.out);

  OracleArgs orc;
  auto* o = app.add_subcommand("oracle", "Exhaustive search on small instances");
  o->add_option("--graph", orc.graph)->required();
  o->add_option("--lists", orc.lists, "Decide feasibility for these lists");
  o->add_option("--k-max", orc.k_max, "Largest palette for the exact search");
  o->add_option("-o,--out", orc.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*seed_opt) col.seed = seed_value;
    if (*g) return cmd_generate(gen);
    if (*c) return cmd_color(col);
    if (*v) return cmd_verify(vg, vc);
    if (*d) return cmd_decode(dec);
    if (*a) return cmd_analyze(an);
    if (*o) return cmd_oracle(orc);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return e.code() == ErrorCode::BudgetExceeded ? kExhausted : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
