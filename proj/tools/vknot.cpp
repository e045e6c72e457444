// vknot: command-line front end for the virtual knot library.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vknot/vknot.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;

/// Options shared by every subcommand.
struct Common {
  std::string format = "text";
  std::string file;
  std::string out;
};

/// Raised for problems with the arguments themselves rather than their content.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> file_lines(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);)
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  return lines;
}

/// The positional argument, or the first non-blank line of --file.
std::string input_or_file(const std::optional<std::string>& arg, const Common& c, const char* what) {
  if (arg) return *arg;
  if (!c.file.empty()) {
    auto lines = file_lines(c.file);
    return lines.empty() ? std::string{} : lines.front();
  }
  throw UsageError(std::string("missing ") + what);
}

bool json_mode(const Common& c) { return c.format == "json"; }

void add_common(CLI::App* sub, Common& c, bool graph_formats = false) {
  if (graph_formats) {
    c.format = "dot";
    sub->add_option("--format", c.format, "Output format (default dot)")->check(CLI::IsMember({"dot", "json"}));
  } else {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  }
  sub->add_option("--file", c.file, "Read the input from this file instead of the command line");
  sub->add_option("--out", c.out, "Write output to this file instead of stdout");
}

std::string poly_line(const vknot::LaurentPolynomial& f) { return vknot::format_poly(f); }

ordered_json poly_json(const vknot::LaurentPolynomial& f) {
  return {{"text", vknot::format_poly(f)}, {"terms", vknot::poly_to_json(f)}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

vknot::MoveKind parse_move_kind(const std::string& s) {
  auto k = vknot::move_kind_from_name(s);
  if (!k) throw UsageError("unknown move kind " + s);
  return *k;
}

struct Output {
  std::string text;
  int code = kExitYes;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Writhe polynomials, intersection graphs and moves of virtual knot diagrams.\n"
               "Gauss codes are whitespace-separated O<id><sign> / U<id><sign> tokens in\n"
               "counterclockwise order, e.g. \"O1+ O2+ U1+ U2+\". Polynomials use terms such\n"
               "as 3, t, -2t, t^-1, 4t^2 joined by + and -.\n"
               "Chord x crosses c left to right (sense +1) when the tail of x lies on the\n"
               "counterclockwise arc from the head of c to its tail.",
               "vknot"};
  app.require_subcommand(1);
  Common common;

  std::optional<std::string> code, code2, poly, trace_arg;
  std::int64_t chord_id = 0;

  auto* validate = app.add_subcommand("validate", "Parse a Gauss code and report problems");
  validate->add_option("code", code, "Gauss code");
  add_common(validate, common);

  auto* writhe = app.add_subcommand("writhe", "Print the writhe polynomial W(t)");
  writhe->add_option("code", code, "Gauss code");
  add_common(writhe, common);

  auto* index = app.add_subcommand("index", "Per-chord sign and index, plus the writhe");
  index->add_option("code", code, "Gauss code");
  add_common(index, common);

  auto* graph = app.add_subcommand("graph", "Export the intersection graph");
  graph->add_option("code", code, "Gauss code");
  add_common(graph, common, true);

  auto* equiv = app.add_subcommand(
      "equiv",
      "Compare intersection graphs by writhe polynomial. YES means the graphs are related by\n"
      "bigon, isolated-vertex, pair and triangle moves; on arbitrary signed digraphs the answer\n"
      "is only polynomial equality");
  equiv->add_option("code1", code, "First Gauss code");
  equiv->add_option("code2", code2, "Second Gauss code");
  add_common(equiv, common);

  auto* realizable = app.add_subcommand("realizable", "Is the polynomial a writhe polynomial? (f(1) = f'(1) = 0)");
  realizable->add_option("poly", poly, "Laurent polynomial");
  add_common(realizable, common);

  auto* realize = app.add_subcommand("realize", "Build a Gauss diagram with the given writhe polynomial");
  realize->add_option("poly", poly, "Laurent polynomial");
  add_common(realize, common);

  auto* move = app.add_subcommand("move", "List or apply diagram moves");
  move->require_subcommand(1);
  std::string kind_name;
  std::optional<std::size_t> site_index;
  std::optional<std::uint64_t> move_seed;
  auto* move_list = move->add_subcommand("list", "List applicable sites");
  move_list->add_option("code", code, "Gauss code");
  move_list->add_option("--kind", kind_name, "Only this move kind");
  add_common(move_list, common);
  auto* move_apply = move->add_subcommand("apply", "Apply one site and print the result with its trace");
  move_apply->add_option("code", code, "Gauss code");
  move_apply->add_option("--kind", kind_name, "Move kind")->required();
  move_apply->add_option("--site", site_index, "Index into the site list of `move list --kind`");
  move_apply->add_option("--seed", move_seed, "Pick a random site with this seed when --site is absent");
  add_common(move_apply, common);

  auto* sw = app.add_subcommand("switch", "Crossing switch at one chord");
  sw->add_option("code", code, "Gauss code")->required();
  sw->add_option("chord", chord_id, "Chord id as written in the code")->required();
  add_common(sw, common);

  std::size_t fuzz_n = 6, fuzz_moves = 50, fuzz_count = 1;
  std::optional<std::uint64_t> fuzz_seed;
  auto* fuzz = app.add_subcommand("fuzz", "Random move sequences with invariance checks after every step");
  fuzz->add_option("--n", fuzz_n, "Chords in the starting diagram")->capture_default_str();
  fuzz->add_option("--moves", fuzz_moves, "Diagram moves per run")->capture_default_str();
  fuzz->add_option("--seed", fuzz_seed, "Seed of the first run (random if omitted; always printed)");
  fuzz->add_option("--count", fuzz_count, "Number of runs, with consecutive seeds")->capture_default_str();
  add_common(fuzz, common);

  auto* replay = app.add_subcommand("replay", "Replay a move trace (JSON) and print the final diagram and graph");
  replay->add_option("trace", trace_arg, "Trace JSON");
  add_common(replay, common);

  std::size_t search_depth = 3;
  auto* search = app.add_subcommand("search", "Breadth-first search for a move sequence between two diagrams");
  search->add_option("code1", code, "Start Gauss code");
  search->add_option("code2", code2, "Target Gauss code");
  search->add_option("--depth", search_depth, "Maximum number of moves (at most 6)")->capture_default_str();
  add_common(search, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  Output out;
  try {
    std::ostringstream os;
    const bool js = json_mode(common);

    auto two_codes = [&]() -> std::pair<std::string, std::string> {
      if (code && code2) return {*code, *code2};
      if (!common.file.empty()) {
        auto lines = file_lines(common.file);
        if (lines.size() >= 2) return {lines[0], lines[1]};
      }
      throw UsageError("expected two Gauss codes");
    };

    if (validate->parsed()) {
      auto d = vknot::parse_gauss_code(input_or_file(code, common, "Gauss code"));
      if (js)
        os << dump({{"valid", true}, {"chords", d.size()}, {"gauss_code", vknot::serialize_gauss_code(d)},
                    {"diagram", vknot::diagram_to_json(d)}});
      else
        os << "valid: " << d.size() << " chords\n";
    } else if (writhe->parsed()) {
      auto w = vknot::writhe_polynomial(vknot::parse_gauss_code(input_or_file(code, common, "Gauss code")));
      os << (js ? dump(poly_json(w)) : poly_line(w) + "\n");
    } else if (index->parsed()) {
      auto d = vknot::parse_gauss_code(input_or_file(code, common, "Gauss code"));
      auto p = vknot::index_profile(d);
      if (js) {
        ordered_json j;
        j["chords"] = ordered_json::array();
        for (const auto& [id, e] : p.chords)
          j["chords"].push_back({{"chord", id.value}, {"sign", vknot::value(e.sign)}, {"index", e.index}});
        j["writhe"] = p.writhe;
        os << dump(j);
      } else {
        os << "chord  w  Ind\n";
        for (const auto& [id, e] : p.chords) {
          std::string s = std::to_string(id.value);
          os << s << std::string(s.size() < 5 ? 5 - s.size() : 0, ' ') << "  " << vknot::sign_char(e.sign) << "  "
             << e.index << "\n";
        }
        os << "w(D) = " << p.writhe << "\n";
      }
    } else if (graph->parsed()) {
      auto g = vknot::build_intersection_graph(vknot::parse_gauss_code(input_or_file(code, common, "Gauss code")));
      if (common.format == "json")
        os << vknot::export_graph(g, vknot::GraphFormat::Json) << "\n";
      else
        os << vknot::export_graph(g, vknot::GraphFormat::Dot);
    } else if (equiv->parsed()) {
      auto [a, b] = two_codes();
      auto ga = vknot::build_intersection_graph(vknot::parse_gauss_code(a));
      auto gb = vknot::build_intersection_graph(vknot::parse_gauss_code(b));
      auto wa = vknot::graph_writhe_polynomial(ga);
      auto wb = vknot::graph_writhe_polynomial(gb);
      bool yes = vknot::graphs_equivalent(ga, gb);
      if (js)
        os << dump({{"w1", poly_json(wa)}, {"w2", poly_json(wb)}, {"equivalent", yes}});
      else
        os << "W1 = " << poly_line(wa) << "\nW2 = " << poly_line(wb) << "\n" << (yes ? "YES" : "NO") << "\n";
      out.code = yes ? kExitYes : kExitNo;
    } else if (realizable->parsed()) {
      auto f = vknot::parse_poly(input_or_file(poly, common, "polynomial"));
      bool yes = vknot::is_realizable(f);
      if (js)
        os << dump({{"polynomial", poly_json(f)},
                    {"realizable", yes},
                    {"f(1)", f.eval_at_one()},
                    {"f'(1)", f.derivative_at_one()}});
      else
        os << (yes ? "YES" : "NO") << " (f(1) = " << f.eval_at_one() << ", f'(1) = " << f.derivative_at_one()
           << ")\n";
      out.code = yes ? kExitYes : kExitNo;
    } else if (realize->parsed()) {
      auto f = vknot::parse_poly(input_or_file(poly, common, "polynomial"));
      if (!vknot::is_realizable(f)) {
        std::cerr << "not realizable: f(1) = " << f.eval_at_one() << ", f'(1) = " << f.derivative_at_one() << "\n";
        return kExitNo;
      }
      auto terms = vknot::decompose(f);
      auto d = vknot::realize(f);
      if (js) {
        ordered_json j;
        j["gauss_code"] = vknot::serialize_gauss_code(d);
        j["generators"] = ordered_json::array();
        for (const auto& t : terms)
          j["generators"].push_back({{"family", std::string(1, vknot::family_char(t.spec.family))},
                                     {"k", t.spec.k},
                                     {"orientation", t.spec.orientation},
                                     {"multiplicity", t.multiplicity}});
        os << dump(j);
      } else {
        os << vknot::serialize_gauss_code(d) << "\n";
      }
    } else if (move_list->parsed()) {
      auto d = vknot::parse_gauss_code(input_or_file(code, common, "Gauss code"));
      std::vector<vknot::MoveKind> kinds;
      if (kind_name.empty())
        kinds.assign(vknot::kAllMoveKinds.begin(), vknot::kAllMoveKinds.end());
      else
        kinds.push_back(parse_move_kind(kind_name));
      ordered_json arr = ordered_json::array();
      for (auto k : kinds) {
        auto sites = vknot::enumerate_moves(d, k);
        for (std::size_t i = 0; i < sites.size(); ++i) {
          auto sj = vknot::move_site_to_json(sites[i]);
          if (js) {
            sj["site"] = i;
            arr.push_back(sj);
          } else {
            os << vknot::move_kind_name(k) << " #" << i << " " << sj.dump() << "\n";
          }
        }
      }
      if (js) os << dump(arr);
    } else if (move_apply->parsed()) {
      auto text = input_or_file(code, common, "Gauss code");
      auto d = vknot::parse_gauss_code(text);
      auto k = parse_move_kind(kind_name);
      auto sites = vknot::enumerate_moves(d, k);
      if (sites.empty()) throw vknot::InvalidSite(std::string(vknot::move_kind_name(k)) + ": no applicable site");
      std::size_t i = 0;
      std::uint64_t seed = move_seed.value_or(std::random_device{}());
      if (site_index) {
        if (*site_index >= sites.size())
          throw UsageError("--site " + std::to_string(*site_index) + " out of range (" +
                           std::to_string(sites.size()) + " sites)");
        i = *site_index;
      } else {
        std::mt19937_64 rng(seed);
        i = std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng);
      }
      auto after = vknot::apply_move(d, sites[i]);
      vknot::MoveTrace trace{vknot::serialize_gauss_code(d), site_index ? 0 : seed, {sites[i]}};
      if (js) {
        os << dump({{"gauss_code", vknot::serialize_gauss_code(after)},
                    {"writhe_polynomial", poly_json(vknot::writhe_polynomial(after))},
                    {"trace", vknot::trace_to_json(trace)}});
      } else {
        if (!site_index) os << "seed " << seed << "\n";
        os << vknot::serialize_gauss_code(after) << "\n" << "trace " << vknot::trace_to_json(trace).dump() << "\n";
      }
    } else if (sw->parsed()) {
      auto d = vknot::parse_gauss_code(*code);
      auto s = vknot::crossing_switch(d, vknot::ChordId{chord_id});
      if (js)
        os << dump({{"gauss_code", vknot::serialize_gauss_code(s)}, {"diagram", vknot::diagram_to_json(s)}});
      else
        os << vknot::serialize_gauss_code(s) << "\n";
    } else if (fuzz->parsed()) {
      std::uint64_t seed = fuzz_seed.value_or(std::random_device{}());
      ordered_json runs = ordered_json::array();
      std::size_t failed = 0;
      if (!js) os << "seed " << seed << "\n";
      for (std::size_t r = 0; r < fuzz_count; ++r) {
        auto rep = vknot::fuzz_invariance(fuzz_n, fuzz_moves, seed + r);
        failed += !rep.passed();
        if (js) {
          runs.push_back(vknot::fuzz_report_to_json(rep));
          continue;
        }
        os << "run seed=" << rep.seed << " " << (rep.passed() ? "PASS" : "FAIL") << " steps=" << rep.trace.steps.size()
           << " s1_checks=" << rep.s1_checks << " s2_checks=" << rep.s2_checks << "\n";
        for (const auto& f : rep.failures) os << "  step " << f.step << " " << f.check << ": " << f.detail << "\n";
        if (!rep.passed()) os << "  trace " << vknot::trace_to_json(rep.trace).dump() << "\n";
      }
      if (js)
        os << dump({{"seed", seed}, {"runs", runs}, {"failed", failed}});
      else
        os << (failed == 0 ? "all " + std::to_string(fuzz_count) + " runs passed" : std::to_string(failed) + " runs failed")
           << "\n";
      out.code = failed == 0 ? kExitYes : kExitNo;
    } else if (replay->parsed()) {
      if (!trace_arg && common.file.empty()) throw UsageError("missing trace");
      std::string text = trace_arg ? *trace_arg : read_file(common.file);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(text);
      } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(std::string("trace is not valid JSON: ") + e.what());
      }
      // accept a bare trace, `move apply` output, or a single-run fuzz report
      if (j.is_object() && !j.contains("start")) {
        if (j.contains("trace")) {
          j = j["trace"];
        } else if (j.contains("runs") && j["runs"].size() == 1) {
          j = j["runs"][0]["trace"];
        }
      }
      auto r = vknot::replay(vknot::trace_from_json(j));
      if (js)
        os << dump({{"gauss_code", vknot::serialize_gauss_code(r.diagram)},
                    {"graph", vknot::graph_to_json(r.graph)},
                    {"writhe_polynomial", poly_json(vknot::writhe_polynomial(r.diagram))}});
      else
        os << vknot::serialize_gauss_code(r.diagram) << "\n" << vknot::export_graph(r.graph, vknot::GraphFormat::Json)
           << "\n";
    } else if (search->parsed()) {
      auto [a, b] = two_codes();
      auto res = vknot::bounded_equivalence_search_detailed(vknot::parse_gauss_code(a), vknot::parse_gauss_code(b),
                                                            search_depth);
      if (js) {
        ordered_json j{{"found", res.trace.has_value()}, {"visited", res.visited},
                       {"exhausted_budget", res.exhausted_budget}, {"writhe_differs", res.invariant_mismatch}};
        if (res.trace) j["trace"] = vknot::trace_to_json(*res.trace);
        os << dump(j);
      } else if (res.trace) {
        os << "FOUND " << res.trace->steps.size() << " moves\n" << vknot::trace_to_json(*res.trace).dump() << "\n";
      } else {
        os << "NOT FOUND"
           << (res.invariant_mismatch ? " (writhe polynomials differ)"
               : res.exhausted_budget ? " (node budget exhausted)"
                                      : " within depth " + std::to_string(search_depth))
           << "\n";
      }
      out.code = res.trace ? kExitYes : kExitNo;
    }
    out.text = os.str();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const vknot::NotRealizable& e) {
    std::cerr << e.what() << "\n";
    return kExitNo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (common.out.empty()) {
    std::cout << out.text;
  } else {
    std::ofstream f(common.out);
    if (!f) {
      std::cerr << "cannot write " << common.out << "\n";
      return kExitUsage;
    }
    f << out.text;
  }
  return out.code;
}
