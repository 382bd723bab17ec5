#include "center_order/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "center_order/geom.hpp"
#include "center_order/ordergraph.hpp"
#include "center_order/render.hpp"

namespace center_order {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string catalog = Catalog::default_path();
  std::string family;  // empty: per-command default
  SamplePlan plan;
  SubdivisionBudget budget;
  unsigned precision_bits = 256;
  int jobs = 1;
  bool json = false;
  std::string output;  // file, empty for stdout

  nlohmann::json to_json() const {
    return {{"catalog", catalog},
            {"family", family.empty() ? "default" : family},
            {"plan",
             {{"grid", plan.grid_density},
              {"samples", plan.random_count},
              {"seed", plan.rng_seed},
              {"denom_bound", plan.denominator_bound}}},
            {"subdivision",
             {{"enabled", budget.enabled}, {"max_depth", budget.max_depth}, {"max_rects", budget.max_rects}}},
            {"precision_bits", precision_bits},
            {"jobs", jobs},
            {"json", json},
            {"output", output.empty() ? "stdout" : output}};
  }
};

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t"), e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

int parse_key(const Catalog& cat, const std::string& text) {
  int k;
  try {
    k = parse_center_key(trim(text));
  } catch (const std::exception&) {
    throw UsageError("unknown center: " + text);
  }
  if (!cat.contains(k)) throw UsageError("unknown center: " + text);
  return k;
}

std::vector<int> cataloged(const Catalog& cat, const std::vector<int>& keys) {
  std::vector<int> out;
  for (int k : keys)
    if (cat.contains(k)) out.push_back(k);
  return out;
}

std::string join_keys(const std::vector<int>& keys) {
  std::string s;
  for (int k : keys) s += (s.empty() ? "" : " ") + (k > 0 ? std::to_string(k) : center_label(k));
  return s;
}

// Integer triple when rational, else the exact components.
std::string homogeneous_text(const BaryPoint& p) {
  const QuadExt* cs[3] = {&p.u, &p.v, &p.w};
  bool rational = true;
  for (auto c : cs) rational = rational && c->is_rational();
  if (!rational || p.is_zero_triple()) return "(" + to_string(p.u) + " : " + to_string(p.v) + " : " + to_string(p.w) + ")";
  Integer l = 1, g = 0;
  for (auto c : cs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c->rational_part().get_den_mpz_t());
  Integer n[3];
  for (int i = 0; i < 3; ++i) {
    const Rational& r = cs[i]->rational_part();
    n[i] = r.get_num() * (l / r.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n[i].get_mpz_t());
  }
  Integer sum = n[0] + n[1] + n[2];
  int s = sgn(sum) != 0 ? sgn(sum) : sgn(n[0]) != 0 ? sgn(n[0]) : sgn(n[1]) != 0 ? sgn(n[1]) : sgn(n[2]);
  if (s < 0) g = -g;
  std::ostringstream os;
  os << "(" << n[0] / g << ":" << n[1] / g << ":" << n[2] / g << ")";
  return os.str();
}

std::string region_text(const RegionCode& r) {
  auto c = [](int s) { return s > 0 ? '+' : s < 0 ? '-' : '0'; };
  return std::string("(") + c(r.su) + "," + c(r.sv) + "," + c(r.sw) + ")";
}

std::string side_text(SideRelation r) {
  return r == SideRelation::AtInfinity ? "AtInfinity" : std::string(to_string(r)) + " BC";
}

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw UsageError("cannot write " + cfg.output);
  f << text;
}

// ---- commands ----

int cmd_eval(const RunConfig& cfg, const Catalog& cat, const std::string& center, const std::string& sides_text,
             std::ostream& out) {
  int key = parse_key(cat, center);
  Sides s;
  try {
    s = parse_sides(sides_text);
    s.validate();
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid sides: ") + e.what());
  }
  BaryPoint p = eval_center(cat, key, s);
  NormalizedPoint n = normalize(p);
  nlohmann::json j = {{"center", center_label(key)}, {"sides", s.to_string()}, {"homogeneous", homogeneous_text(p)}};
  std::ostringstream os;
  os << center_label(key) << " sides " << s.to_string() << "\n";
  os << "homogeneous " << homogeneous_text(p) << "\n";
  if (n.at_infinity) {
    os << "normalized AT-INFINITY\n";
    j["normalized"] = "AT-INFINITY";
  } else {
    std::string exact = "(" + to_string(n.c[0]) + ", " + to_string(n.c[1]) + ", " + to_string(n.c[2]) + ")";
    std::ostringstream num;
    num << std::setprecision(12) << "(" << n.c[0].approx() << ", " << n.c[1].approx() << ", " << n.c[2].approx()
        << ")";
    os << "normalized " << exact << "\n" << "numeric " << num.str() << "\n";
    os << "region " << region_text(region_of(p)) << "\n";
    j["normalized"] = {to_string(n.c[0]), to_string(n.c[1]), to_string(n.c[2])};
    j["numeric"] = {n.c[0].approx(), n.c[1].approx(), n.c[2].approx()};
    j["region"] = region_text(region_of(p));
  }
  os << side_text(above_BC(p)) << "\n";
  j["side"] = side_text(above_BC(p));
  if (!n.at_infinity) {
    std::string rho = to_string(signed_height_ratio(p));
    os << "rho=" << rho << "\n";
    j["rho"] = rho;
  }
  write_output(cfg, cfg.json ? j.dump(2) + "\n" : os.str(), out);
  return kExitDecided;
}

TriangleFamily family_or(const RunConfig& cfg, FamilyKind def) {
  if (cfg.family.empty()) return family(def);
  try {
    return parse_family(cfg.family);
  } catch (const std::exception&) {
    throw UsageError("unknown family: " + cfg.family);
  }
}

OrderKind order_of(const std::string& text) {
  try {
    return parse_order(text);
  } catch (const std::exception&) {
    throw UsageError("unknown order: " + text);
  }
}

int cmd_compare(const RunConfig& cfg, const Catalog& cat, const std::string& order_text, const std::string& mt,
                const std::string& nt, std::ostream& out, std::ostream& err) {
  OrderKind order = order_of(order_text);
  int m = parse_key(cat, mt), n = parse_key(cat, nt);
  Verdict v;
  try {
    if (order == OrderKind::Isosceles) {
      TriangleFamily f = family_or(cfg, FamilyKind::TallIsosceles);
      if (!f.is_isosceles()) throw UsageError("the isosceles order needs an isosceles family");
      v = compare_iso(cat, m, n, f.kind);
    } else {
      v = compare_2d(cat, order, m, n, cfg.plan, cfg.budget);
    }
  } catch (const NotComparableError& e) {
    err << "not comparable: " << e.what() << "\n";
    return kExitUndetermined;
  }
  write_output(cfg, to_json(v).dump(2) + "\n", out);
  return v.kind == VerdictKind::Undetermined ? kExitUndetermined : kExitDecided;
}

int cmd_graph(const RunConfig& cfg, const Catalog& cat, const std::string& order_text, const std::string& range,
              const std::string& dot_path, bool full, std::ostream& out) {
  OrderKind order = order_of(order_text);
  GraphOptions opt;
  opt.plan = cfg.plan;
  opt.budget = cfg.budget;
  opt.jobs = cfg.jobs;
  OrderGraph g = build_graph(cat, order, cataloged(cat, parse_center_range(range)), opt);
  HasseDiagram h = transitive_reduction(g);
  std::vector<int> cut = articulation_points(h);
  if (!dot_path.empty()) {
    std::ofstream f(dot_path);
    if (!f) throw UsageError("cannot write " + dot_path);
    f << to_dot(h);
  }
  nlohmann::json j = {{"hasse", to_json(h)}};
  nlohmann::json chains = nlohmann::json::array();
  std::ostringstream os;
  os << to_string(order) << " graph: " << g.nodes.size() << " centers, " << g.edges.size() << " edges, "
     << h.edges.size() << " Hasse edges\n";
  for (const auto& [k, why] : g.excluded) os << "excluded " << center_label(k) << ": " << why << "\n";
  for (const auto& nc : known_chains()) {
    if (nc.order != order) continue;
    std::vector<int> missing;
    for (int k : nc.chain)
      if (!std::binary_search(g.nodes.begin(), g.nodes.end(), k)) missing.push_back(k);
    if (!missing.empty()) {
      std::string why;
      for (int k : missing) {
        auto it = g.excluded.find(k);
        why += (why.empty() ? "" : ", ") + center_label(k) + (it != g.excluded.end() ? " excluded" : " not in range");
      }
      os << "chain " << nc.name << ": skipped (" << why << ")\n";
      chains.push_back({{"name", nc.name}, {"skipped", why}});
      continue;
    }
    ChainCheck c = verify_chain(g, nc.chain);
    os << "chain " << nc.name << ": " << (c.ok ? "confirmed" : "NOT confirmed") << " (" << c.certified
       << " certified, " << c.consistent << " likely, " << c.failed << " failed)\n";
    for (const auto& l : c.links)
      if (!l.ok) os << "  " << center_label(l.m) << " < " << center_label(l.n) << ": " << l.status << "\n";
    nlohmann::json cj = to_json(c);
    cj["name"] = nc.name;
    chains.push_back(cj);
  }
  std::vector<std::string> labels;
  for (int k : cut) labels.push_back(center_label(k));
  os << "articulation points:";
  for (const auto& l : labels) os << " " << l;
  os << "\n";
  j["chains"] = chains;
  j["articulation_points"] = labels;
  if (full) j["graph"] = to_json(g);
  write_output(cfg, cfg.json ? j.dump(2) + "\n" : os.str(), out);
  return kExitDecided;
}

int cmd_classify(const RunConfig& cfg, const Catalog& cat, const std::string& predicate, const std::string& range,
                 std::ostream& out) {
  std::vector<int> keys;
  for (int k : cataloged(cat, parse_center_range(range)))
    if (k > 0) keys.push_back(k);
  std::vector<nlohmann::json> detail(keys.size());
  std::vector<std::string> group(keys.size());
  TriangleFamily f;
  std::string set_name;
  if (predicate == "outside-angle-a") {
    f = family_or(cfg, FamilyKind::IsoscelesAll);
    set_name = "sometimes outside angle A";
    parallel_for(keys.size(), cfg.jobs, [&](size_t i) {
      RegionVerdict v = classify_outside_angle_A(cat, keys[i], f, cfg.plan);
      detail[i] = to_json(v);
      group[i] = v.kind == RegionKind::Always ? "never outside" : set_name;
    });
  } else if (predicate == "above-bc") {
    f = family_or(cfg, FamilyKind::AcuteMinA);
    parallel_for(keys.size(), cfg.jobs, [&](size_t i) {
      AboveVerdict v = classify_above_BC(cat, keys[i], f, cfg.plan);
      detail[i] = to_json(v);
      group[i] = to_string(v.kind);
    });
  } else if (predicate == "trace-right-of-c") {
    f = family_or(cfg, FamilyKind::AcuteScalene);
    set_name = "trace sometimes right of C";
    parallel_for(keys.size(), cfg.jobs, [&](size_t i) {
      RegionVerdict v = classify_trace_right_of_C(cat, keys[i], f, cfg.plan);
      detail[i] = to_json(v);
      group[i] = v.kind == RegionKind::Never ? "never right of C" : set_name;
    });
  } else if (predicate == "vertex-a") {
    f = family_or(cfg, FamilyKind::IsoscelesAll);
    set_name = "identically A";
    parallel_for(keys.size(), cfg.jobs, [&](size_t i) {
      VertexCoincidence v = coincides_with_vertex_A(cat, keys[i], f, cfg.plan);
      nlohmann::json roots = nlohmann::json::array();
      for (const auto& r : v.roots) roots.push_back(approx_text(r));
      detail[i] = {{"certified", v.certified}, {"roots", roots}, {"samples", v.samples}};
      group[i] = v.kind == VertexCoincidence::Kind::Identically ? set_name
                 : v.kind == VertexCoincidence::Kind::AtRoots    ? "A at isolated parameters"
                                                                 : "never A";
    });
  } else if (predicate == "at-infinity") {
    f = family_or(cfg, FamilyKind::IsoscelesAll);
    set_name = "identically at infinity";
    parallel_for(keys.size(), cfg.jobs, [&](size_t i) {
      bool ident = at_infinity_identically(cat, keys[i]);
      bool iso = at_infinity_on_iso_family(cat, keys[i]);
      detail[i] = {{"identically", ident}, {"isosceles", iso}};
      group[i] = ident ? set_name : iso ? "at infinity on isosceles" : "finite somewhere";
    });
  } else {
    throw UsageError("unknown predicate: " + predicate);
  }
  std::map<std::string, std::vector<int>> groups;
  nlohmann::json centers = nlohmann::json::object();
  for (size_t i = 0; i < keys.size(); ++i) {
    groups[group[i]].push_back(keys[i]);
    detail[i]["group"] = group[i];
    centers[std::to_string(keys[i])] = detail[i];
  }
  nlohmann::json j = {{"predicate", predicate}, {"family", family_name(f.kind)}, {"centers", centers}};
  nlohmann::json gj = nlohmann::json::object();
  std::ostringstream os;
  os << predicate << " on " << family_name(f.kind) << "\n";
  for (const auto& [name, ks] : groups) {
    gj[name] = ks;
    os << name << " (" << ks.size() << "): " << join_keys(ks) << "\n";
  }
  j["groups"] = gj;
  if (!set_name.empty()) j["set"] = groups.count(set_name) ? groups[set_name] : std::vector<int>{};
  write_output(cfg, cfg.json ? j.dump(2) + "\n" : os.str(), out);
  return kExitDecided;
}

int cmd_coincide(const RunConfig& cfg, const Catalog& cat, const std::string& mt, const std::string& nt,
                 const std::string& lo_text, const std::string& hi_text, std::ostream& out) {
  int m = parse_key(cat, mt), n = parse_key(cat, nt);
  TriangleFamily f = family_or(cfg, FamilyKind::IsoscelesAll);
  if (!f.is_isosceles()) throw UsageError("coincidences are searched on an isosceles family");
  Rational lo = f.iso_lower();
  std::optional<Rational> hi;
  try {
    if (!lo_text.empty()) lo = parse_rational(lo_text);
    if (!hi_text.empty()) hi = parse_rational(hi_text);
  } catch (const std::exception&) {
    throw UsageError("invalid parameter bound");
  }
  CoincidenceResult c = find_coincidence_iso(cat, m, n, lo, hi);
  std::ostringstream os;
  os << center_label(m) << " = " << center_label(n) << " on (1,k,k), k in (" << to_string(lo) << ", "
     << (hi ? to_string(*hi) : "inf") << ")\n";
  if (c.identically_equal) {
    os << "identically equal\n";
  } else {
    os << "polynomial " << c.polynomial.to_string("k") << "\n";
    if (c.roots.empty()) os << "no coincidence\n";
    for (const auto& r : c.roots)
      os << "root k ~ " << approx_text(r.root) << " in [" << to_string(r.root.lo) << ", " << to_string(r.root.hi)
         << "], residual " << r.residual << " at " << r.precision_bits << " bits"
         << (r.residual_ok ? "" : " (ABOVE TOLERANCE)") << "\n";
  }
  write_output(cfg, cfg.json ? to_json(c).dump(2) + "\n" : os.str(), out);
  return kExitDecided;
}

int cmd_render(const RunConfig& cfg, const Catalog& cat, const std::string& file, const std::string& sides,
               const std::string& centers, bool traces, bool bands, std::ostream& out) {
  FigureSpec spec;
  if (!file.empty()) {
    std::ifstream f(file);
    if (!f) throw UsageError("cannot read " + file);
    try {
      spec = parse_figure_spec(nlohmann::json::parse(f));
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("invalid figure spec: ") + e.what());
    }
  } else {
    if (sides.empty()) throw UsageError("render needs --file or --sides");
    spec.sides = parse_sides(sides);
    if (!centers.empty()) spec.centers = parse_center_range(centers);
  }
  spec.show_traces = spec.show_traces || traces;
  spec.show_bands = spec.show_bands || bands;
  for (int k : spec.centers)
    if (!cat.contains(k)) throw UsageError("unknown center: " + center_label(k));
  try {
    spec.validate(cat);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  write_output(cfg, render_svg(spec, cat), out);
  return kExitDecided;
}

int cmd_validate(const RunConfig& cfg, const std::string& file, std::ostream& out) {
  std::string path = file.empty() ? cfg.catalog : file;
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  ValidationReport r = validate_catalog_text(buf.str());
  nlohmann::json fails = nlohmann::json::array();
  std::ostringstream os;
  os << path << ": " << r.checked << " entries checked, " << r.failures.size() << " failures\n";
  for (const auto& x : r.failures) {
    os << "  X" << x.index << ": " << x.reason << "\n";
    fails.push_back({{"index", x.index}, {"reason", x.reason}});
  }
  nlohmann::json j = {{"path", path}, {"checked", r.checked}, {"failures", fails}, {"ok", r.ok()}};
  write_output(cfg, cfg.json ? j.dump(2) + "\n" : os.str(), out);
  return r.ok() ? kExitDecided : kExitDataError;
}

}  // namespace

std::vector<int> parse_center_range(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part = trim(part);
    if (part.empty()) continue;
    size_t dots = part.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(parse_center_key(part));
        continue;
      }
      size_t used = 0;
      int lo = std::stoi(part.substr(0, dots), &used);
      int hi = std::stoi(part.substr(dots + 2));
      if (lo < 1 || hi < lo || hi - lo > 100000) throw std::invalid_argument("bad bounds");
      for (int k = lo; k <= hi; ++k) out.push_back(k);
    } catch (const std::exception&) {
      throw UsageError("invalid range: " + part);
    }
  }
  if (out.empty()) throw UsageError("empty range: " + text);
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact comparison of triangle center positions"};
  app.name("center-order");
  app.require_subcommand(0, 1);
  app.fallthrough();
  RunConfig cfg;
  bool print_config = false;
  bool no_subdivision = false;
  app.add_option("--catalog", cfg.catalog, "catalog file (default: $CENTER_ORDER_CATALOG or bundled)");
  app.add_option("--family", cfg.family, "tall, isosceles, acute-min-a, acute-scalene");
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--seed", cfg.plan.rng_seed, "sampler seed");
  app.add_option("--grid", cfg.plan.grid_density, "grid density per axis")->check(CLI::Range(0, 100000));
  app.add_option("--samples", cfg.plan.random_count, "random samples")->check(CLI::Range(0, 100000000));
  app.add_option("--denom-bound", cfg.plan.denominator_bound, "max denominator of sampled sides")
      ->check(CLI::Range(1, 1000000000));
  app.add_option("--max-depth", cfg.budget.max_depth, "subdivision depth")->check(CLI::Range(0, 40));
  app.add_option("--max-rects", cfg.budget.max_rects, "subdivision rectangles")->check(CLI::Range(1, 10000000));
  app.add_flag("--no-subdivision", no_subdivision, "skip subdivision certification");
  app.add_option("--precision", cfg.precision_bits, "numeric precision in bits")->check(CLI::Range(64, 100000));
  app.add_flag("--json", cfg.json, "machine-readable output");
  app.add_option("-o,--out", cfg.output, "output file");
  app.add_flag("--print-config", print_config, "print the effective configuration and exit");

  std::string center, sides, order, m, n, range, predicate, lo, hi, file, centers, dot;
  bool full = false, traces = false, bands = false;

  auto* eval = app.add_subcommand("eval", "evaluate a center on a triangle");
  eval->add_option("center", center, "index or A/B/C")->required();
  eval->add_option("--sides", sides, "a,b,c")->required();

  auto* compare = app.add_subcommand("compare", "compare two centers in an order");
  compare->add_option("--order", order, "iso, vertex, side, trace")->required();
  compare->add_option("m", m)->required();
  compare->add_option("n", n)->required();

  auto* graph = app.add_subcommand("graph", "build an order graph and verify the known chains");
  graph->add_option("--order", order, "iso, vertex, side, trace")->required();
  graph->add_option("--range", range, "centers, e.g. 1..30")->required();
  graph->add_option("--dot", dot, "write the Hasse diagram as DOT");
  graph->add_flag("--full", full, "include every pairwise verdict in JSON");

  auto* classify = app.add_subcommand("classify", "classify centers by a region predicate");
  classify->add_option("--predicate", predicate, "outside-angle-a, above-bc, trace-right-of-c, vertex-a, at-infinity")
      ->required();
  classify->add_option("--range", range, "centers, e.g. 1..100")->required();

  auto* coincide = app.add_subcommand("coincide", "find isosceles shapes where two centers coincide");
  coincide->add_option("m", m)->required();
  coincide->add_option("n", n)->required();
  coincide->add_option("--lo", lo, "lower parameter bound");
  coincide->add_option("--hi", hi, "upper parameter bound");

  auto* render = app.add_subcommand("render", "draw an SVG figure");
  render->add_option("--file", file, "JSON figure spec");
  render->add_option("--sides", sides, "a,b,c");
  render->add_option("--centers", centers, "centers, e.g. 1,2,3");
  render->add_flag("--traces", traces, "draw A-traces");
  render->add_flag("--bands", bands, "draw vertex-distance bands");

  auto* catalog = app.add_subcommand("catalog", "catalog maintenance");
  catalog->require_subcommand(1);
  auto* validate = catalog->add_subcommand("validate", "parse and check every entry");
  validate->add_option("--file", file, "catalog file to check");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitDecided;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  cfg.budget.enabled = !no_subdivision;
  if (print_config) {
    out << cfg.to_json().dump(2) << "\n";
    return kExitDecided;
  }
  if (app.get_subcommands().empty()) {
    err << "usage error: a command is required (eval, compare, graph, classify, coincide, render, catalog)\n";
    return kExitUsage;
  }
  try {
    if (*validate) return cmd_validate(cfg, file, out);
    Catalog cat = Catalog::load(cfg.catalog);
    if (*eval) return cmd_eval(cfg, cat, center, sides, out);
    if (*compare) return cmd_compare(cfg, cat, order, m, n, out, err);
    if (*graph) return cmd_graph(cfg, cat, order, range, dot, full, out);
    if (*classify) return cmd_classify(cfg, cat, predicate, range, out);
    if (*coincide) return cmd_coincide(cfg, cat, m, n, lo, hi, out);
    if (*render) return cmd_render(cfg, cat, file, sides, centers, traces, bands, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SoundnessAlarm& e) {
    err << "soundness alarm: " << e.what() << "\n";
    return kExitSoundness;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LookupError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CatalogDataError& e) {
    err << "catalog error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitSoundness;
  }
  return kExitUsage;
}

}  // namespace center_order
