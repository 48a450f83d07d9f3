#include "mapdist/cli.hpp"

#include "mapdist/bijection.hpp"
#include "mapdist/golden.hpp"
#include "mapdist/identities.hpp"
#include "mapdist/oracle.hpp"
#include "mapdist/oracle_compare.hpp"
#include "mapdist/point_functions.hpp"
#include "mapdist/scaling.hpp"
#include "mapdist/series_json.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace mapdist {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Emitted {
  std::string text;
  int code = 0;
};

Emitted json_result(const Json& j, int code = 0) { return {j.dump(2) + "\n", code}; }

bool bivariate_ring(const std::string& ring) {
  if (ring == "q" || ring == "Q") return false;
  if (ring == "qz" || ring == "Q[z]") return true;
  throw UsageError("unknown ring '" + ring + "' (q, qz)");
}

MapFamily family_arg(const std::string& s) {
  try {
    return parse_family(s);
  } catch (const std::exception&) {
    throw UsageError("unknown family '" + s + "' (general, bipartite)");
  }
}

// Distances are checked here, before any series is built.
DistanceSpec distance_arg(const std::vector<int>& d, MapFamily f) {
  try {
    DistanceSpec spec = DistanceSpec::from_list(d);
    if (d.size() == 3 && f == MapFamily::bipartite && spec.parity == Parity::odd)
      throw UsageError("bipartite requires even total distance");
    int zeros = static_cast<int>(std::count(spec.stu.begin(), spec.stu.end(), 0));
    if (d.size() == 3 && zeros > 1) throw UsageError("at most one of s, t, u can be zero");
    return spec;
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Json series_json(const std::string& name, MapFamily f, bool biv, int order, const Json& series) {
  Json j;
  j["quantity"] = name;
  j["family"] = to_string(f);
  j["ring"] = biv ? "Q[z]" : "Q";
  j["order"] = order;
  j["series"] = series;
  return j;
}

template <class R>
Json two_point_series(MapFamily f, int d, int order, TwoPointRoute route, std::optional<int> split) {
  FamilyEvaluator<R> ev(solve_parameters<R>(f, order));
  return to_json(two_point(ev, d, route, split));
}

template <class R>
Json three_point_series(MapFamily f, const DistanceSpec& spec, int order) {
  FamilyEvaluator<R> ev(solve_parameters<R>(f, order));
  return to_json(three_point(ev, spec));
}

std::string csv_number(double v) {
  char buf[32];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string table_csv(const ConvergenceTable& t) {
  std::ostringstream os;
  os << "eps,g,d,discrete,continuum,rel_error\n";
  for (const auto& r : t.rows) {
    std::string d;
    for (size_t i = 0; i < r.d.size(); ++i) d += (i ? ";" : "") + std::to_string(r.d[i]);
    os << csv_number(r.eps) << "," << csv_number(r.g) << "," << d << "," << csv_number(r.discrete) << ","
       << csv_number(r.continuum) << "," << csv_number(r.rel_error) << "\n";
  }
  return os.str();
}

Json table_json(const ConvergenceTable& t, DistanceRounding rounding) {
  Json j;
  j["family"] = to_string(t.family);
  j["z"] = t.z;
  j["D"] = t.D;
  j["rounding"] = to_string(rounding);
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row;
    row["eps"] = r.eps;
    row["g"] = r.g;
    row["d"] = r.d;
    row["discrete"] = r.discrete;
    row["continuum"] = r.continuum;
    row["rel_error"] = r.rel_error;
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["strictly_decreasing"] = t.strictly_decreasing();
  return j;
}

LocalRules rules_arg(const std::string& phi, const std::string& phi_minus) {
  auto one = [](const std::string& s) {
    if (s == "next") return CornerRule::next;
    if (s == "previous") return CornerRule::previous;
    throw UsageError("unknown corner rule '" + s + "' (next, previous)");
  };
  return LocalRules{one(phi), one(phi_minus)};
}

std::string key_string(const std::vector<int>& k) {
  std::string s;
  for (size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance statistics of planar maps: exact series, enumeration oracle, bijections, scaling limits",
               "mapdist"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "Write the result to this file instead of stdout");

  std::string family = "general", ring = "q";
  std::optional<int> order_flag;
  int order = 0;
  auto add_common = [&](CLI::App* c) {
    c->add_option("--family", family, "general or bipartite")->capture_default_str();
    c->add_option("--ring", ring, "q (counting edges) or qz (edges and faces)")->capture_default_str();
    c->add_option("--order", order_flag, "Truncation order in g (default 24, or 12 with --ring qz)")->check(CLI::Range(1, 40));
  };

  std::vector<int> distances;
  std::string route = "direct";
  std::optional<int> split;
  auto* two = app.add_subcommand("two-point", "Two-point function G_d as a series in g");
  add_common(two);
  two->add_option("--d", distances, "Distance d")->required()->expected(1);
  two->add_option("--route", route, "direct, typeA or typeB")->capture_default_str();
  two->add_option("--split", split, "Index s of the typeA/typeB decomposition");

  auto* three = app.add_subcommand("three-point", "Three-point function G_{d12,d13,d23} as a series in g");
  add_common(three);
  three->add_option("--d", distances, "Distances d12 d13 d23")->required()->expected(3);

  auto* series = app.add_subcommand("series", "Parametrisation x (and alpha) as series in g");
  add_common(series);

  int edges = 3;
  std::string kind = "bipointed", filter = "none";
  bool compare = false;
  auto* oracle = app.add_subcommand("oracle", "Brute-force tallies of pointed maps");
  oracle->add_option("--edges", edges, "Number of edges (maximum with --compare)")->check(CLI::Range(1, kMaxOracleEdges));
  oracle->add_option("--kind", kind, "bipointed or tripointed")->capture_default_str();
  oracle->add_option("--filter", filter, "none, bipartite or quadrangulation")->capture_default_str();
  oracle->add_flag("--compare", compare, "Compare every tally up to --edges with the exact series");

  VerifierConfig vcfg;
  std::string only;
  auto* vid = app.add_subcommand("verify-identities", "Check every recursion and identity coefficient-exactly");
  vid->add_option("--order", vcfg.univariate_order, "Univariate order")->check(CLI::Range(2, 40))->capture_default_str();
  vid->add_option("--biv-order", vcfg.bivariate_order, "Bivariate order")->check(CLI::Range(2, 20))->capture_default_str();
  vid->add_option("--max-index", vcfg.univariate_max_index, "Largest index, univariate")->check(CLI::Range(1, 10));
  vid->add_option("--biv-max-index", vcfg.bivariate_max_index, "Largest index, bivariate")->check(CLI::Range(1, 6));
  vid->add_option("--only", only, "Run a single identity");

  int faces = 3;
  bool lambda_only = false;
  std::string phi_rule = "next", phi_minus_rule = "previous";
  auto* vbij = app.add_subcommand("verify-bijections", "Check the bijections on all small labelled quadrangulations");
  vbij->add_option("--faces", faces, "Maximum number of faces")->check(CLI::Range(1, kMaxBijectionFaces))->capture_default_str();
  vbij->add_flag("--lambda-only", lambda_only, "Only the unpointed correspondence checks");
  vbij->add_option("--phi", phi_rule, "Corner joined by Phi: next or previous")->capture_default_str();
  vbij->add_option("--phi-minus", phi_minus_rule, "Corner joined by Phi^-: next or previous")->capture_default_str();

  auto* scaling = app.add_subcommand("scaling", "Scaling-limit closed forms and convergence tables");
  scaling->require_subcommand(1);
  scaling->fallthrough();
  double z = 1, D = 1, D12 = 1, D13 = 1, D23 = 1;
  std::vector<double> D3, eps_list = {0.05, 0.02, 0.01};
  std::string format = "json", rounding;
  auto add_scale = [&](CLI::App* c) {
    c->add_option("--family", family, "general or bipartite")->capture_default_str();
    c->add_option("--z", z, "Face weight")->check(CLI::PositiveNumber)->capture_default_str();
  };
  auto* s_crit = scaling->add_subcommand("critical", "Critical point g_crit(z) and scaling factor");
  add_scale(s_crit);
  auto* s_two = scaling->add_subcommand("two-point", "Continuous two-point function");
  add_scale(s_two);
  s_two->add_option("--D", D, "Rescaled distance")->check(CLI::PositiveNumber);
  auto* s_three = scaling->add_subcommand("three-point", "Continuous three-point function");
  add_scale(s_three);
  for (auto* c : {s_three}) {
    c->add_option("--D12", D12)->check(CLI::PositiveNumber);
    c->add_option("--D13", D13)->check(CLI::PositiveNumber);
    c->add_option("--D23", D23)->check(CLI::PositiveNumber);
  }
  auto* s_obs = scaling->add_subcommand("observables", "Geodesic counts and vertex/face fractions");
  add_scale(s_obs);
  auto* s_conv = scaling->add_subcommand("converge", "Discrete-to-continuum convergence table");
  add_scale(s_conv);
  s_conv->add_option("--D", D3, "One distance (two-point) or three (three-point)")->expected(1, 3);
  s_conv->add_option("--eps", eps_list, "Values of eps in (0, 0.2]")->expected(1, 20);
  s_conv->add_option("--rounding", rounding, "ceil, nearest or nearest-even");
  s_conv->add_option("--format", format, "json or csv")->capture_default_str();

  std::string score_format = "json";
  auto* seed = app.add_subcommand("seed-paper-checks", "Scoreboard of printed expansions and closed-form values");
  seed->add_option("--format", score_format, "json or text")->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Emitted result;
  try {
    if (two->parsed()) {
      MapFamily f = family_arg(family);
      bool biv = bivariate_ring(ring);
      order = order_flag.value_or(biv ? 12 : 24);
      DistanceSpec spec = distance_arg(distances, f);
      TwoPointRoute r;
      try {
        r = parse_route(route);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (r == TwoPointRoute::typeB && f == MapFamily::bipartite)
        throw UsageError("typeB route does not exist for bipartite maps");
      if (r == TwoPointRoute::typeA && spec.distances[0] < 2) throw UsageError("typeA route needs d >= 2");
      if (split) {
        int t = r == TwoPointRoute::typeB ? spec.distances[0] + 1 - *split : spec.distances[0] - *split;
        if (r == TwoPointRoute::direct) throw UsageError("--split needs the typeA or typeB route");
        if (*split < 1 || t < 1) throw UsageError("split s must leave s, t >= 1");
      }
      Json s = biv ? two_point_series<ZPolynomial>(f, spec.distances[0], order, r, split)
                   : two_point_series<Rational>(f, spec.distances[0], order, r, split);
      Json j = series_json("two-point", f, biv, order, s);
      j["d"] = spec.distances;
      j["route"] = to_string(r);
      result = json_result(j);
    } else if (three->parsed()) {
      MapFamily f = family_arg(family);
      bool biv = bivariate_ring(ring);
      order = order_flag.value_or(biv ? 12 : 24);
      DistanceSpec spec = distance_arg(distances, f);
      Json s = biv ? three_point_series<ZPolynomial>(f, spec, order) : three_point_series<Rational>(f, spec, order);
      Json j = series_json("three-point", f, biv, order, s);
      j["d"] = spec.distances;
      j["stu"] = spec.stu;
      j["parity"] = spec.parity == Parity::even ? "even" : "odd";
      j["aligned"] = spec.aligned;
      result = json_result(j);
    } else if (series->parsed()) {
      MapFamily f = family_arg(family);
      bool biv = bivariate_ring(ring);
      order = order_flag.value_or(biv ? 12 : 24);
      Json j;
      j["family"] = to_string(f);
      j["ring"] = biv ? "Q[z]" : "Q";
      j["order"] = order;
      if (biv) {
        auto p = solve_bivariate(f, order);
        j["x"] = to_json(p.x);
        j["alpha"] = to_json(*p.alpha);
      } else {
        j["x"] = to_json(solve_univariate(f, order).x);
      }
      result = json_result(j);
    } else if (oracle->parsed()) {
      if (compare) {
        if (edges > 5) throw UsageError("--compare supports at most 5 edges");
        OracleComparison c = compare_oracle_with_series(edges);
        Json j;
        j["max_edges"] = edges;
        j["entries"] = c.entries;
        j["pass"] = c.pass;
        j["mismatches"] = c.mismatches;
        result = json_result(j, c.pass ? 0 : 1);
      } else {
        PointedKind k;
        MapFilter mf;
        try {
          k = parse_pointed_kind(kind);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        if (filter == "none") mf = MapFilter::none;
        else if (filter == "bipartite") mf = MapFilter::bipartite;
        else if (filter == "quadrangulation") mf = MapFilter::quadrangulation;
        else throw UsageError("unknown filter '" + filter + "' (none, bipartite, quadrangulation)");
        PointedCount pc = count_pointed(edges, k, mf);
        Json j;
        j["edges"] = edges;
        j["kind"] = to_string(k);
        j["filter"] = filter;
        j["rooted_face_polynomial"] = to_json(rooted_face_polynomial(edges, mf));
        Json table = Json::object();
        for (const auto& [key, poly] : pc.table) table[key_string(key)] = to_json(poly);
        j["table"] = table;
        result = json_result(j);
      }
    } else if (vid->parsed()) {
      IdentityVerifier v(vcfg);
      std::vector<VerificationReport> reports;
      if (!only.empty()) {
        IdentityName id;
        try {
          id = parse_identity(only);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        reports.push_back(v.verify(id));
      } else {
        reports = v.verify_all();
      }
      bool pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
      Json j;
      j["pass"] = pass;
      Json list = Json::array();
      for (const auto& r : reports) list.push_back(to_json(r));
      j["identities"] = list;
      result = json_result(j, pass ? 0 : 1);
    } else if (vbij->parsed()) {
      LocalRules rules = rules_arg(phi_rule, phi_minus_rule);
      if (!lambda_only && faces > 3) throw UsageError("pointed checks support at most 3 faces; add --lambda-only");
      BijectionReport r = lambda_only ? verify_lambda(faces, rules) : verify_bijections(faces, rules);
      result = json_result(to_json(r), r.pass() ? 0 : 1);
    } else if (scaling->parsed()) {
      MapFamily f = family_arg(family);
      Json j;
      j["family"] = to_string(f);
      j["z"] = z;
      if (s_crit->parsed()) {
        CriticalPoint c = critical_point(f, z);
        j[f == MapFamily::general ? "r" : "upsilon"] = c.param;
        j["g_crit"] = c.g_crit;
        j["gamma"] = c.gamma;
        j["kappa_crit"] = critical_kappa(f, z);
      } else if (s_two->parsed()) {
        j["D"] = D;
        j["value"] = continuous_two_point(f, D, z);
      } else if (s_three->parsed()) {
        ContinuumPoint p;
        try {
          p = continuum_point(D12, D13, D23);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        DerivativeEstimate fd = continuous_three_point_fd(f, D12, D13, D23, z);
        j["D"] = {D12, D13, D23};
        j["STU"] = {p.S, p.T, p.U};
        j["F"] = continuous_F(f, p.S, p.T, p.U, z);
        j["value"] = continuous_three_point(f, D12, D13, D23, z);
        j["finite_difference"] = fd.value;
        j["finite_difference_error"] = fd.error;
      } else if (s_obs->parsed()) {
        Observables o = observables(f, z);
        j["geodesic_vertices"] = o.geodesic_vertices;
        if (o.geodesic_edges) j["geodesic_edges"] = *o.geodesic_edges;
        j["vertex_fraction"] = o.vertex_fraction;
        j["face_fraction"] = o.face_fraction;
      } else {
        if (D3.empty()) D3 = {1.0};
        if (D3.size() == 2) throw UsageError("give one distance or three");
        if (D3.size() == 3) {
          try {
            continuum_point(D3[0], D3[1], D3[2]);
          } catch (const std::invalid_argument&) {
            throw UsageError("triangular inequality violated");
          }
        }
        for (double e : eps_list)
          if (!(e > 0 && e <= 0.2)) throw UsageError("eps must lie in (0, 0.2]");
        if (format != "json" && format != "csv") throw UsageError("unknown format '" + format + "' (json, csv)");
        std::optional<DistanceRounding> rr;
        if (!rounding.empty()) {
          try {
            rr = parse_rounding(rounding);
          } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
          }
        }
        DistanceRounding used =
            rr.value_or(f == MapFamily::bipartite && D3.size() == 1 ? DistanceRounding::nearest_even : DistanceRounding::ceil);
        ConvergenceTable t = convergence_table(f, D3, z, eps_list, used);
        if (format == "csv") {
          result = {table_csv(t), 0};
        } else {
          result = json_result(table_json(t, used));
        }
        j = nullptr;
      }
      if (!j.is_null()) result = json_result(j);
    } else if (seed->parsed()) {
      if (score_format != "json" && score_format != "text")
        throw UsageError("unknown format '" + score_format + "' (json, text)");
      std::vector<GoldenResult> golden = check_all_golden();
      std::vector<ClosedFormCheck> closed = scaling_closed_form_checks();
      int passed = 0, documented = 0, failed = 0;
      for (const auto& g : golden) {
        if (g.status == GoldenStatus::match) ++passed;
        else if (g.status == GoldenStatus::documented_discrepancy) ++documented;
        else ++failed;
      }
      for (const auto& c : closed) (c.pass() ? passed : failed)++;
      if (score_format == "text") {
        std::ostringstream os;
        for (const auto& g : golden) os << std::left << std::setw(24) << to_string(g.status) << g.name << "\n";
        for (const auto& c : closed)
          os << std::left << std::setw(24) << (c.pass() ? "match" : "mismatch") << c.name << " = "
             << std::setprecision(15) << c.value << "\n";
        os << "passed " << passed << ", documented " << documented << ", failed " << failed << "\n";
        result = {os.str(), failed ? 1 : 0};
      } else {
        Json j;
        Json gl = Json::array();
        for (const auto& g : golden) gl.push_back(to_json(g));
        j["expansions"] = gl;
        Json cl = Json::array();
        for (const auto& c : closed) {
          Json e;
          e["name"] = c.name;
          e["value"] = c.value;
          e["expected"] = c.expected;
          e["tolerance"] = c.tolerance;
          e["pass"] = c.pass();
          cl.push_back(e);
        }
        j["closed_forms"] = cl;
        j["passed"] = passed;
        j["documented"] = documented;
        j["failed"] = failed;
        result = json_result(j, failed ? 1 : 0);
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (out_path.empty()) {
    out << result.text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      err << "error: cannot write " << out_path << "\n";
      return 1;
    }
    f << result.text;
  }
  return result.code;
}

}  // namespace mapdist
