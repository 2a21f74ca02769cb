#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqcc/error.hpp"
#include "eqcc/serialization.hpp"

namespace {

using eqcc::json;

enum Exit { kOk = 0, kInput = 1, kUndecided = 2, kEmpty = 3, kTropicalFail = 4 };

void write_text(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw eqcc::InvalidArgument("cannot open output file " + path);
  f << text;
}

void emit(const json& j, const std::string& path) { write_text(j.dump(2) + "\n", path); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double parse_double(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw eqcc::InvalidArgument("not a number: '" + s + "'");
  }
}

double parse_exponent(const std::string& s) { return eqcc::Exponent::parse(s).value(); }

// "a" or "lo,hi"
eqcc::Interval parse_range(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() == 1) return eqcc::Interval(parse_exponent(parts[0]));
  if (parts.size() != 2) throw eqcc::InvalidArgument("expected 'a' or 'lo,hi', got '" + s + "'");
  const double lo = parse_double(parts[0]), hi = parse_double(parts[1]);
  if (!(lo <= hi)) throw eqcc::InvalidArgument("range lower end exceeds upper end: " + s);
  return eqcc::Interval(lo, hi);
}

std::string csv_number(double v) {
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

// symmetric-scan ----------------------------------------------------------

struct ScanArgs {
  std::string A;
  std::string branch = "A";
  double tol = 1e-12;
  double margin = 1e-9;
  bool all = false;
  std::string out, svg, format = "json";
};

std::string family_svg() {
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.6 -2.1 3.2 4.2\">\n"
      << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"0.01\">\n";
  for (auto b : {eqcc::Branch::A, eqcc::Branch::B}) {
    const char* colour = b == eqcc::Branch::A ? "blue" : "red";
    for (int body : {3, 5}) {
      svg << "<path class=\"branch-" << eqcc::to_string(b) << " q" << body << "\" stroke=\""
          << colour << "\" d=\"";
      const int n = 400;
      for (int k = 0; k <= n; ++k) {
        const double y4 = eqcc::kMaxY4 * k / n;
        const auto p = eqcc::symmetric_coords(eqcc::SymmetricShape(y4, b))[body];
        svg << (k == 0 ? "M" : " L") << p.x << ' ' << p.y;
      }
      svg << "\"/>\n";
    }
  }
  svg << "<path class=\"q4\" stroke=\"black\" d=\"M 0 0 L 0 " << eqcc::kMaxY4 << "\"/>\n"
      << "<circle cx=\"-0.5\" cy=\"0\" r=\"0.03\" fill=\"black\"/>\n"
      << "<circle cx=\"0.5\" cy=\"0\" r=\"0.03\" fill=\"black\"/>\n"
      << "</g>\n</svg>\n";
  return svg.str();
}

int cmd_symmetric_scan(const ScanArgs& a) {
  const double A = parse_exponent(a.A);
  const eqcc::Branch branch = eqcc::parse_branch(a.branch);
  eqcc::IsolationOptions opts;
  opts.tol = a.tol;
  if (!(a.tol > 0.0) || !(a.margin >= 0.0)) throw eqcc::InvalidArgument("tol must be positive");

  json records = json::array();
  std::vector<eqcc::RootRecord> kept;
  std::size_t unresolved = 0;
  for (const auto& w : eqcc::sign_type_windows(branch)) {
    const auto res = eqcc::isolate_roots(branch, A, w.open(a.margin), opts);
    unresolved += res.unresolved.size();
    for (const auto& r : res.roots) {
      if (!a.all && !r.positive) continue;
      kept.push_back(r);
      records.push_back(eqcc::to_json(r));
    }
  }
  if (unresolved > 0) {
    std::cerr << "warning: " << unresolved << " subintervals left unresolved\n";
  }
  if (!a.svg.empty()) write_text(family_svg(), a.svg);

  if (a.format == "csv") {
    std::ostringstream csv;
    csv << "branch,sign_type,A,y4_lo,y4_hi,m1,m2,m3,m4,m5,positive,la_residual\n";
    for (const auto& r : kept) {
      csv << eqcc::to_string(r.branch) << ',' << r.sign_type.name() << ',' << csv_number(r.A)
          << ',' << csv_number(r.y4.lo()) << ',' << csv_number(r.y4.hi());
      for (int k = 1; k <= 5; ++k) csv << ',' << (r.masses ? csv_number((*r.masses)(k)) : "");
      csv << ',' << (r.positive ? "true" : "false") << ',' << csv_number(r.la_residual) << '\n';
    }
    write_text(csv.str(), a.out);
  } else {
    emit(records, a.out);
  }
  return records.empty() ? kEmpty : kOk;
}

// certify -----------------------------------------------------------------

struct CertifyArgs {
  std::string mode = "unique";
  std::string window;
  std::string branch;
  std::string A = "2";
  double margin = 1e-12;
  int max_depth = 60;
  std::size_t max_boxes = 2000000;
  std::string leaves = "auto";
  std::string out;
};

json filter_leaves(json cert, const std::string& mode, bool certified) {
  if (mode == "all" || (mode == "auto" && certified)) return cert;
  json kept = json::array();
  if (mode != "none") {
    for (const auto& l : cert["leaves"]) {
      const auto& v = l["verdict"];
      if (v == "undecided" || (cert["kind"] == "unique-root" && cert["status"] != "certified" &&
                               v != "F!=0" &&
                               v != (cert["derivative_sign"] == 1 ? "dF>0" : "dF<0"))) {
        kept.push_back(l);
      }
    }
  }
  std::map<std::string, std::size_t> counts;
  for (const auto& l : cert["leaves"]) counts[l["verdict"].get<std::string>()]++;
  cert["leaf_counts"] = counts;
  cert["leaves"] = kept;
  cert["leaves_filtered"] = true;
  return cert;
}

int cmd_certify(const CertifyArgs& a) {
  if (a.window.empty()) throw eqcc::InvalidArgument("--window is required");
  if (a.leaves != "auto" && a.leaves != "all" && a.leaves != "undecided" && a.leaves != "none") {
    throw eqcc::InvalidArgument("--leaves must be auto, all, undecided or none");
  }
  eqcc::Interval window;
  eqcc::Branch branch;
  if (a.window.find(',') != std::string::npos) {
    if (a.branch.empty()) throw eqcc::InvalidArgument("--branch is required with a numeric window");
    branch = eqcc::parse_branch(a.branch);
    window = parse_range(a.window);
  } else {
    const auto kind = eqcc::parse_sign_type(a.window);
    const std::string name = eqcc::SignType{kind, {}}.name();
    branch = eqcc::parse_branch(name.substr(0, 1));
    if (!a.branch.empty() && eqcc::parse_branch(a.branch) != branch) {
      throw eqcc::InvalidArgument("window " + name + " lies on branch " + name.substr(0, 1));
    }
    window = eqcc::sign_type_window(kind).open(a.margin);
  }
  const eqcc::Interval A = parse_range(a.A);
  eqcc::CertifyOptions opts;
  opts.max_depth = a.max_depth;
  opts.max_boxes = a.max_boxes;

  if (a.mode == "unique") {
    const auto cert = eqcc::certify_unique_root(window, A, branch, opts);
    emit(filter_leaves(eqcc::to_json(cert), a.leaves, cert.certified()), a.out);
    switch (cert.status) {
      case eqcc::CertificateStatus::Certified: return kOk;
      case eqcc::CertificateStatus::Undecided: return kUndecided;
      case eqcc::CertificateStatus::PreconditionFailed:
        std::cerr << "precondition failed: " << cert.message << "\n";
        return kInput;
    }
  }
  if (a.mode == "nocommon") {
    const auto cert = eqcc::certify_no_common_zero({window, A}, branch, opts);
    emit(filter_leaves(eqcc::to_json(cert), a.leaves, cert.certified), a.out);
    return cert.certified ? kOk : kUndecided;
  }
  throw eqcc::InvalidArgument("--mode must be unique or nocommon");
}

// region-map --------------------------------------------------------------

struct RegionArgs {
  std::string A = "2";
  int grid = 180;
  std::string at;
  std::string closure = "both";
  std::string out, svg, format = "csv";
};

std::string region_code(const eqcc::ChainAngles& angles, double A, std::optional<int>* interior) {
  if (!eqcc::closure_feasible(angles)) return "unrealizable";
  try {
    const auto r = eqcc::region_classify(angles, A);
    if (interior) *interior = r.interior;
    return eqcc::to_string(r.region);
  } catch (const eqcc::CollisionError&) {
    return "collision";
  } catch (const eqcc::OutOfDomain&) {
    return "unrealizable";
  }
}

std::vector<eqcc::Closure> closures_for(const std::string& s) {
  if (s == "both") return {eqcc::Closure::Plus, eqcc::Closure::Minus};
  if (s == "plus") return {eqcc::Closure::Plus};
  if (s == "minus") return {eqcc::Closure::Minus};
  throw eqcc::InvalidArgument("--closure must be plus, minus or both");
}

int cmd_region_map(const RegionArgs& a) {
  const double A = parse_exponent(a.A);
  const auto closures = closures_for(a.closure);
  constexpr double deg = std::numbers::pi / 180.0;

  if (!a.at.empty()) {
    const auto parts = split(a.at, ',');
    if (parts.size() != 2) throw eqcc::InvalidArgument("--at expects 'theta12,theta23' in degrees");
    const double t12 = parse_double(parts[0]) * deg, t23 = parse_double(parts[1]) * deg;
    json cells = json::array();
    for (auto c : closures) {
      const eqcc::ChainAngles ang{t12, t23, c};
      json cell = {{"theta12", t12}, {"theta23", t23}, {"closure", eqcc::to_string(c)}};
      if (!eqcc::closure_feasible(ang)) {
        cell["region"] = "unrealizable";
      } else {
        const auto cfg = eqcc::cyclic_from_angles(ang);
        cell["points"] = eqcc::to_json(cfg);
        try {
          const auto r = eqcc::region_classify(ang, A);
          cell["region"] = eqcc::to_string(r.region);
          cell["detail"] = eqcc::to_json(r);
        } catch (const eqcc::CollisionError&) {
          cell["region"] = "collision";
        }
      }
      cells.push_back(cell);
    }
    emit(cells, a.out);
    return kOk;
  }

  if (a.grid < 2 || a.grid > 4000) throw eqcc::InvalidArgument("--grid must be in [2, 4000]");
  const int n = a.grid;
  const double step = 360.0 / n;
  std::map<eqcc::Closure, std::vector<std::string>> codes;
  std::ostringstream csv;
  json rows = json::array();
  csv << "theta12,theta23,closure,region,interior\n";
  for (auto c : closures) {
    auto& grid = codes[c];
    grid.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double t12 = (i + 0.5) * step * deg, t23 = (j + 0.5) * step * deg;
        std::optional<int> interior;
        const std::string code = region_code({t12, t23, c}, A, &interior);
        grid[static_cast<std::size_t>(i) * n + j] = code;
        const std::string in = interior ? std::to_string(*interior) : "";
        csv << csv_number(t12) << ',' << csv_number(t23) << ',' << eqcc::to_string(c) << ','
            << code << ',' << in << '\n';
        if (a.format == "json") {
          rows.push_back({{"theta12", t12},
                          {"theta23", t23},
                          {"closure", eqcc::to_string(c)},
                          {"region", code},
                          {"interior", interior ? json(*interior) : json(nullptr)}});
        }
      }
    }
  }
  if (a.format == "json") emit(rows, a.out);
  else if (a.format == "csv") write_text(csv.str(), a.out);
  else throw eqcc::InvalidArgument("--format must be csv or json");

  if (!a.svg.empty()) {
    // cell edges between differing verdicts, in degrees (theta12 right, theta23 up)
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 360 360\">\n"
        << "<g transform=\"translate(0,360) scale(1,-1)\" fill=\"none\" stroke-width=\"0.6\">\n";
    for (auto c : closures) {
      const auto& grid = codes[c];
      auto at = [&](int i, int j) -> const std::string& {
        return grid[static_cast<std::size_t>(i) * n + j];
      };
      svg << "<path class=\"closure-" << eqcc::to_string(c) << "\" stroke=\""
          << (c == eqcc::Closure::Plus ? "black" : "grey") << "\" d=\"";
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i + 1 < n && at(i, j) != at(i + 1, j)) {
            svg << "M" << (i + 1) * step << ' ' << j * step << "V" << (j + 1) * step;
          }
          if (j + 1 < n && at(i, j) != at(i, j + 1)) {
            svg << "M" << i * step << ' ' << (j + 1) * step << "H" << (i + 1) * step;
          }
        }
      }
      svg << "\"/>\n";
    }
    svg << "</g>\n</svg>\n";
    write_text(svg.str(), a.svg);
  }
  return kOk;
}

// tropical-verify ---------------------------------------------------------

struct TropicalArgs {
  std::vector<std::string> A{"3"};
  std::string ray;
  std::size_t random = 0;
  std::uint64_t seed = 20240601;
  std::string convention = "max";
  std::string out;
};

json weight_strings(const eqcc::tropical::WeightVector& w) {
  json arr = json::array();
  for (const auto& x : w.r) arr.push_back(eqcc::tropical::to_string(x));
  return arr;
}

int cmd_tropical_verify(const TropicalArgs& a) {
  namespace tr = eqcc::tropical;
  tr::Convention conv;
  if (a.convention == "max") conv = tr::Convention::Max;
  else if (a.convention == "min") conv = tr::Convention::Min;
  else throw eqcc::InvalidArgument("--convention must be max or min");

  std::vector<tr::Rational> exps;
  for (const auto& s : a.A)
    for (const auto& part : split(s, ',')) exps.push_back(tr::parse_rational(part));
  if (exps.empty()) throw eqcc::InvalidArgument("--A needs at least one rational exponent");

  bool pass = true;
  json out = json::array();
  for (const auto& A : exps) {
    const tr::System system = tr::build_system(A);
    if (!a.ray.empty()) {
      const tr::WeightVector w = tr::WeightVector::parse(a.ray);
      const tr::Membership m = tr::in_prevariety(w, system, conv);
      json j = {{"A", tr::to_string(A)},
                {"convention", tr::to_string(conv)},
                {"weight", weight_strings(w)},
                {"membership", eqcc::to_json(m)}};
      pass = pass && m.member;
      out.push_back(j);
      continue;
    }
    const tr::TableReport report = tr::verify_tables(A, tr::RayTable::shipped(), conv);
    json j = eqcc::to_json(report);
    pass = pass && report.pass;
    if (a.random > 0) {
      const auto rc = tr::random_weight_check(system, a.random, a.seed, 1000,
                                              tr::RayTable::shipped(), conv);
      json samples = json::array();
      for (const auto& s : rc.samples) {
        json item = eqcc::to_json(s.membership);
        item["weight"] = weight_strings(s.w);
        samples.push_back(item);
      }
      j["random"] = {{"seed", a.seed},
                     {"count", rc.samples.size()},
                     {"rejected", rc.rejected},
                     {"samples", samples}};
    }
    out.push_back(j);
  }
  emit(out, a.out);
  return pass ? kOk : kTropicalFail;
}

// evaluate ----------------------------------------------------------------

struct EvaluateArgs {
  std::string input;
  std::string A;
  std::string out;
};

int cmd_evaluate(const EvaluateArgs& a) {
  json doc;
  try {
    if (a.input == "-") {
      doc = json::parse(std::cin);
    } else {
      std::ifstream f(a.input);
      if (!f) throw eqcc::InvalidArgument("cannot open " + a.input);
      doc = json::parse(f);
    }
  } catch (const json::parse_error& e) {
    throw eqcc::InvalidArgument(std::string("input is not valid JSON: ") + e.what());
  }
  const eqcc::ConfigurationInput in = eqcc::parse_configuration(doc);
  double A = 3.0;
  if (!a.A.empty()) A = parse_exponent(a.A);
  else if (in.A) A = eqcc::Exponent(*in.A).value();
  const eqcc::MassVector masses = in.masses.value_or(eqcc::MassVector::equal());

  const auto md = eqcc::mutual_distances(in.config);
  json table = json::array();
  for (int i = 1; i <= 5; ++i) {
    json row = json::array();
    for (int j = 1; j <= 5; ++j) row.push_back(md.table(i, j));
    table.push_back(row);
  }
  json cm = json::object();
  for (int s = 5; s >= 1; --s) {
    std::vector<int> q;
    for (int k = 1; k <= 5; ++k)
      if (k != s) q.push_back(k);
    std::string label = "CM";
    for (int k : q) label += std::to_string(k);
    cm[label] = eqcc::cayley_menger(md.table, q[0], q[1], q[2], q[3]);
  }

  const double lambda = eqcc::least_squares_lambda(md.table, masses, A);
  const eqcc::EquationContext ctx{lambda};
  json out = {{"A", A},
              {"masses", eqcc::to_json(masses)},
              {"points", eqcc::to_json(in.config)},
              {"from_distances", in.from_distances},
              {"distances",
               {{"table", table},
                {"equilateral", md.equilateral},
                {"edge_spread", md.edge_spread},
                {"classes", md.classes ? json(md.classes->values()) : json(nullptr)}}},
              {"cayley_menger", cm},
              {"laura_andoyer", eqcc::to_json(eqcc::laura_andoyer(in.config, masses, A))},
              {"lambda_tilde", lambda},
              {"albouy_chenciner_f", eqcc::to_json(eqcc::albouy_chenciner_f(md.table, masses, A, ctx))},
              {"albouy_chenciner_g", eqcc::to_json(eqcc::albouy_chenciner_g(md.table, masses, A, ctx))}};
  if (md.equilateral) {
    out["la2"] = eqcc::to_json(eqcc::la2_feasible(in.config, A));
    out["region"] = eqcc::to_json(eqcc::region_classify(in.config, A));
  }
  emit(out, a.out);
  return kOk;
}

// extras ------------------------------------------------------------------

struct BifurcationArgs {
  std::string range = "3,3.3";
  double step = 0.01;
  double tol = 1e-6;
  std::string out;
};

int cmd_bifurcation(const BifurcationArgs& a) {
  try {
    emit(eqcc::to_json(eqcc::bifurcation_scan(parse_range(a.range), a.step, a.tol)), a.out);
    return kOk;
  } catch (const eqcc::NoBifurcationFound& e) {
    emit({{"A_c", nullptr}, {"message", e.what()}}, a.out);
    return kEmpty;
  }
}

struct ExcludeArgs {
  std::string A = "2";
  std::string branch = "both";
  std::size_t grid = 10000;
  std::string out;
};

int cmd_exclude(const ExcludeArgs& a) {
  const double A = parse_exponent(a.A);
  std::vector<eqcc::Branch> branches;
  if (a.branch == "both") branches = {eqcc::Branch::A, eqcc::Branch::B};
  else branches = {eqcc::parse_branch(a.branch)};
  json out = json::array();
  bool all = true;
  for (auto b : branches) {
    for (const auto& chk : eqcc::exclude_sign_types(b, A, a.grid)) {
      all = all && chk.holds();
      out.push_back(eqcc::to_json(chk));
    }
  }
  emit(out, a.out);
  return all ? kOk : kUndecided;
}

json error_json(const std::string& kind, const std::string& message) {
  return {{"error", kind}, {"message", message}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilateral pentagon central configurations: residuals, symmetric roots, "
               "interval certificates, region maps and tropical table checks"};
  app.require_subcommand(1);

  ScanArgs scan;
  auto* s = app.add_subcommand("symmetric-scan", "roots of F on every sign-type window");
  s->add_option("--A", scan.A, "exponent A >= 2 (real or p/q)")->required();
  s->add_option("--branch", scan.branch, "A or B")->capture_default_str();
  s->add_option("--tol", scan.tol, "root enclosure width")->capture_default_str();
  s->add_option("--margin", scan.margin, "inset at collision window ends")->capture_default_str();
  s->add_flag("--all", scan.all, "also report roots with non-positive masses");
  s->add_option("--svg", scan.svg, "write the symmetric family curves as SVG");
  s->add_option("--format", scan.format, "json or csv")->capture_default_str();
  s->add_option("--out", scan.out, "output file (default stdout)");

  CertifyArgs cert;
  auto* c = app.add_subcommand("certify", "interval certificates over (y4, A) boxes");
  c->add_option("--mode", cert.mode, "unique or nocommon")->capture_default_str();
  c->add_option("--window", cert.window, "sign type (A2, B2, A4, ...) or lo,hi")->required();
  c->add_option("--branch", cert.branch, "A or B (required with lo,hi)");
  c->add_option("--A", cert.A, "a or lo,hi")->capture_default_str();
  c->add_option("--margin", cert.margin, "inset at collision window ends")->capture_default_str();
  c->add_option("--max-depth", cert.max_depth, "bisection depth cap")->capture_default_str();
  c->add_option("--max-boxes", cert.max_boxes, "box budget")->capture_default_str();
  c->add_option("--leaves", cert.leaves, "auto, all, undecided or none")->capture_default_str();
  c->add_option("--out", cert.out, "certificate file (default stdout)");

  RegionArgs reg;
  auto* r = app.add_subcommand("region-map", "region verdicts over (theta12, theta23)");
  r->add_option("--A", reg.A, "exponent A")->capture_default_str();
  r->add_option("--grid", reg.grid, "cells per axis over (0, 360) degrees")->capture_default_str();
  r->add_option("--at", reg.at, "single cell 'theta12,theta23' in degrees");
  r->add_option("--closure", reg.closure, "plus, minus or both")->capture_default_str();
  r->add_option("--svg", reg.svg, "write region boundaries as SVG paths");
  r->add_option("--format", reg.format, "csv or json")->capture_default_str();
  r->add_option("--out", reg.out, "output file (default stdout)");

  TropicalArgs trop;
  auto* t = app.add_subcommand("tropical-verify", "prevariety membership of the ray/cone tables");
  t->add_option("--A", trop.A, "rational exponents, e.g. 3 5/2 (repeat or comma separate)")
      ->capture_default_str();
  t->add_option("--ray", trop.ray, "check one weight vector 'w1,...,w6' instead of the tables");
  t->add_option("--random", trop.random, "also test this many random weight vectors");
  t->add_option("--seed", trop.seed, "seed for --random")->capture_default_str();
  t->add_option("--convention", trop.convention, "max or min")->capture_default_str();
  t->add_option("--out", trop.out, "output file (default stdout)");

  EvaluateArgs ev;
  auto* e = app.add_subcommand("evaluate", "all residual systems for a configuration file");
  e->add_option("input", ev.input, "configuration JSON ('-' for stdin)")->required();
  e->add_option("--A", ev.A, "exponent A (overrides the file)");
  e->add_option("--out", ev.out, "output file (default stdout)");

  BifurcationArgs bif;
  auto* b = app.add_subcommand("bifurcation", "scan A for the A4 root-count jump");
  b->add_option("--range", bif.range, "lo,hi")->capture_default_str();
  b->add_option("--step", bif.step, "scan step")->capture_default_str();
  b->add_option("--tol", bif.tol, "bracket width")->capture_default_str();
  b->add_option("--out", bif.out, "output file (default stdout)");

  ExcludeArgs ex;
  auto* x = app.add_subcommand("exclude", "grid check of the sign-type exclusions");
  x->add_option("--A", ex.A, "exponent A")->capture_default_str();
  x->add_option("--branch", ex.branch, "A, B or both")->capture_default_str();
  x->add_option("--grid", ex.grid, "points per window")->capture_default_str();
  x->add_option("--out", ex.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? kOk : kInput;
  }

  try {
    if (*s) return cmd_symmetric_scan(scan);
    if (*c) return cmd_certify(cert);
    if (*r) return cmd_region_map(reg);
    if (*t) return cmd_tropical_verify(trop);
    if (*e) return cmd_evaluate(ev);
    if (*b) return cmd_bifurcation(bif);
    if (*x) return cmd_exclude(ex);
  } catch (const eqcc::CollisionError& err) {
    std::cerr << error_json("collision", err.what()).dump() << "\n";
  } catch (const eqcc::NotEquilateral& err) {
    std::cerr << error_json("not-equilateral", err.what()).dump() << "\n";
  } catch (const eqcc::OutOfDomain& err) {
    std::cerr << error_json("out-of-domain", err.what()).dump() << "\n";
  } catch (const std::invalid_argument& err) {
    std::cerr << error_json("invalid-argument", err.what()).dump() << "\n";
  } catch (const std::exception& err) {
    std::cerr << error_json("error", err.what()).dump() << "\n";
  }
  return kInput;
}
