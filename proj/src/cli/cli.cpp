#include "pairloc/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pairloc/cfcobordism.hpp"
#include "pairloc/descent.hpp"
#include "pairloc/error.hpp"
#include "pairloc/qseries.hpp"
#include "pairloc/run_cache.hpp"

namespace pairloc::cli {

using nlohmann::json;

namespace {

struct Common {
  std::uint64_t seed = EngineOptions{}.seed;
  int specializations = 2;
  std::string format = "json";
  std::string cache_dir;
  bool enable_ptvertex = false;
  unsigned threads = 0;

  EngineOptions engine() const {
    EngineOptions o;
    o.seed = seed;
    o.specializations = specializations;
    o.enable_ptvertex = enable_ptvertex;
    o.threads = threads;
    return o;
  }
};

struct Args {
  std::string geometry;
  std::string beta;
  std::int64_t n = 0;
  std::int64_t nmax = 0;
  std::string index;
  bool fit = false;
  bool check_symmetry = false;
  bool check_poles = false;
  std::string fit_mode = "pade";
  int holdout = 2;
  int chk = 1;
  bool reduce = false;
};

std::string engine_name(EngineKind k) { return k == EngineKind::Degree1 ? "deg1" : "ptvertex"; }

json weight_json(const Weight& w) { return json::array({w[0], w[1], w[2]}); }

json character_json(const LaurentPoly& ch) {
  json arr = json::array();
  for (const auto& [w, c] : ch.terms()) arr.push_back({{"weight", weight_json(w)}, {"coeff", to_string(c)}});
  return arr;
}

json specializations_json(const std::vector<Specialization>& sps) {
  json arr = json::array();
  for (const auto& sp : sps) arr.push_back(json::array({to_string(sp.s[0]), to_string(sp.s[1]), to_string(sp.s[2])}));
  return arr;
}

json header(const std::string& command, const ToricThreefold& X) {
  return {{"schema", "pairloc." + command + "/1"},
          {"engine_version", kEngineVersion},
          {"geometry", X.source},
          {"geometry_sha256", sha256_hex(X.to_json().dump())}};
}

std::vector<ChernIndex> requested_indices(const std::string& text, std::int64_t d) {
  if (text.empty() || text == "all") return chern_indices(d);
  return {parse_chern_index(text, d)};
}

json tpoly_json(const TPolynomial& p) {
  json obj = json::object();
  for (const auto& [k, c] : p.terms) {
    std::string mono;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (k[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(i + 1);
      if (k[i] != 1) mono += "^" + std::to_string(k[i]);
    }
    obj[mono.empty() ? "1" : mono] = to_string(c);
  }
  return obj;
}

json chern_vector_json(const ChernVector& v) {
  json obj = json::object();
  for (const auto& [I, val] : v.values) obj[to_string(I)] = to_string(val);
  return obj;
}

// --- commands --------------------------------------------------------------

json cmd_validate(const Args& a) {
  const ToricThreefold X = load_and_validate(a.geometry);
  json out = header("geometry-validate", X);
  out["valid"] = true;
  out["fixed_points"] = X.fixed_points.size();
  out["edges"] = X.edges.size();
  out["h2_rank"] = X.h2_rank;
  out["c1_degrees"] = X.c1_degrees;
  json degrees = json::array();
  for (const auto& e : X.edges) degrees.push_back(json::array({e.m[0], e.m[1]}));
  out["edge_normal_degrees"] = degrees;
  return out;
}

json cmd_show(const Args& a) {
  const ToricThreefold X = load_and_validate(a.geometry);
  json out = header("geometry-show", X);
  out["document"] = X.to_json();
  return out;
}

json cmd_fixed_points(const Args& a, const Common& c) {
  const ToricThreefold X = load_and_validate(a.geometry);
  Localizer loc(X, parse_curve_class(X, a.beta), c.engine());
  json out = header("fixed-points", X);
  out["beta"] = to_string(loc.beta());
  out["n"] = a.n;
  out["d"] = loc.dimension();
  out["engine"] = engine_name(loc.engine());
  json pairs = json::array();
  for (const auto& p : *loc.fixed_pairs(a.n)) {
    pairs.push_back({{"label", p.label}, {"rank", to_string(p.character.rank())}, {"character", character_json(p.character)}});
  }
  out["pairs"] = pairs;
  return out;
}

json cmd_chern_number(const Args& a, const Common& c) {
  const ToricThreefold X = load_and_validate(a.geometry);
  Localizer loc(X, parse_curve_class(X, a.beta), c.engine());
  const auto indices = requested_indices(a.index, loc.dimension());
  const auto res = loc.chern_numbers(a.n, indices);
  json out = header("chern-number", X);
  out["beta"] = to_string(loc.beta());
  out["n"] = a.n;
  out["d"] = loc.dimension();
  out["engine"] = engine_name(loc.engine());
  out["seed"] = c.seed;
  out["specializations"] = specializations_json(res.specializations);
  json values = json::array();
  for (std::size_t i = 0; i < indices.size(); ++i) values.push_back({{"I", to_string(indices[i])}, {"value", to_string(res.values[i])}});
  out["values"] = values;
  return out;
}

json cmd_partition_function(const Args& a, const Common& c, bool& check_failed) {
  const ToricThreefold X = load_and_validate(a.geometry);
  Localizer loc(X, parse_curve_class(X, a.beta), c.engine());
  const auto indices = requested_indices(a.index, loc.dimension());
  const auto series = assemble(loc, indices, a.nmax);
  const bool want_fit = a.fit || a.check_symmetry || a.check_poles;
  FitOptions fo;
  fo.holdout = a.holdout;
  fo.mode = a.fit_mode == "ansatz" ? FitMode::Ansatz : FitMode::Pade;

  json out = header("partition-function", X);
  out["beta"] = to_string(loc.beta());
  out["d"] = loc.dimension();
  out["n_max"] = a.nmax;
  out["engine"] = engine_name(loc.engine());
  out["seed"] = c.seed;
  out["basis"] = "monomial-chern-dual";
  if (want_fit) out["fit_mode"] = a.fit_mode;
  json records = json::array();
  std::vector<RationalFn> fits;
  for (const auto& s : series) {
    std::optional<FitResult> fit;
    std::optional<FunctionalEquationCheck> fe;
    if (want_fit) {
      fit = fit_rational(s, fo);
      fits.push_back(fit->fn);
      if (a.check_symmetry) {
        fe = check_functional_equation(fit->fn, s.d);
        if (!fe->holds) check_failed = true;
      }
    }
    records.push_back(fit_record(s, fit, fe));
  }
  out["records"] = records;
  if (a.check_poles) {
    const auto report = check_common_poles(fits);
    if (!report.same_support) check_failed = true;
    out["poles"] = to_json(report);
  }
  return out;
}

json cmd_cobordism_class(const Args& a, const Common& c) {
  const ToricThreefold X = load_and_validate(a.geometry);
  Localizer loc(X, parse_curve_class(X, a.beta), c.engine());
  const auto indices = chern_indices(loc.dimension());
  const auto res = loc.chern_numbers(a.n, indices);
  ChernVector v;
  v.d = loc.dimension();
  for (std::size_t i = 0; i < indices.size(); ++i) v.values.emplace(indices[i], res.values[i]);
  json out = header("cobordism-class", X);
  out["beta"] = to_string(loc.beta());
  out["n"] = a.n;
  out["d"] = v.d;
  out["basis"] = "monomial-chern-dual";
  out["chern_numbers"] = chern_vector_json(v);
  out["class"] = tpoly_json(cobordism_class_point(v));
  out["specializations"] = specializations_json(res.specializations);
  return out;
}

json cmd_smooth_class(const Args& a, const Common& c) {
  const ToricThreefold X = load_and_validate(a.geometry);
  const auto sc = smooth_variety_class(X, c.engine());
  json out = header("smooth-class", X);
  out["chern_numbers"] = chern_vector_json(sc.numbers);
  out["class"] = tpoly_json(sc.cls);
  out["specializations"] = specializations_json(sc.specializations);
  return out;
}

json lines_json(const std::string& text) {
  json arr = json::array();
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) arr.push_back(line);
  return arr;
}

json cmd_descendents(const Args& a) {
  const ToricThreefold X = load_and_validate(a.geometry);
  const auto space = projective_product_of(X);
  const auto expr = grr_expansion(space, a.chk);
  json out = header("descendents", X);
  out["k"] = a.chk;
  out["expression"] = lines_json(to_text(expr));
  if (a.reduce) out["reduced"] = lines_json(to_text(reduce_generalized(expr)));
  return out;
}

// --- CSV projection ----------------------------------------------------------

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string to_csv(const std::string& command, const json& doc) {
  std::ostringstream out;
  if (command == "chern-number") {
    out << "I,value\n";
    for (const auto& v : doc.at("values")) out << csv_quote(v.at("I").get<std::string>()) << "," << v.at("value").get<std::string>() << "\n";
  } else if (command == "partition-function") {
    out << "I,n,value\n";
    for (const auto& r : doc.at("records")) {
      const auto n0 = r.at("n_min").get<std::int64_t>();
      std::int64_t n = n0;
      for (const auto& c : r.at("coefficients")) out << csv_quote(r.at("I").get<std::string>()) << "," << n++ << "," << c.get<std::string>() << "\n";
    }
  } else if (command == "fixed-points") {
    out << "label,character\n";
    for (const auto& p : doc.at("pairs")) {
      std::string ch;
      for (const auto& t : p.at("character")) {
        const auto& w = t.at("weight");
        ch += (ch.empty() ? "" : " ") + t.at("coeff").get<std::string>() + "*t^(" + std::to_string(w[0].get<std::int64_t>()) + "," +
              std::to_string(w[1].get<std::int64_t>()) + "," + std::to_string(w[2].get<std::int64_t>()) + ")";
      }
      out << csv_quote(p.at("label").get<std::string>()) << "," << csv_quote(ch) << "\n";
    }
  } else if (command == "cobordism-class" || command == "smooth-class") {
    out << "kind,key,value\n";
    for (const auto& [k, v] : doc.at("chern_numbers").items()) out << "chern_number," << csv_quote(k) << "," << v.get<std::string>() << "\n";
    for (const auto& [k, v] : doc.at("class").items()) out << "class," << csv_quote(k) << "," << v.get<std::string>() << "\n";
  } else if (command == "descendents") {
    out << "part,term\n";
    for (const auto& l : doc.at("expression")) out << "expression," << csv_quote(l.get<std::string>()) << "\n";
    if (doc.contains("reduced")) {
      for (const auto& l : doc.at("reduced")) out << "reduced," << csv_quote(l.get<std::string>()) << "\n";
    }
  } else {
    out << "key,value\n";
    for (const auto& [k, v] : doc.items()) {
      if (v.is_primitive()) out << csv_quote(k) << "," << csv_quote(scalar_text(v)) << "\n";
    }
  }
  return out.str();
}

int exit_code(ErrorKind kind) { return kind == ErrorKind::NonIsolatedFixedLocus ? kNonIsolated : kModuleError; }

}  // namespace

int run(const std::vector<std::string>& argv_in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chern numbers of stable-pair moduli spaces on toric 3-folds by torus localization", "pairloc"};
  app.require_subcommand(1);
  Common common;
  Args a;
  app.add_option("--seed", common.seed, "seed for the specialization generator");
  app.add_option("--specializations", common.specializations, "number of independent specializations (>= 2)")
      ->check(CLI::Range(2, 64));
  app.add_option("--format", common.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--cache", common.cache_dir, "result cache directory")->envname("PAIRLOC_CACHE");
  app.add_flag("--enable-ptvertex", common.enable_ptvertex, "enable the vertex engine for classes beyond degree one");
  app.add_option("--threads", common.threads, "worker threads (0: hardware concurrency)");

  auto* geometry = app.add_subcommand("geometry", "inspect a geometry")->fallthrough();
  geometry->require_subcommand(1);
  auto* validate_cmd = geometry->add_subcommand("validate", "validate a catalog id or JSON file")->fallthrough();
  validate_cmd->add_option("source", a.geometry)->required();
  auto* show_cmd = geometry->add_subcommand("show", "print the canonical geometry document")->fallthrough();
  show_cmd->add_option("source", a.geometry)->required();

  auto with_beta = [&](CLI::App* sub) {
    sub->add_option("geometry", a.geometry)->required();
    sub->add_option("--beta", a.beta, "curve class: name, k*name, sum of names, or integer vector")->required();
    sub->fallthrough();
  };
  auto* fixed = app.add_subcommand("fixed-points", "list torus-fixed pairs and their T^vir characters");
  with_beta(fixed);
  fixed->add_option("--n", a.n)->required();

  auto* cn = app.add_subcommand("chern-number", "c_n^I by localization");
  with_beta(cn);
  cn->add_option("--n", a.n)->required();
  cn->add_option("--index", a.index, "Chern index such as 2 or 0,1 (default: all)");

  auto* pf = app.add_subcommand("partition-function", "series c_n^I for 1 <= n <= nmax, with optional fits and checks");
  with_beta(pf);
  pf->add_option("--index", a.index, "Chern index (default: all)");
  pf->add_option("--nmax", a.nmax)->required()->check(CLI::NonNegativeNumber);
  pf->add_flag("--fit", a.fit, "fit rational functions");
  pf->add_option("--fit-mode", a.fit_mode)->check(CLI::IsMember({"pade", "ansatz"}));
  pf->add_option("--holdout", a.holdout)->check(CLI::Range(2, 1000));
  pf->add_flag("--check-symmetry", a.check_symmetry, "check f(1/q) = q^-d f(q)");
  pf->add_flag("--check-poles", a.check_poles, "compare the pole sets of all fitted functions");

  auto* cc = app.add_subcommand("cobordism-class", "class of P_n(X, beta) in the t-basis");
  with_beta(cc);
  cc->add_option("--n", a.n)->required();

  auto* sc = app.add_subcommand("smooth-class", "class of X itself by Bott localization")->fallthrough();
  sc->add_option("geometry", a.geometry)->required();

  auto* desc = app.add_subcommand("descendents", "ch_k(-T^vir) in descendents")->fallthrough();
  desc->add_option("geometry", a.geometry)->required();
  desc->add_option("--chk", a.chk)->required()->check(CLI::PositiveNumber);
  desc->add_flag("--reduce", a.reduce, "also reduce generalized descendents");

  std::vector<std::string> reversed(argv_in.rbegin(), argv_in.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::string command;
  if (validate_cmd->parsed()) command = "geometry-validate";
  else if (show_cmd->parsed()) command = "geometry-show";
  else if (fixed->parsed()) command = "fixed-points";
  else if (cn->parsed()) command = "chern-number";
  else if (pf->parsed()) command = "partition-function";
  else if (cc->parsed()) command = "cobordism-class";
  else if (sc->parsed()) command = "smooth-class";
  else command = "descendents";

  bool check_failed = false;
  try {
    auto compute = [&]() -> std::string {
      json doc;
      if (command == "geometry-validate") doc = cmd_validate(a);
      else if (command == "geometry-show") doc = cmd_show(a);
      else if (command == "fixed-points") doc = cmd_fixed_points(a, common);
      else if (command == "chern-number") doc = cmd_chern_number(a, common);
      else if (command == "partition-function") doc = cmd_partition_function(a, common, check_failed);
      else if (command == "cobordism-class") doc = cmd_cobordism_class(a, common);
      else if (command == "smooth-class") doc = cmd_smooth_class(a, common);
      else doc = cmd_descendents(a);
      return doc.dump(2) + "\n";
    };

    std::string payload;
    const bool cacheable = !common.cache_dir.empty() && command != "geometry-validate" && command != "geometry-show";
    if (cacheable) {
      const ToricThreefold X = load_and_validate(a.geometry);
      const json key = {{"version", kEngineVersion},
                        {"command", command},
                        {"geometry_sha256", sha256_hex(X.to_json().dump())},
                        {"geometry", X.source},
                        {"beta", a.beta},
                        {"n", a.n},
                        {"nmax", a.nmax},
                        {"index", a.index},
                        {"seed", common.seed},
                        {"specializations", common.specializations},
                        {"ptvertex", common.enable_ptvertex},
                        {"fit", {a.fit, a.fit_mode, a.holdout, a.check_symmetry, a.check_poles}},
                        {"chk", {a.chk, a.reduce}}};
      RunCache cache(common.cache_dir);
      bool hit = false;
      bool corrupt = false;
      payload = cache.get_or_compute(key.dump(), compute, &hit, &corrupt);
      if (corrupt) err << "pairloc: cache entry failed verification; recomputed\n";
      if (hit) {
        // Check outcomes are part of the payload; re-derive the exit status.
        const auto doc = json::parse(payload);
        if (doc.contains("records")) {
          for (const auto& r : doc["records"]) {
            if (r.value("functional_equation", json(nullptr)) == json(false)) check_failed = true;
          }
        }
        if (doc.contains("poles") && !doc["poles"].at("same_support").get<bool>()) check_failed = true;
      }
    } else {
      payload = compute();
    }

    if (common.format == "csv") {
      out << to_csv(command, json::parse(payload));
    } else {
      out << payload;
    }
    return check_failed ? kCheckFailed : kOk;
  } catch (const Error& e) {
    json doc = {{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.detail()}, {"command", command}}}};
    out << doc.dump(2) << "\n";
    err << "pairloc: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    json doc = {{"error", {{"kind", "InternalError"}, {"message", e.what()}, {"command", command}}}};
    out << doc.dump(2) << "\n";
    err << "pairloc: " << e.what() << "\n";
    return kModuleError;
  }
}

}  // namespace pairloc::cli
