#include "latproj/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <ostream>
#include <sstream>

#include "latproj/catalog.hpp"
#include "latproj/families.hpp"
#include "latproj/gram_io.hpp"
#include "latproj/reduction.hpp"
#include "latproj/strut.hpp"

namespace latproj {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitRefused = 4;

double rat_to_double(const Rat& q) { return Real(q, 64).to_double(); }

GramMatrix load_gram(const std::string& lattice, const std::string& gram_file) {
  if (lattice.empty() == gram_file.empty())
    throw ShapeError("exactly one of --lattice / --gram-file is required");
  if (!lattice.empty()) {
    auto entry = catalog_lookup(lattice);
    if (!entry) throw ShapeError("unknown lattice: '" + lattice + "'");
    return GramMatrix(entry->gram);
  }
  return GramMatrix(gram_from_file(gram_file));
}

Json gram_entries_json(const Mat& m) { return gram_to_json(m)["entries"]; }

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

/// Least-squares slope of log(residual) against log(‖v‖).
std::optional<double> fit_slope(const std::vector<double>& logx, const std::vector<double>& logy) {
  const size_t n = logx.size();
  if (n < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += logx[i];
    sy += logy[i];
    sxx += logx[i] * logx[i];
    sxy += logx[i] * logy[i];
  }
  const double den = n * sxx - sx * sx;
  if (den == 0) return std::nullopt;
  return (n * sxy - sx * sy) / den;
}

double log_norm_v(const AxisVector& v) {
  // ½·log M, overflow-free through MPFR.
  return (Real::log(Real(v.norm_sq(), 128)) * Real(Rat(1, 2), 128)).to_double();
}

struct FamilyRequest {
  std::string name;
  std::string t_str, w_str;
  size_t m = 3;

  Family family() const { return family_from_name(name); }

  FamilyParams params() const {
    const Family f = family();
    const bool takes_t = (f == Family::Dm || f == Family::Fcc);
    if (takes_t) {
      if (t_str.empty()) throw ShapeError("family '" + name + "' takes --t");
      if (!w_str.empty()) throw ShapeError("family '" + name + "' takes --t, not --w");
      return {parse_int(t_str), m};
    }
    if (w_str.empty()) throw ShapeError("family '" + name + "' takes --w");
    if (!t_str.empty()) throw ShapeError("family '" + name + "' takes --w, not --t");
    return {parse_int(w_str), m};
  }

  AxisVector vector() const {
    const FamilyParams p = params();
    switch (family()) {
      case Family::Dm: return family_dm(p.m, p.param);
      case Family::Fcc: return family_fcc(p.param);
      case Family::FccFast: return family_fcc_fast(p.param);
      case Family::E8: return family_e8(p.param);
      case Family::Leech: return family_leech(p.param);
      case Family::F51: return family_51(p.param);
    }
    throw ShapeError("unknown family");
  }
};

Json density_json(const GramMatrix& g, const SvpOptions& opts) {
  const DensityReport r = center_density(g, opts);
  return Json{{"min_norm", to_string(r.min_norm)},
              {"min_norm_value", rat_to_double(r.min_norm)},
              {"det", to_string(r.det)},
              {"center_density", r.center_density},
              {"packing_density", r.packing_density}};
}

void emit_converge(const std::vector<Json>& rows, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    out << "w,norm_v,residual,residual_value,slope\n";
    for (const Json& r : rows) {
      out << r["w"].get<std::string>() << ',' << fmt_double(r["norm_v"].get<double>()) << ','
          << r["residual"].get<std::string>() << ',' << fmt_double(r["residual_value"].get<double>())
          << ',' << (r["slope"].is_null() ? "" : fmt_double(r["slope"].get<double>())) << '\n';
    }
    return;
  }
  out << Json{{"command", "converge"}, {"rows", rows}}.dump(2) << '\n';
}

Json strut_row_json(const StrutReport& r) {
  return Json{{"v", int_vec_to_json(r.v.entries())},
              {"M", to_string(r.m)},
              {"min_norm", to_string(r.min_norm_primal)},
              {"radius", r.radius},
              {"center_density", r.center_density},
              {"volume_proxy", r.volume_proxy}};
}

void emit_strut(const std::vector<StrutReport>& rows, const std::string& format,
                std::ostream& out) {
  if (format == "csv") {
    out << "M,v,min_norm,radius,center_density,volume_proxy\n";
    for (const StrutReport& r : rows) {
      out << to_string(r.m) << ',';
      for (size_t i = 0; i < r.v.n(); ++i) out << (i ? " " : "") << to_string(r.v[i]);
      out << ',' << to_string(r.min_norm_primal) << ',' << fmt_double(r.radius) << ','
          << fmt_double(r.center_density) << ',' << fmt_double(r.volume_proxy) << '\n';
    }
    return;
  }
  Json jrows = Json::array();
  for (const StrutReport& r : rows) jrows.push_back(strut_row_json(r));
  out << Json{{"command", "strut"}, {"rows", std::move(jrows)}}.dump(2) << '\n';
}

struct Cli {
  CLI::App app{"latproj: integer axis vectors whose perpendicular projections of the cubic "
               "lattice approximate a target lattice"};
  std::ostream& out;
  std::ostream& err;

  // lift
  std::string lift_lattice, lift_gram_file, lift_w, lift_mode = "dual";
  unsigned lift_prec = kDefaultPrec;
  // family
  FamilyRequest fam;
  bool fam_gram = false, fam_residual = false;
  // converge
  std::string cv_lattice, cv_gram_file, cv_family, cv_wlist;
  size_t cv_m = 3;
  bool cv_use_reduction = false;
  std::string cv_format = "json";
  unsigned cv_prec = kDefaultPrec;
  // density
  std::string den_v, den_family, den_t, den_w;
  size_t den_m = 3;
  bool den_dual = false;
  size_t den_cap = 12;
  // strut
  size_t st_dim = 3;
  std::string st_mmin = "1", st_mmax;
  size_t st_topk = 10;
  bool st_frontier = false;
  size_t st_cap = 12;
  std::string st_format = "json";
  // prop1
  long p1_bound = 0;
  std::string p1_target = "2Z+Z";
  // catalog
  std::string cat_name;

  Cli(std::ostream& o, std::ostream& e) : out(o), err(e) {
    app.require_subcommand(1);

    auto* lift = app.add_subcommand("lift", "construct v approximating a target lattice");
    lift->add_option("--lattice", lift_lattice, "catalog lattice name");
    lift->add_option("--gram-file", lift_gram_file, "JSON Gram file");
    lift->add_option("--w", lift_w, "lift height (integer >= 1)")->required();
    lift->add_option("--mode", lift_mode, "dual | primal")
        ->check(CLI::IsMember({"dual", "primal"}));
    lift->add_option("--precision", lift_prec, "initial floor precision in bits");
    lift->callback([this] { run_lift(); });

    auto* family = app.add_subcommand("family", "closed-form axis-vector families");
    family->add_option("--name", fam.name, "dm | fcc | fcc-fast | e8 | leech | 5_1")->required();
    family->add_option("--t", fam.t_str, "parameter t (dm, fcc)");
    family->add_option("--w", fam.w_str, "parameter w (fcc-fast, e8, leech, 5_1)");
    family->add_option("--m", fam.m, "dimension for dm");
    family->add_flag("--gram", fam_gram, "include the lifted dual Gram");
    family->add_flag("--residual", fam_residual, "include the scaled residual vs the target");
    family->callback([this] { run_family(); });

    auto* converge = app.add_subcommand("converge", "residuals over a list of heights");
    converge->add_option("--lattice", cv_lattice, "catalog lattice name");
    converge->add_option("--gram-file", cv_gram_file, "JSON Gram file");
    converge->add_option("--family", cv_family, "family name instead of a Gram");
    converge->add_option("--m", cv_m, "dimension for family dm");
    converge->add_option("--w-list", cv_wlist, "comma-separated increasing heights")->required();
    converge->add_flag("--use-reduction", cv_use_reduction, "refine residual via LLL + best scale");
    converge->add_option("--format", cv_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    converge->add_option("--precision", cv_prec, "initial floor precision in bits");
    converge->callback([this] { run_converge(); });

    auto* density = app.add_subcommand("density", "packing density of a projection lattice");
    density->add_option("--v", den_v, "axis vector, comma-separated, first entry 1");
    density->add_option("--family", den_family, "family name");
    density->add_option("--t", den_t, "family parameter t");
    density->add_option("--w", den_w, "family parameter w");
    density->add_option("--m", den_m, "dimension for family dm");
    density->add_flag("--dual", den_dual, "also report the dual projection lattice");
    density->add_option("--enum-cap", den_cap, "max dimension for exact enumeration");
    density->callback([this] { run_density(); });

    auto* strut = app.add_subcommand("strut", "exhaustive fat-strut search");
    strut->add_option("--dim", st_dim, "ambient dimension n (3-5)")->required();
    strut->add_option("--m-min", st_mmin, "minimum squared length M");
    strut->add_option("--m-max", st_mmax, "maximum squared length M")->required();
    strut->add_option("--top-k", st_topk, "number of rows for the ranked table");
    strut->add_flag("--frontier", st_frontier, "emit the best-so-far frontier instead");
    strut->add_option("--enum-cap", st_cap, "max dimension for exact enumeration");
    strut->add_option("--format", st_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    strut->callback([this] { run_strut(); });

    auto* prop1 = app.add_subcommand("prop1", "scan axis vectors for similar projections");
    prop1->add_option("--bound", p1_bound, "scan 0 <= a,b <= bound")->required();
    prop1->add_option("--target", p1_target, "catalog name of the 2-D target");
    prop1->callback([this] { run_prop1(); });

    auto* cat = app.add_subcommand("catalog", "list built-in lattices");
    cat->add_option("--name", cat_name, "show one entry with its Gram");
    cat->callback([this] { run_catalog(); });
  }

  void run_lift() {
    const GramMatrix a = load_gram(lift_lattice, lift_gram_file);
    const BigInt w = parse_int(lift_w);
    const LiftMode mode = lift_mode == "primal" ? LiftMode::Primal : LiftMode::Dual;
    const LiftResult r = construct_v(a, w, mode, lift_prec);
    Json j{{"command", "lift"},
           {"input", lift_lattice.empty() ? lift_gram_file : lift_lattice},
           {"w", to_string(w)},
           {"mode", lift_mode},
           {"v", int_vec_to_json(r.v.entries())},
           {"M", to_string(r.v.norm_sq())},
           {"dual_gram", gram_entries_json(r.lifted_gram)}};
    if (mode == LiftMode::Dual) {
      const Rat c = Rat(1) / Rat(w * w);
      const Rat res = r.scaled_residual_norm();
      j["c"] = to_string(c);
      j["c_value"] = rat_to_double(c);
      j["residual"] = Json{{"exact", to_string(res)}, {"value", rat_to_double(res)}};
    } else {
      j["c"] = to_string(*r.primal_scale);
      j["c_value"] = rat_to_double(*r.primal_scale);
      j["residual"] =
          Json{{"exact", to_string(*r.primal_residual)}, {"value", rat_to_double(*r.primal_residual)}};
      j["primal_gram_dual_basis"] = gram_entries_json(*r.primal_basis_gram);
      const Rat lift_res = r.scaled_residual_norm();
      j["lift_residual"] = Json{{"exact", to_string(lift_res)}, {"value", rat_to_double(lift_res)}};
    }
    out << j.dump(2) << '\n';
  }

  void run_family() {
    const AxisVector v = fam.vector();
    const FamilyParams p = fam.params();
    Json j{{"command", "family"}, {"name", fam.name}};
    if (!fam.t_str.empty()) j["t"] = fam.t_str;
    if (!fam.w_str.empty()) j["w"] = fam.w_str;
    if (fam.family() == Family::Dm) j["m"] = fam.m;
    j["v"] = int_vec_to_json(v.entries());
    j["M"] = to_string(v.norm_sq());
    if (fam_gram || fam_residual) {
      const LiftResult lift = family_lift(fam.family(), p);
      if (lift.v.entries() != v.entries())
        throw Error("family/lift mismatch");  // internal consistency guard
      if (fam_gram) j["dual_gram"] = gram_entries_json(lift.lifted_gram);
      if (fam_residual) {
        const Rat res = lift.scaled_residual_norm();
        j["residual"] = Json{{"exact", to_string(res)}, {"value", rat_to_double(res)}};
        j["target"] = gram_entries_json(lift.target.mat());
      }
    }
    out << j.dump(2) << '\n';
  }

  void run_converge() {
    std::vector<BigInt> ws;
    std::stringstream ss(cv_wlist);
    std::string tok;
    while (std::getline(ss, tok, ',')) ws.push_back(parse_int(tok));
    if (ws.empty()) throw ShapeError("--w-list must be nonempty");
    for (size_t i = 0; i + 1 < ws.size(); ++i)
      if (ws[i] >= ws[i + 1]) throw ShapeError("--w-list must be strictly increasing");

    const bool by_family = !cv_family.empty();
    if (by_family && (!cv_lattice.empty() || !cv_gram_file.empty()))
      throw ShapeError("--family excludes --lattice/--gram-file");

    std::vector<Json> rows;
    std::vector<double> lx, ly;
    for (const BigInt& w : ws) {
      LiftResult lift = by_family
                            ? family_lift(family_from_name(cv_family), FamilyParams{w, cv_m})
                            : construct_v(load_gram(cv_lattice, cv_gram_file), w, LiftMode::Dual,
                                          cv_prec);
      const Rat res = convergence_residual(lift.target, lift, cv_use_reduction);
      const double lnv = log_norm_v(lift.v);
      Json row{{"w", to_string(w)},
               {"norm_v", std::exp(lnv)},
               {"residual", to_string(res)},
               {"residual_value", rat_to_double(res)}};
      if (res > 0) {
        lx.push_back(lnv);
        ly.push_back((Real::log(Real(res, 128))).to_double());
      }
      if (auto s = fit_slope(lx, ly))
        row["slope"] = *s;
      else
        row["slope"] = nullptr;
      rows.push_back(std::move(row));
    }
    emit_converge(rows, cv_format, out);
  }

  void run_density() {
    AxisVector v = [&] {
      if (!den_v.empty()) {
        if (!den_family.empty()) throw ShapeError("--v excludes --family");
        ZVec entries;
        std::stringstream ss(den_v);
        std::string tok;
        while (std::getline(ss, tok, ',')) entries.push_back(parse_int(tok));
        return AxisVector(std::move(entries));
      }
      if (den_family.empty()) throw ShapeError("one of --v / --family is required");
      FamilyRequest r{den_family, den_t, den_w, den_m};
      return r.vector();
    }();
    const SvpOptions opts{den_cap};
    Json j{{"command", "density"},
           {"v", int_vec_to_json(v.entries())},
           {"M", to_string(v.norm_sq())},
           {"primal", density_json(primal_gram(v), opts)}};
    if (den_dual) j["dual"] = density_json(dual_gram(v), opts);
    out << j.dump(2) << '\n';
  }

  void run_strut() {
    if (st_dim < 3 || st_dim > 5) throw ShapeError("--dim must be 3, 4, or 5");
    const BigInt mmin = parse_int(st_mmin);
    const BigInt mmax = parse_int(st_mmax);
    const SvpOptions opts{st_cap};
    const std::vector<StrutReport> rows = st_frontier
                                              ? strut_frontier(st_dim, mmax, opts)
                                              : strut_search(st_dim, mmin, mmax, st_topk, opts);
    emit_strut(rows, st_format, out);
  }

  void run_prop1() {
    if (p1_bound < 1) throw ShapeError("--bound must be at least 1");
    auto entry = catalog_lookup(p1_target);
    if (!entry) throw ShapeError("unknown lattice: '" + p1_target + "'");
    const GramMatrix target(entry->gram);
    const Prop1Report report = prop1_search(p1_bound, target);
    Json cex = Json::array();
    for (const auto& c : report.counterexamples)
      cex.push_back(Json{{"a", c.a},
                         {"b", c.b},
                         {"lambda", to_string(c.witness.lambda)},
                         {"transform", gram_entries_json(c.witness.transform)}});
    out << Json{{"command", "prop1"},
                {"target", entry->name},
                {"bound", p1_bound},
                {"checked", report.checked},
                {"counterexamples", std::move(cex)}}
               .dump(2)
        << '\n';
  }

  void run_catalog() {
    if (!cat_name.empty()) {
      auto entry = catalog_lookup(cat_name);
      if (!entry) throw ShapeError("unknown lattice: '" + cat_name + "'");
      out << Json{{"command", "catalog"},
                  {"name", entry->name},
                  {"dim", entry->gram.rows()},
                  {"det", to_string(entry->gram.det())},
                  {"notes", entry->notes},
                  {"gram", gram_entries_json(entry->gram)}}
                 .dump(2)
          << '\n';
      return;
    }
    Json entries = Json::array();
    for (const CatalogEntry& e : catalog_entries())
      entries.push_back(Json{{"name", e.name},
                             {"dim", e.gram.rows()},
                             {"det", to_string(e.gram.det())},
                             {"notes", e.notes}});
    entries.push_back(Json{{"name", "Z<d>"},
                           {"dim", "any"},
                           {"det", "1"},
                           {"notes", "cubic lattice of any dimension, e.g. Z4"}});
    out << Json{{"command", "catalog"}, {"entries", std::move(entries)}}.dump(2) << '\n';
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Cli cli(out, err);
  std::vector<const char*> argv;
  argv.push_back("latproj");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    cli.app.parse(static_cast<int>(argv.size()), argv.data());
    return kExitOk;
  } catch (const CLI::CallForHelp& e) {
    out << cli.app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const AmbiguousFloorError& e) {
    err << "precision error: " << e.what() << '\n';
    return kExitPrecision;
  } catch (const EnumerationRefusedError& e) {
    err << "refused: " << e.what() << '\n';
    return kExitRefused;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace latproj
