// Command line front end.  Reads .ideal / .points files and prints invariants,
// delta/footprint/hyp/vasconcelos tables, code parameters, and property checks.
//
// Exit codes: 0 success, 1 bad input or unsupported request, 2 a proven
// theorem failed on verified hypotheses (check, ci-probe, code --crosscheck).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "gmd/invariants.hpp"
#include "gmd/parse.hpp"
#include "gmd/points.hpp"
#include "gmd/properties.hpp"
#include "gmd/report.hpp"

namespace {

using gmd::json;

struct CommonOpts {
  std::string input;
  std::string order = "grevlex";
  long long budget = 10'000'000;
  int threads = 0;
  bool as_json = false;
};

gmd::OrderKind parse_order(const std::string& s) {
  if (s == "lex") return gmd::OrderKind::Lex;
  if (s == "grlex") return gmd::OrderKind::GrLex;
  if (s == "grevlex") return gmd::OrderKind::GrevLex;
  throw std::runtime_error("unknown order '" + s + "' (expected lex, grlex, or grevlex)");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

using ContextVariant =
    std::variant<gmd::IdealContext<gmd::PrimeField>, gmd::IdealContext<gmd::RationalField>>;

int ctx_reg(const ContextVariant& v) {
  return std::visit([](const auto& ctx) { return ctx.hilbert.reg_index; }, v);
}

ContextVariant load_input(const CommonOpts& c) {
  const std::string text = slurp(c.input);
  if (ends_with(c.input, ".points")) {
    gmd::PointsFileData pf = gmd::parse_points_file(text);
    std::vector<std::string> names;
    names.reserve(pf.dim);
    for (int i = 1; i <= pf.dim; ++i) names.push_back("t" + std::to_string(i));
    auto ring = gmd::make_ring(gmd::PrimeField(pf.p), names, parse_order(c.order));
    auto X = gmd::make_point_set(pf.p, pf.dim - 1, pf.points);
    return gmd::build_points_context(ring, X);
  }
  if (!ends_with(c.input, ".ideal"))
    throw std::runtime_error("unrecognized input " + c.input + " (expected .ideal or .points)");
  gmd::IdealFileVariant parsed = gmd::parse_ideal_file(text);
  return std::visit(
      [](auto& d) -> ContextVariant { return gmd::build_context(d.ring, d.gens, d.primes); },
      parsed);
}

template <class F>
std::string ring_str(const gmd::RingPtr<F>& ring) {
  std::string s = ring->field.name() + "[";
  for (size_t i = 0; i < ring->vars.size(); ++i) {
    if (i) s += ",";
    s += ring->vars[i];
  }
  return s + "] order=" + gmd::order_kind_name(ring->order.kind);
}

template <class F>
void print_header(const gmd::IdealContext<F>& ctx, const CommonOpts& c) {
  std::cout << "input: " << c.input << "\n";
  std::cout << "ring: " << ring_str(ctx.ring) << "\n";
}

gmd::GmdOptions make_opts(const CommonOpts& c) {
  gmd::GmdOptions o;
  o.budget = c.budget;
  o.threads = c.threads;
  return o;
}

template <class F>
int run_invariants(const gmd::IdealContext<F>& ctx, const CommonOpts& c, bool with_reg_delta) {
  gmd::VNumberReport vn = gmd::v_number(ctx);
  gmd::SocleReport soc = gmd::socle_degree(ctx);
  std::optional<int> rd;
  if (with_reg_delta) rd = gmd::reg_delta(ctx, make_opts(c));

  if (c.as_json) {
    json j;
    j["input"] = c.input;
    j["context"] = gmd::context_json(ctx);
    j["v_number"] = gmd::vnumber_json(vn);
    j["socle"] = gmd::socle_json(soc);
    if (with_reg_delta) j["reg_delta"] = rd ? json(*rd) : json(nullptr);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  const gmd::HilbertData& hd = ctx.hilbert;
  print_header(ctx, c);
  std::cout << "minimal generators (" << ctx.min_gens.size() << "):\n";
  for (const auto& g : ctx.min_gens) std::cout << "  " << g.str() << "\n";
  if (ctx.points) std::cout << "points: " << ctx.points->size() << "\n";
  std::cout << "dim: " << hd.dim << "\n";
  std::cout << "degree: " << hd.degree << "\n";
  std::cout << "regularity index: " << hd.reg_index << "\n";
  std::cout << "a-invariant: " << hd.a_invariant << "\n";
  std::cout << "h-vector:";
  for (long long h : hd.h) std::cout << " " << h;
  std::cout << "\n";
  if (hd.cm_regularity)
    std::cout << "cm regularity: " << *hd.cm_regularity << " (" << hd.cm_route << ")\n";
  else
    std::cout << "cm regularity: unknown\n";
  std::cout << "unmixed: " << gmd::tri_name(ctx.flags.unmixed)
            << "  radical: " << gmd::tri_name(ctx.flags.radical)
            << "  cohen-macaulay: " << gmd::tri_name(ctx.flags.cohen_macaulay)
            << "  complete intersection: " << gmd::tri_name(ctx.flags.complete_intersection)
            << "  linear primes: " << gmd::tri_name(ctx.flags.linear_primes) << "\n";
  if (vn.v) {
    std::cout << "v-number: " << *vn.v << "\n";
    for (size_t i = 0; i < vn.local.size(); ++i)
      std::cout << "  v at " << vn.prime_names[i] << ": " << vn.local[i] << "\n";
  } else {
    std::cout << "v-number: unknown (" << vn.note << ")\n";
  }
  if (soc.s)
    std::cout << "socle degree: " << *soc.s << " (" << soc.route << ")\n";
  else
    std::cout << "socle degree: unknown (" << soc.route << ")\n";
  if (with_reg_delta) {
    if (rd)
      std::cout << "reg(delta): " << *rd << "\n";
    else
      std::cout << "reg(delta): not reached (raise --budget or the ideal is not covered)\n";
  }
  return 0;
}

template <class F>
int run_matrix(const gmd::IdealContext<F>& ctx, const CommonOpts& c, const std::string& func,
               int dmax, int rmax, bool witness, bool force_generic, bool as_csv) {
  gmd::GmdOptions opts = make_opts(c);
  opts.force_generic = force_generic;
  opts.want_witness = witness;
  if (dmax <= 0) dmax = std::max(1, ctx.hilbert.reg_index);
  if (rmax <= 0) rmax = 1;
  gmd::MatrixResult mr = gmd::cell_matrix(ctx, func, dmax, rmax, opts);

  if (c.as_json) {
    json j;
    j["input"] = c.input;
    j["context"] = gmd::context_json(ctx);
    j["matrix"] = gmd::matrix_json(mr);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (as_csv) {
    std::cout << gmd::matrix_csv(mr);
    return 0;
  }
  print_header(ctx, c);
  std::cout << "degree: " << ctx.hilbert.degree << "\n\n" << gmd::matrix_text(mr);
  if (witness) {
    for (int d = 1; d <= dmax; ++d)
      for (int r = 1; r <= rmax; ++r) {
        const gmd::Cell& cell = mr.cells[d - 1][r - 1];
        if (cell.witness.empty()) continue;
        std::cout << "witness " << func << "(" << d << "," << r << "):";
        for (const auto& w : cell.witness) std::cout << " " << w;
        std::cout << "\n";
      }
  }
  return 0;
}

int run_code(const gmd::IdealContext<gmd::PrimeField>& ctx, const CommonOpts& c, int dmax,
             bool crosscheck) {
  const gmd::ProjectivePointSet& X = *ctx.points;
  if (dmax <= 0) dmax = std::max(1, ctx.hilbert.reg_index);
  gmd::GmdOptions opts = make_opts(c);
  bool violation = false;
  json codes = json::array();
  std::ostringstream text;
  text << "points: " << X.size() << " in P^" << (X.ncoords() - 1) << " over GF(" << X.p << ")\n";

  for (int d = 1; d <= dmax; ++d) {
    gmd::EvaluationCode C = gmd::evaluation_code(X, ctx.ring, d);
    auto hier = gmd::weight_hierarchy(C, c.budget, c.threads);
    json jc;
    jc["d"] = d;
    jc["n"] = C.n();
    jc["k"] = C.k();
    json jh = json::array();
    text << "d=" << d << ": [n=" << C.n() << ", k=" << C.k() << "]  hierarchy:";
    for (const auto& w : hier) {
      if (w) {
        text << " " << *w;
        jh.push_back(*w);
      } else {
        text << " skip";
        jh.push_back(nullptr);
      }
    }
    text << "\n";
    jc["hierarchy"] = jh;

    if (crosscheck) {
      json deltas = json::array();
      bool match = true;
      for (int r = 1; r <= C.k(); ++r) {
        gmd::Cell dl = gmd::delta_hyp_cell(ctx, d, r, opts).delta;
        const auto& w = hier[r - 1];
        if (dl.status == gmd::CellStatus::Value) deltas.push_back(dl.value);
        else deltas.push_back(nullptr);
        if (!w || dl.status != gmd::CellStatus::Value) continue;
        if (*w != dl.value) {
          match = false;
          violation = true;
          text << "  MISMATCH at r=" << r << ": ghw=" << *w << " delta=" << dl.value << "\n";
        }
      }
      jc["delta"] = deltas;
      jc["ghw_matches_delta"] = match;
      if (match) text << "  ghw == delta for r=1.." << C.k() << "\n";

      gmd::Cell hy = gmd::delta_hyp_cell(ctx, d, 1, opts).hyp;
      try {
        long long oracle = gmd::allforms_hyp_oracle(X, ctx.ring, d, c.budget);
        jc["hyp_allforms"] = oracle;
        if (hy.status == gmd::CellStatus::Value) {
          jc["hyp"] = hy.value;
          if (oracle != hy.value) {
            violation = true;
            text << "  MISMATCH: all-forms hyp=" << oracle << " hyp(d,1)=" << hy.value << "\n";
          } else {
            text << "  all-forms oracle agrees with hyp(d,1) = " << hy.value << "\n";
          }
        }
      } catch (const std::out_of_range&) {
        jc["hyp_allforms"] = nullptr;
        text << "  all-forms oracle skipped (budget)\n";
      }
    }
    codes.push_back(jc);
  }

  if (c.as_json) {
    json j;
    j["input"] = c.input;
    j["n"] = X.size();
    j["p"] = X.p;
    j["codes"] = codes;
    if (crosscheck) j["violation"] = violation;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "input: " << c.input << "\n" << text.str();
    if (crosscheck)
      std::cout << (violation ? "crosscheck FAILED\n" : "crosscheck passed\n");
  }
  return violation ? 2 : 0;
}

int run_vanishing(const gmd::IdealContext<gmd::PrimeField>& ctx, const CommonOpts& c,
                  bool groebner) {
  std::vector<gmd::Polynomial<gmd::PrimeField>> polys =
      groebner ? gmd::reduced_groebner(ctx.ring, ctx.I.gens()) : ctx.min_gens;
  if (c.as_json) {
    json j;
    j["input"] = c.input;
    j["field"] = ctx.ring->field.name();
    j["vars"] = ctx.ring->vars;
    j["order"] = gmd::order_kind_name(ctx.ring->order.kind);
    json gens = json::array();
    for (const auto& g : polys) gens.push_back(g.str());
    j[groebner ? "groebner_basis" : "minimal_generators"] = gens;
    json primes = json::array();
    for (const auto& P : ctx.assoc_primes) {
      json block = json::array();
      for (const auto& g : P.gens()) block.push_back(g.str());
      primes.push_back(block);
    }
    j["primes"] = primes;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "-- " << (groebner ? "reduced groebner basis" : "vanishing ideal") << " of "
            << c.input << "\n";
  std::cout << "ring " << ring_str(ctx.ring) << "\n";
  std::cout << "ideal:\n";
  for (size_t i = 0; i < polys.size(); ++i)
    std::cout << "  " << polys[i].str() << (i + 1 < polys.size() ? "," : "") << "\n";
  if (!ctx.assoc_primes.empty()) {
    std::cout << "primes:\n";
    for (const auto& P : ctx.assoc_primes) {
      std::cout << "  (";
      const auto& gens = P.gens();
      for (size_t i = 0; i < gens.size(); ++i)
        std::cout << (i ? ", " : "") << gens[i].str();
      std::cout << ")\n";
    }
  }
  return 0;
}

int render_checks(const std::vector<gmd::PropertyCheck>& checks, const CommonOpts& c) {
  bool proven_violation = gmd::any_proven_violation(checks);
  if (c.as_json) {
    json arr = json::array();
    for (const auto& ch : checks)
      arr.push_back({{"name", ch.name},
                     {"proven", ch.proven},
                     {"holds", ch.holds},
                     {"detail", ch.detail}});
    json j;
    j["input"] = c.input;
    j["checks"] = arr;
    j["proven_violation"] = proven_violation;
    std::cout << j.dump(2) << "\n";
    return proven_violation ? 2 : 0;
  }
  int bad = 0;
  for (const auto& ch : checks) {
    const char* tag = ch.holds ? "ok  " : (ch.proven ? "FAIL" : "warn");
    if (!ch.holds) ++bad;
    std::cout << tag << "  " << ch.name;
    if (!ch.holds && !ch.detail.empty()) std::cout << "  [" << ch.detail << "]";
    std::cout << "\n";
  }
  std::cout << checks.size() << " checks, " << bad << " not satisfied"
            << (proven_violation ? " (proven bound violated)" : "") << "\n";
  return proven_violation ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of graded ideals and parameters of Reed-Muller type codes"};
  app.require_subcommand(1);

  CommonOpts c;
  auto add_common = [&](CLI::App* sc) {
    sc->add_option("input", c.input, "input file (.ideal or .points)")
        ->required()
        ->check(CLI::ExistingFile);
    sc->add_option("--budget", c.budget, "candidate budget per cell (default 10^7)");
    sc->add_option("--threads", c.threads, "worker threads, 0 = OpenMP default");
    sc->add_option("--order", c.order, "monomial order for .points inputs (lex|grlex|grevlex)");
    sc->add_flag("--json", c.as_json, "emit JSON instead of text");
  };

  bool with_reg_delta = false;
  CLI::App* inv = app.add_subcommand("invariants",
                                     "hilbert data, property flags, v-number, socle degree");
  add_common(inv);
  inv->add_flag("--reg-delta", with_reg_delta, "also locate the regularity of delta(d,1)");

  std::string func = "delta";
  int dmax = 0, rmax = 1;
  bool witness = false, force_generic = false, as_csv = false;
  CLI::App* mat = app.add_subcommand("matrix", "tables of delta, footprint, hyp, or vasconcelos");
  add_common(mat);
  mat->add_option("--func", func, "function to tabulate")
      ->check(CLI::IsMember({"delta", "fp", "hyp", "vasconcelos"}));
  mat->add_option("--dmax", dmax, "max degree (default: regularity index)");
  mat->add_option("--rmax", rmax, "max rank (default 1)");
  mat->add_flag("--witness", witness, "report an optimal family per cell");
  mat->add_flag("--force-generic", force_generic, "bypass the points and footprint fast paths");
  mat->add_flag("--csv", as_csv, "emit CSV instead of text");

  int code_dmax = 0;
  bool crosscheck = false;
  CLI::App* code = app.add_subcommand("code", "evaluation code parameters and weight hierarchy");
  add_common(code);
  code->add_option("--dmax", code_dmax, "max degree (default: regularity index)");
  code->add_flag("--crosscheck", crosscheck,
                 "verify ghw == delta and the all-forms hyp oracle (exit 2 on mismatch)");

  bool groebner = false;
  CLI::App* van = app.add_subcommand("vanishing-ideal", "generators of the ideal of a point set");
  add_common(van);
  van->add_flag("--groebner", groebner, "print the reduced groebner basis instead");

  int chk_dmax = 0, chk_rmax = 2;
  CLI::App* chk = app.add_subcommand("check", "run the property battery (exit 2 on violation)");
  add_common(chk);
  chk->add_option("--dmax", chk_dmax, "max degree (default: regularity index, capped at 4)");
  chk->add_option("--rmax", chk_rmax, "max rank (default 2)");

  CLI::App* probe = app.add_subcommand("ci-probe",
                                       "complete intersection bounds (exit 2 on violation)");
  add_common(probe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    ContextVariant ctxv = load_input(c);

    if (inv->parsed())
      return std::visit([&](auto& ctx) { return run_invariants(ctx, c, with_reg_delta); }, ctxv);

    if (mat->parsed())
      return std::visit(
          [&](auto& ctx) {
            return run_matrix(ctx, c, func, dmax, rmax, witness, force_generic, as_csv);
          },
          ctxv);

    if (code->parsed() || van->parsed()) {
      auto* pf = std::get_if<gmd::IdealContext<gmd::PrimeField>>(&ctxv);
      if (!pf || !pf->points) {
        std::cerr << "error: this subcommand needs a .points input\n";
        return 1;
      }
      return code->parsed() ? run_code(*pf, c, code_dmax, crosscheck)
                            : run_vanishing(*pf, c, groebner);
    }

    if (chk->parsed()) {
      int dm = chk_dmax > 0 ? chk_dmax : std::max(1, std::min(ctx_reg(ctxv), 4));
      auto checks = std::visit(
          [&](auto& ctx) { return gmd::run_property_battery(ctx, dm, chk_rmax, make_opts(c)); },
          ctxv);
      return render_checks(checks, c);
    }

    if (probe->parsed()) {
      auto checks =
          std::visit([&](auto& ctx) { return gmd::run_ci_probe(ctx, make_opts(c)); }, ctxv);
      if (checks.size() == 1 && !checks[0].holds &&
          checks[0].name == "complete intersection detected") {
        std::cerr << "error: input is not a complete intersection\n";
        return 1;
      }
      return render_checks(checks, c);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
