// Command-line interface: enumeration of torus fixed points, operator
// application, verification suites, and character tables, all with exact
// rational-function arithmetic and machine-readable JSON output.
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 malformed input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "laumon/config.hpp"
#include "laumon/cylindric_count.hpp"
#include "laumon/detline.hpp"
#include "laumon/integrable.hpp"
#include "laumon/json_io.hpp"
#include "laumon/localization.hpp"
#include "laumon/relations.hpp"

using namespace laumon;
using laumon::io::json;

namespace {

std::vector<int> parse_csv(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::stoi(cur));
  return out;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

DominantWeight make_weight(int n, const std::vector<int>& mu, int level) {
  DominantWeight w;
  w.n = n;
  w.K = level;
  w.mu = mu;
  if (int(mu.size()) != n || !w.is_valid())
    throw std::invalid_argument("mu is not a dominant weight of the level");
  return w;
}

struct VerifyOutcome {
  json report;
  bool pass;
};

VerifyOutcome run_verify(const std::string& suite, int n, int D, int rmax,
                         const std::vector<int>& mu, int level,
                         const Config& cfg, bool inject_esign,
                         const std::string& degree_mode) {
  json out;
  out["suite"] = suite;
  out["n"] = n;
  out["max_degree"] = D;
  bool pass = true;
  if (suite == "relations") {
    auto rep = verify_finite_relations(n, D, rmax, cfg.parallelism);
    out["rmax"] = rmax;
    out["checked"] = rep.results.size();
    out["failures"] = rep.failures();
    out["results"] = io::to_json(rep, true);
    pass = rep.all_pass();
  } else if (suite == "affine-relations") {
    auto rep = verify_affine_relations(n, D, rmax, cfg.parallelism);
    auto rep2 = verify_affine_relations_slhat(n, D, rmax, cfg.parallelism);
    out["rmax"] = rmax;
    out["checked"] = rep.results.size();
    out["failures"] = rep.failures();
    out["slhat_checked"] = rep2.results.size();
    out["slhat_failures"] = rep2.failures();
    out["results"] = io::to_json(rep, true);
    out["slhat_results"] = io::to_json(rep2, true);
    pass = rep.all_pass() && rep2.all_pass();
  } else if (suite == "a01") {
    auto rep = verify_a01(n, D);
    out["checked"] = rep.results.size();
    out["failures"] = rep.failures();
    out["results"] = io::to_json(rep, true);
    pass = rep.all_pass();
  } else if (suite == "irreducible") {
    auto rep = verify_irreducible(n, D);
    out["checked"] = rep.results.size();
    out["failures"] = rep.failures();
    out["results"] = io::to_json(rep, true);
    pass = rep.all_pass();
  } else if (suite == "k-identity") {
    json results = json::array();
    size_t checked = 0, failures = 0;
    auto all = enumerate_affine_upto(n, D);
    for (const auto& p : all)
      for (const auto& q : all) {
        if (p.degree() != q.degree()) continue;
        ++checked;
        auto r = loc::verify_K_identity(p, q);
        if (!r.pass) {
          ++failures;
          json f;
          f["pair"] = {io::to_json(p), io::to_json(q)};
          f["detail"] = r.detail;
          results.push_back(std::move(f));
        }
      }
    out["checked"] = checked;
    out["failures"] = failures;
    out["results"] = std::move(results);
    pass = failures == 0;
  } else if (suite == "localization") {
    json results = json::array();
    size_t checked = 0, failures = 0;
    for (const auto& p : enumerate_affine_upto(n, D))
      for (const auto& e : loc::edges_from(p)) {
        for (auto kind : {loc::CoeffKind::e, loc::CoeffKind::f}) {
          ++checked;
          Scalar closed = loc::closed_form_coeff(e, kind);
          if (inject_esign && kind == loc::CoeffKind::e) closed = -closed;
          bool ok = loc::localized_coeff(e, kind) == closed;
          if (!ok) {
            ++failures;
            json f;
            f["edge"] = {io::to_json(e.source), io::to_json(e.target)};
            f["i"] = e.i;
            f["kind"] = kind == loc::CoeffKind::e ? "e" : "f";
            results.push_back(std::move(f));
          }
        }
      }
    out["checked"] = checked;
    out["failures"] = failures;
    out["results"] = std::move(results);
    pass = failures == 0;
  } else if (suite == "truncation") {
    DominantWeight w = make_weight(n, mu, level);
    auto rep = integrable::check_truncation(n, w, D, rmax);
    out["mu"] = mu;
    out["level"] = level;
    out["checked"] = rep.results.size();
    out["failures"] = rep.failures();
    json results = json::array();
    for (const auto& r : rep.results)
      if (!r.pass)
        results.push_back(
            {{"edge", r.edge}, {"kind", r.kind}, {"detail", r.detail}});
    out["results"] = std::move(results);
    pass = rep.all_pass();
  } else if (suite == "xvi") {
    bool diagonal = degree_mode != "all";
    auto rep = detline::verify_xvi(n, D, diagonal);
    out["degree_mode"] = diagonal ? "diagonal" : "all";
    out["checked"] = rep.results.size();
    out["diagonal_failures"] = rep.diagonal_failures();
    out["general_failures"] = rep.general_failures();
    json results = json::array();
    for (const auto& r : rep.results)
      if (!r.pass)
        results.push_back(
            {{"pattern", r.pattern}, {"diagonal", r.diagonal_degree}});
    out["results"] = std::move(results);
    pass = rep.diagonal_failures() == 0;
  } else {
    throw std::invalid_argument("unknown verify suite: " + suite);
  }
  out["pass"] = pass;
  return {std::move(out), pass};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Yangian engine for (affine) Laumon fixed points"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "key = value configuration file");
  int threads_flag = -1;
  app.add_option("--threads", threads_flag, "worker pool size");
  int order_flag = -1;
  app.add_option("--order", order_flag, "series truncation order");

  // enumerate
  auto* cmd_enum = app.add_subcommand("enumerate", "list torus fixed points");
  std::string kind = "affine";
  cmd_enum->add_option("--kind", kind)
      ->check(CLI::IsMember({"finite", "affine"}));
  int n = 3;
  cmd_enum->add_option("-n", n, "rank");
  std::string degree_csv;
  cmd_enum->add_option("--degree", degree_csv, "degree vector a,b,c")
      ->required();

  // apply
  auto* cmd_apply = app.add_subcommand("apply", "apply a generator to a state");
  std::string gen;
  cmd_apply
      ->add_option("--gen", gen, "generator tag: e, f, xminus, xplus, h, E")
      ->required();
  int gi = 1, gr = 0;
  cmd_apply->add_option("-i", gi, "generator index");
  cmd_apply->add_option("-r", gr, "current index");
  std::string state_path;
  cmd_apply->add_option("--state", state_path, "pattern or vector JSON file")
      ->required();

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  cmd_verify
      ->add_option("suite", suite,
                   "relations | affine-relations | a01 | irreducible | "
                   "k-identity | localization | truncation | xvi")
      ->required();
  int vn = 3, vD = 2, vR = 2, vlevel = 1;
  std::string vmu = "0,0,0", vdegmode = "diagonal";
  cmd_verify->add_option("-n", vn, "rank");
  cmd_verify->add_option("--max-degree", vD, "degree cutoff");
  cmd_verify->add_option("--rmax", vR, "current index cutoff");
  cmd_verify->add_option("--mu", vmu, "dominant weight");
  cmd_verify->add_option("--level", vlevel, "level K");
  cmd_verify->add_option("--degree-mode", vdegmode, "diagonal | all");
  bool inject = false;
  cmd_verify->add_flag("--inject-esign", inject,
                       "flip the sign of the closed-form e-coefficient "
                       "(self-test hook; the suite must fail)");

  // character
  auto* cmd_char = app.add_subcommand("character", "graded counts of D(mu)");
  std::string cmu = "0,0,0";
  int clevel = 1, ccutoff = 4, cn = 3;
  cmd_char->add_option("--mu", cmu)->required();
  cmd_char->add_option("--level", clevel)->required();
  cmd_char->add_option("--cutoff", ccutoff)->required();
  cmd_char->add_option("-n", cn, "rank");

  // localize
  auto* cmd_loc = app.add_subcommand("localize", "torus characters");
  std::string what;
  cmd_loc->add_option("what", what, "tangent | e-bundle | edge")->required();
  std::string pat1, pat2;
  cmd_loc->add_option("--pattern", pat1)->required();
  cmd_loc->add_option("--pattern2", pat2);
  int li = 1, lm = 0;
  cmd_loc->add_option("-i", li, "edge row");
  cmd_loc->add_option("-m", lm, "edge box slot");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Config cfg;
    if (!config_path.empty()) cfg = Config::from_file(config_path);
    if (threads_flag > 0) cfg.parallelism = threads_flag;
    if (order_flag > 0) cfg.series_order = order_flag;

    if (*cmd_enum) {
      cfg.check_n(n);
      auto deg = parse_csv(degree_csv);
      json out = json::array();
      if (kind == "finite")
        for (const auto& p : enumerate_finite(n, deg))
          out.push_back(io::to_json(p));
      else
        for (const auto& p : enumerate_affine(n, deg))
          out.push_back(io::to_json(p));
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*cmd_apply) {
      json st = load_json(state_path);
      json out;
      auto apply_affine_vec = [&](const affine::VectorM& v) {
        affine::VectorM r;
        for (const auto& [p, c] : v.terms()) {
          affine::VectorM w;
          if (gen == "e")
            w = affine::apply_e(p, gi);
          else if (gen == "f")
            w = affine::apply_f(p, gi);
          else if (gen == "xminus")
            w = affine::apply_xminus(p, gi, gr);
          else if (gen == "xplus")
            w = affine::apply_xplus(p, gi, gr);
          else if (gen == "h")
            w = affine::VectorM::basis(p).mul_scalar(
                affine::eigen_h_diag(p, gi));
          else
            throw std::invalid_argument("unknown affine generator " + gen);
          for (const auto& [q, cc] : w.terms()) r.add_term(q, cc * c);
        }
        return r;
      };
      auto apply_finite_vec = [&](const finite::VectorV& v) {
        finite::VectorV r;
        for (const auto& [p, c] : v.terms()) {
          finite::VectorV w;
          if (gen == "e")
            w = finite::apply_e(p, gi);
          else if (gen == "f")
            w = finite::apply_f(p, gi);
          else if (gen == "xminus")
            w = finite::apply_xminus(p, gi, gr);
          else if (gen == "xplus")
            w = finite::apply_xplus(p, gi, gr);
          else if (gen == "h")
            w = finite::VectorV::basis(p).mul_scalar(
                finite::eigen_h_chevalley(p, gi));
          else if (gen == "E")
            w = finite::VectorV::basis(p).mul_scalar(finite::eigen_E(p, gi));
          else
            throw std::invalid_argument("unknown finite generator " + gen);
          for (const auto& [q, cc] : w.terms()) r.add_term(q, cc * c);
        }
        return r;
      };
      auto state_kind = [&](const json& j) {
        return j.at("kind").get<std::string>();
      };
      if (st.is_object() && st.contains("terms")) {
        const json& terms = st.at("terms");
        if (terms.empty()) throw std::invalid_argument("empty state");
        if (state_kind(terms[0].at("pattern")) == "affine") {
          affine::VectorM v;
          for (const auto& t : terms)
            v.add_term(io::affine_from_json(t.at("pattern")), Scalar(Q(1)));
          out = io::vector_to_json(apply_affine_vec(v));
        } else {
          finite::VectorV v;
          for (const auto& t : terms)
            v.add_term(io::finite_from_json(t.at("pattern")), Scalar(Q(1)));
          out = io::vector_to_json(apply_finite_vec(v));
        }
      } else if (state_kind(st) == "affine") {
        cfg.check_n(st.at("n").get<int>());
        auto v = affine::VectorM::basis(io::affine_from_json(st));
        out = io::vector_to_json(apply_affine_vec(v));
      } else {
        cfg.check_n(st.at("n").get<int>());
        auto v = finite::VectorV::basis(io::finite_from_json(st));
        out = io::vector_to_json(apply_finite_vec(v));
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*cmd_verify) {
      cfg.check_n(vn);
      auto res = run_verify(suite, vn, vD, vR, parse_csv(vmu), vlevel, cfg,
                            inject, vdegmode);
      std::cout << res.report.dump(2) << "\n";
      return res.pass ? 0 : 1;
    }

    if (*cmd_char) {
      cfg.check_n(cn);
      DominantWeight w = make_weight(cn, parse_csv(cmu), clevel);
      auto engine = integrable::dmu_counts(cn, w, ccutoff);
      auto oracle = cylcount::cylindric_counts(w, ccutoff);
      json out;
      out["mu"] = w.mu;
      out["level"] = w.K;
      out["cutoff"] = ccutoff;
      json table = json::array();
      bool match = engine == oracle;
      for (const auto& [deg, cnt] : engine) {
        json row;
        row["degree"] = deg;
        row["count"] = cnt;
        auto it = oracle.find(deg);
        row["cylindric_count"] = it == oracle.end() ? 0 : it->second;
        table.push_back(std::move(row));
      }
      for (const auto& [deg, cnt] : oracle)
        if (engine.find(deg) == engine.end()) {
          json row;
          row["degree"] = deg;
          row["count"] = 0;
          row["cylindric_count"] = cnt;
          table.push_back(std::move(row));
          match = false;
        }
      out["table"] = std::move(table);
      out["match"] = match;
      std::cout << out.dump(2) << "\n";
      return match ? 0 : 1;
    }

    if (*cmd_loc) {
      AffinePattern p = io::affine_from_json(load_json(pat1));
      cfg.check_n(p.n);
      json out;
      if (what == "tangent") {
        out["character"] = io::to_json(loc::char_tangent(p));
      } else if (what == "e-bundle") {
        AffinePattern q =
            pat2.empty() ? p : io::affine_from_json(load_json(pat2));
        out["character"] = io::to_json(loc::char_E(p, q));
      } else if (what == "edge") {
        int l = AffinePattern::residue(li - lm, p.n);
        auto q = p.add_box(l, lm);
        if (!q) throw std::invalid_argument("invalid box move");
        loc::FixedEdge e{p, *q, li, lm};
        out["character"] = io::to_json(loc::char_corr_tangent(e));
        out["coeff_e"] = loc::localized_coeff(e, loc::CoeffKind::e).to_string();
        out["coeff_f"] = loc::localized_coeff(e, loc::CoeffKind::f).to_string();
      } else {
        throw std::invalid_argument("unknown localize mode " + what);
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
