#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsk/hall.hpp"
#include "qsk/verify.hpp"

using namespace qsk;
using nlohmann::json;

namespace {

Quiver load_quiver(const std::string& spec) {
  if (spec == "a1") return make_a1();
  if (spec == "a2") return make_a2();
  if (spec == "a3") return make_a3();
  if (spec == "jordan") return make_jordan();
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot open quiver file: " + spec);
  json j;
  in >> j;
  return Quiver::from_json(j);
}

Involution load_involution(const Quiver& q, const std::string& file, int sigma, int varsigma) {
  if (file.empty()) return make_point_involution(q, sigma, varsigma);
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open involution file: " + file);
  json j;
  in >> j;
  return Involution::from_json(q, j);
}

void print_result(bool as_json, const std::string& key, const std::string& value) {
  if (as_json) {
    json j;
    j[key] = value;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << value << "\n";
  }
}

void print_graded(bool as_json, const Quiver& q, const Ambient& amb, const GradedElem& x) {
  json j = json::object();
  for (const auto& [comp, poly] : x.parts) {
    if (as_json)
      j[format_comp(q, comp)] = amb.str(poly);
    else
      std::cout << format_comp(q, comp) << ": " << amb.str(poly) << "\n";
  }
  if (as_json)
    std::cout << j.dump() << "\n";
  else if (x.parts.empty())
    std::cout << "0\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact operator computations for quiver Schur and Hall algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string quiver_spec = "a1", inv_file, sigma_s = "1", varsigma_s = "1";
  bool as_json = false;
  unsigned seed = 0;
  int degree = 6;
  app.add_option("--quiver", quiver_spec, "quiver JSON file or builtin a1/a2/a3/jordan")
      ->capture_default_str();
  app.add_option("--involution", inv_file, "involution JSON file (default: identity)");
  app.add_option("--sigma", sigma_s, "sign on vertices for the identity involution");
  app.add_option("--varsigma", varsigma_s, "sign on arrows for the identity involution");
  app.add_option("--degree", degree, "degree bound for operator checks")->capture_default_str();
  app.add_option("--seed", seed, "random seed for sampled checks")->capture_default_str();
  app.add_flag("--json", as_json, "JSON output");

  std::string f_dim, f_text, g_dim, g_text, v_dim, v_text, comp_s, target_s, adim_s;

  auto* mul = app.add_subcommand("mul", "Hall product of two invariant classes");
  mul->add_option("--dim-f", f_dim, "dimension vector of f")->required();
  mul->add_option("--f", f_text, "polynomial f")->required();
  mul->add_option("--dim-g", g_dim, "dimension vector of g")->required();
  mul->add_option("--g", g_text, "polynomial g")->required();

  auto* act = app.add_subcommand("act", "Hall module action of f on v");
  act->add_option("--dim-f", f_dim, "dimension vector of f")->required();
  act->add_option("--f", f_text, "polynomial f")->required();
  act->add_option("--dim-v", v_dim, "dimension vector of v")->required();
  act->add_option("--v", v_text, "polynomial v")->required();

  auto* comul = app.add_subcommand("comul", "comultiplication component of f");
  comul->add_option("--dim-f", f_dim, "dimension vector of f")->required();
  comul->add_option("--f", f_text, "polynomial f")->required();
  comul->add_option("--a", adim_s, "dimension vector of the first tensor factor")->required();

  auto* merge = app.add_subcommand("merge", "merge operator from a composition to a coarsening");
  merge->add_option("--comp", comp_s, "source composition")->required();
  merge->add_option("--target", target_s, "target composition")->required();
  merge->add_option("--f", f_text, "invariant polynomial in the source slot")->required();

  auto* split = app.add_subcommand("split", "split operator from a composition to a refinement");
  split->add_option("--comp", comp_s, "source composition")->required();
  split->add_option("--target", target_s, "target composition")->required();
  split->add_option("--f", f_text, "invariant polynomial in the source slot")->required();

  auto* tables = app.add_subcommand("tables", "Euler and symmetrizer classes, coset data");
  tables->add_option("--comp", comp_s, "composition")->required();
  bool theta_tables = false;
  tables->add_flag("--theta", theta_tables, "isotropic composition and classes");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  verify->add_option("suite", suite, "suite name or 'all'")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Quiver q = load_quiver(quiver_spec);

    if (mul->parsed()) {
      HallElem f{parse_dimvec(q, f_dim), {}}, g{parse_dimvec(q, g_dim), {}};
      f.poly = Ambient::ordinary(q, f.dim).parse(f_text);
      g.poly = Ambient::ordinary(q, g.dim).parse(g_text);
      HallElem h = coha_mul(q, f, g);
      print_result(as_json, "result", Ambient::ordinary(q, h.dim).str(h.poly));
    } else if (act->parsed()) {
      Involution inv = load_involution(q, inv_file, std::stoi(sigma_s), std::stoi(varsigma_s));
      HallElem f{parse_dimvec(q, f_dim), {}};
      f.poly = Ambient::ordinary(q, f.dim).parse(f_text);
      ThetaHallElem v{parse_dimvec(q, v_dim), {}};
      v.poly = Ambient::isotropic(q, inv, v.dim).parse(v_text);
      ThetaHallElem w = cohm_act(q, inv, f, v);
      print_result(as_json, "result", Ambient::isotropic(q, inv, w.dim).str(w.poly));
    } else if (comul->parsed()) {
      HallElem f{parse_dimvec(q, f_dim), {}};
      f.poly = Ambient::ordinary(q, f.dim).parse(f_text);
      DimVector a = parse_dimvec(q, adim_s);
      Polynomial comp = coha_comul(q, f, a);
      print_result(as_json, "result", Ambient::ordinary(q, f.dim).str(comp));
    } else if (merge->parsed() || split->parsed()) {
      VectorComposition d = parse_comp(q, comp_s);
      VectorComposition e = parse_comp(q, target_s);
      Ambient amb = Ambient::ordinary(q, d.sum());
      GradedElem x;
      x.add(d, amb.parse(f_text));
      GradedElem y = merge->parsed() ? apply_merge(amb, d, e, x) : apply_split(amb, d, e, x);
      print_graded(as_json, q, amb, y);
    } else if (tables->parsed()) {
      json j;
      if (theta_tables) {
        Involution inv = load_involution(q, inv_file, std::stoi(sigma_s), std::stoi(varsigma_s));
        IsoComposition d = parse_iso_comp(q, comp_s);
        if (d.length() != 1)
          throw std::invalid_argument("theta tables need one finite block and an inf part");
        DimVector c = d.sum(inv);
        Ambient amb = Ambient::isotropic(q, inv, c);
        j["thetaS"] = amb.str(class_theta_S(amb, d.finite[0], d.inf).expand(amb.nvars()));
        j["thetaE"] = amb.str(class_theta_E(amb, d.finite[0], d.inf).expand(amb.nvars()));
        j["roots"] = amb.str(blacktriangle(amb, d).expand(amb.nvars()));
      } else {
        VectorComposition d = parse_comp(q, comp_s);
        Ambient amb = Ambient::ordinary(q, d.sum());
        j["S"] = amb.str(class_S(amb, d).expand(amb.nvars()));
        j["E"] = amb.str(class_E(amb, d).expand(amb.nvars()));
        const WeylCtx& ctx = amb.weyl();
        auto reps = min_coset_reps(ctx, ctx.simple_generators(), parabolic_generators(ctx, d));
        json r = json::array();
        for (const auto& w : reps) r.push_back(format_weyl(ctx, w));
        j["coset_reps"] = r;
      }
      if (as_json) {
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& [k, v] : j.items()) std::cout << k << " = " << v.dump() << "\n";
      }
    } else if (verify->parsed()) {
      auto it = suites().find(suite);
      if (it == suites().end()) {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
      }
      bool ok = true;
      json report = json::array();
      for (int id : it->second) {
        const Criterion& cr = criteria().at(id - 1);
        std::string detail;
        bool pass = cr.run(detail, seed);
        ok = ok && pass;
        if (as_json) {
          report.push_back({{"id", cr.id}, {"title", cr.title}, {"pass", pass},
                            {"detail", detail}});
        } else {
          std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << cr.id << ": "
                    << cr.title << " — " << detail << "\n";
        }
      }
      if (as_json) std::cout << report.dump(2) << "\n";
      return ok ? 0 : 1;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
