#include "qisg/io.hpp"
#include "qisg/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace qisg;
using nlohmann::json;

namespace {

struct Options {
  std::string format = "text";
  unsigned long long seed = 0;
  int max_degree = 3;
};

int emit(const Report& rep, const Options& opt, const std::string& command, double elapsed_ms) {
  if (opt.format == "json")
    std::cout << report_json(rep, command).dump(2) << "\n";
  else
    std::cout << report_text(rep, elapsed_ms);
  return rep.ok() ? 0 : 1;
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructureError("$", "cannot open file '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw StructureError("$ (byte " + std::to_string(e.byte) + ")", e.what());
  }
  return j;
}

Report check_structure_file(const std::string& path, int max_degree) {
  Report rep;
  StructureFile f = parse_structure(load_file(path));
  rep.title = "structure file '" + path + "' (kind: " + f.kind + ")";
  (void)max_degree;
  if (auto* s = std::get_if<FinSemigroup>(&f.value)) {
    auto inv = is_inverse(*s);
    rep.count("elements", s->size());
    rep.add("valid-table", true);
    rep.add("classification", true,
            inv.kind == InverseClass::inverse
                ? "inverse semigroup"
                : (inv.kind == InverseClass::regular_only ? "regular, not inverse: " + inv.message
                                                          : "not regular: " + inv.message));
  } else if (auto* g = std::get_if<FinGroupoid>(&f.value)) {
    rep.count("objects", g->object_count());
    rep.count("arrows", g->arrow_count());
    rep.add("groupoid-axioms", true);  // validated during parsing
    rep.add("transitive", is_transitive(*g), "", false);
  } else if (auto* a = std::get_if<FinAlgebra>(&f.value)) {
    rep.count("dimension", a->dim());
    rep.add("associative", true);  // construction-verified
    rep.add("unital", a->unit().has_value(), "", false);
  } else if (auto* q = std::get_if<Qisg>(&f.value)) {
    rep.merge(check_qisg(*q));
  } else if (auto* x = std::get_if<HopfAlgebroid>(&f.value)) {
    rep.merge(check_hopf_algebroid(*x));
  }
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for quantum inverse semigroups, Hopf algebroids and their biretractions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for randomized property sampling")->capture_default_str();
  app.add_option("--max-degree", opt.max_degree, "degree window for graded algebroids")->capture_default_str();

  // qisg check <model>
  auto* qisg_cmd = app.add_subcommand("qisg", "quantum inverse semigroup commands");
  qisg_cmd->fallthrough();
  auto* qisg_check = qisg_cmd->add_subcommand("check", "build a QISG model and run the axiom checker");
  qisg_check->fallthrough();
  std::string qisg_model = "hadamard";
  int model_n = 2;
  std::string model_group = "Z2";
  std::string file_path;
  qisg_check->add_option("model", qisg_model, "hadamard | hpar | inverse-monoid | exel | matrix-weakhopf | hopf-category | file");
  qisg_check->add_option("--n", model_n, "size parameter");
  qisg_check->add_option("--group", model_group, "group name (Z1..Z9, Z2xZ2, ...)");
  qisg_check->add_option("--file", file_path, "structure file for model 'file'");

  // semigroup check
  auto* sgp_cmd = app.add_subcommand("semigroup", "finite semigroup commands");
  sgp_cmd->fallthrough();
  auto* sgp_check = sgp_cmd->add_subcommand("check", "inverse-semigroup diagnostics");
  sgp_check->fallthrough();
  std::string sgp_model = "symmetric";
  sgp_check->add_option("model", sgp_model, "symmetric | exel | file");
  sgp_check->add_option("--n", model_n, "degree for the symmetric inverse monoid");
  sgp_check->add_option("--group", model_group, "group for the exel semigroup");
  sgp_check->add_option("--file", file_path, "structure file");

  // groupoid bisections
  auto* gpd_cmd = app.add_subcommand("groupoid", "finite groupoid commands");
  gpd_cmd->fallthrough();
  auto* gpd_bis = gpd_cmd->add_subcommand("bisections", "enumerate the bisection inverse semigroup");
  gpd_bis->fallthrough();
  std::string gpd_model = "pair";
  int points = 2;
  bool check_inverse = false;
  gpd_bis->add_option("model", gpd_model, "pair | product | file");
  gpd_bis->add_option("--points", points, "number of objects");
  gpd_bis->add_option("--group", model_group, "isotropy group for 'product'");
  gpd_bis->add_option("--file", file_path, "structure file");
  gpd_bis->add_flag("--check-inverse", check_inverse, "verify the inverse-semigroup property");

  // algebroid check / biretractions
  auto* alg_cmd = app.add_subcommand("algebroid", "Hopf algebroid commands");
  alg_cmd->fallthrough();
  auto* alg_check = alg_cmd->add_subcommand("check", "run the axiom suite of a built-in algebroid");
  alg_check->fallthrough();
  std::string alg_model = "pair";
  std::string torus_q = "2";
  alg_check->add_option("model", alg_model, "pair | repfun | weakhopf | laurent | torus | file");
  alg_check->add_option("--points", points, "number of base points");
  alg_check->add_option("--group", model_group, "group parameter");
  alg_check->add_option("--q", torus_q, "torus deformation parameter, e.g. 2 or 3/2");
  alg_check->add_option("--file", file_path, "structure file");
  auto* alg_brt = alg_cmd->add_subcommand("biretractions", "enumerate the biretraction monoid");
  alg_brt->fallthrough();
  alg_brt->add_option("model", alg_model, "pair | repfun | weakhopf");
  alg_brt->add_option("--points", points, "number of base points");
  alg_brt->add_option("--group", model_group, "group parameter");

  // brt convolve
  auto* brt_cmd = app.add_subcommand("brt", "biretraction commands");
  brt_cmd->fallthrough();
  auto* brt_conv = brt_cmd->add_subcommand("convolve", "convolve two biretraction descriptor files");
  brt_conv->fallthrough();
  std::string left_path, right_path;
  brt_conv->add_option("--left", left_path, "left descriptor (json)")->required();
  brt_conv->add_option("--right", right_path, "right descriptor (json)")->required();

  // verify <id>
  auto* verify_cmd = app.add_subcommand("verify", "run a theorem-verification suite");
  verify_cmd->fallthrough();
  std::string theorem_id;
  std::string q_str = "2", q_alpha_str = "5";
  long t_alpha = 3;
  verify_cmd->add_option("id", theorem_id, "theorem id (see --list)");
  bool list_ids = false;
  verify_cmd->add_flag("--list", list_ids, "list known theorem ids");
  verify_cmd->add_option("--points", points, "number of points");
  verify_cmd->add_option("--group", model_group, "group name");
  verify_cmd->add_option("--n", model_n, "size parameter");
  verify_cmd->add_option("--q", q_str, "torus parameter");
  verify_cmd->add_option("--q-alpha", q_alpha_str, "torus biretraction coefficient");
  verify_cmd->add_option("--t-alpha", t_alpha, "torus biretraction exponent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto started = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  };
  std::string command;
  for (int i = 1; i < argc; ++i) command += std::string(i > 1 ? " " : "") + argv[i];

  try {
    if (qisg_check->parsed()) {
      Report rep;
      if (qisg_model == "hadamard") rep = check_qisg(hadamard_qisg(model_n));
      else if (qisg_model == "hpar") rep = check_qisg(partial_group_qisg(parse_group(model_group)));
      else if (qisg_model == "inverse-monoid") rep = check_qisg(qisg_from_inverse_semigroup(symmetric_inverse_monoid(model_n)));
      else if (qisg_model == "exel") rep = check_qisg(qisg_from_inverse_semigroup(exel_semigroup(parse_group(model_group))));
      else if (qisg_model == "matrix-weakhopf") rep = check_qisg(qisg_from_weak_hopf(matrix_weak_hopf(model_n)));
      else if (qisg_model == "hopf-category") rep = check_qisg(hopf_category_alg(trivial_hopf_category(model_n)).qisg);
      else if (qisg_model == "file") rep = check_structure_file(file_path, opt.max_degree);
      else throw std::invalid_argument("unknown qisg model '" + qisg_model + "'");
      return emit(rep, opt, command, elapsed());
    }
    if (sgp_check->parsed()) {
      FinSemigroup s;
      if (sgp_model == "symmetric") s = symmetric_inverse_monoid(model_n);
      else if (sgp_model == "exel") s = exel_semigroup(parse_group(model_group));
      else if (sgp_model == "file") {
        StructureFile f = parse_structure(load_file(file_path));
        auto* sp = std::get_if<FinSemigroup>(&f.value);
        if (!sp) throw StructureError("$/kind", "expected a semigroup file");
        s = *sp;
      } else {
        throw std::invalid_argument("unknown semigroup model '" + sgp_model + "'");
      }
      Report rep;
      rep.title = "semigroup diagnostics";
      rep.count("elements", s.size());
      rep.count("idempotents", static_cast<long>(s.idempotents().size()));
      auto inv = is_inverse(s);
      rep.add("inverse", inv.kind == InverseClass::inverse, inv.message);
      return emit(rep, opt, command, elapsed());
    }
    if (gpd_bis->parsed()) {
      FinGroupoid g;
      if (gpd_model == "pair") g = pair_groupoid(points);
      else if (gpd_model == "product") g = product_groupoid(points, parse_group(model_group));
      else if (gpd_model == "file") {
        StructureFile f = parse_structure(load_file(file_path));
        auto* gp = std::get_if<FinGroupoid>(&f.value);
        if (!gp) throw StructureError("$/kind", "expected a groupoid file");
        g = *gp;
      } else {
        throw std::invalid_argument("unknown groupoid model '" + gpd_model + "'");
      }
      Report rep;
      rep.title = "bisection semigroup";
      auto bs = enumerate_bisections(g);
      rep.count("bisections", static_cast<long>(bs.elems.size()));
      if (check_inverse) {
        auto inv = is_inverse(bs.sgp);
        rep.add("inverse", inv.kind == InverseClass::inverse, inv.message);
      }
      return emit(rep, opt, command, elapsed());
    }
    if (alg_check->parsed()) {
      Report rep;
      if (alg_model == "pair") rep = check_hopf_algebroid(pair_algebroid(fun_algebra(points)));
      else if (alg_model == "repfun") rep = check_hopf_algebroid(repfun_transitive_algebroid(points, parse_group(model_group)));
      else if (alg_model == "weakhopf") rep = check_hopf_algebroid(weakhopf_algebroid(product_groupoid(points, parse_group(model_group))));
      else if (alg_model == "laurent") rep = check_laurent_algebroid(laurent_algebroid(fun_algebra(points)), opt.max_degree);
      else if (alg_model == "torus") rep = check_quantum_torus(QuantumTorus{Rational::parse(torus_q)}, opt.max_degree);
      else if (alg_model == "file") rep = check_structure_file(file_path, opt.max_degree);
      else throw std::invalid_argument("unknown algebroid model '" + alg_model + "'");
      return emit(rep, opt, command, elapsed());
    }
    if (alg_brt->parsed()) {
      HopfAlgebroid x;
      if (alg_model == "pair") x = pair_algebroid(fun_algebra(points));
      else if (alg_model == "repfun") x = repfun_transitive_algebroid(points, parse_group(model_group));
      else if (alg_model == "weakhopf") x = weakhopf_algebroid(product_groupoid(points, parse_group(model_group)));
      else throw std::invalid_argument("unknown biretraction model '" + alg_model + "'");
      BrtSemigroup b = enumerate_biretractions(x);
      Report rep;
      rep.title = "biretraction monoid (" + alg_model + ")";
      rep.count("biretractions", static_cast<long>(b.elems.size()));
      rep.count("idempotents", static_cast<long>(b.sgp.idempotents().size()));
      rep.add("regular-monoid", true);  // verified during enumeration
      rep.add("idempotents-commute", b.idempotents_commute, "", false);
      rep.add("character-enumeration-complete-over-Q", b.complete_over_Q,
              b.complete_over_Q ? "" : "irrational characters may be missing", false);
      return emit(rep, opt, command, elapsed());
    }
    if (brt_conv->parsed()) {
      json jl = load_file(left_path), jr = load_file(right_path);
      json mj = model_json(jl);
      if (mj != model_json(jr)) throw StructureError("$/model", "descriptors reference different models");
      HopfAlgebroid model = model_from_json(mj);
      BrtDescriptor dl = parse_biretraction_descriptor(jl, model);
      BrtDescriptor dr = parse_biretraction_descriptor(jr, model);
      std::string why;
      auto bl = validate_biretraction(model, dl.alpha, &why);
      if (!bl) throw StructureError("$ (left)", "not a biretraction: " + why);
      auto br = validate_biretraction(model, dr.alpha, &why);
      if (!br) throw StructureError("$ (right)", "not a biretraction: " + why);
      Biretraction conv = convolve(*bl, *br);
      Report rep;
      rep.title = "biretraction convolution";
      rep.add("left-validates", true);
      rep.add("right-validates", true);
      rep.add("product-validates", true);
      if (opt.format == "json") {
        json out = report_json(rep, command);
        out["result"] = serialize_biretraction(mj, conv);
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << report_text(rep, elapsed());
        std::cout << "result:\n" << serialize_biretraction(mj, conv).dump(2) << "\n";
      }
      return 0;
    }
    if (verify_cmd->parsed()) {
      if (list_ids) {
        for (const auto& id : verify_ids()) std::cout << id << "\n";
        return 0;
      }
      if (theorem_id.empty()) throw std::invalid_argument("verify needs a theorem id (or --list)");
      VerifyParams params;
      params.points = points;
      params.group = model_group;
      params.n = model_n;
      params.q = Rational::parse(q_str);
      params.q_alpha = Rational::parse(q_alpha_str);
      params.t_alpha = t_alpha;
      params.max_degree = opt.max_degree;
      params.seed = opt.seed;
      Report rep = verify_theorem(theorem_id, params);
      return emit(rep, opt, command, elapsed());
    }
  } catch (const StructureError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "no subcommand executed\n";
  return 2;
}
