// qgf — batch front-end for the qgauss library. Every subcommand reads its
// inputs from flags/files, prints one JSON document on stdout, and reports
// problems on stderr. Exit codes: 0 ok, 1 usage/parse error, 2 rejection.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qgauss/centrality.hpp"
#include "qgauss/convolution.hpp"
#include "qgauss/json_io.hpp"
#include "qgauss/random.hpp"
#include "qgauss/targets.hpp"
#include "qgauss/wordlang.hpp"

namespace {

using namespace qg;

double env_default_tol() {
  if (const char* v = std::getenv("QG_TOL")) {
    try {
      return std::stod(v);
    } catch (const std::exception&) {
      throw std::runtime_error("QG_TOL is not a number");
    }
  }
  return kDefaultTol;
}

Json checks_to_json(const std::vector<CheckResult>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    Json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["residual"] = c.residual;
    out.push_back(std::move(jc));
  }
  return out;
}

Json vector_to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out.push_back(complex_to_json(v(i)));
  return out;
}

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

struct Emitter {
  std::string out_path;
  void operator()(const Json& j) const {
    std::string text = dump_json(j);
    std::cout << text;
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) throw std::runtime_error("cannot open " + out_path);
      f << text;
    }
  }
};

int selftest(uint64_t seed, double tol, const Emitter& emit) {
  Rng rng(seed);
  int trials = 0, failures = 0;
  const GroupTarget targets[] = {
      {GroupTarget::Kind::u_plus, 2},  {GroupTarget::Kind::o_plus, 3},
      {GroupTarget::Kind::sp_plus, 1}, {GroupTarget::Kind::u_classical, 2},
      {GroupTarget::Kind::torus, 2},   {GroupTarget::Kind::free_group, 2}};
  auto random_letter = [&rng](const CookedFunctional& f) {
    int idx = int(rng() % uint64_t(f.num_letters()));
    if (f.group_letters()) return group_gen(idx / 2 + 1, idx % 2 == 1);
    int ij = idx / 2;
    return fundamental(ij / f.dim + 1, ij % f.dim + 1, idx % 2 == 1);
  };
  for (const auto& target : targets) {
    for (int rep = 0; rep < 4; ++rep) {
      GaussianSpec spec = random_valid_spec(target, 2, rng);
      ++trials;
      if (!validate(spec, tol).all_pass()) {
        ++failures;
        continue;
      }
      CookedFunctional f = cook(spec, tol);
      for (int k = 0; k < 8; ++k) {
        // pair identity: ∂φ(a*⊗b) = ⟨η(a), η(b)⟩ on random two-letter words
        Word a{random_letter(f), random_letter(f)};
        Word b{random_letter(f), random_letter(f)};
        Element ea = element(a), eb = element(b);
        Complex lhs = coboundary(f, star(ea), eb);
        Complex rhs = eval_eta(f, ea).dot(eval_eta(f, eb));
        ++trials;
        if (std::abs(lhs - rhs) > 1e3 * tol) ++failures;
        // K₃: φ vanishes on products of three centered letters
        Word l1{random_letter(f)}, l2{random_letter(f)}, l3{random_letter(f)};
        auto centered = [](const Word& w) {
          return sub(element(w), scale(counit(w), unit_element()));
        };
        Element triple = mul(mul(centered(l1), centered(l2)), centered(l3));
        ++trials;
        if (std::abs(eval_phi(f, triple)) > 1e3 * tol) ++failures;
      }
    }
  }
  Json out;
  out["seed"] = seed;
  out["trials"] = trials;
  out["failures"] = failures;
  out["pass"] = failures == 0;
  emit(out);
  return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian generating functionals on free easy quantum groups"};
  app.require_subcommand(1);

  std::string spec_path, expr, expr_a, expr_b, target_name_flag, input_path,
      out_path, pattern_text;
  double tol = kDefaultTol;
  try {
    tol = env_default_tol();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  int n_flag = 0, pmax = 4, order = 8, cutoff = 2;
  double t_flag = 1.0;
  uint64_t seed = 1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--tol", tol, "numerical tolerance");
    cmd->add_option("--out", out_path, "also write the JSON report here");
  };

  auto* c_validate = app.add_subcommand("validate", "run all validity checks");
  c_validate->add_option("--spec", spec_path)->required();
  add_common(c_validate);

  auto* c_eval = app.add_subcommand("eval", "evaluate the functional");
  c_eval->add_option("--spec", spec_path)->required();
  c_eval->add_option("--expr", expr)->required();
  add_common(c_eval);

  auto* c_cocycle = app.add_subcommand("cocycle", "evaluate the cocycle");
  c_cocycle->add_option("--spec", spec_path)->required();
  c_cocycle->add_option("--expr", expr)->required();
  add_common(c_cocycle);

  auto* c_cob = app.add_subcommand("coboundary", "evaluate the pair form");
  c_cob->add_option("--spec", spec_path)->required();
  c_cob->add_option("--expr-a", expr_a)->required();
  c_cob->add_option("--expr-b", expr_b)->required();
  add_common(c_cob);

  auto* c_dec = app.add_subcommand("decompose", "extract (W, H)");
  c_dec->add_option("--spec", spec_path)->required();
  add_common(c_dec);

  auto* c_comp = app.add_subcommand("compose", "build a spec from (W, H)");
  c_comp->add_option("--input", input_path)->required();
  add_common(c_comp);

  auto* c_grp = app.add_subcommand("check-group", "target conditions vs ideal");
  c_grp->add_option("--spec", spec_path)->required();
  c_grp->add_option("--target", target_name_flag,
                    "override the spec's target name");
  c_grp->add_option("--n", n_flag, "override the target size");
  add_common(c_grp);

  auto* c_cen = app.add_subcommand("central", "centrality check");
  c_cen->add_option("--spec", spec_path)->required();
  c_cen->add_option("--cutoff", cutoff, "word length cutoff for the sweep");
  add_common(c_cen);

  auto* c_tab = app.add_subcommand("centralize", "character-moment table");
  c_tab->add_option("--spec", spec_path)->required();
  c_tab->add_option("--pmax", pmax, "largest tensor power");
  add_common(c_tab);

  auto* c_mom = app.add_subcommand("moments", "mixed character moment");
  c_mom->add_option("--spec", spec_path)->required();
  c_mom->add_option("--pattern", pattern_text, "e.g. uu*u")->required();
  add_common(c_mom);

  auto* c_br = app.add_subcommand("bracket", "drift convolution bracket");
  c_br->add_option("--input", input_path)->required();
  add_common(c_br);

  auto* c_exp = app.add_subcommand("conv-exp", "truncated convolution exp");
  c_exp->add_option("--spec", spec_path)->required();
  c_exp->add_option("--expr", expr)->required();
  c_exp->add_option("--t", t_flag, "time parameter");
  c_exp->add_option("--order", order, "truncation order");
  add_common(c_exp);

  auto* c_parse = app.add_subcommand("parse", "parse + canonical print");
  c_parse->add_option("--expr", expr)->required();
  c_parse->add_option("--target", target_name_flag)->required();
  c_parse->add_option("--n", n_flag)->required();
  add_common(c_parse);

  auto* c_self = app.add_subcommand("selftest", "randomized property sweep");
  c_self->add_option("--seed", seed, "RNG seed");
  add_common(c_self);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  }

  Emitter emit{out_path};

  try {
    if (*c_validate) {
      GaussianSpec spec = load_spec(spec_path);
      ValidationReport rep = validate(spec, tol);
      Json out;
      out["checks"] = checks_to_json(rep.checks);
      out["pass"] = rep.all_pass();
      emit(out);
      return 0;
    }
    if (*c_eval) {
      GaussianSpec spec = load_spec(spec_path);
      CookedFunctional f = cook(spec, tol);
      Element x = parse(expr, spec.target);
      Json out;
      out["value"] = complex_to_json(eval_phi(f, x));
      emit(out);
      return 0;
    }
    if (*c_cocycle) {
      GaussianSpec spec = load_spec(spec_path);
      CookedFunctional f = cook(spec, tol);
      Element x = parse(expr, spec.target);
      Json out;
      out["vector"] = vector_to_json(eval_eta(f, x));
      emit(out);
      return 0;
    }
    if (*c_cob) {
      GaussianSpec spec = load_spec(spec_path);
      CookedFunctional f = cook(spec, tol);
      Element a = parse(expr_a, spec.target);
      Element b = parse(expr_b, spec.target);
      Json out;
      out["value"] = complex_to_json(coboundary(f, a, b));
      emit(out);
      return 0;
    }
    if (*c_dec) {
      GaussianSpec spec = load_spec(spec_path);
      auto [w, h] = to_WH(spec, tol);
      Json out;
      out["W"] = tensor_op_to_json(w);
      out["H"] = matrix_to_json(h);
      emit(out);
      return 0;
    }
    if (*c_comp) {
      Json j = load_file(input_path);
      GroupTarget target{target_kind_from_name(j.at("target").get<std::string>()),
                         j.at("n").get<int>()};
      TensorOperator w = tensor_op_from_json(j.at("W"));
      ComplexMatrix h = matrix_from_json(j.at("H"));
      GaussianSpec spec = from_WH(w, h, target, tol);
      emit(spec_to_json(spec));
      return 0;
    }
    if (*c_grp) {
      GaussianSpec spec = load_spec(spec_path);
      GroupTarget target = spec.target;
      if (!target_name_flag.empty())
        target.kind = target_kind_from_name(target_name_flag);
      if (n_flag > 0) target.n = n_flag;
      std::vector<CheckResult> conds = matrix_conditions(spec, target, tol);
      CookedFunctional f = cook_ambient(spec, tol);
      bool ideal = ideal_vanishing_check(f, target, tol);
      bool matrix_pass = true;
      for (const auto& c : conds) matrix_pass = matrix_pass && c.pass;
      Json out;
      out["matrix_conditions"] = checks_to_json(conds);
      out["matrix_pass"] = matrix_pass;
      out["ideal_vanishing"] = ideal;
      out["agree"] = matrix_pass == ideal;
      emit(out);
      return 0;
    }
    if (*c_cen) {
      GaussianSpec spec = load_spec(spec_path);
      CookedFunctional f = cook(spec, tol);
      CentralParams p = central_params(spec);
      Json out;
      out["central"] = central_check(f, cutoff, tol);
      Json jp;
      jp["tr_h"] = complex_to_json(p.tr_h);
      jp["tr_mw"] = p.tr_mw;
      jp["tr_tr_w"] = p.tr_tr_w;
      out["params"] = std::move(jp);
      emit(out);
      return 0;
    }
    if (*c_tab) {
      GaussianSpec spec = load_spec(spec_path);
      MomentTable table = centralize_table(spec, spec.target, pmax, tol);
      Json rows = Json::array();
      for (const auto& r : table.rows) {
        Json jr;
        jr["pattern"] = r.pattern;
        jr["value"] = complex_to_json(r.value);
        rows.push_back(std::move(jr));
      }
      Json out;
      out["rows"] = std::move(rows);
      out["c"] = complex_to_json(table.c);
      out["reference"] = table.reference;
      emit(out);
      return 0;
    }
    if (*c_mom) {
      GaussianSpec spec = load_spec(spec_path);
      CookedFunctional f = cook_ambient(spec, tol);
      CharacterPattern pattern = parse_pattern(pattern_text);
      Json out;
      out["pattern"] = pattern_to_string(pattern);
      out["closed"] = complex_to_json(character_moment_closed(f, pattern));
      out["direct"] = complex_to_json(character_moment_direct(f, pattern));
      emit(out);
      return 0;
    }
    if (*c_br) {
      Json j = load_file(input_path);
      ComplexMatrix h = matrix_from_json(j.at("H"));
      ComplexMatrix k = matrix_from_json(j.at("K"));
      ComplexMatrix b = drift_bracket(h, k, tol);
      ComplexMatrix c = h * k - k * h;
      Json out;
      out["bracket"] = matrix_to_json(b);
      out["commutator"] = matrix_to_json(c);
      out["residual"] = max_abs(b - c);
      emit(out);
      return 0;
    }
    if (*c_exp) {
      GaussianSpec spec = load_spec(spec_path);
      CookedFunctional f = cook(spec, tol);
      Element x = parse(expr, spec.target);
      Json out;
      out["value"] = complex_to_json(conv_exp(f, x, t_flag, order));
      emit(out);
      return 0;
    }
    if (*c_parse) {
      GroupTarget target{target_kind_from_name(target_name_flag), n_flag};
      Element x = parse(expr, target);
      Json out;
      out["canonical"] = print_element(x);
      emit(out);
      return 0;
    }
    if (*c_self) return selftest(seed, tol, emit);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 2;
  } catch (const WHRejection& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 2;
  } catch (const NotPositiveError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
