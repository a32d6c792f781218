#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "wsys/casimir_series.hpp"
#include "wsys/errors.hpp"
#include "wsys/four_term.hpp"
#include "wsys/pbw.hpp"
#include "wsys/weights.hpp"

namespace {

using nlohmann::json;
using namespace wsys;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& arg, const std::string& file) {
  if (!file.empty()) {
    std::ifstream is(file);
    if (!is) throw parse_error("cannot open input file: " + file);
    std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    return text;
  }
  return arg;
}

json dim_report_json(const DimReport& r) {
  return json{{"n", r.n},
              {"num_diagrams", r.num_diagrams},
              {"rank_4T", r.rank_4t},
              {"dim_A", r.dim_a},
              {"ker_gl", r.ker_gl},
              {"ker_joint", r.ker_joint},
              {"elapsed", r.elapsed_seconds}};
}

json pp_report_json(const PPReport& r) {
  return json{{"family", r.fam.family == Algebra::so   ? "so"
                         : r.fam.family == Algebra::sp ? "sp"
                                                       : "osp"},
              {"N", r.fam.N},
              {"M", r.fam.M},
              {"order", r.order},
              {"c0_ok", r.c0_ok},
              {"odd_casimirs_ok", r.odd_casimirs_ok},
              {"reflection_ok", r.reflection_ok},
              {"first_failure", r.first_failure}};
}

FamilySpec family_from_flags(const std::string& family, int N, int M) {
  if (family == "so") return FamilySpec::so(N);
  if (family == "sp") return FamilySpec::sp(M);
  if (family == "osp") return FamilySpec::osp(N, M);
  throw parse_error("unknown family: " + family);
}

int run_eval(const std::string& kind, const std::string& input, bool diagram, bool as_json,
             bool memo_canon) {
  const WeightFamily fam = kind == "gl" ? WeightFamily::gl : WeightFamily::so;
  WeightEvaluator ev(fam, EvalOptions{memo_canon});
  const Polynomial value =
      diagram ? ev.eval_diagram(ChordDiagram::parse(input)) : ev.eval(Permutation::parse(input));
  if (as_json) {
    std::cout << json{{"kind", kind}, {"input", input}, {"value", value.to_json()}}.dump()
              << "\n";
  } else {
    std::cout << value.str() << "\n";
  }
  return kExitPass;
}

int run_dims(int max_n, bool as_json, bool parallel, bool memo_canon) {
  if (max_n < 1 || max_n > 7) throw parse_error("--max-n must be between 1 and 7");
  json arr = json::array();
  for (int n = 1; n <= max_n; ++n) {
    std::cerr << "computing n=" << n << " ...\n";
    const DimReport r = compute_dim_report(n, parallel, memo_canon);
    std::cerr << "n=" << n << " took " << r.elapsed_seconds << "s\n";
    if (as_json) {
      arr.push_back(dim_report_json(r));
    } else {
      // timing goes to the diagnostic stream so text output stays
      // byte-deterministic
      std::cout << "n=" << r.n << " diagrams=" << r.num_diagrams << " rank_4T=" << r.rank_4t
                << " dim_A=" << r.dim_a << " ker_gl=" << r.ker_gl << " ker_joint=" << r.ker_joint
                << "\n";
    }
  }
  if (as_json) std::cout << arr.dump() << "\n";
  return kExitPass;
}

int run_odd_casimirs(int max_m, bool as_json) {
  if (max_m % 2 == 0) --max_m;
  if (max_m < 1) throw parse_error("--max must be >= 1");
  const auto solved = solve_odd_casimirs(max_m);
  WeightEvaluator so(WeightFamily::so);
  bool ok = true;
  json obj = json::object();
  for (const auto& [m, expr] : solved) {
    const bool agree = expr == so.odd_cycle_value(m);
    ok = ok && agree;
    if (as_json) {
      obj["C" + std::to_string(m)] = expr.to_json();
    } else {
      std::cout << "C" << m << " = " << expr.str() << (agree ? "" : "  [MISMATCH]") << "\n";
    }
  }
  if (as_json)
    std::cout << json{{"max", max_m}, {"casimirs", obj}, {"matches_odd_cycle_reduction", ok}}.dump()
              << "\n";
  else
    std::cout << (ok ? "odd-casimirs: both derivations agree\n"
                     : "odd-casimirs: derivations disagree\n");
  return ok ? kExitPass : kExitFail;
}

int run_pp(const std::string& family, int N, int M, int order, bool as_json) {
  const FamilySpec f = family_from_flags(family, N, M);
  const PPReport rep = verify_pp(make_pp_data(f), order);
  if (as_json) {
    std::cout << pp_report_json(rep).dump() << "\n";
  } else {
    std::cout << f.name() << " order=" << order << " c0_ok=" << rep.c0_ok
              << " odd_casimirs_ok=" << rep.odd_casimirs_ok
              << " reflection_ok=" << rep.reflection_ok;
    if (!rep.pass()) std::cout << "  first_failure: " << rep.first_failure;
    std::cout << (rep.pass() ? "  PASS" : "  FAIL") << "\n";
  }
  return rep.pass() ? kExitPass : kExitFail;
}

int run_oracle(const std::string& family, int N, int M, int max_size, int samples, bool as_json) {
  const AlgebraSpec alg = family == "so" ? AlgebraSpec::so(N) : AlgebraSpec::sp(M);
  PBWAlgebra pbw(alg);
  WeightEvaluator so_eval(WeightFamily::so);
  long checked = 0;
  bool ok = true;
  for (int m = 1; m <= max_size && ok; ++m) {
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i) img[i] = i + 1;
    do {
      ok = pbw.oracle_check(Permutation(img), so_eval);
      ++checked;
    } while (ok && std::next_permutation(img.begin(), img.end()));
    std::cerr << "oracle " << alg.name() << ": size " << m << " done\n";
  }
  if (ok && samples > 0) {
    std::mt19937 rng(2024);
    std::vector<int> img(max_size + 1);
    for (int i = 0; i <= max_size; ++i) img[i] = i + 1;
    for (int rep = 0; rep < samples && ok; ++rep) {
      std::shuffle(img.begin(), img.end(), rng);
      ok = pbw.oracle_check(Permutation(img), so_eval);
      ++checked;
    }
  }
  if (as_json) {
    std::cout << json{{"family", family},
                      {"N", N},
                      {"M", M},
                      {"max_size", max_size},
                      {"samples", samples},
                      {"checked", checked},
                      {"pass", ok}}
                     .dump()
              << "\n";
  } else {
    std::cout << "oracle " << alg.name() << ": " << checked << " permutations checked, "
              << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kExitPass : kExitFail;
}

int run_h(bool as_json, bool memo_canon) {
  const auto [h_gl, h_so] = h_check(memo_canon);
  const bool ok = h_gl.is_zero() && !h_so.is_zero();
  if (as_json) {
    std::cout << json{{"w_gl_h", h_gl.to_json()}, {"w_so_h", h_so.to_json()}, {"pass", ok}}.dump()
              << "\n";
  } else {
    std::cout << "w_gl(h) = " << h_gl.str() << "\n";
    std::cout << "w_so(h) = " << h_so.str() << "\n";
    std::cout << (ok ? "PASS (w_gl vanishes, w_so does not)\n" : "FAIL\n");
  }
  return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"universal gl/so weight systems on permutations and chord diagrams"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text (global)");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a weight system on a permutation or diagram");
  std::string eval_kind, eval_input, eval_file;
  bool eval_diagram = false, eval_canon = false;
  eval->add_option("kind", eval_kind, "gl or so")->required()->check(CLI::IsMember({"gl", "so"}));
  eval->add_option("input", eval_input, "permutation images or diagram word/pairs");
  eval->add_option("--file", eval_file, "read the input from a file");
  eval->add_flag("--diagram", eval_diagram, "treat the input as a chord diagram");
  eval->add_flag("--memo-canon", eval_canon, "memoize under cyclic/reversal canonical keys");

  // dims / kernels
  int max_n = 5;
  bool dims_parallel = false, dims_canon = false;
  auto* dims = app.add_subcommand("dims", "dimensions of A_n and weight-system kernels");
  dims->add_option("--max-n", max_n, "largest chord count")->required();
  dims->add_flag("--parallel", dims_parallel, "evaluate basis diagrams across threads");
  dims->add_flag("--memo-canon", dims_canon, "memoize under canonical keys");
  auto* kernels = app.add_subcommand("kernels", "alias of dims");
  kernels->add_option("--max-n", max_n)->required();
  kernels->add_flag("--parallel", dims_parallel);
  kernels->add_flag("--memo-canon", dims_canon);

  // odd-casimirs
  int max_m = 7;
  auto* oddc = app.add_subcommand("odd-casimirs", "solve odd Casimirs from F(u)F(C0-1-u)=1");
  oddc->add_option("--max", max_m, "largest odd index");

  // pp-verify
  std::string family = "so";
  int N = 3, M = 1, order = 8;
  auto* pp = app.add_subcommand("pp-verify", "check the closed product form of F(u)");
  pp->add_option("--family", family)->check(CLI::IsMember({"so", "sp", "osp"}));
  pp->add_option("--N", N);
  pp->add_option("--M", M);
  pp->add_option("--order", order);

  // oracle
  std::string ofamily = "so";
  int oN = 3, oM = 1, max_size = 3, samples = 0;
  auto* oracle = app.add_subcommand("oracle", "brute-force enveloping-algebra check");
  oracle->add_option("--family", ofamily)->check(CLI::IsMember({"so", "sp"}));
  oracle->add_option("--N", oN);
  oracle->add_option("--M", oM);
  oracle->add_option("--max-size", max_size);
  oracle->add_option("--samples", samples, "extra random permutations of size max-size+1");

  // verify <which>
  auto* verify = app.add_subcommand("verify", "named verification runs");
  verify->require_subcommand(1);
  bool h_no_canon = false;
  auto* vh = verify->add_subcommand("h", "the degree-7 separating element");
  vh->add_flag("--no-memo-canon", h_no_canon, "disable canonical memo keys");
  auto* vodd = verify->add_subcommand("odd-casimirs", "odd Casimir relations");
  vodd->add_option("--max", max_m);
  auto* vpp = verify->add_subcommand("pp", "closed product form of F(u)");
  vpp->add_option("--family", family)->check(CLI::IsMember({"so", "sp", "osp"}));
  vpp->add_option("--N", N);
  vpp->add_option("--M", M);
  vpp->add_option("--order", order);
  auto* voracle = verify->add_subcommand("oracle", "enveloping-algebra oracle");
  voracle->add_option("--family", ofamily)->check(CLI::IsMember({"so", "sp"}));
  voracle->add_option("--N", oN);
  voracle->add_option("--M", oM);
  voracle->add_option("--max-size", max_size);
  voracle->add_option("--samples", samples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eval) return run_eval(eval_kind, read_input(eval_input, eval_file), eval_diagram,
                               as_json, eval_canon);
    if (*dims || *kernels) return run_dims(max_n, as_json, dims_parallel, dims_canon);
    if (*oddc) return run_odd_casimirs(max_m, as_json);
    if (*pp) return run_pp(family, N, M, order, as_json);
    if (*oracle) return run_oracle(ofamily, oN, oM, max_size, samples, as_json);
    if (*verify) {
      if (*vh) return run_h(as_json, !h_no_canon);
      if (*vodd) return run_odd_casimirs(max_m, as_json);
      if (*vpp) return run_pp(family, N, M, order, as_json);
      if (*voracle) return run_oracle(ofamily, oN, oM, max_size, samples, as_json);
    }
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const guard_error& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kExitUsage;
  } catch (const contract_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
