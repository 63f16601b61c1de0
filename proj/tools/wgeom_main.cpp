#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wgeom/oracle.hpp"
#include "wgeom/parallel.hpp"
#include "wgeom/scenario.hpp"

namespace {

using nlohmann::json;
using namespace wgeom;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInputError = 3;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

// Model files may either be bare model sections or documents with a "model"
// key; scenario documents reuse the same loader.
const json& model_section(const json& doc) {
  return doc.contains("model") ? doc.at("model") : doc;
}

const char* status_name(ParabolicityVerdict::Status s) {
  switch (s) {
    case ParabolicityVerdict::Status::Parabolic: return "Parabolic";
    case ParabolicityVerdict::Status::Hyperbolic: return "Hyperbolic";
    default: return "Inconclusive";
  }
}

void echo_model(const json& spec, bool quiet) {
  if (quiet) return;
  const json& m = model_section(spec);
  std::cout << "model: m=" << m.at("m").get<int>();
  if (m.at("w").is_object())
    std::cout << " w=space_form(" << fmt(m.at("w").at("space_form").get<double>())
              << ")";
  else
    std::cout << " w=" << m.at("w").get<std::string>();
  if (m.contains("f") && !m.at("f").is_null())
    std::cout << " f=" << m.at("f").get<std::string>();
  else
    std::cout << " f=0";
  std::cout << "\n";
}

struct CommonOpts {
  std::string model_path;
  std::string scenario_path;
  std::string csv_path;
  double tol = 0.0;  // 0 means "library defaults"
  int grid = 64;
  bool quiet = false;
};

int run_classify(const CommonOpts& opt, double rho) {
  const json doc = load_json(opt.model_path);
  WeightedModelSpace S = load_model(model_section(doc));
  echo_model(doc, opt.quiet);
  const ParabolicityVerdict v = classify_parabolicity(S, rho);
  std::cout << status_name(v.status) << "\n";
  if (!opt.quiet && v.hyperbolic())
    std::cout << "capacity_at_infinity=" << fmt(v.capacity) << "\n";
  return v.status == ParabolicityVerdict::Status::Inconclusive
             ? kExitInconclusive
             : kExitOk;
}

int run_capacity(const CommonOpts& opt, double rho, std::optional<double> R) {
  const json doc = load_json(opt.model_path);
  WeightedModelSpace S = load_model(model_section(doc));
  echo_model(doc, opt.quiet);
  if (R) {
    const CapacityResult c = potential(S, rho, *R);
    std::cout << fmt(c.value) << "\n";
    return kExitOk;
  }
  const ParabolicityVerdict v = capacity_at_infinity(S, rho);
  if (v.status == ParabolicityVerdict::Status::Inconclusive) {
    std::cout << "Inconclusive\n";
    return kExitInconclusive;
  }
  std::cout << fmt(v.capacity) << "\n";
  return kExitOk;
}

int run_scalar(const CommonOpts& opt, double R, double s,
               const std::string& what) {
  const json doc = load_json(opt.model_path);
  WeightedModelSpace S = load_model(model_section(doc));
  echo_model(doc, opt.quiet);
  double v = 0.0;
  if (what == "volume")
    v = volume_ball(S, R);
  else if (what == "quotient")
    v = iso_quotient(S, R);
  else
    v = exit_time_transplant(S, R)(s);
  std::cout << fmt(v) << "\n";
  return kExitOk;
}

int report_comparison(const ComparisonReport& rep, const CommonOpts& opt) {
  double min_hyp = std::numeric_limits<double>::infinity();
  double min_ineq = std::numeric_limits<double>::infinity();
  for (double v : rep.hypothesis_margins) min_hyp = std::min(min_hyp, v);
  for (double v : rep.inequality_margins) min_ineq = std::min(min_ineq, v);
  if (!opt.quiet) {
    std::cout << "theorem: " << theorem_name(rep.theorem) << "\n";
    std::cout << "radii: " << rep.radii.size();
    if (!rep.radii.empty())
      std::cout << " in [" << fmt(rep.radii.front()) << ", "
                << fmt(rep.radii.back()) << "]";
    std::cout << "\n";
    std::cout << "hypothesis_tol=" << fmt(rep.hypothesis_tol)
              << " inequality_tol=" << fmt(rep.inequality_tol) << "\n";
    if (!rep.hypothesis_margins.empty())
      std::cout << "min_hypothesis_margin=" << fmt(min_hyp) << "\n";
    if (!rep.inequality_margins.empty())
      std::cout << "min_inequality_margin=" << fmt(min_ineq) << "\n";
  }
  // --tol overrides the pinned tolerances when deciding the exit code.
  ComparisonReport::Verdict verdict = rep.verdict;
  if (opt.tol > 0.0) {
    if (!rep.hypothesis_margins.empty() && min_hyp < -opt.tol)
      verdict = ComparisonReport::Verdict::HypothesisFail;
    else if (!rep.inequality_margins.empty() && min_ineq < -opt.tol)
      verdict = ComparisonReport::Verdict::InequalityViolation;
    else if (rep.verdict != ComparisonReport::Verdict::Inconclusive)
      verdict = ComparisonReport::Verdict::Pass;
  }
  switch (verdict) {
    case ComparisonReport::Verdict::Pass:
      std::cout << "PASS\n";
      return kExitOk;
    case ComparisonReport::Verdict::InequalityViolation:
      std::cout << "FAIL inequality at r=" << fmt(rep.fail_radius)
                << " margin=" << fmt(rep.fail_margin) << "\n";
      return kExitViolation;
    case ComparisonReport::Verdict::HypothesisFail:
      std::cout << "HYPOTHESIS-FAIL at r=" << fmt(rep.fail_radius)
                << " margin=" << fmt(rep.fail_margin) << "\n";
      return kExitInconclusive;
    default:
      std::cout << "INCONCLUSIVE\n";
      return kExitInconclusive;
  }
}

int run_compare(const CommonOpts& opt, std::string theorem) {
  const json doc = load_json(opt.scenario_path);
  IntrinsicScenario sc = load_intrinsic_scenario(doc);
  if (theorem.empty() && doc.contains("action") &&
      doc.at("action").contains("theorem"))
    theorem = doc.at("action").at("theorem").get<std::string>();
  if (theorem.empty())
    throw std::runtime_error("no theorem named (flag or action.theorem)");
  echo_model(doc, opt.quiet);
  if (!opt.quiet) {
    const json& comp = doc.at("comparison");
    std::cout << "comparison:";
    if (comp.at("w").is_object())
      std::cout << " w=space_form("
                << fmt(comp.at("w").at("space_form").get<double>()) << ")";
    else
      std::cout << " w=" << comp.at("w").get<std::string>();
    if (sc.theta) std::cout << " theta=" << sc.theta->text();
    if (sc.q) std::cout << " q=" << fmt(*sc.q);
    std::cout << " rho0=" << fmt(sc.rho0) << "\n";
  }
  const ComparisonReport rep = verify_intrinsic(sc, theorem_from_string(theorem));
  return report_comparison(rep, opt);
}

int run_extrinsic(const CommonOpts& opt) {
  const json doc = load_json(opt.scenario_path);
  SubmanifoldProfile prof = load_submanifold(doc.at("submanifold"));
  WarpingFunction comp_w = load_warping(doc.at("comparison"));
  SubVariant variant = SubVariant::Sec;
  double q = 0.0;
  int m = 0;
  if (doc.contains("action")) {
    const json& act = doc.at("action");
    if (act.contains("variant") &&
        act.at("variant").get<std::string>() == "q-weighted")
      variant = SubVariant::QWeighted;
    if (act.contains("q")) q = act.at("q").get<double>();
    if (act.contains("m")) m = act.at("m").get<int>();
  }
  if (!opt.quiet)
    std::cout << "submanifold: n=" << prof.n << " psi=" << prof.psi.text()
              << " phiH=" << prof.phiH.text() << " rho=" << fmt(prof.rho)
              << "\n";
  const SubClassification cls =
      classify_submanifold(prof, comp_w, variant, q, m);
  if (!cls.balance_ok) {
    std::cout << "INCONCLUSIVE balance condition violated\n";
    return kExitInconclusive;
  }
  std::cout << status_name(cls.verdict.status) << "\n";
  if (!opt.quiet && cls.verdict.hyperbolic())
    std::cout << "capacity_to_volume_bound=" << fmt(cls.ratio_bound) << "\n";
  return cls.verdict.status == ParabolicityVerdict::Status::Inconclusive
             ? kExitInconclusive
             : kExitOk;
}

int run_oracle(const CommonOpts& opt, double rho, double R, int N) {
  const json doc = load_json(opt.model_path);
  WeightedModelSpace S = load_model(model_section(doc));
  echo_model(doc, opt.quiet);
  const CapacityResult analytic = potential(S, rho, R);
  const EnergyResult disc = minimize_dirichlet_energy(S, rho, R, N);
  const double rel =
      std::abs(analytic.value - disc.energy) / std::abs(analytic.value);
  std::cout << "analytic=" << fmt(analytic.value)
            << " discrete=" << fmt(disc.energy) << " rel_err=" << fmt(rel)
            << " N=" << N << "\n";
  const double tol = opt.tol > 0.0 ? opt.tol : 1e-3;
  return rel <= tol ? kExitOk : kExitViolation;
}

int run_sweep(const CommonOpts& opt, double rmin, double rmax) {
  const json doc = load_json(opt.model_path);
  WeightedModelSpace S = load_model(model_section(doc));
  echo_model(doc, opt.quiet);
  if (opt.csv_path.empty()) throw std::runtime_error("sweep requires --csv");
  const double hi = std::min(rmax, 0.95 * S.domain_sup());
  std::vector<double> radii = default_radii(rmin, hi, opt.grid);
  std::vector<std::string> rows(radii.size());
  parallel_for(static_cast<std::int64_t>(radii.size()), [&](std::int64_t i) {
    const double r = radii[i];
    const double vol = volume_ball(S, r);
    const double area = area_sphere(S, r);
    const ParabolicityVerdict v = capacity_at_infinity(S, r);
    const char* flag = v.parabolic() ? "P" : (v.hyperbolic() ? "H" : "I");
    rows[i] = fmt(r) + "," + fmt(vol) + "," + fmt(area) + "," +
              fmt(vol / area) + "," + fmt(v.capacity) + "," + flag;
  });
  std::ofstream out(opt.csv_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + opt.csv_path);
  out << "r,Vol_h,Area_h,q_iso,Cap_to_infinity,verdict_flags\n";
  for (const auto& row : rows) out << row << "\n";
  if (!opt.quiet)
    std::cout << "wrote " << radii.size() << " rows to " << opt.csv_path
              << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted model-space geometry toolkit"};
  app.require_subcommand(1);

  CommonOpts opt;
  double rho = 1.0, R = 1.0, s = 0.0;
  double rmin = 0.05, rmax = 10.0;
  int N = 4096;
  std::string theorem;
  std::optional<double> cap_R;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", opt.tol, "tolerance override");
    sub->add_option("--grid", opt.grid, "grid size");
    sub->add_flag("--quiet", opt.quiet, "suppress report text");
    sub->add_option("--csv", opt.csv_path, "CSV output path");
  };

  CLI::App* classify = app.add_subcommand("classify", "parabolic or hyperbolic");
  classify->add_option("--model", opt.model_path)->required();
  classify->add_option("--rho", rho);
  add_common(classify);

  CLI::App* capacity = app.add_subcommand("capacity", "weighted capacity");
  capacity->add_option("--model", opt.model_path)->required();
  capacity->add_option("--rho", rho)->required();
  capacity->add_option("--R", cap_R);
  add_common(capacity);

  CLI::App* volume = app.add_subcommand("volume", "weighted ball volume");
  volume->add_option("--model", opt.model_path)->required();
  volume->add_option("--R", R)->required();
  add_common(volume);

  CLI::App* quotient = app.add_subcommand("quotient", "isoperimetric quotient");
  quotient->add_option("--model", opt.model_path)->required();
  quotient->add_option("--R", R)->required();
  add_common(quotient);

  CLI::App* exit_time = app.add_subcommand("exit-time", "mean exit time");
  exit_time->add_option("--model", opt.model_path)->required();
  exit_time->add_option("--R", R)->required();
  exit_time->add_option("--s", s);
  add_common(exit_time);

  CLI::App* compare = app.add_subcommand("compare", "verify a comparison");
  compare->add_option("--scenario", opt.scenario_path)->required();
  compare->add_option("--theorem", theorem);
  add_common(compare);

  CLI::App* extrinsic = app.add_subcommand("extrinsic", "classify submanifold");
  extrinsic->add_option("--scenario", opt.scenario_path)->required();
  add_common(extrinsic);

  CLI::App* oracle = app.add_subcommand("oracle", "discrete energy check");
  oracle->add_option("--model", opt.model_path)->required();
  oracle->add_option("--rho", rho)->required();
  oracle->add_option("--R", R)->required();
  oracle->add_option("--N", N);
  add_common(oracle);

  CLI::App* sweep = app.add_subcommand("sweep", "per-radius CSV sweep");
  sweep->add_option("--model", opt.model_path)->required();
  sweep->add_option("--rmin", rmin);
  sweep->add_option("--rmax", rmax);
  add_common(sweep);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify) return run_classify(opt, rho);
    if (*capacity) return run_capacity(opt, rho, cap_R);
    if (*volume) return run_scalar(opt, R, s, "volume");
    if (*quotient) return run_scalar(opt, R, s, "quotient");
    if (*exit_time) return run_scalar(opt, R, s, "exit-time");
    if (*compare) return run_compare(opt, theorem);
    if (*extrinsic) return run_extrinsic(opt);
    if (*oracle) return run_oracle(opt, rho, R, N);
    if (*sweep) return run_sweep(opt, rmin, rmax);
  } catch (const std::exception& e) {
    std::cerr << "wgeom-error: " << e.what() << "\n";
    return kExitInputError;
  }
  std::cerr << "wgeom-error: no subcommand\n";
  return kExitInputError;
}
