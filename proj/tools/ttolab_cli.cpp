#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "ttolab/conjugation.hpp"
#include "ttolab/json_io.hpp"
#include "ttolab/moebius.hpp"
#include "ttolab/modelspace.hpp"
#include "ttolab/random.hpp"
#include "ttolab/singular_limits.hpp"
#include "ttolab/tto.hpp"

using namespace ttolab;

namespace {

// Pass/fail gates applied by the CLI on top of the library tolerances; all
// of them are echoed into the reports next to the values they judge.
constexpr double kProjectorGate = 1e-7;
constexpr double kSarasonGate = 1e-9;
constexpr double kSymmetryGate = 1e-9;
constexpr double kCrofootGate = 1e-7;
constexpr double kMembershipGate = 1e-7;
constexpr double kSeparationGate = 1e-6;

struct Common {
  int grid_size = tol::kDefaultGridSize;
  double tol_identity = tol::kIdentityTol;
  std::uint64_t seed = 42;
  bool json = false;
  bool csv = false;
};

void add_common(CLI::App* sub, Common& c, const char* csv_columns = nullptr) {
  sub->add_option("--grid-size", c.grid_size, "quadrature nodes (power of two, >= 32)")
      ->capture_default_str();
  sub->add_option("--tol", c.tol_identity, "identity tolerance")->capture_default_str();
  sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
  CLI::Option* j = sub->add_flag("--json", c.json, "emit JSON (default)");
  if (csv_columns) {
    sub->add_flag("--csv", c.csv, std::string("emit CSV with columns ") + csv_columns)
        ->excludes(j);
  }
}

void attach_context(ordered_json& rep, const Common& c) {
  rep["grid_size"] = c.grid_size;
  rep["seed"] = c.seed;
  rep["tol_identity"] = c.tol_identity;
  rep["tol_rank"] = tol::kRankThreshold;
  rep["version"] = kVersion;
}

cplx parse_point(const std::string& text) {
  double re = 0.0, im = 0.0;
  char tail = '\0';
  if (std::sscanf(text.c_str(), "%lf,%lf%c", &re, &im, &tail) != 2) {
    throw std::invalid_argument("point must be given as re,im");
  }
  return cplx(re, im);
}

ordered_json matrix_json(const Mat& a) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Random trigonometric polynomial of degree < n on both sides; its
// compression is a generic member of the span.
Vec random_symbol(const ModelSpace& space, Rng& rng) {
  const int n = space.dim();
  const Vec& nodes = space.grid().nodes;
  Vec phi = Vec::Zero(nodes.size());
  Vec power = Vec::Ones(nodes.size());
  phi += rng.complex_normal() * power;
  for (int k = 1; k < n; ++k) {
    power = power.cwiseProduct(nodes);
    phi += rng.complex_normal() * power;
    phi += rng.complex_normal() * power.conjugate();
  }
  return phi;
}

int emit(const ordered_json& rep, bool pass) {
  std::cout << rep.dump(2) << "\n";
  return pass ? 0 : 1;
}

int run_basis(const std::string& u_text, const Common& c) {
  const BlaschkeProduct u = parse_blaschke_string(u_text);
  const ModelSpace space(u, c.grid_size);
  const int n = space.dim();

  const Mat gram =
      space.basis_samples().adjoint() * space.basis_samples() * space.grid().weight();
  const double gram_residual = (gram - Mat::Identity(n, n)).norm();

  // basis must be orthogonal to u * chi^k for k < n
  double analytic_residual = 0.0;
  Vec power = space.u_samples();
  for (int k = 0; k < n; ++k) {
    const Vec overlap = space.basis_samples().adjoint() * power * space.grid().weight();
    analytic_residual = std::max(analytic_residual, overlap.norm());
    power = power.cwiseProduct(space.grid().nodes);
  }

  const bool pass = gram_residual < c.tol_identity && analytic_residual < c.tol_identity;
  ordered_json rep;
  rep["u"] = to_json(u);
  rep["dim"] = n;
  rep["gram_residual"] = gram_residual;
  rep["analytic_orthogonality_residual"] = analytic_residual;
  rep["pass"] = pass;
  attach_context(rep, c);
  return emit(rep, pass);
}

int run_tto(const std::string& u_text, int power, const Common& c) {
  const BlaschkeProduct u = parse_blaschke_string(u_text);
  const ModelSpace space(u, c.grid_size);
  const Vec& nodes = space.grid().nodes;

  Vec phi = Vec::Ones(nodes.size());
  for (int k = 0; k < std::abs(power); ++k) phi = phi.cwiseProduct(nodes);
  if (power < 0) phi = phi.conjugate();

  const ModelOperator a = tto_from_symbol(space, phi);
  const double sarason = sarason_residual(a);
  const double member = TtoSpace::build(space).membership_distance(a.matrix);
  const bool pass = sarason < kSarasonGate && member < kMembershipGate;

  ordered_json rep;
  rep["u"] = to_json(u);
  rep["power"] = power;
  rep["matrix"] = matrix_json(a.matrix);
  rep["sarason_residual"] = sarason;
  rep["membership_distance"] = member;
  rep["thresholds"] = {{"sarason", kSarasonGate}, {"membership", kMembershipGate}};
  rep["pass"] = pass;
  attach_context(rep, c);
  return emit(rep, pass);
}

int run_sarason(const std::string& u_text, int trials, const Common& c) {
  const BlaschkeProduct u = parse_blaschke_string(u_text);
  const ModelSpace space(u, c.grid_size);
  const TtoSpace tspace = TtoSpace::build(space);
  Rng rng(c.seed);

  bool pass = true;
  ordered_json table = ordered_json::array();
  std::string csv = "trial,member_sarason,member_distance,nonmember_sarason,nonmember_distance\n";
  for (int t = 0; t < trials; ++t) {
    const ModelOperator member = tto_from_symbol(space, random_symbol(space, rng));
    const double ms = sarason_residual(member);
    const double md = tspace.membership_distance(member.matrix);
    pass = pass && ms < kSarasonGate && md < kMembershipGate;

    ordered_json row;
    row["trial"] = t;
    row["member"] = {{"sarason_residual", ms}, {"membership_distance", md}};
    double ns = 0.0, nd = 0.0;
    if (space.dim() >= 2) {
      // a gaussian matrix never lies in the proper subspace
      const ModelOperator outside{rng.gaussian_matrix(space.dim()), &space};
      ns = sarason_residual(outside);
      nd = tspace.membership_distance(outside.matrix);
      pass = pass && ns > kSeparationGate && nd > kSeparationGate;
      row["nonmember"] = {{"sarason_residual", ns}, {"membership_distance", nd}};
    }
    table.push_back(std::move(row));
    char line[160];
    std::snprintf(line, sizeof(line), "%d,%.17g,%.17g,%.17g,%.17g\n", t, ms, md, ns, nd);
    csv += line;
  }

  if (c.csv) {
    std::cout << csv;
    return pass ? 0 : 1;
  }
  ordered_json rep;
  rep["u"] = to_json(u);
  rep["random_trials"] = trials;
  rep["trials"] = std::move(table);
  rep["thresholds"] = {{"sarason", kSarasonGate},
                       {"membership", kMembershipGate},
                       {"separation", kSeparationGate}};
  rep["pass"] = pass;
  attach_context(rep, c);
  return emit(rep, pass);
}

int run_theorem(const std::string& u_text, const std::string& a_text, bool degree_check,
                const Common& c) {
  const BlaschkeProduct u = parse_blaschke_string(u_text);
  const cplx a = parse_point(a_text);
  const ModelSpace space(u, c.grid_size);
  const TheoremReport t = theorem_check(space, a);

  bool pass = t.dim_constraint == t.dim_tto && t.projector_distance < kProjectorGate &&
              t.sarason_max_residual < kSarasonGate;
  ordered_json rep;
  rep["u"] = to_json(u);
  rep["a"] = to_json(a);
  rep["dim_S"] = t.dim_constraint;
  rep["dim_T"] = t.dim_tto;
  rep["projector_distance"] = t.projector_distance;
  rep["sarason_max_residual"] = t.sarason_max_residual;
  if (degree_check) {
    const int expected = 2 * space.dim() - 1;
    const bool ok = t.dim_constraint == expected && t.dim_tto == expected;
    rep["degree_check"] = {{"expected", expected}, {"pass", ok}};
    pass = pass && ok;
  }
  rep["thresholds"] = {{"projector_distance", kProjectorGate}, {"sarason", kSarasonGate}};
  rep["pass"] = pass;
  attach_context(rep, c);
  return emit(rep, pass);
}

int run_divisors(const std::string& u_text, bool all,
                 const std::vector<std::string>& divisor_texts, const Common& c) {
  const BlaschkeProduct u = parse_blaschke_string(u_text);
  const ModelSpace space(u, c.grid_size);
  const int n = space.dim();

  std::vector<BlaschkeProduct> divisors;
  if (all) {
    if (n > 5) {
      throw std::invalid_argument("--all enumerates zero-submultisets for degree <= 5 only");
    }
    std::set<std::string> seen;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<cplx> zs;
      for (int k = 0; k < n; ++k) {
        if (mask & (1u << k)) zs.push_back(u.zeros()[k]);
      }
      BlaschkeProduct v(std::move(zs));
      const std::string key = to_json(v).dump();
      if (seen.insert(key).second) divisors.push_back(std::move(v));
    }
  } else {
    if (divisor_texts.empty()) {
      throw std::invalid_argument("give --all or at least one --divisor");
    }
    for (const std::string& text : divisor_texts) {
      BlaschkeProduct v = parse_blaschke_string(text);
      if (v.degree() == 0 || !divides(v, u)) {
        throw std::invalid_argument("--divisor is not a nontrivial divisor of u");
      }
      divisors.push_back(std::move(v));
    }
  }

  Rng rng(c.seed);
  const ModelOperator a = tto_from_symbol(space, random_symbol(space, rng));

  bool pass = true;
  ordered_json rows = ordered_json::array();
  std::string csv = "dim_v,matrix_residual,form_residual\n";
  for (const BlaschkeProduct& v : divisors) {
    const ModelSpace vspace(v, c.grid_size);
    const ModelOperator b = compress(a, vspace);
    const CSymmetryResult r = is_c_symmetric(b.matrix, Conjugation(vspace), kSymmetryGate);
    pass = pass && r.symmetric;
    ordered_json row;
    row["v"] = to_json(v);
    row["dim"] = v.degree();
    row["matrix_residual"] = r.matrix_residual;
    row["form_residual"] = r.form_residual;
    row["pass"] = r.symmetric;
    rows.push_back(std::move(row));
    char line[96];
    std::snprintf(line, sizeof(line), "%d,%.17g,%.17g\n", v.degree(), r.matrix_residual,
                  r.form_residual);
    csv += line;
  }

  if (c.csv) {
    std::cout << csv;
    return pass ? 0 : 1;
  }
  ordered_json rep;
  rep["u"] = to_json(u);
  rep["divisors"] = std::move(rows);
  rep["thresholds"] = {{"symmetry", kSymmetryGate}};
  rep["pass"] = pass;
  attach_context(rep, c);
  return emit(rep, pass);
}

int run_crofoot(const std::string& u_text, const std::string& a_text, const Common& c) {
  const BlaschkeProduct u = parse_blaschke_string(u_text);
  const cplx a = parse_point(a_text);
  const ModelSpace space(u, c.grid_size);
  const CrofootReport r = crofoot_check(space, a);

  const bool pass = r.unitarity < kCrofootGate && r.intertwining < kCrofootGate &&
                    r.transport < kCrofootGate && r.dim_source == r.dim_target;
  ordered_json rep;
  rep["u"] = to_json(u);
  rep["a"] = to_json(a);
  rep["dim_source"] = r.dim_source;
  rep["dim_target"] = r.dim_target;
  rep["unitarity"] = r.unitarity;
  rep["intertwining"] = r.intertwining;
  rep["transport"] = r.transport;
  rep["thresholds"] = {{"residual", kCrofootGate}};
  rep["pass"] = pass;
  attach_context(rep, c);
  return emit(rep, pass);
}

ordered_json decay_json(const DecayReport& r) {
  return {{"final_max_error", r.final_max_error},
          {"fail_threshold", r.fail_threshold},
          {"fitted_slope", r.fitted_slope},
          {"monotone_from", r.monotone_from},
          {"pass", r.pass}};
}

int run_lemma5(const std::string& nu_text, double eta, int max_n, const Common& c) {
  const AtomicMeasure nu = parse_atomic_measure_string(nu_text);
  const auto seq = build_arc_sequence(nu, eta, max_n);
  const auto far_grid = limit_check_grid(eta);
  std::vector<cplx> sup_grid = disc_tensor_grid();
  const auto ring = near_boundary_ring();
  sup_grid.insert(sup_grid.end(), ring.begin(), ring.end());

  const DecayReport pointwise = pointwise_limit_check(seq, far_grid);
  const DecayReport ratio = ratio_limit_check(seq, eta, far_grid);
  const UniformBoundReport uniform = uniform_bound_check(seq, eta, sup_grid);
  const auto g = [](cplx z) { return 1.0 + 0.5 * z; };
  const WeakConvergenceReport weak =
      weak_convergence_check(seq, eta, g, far_grid, c.grid_size);

  const bool pass = pointwise.pass && ratio.pass && uniform.pass && weak.pass;

  if (c.csv) {
    std::string csv = "n,mass,pointwise_max_error,ratio_max_error\n";
    for (std::size_t k = 0; k < pointwise.trace.size(); ++k) {
      char line[128];
      std::snprintf(line, sizeof(line), "%d,%.17g,%.17g,%.17g\n", pointwise.trace[k].n,
                    pointwise.trace[k].mass, pointwise.trace[k].max_error,
                    ratio.trace[k].max_error);
      csv += line;
    }
    std::cout << csv;
    return pass ? 0 : 1;
  }

  ordered_json rep;
  rep["nu"] = to_json(nu);
  rep["eta"] = eta;
  rep["max_n"] = max_n;
  rep["pointwise"] = decay_json(pointwise);
  rep["ratio"] = decay_json(ratio);
  rep["uniform"] = {{"statistic", uniform.statistic},
                    {"bound", uniform.bound},
                    {"pass", uniform.pass}};
  rep["weak"] = {{"sup_norm", weak.sup_norm},
                 {"norm_bound", weak.norm_bound},
                 {"final_pointwise_error", weak.final_pointwise_error},
                 {"pointwise_threshold", weak.pointwise_threshold},
                 {"norm_contrast", weak.norm_contrast},
                 {"norm_contrast_over_mass", weak.norm_contrast_over_mass},
                 {"deleted_fraction", weak.deleted_fraction},
                 {"pass", weak.pass}};
  rep["pass"] = pass;
  attach_context(rep, c);
  return emit(rep, pass);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"model-space and truncated-Toeplitz workbench"};
  app.require_subcommand(1);

  Common common;
  std::string u_text, a_text, nu_text;
  int power = 1;
  int trials = 20;
  bool degree_check = false;
  bool all_divisors = false;
  std::vector<std::string> divisor_texts;
  double eta = 0.0;
  int max_n = 400;
  int exit_code = 0;

  CLI::App* basis = app.add_subcommand("basis", "orthonormal basis diagnostics for K_u");
  basis->add_option("--u", u_text, "inner function JSON")->required();
  add_common(basis, common);
  basis->callback([&] { exit_code = run_basis(u_text, common); });

  CLI::App* tto = app.add_subcommand("tto", "compression of a power symbol chi^k");
  tto->add_option("--u", u_text, "inner function JSON")->required();
  tto->add_option("--power", power, "symbol exponent k (k < 0 means conj(chi)^|k|)")
      ->capture_default_str();
  add_common(tto, common);
  tto->callback([&] { exit_code = run_tto(u_text, power, common); });

  CLI::App* sarason =
      app.add_subcommand("sarason", "shift-invariance residuals for members and outsiders");
  sarason->add_option("--u", u_text, "inner function JSON")->required();
  sarason->add_option("--random-trials", trials, "trial count")->capture_default_str();
  add_common(sarason, common,
             "trial,member_sarason,member_distance,nonmember_sarason,nonmember_distance");
  sarason->callback([&] { exit_code = run_sarason(u_text, trials, common); });

  CLI::App* theorem =
      app.add_subcommand("theorem", "compare the symmetry-constraint space with the span");
  theorem->add_option("--u", u_text, "inner function JSON")->required();
  theorem->add_option("--a", a_text, "distinguished zero as re,im")->required();
  theorem->add_flag("--degree-check", degree_check, "also require dimension 2n-1");
  add_common(theorem, common);
  theorem->callback([&] { exit_code = run_theorem(u_text, a_text, degree_check, common); });

  CLI::App* divisors =
      app.add_subcommand("divisors", "symmetry of divisor compressions of a random member");
  divisors->add_option("--u", u_text, "inner function JSON")->required();
  divisors->add_flag("--all", all_divisors, "all zero-submultisets (degree <= 5)");
  divisors->add_option("--divisor", divisor_texts, "divisor JSON (repeatable)");
  add_common(divisors, common, "dim_v,matrix_residual,form_residual");
  divisors->callback(
      [&] { exit_code = run_divisors(u_text, all_divisors, divisor_texts, common); });

  CLI::App* crofoot = app.add_subcommand("crofoot", "disc-automorphism transplantation residuals");
  crofoot->add_option("--u", u_text, "inner function JSON")->required();
  crofoot->add_option("--a", a_text, "automorphism parameter as re,im")->required();
  add_common(crofoot, common);
  crofoot->callback([&] { exit_code = run_crofoot(u_text, a_text, common); });

  CLI::App* lemma5 = app.add_subcommand("lemma5", "shrinking-arc limit diagnostics");
  lemma5->add_option("--nu", nu_text, "singular measure JSON")->required();
  lemma5->add_option("--eta", eta, "atom angle in radians")->capture_default_str();
  lemma5->add_option("--max-n", max_n, "largest arc index")->capture_default_str();
  add_common(lemma5, common, "n,mass,pointwise_max_error,ratio_max_error");
  lemma5->callback([&] { exit_code = run_lemma5(nu_text, eta, max_n, common); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
