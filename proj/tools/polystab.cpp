// Command-line front end for the clique -> quadratic threshold ->
// nonsingularity -> Hurwitz stability reduction chain and its switched-system
// simulations.  Exit codes: 0 success, 1 property failure, 2 usage or format
// error.

#include <complex>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polystab/caratheodory.hpp"
#include "polystab/certificates.hpp"
#include "polystab/clique.hpp"
#include "polystab/gadgets.hpp"
#include "polystab/graph.hpp"
#include "polystab/json_io.hpp"
#include "polystab/ladder.hpp"
#include "polystab/numeric_eigen.hpp"
#include "polystab/parallel.hpp"
#include "polystab/qt.hpp"
#include "polystab/rng.hpp"
#include "polystab/simplex_qp.hpp"
#include "polystab/stability_check.hpp"
#include "polystab/switched.hpp"

namespace {

using namespace polystab;
namespace fs = std::filesystem;

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kUsageError = 2;

void emit(const fs::path& path, const Json& doc) {
  write_file_atomic(path.string(), canonical_dump(doc));
  std::cout << "wrote " << path.string() << "\n";
}

std::string rat_vec_str(const std::vector<Rat>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += w[i].to_string();
  }
  return s + ")";
}

std::string surd_str(const Surd& s) {
  std::string out = s.a().to_string();
  if (!s.b().is_zero()) {
    out += s.b().sgn() > 0 ? " + " : " - ";
    const Rat ab = s.b().sgn() > 0 ? s.b() : Rat(0) - s.b();
    out += ab.to_string() + "*sqrt(" + s.c().get_str() + ")";
  }
  return out;
}

Eigen::VectorXd random_unit_vector(Rng& rng, std::size_t dim) {
  Eigen::VectorXd x(static_cast<Eigen::Index>(dim));
  do {
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = 2.0 * rng.unit() - 1.0;
  } while (x.norm() < 1e-9);
  return x / x.norm();
}

// ---------------------------------------------------------------------------
// reduce <graph.dimacs> [--tau p/q] --out dir
// ---------------------------------------------------------------------------

int run_reduce(const std::string& graph_path, const std::string& tau_text,
               const std::string& out_dir) {
  const Graph g = parse_dimacs(read_file(graph_path));
  const Rat tau = Rat::parse(tau_text);
  if (tau.sgn() <= 0 || tau >= Rat(1))
    throw FormatError("--tau must lie strictly between 0 and 1");

  const QtInstance q = build_qt_instance(g, tau);
  const PolytopeInstance xinst = build_nonsingularity_gadget(q);
  const PolytopeInstance binst = build_stability_gadget(xinst);

  fs::create_directories(out_dir);
  std::cout << "graph: " << g.n() << " vertices, " << g.edges().size()
            << " edges; tau = " << tau << ", perturbation index i* = "
            << q.provenance->istar << "\n";
  emit(fs::path(out_dir) / "qt_instance.json", qt_to_json(q));
  emit(fs::path(out_dir) / "nonsingularity_gadget.json",
       polytope_to_json(xinst));
  emit(fs::path(out_dir) / "stability_gadget.json", polytope_to_json(binst));
  std::cout << "dims: " << q.n << " (quadratic threshold), " << xinst.dim
            << " (nonsingularity, " << xinst.matrices.size()
            << " vertices), " << binst.dim << " (stability, "
            << binst.matrices.size() << " vertices)\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// clique <graph.dimacs> [--via-reduction] [--max-n N]
// ---------------------------------------------------------------------------

int run_clique(const std::string& graph_path, bool via_reduction,
               std::size_t max_n) {
  const Graph g = parse_dimacs(read_file(graph_path));
  const CliqueResult exact = max_clique_exact(g);
  if (!via_reduction) {
    std::cout << "omega = " << exact.size << " (exact)\n";
    std::string w = "{";
    for (std::size_t i = 0; i < exact.witness.size(); ++i) {
      if (i) w += ", ";
      w += std::to_string(exact.witness[i]);
    }
    std::cout << "witness = " << w << "}\n";
    return kOk;
  }
  if (g.n() > max_n)
    throw SizeCapExceeded("reduction oracle capped at n = " +
                          std::to_string(max_n) + " (got " +
                          std::to_string(g.n()) + "); raise --max-n");
  const std::size_t omega_red = recover_clique_number(
      g, [&](const QtInstance& q) { return qt_decide(q, max_n + 1); });
  const bool agree = omega_red == exact.size;
  std::cout << "omega = " << exact.size << " (exact) / " << omega_red
            << " (reduction) " << (agree ? "AGREE" : "DISAGREE") << "\n";
  return agree ? kOk : kPropertyFailure;
}

// ---------------------------------------------------------------------------
// check <instance.json> [--out dir] [--trials N] [--seed s]
// ---------------------------------------------------------------------------

int check_qt(const Json& doc, const std::string& out_dir) {
  const QtInstance q = qt_from_json(doc);
  const std::string hash = instance_hash(qt_to_json(q));
  std::cout << "qt-instance: n = " << q.n << ", sha256 " << hash << "\n";
  const bool reachable = qt_decide(q);
  std::cout << "threshold value 1 reachable on the simplex: "
            << (reachable ? "yes" : "no") << "\n";
  if (!reachable) return kOk;

  SingularityCertificate cert = find_singular_combination(q);
  cert.instance_sha256 = hash;
  const PolytopeInstance xinst = build_nonsingularity_gadget(q);
  if (!verify_singularity_certificate(cert, xinst)) {
    std::cout << "FAIL: freshly built certificate does not verify\n";
    return kPropertyFailure;
  }
  fs::create_directories(out_dir);
  emit(fs::path(out_dir) / "certificate.json", certificate_to_json(cert));
  std::cout << "singular combination certificate (radicand "
            << cert.radicand.get_str() << "):\n";
  for (std::size_t i = 0; i < cert.weights.size(); ++i)
    std::cout << "  w[" << i << "] = " << surd_str(cert.weights[i]) << "\n";
  return kOk;
}

int check_nonsingularity(const Json& doc, const std::string& out_dir) {
  const PolytopeInstance inst = polytope_from_json(doc);
  const auto qt = detail::extract_qt_structure(inst.matrices);
  if (!qt)
    throw FormatError(
        "instance is labeled nonsingularity-gadget but lacks the bordered "
        "structure");
  QtInstance q = *qt;
  if (inst.provenance) {
    const QtInstance rebuilt = build_qt_instance(
        parse_dimacs(inst.provenance->graph_dimacs), inst.provenance->tau);
    if (rebuilt.minv != q.minv ||
        rebuilt.provenance->istar != inst.provenance->istar)
      throw PreconditionNotVerified(
          "provenance does not reproduce the instance");
  }
  const std::string hash = instance_hash(polytope_to_json(inst));
  std::cout << "nonsingularity-gadget: dim = " << inst.dim << ", "
            << inst.matrices.size() << " vertices, sha256 " << hash << "\n";
  const bool singular = qt_decide(q);
  std::cout << "polytope contains a singular matrix: "
            << (singular ? "yes" : "no") << "\n";
  if (!singular) return kOk;

  SingularityCertificate cert = find_singular_combination(q);
  cert.instance_sha256 = hash;
  if (!verify_singularity_certificate(cert, inst)) {
    std::cout << "FAIL: freshly built certificate does not verify\n";
    return kPropertyFailure;
  }
  fs::create_directories(out_dir);
  emit(fs::path(out_dir) / "certificate.json", certificate_to_json(cert));
  std::cout << "singular combination certificate (radicand "
            << cert.radicand.get_str() << "):\n";
  for (std::size_t i = 0; i < cert.weights.size(); ++i)
    std::cout << "  w[" << i << "] = " << surd_str(cert.weights[i]) << "\n";
  return kOk;
}

int check_stability(const Json& doc, const std::string& out_dir,
                    std::size_t trials, std::uint64_t seed) {
  const PolytopeInstance inst = polytope_from_json(doc);
  const std::string hash = instance_hash(polytope_to_json(inst));
  std::cout << to_string(inst.kind) << ": dim = " << inst.dim << ", "
            << inst.matrices.size() << " vertices, sha256 " << hash << "\n";
  SearchBudget budget;
  budget.starts = trials;
  budget.seed = seed;
  const StabilityVerdict v = polytope_hurwitz_check(inst, budget);

  if (v.outcome == StabilityOutcome::AllCombinationsHurwitz) {
    if (v.exactly_resolved) {
      std::cout << "verdict: every convex combination is Hurwitz (exact)\n";
    } else {
      std::cout << "verdict: no unstable combination found (vertices exact; "
                   "interior search with "
                << trials << " starts found nothing -- not a proof)\n";
    }
    return kOk;
  }

  std::cout << "verdict: unstable convex combination found";
  std::cout << (v.exactly_resolved ? " (exact)\n" : "\n");
  std::printf("max real part at witness: %.17g\n", v.max_real_part);
  if (v.unstable_weights)
    std::cout << "weights = " << rat_vec_str(*v.unstable_weights) << "\n";
  if (v.gadget_certificate) {
    SingularityCertificate cert = *v.gadget_certificate;
    cert.instance_sha256 = hash;
    const auto inner = detail::extract_stability_blocks(inst);
    PolytopeInstance inner_inst;
    inner_inst.dim = inst.dim / 2;
    inner_inst.matrices = *inner;
    if (!verify_singularity_certificate(cert, inner_inst)) {
      std::cout << "FAIL: gadget certificate does not verify against the "
                   "inner polytope\n";
      return kPropertyFailure;
    }
    fs::create_directories(out_dir);
    emit(fs::path(out_dir) / "certificate.json", certificate_to_json(cert));
    std::cout << "boundary certificate (radicand " << cert.radicand.get_str()
              << "): weights drive the inner polytope singular, putting an "
                 "eigenvalue at zero\n";
    for (std::size_t i = 0; i < cert.weights.size(); ++i)
      std::cout << "  w[" << i << "] = " << surd_str(cert.weights[i]) << "\n";
  }
  return kOk;
}

int run_check(const std::string& instance_path, const std::string& out_dir,
              std::size_t trials, std::uint64_t seed) {
  const Json doc = parse_json(read_file(instance_path));
  const std::string kind = jsondetail::str(doc, "kind");
  if (kind == "qt-instance") return check_qt(doc, out_dir);
  if (kind == "nonsingularity-gadget")
    return check_nonsingularity(doc, out_dir);
  if (kind == "stability-gadget" || kind == "general")
    return check_stability(doc, out_dir, trials, seed);
  throw FormatError("cannot check documents of kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// simulate <instance.json> (--signal f | --random N | --certificate f)
//          [--samples S] [--horizon H] [--tol t] [--seed s] [--out dir]
// ---------------------------------------------------------------------------

DecayReport plain_report(const Trajectory& traj, const std::string& note) {
  DecayReport rep;
  rep.final_norm = traj.norms.back();
  for (std::size_t i = 0; i + 1 < traj.norms.size(); ++i)
    rep.max_norm_increase =
        std::max(rep.max_norm_increase, traj.norms[i + 1] - traj.norms[i]);
  const double initial = traj.norms.front();
  const double span = traj.times.back() - traj.times.front();
  if (span > 0 && initial > 0 && rep.final_norm > 0)
    rep.decay_exponent = -std::log(rep.final_norm / initial) / span;
  rep.monotone_within_tol = rep.max_norm_increase <= 0.0;
  rep.note = note;
  return rep;
}

int run_simulate(const std::string& instance_path,
                 const std::string& signal_path, std::size_t random_count,
                 const std::string& certificate_path, std::size_t samples,
                 double horizon, double tol, std::uint64_t seed,
                 const std::string& out_dir) {
  const int mode_count = (signal_path.empty() ? 0 : 1) +
                         (random_count > 0 ? 1 : 0) +
                         (certificate_path.empty() ? 0 : 1);
  if (mode_count != 1)
    throw FormatError(
        "choose exactly one of --signal, --random, --certificate");

  const Json doc = parse_json(read_file(instance_path));
  const PolytopeInstance inst = polytope_from_json(doc);
  const std::string hash = instance_hash(polytope_to_json(inst));
  const std::size_t k = inst.matrices.size();
  fs::create_directories(out_dir);
  Rng rng(seed);

  const bool certificate_mode = !certificate_path.empty();
  std::vector<std::pair<Eigen::VectorXd, SwitchingSignal>> runs;
  if (!signal_path.empty()) {
    const SwitchingSignal sig =
        signal_from_json(parse_json(read_file(signal_path)));
    sig.validate(k);
    runs.emplace_back(random_unit_vector(rng, inst.dim), sig);
  } else if (random_count > 0) {
    for (std::size_t i = 0; i < random_count; ++i) {
      SwitchingSignal sig = SwitchingSignal::random(rng, k, horizon, 32);
      runs.emplace_back(random_unit_vector(rng, inst.dim), std::move(sig));
    }
  } else {
    const SingularityCertificate cert =
        certificate_from_json(parse_json(read_file(certificate_path)));
    if (!cert.instance_sha256.empty() && cert.instance_sha256 != hash) {
      std::cout << "FAIL: certificate is bound to instance sha256 "
                << cert.instance_sha256 << " but this instance hashes to "
                << hash << "\n";
      return kPropertyFailure;
    }
    runs.push_back(stationary_certificate(cert, inst, horizon));
    std::cout << "stationary certificate verified against the inner "
                 "polytope; simulating the frozen trajectory\n";
  }

  // Monotonicity is only asserted when every vertex is exactly dissipative.
  bool dissipative = true;
  for (const auto& b : inst.matrices)
    dissipative = dissipative && is_negative_semidefinite(b + b.transpose());

  // Independent (signal, x0) pairs integrate in parallel; every output goes
  // to an index-addressed slot so artifacts are byte-identical per seed.
  std::vector<Trajectory> trajectories(runs.size());
  parallel_for(runs.size(), [&](std::size_t r) {
    trajectories[r] = simulate(inst, runs[r].second, runs[r].first, samples);
  });

  Json reports = Json::array();
  bool property_ok = true;
  double worst_final = 0.0, worst_increase = 0.0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const Trajectory& traj = trajectories[r];
    char name[48];
    std::snprintf(name, sizeof name, "trajectory_%03zu.csv", r % 1000);
    write_file_atomic((fs::path(out_dir) / name).string(),
                      trajectory_csv(traj));

    DecayReport rep;
    if (certificate_mode) {
      rep = plain_report(traj,
                         "stationary certificate run: trajectory should be "
                         "frozen at unit norm");
      const double drift = std::abs(traj.norms.back() - 1.0);
      double tail = 0.0;
      const std::size_t d = inst.dim / 2;
      for (const auto& x : traj.states)
        for (std::size_t i = d; i < inst.dim; ++i)
          tail = std::max(tail,
                          std::abs(x(static_cast<Eigen::Index>(i))));
      std::printf(
          "run %03zu: |final_norm - 1| = %.3g, max |tail component| = %.3g\n",
          r, drift, tail);
      if (drift > 1e-9 || tail > 1e-9) {
        std::cout << "FAIL: stationary trajectory drifted beyond 1e-9\n";
        property_ok = false;
      }
    } else if (dissipative) {
      rep = check_monotone_norm(traj, inst, tol);
      if (!rep.monotone_within_tol) {
        std::printf("FAIL: run %03zu norm increased by %.3g (tol %.3g)\n", r,
                    rep.max_norm_increase, tol);
        property_ok = false;
      }
    } else {
      rep = plain_report(
          traj, "vertices are not all dissipative; monotonicity not asserted");
    }
    worst_final = std::max(worst_final, rep.final_norm);
    worst_increase = std::max(worst_increase, rep.max_norm_increase);
    reports.push_back(report_to_json(rep));
  }

  Json summary;
  summary["kind"] = "decay-report";
  summary["instance_sha256"] = hash;
  summary["runs"] = std::move(reports);
  summary["worst_final_norm"] = worst_final;
  summary["worst_norm_increase"] = worst_increase;
  summary["samples_per_segment"] = samples;
  summary["seed"] = seed;
  emit(fs::path(out_dir) / "decay_report.json", summary);
  std::printf("%zu run(s): worst final norm %.17g, worst increase %.3g\n",
              runs.size(), worst_final, worst_increase);
  return property_ok ? kOk : kPropertyFailure;
}

// ---------------------------------------------------------------------------
// verify-gadgets [--seed s] [--trials N]
// ---------------------------------------------------------------------------

RatMatrix random_rat_matrix(Rng& rng, std::size_t n) {
  RatMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.rat(4, 4);
  return a;
}

PolytopeInstance companion_of(const RatMatrix& a) {
  PolytopeInstance inner;
  inner.dim = a.rows();
  inner.matrices = {a};
  return build_stability_gadget(inner);
}

bool spectrum_relation_holds(const RatMatrix& a, double tol) {
  const RatMatrix b = companion_of(a).matrices[0];
  const auto eigs = eigs_numeric(b);
  const auto svals = svals_numeric(a);
  for (const auto& lam : eigs) {
    double best = std::numeric_limits<double>::infinity();
    for (double s : svals)
      best = std::min(best, std::abs(lam * lam + lam +
                                     std::complex<double>(s * s, 0.0)));
    if (best > tol) return false;
  }
  return true;
}

int run_verify_gadgets(std::uint64_t seed, std::size_t trials) {
  bool all_ok = true;
  const auto report = [&](bool ok, const std::string& name,
                          const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << ": " << detail
              << "\n";
    all_ok = all_ok && ok;
  };

  // 1. Companion embedding turns nonsingularity into Hurwitz stability.
  {
    Rng rng(seed);
    std::size_t checked = 0, singular_cases = 0;
    bool ok = true;
    for (std::size_t t = 0; t < trials && ok; ++t) {
      const std::size_t n = 1 + rng.below(5);
      RatMatrix a = random_rat_matrix(rng, n);
      if (t % 5 == 0 && n > 1) {
        // force singularity: make the last row a multiple of the first
        const Rat c = rng.rat(3, 3);
        for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = c * a(0, j);
        ++singular_cases;
      }
      const bool nonsingular = !mat_determinant(a).is_zero();
      const bool hurwitz = is_hurwitz(companion_of(a).matrices[0]);
      ok = nonsingular == hurwitz;
      ++checked;
    }
    report(ok, "hurwitz-iff-nonsingular",
           std::to_string(checked) + " random matrices (" +
               std::to_string(singular_cases) +
               " forced singular), exact Routh-Hurwitz agreement");
  }

  // 2. Eigenvalues of the companion gadget pair with singular values of A
  //    through lambda^2 + lambda + s^2 = 0.
  {
    Rng rng(seed + 1);
    bool ok = true;
    std::size_t checked = 0;
    for (std::size_t t = 0; t < trials && ok; ++t) {
      const std::size_t n = 1 + rng.below(5);
      ok = spectrum_relation_holds(random_rat_matrix(rng, n), 1e-7);
      ++checked;
    }
    report(ok, "spectrum-relation",
           std::to_string(checked) +
               " gadgets, |lambda^2 + lambda + s^2| <= 1e-7 per eigenvalue");
  }

  // 3. Bordered-determinant identity, exact rational arithmetic.
  {
    bool ok = true;
    std::size_t points = 0;
    Rng rng(seed + 2);
    for (std::size_t t = 0; t < trials && ok; ++t) {
      const std::size_t n = 2 + rng.below(5);
      Graph g(n);
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (rng.unit() < 0.5) g.add_edge(i, j);
      const ThresholdLadder ladder = ThresholdLadder::for_size(n);
      const Rat tau =
          ladder.elements[1 + rng.below(ladder.elements.size() - 1)];
      ok = check_determinantal_identity(g, tau, 5, rng.next());
      points += n + 5;
    }
    report(ok, "determinantal-identity",
           "det X(p) * det M == 1 - p^T M p at " + std::to_string(points) +
               " exact points");
  }

  // 4. Perturbed quadratic maximum stays inside the sandwich
  //    [1 - 1/omega, 1 - 1/omega + 1/(n^2 + i*)].
  {
    bool ok = true;
    std::size_t checked = 0;
    Rng rng(seed + 3);
    for (std::size_t t = 0; t < trials && ok; ++t) {
      const std::size_t n = 2 + rng.below(5);
      Graph g(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (rng.unit() < 0.5) g.add_edge(i, j);
      const auto [istar, perturbed] =
          select_perturbation(adjacency_matrix(g));
      const Rat vstar = simplex_quadratic_extrema_exact(perturbed).max.value;
      const std::size_t omega = max_clique_exact(g).size;
      const Rat lo = Rat(1) - Rat(1, static_cast<long>(omega));
      const Rat hi = lo + Rat(1, static_cast<long>(n * n + istar));
      ok = vstar >= lo && vstar <= hi;
      ++checked;
    }
    report(ok, "sandwich-bounds",
           std::to_string(checked) +
               " random graphs, exact bounds on the perturbed maximum");
  }

  // 5. Support reduction: any convex combination of k matrices is rewritten
  //    over at most n^2 + 1 vertices with the same exact value.
  {
    bool ok = true;
    std::size_t checked = 0;
    Rng rng(seed + 4);
    for (std::size_t t = 0; t < trials && ok; ++t) {
      const std::size_t n = 1 + rng.below(3);
      const std::size_t cap = n * n + 1;
      const std::size_t k = cap + 1 + rng.below(cap);
      PolytopeInstance inst;
      inst.dim = n;
      for (std::size_t i = 0; i < k; ++i)
        inst.matrices.push_back(random_rat_matrix(rng, n));
      const SimplexPoint w{rng.simplex_rat(k)};
      const SimplexPoint reduced = caratheodory_reduce(inst, w);
      ok = reduced.support().size() <= cap &&
           inst.at(reduced.w) == inst.at(w.w);
      ++checked;
    }
    report(ok, "caratheodory-support",
           std::to_string(checked) +
               " reductions to at most n^2 + 1 active vertices, exact");
  }

  return all_ok ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact reduction chain: maximum clique -> quadratic threshold -> "
      "matrix-polytope nonsingularity -> Hurwitz stability, with switched "
      "system simulations"};
  app.require_subcommand(1);

  // reduce
  auto* reduce = app.add_subcommand(
      "reduce", "Build the instance chain from a DIMACS graph");
  std::string graph_path, tau_text = "1/2", out_dir = ".";
  reduce->add_option("graph", graph_path, "DIMACS graph file")->required();
  reduce->add_option("--tau", tau_text, "rational threshold in (0,1)");
  reduce->add_option("--out", out_dir, "output directory")->required();

  // clique
  auto* clique = app.add_subcommand(
      "clique", "Clique number by branch and bound, optionally cross-checked "
                "through the reduction");
  std::string clique_graph;
  bool via_reduction = false;
  std::size_t max_n = 12;
  clique->add_option("graph", clique_graph, "DIMACS graph file")->required();
  clique->add_flag("--via-reduction", via_reduction,
                   "also recover omega through the threshold-ladder oracle");
  clique->add_option("--max-n", max_n,
                     "size cap for the reduction oracle (default 12)");

  // check
  auto* check = app.add_subcommand(
      "check", "Decide an instance file and write certificates");
  std::string check_path, check_out = ".";
  std::size_t check_trials = 16;
  std::uint64_t check_seed = 0;
  check->add_option("instance", check_path, "instance JSON file")->required();
  check->add_option("--out", check_out, "directory for certificates");
  check->add_option("--trials", check_trials,
                    "search starts for general instances");
  check->add_option("--seed", check_seed, "search seed");

  // simulate
  auto* simulate = app.add_subcommand(
      "simulate", "Integrate switched trajectories and report norm decay");
  std::string sim_path, sim_signal, sim_cert, sim_out = ".";
  std::size_t sim_random = 0, sim_samples = 64;
  double sim_horizon = 1.0, sim_tol = 1e-8;
  std::uint64_t sim_seed = 0;
  simulate->add_option("instance", sim_path, "polytope JSON file")
      ->required();
  simulate->add_option("--signal", sim_signal, "switching-signal JSON file");
  simulate->add_option("--random", sim_random,
                       "number of random signals to draw");
  simulate->add_option("--certificate", sim_cert,
                       "singularity certificate: run its stationary "
                       "trajectory");
  simulate->add_option("--samples", sim_samples, "samples per segment");
  simulate->add_option("--horizon", sim_horizon,
                       "time horizon for --random/--certificate");
  simulate->add_option("--tol", sim_tol, "norm-increase tolerance");
  simulate->add_option("--seed", sim_seed, "signal/state seed");
  simulate->add_option("--out", sim_out, "output directory");

  // verify-gadgets
  auto* verify = app.add_subcommand(
      "verify-gadgets",
      "Randomized checks of the constructions behind the reduction");
  std::uint64_t vg_seed = 20260816;
  std::size_t vg_trials = 25;
  verify->add_option("--seed", vg_seed, "base seed");
  verify->add_option("--trials", vg_trials, "trials per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (reduce->parsed()) return run_reduce(graph_path, tau_text, out_dir);
    if (clique->parsed()) return run_clique(clique_graph, via_reduction, max_n);
    if (check->parsed())
      return run_check(check_path, check_out, check_trials, check_seed);
    if (simulate->parsed())
      return run_simulate(sim_path, sim_signal, sim_random, sim_cert,
                          sim_samples, sim_horizon, sim_tol, sim_seed,
                          sim_out);
    if (verify->parsed()) return run_verify_gadgets(vg_seed, vg_trials);
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const SizeCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "property failure: " << e.what() << "\n";
    return kPropertyFailure;
  }
  return kUsageError;
}
