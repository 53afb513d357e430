#include "rsthl/verify/suite.hpp"

#include <sstream>

#include "rsthl/associated/associated.hpp"
#include "rsthl/error.hpp"

namespace rsthl {

namespace {

// Shared state of one run; each stage fills what the next one needs.
struct Run {
  const ModelFile& model;
  ACBMStructure s;
  Connection<Scalar> conn;
  CurvatureTensor<Scalar> R_bar;
  CurvaturePair pair;
  std::optional<SubmanifoldFrame> frame;
  Scalar mu;
  InducedObjects obj;
  UmbilicityReport umb;
  CurvatureTensor<Scalar> R;
  AssociatedFrame af;
  TildeCurvature tc;
};

bool all_pass(const std::vector<CheckEntry>& entries, std::size_t from) {
  for (std::size_t i = from; i < entries.size(); ++i)
    if (entries[i].failed()) return false;
  return true;
}

std::string first_failure(const std::vector<CheckEntry>& entries, std::size_t from) {
  for (std::size_t i = from; i < entries.size(); ++i)
    if (entries[i].failed()) return entries[i].name;
  return {};
}

void append(std::vector<CheckEntry>& out, const std::vector<CheckEntry>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

CheckEntry error_entry(const std::string& name, const std::string& anchor, const Error& e) {
  return make_entry(name, anchor, false, e.what());
}

bool ambient_stage(Run& run, std::vector<CheckEntry>& out) {
  const std::size_t start = out.size();
  const LieAlgebra<Scalar>& alg = run.model.algebra;
  out.push_back(validate_lie_algebra(alg));
  if (out.back().failed()) return false;
  out.push_back(validate_acbm(run.s));
  if (out.back().failed()) return false;
  try {
    run.conn = levi_civita(alg, run.s.metric);
  } catch (const Error& e) {
    out.push_back(error_entry("ambient.levi-civita", "plumbing", e));
    return false;
  }
  out.push_back(residual_entry("ambient.levi-civita-torsion", "plumbing", torsion(run.conn, alg)));
  out.push_back(residual_entry("ambient.levi-civita-metric", "plumbing", metric_derivative(run.conn, run.s.metric)));
  out.push_back(residual_entry("ambient.f0", "f0-class", fundamental_tensor(run.s, run.conn)));
  try {
    const Connection<Scalar> tilde = levi_civita(alg, associated_metric(run.s));
    out.push_back(
        residual_entry("ambient.connections-coincide", "f0-class", tilde.coefficients - run.conn.coefficients));
  } catch (const Error& e) {
    out.push_back(error_entry("ambient.connections-coincide", "f0-class", e));
  }

  run.R_bar = curvature(run.conn, alg);
  out.push_back(residual_entry("ambient.bianchi", "plumbing", bianchi_residual(run.R_bar)));
  const QuadrilinearForm<Scalar> R4 = lower(run.R_bar, run.s.metric);
  {
    const auto sym = pair_symmetry_residuals(R4);
    out.push_back(residual_entry("ambient.curvature-symmetries", "plumbing", sym[0] + sym[1] + sym[2]));
  }
  try {
    const TotallyRealSection sec = find_totally_real_section(run.s);
    run.pair = fit_curvature_pair(run.s, R4);
    const QuadrilinearForm<Scalar> residual = constant_curvature_residual(run.s, R4, run.pair);
    CheckEntry e = residual_entry("ambient.constant-totally-real-curvature", "constant-totally-real-curvature",
                                  residual);
    std::ostringstream os;
    os << "nu = " << run.pair.nu << ", nu~ = " << run.pair.nu_tilde << " on section ("
       << alg.frame.label(static_cast<std::size_t>(sec.first)) << ","
       << alg.frame.label(static_cast<std::size_t>(sec.second)) << ")";
    e.detail = e.passed() ? os.str() : os.str() + "; " + e.detail;
    out.push_back(e);
  } catch (const Error& e) {
    out.push_back(error_entry("ambient.constant-totally-real-curvature", "constant-totally-real-curvature", e));
  }
  if (run.model.name == "example47") out.push_back(example47_signature_finding(alg));
  return all_pass(out, start);
}

bool submanifold_stage(Run& run, std::vector<CheckEntry>& out) {
  const std::size_t start = out.size();
  try {
    run.frame = SubmanifoldFrame::build(run.model.algebra, run.s.metric, run.model.submanifold);
  } catch (const Error& e) {
    out.push_back(error_entry("lightlike.frame", "half-lightlike-decomposition", e));
    return false;
  }
  out.push_back(validate_frame(run.model.algebra, run.s.metric, run.model.submanifold));
  const SubmanifoldFrame& f = *run.frame;
  try {
    AscreenCertificate cert = certify_ascreen_rsthl(f, run.s);
    run.mu = cert.mu;
    out.push_back(make_entry("rsthl.certificate", "ascreen-rsthl-identities", true, "mu = " + cert.mu.to_string()));
    append(out, cert.entries);
  } catch (const Error& e) {
    out.push_back(error_entry("rsthl.certificate", "ascreen-rsthl-identities", e));
    return false;
  }
  try {
    run.obj = gauss_weingarten(f, run.conn);
  } catch (const Error& e) {
    out.push_back(error_entry("induced.decomposition", "gauss-weingarten", e));
    return false;
  }
  append(out, induced_structure_checks(f, run.obj));
  append(out, ascreen_f0_checks(f, run.s, run.obj, run.mu));

  run.umb = umbilicity(f, run.obj);
  {
    std::ostringstream os;
    auto opt = [&](const char* name, const std::optional<Scalar>& v) {
      os << name << " = " << (v ? v->to_string() : std::string("none")) << "; ";
    };
    opt("beta", run.umb.beta);
    opt("delta", run.umb.delta);
    opt("gamma", run.umb.gamma);
    os << "totally geodesic: " << (run.umb.totally_geodesic ? "yes" : "no")
       << ", proper totally umbilical: " << (run.umb.proper_totally_umbilical ? "yes" : "no")
       << ", screen totally geodesic: " << (run.umb.screen_totally_geodesic ? "yes" : "no")
       << ", screen proper umbilical: " << (run.umb.screen_proper_umbilical ? "yes" : "no");
    out.push_back(make_entry("umbilic.report", "screen-umbilical", true, os.str()));
  }
  if (run.umb.gamma) append(out, umbilicity_checks(f, run.obj, run.umb, run.mu));

  run.R = induced_curvature(f, run.obj);
  const BilinearForm<Scalar> ric = ricci(run.R);
  out.push_back(residual_entry("induced.ricci-symmetric", "induced-ricci", BilinearForm<Scalar>(ric - ric.transpose())));
  append(out, curvature_residuals(f, run.s, run.obj, run.umb, run.R_bar, run.R, run.pair, run.mu));

  try {
    run.af = build_associated(f, run.s, run.obj, run.conn, run.mu);
    out.push_back(make_entry("associated.cross-check", "associated-normal-frame", true,
                             "relation, ambient split and Koszul connection agree"));
  } catch (const Error& e) {
    out.push_back(error_entry("associated.cross-check", "associated-normal-frame", e));
    return false;
  }
  append(out, associated_checks(f, run.s, run.af, run.conn));
  run.tc = tilde_curvature(f, run.af);
  append(out, tilde_curvature_ricci(f, run.s, run.obj, run.umb, run.af, run.tc, run.R, run.pair, run.mu));
  return all_pass(out, start);
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "ambient") return Suite::Ambient;
  if (name == "submanifold") return Suite::Submanifold;
  if (name == "theorem46") return Suite::Equivalence;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

bool CheckReport::passed() const {
  for (const auto& e : entries)
    if (e.failed()) return false;
  return true;
}

const CheckEntry* CheckReport::find(std::string_view name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

CheckReport run_suite(const ModelFile& model, Suite suite) {
  Run run{model, model.structure, {}, {}, {}, std::nullopt, {}, {}, {}, {}, {}, {}};
  CheckReport report;
  std::vector<CheckEntry> scratch;
  const bool want_ambient = suite == Suite::Ambient || suite == Suite::All;
  const bool want_sub = suite == Suite::Submanifold || suite == Suite::All;
  const bool want_equivalence = suite == Suite::Equivalence || suite == Suite::All;

  auto& ambient_out = want_ambient ? report.entries : scratch;
  std::size_t mark = ambient_out.size();
  if (!ambient_stage(run, ambient_out)) {
    const std::string reason = "ambient check failed: " + first_failure(ambient_out, mark);
    if (!want_ambient) report.entries.push_back(make_entry("stage.ambient", "plumbing", false, reason));
    if (want_sub) report.entries.push_back(skipped_entry("stage.submanifold", "plumbing", reason));
    if (want_equivalence) report.entries.push_back(skipped_entry("stage.equivalence", "plumbing", reason));
    return report;
  }
  if (suite == Suite::Ambient) return report;

  auto& sub_out = want_sub ? report.entries : scratch;
  mark = sub_out.size();
  if (!submanifold_stage(run, sub_out)) {
    const std::string reason = "submanifold check failed: " + first_failure(sub_out, mark);
    if (!want_sub) report.entries.push_back(make_entry("stage.submanifold", "plumbing", false, reason));
    if (want_equivalence) report.entries.push_back(skipped_entry("stage.equivalence", "plumbing", reason));
    return report;
  }
  if (want_equivalence)
    append(report.entries,
           equivalence_entries(*run.frame, run.s, run.umb, run.R, run.af, run.tc, run.pair, run.mu));
  return report;
}

nlohmann::json report_to_json(const CheckReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries)
    entries.push_back({{"name", e.name},
                       {"anchor", e.anchor},
                       {"status", to_string(e.status)},
                       {"residual_zero", e.residual_zero},
                       {"detail", e.detail}});
  return {{"verdict", report.passed() ? "pass" : "fail"}, {"entries", entries}};
}

std::string report_to_text(const CheckReport& report) {
  std::ostringstream os;
  for (const auto& e : report.entries) {
    os << (e.passed() ? "PASS " : e.failed() ? "FAIL " : "SKIP ") << e.name << " [" << e.anchor << "]";
    if (!e.detail.empty()) os << "  " << e.detail;
    os << "\n";
  }
  os << "verdict: " << (report.passed() ? "pass" : "fail") << " (" << report.entries.size() << " entries)\n";
  return os.str();
}

Connection<Scalar> example47_reference_connection() {
  DenseTensor<Scalar, 3> c(5);
  // nabla_{X2}: X1 -> 2X4, X2 -> -2X3, X3 -> -2X2, X4 -> 2X1
  c(1, 0, 3) = Scalar(2);
  c(1, 1, 2) = Scalar(-2);
  c(1, 2, 1) = Scalar(-2);
  c(1, 3, 0) = Scalar(2);
  // nabla_{X4}: X1 -> -2X2, X2 -> 2X1, X3 -> -2X4, X4 -> 2X3
  c(3, 0, 1) = Scalar(-2);
  c(3, 1, 0) = Scalar(2);
  c(3, 2, 3) = Scalar(-2);
  c(3, 3, 2) = Scalar(2);
  return Connection<Scalar>(std::move(c));
}

CheckEntry example47_signature_finding(const LieAlgebra<Scalar>& algebra) {
  const Connection<Scalar> reference = example47_reference_connection();
  const bool paired = levi_civita(algebra, example47_metric(false)) == reference;
  const bool alternating = levi_civita(algebra, example47_metric(true)) == reference;
  std::ostringstream os;
  os << "diag(1,1,-1,-1): " << (paired ? "reproduces" : "does not reproduce")
     << " the reference connection; diag(1,-1,1,-1): " << (alternating ? "reproduces" : "does not reproduce") << " it";
  return make_entry("finding.example-metric-signature", "example-metric-signature", paired && !alternating, os.str());
}

}  // namespace rsthl
