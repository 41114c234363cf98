#include "pps/commands.hpp"

#include <algorithm>
#include <sstream>

#include "pps/elements.hpp"
#include "pps/error.hpp"
#include "pps/fell.hpp"
#include "pps/fock.hpp"
#include "pps/ideals.hpp"
#include "pps/toeplitz.hpp"

namespace pps {

std::string Report::render_text() const {
  std::string out;
  for (const std::string& l : text) out += l + "\n";
  return out;
}

std::string Report::render_machine() const {
  std::string out = "schema=1\ncommand=" + command + "\nexit=" + std::to_string(exit_code) + "\n";
  for (const auto& [k, v] : fields) out += k + "=" + v + "\n";
  return out;
}

namespace {

std::string deg(const GradedSystem& sys, ArrowId a) {
  return sys.name(a) + "(deg " + std::to_string(sys.degree(a)) + ")";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

std::string mask_fields(const GradedSystem& sys, const IdealMask& mask) {
  std::vector<std::string> names;
  for (VertexId v : mask.support()) names.push_back(sys.vertex_name(v));
  return join(names, ",");
}

std::size_t bounded(const GradedSystem& sys, const std::optional<std::size_t>& value,
                    const char* flag) {
  const std::size_t v = value.value_or(sys.cap());
  if (v > sys.cap()) {
    throw Error(ErrorKind::CapExceeded, std::string(flag) + " " + std::to_string(v) +
                                            " exceeds cap " + std::to_string(sys.cap()));
  }
  return v;
}

void header(Report& r, const SpecFile& spec, const GradedSystem& sys) {
  r.line("system \"" + spec.name + "\" (" + std::string(to_string(sys.mode())) + " mode, cap " +
         std::to_string(sys.cap()) + ", " + std::to_string(sys.vertex_count()) + " vertices, " +
         std::to_string(sys.arrow_count() - sys.vertex_count()) + " arrows of positive degree)");
  r.field("system", spec.name);
  r.field("mode", std::string(to_string(sys.mode())));
  r.field("cap", std::to_string(sys.cap()));
}

void status(Report& r, bool pass) {
  r.exit_code = pass ? kPass : kRefuted;
  r.field("status", pass ? "pass" : "refuted");
}

void cmd_validate(Report& r, const GradedSystem& sys) {
  const ValidationReport report = validate(sys);
  r.field("violations", std::to_string(report.violations.size()));
  for (std::size_t k = 0; k < report.violations.size(); ++k) {
    const Violation& v = report.violations[k];
    std::vector<std::string> names;
    for (ArrowId a : v.witness) names.push_back(sys.name(a));
    const std::string key = "violation." + std::to_string(k + 1);
    r.line("violation " + std::to_string(k + 1) + " [" + std::string(to_string(v.kind)) + "]: " +
           v.message);
    r.field(key + ".kind", std::string(to_string(v.kind)));
    r.field(key + ".witness", join(names, ","));
  }
  if (!report.ok()) {
    r.line("validate: FAIL (" + std::to_string(report.violations.size()) + " violations)");
    status(r, false);
    return;
  }
  for (std::size_t n = 1; n <= sys.cap(); ++n) {
    for (std::size_t m = 1; n + m <= sys.cap(); ++m) {
      const IsometryVerdict iso = check_isometry(sys, n, m);
      if (iso.ok) continue;
      const auto& w = *iso.witness;
      r.line("isometry fails at (n,m) = (" + std::to_string(n) + "," + std::to_string(m) +
             "): x=" + sys.name(w[0]) + " y=" + sys.name(w[1]) + " x'=" + sys.name(w[2]) +
             " y'=" + sys.name(w[3]));
      r.field("isometry", "fail");
      status(r, false);
      return;
    }
  }
  r.line("validate: ok (endpoints, injectivity, totality, associativity, units within cap " +
         std::to_string(sys.cap()) + ")");
  r.line("isometry: ok for all degree pairs n + m <= " + std::to_string(sys.cap()));
  r.field("isometry", "pass");
  status(r, true);
}

void cmd_pathcat(Report& r, const GradedSystem& sys) {
  const PathCategoryVerdict v = check_path_category(sys);
  std::vector<std::string> irr;
  std::vector<std::string> irr_names;
  for (ArrowId a : v.irreducibles) {
    irr.push_back(deg(sys, a));
    irr_names.push_back(sys.name(a));
  }
  r.line("irreducibles: " + (irr.empty() ? std::string("(none)") : join(irr, ", ")));
  r.field("irreducibles", join(irr_names, ","));
  if (v.is_path_category) {
    r.line("path category: yes (unique factorization verified up to degree " +
           std::to_string(v.cap) + ")");
    r.field("path_category", "true");
    status(r, true);
    return;
  }
  const DoubleFactorization& w = *v.witness;
  r.line("path category: NO");
  r.line("double factorization: " + deg(sys, w.arrow) + " = " + word_string(sys, w.first) + " = " +
         word_string(sys, w.second));
  r.field("path_category", "false");
  r.field("witness.arrow", sys.name(w.arrow));
  r.field("witness.first", word_string(sys, w.first));
  r.field("witness.second", word_string(sys, w.second));
  status(r, false);
}

void cmd_repcheck(Report& r, const GradedSystem& sys, std::size_t N) {
  r.field("trunc", std::to_string(N));
  const WeakRepReport weak = check_weak_representation(sys, N);
  if (!weak.ok) {
    const WeakRepFailure& f = *weak.failure;
    r.line("weak representation: FAIL in condition (" + std::to_string(f.condition) + ")");
    r.line("witness: x=" + deg(sys, f.x) + " y=" + deg(sys, f.y) + " basis=δ_" + deg(sys, f.basis));
    r.line("lhs: " + to_string(sys, f.lhs));
    r.line("rhs: " + to_string(sys, f.rhs));
    r.field("weak", "fail");
    r.field("weak.condition", std::to_string(f.condition));
    r.field("witness.x", sys.name(f.x));
    r.field("witness.y", sys.name(f.y));
    r.field("witness.basis", sys.name(f.basis));
    r.field("witness.lhs", to_string(sys, f.lhs));
    r.field("witness.rhs", to_string(sys, f.rhs));
    status(r, false);
    return;
  }
  r.line("weak representation: ok (degrees <= " + std::to_string(N) + ")");
  r.field("weak", "pass");
  const RepConditionVerdict v = check_representation_condition(sys, N);
  if (v.ok) {
    r.line("representation condition: ok (all 0 < n < m, k + m <= " + std::to_string(N) + ")");
    r.field("representation", "pass");
    status(r, true);
    return;
  }
  const RepWitness& w = *v.witness;
  r.line("representation condition: REFUTED");
  r.line("witness: n=" + std::to_string(w.n) + " x=" + deg(sys, w.x) + " m=" + std::to_string(w.m) +
         " y=" + deg(sys, w.y) + " k=" + std::to_string(w.k) + " basis=δ_" + deg(sys, w.basis));
  r.line("lhs: S_n(x)* S_m(y) δ_" + sys.name(w.basis) + " = " + to_string(sys, w.lhs));
  r.line("rhs: S_{m-n}(S_n(x)* y) δ_" + sys.name(w.basis) + " = " + to_string(sys, w.rhs));
  r.field("representation", "refuted");
  r.field("witness.n", std::to_string(w.n));
  r.field("witness.x", sys.name(w.x));
  r.field("witness.m", std::to_string(w.m));
  r.field("witness.y", sys.name(w.y));
  r.field("witness.k", std::to_string(w.k));
  r.field("witness.basis", sys.name(w.basis));
  r.field("witness.lhs", to_string(sys, w.lhs));
  r.field("witness.rhs", to_string(sys, w.rhs));
  status(r, false);
}

void cmd_fock(Report& r, const GradedSystem& sys, std::size_t N, const std::string& element) {
  if (element.empty()) throw Error(ErrorKind::UnknownArrow, "--element is required");
  const ArrowId x = sys.arrow_id(element);
  const BlockMap S = creation_operator(sys, N, Element::delta(sys, x));
  r.field("trunc", std::to_string(N));
  r.field("element", element);
  r.field("shift", std::to_string(S.shift()));
  r.line("S_" + std::to_string(sys.degree(x)) + "(δ_" + element + ") on degrees <= " +
         std::to_string(N - sys.degree(x)) + ":");
  std::size_t count = 0;
  for (std::size_t k = 0; k + sys.degree(x) <= N; ++k) {
    for (ArrowId y : sys.of_degree(k)) {
      const FockVector out = S.apply(basis_vector(y));
      if (out.empty()) continue;
      ++count;
      r.line("  δ_" + sys.name(y) + " ↦ " + to_string(sys, out));
      r.field("creation." + sys.name(y), to_string(sys, out));
    }
  }
  if (count == 0) r.line("  (zero operator)");
  const BlockMap A = S.adjoint();
  r.line("adjoint:");
  count = 0;
  for (std::size_t k = sys.degree(x); k <= N; ++k) {
    for (ArrowId t : sys.of_degree(k)) {
      const FockVector out = A.apply(basis_vector(t));
      if (out.empty()) continue;
      ++count;
      r.line("  δ_" + sys.name(t) + " ↦ " + to_string(sys, out));
      r.field("annihilation." + sys.name(t), to_string(sys, out));
    }
  }
  if (count == 0) r.line("  (zero operator)");
  status(r, true);
}

Generator parse_generator(const GradedSystem& sys, const std::string& text, const char* flag) {
  const std::size_t bar = text.find('|');
  if (bar == std::string::npos || text.find('|', bar + 1) != std::string::npos) {
    throw Error(ErrorKind::ParseError, std::string(flag) + " expects 'alpha|beta', got '" + text + "'");
  }
  return {sys.arrow_id(text.substr(0, bar)), sys.arrow_id(text.substr(bar + 1))};
}

void cmd_mult(Report& r, const GradedSystem& sys, std::size_t N, const CommandOptions& o) {
  const ToeplitzAlgebra algebra(sys);
  const Generator g = parse_generator(sys, o.lhs, "--lhs");
  const Generator h = parse_generator(sys, o.rhs, "--rhs");
  const GeneratorResult X = make_generator(sys, g.alpha, g.beta);
  const GeneratorResult Y = make_generator(sys, h.alpha, h.beta);
  for (const auto* gr : {&X, &Y}) {
    if (gr->source_mismatch) {
      r.line("note: a factor has s(alpha) != s(beta) and is the zero element");
    }
  }
  const ToeplitzElement P = algebra.multiply(X.element, Y.element);
  const std::string lhs_text = "T[" + sys.name(g.alpha) + "," + sys.name(g.beta) + "]";
  const std::string rhs_text = "T[" + sys.name(h.alpha) + "," + sys.name(h.beta) + "]";
  r.line(lhs_text + "·" + rhs_text + " = " + to_string(sys, P));
  r.field("product", to_string(sys, P));
  r.field("gauge_degree",
          std::to_string(gauge_degree(sys, g) + gauge_degree(sys, h)));

  // the truncated product is exact on source degrees where no factor leaves the truncation
  const std::size_t maxdeg = std::max({sys.degree(g.alpha), sys.degree(g.beta),
                                       sys.degree(h.alpha), sys.degree(h.beta)});
  r.field("trunc", std::to_string(N));
  if (maxdeg > N) {
    r.line("oracle: skipped (generators exceed truncation " + std::to_string(N) + ")");
    r.field("oracle", "skipped");
    status(r, true);
    return;
  }
  const std::size_t exact = N - maxdeg;
  const std::size_t cols = sys.count_up_to_degree(exact);
  auto keep = [&](std::size_t c) { return c < cols; };
  const SparseMatrix lhs = evaluate_on_fock(sys, P, N).restrict_columns(keep);
  const SparseMatrix rhs =
      (evaluate_on_fock(sys, X.element, N) * evaluate_on_fock(sys, Y.element, N)).restrict_columns(keep);
  const bool ok = lhs == rhs;
  r.line(std::string("oracle: Fock evaluation at N=") + std::to_string(N) + " " +
         (ok ? "agrees" : "DISAGREES") + " on source degrees <= " + std::to_string(exact));
  r.field("oracle", ok ? "pass" : "fail");
  status(r, ok);
}

void cmd_ideals(Report& r, const GradedSystem& sys) {
  const std::vector<IdealMask> masks = enumerate_invariant(sys);
  r.line("invariant ideals (" + std::to_string(masks.size()) + "):");
  r.field("count", std::to_string(masks.size()));
  bool all_valid = true;
  for (std::size_t k = 0; k < masks.size(); ++k) {
    const GradedSystem q = quotient(sys, masks[k]);
    const bool valid = validate(q).ok();
    all_valid = all_valid && valid;
    r.line("  " + to_string(sys, masks[k]) + "  quotient: " + (valid ? "valid" : "INVALID"));
    r.field("ideal." + std::to_string(k + 1), mask_fields(sys, masks[k]));
  }
  status(r, all_valid);
}

void ck_lines(Report& r, const GradedSystem& sys, const CkReport& ck, bool verbose) {
  for (const auto& [v, m] : ck.vertices) {
    const std::string key = "ck." + sys.vertex_name(v);
    if (verbose) {
      const FixedPointElement X = cuntz_krieger_element(sys, v);
      r.line("X_" + sys.vertex_name(v) + " = " + to_string(sys, X.to_toeplitz(sys)));
    }
    if (m.verified) {
      r.line("CK relation at " + sys.vertex_name(v) + ": Verified(" + std::to_string(m.horizon) +
             ") — verified up to degree " + std::to_string(m.horizon));
      r.field(key, "verified");
    } else {
      r.line("CK relation at " + sys.vertex_name(v) + ": Refuted at degree " +
             std::to_string(m.degree) + ", basis δ_" + sys.name(m.basis) + " ↦ " +
             m.coefficient.to_string() + "·δ_" + sys.name(m.output));
      r.field(key, "refuted");
      r.field(key + ".degree", std::to_string(m.degree));
      r.field(key + ".basis", sys.name(m.basis));
      r.field(key + ".output", sys.name(m.output));
    }
  }
}

void cmd_katsura(Report& r, const GradedSystem& sys, std::size_t L) {
  const IdealMask k = katsura_ideal(sys);
  r.line("katsura ideal K⊥ = " + to_string(sys, k));
  r.field("katsura", mask_fields(sys, k));
  r.field("horizon", std::to_string(L));
  const CkReport ck = ck_relations(sys, L);
  ck_lines(r, sys, ck, false);
  status(r, ck.all_verified());
}

void cmd_ck(Report& r, const GradedSystem& sys, std::size_t L) {
  const CkReport ck = ck_relations(sys, L);
  r.line("regular vertices K⊥ = " + to_string(sys, ck.katsura) + ", I = {}, J = K⊥");
  r.field("katsura", mask_fields(sys, ck.katsura));
  r.field("horizon", std::to_string(L));
  if (ck.vertices.empty()) r.line("(no regular vertices)");
  ck_lines(r, sys, ck, true);
  status(r, ck.all_verified());
}

void cmd_fell(Report& r, const GradedSystem& sys, std::size_t D) {
  const ExtendVerdict v = check_extendable(sys);
  if (!v.extendable) {
    std::vector<std::string> names;
    for (ArrowId a : v.arrows) names.push_back(deg(sys, a));
    r.line("extendable: NO");
    r.line("witness: (n,m) = (" + std::to_string(v.n) + "," + std::to_string(v.m) + "), " +
           std::string(to_string(v.condition)) + " condition, arrows " + join(names, ", "));
    r.field("extendable", "false");
    r.field("witness.n", std::to_string(v.n));
    r.field("witness.m", std::to_string(v.m));
    r.field("witness.condition", std::string(to_string(v.condition)));
    std::vector<std::string> plain;
    for (ArrowId a : v.arrows) plain.push_back(sys.name(a));
    r.field("witness.arrows", join(plain, ","));
    status(r, false);
    return;
  }
  r.line("extendable: yes (both inclusion families hold up to degree " + std::to_string(sys.cap()) +
         ")");
  r.field("extendable", "true");
  r.field("degree", std::to_string(D));
  const FellBundle bundle = build_fell(sys, D);
  r.line("fell bundle: " + std::to_string(bundle.basis().size()) + " basis vectors, " +
         std::to_string(bundle.table().size()) + " non-zero products (|degree| <= " +
         std::to_string(D) + ")");
  const FellAxiomReport axioms = verify_fell_axioms(bundle);
  if (!axioms.ok) {
    std::vector<std::string> names;
    for (const FellBasis& b : axioms.witness) names.push_back(bundle.name(b));
    r.line("axioms: FAIL (" + axioms.failed_axiom + ": " + axioms.detail + ") at " +
           join(names, ", "));
    r.field("axioms", "fail");
    r.field("axioms.failed", axioms.failed_axiom);
    r.field("axioms.witness", join(names, ","));
    status(r, false);
    return;
  }
  r.line("axioms: ok (grading, involution, associativity, positivity, restriction)");
  r.field("axioms", "pass");
  const IdealMask cov = fell_covariance_ideal(bundle);
  const IdealMask kat = katsura_ideal(sys);
  r.line("covariance ideal = " + to_string(sys, cov) + ", katsura ideal = " + to_string(sys, kat) +
         (cov == kat ? " (equal)" : " (DIFFER)"));
  r.field("covariance", mask_fields(sys, cov));
  r.field("katsura", mask_fields(sys, kat));
  status(r, cov == kat);
}

void cmd_jmax(Report& r, const GradedSystem& sys) {
  const JmaxResult j = jmax_global(sys);
  if (j.global) {
    r.line("global: yes (every μ_{n,m} with n + m <= " + std::to_string(sys.cap()) +
           " is surjective)");
    r.line("J_max = " + to_string(sys, j.mask));
    r.field("global", "true");
    r.field("jmax", mask_fields(sys, j.mask));
    status(r, true);
    return;
  }
  r.line("global: NO");
  r.line("witness: " + deg(sys, *j.witness) + " is not in the image of μ_{" + std::to_string(j.n) +
         "," + std::to_string(j.m) + "}");
  r.field("global", "false");
  r.field("witness.arrow", sys.name(*j.witness));
  r.field("witness.n", std::to_string(j.n));
  r.field("witness.m", std::to_string(j.m));
  status(r, false);
}

}  // namespace

Report run_command(const std::string& command, const SpecFile& spec, const CommandOptions& o) {
  Report r;
  r.command = command;
  try {
    const GradedSystem sys = build_system(spec);
    header(r, spec, sys);
    if (command == "validate") {
      cmd_validate(r, sys);
    } else if (command == "pathcat") {
      cmd_pathcat(r, sys);
    } else if (command == "repcheck") {
      cmd_repcheck(r, sys, bounded(sys, o.trunc, "--trunc"));
    } else if (command == "fock") {
      cmd_fock(r, sys, bounded(sys, o.trunc, "--trunc"), o.element);
    } else if (command == "mult") {
      cmd_mult(r, sys, bounded(sys, o.trunc, "--trunc"), o);
    } else if (command == "ideals") {
      cmd_ideals(r, sys);
    } else if (command == "katsura") {
      cmd_katsura(r, sys, bounded(sys, o.horizon, "--horizon"));
    } else if (command == "ck") {
      cmd_ck(r, sys, bounded(sys, o.horizon, "--horizon"));
    } else if (command == "fell") {
      cmd_fell(r, sys, bounded(sys, o.degree, "--degree"));
    } else if (command == "jmax") {
      cmd_jmax(r, sys);
    } else {
      throw Error(ErrorKind::ParseError, "unknown command '" + command + "'");
    }
  } catch (const Error& e) {
    r.exit_code = kInputError;
    r.line(std::string("error: ") + e.what());
    r.field("status", "error");
    r.field("error", std::string(to_string(e.kind())));
    r.field("message", e.what());
  }
  return r;
}

}  // namespace pps
