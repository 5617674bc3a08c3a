// Command-line front end: parses algebra files and runs the library's
// decision and computation pipelines, emitting deterministic reports.
// Exit codes: 0 success, 1 negative mathematical decision, 2 error.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "milnor/curvature.hpp"
#include "milnor/frame_existence.hpp"
#include "milnor/input.hpp"
#include "milnor/metric.hpp"
#include "milnor/milnor_frame.hpp"
#include "milnor/report.hpp"
#include "milnor/soliton.hpp"

namespace {

using namespace milnor;

struct Options {
  std::string file;
  bool json = false;
  double tol = 1e-9;
  bool exact = false;
};

int emit_error(const std::string& command, bool json, const std::string& message) {
  if (json) {
    OrderedJson doc = OrderedJson::object();
    doc["command"] = command;
    doc["error"] = message;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cerr << "error: " << message << "\n";
  }
  return 2;
}

void emit(const Report& r, bool json) {
  std::cout << (json ? render_json(r) : render_text(r));
}

OrderedJson echo_inputs(const AlgebraFile& f) {
  OrderedJson in = OrderedJson::object();
  in["dim"] = f.dim;
  if (f.milnor) {
    in["source"] = "milnor";
    in["lambda"] = json_vector(f.milnor->lambda);
    if (f.milnor->sigma) {
      OrderedJson s = OrderedJson::array();
      for (int image : *f.milnor->sigma) s.push_back(image + 1);
      in["sigma"] = s;
    }
  } else {
    in["source"] = "bracket";
    in["entries"] = static_cast<int>(f.brackets->entries().size());
  }
  in["metric"] = f.gram ? "explicit" : "default-identity";
  return in;
}

OrderedJson json_signature(const Signature& s) {
  OrderedJson j = OrderedJson::object();
  j["negative"] = s.negative;
  j["zero"] = s.zero;
  j["positive"] = s.positive;
  return j;
}

// ---- validate ----

int cmd_validate(const AlgebraFile& f, const Options& opt) {
  LieAlgebra g = f.build();
  Report r;
  r.command = "validate";
  r.inputs = echo_inputs(f);
  r.warnings = f.warnings;

  std::vector<JacobiDefect> defects = jacobi_defect(g);
  r.results["jacobi_satisfied"] = defects.empty();
  OrderedJson dj = OrderedJson::array();
  for (const JacobiDefect& d : defects) {
    OrderedJson e = OrderedJson::object();
    e["i"] = d.i + 1;
    e["j"] = d.j + 1;
    e["k"] = d.k + 1;
    e["defect"] = json_vector(d.defect);
    dj.push_back(std::move(e));
  }
  r.results["jacobi_defects"] = dj;

  bool unimodular = is_unimodular(g);
  r.results["unimodular"] = unimodular;

  std::string condition = "not_applicable";
  OrderedJson violations = OrderedJson::array();
  if (f.milnor && f.milnor->has_default_sigma() && f.dim >= 4) {
    std::vector<int> bad = adjacent_product_check(*f.milnor);
    condition = bad.empty() ? "satisfied" : "violated";
    for (int i : bad) violations.push_back(i + 1);
  }
  r.results["milnor_condition"] = condition;
  r.results["milnor_condition_violations"] = violations;

  emit(r, opt.json);
  bool negative = !defects.empty() || !unimodular || condition == "violated";
  return negative ? 1 : 0;
}

// ---- decompose ----

const char* kind_name(SummandKind k) {
  switch (k) {
    case SummandKind::h3: return "h3";
    case SummandKind::h4: return "h4";
    default: return "abelian";
  }
}

int cmd_decompose(const AlgebraFile& f, const Options& opt) {
  if (!f.milnor) return emit_error("decompose", opt.json, "decompose requires milnor input");
  if (!f.milnor->has_default_sigma())
    return emit_error("decompose", opt.json, "decompose requires the default cyclic sigma");
  Report r;
  r.command = "decompose";
  r.inputs = echo_inputs(f);
  r.warnings = f.warnings;

  DecomposeResult res = decompose(*f.milnor);
  r.results["three_dim_general"] = res.three_dim_general;
  OrderedJson blocks = OrderedJson::array();
  if (!res.three_dim_general) {
    for (const Summand& s : res.decomposition.summands) {
      OrderedJson b = OrderedJson::object();
      b["kind"] = kind_name(s.kind);
      OrderedJson idx = OrderedJson::array();
      for (int i : s.indices) idx.push_back(i + 1);
      b["indices"] = idx;
      blocks.push_back(std::move(b));
    }
  }
  r.results["blocks"] = blocks;
  if (!res.three_dim_general) {
    r.results["step"] = res.step;
    r.results["normalized_lambda"] = json_vector(normalize(*f.milnor).data.lambda);
  }
  emit(r, opt.json);
  return res.three_dim_general ? 1 : 0;
}

// ---- shared geometry plumbing ----

MetricLieAlgebra metric_algebra(const AlgebraFile& f) {
  return MetricLieAlgebra(f.build(), InnerProduct(f.gram_or_identity()));
}

// ---- ricci / sectional ----

int cmd_ricci(const AlgebraFile& f, const Options& opt) {
  MetricLieAlgebra m = metric_algebra(f);
  Report r;
  r.command = "ricci";
  r.inputs = echo_inputs(f);
  r.warnings = f.warnings;

  OrthonormalFrame frame = orthonormal_frame(m, opt.tol);
  if (is_exact(frame)) {
    const ExactFrame& ef = std::get<ExactFrame>(frame);
    QMat ric = ricci_orthonormal(ef.constants, killing_in_frame(m.algebra, ef.vectors));
    r.results["ricci"] = json_matrix(ric);
    r.results["signature"] = json_signature(ricci_signature(ric));
  } else {
    if (opt.exact)
      return emit_error("ricci", opt.json,
                        "orthonormalization needs irrational square roots; --exact forbids the "
                        "float fallback");
    const FloatFrame& ff = std::get<FloatFrame>(frame);
    r.mode = "float";
    DMat ric = ricci_orthonormal(ff.constants, killing_in_frame(m.algebra, ff.vectors));
    r.results["ricci"] = json_matrix(ric);
    r.results["signature"] = json_signature(ricci_signature(ric, opt.tol));
  }
  emit(r, opt.json);
  return 0;
}

int cmd_sectional(const AlgebraFile& f, const Options& opt) {
  MetricLieAlgebra m = metric_algebra(f);
  Report r;
  r.command = "sectional";
  r.inputs = echo_inputs(f);
  r.warnings = f.warnings;

  OrthonormalFrame frame = orthonormal_frame(m, opt.tol);
  if (is_exact(frame)) {
    r.results["table"] = json_matrix(sectional_table(std::get<ExactFrame>(frame).constants));
  } else {
    if (opt.exact)
      return emit_error("sectional", opt.json,
                        "orthonormalization needs irrational square roots; --exact forbids the "
                        "float fallback");
    r.mode = "float";
    r.results["table"] = json_matrix(sectional_table(std::get<FloatFrame>(frame).constants));
  }
  emit(r, opt.json);
  return 0;
}

// ---- soliton ----

int cmd_soliton(const AlgebraFile& f, const Options& opt) {
  MetricLieAlgebra m = metric_algebra(f);
  const LieAlgebra& g = m.algebra;
  if (!lower_central_series(g).nilpotent)
    return emit_error("soliton", opt.json, "the nilsoliton test requires a nilpotent algebra");
  Report r;
  r.command = "soliton";
  r.inputs = echo_inputs(f);
  r.warnings = f.warnings;

  int n = g.dim();
  r.results["derivation_space_dimension"] = static_cast<int>(derivation_space(g).size());

  bool is_soliton = false;
  OrthonormalFrame frame = orthonormal_frame(m, opt.tol);
  if (is_exact(frame)) {
    const ExactFrame& ef = std::get<ExactFrame>(frame);
    QMat fmat(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) fmat(i, j) = ef.vectors[j][i];
    LieAlgebra frame_alg = change_of_basis(g, fmat);
    QMat ric = ricci_orthonormal(ef.constants, killing_in_frame(g, ef.vectors));
    SolitonCertificate cert = nilsoliton_solve(ric, frame_alg);
    // Transport the derivation back to the declared basis; the frame is
    // orthonormal, so the inverse of its column matrix is F^T G.
    QMat d_declared = fmat * cert.d * fmat.transpose() * m.metric.gram();
    is_soliton = cert.is_soliton;
    r.results["is_soliton"] = cert.is_soliton;
    r.results["c"] = json_rational(cert.c);
    r.results["derivation"] = json_matrix(d_declared);
    r.results["residual"] = json_rational(cert.residual);
  } else {
    if (opt.exact)
      return emit_error("soliton", opt.json,
                        "orthonormalization needs irrational square roots; --exact forbids the "
                        "float fallback");
    const FloatFrame& ff = std::get<FloatFrame>(frame);
    r.mode = "float";
    DMat ric = ricci_orthonormal(ff.constants, killing_in_frame(g, ff.vectors));
    DMat fmat(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) fmat(i, j) = ff.vectors[j][i];
    DMat endo = fmat * ric * fmat.transpose() * to_double(m.metric.gram());
    SolitonCertificateF cert = nilsoliton_solve(endo, g, opt.tol);
    is_soliton = cert.is_soliton;
    r.results["is_soliton"] = cert.is_soliton;
    r.results["c"] = cert.c;
    r.results["derivation"] = json_matrix(cert.d);
    r.results["residual"] = cert.residual;
  }

  if (f.milnor && f.milnor->has_default_sigma()) {
    bool diagonal = true;
    const QMat& gram = m.metric.gram();
    for (int i = 0; i < n && diagonal; ++i)
      for (int j = i + 1; j < n && diagonal; ++j)
        if (gram(i, j) != 0) diagonal = false;
    if (diagonal) {
      try {
        r.results["milnor_criterion"] = milnor_soliton_criterion(*f.milnor, m.metric);
      } catch (const std::domain_error&) {
        // 3-dim data without a block decomposition: no criterion to report.
      }
    } else {
      r.warnings.push_back(
          "metric is not diagonal on the declared frame; the per-block criterion assumes "
          "pairwise-orthogonal summands and was skipped (the solve above is authoritative)");
    }
  }

  emit(r, opt.json);
  return is_soliton ? 0 : 1;
}

// ---- orthoframe ----

int cmd_orthoframe(const AlgebraFile& f, const Options& opt) {
  MetricLieAlgebra m = metric_algebra(f);
  Report r;
  r.command = "orthoframe";
  r.inputs = echo_inputs(f);
  r.warnings = f.warnings;
  int n = m.algebra.dim();
  bool negative = false;

  if (n == 3) {
    r.results["shape"] = "three_dim";
    bool unimodular = is_unimodular(m.algebra);
    LOperator op = l_operator(m);
    r.results["unimodular"] = unimodular;
    r.results["l_self_adjoint"] = op.self_adjoint;
    r.results["exists"] = op.self_adjoint;
    negative = !op.self_adjoint;
    if (op.self_adjoint && !opt.exact) {
      MilnorFrame3 fr = milnor_frame_3d(m, opt.tol);
      OrderedJson c = OrderedJson::object();
      c["mode"] = "float";
      OrderedJson fv = OrderedJson::array();
      for (const DVec& v : fr.frame) fv.push_back(json_vector(v));
      c["frame"] = fv;
      c["lambda"] = json_vector(DVec(fr.lambda.begin(), fr.lambda.end()));
      c["residual"] = fr.residual;
      r.results["construction"] = c;
    }
  } else if (n == 4) {
    Rational b = h4_obstruction(m);
    r.results["shape"] = "h4";
    r.results["b_obstruction"] = json_rational(b);
    bool exists = b == 0;
    r.results["exists"] = exists;
    negative = !exists;
    if (!opt.exact) {
      H4Constants consts = h4_canonical_constants(m);
      OrderedJson cc = OrderedJson::object();
      cc["mode"] = "float";
      cc["a"] = consts.a;
      cc["b"] = consts.b;
      cc["c"] = consts.c;
      r.results["canonical_constants"] = cc;
      if (exists) {
        H4Frame fr = h4_milnor_frame(m, opt.tol);
        OrderedJson c = OrderedJson::object();
        c["mode"] = "float";
        OrderedJson fv = OrderedJson::array();
        for (const DVec& v : fr.frame) fv.push_back(json_vector(v));
        c["frame"] = fv;
        c["lambda3"] = fr.lambda3;
        c["lambda4"] = fr.lambda4;
        c["residual"] = fr.residual;
        r.results["construction"] = c;
      }
    }
  } else if (n == 6) {
    H3H3Obstruction ob = h3h3_obstruction(m);
    r.results["shape"] = "h3h3";
    r.results["obstruction"] = json_rational(ob.value);
    r.results["obstructed"] = ob.obstructed;
    negative = ob.obstructed;
  } else {
    return emit_error("orthoframe", opt.json,
                      "orthoframe covers 3-dim unimodular algebras, the 4-dim filiform algebra "
                      "and h3+h3 in their Milnor bases; dimension " +
                          std::to_string(n) + " is not one of these shapes");
  }

  emit(r, opt.json);
  return negative ? 1 : 0;
}

// ---- counterexample ----

int cmd_counterexample(const std::string& kind, const std::string& epsilon, const Options& opt) {
  auto eps = parse_rational(epsilon);
  if (!eps)
    return emit_error("counterexample", opt.json,
                      "--epsilon expects a rational p, -p or p/q, got '" + epsilon + "'");
  CounterexampleKind k =
      kind == "h4" ? CounterexampleKind::h4 : CounterexampleKind::h3h3;
  Counterexample ce = counterexample_metric(k, *eps);

  std::ostringstream file;
  file << "# " << kind << " counterexample metric, epsilon " << to_string(*eps) << "\n";
  file << "dim " << ce.data.n() << "\n";
  file << "milnor";
  for (const Rational& l : ce.data.lambda) file << " " << to_string(l);
  file << "\nmetric\n";
  for (int i = 0; i < ce.gram.rows(); ++i) {
    for (int j = 0; j < ce.gram.cols(); ++j) file << (j ? " " : "") << to_string(ce.gram(i, j));
    file << "\n";
  }

  if (opt.json) {
    Report r;
    r.command = "counterexample";
    r.inputs["kind"] = kind;
    r.inputs["epsilon"] = to_string(*eps);
    r.results["obstruction"] = json_rational(ce.obstruction);
    r.results["file"] = file.str();
    emit(r, true);
  } else {
    std::cout << file.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation with metric Lie algebras in Milnor frames"};
  app.require_subcommand(1);

  Options opt;
  std::string kind;
  std::string epsilon;

  auto add_common = [&](CLI::App* sub, bool needs_file) {
    if (needs_file)
      sub->add_option("file", opt.file, "algebra file")->required()->check(CLI::ExistingFile);
    sub->add_flag("--json", opt.json, "canonical machine output");
    sub->add_option("--tol", opt.tol, "float tolerance")->default_val(1e-9);
    sub->add_flag("--exact", opt.exact, "fail rather than fall back to float");
  };

  CLI::App* validate = app.add_subcommand("validate", "Jacobi, unimodularity, Milnor condition");
  add_common(validate, true);
  CLI::App* decompose_cmd =
      app.add_subcommand("decompose", "h3 / h4 / abelian block decomposition");
  add_common(decompose_cmd, true);
  CLI::App* ricci = app.add_subcommand("ricci", "Ricci matrix and signature");
  add_common(ricci, true);
  CLI::App* sectional = app.add_subcommand("sectional", "full sectional-curvature pair table");
  add_common(sectional, true);
  CLI::App* soliton = app.add_subcommand("soliton", "Ricci-nilsoliton certificate");
  add_common(soliton, true);
  CLI::App* orthoframe =
      app.add_subcommand("orthoframe", "orthonormal-Milnor-frame existence decision");
  add_common(orthoframe, true);
  CLI::App* counter = app.add_subcommand("counterexample", "emit an obstructed metric file");
  counter->add_option("--kind", kind, "h4 or h3h3")
      ->required()
      ->check(CLI::IsMember({"h4", "h3h3"}));
  counter->add_option("--epsilon", epsilon, "rational perturbation, nonzero")->required();
  add_common(counter, false);

  CLI11_PARSE(app, argc, argv);

  CLI::App* active = app.get_subcommands().front();
  const std::string name = active->get_name();
  try {
    if (name == "counterexample") return cmd_counterexample(kind, epsilon, opt);
    AlgebraFile f = load_algebra_file(opt.file);
    if (name == "validate") return cmd_validate(f, opt);
    if (name == "decompose") return cmd_decompose(f, opt);
    if (name == "ricci") return cmd_ricci(f, opt);
    if (name == "sectional") return cmd_sectional(f, opt);
    if (name == "soliton") return cmd_soliton(f, opt);
    if (name == "orthoframe") return cmd_orthoframe(f, opt);
    return emit_error(name, opt.json, "unknown command");
  } catch (const std::exception& e) {
    return emit_error(name, opt.json, e.what());
  }
}
