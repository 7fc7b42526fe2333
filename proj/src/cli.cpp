#include "rotayb/cli.hpp"

#include "rotayb/catalog.hpp"
#include "rotayb/error.hpp"
#include "rotayb/io.hpp"
#include "rotayb/rota_baxter.hpp"
#include "rotayb/structure.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <ostream>

namespace rotayb::cli {

namespace {

using io::Json;

struct Outcome {
  std::string verdict = "pass";
  Json details = Json::object();
  std::vector<std::string> lines;
  std::optional<Json> document;
};

std::string tensor3_term(const Tensor3::Term &t, const std::vector<std::string> &labels) {
  return format_scalar(t.coeff) + " " + labels[t.i] + " (x) " + labels[t.j] + " (x) " +
         labels[t.k];
}

Json vector_json(const Vector &v) {
  Json a = Json::array();
  for (const auto &x : v)
    a.push_back(format_scalar(x));
  return a;
}

Json subspace_json(const Subspace &s, const std::vector<std::string> &labels) {
  Json basis = Json::array();
  for (const auto &row : s.basis_vectors())
    basis.push_back(vector_json(row));
  return {{"dim", s.dim()}, {"basis", basis}, {"text", io::format_subspace(s, labels)}};
}

Json weight_json(const WeightSet &w) {
  Json values = Json::array();
  for (const auto &v : w.values())
    values.push_back(format_scalar(v));
  const char *kind = w.kind() == WeightSet::Kind::Empty  ? "empty"
                     : w.kind() == WeightSet::Kind::All ? "all"
                                                         : "finite";
  return {{"kind", kind}, {"values", values}};
}

struct WitnessRender {
  const std::vector<std::string> &labels;

  std::pair<Json, std::string> operator()(bool b) const { return {b, b ? "true" : "false"}; }
  std::pair<Json, std::string> operator()(const Scalar &s) const {
    return {format_scalar(s), format_scalar(s)};
  }
  std::pair<Json, std::string> operator()(const std::string &s) const { return {s, s}; }
  std::pair<Json, std::string> operator()(const Vector &v) const {
    return {vector_json(v), io::format_element(v, labels)};
  }
  std::pair<Json, std::string> operator()(const Subspace &s) const {
    // Subspaces of a quotient have their own basis; fall back to indices.
    if (s.ambient_dim() != labels.size()) {
      std::vector<std::string> generic;
      for (std::size_t i = 0; i < s.ambient_dim(); ++i)
        generic.push_back("q" + std::to_string(i));
      return {subspace_json(s, generic), io::format_subspace(s, generic)};
    }
    return {subspace_json(s, labels), io::format_subspace(s, labels)};
  }
  std::pair<Json, std::string> operator()(const Matrix &m) const {
    return {io::operator_to_json(m)["columns"], format_matrix(m.transpose()) + " (columns)"};
  }
  std::pair<Json, std::string> operator()(const WeightSet &w) const {
    return {weight_json(w), format_weight_set(w)};
  }
};

Outcome from_report(const StructureReport &report, const std::vector<std::string> &labels) {
  Outcome o;
  o.verdict = std::string(to_string(report.verdict));
  o.details["claim"] = report.claim;
  if (report.blocked_by)
    o.details["blocked_by"] = std::string(to_string(*report.blocked_by));
  if (!report.direction.empty())
    o.details["direction"] = report.direction;
  o.details["failures"] = report.failures;
  o.details["contradictions"] = report.contradictions;
  Json witnesses = Json::object();
  o.lines.push_back("claim: " + report.claim);
  if (report.blocked_by)
    o.lines.push_back("blocked by: " + std::string(to_string(*report.blocked_by)));
  if (!report.direction.empty())
    o.lines.push_back("direction: " + report.direction);
  for (const auto &w : report.witnesses) {
    auto [json, text] = std::visit(WitnessRender{labels}, w.value);
    witnesses[w.label] = json;
    o.lines.push_back(w.label + ": " + text);
  }
  o.details["witnesses"] = witnesses;
  for (const auto &f : report.failures)
    o.lines.push_back("failure: " + f);
  for (const auto &c : report.contradictions)
    o.lines.push_back("CONTRADICTION: " + c);
  return o;
}

Json decomposition_json(const Decomposition &d, const std::vector<std::string> &labels) {
  Json parts = Json::array();
  for (std::size_t i = 0; i < d.parts.size(); ++i)
    parts.push_back({{"label", d.labels[i]}, {"space", subspace_json(d.parts[i], labels)}});
  return {{"ambient", subspace_json(d.ambient, labels)}, {"parts", parts}};
}

struct Inputs {
  LieAlgebra algebra;
  std::optional<BilinearForm> form;
  std::optional<Tensor2> tensor;
  std::optional<Matrix> op;
};

LieAlgebra load_algebra(const std::string &path) { return io::read_algebra(io::load(path)); }

class Runner {
public:
  Runner(std::ostream &out, std::ostream &err) : out_(out), err_(err) {
    if (const char *mode = std::getenv("ROTAYB_OUTPUT"))
      json_ = std::string(mode) == "json";
  }

  int run(const std::vector<std::string> &args);

private:
  std::ostream &out_;
  std::ostream &err_;
  bool json_ = false;
};

Scalar parse_weight(const std::string &text, const char *flag) {
  try {
    return parse_scalar(text);
  } catch (const Error &) {
    throw Error(ErrorCode::ParseError, std::string(flag) + ": '" + text + "' is not a rational");
  }
}

} // namespace

int Runner::run(const std::vector<std::string> &args) {
  CLI::App app{"Classical Yang-Baxter / Rota-Baxter correspondence checker", "rotayb"};
  app.fallthrough();
  app.require_subcommand(1);
  bool json_flag = false, text_flag = false, strict = false, lenient = false;
  app.add_flag("--json", json_flag, "Machine-readable output");
  app.add_flag("--text", text_flag, "Human-readable output (default)");
  app.add_flag("--strict", strict, "Treat not-applicable verdicts as failures");
  app.add_flag("--lenient", lenient, "Treat not-applicable verdicts as success (default)")
      ->excludes("--strict");

  std::string a, f, t, o, weight, target, out_path;
  std::size_t max_defects = default_defect_limit;
  bool symmetric_part = false, all = false;
  std::vector<std::string> files;
  std::function<Outcome()> action;

  auto add_weight = [&](CLI::App *cmd) {
    cmd->add_option("--weight", weight, "Weight lambda as p/q")->required()->allow_extra_args(false);
  };
  auto algebra_arg = [&](CLI::App *cmd) { cmd->add_option("algebra", a, "Algebra file")->required(); };
  auto form_arg = [&](CLI::App *cmd) { cmd->add_option("form", f, "Form file")->required(); };
  auto tensor_arg = [&](CLI::App *cmd) { cmd->add_option("tensor", t, "Tensor file")->required(); };
  auto op_arg = [&](CLI::App *cmd) { cmd->add_option("operator", o, "Operator file")->required(); };

  auto load_inputs = [&](bool form, bool tensor, bool op) {
    Inputs in;
    in.algebra = load_algebra(a);
    const std::size_t n = in.algebra.dim();
    if (form)
      in.form = io::read_form(io::load(f), n);
    if (tensor)
      in.tensor = io::read_tensor(io::load(t), n);
    if (op)
      in.op = io::read_operator(io::load(o), n);
    return in;
  };

  // validate
  auto *validate_cmd = app.add_subcommand("validate", "Check antisymmetry and Jacobi");
  algebra_arg(validate_cmd);
  validate_cmd->callback([&] {
    action = [&] {
      const auto doc = io::read_algebra_document(io::load(a));
      const auto report = validate(doc.table);
      Outcome out;
      out.verdict = report.ok() ? "pass" : "fail";
      Json violations = Json::array();
      for (const auto &v : report.violations) {
        const bool jac = v.kind == Violation::Kind::Jacobi;
        Json entry = {{"kind", jac ? "jacobi" : "antisymmetry"}, {"i", v.i}, {"j", v.j}};
        std::string line = std::string(jac ? "Jacobi" : "antisymmetry") + " violated at (" +
                           doc.labels[v.i] + ", " + doc.labels[v.j];
        if (jac) {
          entry["k"] = v.k;
          line += ", " + doc.labels[v.k];
        }
        entry["value"] = vector_json(v.value);
        violations.push_back(entry);
        out.lines.push_back(line + "): " + io::format_element(v.value, doc.labels));
      }
      out.details["dim"] = doc.labels.size();
      out.details["violations"] = violations;
      return out;
    };
  });

  // form check
  auto *form_cmd = app.add_subcommand("form", "Bilinear form checks");
  form_cmd->require_subcommand(1);
  auto *form_check = form_cmd->add_subcommand("check", "Invariance and non-degeneracy");
  algebra_arg(form_check);
  form_arg(form_check);
  form_check->callback([&] {
    action = [&] {
      auto in = load_inputs(true, false, false);
      const bool inv = is_invariant(in.algebra, *in.form);
      const bool nondeg = is_nondegenerate(*in.form);
      Outcome out;
      out.verdict = inv && nondeg ? "pass" : "fail";
      out.details["invariant"] = inv;
      out.details["nondegenerate"] = nondeg;
      out.lines.push_back(std::string("invariant: ") + (inv ? "true" : "false"));
      out.lines.push_back(std::string("nondegenerate: ") + (nondeg ? "true" : "false"));
      return out;
    };
  });

  // cybe check
  auto *cybe_cmd = app.add_subcommand("cybe", "Classical Yang-Baxter equation");
  cybe_cmd->require_subcommand(1);
  auto *cybe_check = cybe_cmd->add_subcommand("check", "Evaluate C_L(r)");
  algebra_arg(cybe_check);
  tensor_arg(cybe_check);
  cybe_check->callback([&] {
    action = [&] {
      auto in = load_inputs(false, true, false);
      const Tensor3 c = cybe_element(in.algebra, *in.tensor);
      Outcome out;
      out.verdict = c.is_zero() ? "pass" : "fail";
      out.details["nonzero_terms"] = io::to_json(c);
      for (const auto &term : c.terms())
        out.lines.push_back("C_L(r) term: " + tensor3_term(term, in.algebra.labels()));
      return out;
    };
  });

  // invariance
  auto *inv_cmd = app.add_subcommand("invariance", "ad-invariance of a tensor");
  algebra_arg(inv_cmd);
  tensor_arg(inv_cmd);
  inv_cmd->add_flag("--symmetric-part", symmetric_part, "Check r + tau(r) instead of r");
  inv_cmd->callback([&] {
    action = [&] {
      auto in = load_inputs(false, true, false);
      const Tensor2 subject = symmetric_part ? *in.tensor + tau(*in.tensor) : *in.tensor;
      const auto &labels = in.algebra.labels();
      Outcome out;
      Json failing = Json::object();
      for (std::size_t i = 0; i < in.algebra.dim(); ++i) {
        const Tensor2 action_i = ad_action(in.algebra, subject, unit_vector(in.algebra.dim(), i));
        if (action_i.is_zero())
          continue;
        failing[labels[i]] = io::to_json(action_i)["terms"];
        out.lines.push_back("[t, " + labels[i] + "] has " +
                            std::to_string(action_i.terms().size()) + " nonzero term(s)");
      }
      out.verdict = failing.empty() ? "pass" : "fail";
      out.details["subject"] = symmetric_part ? "r + tau(r)" : "r";
      out.details["failing_basis_elements"] = failing;
      out.details["symmetric_part_invariant"] =
          is_ad_invariant(in.algebra, *in.tensor + tau(*in.tensor));
      return out;
    };
  });

  // op
  auto *op_cmd = app.add_subcommand("op", "Tensor/operator correspondence");
  op_cmd->require_subcommand(1);
  auto document_option = [&](CLI::App *cmd) {
    cmd->add_option("--out", out_path, "Write the resulting document to this file");
  };
  auto *from_tensor = op_cmd->add_subcommand("from-tensor", "R(a) = sum omega(b_i, a) a_i");
  algebra_arg(from_tensor);
  form_arg(from_tensor);
  tensor_arg(from_tensor);
  document_option(from_tensor);
  from_tensor->callback([&] {
    action = [&] {
      auto in = load_inputs(true, true, false);
      Outcome out;
      out.document = io::operator_to_json(operator_of(*in.form, *in.tensor));
      return out;
    };
  });
  auto *to_tensor = op_cmd->add_subcommand("to-tensor", "Tensor of an operator");
  algebra_arg(to_tensor);
  form_arg(to_tensor);
  op_arg(to_tensor);
  document_option(to_tensor);
  to_tensor->callback([&] {
    action = [&] {
      auto in = load_inputs(true, false, true);
      Outcome out;
      out.document = io::to_json(tensor_of(*in.form, *in.op));
      return out;
    };
  });
  auto *adjoint_cmd = op_cmd->add_subcommand("adjoint", "Adjoint operator");
  algebra_arg(adjoint_cmd);
  form_arg(adjoint_cmd);
  op_arg(adjoint_cmd);
  document_option(adjoint_cmd);
  adjoint_cmd->callback([&] {
    action = [&] {
      auto in = load_inputs(true, false, true);
      Outcome out;
      out.document = io::operator_to_json(adjoint(*in.form, *in.op));
      return out;
    };
  });

  // rb
  auto *rb_cmd = app.add_subcommand("rb", "Rota-Baxter identity");
  rb_cmd->require_subcommand(1);
  auto *rb_check = rb_cmd->add_subcommand("check", "Check a given weight");
  algebra_arg(rb_check);
  op_arg(rb_check);
  add_weight(rb_check);
  rb_check->add_option("--max-defects", max_defects, "Failing pairs to list");
  rb_check->callback([&] {
    action = [&] {
      auto in = load_inputs(false, false, true);
      const Scalar lambda = parse_weight(weight, "--weight");
      const auto check = is_rota_baxter(in.algebra, *in.op, lambda, max_defects);
      const auto &labels = in.algebra.labels();
      Outcome out;
      out.verdict = check.holds ? "pass" : "fail";
      out.details["weight"] = format_scalar(lambda);
      out.details["failing_pairs"] = check.report.total_failures;
      Json defects = Json::array();
      for (const auto &p : check.report.pairs) {
        defects.push_back({{"i", p.i}, {"j", p.j}, {"defect", vector_json(p.defect)}});
        out.lines.push_back("defect at (" + labels[p.i] + ", " + labels[p.j] +
                            "): " + io::format_element(p.defect, labels));
      }
      out.details["defects"] = defects;
      out.lines.push_back("weight " + format_scalar(lambda) + ", failing pairs: " +
                          std::to_string(check.report.total_failures));
      return out;
    };
  });
  auto *rb_weights = rb_cmd->add_subcommand("weights", "All weights of an operator");
  algebra_arg(rb_weights);
  op_arg(rb_weights);
  rb_weights->callback([&] {
    action = [&] {
      auto in = load_inputs(false, false, true);
      const WeightSet w = find_weights(in.algebra, *in.op);
      Outcome out;
      out.verdict = w.is_empty() ? "fail" : "pass";
      out.details["weights"] = weight_json(w);
      out.lines.push_back("weights: " + format_weight_set(w));
      return out;
    };
  });

  // theorem pipelines taking (A, F, R2, --weight)
  using Pipeline = std::function<Outcome(const Inputs &, const Scalar &)>;
  auto pipeline = [&](const char *name, const char *help, Pipeline body) {
    auto *cmd = app.add_subcommand(name, help);
    algebra_arg(cmd);
    form_arg(cmd);
    tensor_arg(cmd);
    add_weight(cmd);
    cmd->callback([&, body] {
      action = [&, body] {
        auto in = load_inputs(true, true, false);
        return body(in, parse_weight(weight, "--weight"));
      };
    });
  };
  pipeline("thm1", "Kernel condition for R", [](const Inputs &in, const Scalar &l) {
    return from_report(theorem1_condition(in.algebra, *in.form, *in.tensor, l), in.algebra.labels());
  });
  pipeline("thm1star", "Kernel condition for R*", [](const Inputs &in, const Scalar &l) {
    return from_report(remark1_condition(in.algebra, *in.form, *in.tensor, l), in.algebra.labels());
  });
  pipeline("ideal", "The ideal theta_lambda([L, L])", [](const Inputs &in, const Scalar &l) {
    Outcome out;
    try {
      const Subspace s = ideal_I_lambda(in.algebra, *in.form, *in.tensor, l);
      out.details["ideal"] = subspace_json(s, in.algebra.labels());
      out.lines.push_back("I_lambda = " + io::format_subspace(s, in.algebra.labels()));
      out.lines.push_back("dim: " + std::to_string(s.dim()));
    } catch (const Error &e) {
      if (e.code() != ErrorCode::HypothesisViolated)
        throw;
      out.verdict = "not-applicable";
      out.details["blocked_by"] = std::string(to_string(e.code()));
      out.lines.push_back(e.what());
    }
    return out;
  });
  pipeline("thm2", "Descent to L / I_lambda", [](const Inputs &in, const Scalar &l) {
    return from_report(theorem2_pipeline(in.algebra, *in.form, *in.tensor, l), in.algebra.labels());
  });
  pipeline("thm3", "[L, L] = I1 + I2 splitting", [](const Inputs &in, const Scalar &l) {
    auto [dec, report] = theorem3_decomposition(in.algebra, *in.form, *in.tensor, l);
    Outcome out = from_report(report, in.algebra.labels());
    out.details["decomposition"] = decomposition_json(dec, in.algebra.labels());
    return out;
  });
  pipeline("thm4", "Root-space splitting L = I1 + I2", [](const Inputs &in, const Scalar &l) {
    auto [dec, report] = theorem4_decomposition(in.algebra, *in.form, *in.tensor, l);
    Outcome out = from_report(report, in.algebra.labels());
    out.details["decomposition"] = decomposition_json(dec, in.algebra.labels());
    return out;
  });

  auto *cor3 = app.add_subcommand("cor3", "Simple-algebra weight and theta check");
  algebra_arg(cor3);
  form_arg(cor3);
  tensor_arg(cor3);
  cor3->callback([&] {
    action = [&] {
      auto in = load_inputs(true, true, false);
      return from_report(corollary3_check(in.algebra, *in.form, *in.tensor), in.algebra.labels());
    };
  });
  auto *cor1 = app.add_subcommand("cor1", "Central theta_lambda implies CYBE");
  algebra_arg(cor1);
  form_arg(cor1);
  op_arg(cor1);
  add_weight(cor1);
  cor1->callback([&] {
    action = [&] {
      auto in = load_inputs(true, false, true);
      return from_report(
          corollary1_check(in.algebra, *in.form, *in.op, parse_weight(weight, "--weight")),
          in.algebra.labels());
    };
  });

  // harmonize
  auto *harmonize = app.add_subcommand("harmonize", "Common weight on a direct sum");
  harmonize->add_option("--target", target, "Target weight")->required();
  harmonize->add_option("files", files, "Triples: algebra form tensor ...")->required();
  harmonize->callback([&] {
    action = [&] {
      if (files.size() % 3 != 0)
        throw CLI::ValidationError("files", "expected algebra/form/tensor triples");
      const Scalar lambda = parse_weight(target, "--target");
      std::vector<Component> components;
      for (std::size_t i = 0; i < files.size(); i += 3) {
        LieAlgebra alg = load_algebra(files[i]);
        BilinearForm form = io::read_form(io::load(files[i + 1]), alg.dim());
        Tensor2 r = io::read_tensor(io::load(files[i + 2]), alg.dim());
        components.push_back({std::move(alg), std::move(form), std::move(r)});
      }
      Outcome out;
      try {
        const auto mu = harmonize_weights(components, lambda);
        out.details["mu"] = vector_json(mu);
        out.lines.push_back("mu: " + format_vector(mu));
      } catch (const Error &e) {
        if (e.code() != ErrorCode::MixedZeroNonzeroWeights &&
            e.code() != ErrorCode::NotRotaBaxter)
          throw;
        out.verdict = "fail";
        out.details["error"] = std::string(to_string(e.code()));
        out.lines.push_back(e.what());
      }
      return out;
    };
  });

  // catalog
  auto *cat = app.add_subcommand("catalog", "Built-in examples");
  cat->require_subcommand(1);
  std::string entry_name;
  auto *cat_list = cat->add_subcommand("list", "List entries");
  cat_list->callback([&] {
    action = [&] {
      Outcome out;
      Json entries = Json::array();
      for (const auto &l : catalog::list()) {
        entries.push_back({{"name", l.name}, {"description", l.description}});
        out.lines.push_back(l.name + "  " + l.description);
      }
      out.details["entries"] = entries;
      return out;
    };
  });
  auto *cat_emit = cat->add_subcommand("emit", "Write an entry's documents");
  cat_emit->add_option("name", entry_name, "Entry name")->required();
  cat_emit->add_option("--out", out_path, "Output directory (default: current directory)");
  cat_emit->callback([&] {
    action = [&] {
      const auto entry = catalog::get(entry_name);
      const std::filesystem::path dir = out_path.empty() ? "." : out_path;
      std::filesystem::create_directories(dir);
      Outcome out;
      Json written = Json::array();
      auto write = [&](const std::string &file, const Json &doc) {
        io::save(dir / file, doc);
        written.push_back((dir / file).string());
        out.lines.push_back("wrote " + (dir / file).string());
      };
      write(entry.name + ".algebra.json", io::to_json(entry.algebra, entry.name));
      if (entry.form)
        write(entry.name + ".form.json", io::to_json(*entry.form, entry.name));
      for (const auto &[key, tensor] : entry.tensors)
        write(entry.name + ".tensor." + key + ".json", io::to_json(tensor, key));
      for (const auto &[key, op] : entry.operators)
        write(entry.name + ".operator." + key + ".json", io::operator_to_json(op, key));
      out.details["files"] = written;
      return out;
    };
  });
  auto *cat_verify = cat->add_subcommand("verify", "Recompute an entry's expected outcomes");
  cat_verify->add_option("name", entry_name, "Entry name");
  cat_verify->add_flag("--all", all, "Verify every entry");
  cat_verify->callback([&] {
    if (all == !entry_name.empty())
      throw CLI::ValidationError("catalog verify", "give exactly one of NAME or --all");
    action = [&] {
      std::vector<std::string> names;
      if (all)
        for (const auto &l : catalog::list())
          names.push_back(l.name);
      else
        names.push_back(entry_name);
      Outcome out;
      Json entries = Json::array();
      bool ok = true;
      for (const auto &name : names) {
        const auto entry = catalog::get(name);
        Json checks = Json::array();
        out.lines.push_back(name + ":");
        for (const auto &r : catalog::verify(entry)) {
          ok = ok && r.ok;
          checks.push_back({{"name", r.name},
                            {"expected", r.expected},
                            {"actual", r.actual},
                            {"ok", r.ok}});
          out.lines.push_back(std::string("  [") + (r.ok ? "ok" : "FAIL") + "] " + r.name +
                              ": " + r.actual + (r.ok ? "" : " (expected " + r.expected + ")"));
        }
        entries.push_back({{"name", name}, {"checks", checks}});
      }
      out.verdict = ok ? "pass" : "fail";
      out.details["entries"] = entries;
      return out;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out_ << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp &) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError &e) {
    err_ << "usage error: " << e.what() << '\n';
    return 2;
  }
  if (json_flag)
    json_ = true;
  if (text_flag)
    json_ = false;

  Outcome outcome;
  try {
    outcome = action();
  } catch (const CLI::ParseError &e) {
    err_ << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error &e) {
    if (e.code() == ErrorCode::TheoremContradiction) {
      outcome.verdict = "fail";
      outcome.details["contradiction"] = e.what();
      outcome.lines.push_back(std::string("CONTRADICTION: ") + e.what());
    } else {
      err_ << "input error: " << e.what() << '\n';
      return 2;
    }
  } catch (const std::filesystem::filesystem_error &e) {
    err_ << "input error: " << e.what() << '\n';
    return 2;
  }

  int code = 0;
  if (outcome.verdict == "fail" || (outcome.verdict == "not-applicable" && strict))
    code = 1;

  if (json_) {
    Json report;
    report["command"] = args;
    report["verdict"] = outcome.verdict;
    report["details"] = outcome.details;
    if (outcome.document)
      report["document"] = *outcome.document;
    report["exit_code"] = code;
    out_ << report.dump(2) << '\n';
    if (outcome.document && !out_path.empty())
      io::save(out_path, *outcome.document);
    return code;
  }

  if (outcome.document) {
    if (out_path.empty()) {
      out_ << outcome.document->dump(2) << '\n';
    } else {
      io::save(out_path, *outcome.document);
      out_ << "wrote " << out_path << '\n';
    }
    return code;
  }
  std::string echo = "rotayb";
  for (const auto &arg : args)
    echo += " " + arg;
  out_ << echo << '\n' << "verdict: " << outcome.verdict << '\n';
  for (const auto &line : outcome.lines)
    out_ << "  " << line << '\n';
  return code;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  return Runner(out, err).run(args);
}

} // namespace rotayb::cli
