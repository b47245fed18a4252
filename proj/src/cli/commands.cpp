#include "specmat/cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "specmat/cli/document.hpp"
#include "specmat/error.hpp"
#include "specmat/matfun.hpp"
#include "specmat/spectral.hpp"
#include "specmat/spectrum.hpp"

#ifndef SPECMAT_VERSION
#define SPECMAT_VERSION "0.0.0"
#endif

namespace specmat::cli {

namespace {

struct CommonOptions {
  std::string spectrum;
  std::optional<double> tol;
  double cluster_tol = SpectrumOptions{}.cluster_tol;
  bool strict = false;
  std::string output;
};

struct Invocation {
  std::string operation;
  std::string file;
  double t = 0.0;
  unsigned power = 0;
  unsigned drazin = 1;
  std::string branch;
};

// Thrown when --strict turns a diagnostic into a failure.
struct GuardrailTripped : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SpectrumOptions make_spectrum_options(const CommonOptions& common) {
  SpectrumOptions opts;
  if (common.tol) {
    opts.root_tol = *common.tol;
  } else if (const char* env = std::getenv(kTolEnvVar); env != nullptr && *env != '\0') {
    try {
      opts.root_tol = std::stod(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, std::string(kTolEnvVar) + " is not a number");
    }
  }
  opts.cluster_tol = common.cluster_tol;
  if (!common.spectrum.empty()) opts.user_spectrum = parse_spectrum_flag(common.spectrum);
  return opts;
}

Json spectrum_to_json(const ComponentSystem& cs) {
  Json out = Json::array();
  for (std::size_t j = 0; j < cs.size(); ++j) {
    const Complex a = cs.spectrum()[j].alpha;
    Json e;
    e["alpha"] = Json::array({a.real(), a.imag()});
    e["multiplicity"] = cs.spectrum()[j].multiplicity;
    e["index"] = cs.index(j);
    out.push_back(std::move(e));
  }
  return out;
}

Json warnings_to_json(const Diagnostics& diag) {
  Json out = Json::array();
  for (const auto& d : diag.entries()) {
    Json e;
    e["code"] = std::string(to_string(d.code));
    e["message"] = d.message;
    out.push_back(std::move(e));
  }
  return out;
}

bool all_finite(const Matrix& m) {
  for (const auto& v : m.data()) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

Json execute(const Invocation& inv, const CommonOptions& common, std::ostream& err) {
  const Matrix a = read_matrix_file(inv.file);
  const SpectrumOptions opts = make_spectrum_options(common);
  const Spectrum spec = resolve_spectrum(a, opts);

  Diagnostics diag;
  const ComponentSystem cs = component_matrices(a, spec, &diag);

  Json parameters = Json::object();
  Json result;
  Json extra = Json::object();
  std::optional<bool> principal;
  std::vector<const Matrix*> produced;

  Matrix value;
  JordanChevalley jc;
  std::vector<Matrix> projections;
  if (inv.operation == "exp") {
    parameters["t"] = inv.t;
    value = matrix_exponential(cs, inv.t);
  } else if (inv.operation == "power") {
    parameters["n"] = inv.power;
    value = matrix_power(cs, inv.power);
  } else if (inv.operation == "drazin") {
    parameters["n"] = inv.drazin;
    value = drazin_power(cs, inv.drazin);
  } else if (inv.operation == "log") {
    BranchSelection branch = log_branch_principal(cs.spectrum());
    if (!inv.branch.empty()) {
      branch.offsets = parse_branch_flag(inv.branch);
      if (branch.offsets.size() != cs.size()) {
        throw Error(ErrorKind::ParseError, "--branch needs " + std::to_string(cs.size()) +
                                               " offsets, one per spectrum entry");
      }
      for (long o : branch.offsets) branch.principal = branch.principal && o == 0;
    }
    parameters["branch"] = branch.offsets;
    value = matrix_log(cs, branch, &diag);
    principal = branch.principal;
  } else {
    jc = jordan_chevalley(cs);
    projections = spectral_projections(cs);
    value = jc.semisimple;
    extra["nilpotent"] = matrix_to_json(jc.nilpotent);
    Json proj = Json::array();
    for (const auto& p : projections) proj.push_back(matrix_to_json(p));
    extra["projections"] = std::move(proj);
    Json indices = Json::array();
    for (std::size_t j = 0; j < cs.size(); ++j) indices.push_back(cs.index(j));
    extra["indices"] = std::move(indices);
    extra["diagonalizable"] = is_diagonalizable(cs);
    produced.push_back(&jc.nilpotent);
    for (const auto& p : projections) produced.push_back(&p);
  }
  produced.push_back(&value);
  for (const Matrix* m : produced) {
    if (!all_finite(*m)) throw GuardrailTripped("result contains non-finite values");
  }

  Json doc;
  doc["operation"] = inv.operation;
  doc["version"] = version();
  Json input;
  input["order"] = a.order();
  input["spectrum_source"] = opts.user_spectrum ? "user" : "computed";
  input["parameters"] = std::move(parameters);
  input["spectrum"] = spectrum_to_json(cs);
  doc["input"] = std::move(input);
  doc["result"] = matrix_to_json(value);
  for (auto it = extra.begin(); it != extra.end(); ++it) doc[it.key()] = it.value();

  Json diagnostics;
  diagnostics["validation_residual"] = cs.validation_residual();
  diagnostics["projector_sum_residual"] = projector_sum_residual(cs);
  if (principal) diagnostics["principal"] = *principal;
  diagnostics["warnings"] = warnings_to_json(diag);
  doc["diagnostics"] = std::move(diagnostics);

  for (const auto& d : diag.entries()) err << "warning: " << d.message << "\n";
  if (common.strict && !diag.empty()) {
    throw GuardrailTripped("--strict: " + std::string(to_string(diag.entries().front().code)));
  }
  return doc;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
      return kExitParse;
    case ErrorKind::NoConvergence:
    case ErrorKind::SpectrumMismatch:
    case ErrorKind::DegenerateSpectrum:
      return kExitSpectrum;
    case ErrorKind::SingularMatrix:
      return kExitSingular;
    case ErrorKind::InvalidArgument:
      return kExitUsage;
    case ErrorKind::SingularSeries:
    case ErrorKind::MissingValue:
      return kExitGuardrail;
  }
  return kExitGuardrail;
}

}  // namespace

const char* version() { return SPECMAT_VERSION; }

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matrix functions through Hermite component matrices", "specmat"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);

  CommonOptions common;
  Invocation inv;
  app.add_option("--spectrum", common.spectrum,
                 "Eigenvalues as 'alpha:multiplicity,...', e.g. '2:2,3:1' or '0.5+0.25i:1'");
  app.add_option("--tol", common.tol, "Root-finding tolerance (overrides SPECMAT_TOL)");
  app.add_option("--cluster-tol", common.cluster_tol, "Root clustering tolerance")
      ->check(CLI::PositiveNumber);
  app.add_flag("--strict", common.strict, "Treat numerical diagnostics as failures (exit 4)");
  app.add_option("--output", common.output, "Write the result document to this file");

  auto* exp = app.add_subcommand("exp", "Matrix exponential e^{tA}");
  exp->add_option("-t", inv.t, "Time parameter")->required();
  exp->add_option("file", inv.file, "Matrix document")->required();

  auto* power = app.add_subcommand("power", "Integer power A^n");
  power->add_option("-n", inv.power, "Exponent (>= 0)")->required();
  power->add_option("file", inv.file, "Matrix document")->required();

  auto* drazin = app.add_subcommand("drazin", "Powers of the Drazin inverse");
  drazin->add_option("-n", inv.drazin, "Exponent (>= 1)")->check(CLI::PositiveNumber);
  drazin->add_option("file", inv.file, "Matrix document")->required();

  auto* log = app.add_subcommand("log", "Matrix logarithm (principal by default)");
  log->add_option("--branch", inv.branch, "Per-eigenvalue branch offsets, e.g. '0,1'");
  log->add_option("file", inv.file, "Matrix document")->required();

  auto* decompose = app.add_subcommand("decompose", "Jordan-Chevalley decomposition and projections");
  decompose->add_option("file", inv.file, "Matrix document")->required();

  for (auto* sub : {exp, power, drazin, log, decompose}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  inv.operation = app.get_subcommands().front()->get_name();

  try {
    const std::string text = dump(execute(inv, common, err));
    if (common.output.empty()) {
      out << text;
    } else {
      std::ofstream file(common.output, std::ios::binary);
      if (!file) {
        err << "error: cannot write '" << common.output << "'\n";
        return kExitUsage;
      }
      file << text;
    }
    return kExitOk;
  } catch (const GuardrailTripped& e) {
    err << "error: " << e.what() << "\n";
    return kExitGuardrail;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace specmat::cli
