#include "pqn/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pqn/error.hpp"
#include "pqn/suite.hpp"

namespace pqn::cli {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

std::string readFile(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void writeOutput(const std::string& text, const std::string& outPath) {
  if (outPath.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(outPath, std::ios::binary);
  if (!out) throw Error("cannot open output file '" + outPath + "'");
  out << text;
}

int envDegreeCap() {
  if (const char* env = std::getenv("PQN_DEGREE_CAP")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1) return cap;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring malformed PQN_DEGREE_CAP\n";
  }
  return 24;
}

struct CommonArgs {
  std::vector<std::string> suites;
  std::uint64_t seed = 0;
  bool seedSet = false;
  int degreeCap = 0;
  bool degreeCapSet = false;
  std::string outPath;
};

void attachCommon(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--suite", args.suites, "suite to run (repeatable)")
      ->check(CLI::IsMember({"pqn-axioms", "deform-theorem", "bracket-identities",
                             "courant-axioms", "thm-courant", "lemma-identities"}));
  cmd->add_option("--seed", args.seed, "seed override")->each([&](const std::string&) {
    args.seedSet = true;
  });
  cmd->add_option("--degree-cap", args.degreeCap, "polynomial degree cap")
      ->each([&](const std::string&) { args.degreeCapSet = true; });
  cmd->add_option("--out", args.outPath, "write output to a file instead of stdout");
}

RunOptions toRunOptions(const CommonArgs& args) {
  RunOptions options;
  for (const auto& name : args.suites) options.suites.push_back(*suiteFromName(name));
  if (args.seedSet) options.seed = args.seed;
  if (args.degreeCapSet) options.degreeCap = args.degreeCap;
  return options;
}

SpecFile loadSpec(const std::string& path) {
  // Cap precedence: --degree-cap flag > spec file > PQN_DEGREE_CAP > 24.
  // The env value is installed before parsing; parseSpec inherits it unless
  // the file carries an explicit degree_cap entry.
  setPolynomialDegreeCap(envDegreeCap());
  return parseSpec(readFile(path));
}

int runReportCommand(const SpecFile& spec, const CommonArgs& args,
                     const std::vector<SuiteId>& defaultSuites) {
  RunOptions options = toRunOptions(args);
  if (options.suites.empty() && spec.suites.empty()) options.suites = defaultSuites;
  const RunReport report = runSuite(spec, options);
  std::cerr << report.toText();
  writeOutput(report.toJson().dump(2) + "\n", args.outPath);
  return report.allPass() ? kExitPass : kExitCheckFailure;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Exact verification kernel for Poisson quasi-Nijenhuis structures"};
  app.require_subcommand(1);

  CommonArgs checkArgs, deformArgs, generateArgs, courantArgs, reportArgs;
  std::string checkSpec, deformSpec, courantSpec, reportSpec;
  std::uint64_t genSeed = 0;
  int genDim = 3;
  int genDegree = 3;

  auto* check = app.add_subcommand("check", "run the structure axiom suites on a spec file");
  check->add_option("spec", checkSpec, "spec file")->required();
  attachCommon(check, checkArgs);

  auto* deform = app.add_subcommand(
      "deform", "deform the structure by its omega entry and write the result as a spec file");
  deform->add_option("spec", deformSpec, "spec file")->required();
  attachCommon(deform, deformArgs);

  auto* generate =
      app.add_subcommand("generate", "emit a deterministic pseudo-random valid structure spec");
  generate->add_option("--seed", genSeed, "generator seed")->required();
  generate->add_option("--dim", genDim, "chart dimension (2..6)")->required();
  generate->add_option("--degree-cap", genDegree, "max coefficient degree of the generated theta");
  generate->add_option("--out", generateArgs.outPath, "write output to a file instead of stdout");

  auto* courant = app.add_subcommand("courant", "run the Courant algebroid suites");
  courant->add_option("spec", courantSpec, "spec file")->required();
  attachCommon(courant, courantArgs);

  auto* reportCmd = app.add_subcommand("report", "run every applicable suite and emit the report");
  reportCmd->add_option("spec", reportSpec, "spec file")->required();
  attachCommon(reportCmd, reportArgs);

  std::vector<const char*> argv;
  argv.push_back("pqn");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (check->parsed()) {
      const SpecFile spec = loadSpec(checkSpec);
      std::vector<SuiteId> defaults = {SuiteId::PqnAxioms};
      if (spec.omega) defaults.push_back(SuiteId::DeformTheorem);
      return runReportCommand(spec, checkArgs, defaults);
    }
    if (courant->parsed()) {
      const SpecFile spec = loadSpec(courantSpec);
      std::vector<SuiteId> defaults = {SuiteId::CourantAxioms};
      if (spec.omega) defaults.push_back(SuiteId::ThmCourant);
      return runReportCommand(spec, courantArgs, defaults);
    }
    if (reportCmd->parsed()) {
      const SpecFile spec = loadSpec(reportSpec);
      return runReportCommand(spec, reportArgs, applicableSuites(spec));
    }
    if (deform->parsed()) {
      SpecFile spec = loadSpec(deformSpec);
      if (deformArgs.degreeCapSet) {
        spec.degreeCap = deformArgs.degreeCap;
        setPolynomialDegreeCap(spec.degreeCap);
      }
      if (!spec.omega) throw PreconditionError("deform needs an \"omega\" entry in the spec");
      const PqnStructure deformed = pqn::deform(spec.structure(), *spec.omega);
      SpecFile out(spec.chart, deformed.pi, deformed.n, deformed.phi);
      out.seed = deformArgs.seedSet ? deformArgs.seed : spec.seed;
      out.degreeCap = spec.degreeCap;
      Json provenance;
      provenance["construction"] = "deformation";
      provenance["omega"] = Json::object();
      for (const auto& [idx, c] : spec.omega->components()) {
        std::string key = "(" + std::to_string(idx[0] + 1) + "," + std::to_string(idx[1] + 1) + ")";
        provenance["omega"][key] = c.str(spec.chart.varNames());
      }
      out.provenance = std::move(provenance);
      writeOutput(printSpec(out), deformArgs.outPath);
      std::cerr << "deformed structure written\n";
      return kExitPass;
    }
    if (generate->parsed()) {
      const SpecFile spec = generateSpec(genSeed, genDim, genDegree);
      writeOutput(printSpec(spec), generateArgs.outPath);
      return kExitPass;
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace pqn::cli
