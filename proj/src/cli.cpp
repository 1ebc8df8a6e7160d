// Copyright 2026 The nisq-gonogo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nisq/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "nisq/advantage.hpp"
#include "nisq/batch.hpp"
#include "nisq/catalog.hpp"
#include "nisq/error.hpp"
#include "nisq/report.hpp"
#include "nisq/workload.hpp"

#ifndef NISQ_VERSION
#define NISQ_VERSION "dev"
#endif

namespace nisq::cli {

namespace {

struct Options {
  std::string command;
  std::string catalog_path;
  std::string workload_path;
  std::string qpu_id;
  std::string out_path;
  std::string format;
  std::string classical_path;
  bool strict = false;
  double parity_band = kDefaultParityBand;
  std::uint64_t parallel_shots = 1;
};

class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path, std::string_view what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(fmt::format("cannot read {} '{}'", what, path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(fmt::format("cannot write '{}'", path));
  out << text;
  out.close();
  if (!out) throw InputError(fmt::format("write to '{}' failed", path));
}

Catalog load_catalog(const Options& o, std::ostream& err) {
  std::string path = o.catalog_path;
  if (path.empty()) {
    if (const char* env = std::getenv(kCatalogEnvVar); env && *env) path = env;
  }
  if (path.empty()) return bundled_catalog();
  ParseOptions po;
  po.strict = o.strict;
  auto parsed = parse_catalog(read_file(path, "catalog"), po);
  for (const auto& w : parsed.warnings) err << "warning: " << w << "\n";
  return std::move(parsed.catalog);
}

std::vector<WorkloadSpec> load_workloads(const Options& o, std::ostream& err) {
  if (o.workload_path.empty()) throw InputError("--workload is required for this command");
  ParseOptions po;
  po.strict = o.strict;
  std::vector<std::string> warnings;
  auto workloads = parse_workloads(read_file(o.workload_path, "workload file"), po, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  if (workloads.empty()) throw InputError("no workloads");
  return workloads;
}

const QpuSpec& require_qpu(const Catalog& catalog, const std::string& id) {
  if (id.empty()) throw InputError("--qpu is required for this command");
  const QpuSpec* q = catalog.find_qpu(id);
  if (!q) throw NotFoundError(fmt::format("unknown QPU id '{}'", id));
  return *q;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
  } else {
    write_file(o.out_path, text);
  }
}

std::string pick_format(const Options& o, std::initializer_list<std::string_view> allowed) {
  const std::string f = o.format.empty() ? std::string(*allowed.begin()) : o.format;
  for (auto a : allowed) {
    if (a == f) return f;
  }
  throw InputError(fmt::format("format '{}' is not supported by '{}'", f, o.command));
}

int cmd_feasibility(const Options& o, std::ostream& out, std::ostream& err) {
  const Catalog catalog = load_catalog(o, err);
  const auto workloads = load_workloads(o, err);
  const auto bundle = build_feasibility_report(catalog, workloads);
  const auto format = pick_format(o, {"md", "csv"});
  emit(o, format == "csv" ? render_feasibility_csv(bundle) : render_feasibility_markdown(bundle), out);
  return bundle.any_go() ? kExitGo : kExitAllNoGo;
}

int cmd_estimate(const Options& o, std::ostream& out, std::ostream& err) {
  const Catalog catalog = load_catalog(o, err);
  const auto workloads = load_workloads(o, err);
  const QpuSpec& qpu = require_qpu(catalog, o.qpu_id);
  const auto format = pick_format(o, {"md", "csv"});
  std::string text;
  for (std::size_t i = 0; i < workloads.size(); ++i) {
    const auto& w = workloads[i];
    BatchOptions bo;
    bo.with_estimates = true;
    bo.parallel_shots = o.parallel_shots;
    const auto r = evaluate_pair(qpu, 0, w, i, bo);
    if (!r.estimate) throw Error(fmt::format("workload '{}': {}", w.id, r.estimate_error));
    if (format == "csv") {
      auto csv = render_estimate_csv(qpu, w, *r.estimate);
      text += i == 0 ? csv : csv.substr(csv.find('\n') + 1);
    } else {
      if (i > 0) text += "\n";
      text += render_estimate_markdown(qpu, w, r.feasibility, *r.estimate, o.parallel_shots);
      if (!r.capacity_error.empty()) text += fmt::format("- capacity: {}\n", r.capacity_error);
    }
  }
  emit(o, text, out);
  return kExitGo;
}

int cmd_scatter(const Options& o, std::ostream& out, std::ostream& err) {
  const Catalog catalog = load_catalog(o, err);
  if (o.out_path.empty()) throw InputError("--out is required for scatter (path stem for .csv/.svg)");
  const auto format = o.format.empty() ? std::string("all") : pick_format(o, {"csv", "svg"});
  std::filesystem::path stem(o.out_path);
  if (stem.extension() == ".csv" || stem.extension() == ".svg") stem.replace_extension();
  std::vector<std::string> emitted;
  if (format == "all" || format == "csv") {
    const auto path = stem.string() + ".csv";
    write_file(path, render_scatter_csv(catalog));
    emitted.push_back(path);
  }
  if (format == "all" || format == "svg") {
    const auto path = stem.string() + ".svg";
    write_file(path, render_scatter_svg(catalog));
    emitted.push_back(path);
  }
  for (const auto& p : emitted) out << "wrote " << p << "\n";
  return kExitGo;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  const Catalog catalog = load_catalog(o, err);
  const auto workloads = load_workloads(o, err);
  if (workloads.size() != 1) throw InputError("compare needs exactly one workload");
  const QpuSpec& qpu = require_qpu(catalog, o.qpu_id);
  if (o.classical_path.empty()) throw InputError("--classical is required for compare");
  ParseOptions po;
  po.strict = o.strict;
  const auto input = parse_comparison_input(read_file(o.classical_path, "classical profile"), catalog, po);

  const auto estimate = estimate_resources(qpu, workloads.front(), o.parallel_shots);
  QuantumSide quantum;
  quantum.qubits = workloads.front().data_qubits;
  quantum.profile.runtime = estimate.runtime.total_time;
  quantum.profile.energy = estimate.energy.job_energy;
  quantum.profile.cost = input.quantum_cost;
  quantum.profile.quality = input.quantum_quality;

  const auto report = classify(quantum, input.classical, o.parity_band);
  const auto format = pick_format(o, {"md", "csv"});
  emit(o, format == "csv" ? render_advantage_csv(report)
                          : render_advantage_markdown(report, quantum, input.classical, o.parity_band),
       out);
  return kExitGo;
}

int cmd_catalog(const Options& o, std::ostream& out, std::ostream& err) {
  const Catalog catalog = load_catalog(o, err);
  emit(o, serialize_catalog(catalog), out);
  return kExitGo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"NISQ feasibility and resource estimator", "nisq-gonogo"};
  app.set_version_flag("--version", NISQ_VERSION);
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--catalog", o.catalog_path, "Catalog JSON (default: $NISQ_GONOGO_CATALOG or bundled)");
    sub->add_flag("--strict", o.strict, "Reject unknown fields instead of warning");
    sub->add_option("--out", o.out_path, "Output path (scatter: path stem)");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "md", "svg"}));
  };
  auto add_workload = [&](CLI::App* sub) {
    sub->add_option("--workload", o.workload_path, "Workload JSON");
  };
  auto add_qpu = [&](CLI::App* sub) {
    sub->add_option("--qpu", o.qpu_id, "QPU id from the catalog");
    sub->add_option("--parallel-shots", o.parallel_shots, "Shots executed concurrently")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
  };

  auto* feas = app.add_subcommand("feasibility", "Go/no-go verdicts for every (QPU, workload) pair");
  add_common(feas);
  add_workload(feas);
  auto* est = app.add_subcommand("estimate", "Shots, runtime and energy for workloads on one QPU");
  add_common(est);
  add_workload(est);
  add_qpu(est);
  auto* scat = app.add_subcommand("scatter", "Emit qubit/error scatter data as CSV and SVG");
  add_common(scat);
  auto* cmp = app.add_subcommand("compare", "Per-axis quantum vs classical advantage table");
  add_common(cmp);
  add_workload(cmp);
  add_qpu(cmp);
  cmp->add_option("--classical", o.classical_path, "Classical profile JSON");
  cmp->add_option("--parity-band", o.parity_band, "Relative parity band")->check(CLI::Range(0.0, 0.999999));
  auto* cat = app.add_subcommand("catalog", "Validate and print a catalog (bundled by default)");
  add_common(cat);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << NISQ_VERSION << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (*feas) return o.command = "feasibility", cmd_feasibility(o, out, err);
    if (*est) return o.command = "estimate", cmd_estimate(o, out, err);
    if (*scat) return o.command = "scatter", cmd_scatter(o, out, err);
    if (*cmp) return o.command = "compare", cmd_compare(o, out, err);
    if (*cat) return o.command = "catalog", cmd_catalog(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace nisq::cli
