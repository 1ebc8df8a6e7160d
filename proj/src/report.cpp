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

#include "nisq/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <tuple>

#include <fmt/format.h>

#include "nisq/feasibility.hpp"
#include "nisq/format.hpp"

#ifndef NISQ_VERSION
#define NISQ_VERSION "dev"
#endif

namespace nisq {

namespace {

std::string coord(double v) { return fmt::format("{:.2f}", v); }

std::string qubits(std::uint64_t n) { return fmt::format("{} qubits", n); }

std::string error_cell(double error_rate) {
  return fmt::format("{:.3e} ({})", error_rate, format_fidelity(error_rate));
}

std::string percent(double p) { return fmt::format("{:.4g}%", 100.0 * p); }

}  // namespace

std::string format_scientific(double value) {
  if (!std::isfinite(value)) return "astronomical";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific);
  std::string s(buf, ec == std::errc() ? end : buf);
  const auto e = s.find('e');
  if (e == std::string::npos) return s;
  std::string mantissa = s.substr(0, e);
  std::string exponent = s.substr(e + 1);
  bool negative = false;
  if (!exponent.empty() && (exponent[0] == '+' || exponent[0] == '-')) {
    negative = exponent[0] == '-';
    exponent.erase(0, 1);
  }
  exponent.erase(0, std::min(exponent.find_first_not_of('0'), exponent.size() - 1));
  return mantissa + "e" + (negative ? "-" : "") + exponent;
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

bool ReportBundle::any_go() const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const VerdictRow& r) { return r.feasibility.verdict == Verdict::go; });
}

ReportBundle build_feasibility_report(const Catalog& catalog, std::span<const WorkloadSpec> workloads) {
  const auto results = evaluate_pairs(catalog.qpus, workloads);
  ReportBundle bundle;
  bundle.verdicts.reserve(results.size());
  for (const auto& r : results) {
    const auto& qpu = catalog.qpus[r.qpu_index];
    const auto& w = workloads[r.workload_index];
    VerdictRow row;
    row.qpu_id = qpu.id;
    row.workload_id = w.id;
    row.shape = w.shape();
    row.feasibility = r.feasibility;
    row.tier = emulation_tier(w.data_qubits, w.depth, qpu.two_qubit_error_median);
    row.note = r.capacity_error;
    bundle.verdicts.push_back(std::move(row));
  }
  std::stable_sort(bundle.verdicts.begin(), bundle.verdicts.end(), [](const VerdictRow& a, const VerdictRow& b) {
    return std::tie(a.feasibility.verdict, a.feasibility.required_error_rate, a.qpu_id, a.workload_id) <
           std::tie(b.feasibility.verdict, b.feasibility.required_error_rate, b.qpu_id, b.workload_id);
  });
  return bundle;
}

std::string render_feasibility_markdown(const ReportBundle& bundle) {
  std::string out = "# Feasibility\n\n";
  out +=
      "| QPU | workload | circuit | required error | available error | success probability | verdict | "
      "emulation tier | notes |\n";
  out += "|---|---|---|---|---|---|---|---|---|\n";
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : bundle.verdicts) {
    ++counts[static_cast<int>(r.feasibility.verdict)];
    std::string notes = r.note;
    if (r.feasibility.optimistic) notes += std::string(notes.empty() ? "" : "; ") + "optimistic (stddev unreported)";
    out += fmt::format("| {} | {} | {} x {} cycles | {} | {} | {} | {} | {} | {} |\n", r.qpu_id, r.workload_id,
                       qubits(r.shape.breadth), r.shape.depth, error_cell(r.feasibility.required_error_rate),
                       error_cell(r.feasibility.available_error_rate), percent(r.feasibility.success_probability),
                       to_string(r.feasibility.verdict), to_string(r.tier), notes);
  }
  out += fmt::format("\n{} pairs: {} go, {} marginal, {} no-go\n", bundle.verdicts.size(), counts[0], counts[1],
                     counts[2]);
  return out;
}

std::string render_feasibility_csv(const ReportBundle& bundle) {
  std::string out =
      "qpu_id,workload_id,breadth,depth,required_error_rate,available_error_rate,success_probability,verdict,"
      "optimistic,emulation_tier,note\n";
  for (const auto& r : bundle.verdicts) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", csv_field(r.qpu_id), csv_field(r.workload_id),
                       r.shape.breadth, r.shape.depth, format_number(r.feasibility.required_error_rate),
                       format_number(r.feasibility.available_error_rate),
                       format_number(r.feasibility.success_probability), to_string(r.feasibility.verdict),
                       r.feasibility.optimistic ? "true" : "false", to_string(r.tier), csv_field(r.note));
  }
  return out;
}

std::string render_estimate_markdown(const QpuSpec& qpu, const WorkloadSpec& workload,
                                     const FeasibilityVerdict& feasibility, const ResourceEstimate& estimate,
                                     std::uint64_t parallel_shots) {
  const auto& s = estimate.shots;
  const auto& rt = estimate.runtime;
  const auto& en = estimate.energy;
  std::string out = fmt::format("# Resource estimate: {} on {}\n\n", workload.id, qpu.id);

  out += "## Workload\n\n";
  out += fmt::format("- family: {}\n", to_string(workload.family));
  out += fmt::format("- circuit: {} x {} gate cycles\n", qubits(workload.data_qubits), workload.depth);
  if (workload.qaoa_layers) out += fmt::format("- QAOA layers: {} layers\n", *workload.qaoa_layers);
  out += fmt::format("- target precision: {} (standard error per observable)\n", format_number(workload.target_epsilon));
  out += fmt::format("- ansatz iterations: {} iterations\n", workload.ansatz_iterations);
  out += fmt::format("- classical time per iteration: {}\n\n", format_duration(workload.classical_prep_time));

  out += "## Feasibility\n\n";
  out += fmt::format("- required error rate: {}\n", error_cell(feasibility.required_error_rate));
  out += fmt::format("- available error rate: {}\n", error_cell(feasibility.available_error_rate));
  out += fmt::format("- circuit success probability: {}\n", percent(feasibility.success_probability));
  out += fmt::format("- verdict: {}{}\n\n", to_string(feasibility.verdict),
                     feasibility.optimistic ? " (optimistic: error stddev unreported)" : "");

  out += "## Shot plan\n\n";
  out += fmt::format("- model: {}\n",
                     s.aggregate_model ? "QAOA aggregate, ceil(n^2/eps) shots in total"
                                       : "Pauli strings x ceil(1/eps^2) shots per string");
  out += fmt::format("- Pauli strings: {} strings\n", s.pauli_strings);
  out += fmt::format("- shots per string: {} shots\n", s.shots_per_string);
  out += fmt::format("- mitigation multiplier: {} x\n", format_number(s.mitigation_multiplier));
  out += fmt::format("- total shots: {} shots per iteration\n\n", format_scientific(s.total_shots));

  out += "## Runtime\n\n";
  out += fmt::format("- single shot: {}\n", format_duration(rt.single_shot_time));
  out += fmt::format("- quantum time per iteration: {}\n", format_duration(rt.quantum_time_per_iteration));
  out += fmt::format("- classical time per iteration: {}\n", format_duration(rt.classical_time_per_iteration));
  out += fmt::format("- iteration time: {}\n", format_duration(rt.iteration_time));
  out += fmt::format("- total time: {}\n", format_duration(rt.total_time));
  if (parallel_shots > 1) out += fmt::format("- parallel shots: {} concurrent shots\n", parallel_shots);
  out += "\n| term | time |\n|---|---|\n";
  for (const auto& t : rt.breakdown) out += fmt::format("| {} | {} |\n", t.label, format_duration(t.seconds));

  out += "\n## Energy\n\n";
  out += fmt::format("- power draw: {} W ({})\n", format_number(en.power_draw), format_power(en.power_draw));
  out += fmt::format("- job energy: {} J ({})\n", format_number(en.job_energy), format_energy(en.job_energy));
  if (!en.breakdown.empty()) {
    out += "\n| component | power |\n|---|---|\n";
    for (const auto& t : en.breakdown) out += fmt::format("| {} | {} W |\n", t.label, format_number(t.watts));
  } else {
    out += "- no power components recorded for this QPU\n";
  }

  out += "\n## Notes\n\n";
  out += "- the full shot budget is spent on every iteration (conservative)\n";
  if (workload.family == Family::vqe && workload.pauli_grouping == PauliGrouping::grouped) {
    out += "- grouped Pauli measurement needs longer circuits, which may be prohibitive on NISQ hardware\n";
  }
  if (workload.family == Family::vqe) {
    out += "- reference point: ferredoxin (Fe2S2, 112 spin-orbitals) was estimated at 1e19 shots and 1e26 gate "
           "operations\n";
  }
  if (qpu.status != QpuStatus::available) {
    out += fmt::format("- QPU status is {}: figures are vendor projections\n", to_string(qpu.status));
  }
  return out;
}

std::string render_estimate_csv(const QpuSpec& qpu, const WorkloadSpec& workload, const ResourceEstimate& e) {
  std::string out =
      "qpu_id,workload_id,pauli_strings,shots_per_string,mitigation_multiplier,total_shots,shot_model,"
      "single_shot_time_s,iteration_time_s,total_time_s,power_w,job_energy_j\n";
  out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}\n", csv_field(qpu.id), csv_field(workload.id),
                     e.shots.pauli_strings, e.shots.shots_per_string, format_number(e.shots.mitigation_multiplier),
                     format_number(e.shots.total_shots), e.shots.aggregate_model ? "qaoa-aggregate" : "per-string",
                     format_number(e.runtime.single_shot_time), format_number(e.runtime.iteration_time),
                     format_number(e.runtime.total_time), format_number(e.energy.power_draw),
                     format_number(e.energy.job_energy));
  return out;
}

std::string render_advantage_markdown(const AdvantageReport& report, const QuantumSide& quantum,
                                      const ClassicalSide& classical, double parity_band) {
  std::string out = "# Advantage comparison\n\n";
  out += fmt::format("parity band: {}% relative\n\n", format_number(100.0 * parity_band));
  auto opt = [](const std::optional<double>& v, std::string_view unit) {
    return v ? fmt::format("{} {}", format_number(*v), unit) : std::string("absent");
  };
  auto axis_values = [&](Axis a) -> std::pair<std::string, std::string> {
    const auto& q = quantum.profile;
    const auto& c = classical.profile;
    switch (a) {
      case Axis::space:
        return {quantum.qubits ? fmt::format("{} ({} state vector)", qubits(*quantum.qubits),
                                             *quantum.qubits > kMaxStatevectorQubits
                                                 ? std::string("astronomical")
                                                 : format_bytes(statevector_memory(*quantum.qubits)))
                               : std::string("absent"),
                classical.memory_capacity ? format_bytes(*classical.memory_capacity) : std::string("absent")};
      case Axis::speed: return {format_duration(q.runtime), format_duration(c.runtime)};
      case Axis::quality: return {opt(q.quality, "score"), opt(c.quality, "score")};
      case Axis::energetic: return {opt(q.energy, "J"), opt(c.energy, "J")};
      case Axis::cost: return {opt(q.cost, "currency units"), opt(c.cost, "currency units")};
    }
    return {"", ""};
  };
  out += "| axis | quantum | classical | outcome |\n|---|---|---|---|\n";
  for (Axis a : kAllAxes) {
    auto [qv, cv] = axis_values(a);
    out += fmt::format("| {} | {} | {} | {} |\n", to_string(a), qv, cv, to_string(report.at(a)));
  }
  if (!classical.ref_id.empty()) out += fmt::format("\nclassical reference: {}\n", classical.ref_id);
  if (report.note) out += fmt::format("\nnote: {}\n", *report.note);
  return out;
}

std::string render_advantage_csv(const AdvantageReport& report) {
  std::string out = "axis,outcome\n";
  for (Axis a : kAllAxes) out += fmt::format("{},{}\n", to_string(a), to_string(report.at(a)));
  return out;
}

std::string render_scatter_csv(const Catalog& catalog) {
  std::string out = "qpu_id,qubit_count,two_qubit_error_median,status,modality\n";
  for (const auto& q : catalog.qpus) {
    out += fmt::format("{},{},{},{},{}\n", csv_field(q.id), q.qubit_count, format_number(q.two_qubit_error_median),
                       to_string(q.status), to_string(q.modality));
  }
  return out;
}

double frontier_error(double qubits, double depth) { return 1.0 / (depth * qubits); }

double ScatterFrame::x_of(double qubits) {
  const double span = std::log10(kMaxQubits) - std::log10(kMinQubits);
  const double t = (std::log10(std::clamp(qubits, kMinQubits, kMaxQubits)) - std::log10(kMinQubits)) / span;
  return kLeft + t * (kWidth - kLeft - kRight);
}

double ScatterFrame::y_of(double error_rate) {
  const double span = std::log10(kMaxError) - std::log10(kMinError);
  const double t = (std::log10(std::clamp(error_rate, kMinError, kMaxError)) - std::log10(kMinError)) / span;
  return kTop + t * (kHeight - kTop - kBottom);
}

namespace {

const char* status_colour(QpuStatus s) {
  switch (s) {
    case QpuStatus::available: return "#1f4e9c";
    case QpuStatus::announced: return "#d9822b";
    case QpuStatus::projected: return "#8e44ad";
  }
  return "#000000";
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Frontier vertices: a log grid plus the worked breadths so they land exactly on the curve.
std::vector<double> frontier_samples() {
  std::vector<double> xs;
  for (int i = 0; i <= 80; ++i) xs.push_back(std::pow(10.0, 4.0 * i / 80.0));
  for (double n : {53.0, 65.0, 127.0, 1121.0}) xs.push_back(n);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

std::string render_scatter_svg(const Catalog& catalog) {
  using F = ScatterFrame;
  const double x0 = F::kLeft, x1 = F::kWidth - F::kRight;
  const double y0 = F::kTop, y1 = F::kHeight - F::kBottom;
  std::string out;
  out += fmt::format("<!-- generated by nisq-gonogo {} -->\n", NISQ_VERSION);
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n",
      F::kWidth, F::kHeight);
  out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n", F::kWidth, F::kHeight);
  out += "<text x=\"450\" y=\"25\" text-anchor=\"middle\" font-size=\"15\">"
         "Two-qubit gate error rate vs qubit count</text>\n";

  // Emulation tier bands (qubit-count thresholds, boundaries inclusive on the cheaper tier).
  struct Band {
    double lo, hi;
    const char* label;
    const char* fill;
  };
  const Band bands[] = {
      {1.0, 18.0, "laptop", "#fff7c2"},
      {18.0, 30.0, "server", "#ffef99"},
      {30.0, 40.0, "cluster", "#ffe066"},
      {40.0, 55.0, "hpc", "#ffd633"},
  };
  out += "<g id=\"emulation-tiers\">\n";
  for (const auto& b : bands) {
    const double bx0 = F::x_of(b.lo), bx1 = F::x_of(b.hi);
    out += fmt::format(
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\" fill-opacity=\"0.6\"><title>{} (state "
        "vector)</title></rect>\n",
        coord(bx0), coord(y0), coord(bx1 - bx0), coord(y1 - y0), b.fill, b.label);
  }
  // Beyond 55 qubits, errors above 1e-3 stay tensor-network tractable.
  {
    const double bx0 = F::x_of(55.0), by = F::y_of(kTensorNetworkErrorThreshold);
    out += fmt::format(
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"#f4d03f\" fill-opacity=\"0.35\"><title>"
        "tensor-network (fidelity under 99.9%)</title></rect>\n",
        coord(bx0), coord(by), coord(x1 - bx0), coord(y1 - by));
  }
  out += "</g>\n";

  // Feasible region: error below 1/(8n), i.e. above the frontier on this axis.
  const auto xs = frontier_samples();
  std::string curve;
  for (double n : xs) {
    if (!curve.empty()) curve += ' ';
    curve += coord(F::x_of(n)) + "," + coord(F::y_of(frontier_error(n)));
  }
  out += fmt::format("<polygon id=\"nisq-useful-zone\" points=\"{} {},{} {},{}\" fill=\"#2ecc71\" "
                     "fill-opacity=\"0.25\" stroke=\"none\"/>\n",
                     curve, coord(x1), coord(y0), coord(x0), coord(y0));
  out += fmt::format("<polyline id=\"frontier\" points=\"{}\" fill=\"none\" stroke=\"#117a43\" "
                     "stroke-width=\"2\"/>\n",
                     curve);

  // Axes, ticks and grid.
  out += "<g id=\"axes\" stroke=\"#333333\">\n";
  out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\"/>\n", coord(x0), coord(y1), coord(x1));
  out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\"/>\n", coord(x0), coord(y0), coord(y1));
  for (int e = 0; e <= 4; ++e) {
    const double x = F::x_of(std::pow(10.0, e));
    out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke-opacity=\"0.2\"/>\n", coord(x),
                       coord(y0), coord(y1));
    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" stroke=\"none\">{}</text>\n", coord(x),
                       coord(y1 + 18), static_cast<long>(std::lround(std::pow(10.0, e))));
  }
  for (int e = -6; e <= -1; ++e) {
    const double y = F::y_of(std::pow(10.0, e));
    out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke-opacity=\"0.2\"/>\n", coord(x0),
                       coord(y), coord(x1));
    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\" stroke=\"none\">1e{} ({})</text>\n",
                       coord(x0 - 6), coord(y + 4), e, xml_escape(format_fidelity(std::pow(10.0, e))));
  }
  out += "</g>\n";
  out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">physical qubits (log scale)</text>\n",
                     coord((x0 + x1) / 2), coord(F::kHeight - 25));
  out += fmt::format(
      "<text x=\"20\" y=\"{0}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {0})\">two-qubit gate error rate "
      "(log scale)</text>\n",
      coord((y0 + y1) / 2));

  // QPU markers.
  out += "<g id=\"qpus\">\n";
  for (const auto& q : catalog.qpus) {
    const double x = F::x_of(static_cast<double>(q.qubit_count));
    const double y = F::y_of(q.two_qubit_error_median);
    out += fmt::format(
        "<circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"{}\"><title>{}: {} qubits, error {}</title></circle>\n",
        coord(x), coord(y), status_colour(q.status), xml_escape(q.id), q.qubit_count,
        format_number(q.two_qubit_error_median));
    out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"10\">{}</text>\n", coord(x + 7), coord(y - 6),
                       xml_escape(q.id));
  }
  out += "</g>\n";

  // Legend.
  const double lx = x1 + 20;
  double ly = y0 + 10;
  out += "<g id=\"legend\">\n";
  auto legend_line = [&](const std::string& swatch, std::string_view text) {
    out += swatch;
    out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", coord(lx + 22), coord(ly + 4), xml_escape(text));
    ly += 20;
  };
  legend_line(fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#117a43\" stroke-width=\"2\"/>\n",
                          coord(lx), coord(ly), coord(lx + 16), coord(ly)),
              "frontier: error = 1/(8 n)");
  legend_line(fmt::format("<rect x=\"{}\" y=\"{}\" width=\"16\" height=\"10\" fill=\"#2ecc71\" "
                          "fill-opacity=\"0.25\"/>\n",
                          coord(lx), coord(ly - 5)),
              "NISQ-useful at depth 8");
  for (const auto& b : bands) {
    legend_line(fmt::format("<rect x=\"{}\" y=\"{}\" width=\"16\" height=\"10\" fill=\"{}\"/>\n", coord(lx),
                            coord(ly - 5), b.fill),
                fmt::format("{} emulation ({}-{} qubits)", b.label, b.lo == 1.0 ? 1 : static_cast<int>(b.lo) + 1,
                            static_cast<int>(b.hi)));
  }
  legend_line(fmt::format("<rect x=\"{}\" y=\"{}\" width=\"16\" height=\"10\" fill=\"#f4d03f\" "
                          "fill-opacity=\"0.35\"/>\n",
                          coord(lx), coord(ly - 5)),
              "tensor-network (>55 qubits, error > 1e-3)");
  for (QpuStatus s : {QpuStatus::available, QpuStatus::announced, QpuStatus::projected}) {
    legend_line(fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"{}\"/>\n", coord(lx + 8), coord(ly),
                            status_colour(s)),
                to_string(s));
  }
  out += "</g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace nisq
