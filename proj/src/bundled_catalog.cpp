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

#include "nisq/catalog.hpp"

namespace nisq {

namespace {

// Superconducting entries share a modeled gate time of 2^-23 s (~119 ns) and the
// trapped-ion entry uses exactly 1000x that value. Both are binary-exact so the
// gate-speed ratio survives floating-point arithmetic at any depth.
constexpr const char* kBundledCatalog = R"json({
  "schema_version": 1,
  "qpus": [
    {
      "id": "google-sycamore-2022",
      "modality": "superconducting",
      "qubit_count": 72,
      "two_qubit_error_median": 0.006,
      "two_qubit_error_stddev": null,
      "two_qubit_gate_time": 1.1920928955078125e-07,
      "readout_time": 1e-06,
      "reset_time": 1e-06,
      "connectivity": "grid-4",
      "power_components": [],
      "status": "available",
      "source_note": "2022 edition, 72 qubits, two-qubit gate fidelity 99.4% (vendor-claimed, median/average not distinguished). Gate/readout/reset times are modeled defaults."
    },
    {
      "id": "ibm-prague",
      "modality": "superconducting",
      "qubit_count": 33,
      "two_qubit_error_median": 0.0034,
      "two_qubit_error_stddev": null,
      "two_qubit_gate_time": 1.1920928955078125e-07,
      "readout_time": 1e-06,
      "reset_time": 1e-06,
      "connectivity": "heavy-hex",
      "power_components": [],
      "status": "available",
      "source_note": "IBM Prague (Egret), 99.66% two-qubit fidelity with 33 qubits (vendor best figure). Timing values are modeled defaults."
    },
    {
      "id": "ibm-washington",
      "modality": "superconducting",
      "qubit_count": 127,
      "two_qubit_error_median": 0.012,
      "two_qubit_error_stddev": null,
      "two_qubit_gate_time": 1.1920928955078125e-07,
      "readout_time": 1e-06,
      "reset_time": 1e-06,
      "connectivity": "heavy-hex",
      "power_components": [
        {"label": "whole-system draw (vendor-level figure)", "unit_power_w": 50000, "count": 1, "per_qubit": false}
      ],
      "status": "available",
      "source_note": "IBM Washington (Eagle), 127 qubits, power < 50 kW per published QPU power table. Error rate is an approximate vendor median CX figure, not from the power table."
    },
    {
      "id": "ibm-heron",
      "modality": "superconducting",
      "qubit_count": 133,
      "two_qubit_error_median": 0.001,
      "two_qubit_error_stddev": null,
      "two_qubit_gate_time": 1.1920928955078125e-07,
      "readout_time": 1e-06,
      "reset_time": 1e-06,
      "connectivity": "heavy-hex",
      "power_components": [],
      "status": "projected",
      "source_note": "IBM Heron roadmap target: 133 qubits with 99.9% two-qubit gate fidelity (vendor target, median)."
    },
    {
      "id": "ibm-flamingo",
      "modality": "superconducting",
      "qubit_count": 1386,
      "two_qubit_error_median": 0.001,
      "two_qubit_error_stddev": null,
      "two_qubit_gate_time": 1.1920928955078125e-07,
      "readout_time": 1e-06,
      "reset_time": 1e-06,
      "connectivity": "heavy-hex",
      "power_components": [
        {"label": "pulse tube with compressor", "unit_power_w": 10000, "count": 9, "per_qubit": false},
        {"label": "dilution gas handling and control", "unit_power_w": 1000, "count": 3, "per_qubit": false},
        {"label": "control electronics", "unit_power_w": 20, "count": 0, "per_qubit": true},
        {"label": "PCs, vacuum pump, water cooler", "unit_power_w": 10000, "count": 1, "per_qubit": false}
      ],
      "status": "projected",
      "source_note": "IBM Flamingo roadmap system, 1,386 qubits, estimated < 140 kW. Power built from 9 x 10 kW pulse tubes, 3 x 1 kW dilution GHS, 20 W per qubit electronics, plus an assumed 10 kW miscellaneous. Error rate assumed equal to the Heron target."
    },
    {
      "id": "rigetti-84",
      "modality": "superconducting",
      "qubit_count": 84,
      "two_qubit_error_median": 0.01,
      "two_qubit_error_stddev": null,
      "two_qubit_gate_time": 1.1920928955078125e-07,
      "readout_time": 1e-06,
      "reset_time": 1e-06,
      "connectivity": "grid-4",
      "power_components": [],
      "status": "announced",
      "source_note": "Rigetti roadmap (Feb 2023): 84-qubit QPU with 99% two-qubit gate fidelity (median)."
    },
    {
      "id": "rigetti-336",
      "modality": "superconducting",
      "qubit_count": 336,
      "two_qubit_error_median": 0.005,
      "two_qubit_error_stddev": null,
      "two_qubit_gate_time": 1.1920928955078125e-07,
      "readout_time": 1e-06,
      "reset_time": 1e-06,
      "connectivity": "grid-4",
      "power_components": [],
      "status": "projected",
      "source_note": "Rigetti roadmap (Feb 2023): 336-qubit version at 99.5% two-qubit gate fidelity (median)."
    },
    {
      "id": "quantinuum-h1",
      "modality": "trapped-ion",
      "qubit_count": 20,
      "two_qubit_error_median": 0.002,
      "two_qubit_error_stddev": null,
      "two_qubit_gate_time": 1.1920928955078125e-04,
      "readout_time": 1e-04,
      "reset_time": 1e-04,
      "connectivity": "all-to-all",
      "power_components": [],
      "status": "available",
      "source_note": "Trapped-ion reference: two-qubit gates about 1000x slower than superconducting ones; gate time set to exactly 1000x the superconducting default. Error rate is an approximate vendor average."
    },
    {
      "id": "pasqal-fresnel",
      "modality": "neutral-atom",
      "qubit_count": 100,
      "two_qubit_error_median": 0.005,
      "two_qubit_error_stddev": null,
      "two_qubit_gate_time": 1e-06,
      "readout_time": 1e-02,
      "reset_time": 1e-01,
      "connectivity": "all-to-all",
      "power_components": [
        {"label": "whole-system draw (vendor-level figure)", "unit_power_w": 3000, "count": 1, "per_qubit": false}
      ],
      "status": "available",
      "source_note": "PASQAL Fresnel, 100 atoms, power < 3 kW per published QPU power table. Error rate and timings are typical neutral-atom figures, not from that table."
    }
  ],
  "classical_refs": [
    {
      "id": "nvidia-dgx-rack",
      "description": "Full rack of Nvidia DGX systems",
      "power_draw": 30000,
      "memory_capacity": 8796093022208,
      "tier_hint": "cluster"
    },
    {
      "id": "gpu-cluster-12kw",
      "description": "GPU server cluster emulating about 40 qubits in state-vector mode",
      "power_draw": 12000,
      "memory_capacity": 17592186044416,
      "tier_hint": "cluster"
    },
    {
      "id": "frontier",
      "description": "Frontier supercomputer (ORNL) at full-scale utilization",
      "power_draw": 22000000,
      "memory_capacity": 9.2e15,
      "tier_hint": "hpc"
    },
    {
      "id": "laptop-16gb",
      "description": "Laptop with 16 GiB of memory",
      "power_draw": 100,
      "memory_capacity": 17179869184,
      "tier_hint": "laptop"
    }
  ]
})json";

}  // namespace

const Catalog& bundled_catalog() {
  static const Catalog catalog = parse_catalog(kBundledCatalog).catalog;
  return catalog;
}

}  // namespace nisq
