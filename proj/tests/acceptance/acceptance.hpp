// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#pragma once

#include <string>

namespace acceptance {

// Each criterion runs standalone and reports pass/fail plus a one-line
// summary of what was measured.
bool geometry_oracles(std::string& detail);        // 1
bool registration_recovery(std::string& detail);   // 2
bool planner_optimality(std::string& detail);      // 3
bool admittance_physics(std::string& detail);      // 4
bool coupled_extraction_ab(std::string& detail);   // 5
bool dither_envelope(std::string& detail);         // 6
bool tour_approximation(std::string& detail);      // 7
bool failure_table_replication(std::string& detail);  // 8
bool end_to_end_suites(std::string& detail);       // 9
bool pipeline_smoke(std::string& detail);          // 10

}  // namespace acceptance
