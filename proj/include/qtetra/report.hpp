// Copyright 2026 The qtetra Authors
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

#ifndef QTETRA_REPORT_HPP_
#define QTETRA_REPORT_HPP_

#include <iosfwd>
#include <string>

#include "qtetra/tomography.hpp"

namespace qtetra {

/// Formats a double with 17 significant digits.
std::string format_double(double x);

/// JSON document described in docs/experiment_report.md.
std::string experiment_report_json(const ExperimentReport& report);

/// One CSV row per target with the same fields, flattened.
void write_experiment_csv(std::ostream& out, const ExperimentReport& report);

}  // namespace qtetra

#endif  // QTETRA_REPORT_HPP_
