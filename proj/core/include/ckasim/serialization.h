// Copyright 2026 The ckasim Authors
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

#ifndef CKASIM_SERIALIZATION_H
#define CKASIM_SERIALIZATION_H

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ckasim/keyrate.h"
#include "ckasim/protocol.h"
#include "ckasim/qstate.h"
#include "ckasim/states.h"
#include "ckasim/witness.h"

namespace ckasim {

using Json = nlohmann::json;

/// {"dim": d, "re": [[...]], "im": [[...]]}
Json to_json(const DensityMatrix &rho);
/// Validates the result as a density operator.
DensityMatrix density_from_json(const Json &j);

/// {"n", "k", "p", "weights"}; weights is null for the uniform family or a
/// list of {"parties": [...], "q": ...}.
Json to_json(const GhzMixtureSpec &spec);
GhzMixtureSpec spec_from_json(const Json &j);

/// {"partition": [side, complement], "coeffs": {label: value}, "violation",
///  "status", "oracle", ...}
Json to_json(const SeparationCertificate &cert);
SeparationCertificate certificate_from_json(const Json &j, const MeasurementSet &meas);

Json to_json(const RateReport &r);
Json to_json(const EstimateReport &r);
Json to_json(const SeparableCheckReport &r);

/// Nine significant digits, '.' decimal point, no locale.
std::string format_csv_double(double v);
std::string csv_line(const std::vector<std::string> &fields);

}  // namespace ckasim

#endif
