// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "belyidet/accessory.hpp"
#include "belyidet/basedet.hpp"
#include "belyidet/belyi.hpp"
#include "belyidet/elliptic.hpp"
#include "belyidet/flatdet.hpp"
#include "belyidet/maindet.hpp"
#include "belyidet/stationarity.hpp"

namespace bdet {

using json = nlohmann::json;

// {"name", "numerator": [...], "denominator": [...], "catalog"}; coefficients are
// ascending decimal strings and "catalog" overrides them.
RationalMap map_from_json(const std::string& text);
json map_to_json(const RationalMap& f);

// {"points": [{"re", "im"} | "inf"], "orders": [...], "area"}.
FlatConfiguration flat_config_from_json(const std::string& text);
json flat_config_to_json(const FlatConfiguration& cfg);

json to_json(cplx z);
json to_json(const SpherePoint& p);
json to_json(const Divisor& d);
json to_json(const RamificationData& ram);
json to_json(const LogDetResult& r);
json to_json(const BaseSurface& b);
json to_json(const GluedDeterminantReport& r);
json to_json(const PlatonicReport& r);
json to_json(const StressData& d);
json to_json(const ModularPoint& m);
json to_json(const StationaryPoint& s);
json to_json(const StationarityReport& r);

// Unrounded CSV.
std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string elliptic_csv(const std::vector<EllipticRow>& rows);
std::string csv_number(double v);

}  // namespace bdet
