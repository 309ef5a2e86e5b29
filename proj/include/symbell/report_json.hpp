// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include "symbell/bounds.hpp"
#include "symbell/pi_notation.hpp"
#include "symbell/spectra.hpp"

namespace symbell {

// Exact quantities (Int, Rational) serialize as strings; doubles as numbers.
nlohmann::json to_json(const EigenReport& report);
nlohmann::json to_json(const SpectralReport& report);
nlohmann::json to_json(const TheoremCheck& check);
nlohmann::json to_json(const ConjectureReport& report);
nlohmann::json to_json(const TableRow& row);
nlohmann::json to_json(const BoundResult& result);
nlohmann::json to_json(const CoefficientGroups& groups);

SpectralReport spectral_report_from_json(const nlohmann::json& j);

// {"schema": "symbell/v1", "command", "generated_at", "config", "result"}
nlohmann::json make_envelope(const std::string& command, nlohmann::json config,
                             nlohmann::json result);

}  // namespace symbell
