// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "symbell/spectra.hpp"

namespace symbell {

// Explicit flag wins, then the SYMBELL_CACHE environment variable; empty
// string disables caching.
std::string resolve_cache_dir(const std::string& flag_value);

// Key covers the canonical operator, the method and every knob that can
// change the report. Readable prefix plus a hash of the full description.
std::string spectral_cache_key(const PauliSum& sum, const std::string& method,
                               const DenseOptions& dense, const IterOptions& iter);

// Returns nothing on any miss, including unreadable or mismatched entries.
std::optional<SpectralReport> cache_load(const std::string& dir, const std::string& key);

// Best effort: failures to persist are silent (the result is still returned
// to the caller by the code path that computed it).
void cache_store(const std::string& dir, const std::string& key,
                 const SpectralReport& report);

}  // namespace symbell
