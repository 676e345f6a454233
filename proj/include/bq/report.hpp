#pragma once

#include <string>

#include "bq/claims.hpp"

namespace bq {

/// Stable-field-order JSON rendering of a certificate. elapsed is only
/// included when with_timestamps is set, keeping default output
/// byte-reproducible across runs.
std::string certificate_json(const Certificate& cert, bool with_timestamps = false);

/// Markdown rendering, one section per claim, cross-referenced to its
/// source anchor.
std::string certificate_markdown(const Certificate& cert, bool with_timestamps = false);

/// Plain text, one line per claim.
std::string certificate_text(const Certificate& cert, bool with_timestamps = false);

void write_file(const std::string& path, const std::string& content);

}  // namespace bq
