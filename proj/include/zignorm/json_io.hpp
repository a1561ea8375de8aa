#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "zignorm/normalisation.hpp"
#include "zignorm/typecheck.hpp"
#include "zignorm/zigzag.hpp"

namespace zignorm::io {

inline constexpr const char* kFormatTag = "zignorm/1";

nlohmann::json encode_diagram(const Diagram& d);
/// Maps serialise without their endpoints; only 0-maps name their generators.
/// The regular monotone is never serialised.
nlohmann::json encode_map(const DiagramMap& f);

Diagram decode_diagram(const nlohmann::json& j, const std::string& where = "");
DiagramMap decode_map(const nlohmann::json& j, const Diagram& source, const Diagram& target,
                      const std::string& where = "");

/// Canonical text: sorted object keys, no floating point, UTF-8, LF, one
/// trailing newline.  Structural equality of values coincides with byte
/// equality of their encodings.
std::string canonical_text(const nlohmann::json& payload);
nlohmann::json parse_file_text(const std::string& text);

std::string write_diagram_text(const Diagram& d);
Diagram read_diagram_text(const std::string& text);

/// A map file embeds its endpoint diagrams: {"source":…, "target":…, "map":…}.
std::string write_map_text(const DiagramMap& f);
DiagramMap read_map_text(const std::string& text);

std::string write_signature_text(const Signature& sig);
Signature read_signature_text(const std::string& text, std::vector<std::string>* warnings = nullptr);

std::string write_normalisation_text(const NormalisationResult& result);
std::string write_verdict_text(const TypecheckVerdict& verdict);

}  // namespace zignorm::io
