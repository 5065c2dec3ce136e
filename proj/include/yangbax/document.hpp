#pragma once

#include <string>

#include <json.hpp>

#include "yangbax/core.hpp"

namespace yangbax {

inline constexpr const char* kFormatVersion = "1.0";

/// JSON form of a triplet. Rationals are "p/q" strings in lowest terms,
/// complex entries are [re, im] pairs of float64.
///
///   {"format_version": "1.0", "scalar_mode": "rational",
///    "A": [[...4 entries...] x 4], "B": ..., "C": ...,
///    "provenance": {"family": "8v", "params": {"x": "2", ...}}}
struct TripletDocument {
  std::string format_version = kFormatVersion;
  Field scalar_mode = Field::rational;
  Triplet triplet;
  /// Free-form object; null when absent.
  nlohmann::ordered_json provenance;
};

nlohmann::ordered_json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::ordered_json& j, Field mode);

nlohmann::ordered_json to_json(const TripletDocument& doc);
/// Throws ParseError on a malformed document.
TripletDocument document_from_json(const nlohmann::ordered_json& j);

std::string dump_document(const TripletDocument& doc);
TripletDocument parse_document(const std::string& text);

}  // namespace yangbax
