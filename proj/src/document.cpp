#include "yangbax/document.hpp"

namespace yangbax {

using nlohmann::ordered_json;

ordered_json scalar_to_json(const Scalar& s) {
  if (s.is_exact()) return s.to_string();
  const auto z = s.to_complex();
  return ordered_json::array({z.real(), z.imag()});
}

Scalar scalar_from_json(const ordered_json& j, Field mode) {
  if (mode == Field::rational) {
    if (!j.is_string()) throw ParseError("rational entries must be strings such as \"3/4\"");
    const auto text = j.get<std::string>();
    if (text.find('.') != std::string::npos) throw ParseError("rational entry '" + text + "' must be p or p/q");
    return Scalar::parse_rational(text);
  }
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return Scalar::complex(j[0].get<double>(), j[1].get<double>());
  }
  if (j.is_number()) return Scalar::complex(j.get<double>());
  throw ParseError("complex entries must be [re, im] pairs");
}

namespace {

ordered_json matrix_to_json(const VertexMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < 4; ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < 4; ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

VertexMatrix matrix_from_json(const ordered_json& j, Field mode, const char* name) {
  if (!j.is_array() || j.size() != 4) throw ParseError(std::string("matrix ") + name + " must have 4 rows");
  VertexMatrix m;
  for (std::size_t r = 0; r < 4; ++r) {
    if (!j[r].is_array() || j[r].size() != 4) throw ParseError(std::string("matrix ") + name + " must have 4 columns");
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = scalar_from_json(j[r][c], mode);
  }
  return m;
}

}  // namespace

ordered_json to_json(const TripletDocument& doc) {
  ordered_json j;
  j["format_version"] = doc.format_version;
  j["scalar_mode"] = std::string(to_string(doc.scalar_mode));
  j["A"] = matrix_to_json(doc.triplet.a);
  j["B"] = matrix_to_json(doc.triplet.b);
  j["C"] = matrix_to_json(doc.triplet.c);
  if (!doc.provenance.is_null()) j["provenance"] = doc.provenance;
  return j;
}

TripletDocument document_from_json(const ordered_json& j) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  for (const char* key : {"format_version", "scalar_mode", "A", "B", "C"}) {
    if (!j.contains(key)) throw ParseError(std::string("document is missing '") + key + "'");
  }
  TripletDocument doc;
  doc.format_version = j.at("format_version").get<std::string>();
  if (doc.format_version.substr(0, doc.format_version.find('.')) != "1") {
    throw ParseError("unsupported format_version '" + doc.format_version + "'");
  }
  try {
    doc.scalar_mode = field_from_string(j.at("scalar_mode").get<std::string>());
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  doc.triplet = {matrix_from_json(j.at("A"), doc.scalar_mode, "A"), matrix_from_json(j.at("B"), doc.scalar_mode, "B"),
                 matrix_from_json(j.at("C"), doc.scalar_mode, "C")};
  if (j.contains("provenance")) doc.provenance = j.at("provenance");
  return doc;
}

std::string dump_document(const TripletDocument& doc) { return to_json(doc).dump(2) + "\n"; }

TripletDocument parse_document(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return document_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid document: ") + e.what());
  }
}

}  // namespace yangbax
