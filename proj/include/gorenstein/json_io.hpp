#pragma once

// JSON forms of invariant reports, decomposition certificates and CLI
// reports. Keys keep insertion order so output is byte-stable.

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gorenstein/connected_sums.hpp"
#include "gorenstein/decomposition.hpp"
#include "gorenstein/power_series.hpp"
#include "gorenstein/resolutions.hpp"
#include "gorenstein/ring_io.hpp"

namespace gorenstein {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kCertificateFormat = 1;

/// 64-bit FNV-1a, printed as 16 hex digits.
inline std::string fnv1a_digest(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

inline Json to_json(const InvariantReport& r) {
  return Json{{"length", r.length},
              {"edim", r.edim},
              {"type", r.type},
              {"loewy_length", r.loewy_length},
              {"hilbert", r.hilbert},
              {"gorenstein", r.gorenstein},
              {"stretched", r.stretched},
              {"short", r.short_ring},
              {"complete_intersection", r.complete_intersection}};
}

inline Json to_json(const VerificationReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json j{{"name", c.name}, {"ok", c.ok}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(j);
  }
  return Json{{"ok", rep.ok()}, {"checks", checks}};
}

inline Json to_json(const PowerSeries& p) {
  Json a = Json::array();
  for (std::size_t i = 0; i <= p.order(); ++i) a.push_back(p[i].get_str());
  return a;
}

inline Json to_json(const SeriesCheck& c) {
  return Json{{"name", c.name}, {"order", c.order}, {"holds", c.holds()}, {"lhs", to_json(c.lhs.truncated(c.order))},
              {"rhs", to_json(c.rhs.truncated(c.order))}};
}

inline Json to_json(const RationalFit& f) {
  Json num = Json::array(), den = Json::array();
  for (const auto& c : f.numerator) num.push_back(c.get_str());
  for (const auto& c : f.denominator) den.push_back(c.get_str());
  return Json{{"numerator", num}, {"denominator", den}};
}

template <FieldScalar K>
Json to_json(const IdealPresentation<K>& I) {
  return Json{{"field", I.ring->field.to_string()}, {"vars", I.ring->vars}, {"ideal", I.to_strings()}};
}

template <FieldScalar K>
Json to_json(const ArtinAlgebra<K>& A) {
  return Json{{"field", A.field().to_string()}, {"vars", A.ring()->vars},
              {"ideal", A.presentation().to_strings()}};
}

template <FieldScalar K>
std::vector<std::string> poly_strings(const std::vector<Poly<K>>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

template <FieldScalar K>
Json certificate_to_json(const DecompositionCertificate<K>& c, const ArtinAlgebra<K>& Q) {
  return Json{{"format", kCertificateFormat},
              {"kind", "connected_sum"},
              {"field", Q.field().to_string()},
              {"Q_vars", Q.ring()->vars},
              {"y_vars", c.y_vars},
              {"z_vars", c.z_vars},
              {"y_images", poly_strings(c.y_images)},
              {"z_images", poly_strings(c.z_images)},
              {"Q_ideal", c.Q_ideal.to_strings()},
              {"R_ideal", c.R_ideal.to_strings()},
              {"S_ideal", c.S_ideal.to_strings()},
              {"delta_R", c.delta_R.to_string()},
              {"delta_S", c.delta_S.to_string()},
              {"phi", c.phi},
              {"provenance", c.provenance}};
}

namespace detail {

inline const Json& field_of(const Json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::Parse, std::string("certificate is missing '") + key + "'");
  return j.at(key);
}

inline std::vector<std::string> strings_of(const Json& j, const char* key) {
  const auto& v = field_of(j, key);
  if (!v.is_array()) throw Error(ErrorCode::Parse, std::string("'") + key + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw Error(ErrorCode::Parse, std::string("'") + key + "' must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline std::string string_of(const Json& j, const char* key) {
  const auto& v = field_of(j, key);
  if (!v.is_string()) throw Error(ErrorCode::Parse, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

template <FieldScalar K>
std::vector<Poly<K>> parse_all(const RingPtr& ring, const std::vector<std::string>& ss) {
  std::vector<Poly<K>> out;
  for (const auto& s : ss) out.push_back(parse_polynomial<K>(ring, s));
  return out;
}

}  // namespace detail

/// Reads a certificate for Q. Polynomials are re-parsed in their own rings:
/// images in Q's ring, Q_ideal in k[Y,Z], R_ideal and delta_R in k[Y],
/// S_ideal and delta_S in k[Z].
template <FieldScalar K>
DecompositionCertificate<K> certificate_from_json(const Json& j, const ArtinAlgebra<K>& Q) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "certificate must be a JSON object");
  if (j.contains("format") && j.at("format") != kCertificateFormat)
    throw Error(ErrorCode::Parse, "unsupported certificate format");
  auto field = parse_field(detail::string_of(j, "field"));
  if (!(field == Q.field())) throw Error(ErrorCode::CertificateMismatch, "certificate field differs from the ring's field");
  if (j.contains("Q_vars") && detail::strings_of(j, "Q_vars") != Q.ring()->vars)
    throw Error(ErrorCode::CertificateMismatch, "certificate variables differ from the ring's variables");
  DecompositionCertificate<K> c;
  c.y_vars = detail::strings_of(j, "y_vars");
  c.z_vars = detail::strings_of(j, "z_vars");
  auto yz = c.y_vars;
  yz.insert(yz.end(), c.z_vars.begin(), c.z_vars.end());
  auto ring_yz = make_ring(yz, field), ring_y = make_ring(c.y_vars, field), ring_z = make_ring(c.z_vars, field);
  c.y_images = detail::parse_all<K>(Q.ring(), detail::strings_of(j, "y_images"));
  c.z_images = detail::parse_all<K>(Q.ring(), detail::strings_of(j, "z_images"));
  c.Q_ideal = IdealPresentation<K>(ring_yz, detail::parse_all<K>(ring_yz, detail::strings_of(j, "Q_ideal")));
  c.R_ideal = IdealPresentation<K>(ring_y, detail::parse_all<K>(ring_y, detail::strings_of(j, "R_ideal")));
  c.S_ideal = IdealPresentation<K>(ring_z, detail::parse_all<K>(ring_z, detail::strings_of(j, "S_ideal")));
  c.delta_R = parse_polynomial<K>(ring_y, detail::string_of(j, "delta_R"));
  c.delta_S = parse_polynomial<K>(ring_z, detail::string_of(j, "delta_S"));
  const auto& phi = detail::field_of(j, "phi");
  if (!phi.is_number_integer()) throw Error(ErrorCode::Parse, "'phi' must be an integer");
  c.phi = phi.get<int>();
  if (j.contains("provenance") && j.at("provenance").is_string()) c.provenance = j.at("provenance").get<std::string>();
  if (c.y_images.size() != c.y_vars.size() || c.z_images.size() != c.z_vars.size())
    throw Error(ErrorCode::CertificateMismatch, "number of images differs from number of variables");
  return c;
}

inline Json to_json(const IndecomposabilityCertificate& c) {
  return Json{{"kind", "indecomposable"}, {"criterion", to_string(c.kind)}, {"reason", c.reason}};
}

template <FieldScalar K>
Json to_json(const DecompositionResult<K>& r, const ArtinAlgebra<K>& Q) {
  Json j{{"status", to_string(r.kind)}};
  if (r.certificate) {
    j["certificate"] = certificate_to_json(*r.certificate, Q);
    j["R"] = to_json(certificate_component_R(*r.certificate));
    j["S"] = to_json(certificate_component_S(*r.certificate));
  }
  if (r.indecomposable) j["certificate"] = to_json(*r.indecomposable);
  if (!r.diagnostics.empty()) j["diagnostics"] = r.diagnostics;
  return j;
}

/// Top-level CLI report.
struct Report {
  std::vector<std::string> command;
  std::string input_digest;
  Json results = Json::object();
  std::vector<std::string> warnings;

  Json to_json() const {
    return Json{{"command", command}, {"input_digest", input_digest}, {"results", results}, {"warnings", warnings},
                {"version", kVersion}};
  }
};

inline std::string characteristic_two_warning(const FieldSpec& f) {
  return f.kind == FieldKind::PrimeField && f.characteristic == 2
             ? "characteristic 2: connected sum and decomposition results outside the char != 2 theory"
             : std::string();
}

}  // namespace gorenstein
