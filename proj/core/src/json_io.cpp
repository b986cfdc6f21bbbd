#include "hardyr/json_io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>

#include "hardyr/errors.hpp"

namespace hardyr {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const nlohmann::json& j) {
  if (j.is_number()) return Complex{j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex{j[0].get<double>(), j[1].get<double>()};
  throw SchemaError("expected a number or [re, im] pair");
}

Json poly_to_json(const FourierPoly& f) {
  Json coeffs = Json::array();
  for (const auto& [n, a] : f.coeffs())
    coeffs.push_back(Json::array({n, a.real(), a.imag()}));
  Json j;
  j["coeffs"] = std::move(coeffs);
  return j;
}

FourierPoly poly_from_json(const nlohmann::json& j, double drop_tol) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw SchemaError("polynomial: expected {\"coeffs\": [[n, re, im], ...]}");
  FourierPoly::CoeffMap m;
  for (const auto& entry : j["coeffs"]) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
        !entry[1].is_number() || !entry[2].is_number())
      throw SchemaError("polynomial: coefficient entries must be [n, re, im]");
    m[entry[0].get<int>()] += Complex{entry[1].get<double>(), entry[2].get<double>()};
  }
  return FourierPoly(std::move(m), drop_tol);
}

Json rational_to_json(const RationalDiskFunction& f) {
  Json j;
  j["num"] = poly_to_json(f.num());
  j["den"] = poly_to_json(f.den());
  return j;
}

RationalDiskFunction rational_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw SchemaError("rational: expected {\"num\": poly, \"den\": poly}");
  return RationalDiskFunction(poly_from_json(j["num"]), poly_from_json(j["den"]));
}

namespace {

void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void append_number(std::string& out, const Json& j) {
  if (j.is_number_integer()) {
    out += std::to_string(j.get<std::int64_t>());
    return;
  }
  if (j.is_number_unsigned()) {
    out += std::to_string(j.get<std::uint64_t>());
    return;
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

void dump_rec(std::string& out, const Json& j, int indent, int depth) {
  const std::string pad(static_cast<size_t>(indent) * (static_cast<size_t>(depth) + 1), ' ');
  const std::string close_pad(static_cast<size_t>(indent) * static_cast<size_t>(depth), ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        append_escaped(out, key);
        out += ": ";
        dump_rec(out, value, indent, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        dump_rec(out, value, indent, depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case nlohmann::json::value_t::string:
      append_escaped(out, j.get<std::string>());
      return;
    case nlohmann::json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      return;
    case nlohmann::json::value_t::null:
      out += "null";
      return;
    default:
      append_number(out, j);
      return;
  }
}

}  // namespace

std::string dump_json17(const Json& j, int indent) {
  std::string out;
  dump_rec(out, j, indent, 0);
  out += "\n";
  return out;
}

}  // namespace hardyr
