#include "json_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <variant>

#include "error.hpp"

namespace adams {
namespace {

std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void dump_rec(const Json& j, int indent, int level, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent * (level + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * level), ' ');
  const char* nl = indent > 0 ? "\n" : "";
  const char* sep = indent > 0 ? ": " : ":";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << '{' << nl;
      bool first = true;
      for (const auto& [key, val] : j.items()) {
        if (!first) out << ',' << nl;
        first = false;
        out << pad << Json(key).dump() << sep;
        dump_rec(val, indent, level + 1, out);
      }
      out << nl << close_pad << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      out << '[' << nl;
      bool first = true;
      for (const auto& val : j) {
        if (!first) out << ',' << nl;
        first = false;
        out << pad;
        dump_rec(val, indent, level + 1, out);
      }
      out << nl << close_pad << ']';
      return;
    }
    case Json::value_t::number_float:
      out << format_number(j.get<double>());
      return;
    default:
      out << j.dump();
      return;
  }
}

Json piece_params(const PieceKind& kind) {
  if (const auto* p = std::get_if<PowerSumPiece>(&kind)) {
    Json terms = Json::array();
    for (const auto& t : p->terms) {
      terms.push_back({{"coef", t.coef}, {"exponent", t.exponent}});
    }
    return {{"shift", p->shift}, {"terms", terms}, {"log_coef", p->log_coef}};
  }
  if (const auto* p = std::get_if<ExpSaturationPiece>(&kind)) {
    return {{"offset", p->offset}, {"coef", p->coef}, {"rate", p->rate},
            {"start", p->start}, {"exponent", p->exponent}};
  }
  if (const auto* p = std::get_if<ExponentialPiece>(&kind)) {
    return {{"offset", p->offset}, {"coef", p->coef}, {"rate", p->rate}};
  }
  if (const auto* p = std::get_if<SplinePiece>(&kind)) {
    return {{"nodes", p->nodes}, {"values", p->values}, {"slopes", p->slopes}};
  }
  throw Error(ErrorCode::kInvalidArgument,
              "profile: mapped pieces cannot be serialized");
}

PieceKind piece_from_json(const std::string& kind, const Json& params) {
  if (kind == "power_sum") {
    PowerSumPiece p;
    p.shift = params.at("shift").get<double>();
    p.log_coef = params.value("log_coef", 0.0);
    for (const auto& t : params.at("terms")) {
      p.terms.push_back({t.at("coef").get<double>(), t.at("exponent").get<double>()});
    }
    return p;
  }
  if (kind == "exp_saturation") {
    return ExpSaturationPiece{params.at("offset").get<double>(),
                              params.at("coef").get<double>(),
                              params.at("rate").get<double>(),
                              params.at("start").get<double>(),
                              params.at("exponent").get<double>()};
  }
  if (kind == "exponential") {
    return ExponentialPiece{params.at("offset").get<double>(),
                            params.at("coef").get<double>(),
                            params.at("rate").get<double>()};
  }
  if (kind == "spline") {
    return SplinePiece{params.at("nodes").get<std::vector<double>>(),
                       params.at("values").get<std::vector<double>>(),
                       params.at("slopes").get<std::vector<double>>()};
  }
  throw Error(ErrorCode::kInvalidArgument, "profile: unknown piece_kind '" + kind + "'");
}

}  // namespace

std::string dump_json(const Json& value, int indent) {
  std::ostringstream out;
  dump_rec(value, indent, 0, out);
  return out.str();
}

Json profile_to_json(const PiecewiseProfile& profile) {
  Json out = Json::array();
  const auto& knots = profile.knots();
  for (std::size_t i = 0; i < profile.piece_count(); ++i) {
    out.push_back({{"knot", knots[i]},
                   {"value", piece_value(profile.piece(i), knots[i])},
                   {"piece_kind", piece_kind_name(profile.piece(i))},
                   {"params", piece_params(profile.piece(i))}});
  }
  if (!profile.unbounded()) {
    out.push_back({{"knot", knots.back()},
                   {"value", profile.value(knots.back())},
                   {"piece_kind", "end"},
                   {"params", Json::object()}});
  }
  return out;
}

PiecewiseProfile profile_from_json(const Json& array) {
  try {
    if (!array.is_array() || array.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "profile JSON must be a non-empty array");
    }
    std::vector<double> knots;
    std::vector<PieceKind> pieces;
    bool closed = false;
    for (const auto& item : array) {
      if (closed) {
        throw Error(ErrorCode::kInvalidArgument, "profile JSON: element after 'end'");
      }
      const auto kind = item.at("piece_kind").get<std::string>();
      knots.push_back(item.at("knot").get<double>());
      if (kind == "end") {
        closed = true;
        continue;
      }
      pieces.push_back(piece_from_json(kind, item.at("params")));
    }
    if (!closed) knots.push_back(std::numeric_limits<double>::infinity());
    return PiecewiseProfile(std::move(knots), std::move(pieces));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("profile JSON: ") + e.what());
  }
}

}  // namespace adams
