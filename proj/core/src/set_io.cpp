#include "minklab/set_io.hpp"

#include <json.hpp>

namespace minklab {

using nlohmann::json;

namespace {

// Best-effort source location of a token, for error messages on inputs that
// parsed as JSON but violate the rational-string contract.
std::string near_line(const std::string& text, const std::string& token) {
  const size_t pos = text.find(token);
  if (pos == std::string::npos) return "";
  size_t line = 1;
  for (size_t i = 0; i < pos; ++i)
    if (text[i] == '\n') ++line;
  return " (near line " + std::to_string(line) + ")";
}

Rational parse_rational_field(const json& v, const std::string& path, const std::string& text) {
  if (v.is_number()) {
    throw ParseError("set json: " + path + ": bare number " + v.dump() +
                     " is not accepted; rationals are strings \"p\" or \"p/q\"" +
                     near_line(text, v.dump()));
  }
  if (!v.is_string())
    throw ParseError("set json: " + path + ": expected a rational string, got " + v.dump());
  const std::string s = v.get<std::string>();
  auto r = Rational::parse(s);
  if (!r) {
    std::string hint;
    if (s.find('.') != std::string::npos)
      hint = "; decimal literals are rejected, write an exact fraction such as \"1/2\"";
    throw ParseError("set json: " + path + ": invalid rational \"" + s + "\"" + hint +
                     near_line(text, "\"" + s + "\""));
  }
  return *r;
}

Point parse_point(const json& v, int dim, const std::string& path, const std::string& text) {
  if (!v.is_array() || v.size() != static_cast<size_t>(dim))
    throw ParseError("set json: " + path + ": expected an array of " + std::to_string(dim) +
                     " rational strings");
  std::vector<Rational> coords;
  coords.reserve(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    coords.push_back(parse_rational_field(v[i], path + "[" + std::to_string(i) + "]", text));
  return Point(std::move(coords));
}

json rational_array(const Point& p) {
  json a = json::array();
  for (int i = 0; i < p.dim(); ++i) a.push_back(p[i].str());
  return a;
}

json measure_to_json(const MeasureResult& r) {
  json j;
  j["kind"] = measure_kind_name(r.kind);
  j["value_lo"] = r.value_lo.str();
  j["value_hi"] = r.value_hi.str();
  if (r.squared) j["squared"] = r.squared->str();
  j["upper_is_heuristic"] = r.upper_is_heuristic;
  json c;
  c["type"] = certificate_kind_name(r.certificate.kind);
  if (r.certificate.seed) c["seed"] = *r.certificate.seed;
  if (r.certificate.samples) c["samples"] = *r.certificate.samples;
  if (r.certificate.tolerance) c["tolerance"] = r.certificate.tolerance->str();
  if (r.certificate.witness) c["witness"] = rational_array(*r.certificate.witness);
  j["certificate"] = std::move(c);
  return j;
}

std::string value_or_upper(const MeasureResult& r) {
  return r.value_hi.str();  // equals value_lo when exact
}

}  // namespace

CompactSet parse_set(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    // e.byte is a 1-based offset into the input.
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < json_text.size(); ++i) {
      if (json_text[i] == '\n') { ++line; col = 1; } else { ++col; }
    }
    throw ParseError("set json: parse error at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + e.what());
  }

  if (!j.is_object()) throw ParseError("set json: top level must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long>() < 1)
    throw ParseError("set json: \"dim\" must be an integer >= 1");
  if (!j.contains("rep") || !j["rep"].is_string())
    throw ParseError("set json: \"rep\" must be \"points\", \"boxes\" or \"intervals\"");
  if (!j.contains("data") || !j["data"].is_array() || j["data"].empty())
    throw ParseError("set json: \"data\" must be a nonempty array");

  const int dim = j["dim"].get<int>();
  const std::string rep = j["rep"].get<std::string>();
  const json& data = j["data"];

  try {
    CompactSet result = [&]() -> CompactSet {
      if (rep == "points") {
        std::vector<Point> pts;
        pts.reserve(data.size());
        for (size_t i = 0; i < data.size(); ++i)
          pts.push_back(parse_point(data[i], dim, "data[" + std::to_string(i) + "]", json_text));
        return CompactSet::points(std::move(pts));
      }
      if (rep == "boxes") {
        std::vector<AxisBox> boxes;
        boxes.reserve(data.size());
        for (size_t i = 0; i < data.size(); ++i) {
          const std::string path = "data[" + std::to_string(i) + "]";
          const json& e = data[i];
          if (!e.is_object() || !e.contains("lo") || !e.contains("hi"))
            throw ParseError("set json: " + path + ": expected {\"lo\": [...], \"hi\": [...]}");
          boxes.emplace_back(parse_point(e["lo"], dim, path + ".lo", json_text),
                             parse_point(e["hi"], dim, path + ".hi", json_text));
        }
        return CompactSet::boxes(std::move(boxes));
      }
      if (rep == "intervals") {
        if (dim != 1) throw ParseError("set json: intervals require dim = 1");
        std::vector<Interval> ivs;
        ivs.reserve(data.size());
        for (size_t i = 0; i < data.size(); ++i) {
          const std::string path = "data[" + std::to_string(i) + "]";
          const json& e = data[i];
          if (!e.is_array() || e.size() != 2)
            throw ParseError("set json: " + path + ": expected [lo, hi]");
          ivs.emplace_back(parse_rational_field(e[0], path + "[0]", json_text),
                           parse_rational_field(e[1], path + "[1]", json_text));
        }
        return CompactSet::intervals(std::move(ivs));
      }
      throw ParseError("set json: unknown rep \"" + rep + "\"");
    }();

    if (j.contains("cross")) {
      const json& c = j["cross"];
      CrossSpec spec;
      spec.n = c.at("n").get<int>();
      spec.p = c.at("p").get<int>();
      spec.side1 = parse_rational_field(c.at("side1"), "cross.side1", json_text);
      spec.side2 = parse_rational_field(c.at("side2"), "cross.side2", json_text);
      CompactSet rebuilt = cross_build(spec);
      if (!set_equal(rebuilt, result))
        throw ParseError("set json: \"cross\" tag does not describe the data");
      return rebuilt;
    }
    return result;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("set json: ") + e.what());
  }
}

std::string serialize_set(const CompactSet& s) {
  json j;
  j["dim"] = s.dim();
  j["rep"] = rep_name(s.rep());
  json data = json::array();
  switch (s.rep()) {
    case Rep::Points:
      for (const auto& p : s.point_data()) data.push_back(rational_array(p));
      break;
    case Rep::Boxes:
      for (const auto& b : s.box_data()) {
        json e;
        e["lo"] = rational_array(b.lo);
        e["hi"] = rational_array(b.hi);
        data.push_back(std::move(e));
      }
      break;
    case Rep::Intervals:
      for (const auto& iv : s.interval_data())
        data.push_back(json::array({iv.lo.str(), iv.hi.str()}));
      break;
  }
  j["data"] = std::move(data);
  if (s.cross_tag()) {
    json c;
    c["n"] = s.cross_tag()->n;
    c["p"] = s.cross_tag()->p;
    c["side1"] = s.cross_tag()->side1.str();
    c["side2"] = s.cross_tag()->side2.str();
    j["cross"] = std::move(c);
  }
  return j.dump(2) + "\n";
}

std::string serialize_measure(const MeasureResult& r) {
  return measure_to_json(r).dump(2) + "\n";
}

std::string serialize_report(const Report& r) {
  json j;
  j["claim_id"] = r.claim_id;
  j["instances"] = r.instances;
  j["violations"] = r.violations;
  j["skipped"] = r.skipped;
  j["worst_margin"] = r.worst_margin ? json(r.worst_margin->str()) : json(nullptr);
  json w = json::array();
  for (const auto& s : r.witnesses) w.push_back(json::parse(s));
  j["witnesses"] = std::move(w);
  json d = json::object();
  for (const auto& [k, v] : r.details) d[k] = v;
  j["details"] = std::move(d);
  j["sidecar"] = json{{"runtime_ms", r.runtime_ms}};
  return j.dump(2) + "\n";
}

std::string rate_table_csv(const RateTable& t) {
  std::string out = "k,delta,d_lo,d_hi,c,k_delta,k_d_lo,k_d_hi,k_c\n";
  for (const auto& row : t.rows) {
    const Rational k(static_cast<long>(row.k));
    out += std::to_string(row.k);
    out += "," + value_or_upper(row.delta);
    out += "," + row.hausdorff.value_lo.str();
    out += "," + row.hausdorff.value_hi.str();
    out += "," + value_or_upper(row.schneider);
    out += "," + (k * row.delta.value_hi).str();
    out += "," + (k * row.hausdorff.value_lo).str();
    out += "," + (k * row.hausdorff.value_hi).str();
    out += "," + (k * row.schneider.value_hi).str();
    out += "\n";
  }
  return out;
}

std::string serialize_rate_table(const RateTable& t) {
  json j;
  j["label"] = t.label;
  j["dim"] = t.dim;
  j["rep"] = rep_name(t.rep);
  json rows = json::array();
  for (const auto& row : t.rows) {
    json e;
    e["k"] = row.k;
    e["delta"] = measure_to_json(row.delta);
    e["hausdorff"] = measure_to_json(row.hausdorff);
    e["schneider"] = measure_to_json(row.schneider);
    rows.push_back(std::move(e));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace minklab
