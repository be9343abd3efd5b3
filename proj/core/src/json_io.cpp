#include "fairslice/json_io.hpp"

#include <algorithm>
#include <utility>

namespace fairslice {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw ValidationError(std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

}  // namespace

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      throw ValidationError(std::string("bad rational: ") + e.what());
    }
  }
  throw ValidationError("rational must be an integer or a \"p/q\" string");
}

Json instance_to_json(const CakeInstance& instance) {
  Json players = Json::array();
  for (int i = 0; i < instance.n(); ++i) {
    Json segments = Json::array();
    for (const Segment& s : instance.players[i].segments()) {
      segments.push_back({{"start", rational_to_json(s.start)},
                          {"end", rational_to_json(s.end)},
                          {"density", rational_to_json(s.density)}});
    }
    Json p = {{"segments", std::move(segments)}};
    if (!instance.names.empty() && !instance.names[i].empty()) p["name"] = instance.names[i];
    players.push_back(std::move(p));
  }
  Json out = {{"players", std::move(players)}};
  if (instance.raw) out["raw"] = true;
  return out;
}

CakeInstance instance_from_json(const Json& j) {
  CakeInstance instance;
  instance.raw = j.is_object() && j.value("raw", false);
  const Json& players = require(j, "players");
  if (!players.is_array() || players.empty()) {
    throw ValidationError("\"players\" must be a non-empty array");
  }
  bool any_name = false;
  for (const Json& p : players) {
    const Json& segs = require(p, "segments");
    if (!segs.is_array()) throw ValidationError("\"segments\" must be an array");
    std::vector<Segment> segments;
    for (const Json& s : segs) {
      segments.push_back({rational_from_json(require(s, "start")),
                          rational_from_json(require(s, "end")),
                          rational_from_json(require(s, "density"))});
    }
    auto v = PiecewiseConstantValuation::from_segments(std::move(segments));
    instance.players.push_back(instance.raw ? std::move(v) : normalize(v));
    std::string name = p.value("name", std::string());
    any_name = any_name || !name.empty();
    instance.names.push_back(std::move(name));
  }
  if (!any_name) instance.names.clear();
  return instance;
}

Json discrete_to_json(const DiscreteInstance& D) {
  Json values = Json::array();
  for (const auto& row : D.values) {
    Json r = Json::array();
    for (const Rational& v : row) r.push_back(rational_to_json(v));
    values.push_back(std::move(r));
  }
  return {{"values", std::move(values)}};
}

DiscreteInstance discrete_from_json(const Json& j) {
  const Json& values = require(j, "values");
  if (!values.is_array() || values.empty()) {
    throw ValidationError("\"values\" must be a non-empty array of rows");
  }
  DiscreteInstance D;
  for (const Json& row : values) {
    if (!row.is_array() || row.empty()) throw ValidationError("value rows must be non-empty arrays");
    std::vector<Rational> r;
    for (const Json& v : row) {
      Rational x = rational_from_json(v);
      if (x < 0) throw ValidationError("item values must be nonnegative");
      r.push_back(std::move(x));
    }
    if (!D.values.empty() && r.size() != D.values[0].size()) {
      throw ValidationError("value rows must have equal length");
    }
    D.values.push_back(std::move(r));
  }
  return D;
}

Json division_to_json(const ConnectedDivision& d) {
  Json cuts = Json::array();
  for (const Rational& c : d.cuts) cuts.push_back(rational_to_json(c));
  Json order = Json::array();
  for (int p : d.order) order.push_back(p + 1);
  return {{"cuts", std::move(cuts)}, {"order", std::move(order)}};
}

Json division_to_json(const DiscreteDivision& d) {
  Json pieces = Json::array();
  for (int i = 0; i < d.n(); ++i) {
    if (d.pieces[i].empty()) continue;
    pieces.push_back({{"player", i + 1}, {"s", d.pieces[i].s}, {"t", d.pieces[i].t}});
  }
  return {{"n", d.n()}, {"pieces", std::move(pieces)}};
}

bool is_discrete_division_json(const Json& j) {
  return j.is_object() && j.contains("pieces");
}

ConnectedDivision connected_division_from_json(const Json& j) {
  ConnectedDivision d;
  for (const Json& c : require(j, "cuts")) d.cuts.push_back(rational_from_json(c));
  for (const Json& p : require(j, "order")) {
    int player = int_from_json(p, "order entry");
    if (player < 1) throw ValidationError("order entries are 1-based player indices");
    d.order.push_back(player - 1);
  }
  if (d.cuts.size() + 1 != d.order.size()) {
    throw ValidationError("a division of n players needs n-1 cuts");
  }
  return d;
}

DiscreteDivision discrete_division_from_json(const Json& j) {
  const Json& pieces = require(j, "pieces");
  if (!pieces.is_array()) throw ValidationError("\"pieces\" must be an array");
  int n = 0;
  for (const Json& p : pieces) n = std::max(n, int_from_json(require(p, "player"), "player"));
  if (j.contains("n")) n = std::max(n, int_from_json(j.at("n"), "n"));
  DiscreteDivision d;
  d.pieces.resize(n);
  for (const Json& p : pieces) {
    int player = int_from_json(require(p, "player"), "player");
    if (player < 1) throw ValidationError("player indices are 1-based");
    int s = int_from_json(require(p, "s"), "s");
    int t = int_from_json(require(p, "t"), "t");
    if (s < 1 || t < s) throw ValidationError("piece needs 1 <= s <= t");
    if (!d.pieces[player - 1].empty()) throw ValidationError("duplicate piece for a player");
    d.pieces[player - 1] = Piece::range(s, t);
  }
  return d;
}

Json report_to_json(const WelfareReport& report) {
  Json utilities = Json::array();
  for (const Rational& u : report.utilities) utilities.push_back(rational_to_json(u));
  return {{"utilities", std::move(utilities)},
          {"utilitarian", rational_to_json(report.utilitarian)},
          {"egalitarian", rational_to_json(report.egalitarian)}};
}

Json cutset_to_json(const CutSet& C) {
  Json points = Json::array();
  for (const Rational& p : C.points) points.push_back(rational_to_json(p));
  return {{"epsilon", rational_to_json(C.epsilon)}, {"points", std::move(points)}};
}

CutSet cutset_from_json(const Json& j) {
  CutSet C;
  C.epsilon = rational_from_json(require(j, "epsilon"));
  for (const Json& p : require(j, "points")) C.points.push_back(rational_from_json(p));
  if (C.points.size() < 2 || C.points.front() != 0 || C.points.back() != 1) {
    throw ValidationError("cut points must start at 0 and end at 1");
  }
  for (size_t i = 1; i < C.points.size(); ++i) {
    if (C.points[i - 1] >= C.points[i]) throw ValidationError("cut points must strictly increase");
  }
  return C;
}

Json assignment_to_json(const FractionalAssignment& a, const Rational* t) {
  Json x = Json::array();
  const int intervals = static_cast<int>(a.boundaries.size()) - 1;
  for (size_t i = 0; i < a.fraction.size(); ++i) {
    for (int k = 0; k < intervals; ++k) {
      if (a.fraction[i][k] == 0) continue;
      x.push_back({{"player", static_cast<int>(i) + 1},
                   {"interval", Json::array({rational_to_json(a.boundaries[k]),
                                             rational_to_json(a.boundaries[k + 1])})},
                   {"fraction", rational_to_json(a.fraction[i][k])}});
    }
  }
  Json out = {{"x", std::move(x)}};
  if (t != nullptr) out["t"] = rational_to_json(*t);
  return out;
}

FractionalAssignment assignment_from_json(const Json& j) {
  const Json& x = require(j, "x");
  if (!x.is_array()) throw ValidationError("\"x\" must be an array");
  std::vector<Rational> boundaries = {0, 1};
  for (const Json& e : x) {
    const Json& iv = require(e, "interval");
    if (!iv.is_array() || iv.size() != 2) throw ValidationError("interval must be [lo, hi]");
    boundaries.push_back(rational_from_json(iv.at(0)));
    boundaries.push_back(rational_from_json(iv.at(1)));
  }
  std::sort(boundaries.begin(), boundaries.end());
  boundaries.erase(std::unique(boundaries.begin(), boundaries.end()), boundaries.end());
  int n = 0;
  for (const Json& e : x) n = std::max(n, int_from_json(require(e, "player"), "player"));
  FractionalAssignment a;
  a.boundaries = boundaries;
  a.fraction.assign(std::max(n, 1),
                    std::vector<Rational>(boundaries.size() - 1, Rational(0)));
  for (const Json& e : x) {
    int player = int_from_json(require(e, "player"), "player") - 1;
    Rational lo = rational_from_json(e.at("interval").at(0));
    Rational hi = rational_from_json(e.at("interval").at(1));
    Rational f = rational_from_json(require(e, "fraction"));
    if (f < 0 || f > 1) throw ValidationError("fractions must lie in [0,1]");
    // the entry's interval may span several grid cells after merging
    for (size_t k = 0; k + 1 < boundaries.size(); ++k) {
      if (boundaries[k] >= lo && boundaries[k + 1] <= hi) a.fraction[player][k] += f;
    }
  }
  for (size_t k = 0; k + 1 < a.boundaries.size(); ++k) {
    Rational sum = 0;
    for (const auto& row : a.fraction) sum += row[k];
    if (sum > 1) throw ValidationError("interval over-assigned: fractions exceed 1");
  }
  return a;
}

ThreeDMInstance threedm_from_json(const Json& j) {
  ThreeDMInstance inst;
  inst.q = int_from_json(require(j, "q"), "q");
  const Json& triples = require(j, "triples");
  if (!triples.is_array()) throw ValidationError("\"triples\" must be an array");
  for (const Json& t : triples) {
    if (!t.is_array() || t.size() != 3) throw ValidationError("triples must be [x,y,z]");
    inst.triples.push_back({int_from_json(t.at(0), "x"), int_from_json(t.at(1), "y"),
                            int_from_json(t.at(2), "z")});
  }
  return inst;
}

McspInstance mcsp_from_json(const Json& j) {
  McspInstance inst;
  inst.m = int_from_json(require(j, "m"), "m");
  const Json& families = require(j, "families");
  if (!families.is_array()) throw ValidationError("\"families\" must be an array");
  for (const Json& family : families) {
    if (!family.is_array()) throw ValidationError("families must be arrays of [b,e] pairs");
    std::vector<McspSegment> segs;
    for (const Json& s : family) {
      if (!s.is_array() || s.size() != 2) throw ValidationError("segments must be [b,e]");
      segs.push_back({int_from_json(s.at(0), "b"), int_from_json(s.at(1), "e")});
    }
    inst.families.push_back(std::move(segs));
  }
  return inst;
}

namespace {

bool looks_rational(const Json& j) {
  if (!j.is_string()) return false;
  try {
    parse_rational(j.get<std::string>());
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

Json with_decimals(Json j, int digits) {
  if (j.is_object()) {
    Json out = Json::object();
    for (auto& [key, value] : j.items()) {
      if (looks_rational(value)) {
        out[key + "_decimal"] = to_decimal(parse_rational(value.get<std::string>()), digits);
        out[key] = std::move(value);
      } else {
        out[key] = with_decimals(std::move(value), digits);
      }
    }
    return out;
  }
  if (j.is_array()) {
    for (Json& e : j) {
      if (!looks_rational(e)) e = with_decimals(std::move(e), digits);
    }
  }
  return j;
}

}  // namespace fairslice
