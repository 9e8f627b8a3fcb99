#include "nads/serialize.hpp"

#include <stdexcept>

namespace nads {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw std::invalid_argument(std::string("missing field '") + key + "' in " + j.dump());
  }
  return *it;
}

std::string type_tag(const json& j) { return field(j, "type").get<std::string>(); }

SpaceKind kind_from_string(const std::string& s) {
  if (s == "interval") return SpaceKind::Interval;
  if (s == "shift") return SpaceKind::Shift;
  if (s == "circle") return SpaceKind::Circle;
  throw std::invalid_argument("unknown space kind: " + s);
}

std::string kind_to_string(SpaceKind k) {
  switch (k) {
    case SpaceKind::Interval: return "interval";
    case SpaceKind::Shift: return "shift";
    case SpaceKind::Circle: return "circle";
  }
  return "?";
}

}  // namespace

json rat_to_json(const Rat& q) {
  return json{{"num", rat_num(q).str()}, {"den", rat_den(q).str()}};
}

Rat rat_from_json(const json& j) {
  Int n(field(j, "num").get<std::string>());
  Int d(field(j, "den").get<std::string>());
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  return Rat(n, d);
}

json point_to_json(const Point& x) {
  if (x.space.arity > 1) {
    json parts = json::array();
    for (const auto& p : x.parts()) parts.push_back(point_to_json(p));
    return json{{"type", "product"}, {"parts", parts}};
  }
  switch (x.space.kind) {
    case SpaceKind::Interval: return json{{"type", "interval"}, {"value", rat_to_json(x.interval())}};
    case SpaceKind::Shift: return json{{"type", "shift"}, {"word", x.word().word()}};
    case SpaceKind::Circle:
      return json{{"type", "circle"},
                  {"p", rat_to_json(x.circle().p)},
                  {"q", x.circle().q}};
  }
  throw std::logic_error("unreachable space kind");
}

Point point_from_json(const json& j) {
  std::string t = type_tag(j);
  if (t == "interval") return interval_point(rat_from_json(field(j, "value")));
  if (t == "shift") return shift_point(field(j, "word").get<std::string>());
  if (t == "circle") {
    return circle_point(rat_from_json(field(j, "p")), field(j, "q").get<long long>());
  }
  if (t == "product") {
    std::vector<Point> parts;
    for (const auto& p : field(j, "parts")) parts.push_back(point_from_json(p));
    return product_point(std::move(parts));
  }
  throw std::invalid_argument("unknown point type: " + t);
}

json open_to_json(const BasicOpen& u) {
  if (const auto* iv = std::get_if<IntervalOpen>(&u.rep)) {
    return json{{"type", "interval-open"},
                {"lo", rat_to_json(iv->lo)},
                {"hi", rat_to_json(iv->hi)},
                {"closed_lo", iv->closed_lo},
                {"closed_hi", iv->closed_hi}};
  }
  if (const auto* cy = std::get_if<Cylinder>(&u.rep)) {
    return json{{"type", "cylinder"}, {"anchor", cy->anchor}, {"word", cy->word}};
  }
  const auto& arc = std::get<Arc>(u.rep);
  return json{{"type", "arc"},
              {"p", rat_to_json(arc.center.p)},
              {"q", arc.center.q},
              {"radius", rat_to_json(arc.radius)}};
}

BasicOpen open_from_json(const json& j) {
  std::string t = type_tag(j);
  if (t == "interval-open") {
    return interval_open(rat_from_json(field(j, "lo")), rat_from_json(field(j, "hi")),
                         j.value("closed_lo", false), j.value("closed_hi", false));
  }
  if (t == "cylinder") {
    return cylinder_open(field(j, "anchor").get<long long>(),
                         field(j, "word").get<std::string>());
  }
  if (t == "arc") {
    return arc_open(rat_from_json(field(j, "p")), field(j, "q").get<long long>(),
                    rat_from_json(field(j, "radius")));
  }
  throw std::invalid_argument("unknown open type: " + t);
}

json open_set_to_json(const OpenSet& u) {
  json pieces = json::array();
  for (const auto& p : u.pieces) pieces.push_back(open_to_json(p));
  return json{{"type", "open-set"}, {"pieces", pieces}};
}

OpenSet open_set_from_json(const json& j) {
  std::vector<BasicOpen> pieces;
  for (const auto& p : field(j, "pieces")) pieces.push_back(open_from_json(p));
  return open_set(std::move(pieces));
}

json measure_to_json(const AtomicMeasure& mu) {
  json atoms = json::array();
  for (const auto& [pt, w] : mu.atoms) {
    atoms.push_back(json{{"point", point_to_json(pt)}, {"weight", rat_to_json(w)}});
  }
  return json{{"type", "atomic-measure"}, {"atoms", atoms}};
}

AtomicMeasure measure_from_json(const json& j) {
  std::vector<std::pair<Point, Rat>> atoms;
  for (const auto& a : field(j, "atoms")) {
    atoms.emplace_back(point_from_json(field(a, "point")), rat_from_json(field(a, "weight")));
  }
  return atomic_measure(std::move(atoms));
}

json hitting_to_json(const HittingSet& hs) {
  return json{{"type", "hitting-set"},
              {"horizon", hs.horizon},
              {"kind", hs.kind == HitKind::Transitivity ? "transitivity" : "sensitivity"},
              {"members", hs.members}};
}

HittingSet hitting_from_json(const json& j) {
  auto kind = field(j, "kind").get<std::string>() == "sensitivity" ? HitKind::Sensitivity
                                                                   : HitKind::Transitivity;
  return make_hitting_set(field(j, "horizon").get<long long>(),
                          field(j, "members").get<std::vector<long long>>(), kind);
}

json verdict_to_json(const Verdict& v) {
  return json{{"outcome", outcome_str(v.outcome)},
              {"property", v.property},
              {"witness", v.witness},
              {"scale", v.scale},
              {"note", v.note}};
}

Verdict verdict_from_json(const json& j) {
  Verdict v;
  std::string o = field(j, "outcome").get<std::string>();
  if (o == "Certified") {
    v.outcome = Outcome::Certified;
  } else if (o == "Refuted") {
    v.outcome = Outcome::Refuted;
  } else if (o == "HoldsUpToBound") {
    v.outcome = Outcome::HoldsUpToBound;
  } else if (o == "Inconclusive") {
    v.outcome = Outcome::Inconclusive;
  } else {
    throw std::invalid_argument("unknown outcome: " + o);
  }
  v.property = field(j, "property").get<std::string>();
  v.witness = j.value("witness", json{});
  v.scale = j.value("scale", json{});
  v.note = j.value("note", std::string{});
  return v;
}

}  // namespace nads
