#include "specforge/json_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace specforge {

namespace {

using nlohmann::json;

constexpr std::int64_t kMaxEntry = std::int64_t(1) << 32;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
  return j;
}

Ladder ladder_from(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("ladder must be an array");
  Ladder l;
  for (const auto& e : j) {
    if (!e.is_number_integer()) {
      throw std::invalid_argument("ladder entries must be integers");
    }
    const std::int64_t v = e.get<std::int64_t>();
    if (v < 2) throw std::invalid_argument("ladder entries must be >= 2");
    if (v > kMaxEntry) throw std::invalid_argument("ladder entry exceeds 2^32");
    l.push_back(v);
  }
  return l;
}

Side side_from(const json& j) {
  const std::string s = j.get<std::string>();
  if (s == "odd") return Side::odd;
  if (s == "even") return Side::even;
  throw std::invalid_argument("side must be \"odd\" or \"even\"");
}

std::string side_name(Side s) { return s == Side::odd ? "odd" : "even"; }

std::vector<std::int64_t> int_list_from(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<std::int64_t> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) {
      throw std::invalid_argument(std::string(what) + " entries must be integers");
    }
    out.push_back(e.get<std::int64_t>());
  }
  return out;
}

}  // namespace

std::string measure_to_json(const DiscreteMeasure& m) {
  json atoms = json::array();
  for (const Atom& a : m.atoms()) {
    json pos = json::array();
    for (const Rational& x : a.pos) pos.push_back(rational_string(x));
    atoms.push_back({{"pos", pos}, {"weight", rational_string(a.weight)}});
  }
  return json{{"dim", m.dim()}, {"atoms", atoms}}.dump();
}

DiscreteMeasure measure_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("atoms")) {
    throw std::invalid_argument("measure JSON needs an \"atoms\" array");
  }
  const std::size_t dim = j.value("dim", std::size_t{1});
  std::vector<Atom> atoms;
  for (const auto& a : j.at("atoms")) {
    Atom atom;
    for (const auto& c : a.at("pos")) {
      atom.pos.push_back(parse_rational(c.get<std::string>()));
    }
    if (atom.pos.size() != dim) {
      throw std::invalid_argument("atom dimension disagrees with \"dim\"");
    }
    atom.weight = parse_rational(a.at("weight").get<std::string>());
    atoms.push_back(std::move(atom));
  }
  return DiscreteMeasure(std::move(atoms));
}

std::string spectrum_to_json(const Spectrum& s) {
  json base = json::array();
  for (const auto& v : s.base) {
    if (s.dim == 1) {
      base.push_back(v[0]);
    } else {
      base.push_back(json(v));
    }
  }
  json j{{"base", base}, {"dim", s.dim}};
  j["period"] = s.period ? json(*s.period) : json(nullptr);
  return j.dump();
}

Spectrum spectrum_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("base")) {
    throw std::invalid_argument("spectrum JSON needs a \"base\" array");
  }
  Spectrum s;
  s.dim = j.value("dim", std::size_t{1});
  for (const auto& e : j.at("base")) {
    if (e.is_array()) {
      s.base.push_back(int_list_from(e, "base element"));
    } else if (e.is_number_integer()) {
      s.base.push_back({e.get<std::int64_t>()});
    } else {
      throw std::invalid_argument("spectrum base entries must be integers or tuples");
    }
  }
  if (j.contains("period") && !j.at("period").is_null()) {
    s.period = j.at("period").get<std::int64_t>();
  }
  std::sort(s.base.begin(), s.base.end());
  s.validate();
  return s;
}

std::string factor_spec_to_json(const FactorSpec& spec) {
  json j;
  j["ladder"] = spec.ladder;
  j["type"] = spec.type == DecompositionType::type1 ? "I" : "II";
  j["side"] = side_name(spec.side);
  j["level"] = spec.level;
  j["tail_on"] = spec.tail_on ? json(side_name(*spec.tail_on)) : json(nullptr);
  return j.dump();
}

FactorSpec factor_spec_from_json(const std::string& text) {
  const json j = parse(text);
  FactorSpec spec;
  spec.ladder = ladder_from(j.at("ladder"));
  const std::string type = j.value("type", "II");
  if (type == "I") {
    spec.type = DecompositionType::type1;
  } else if (type == "II") {
    spec.type = DecompositionType::type2;
  } else {
    throw std::invalid_argument("type must be \"I\" or \"II\"");
  }
  spec.side = j.contains("side") ? side_from(j.at("side")) : Side::odd;
  if (j.contains("tail_on") && !j.at("tail_on").is_null()) {
    spec.tail_on = side_from(j.at("tail_on"));
  }
  if (j.contains("level") && !j.at("level").is_null()) {
    spec.level = j.at("level").get<std::size_t>();
  } else {
    spec.level = spec.side_count();
  }
  spec.validate();
  return spec;
}

std::string set_pair_to_json(const SetPair& sp) {
  return json{{"A", sp.A}, {"B", sp.B}, {"n", sp.n}}.dump();
}

SetPair set_pair_from_json(const std::string& text) {
  const json j = parse(text);
  SetPair sp;
  sp.A = int_list_from(j.at("A"), "A");
  sp.B = int_list_from(j.at("B"), "B");
  sp.n = j.contains("n")
             ? j.at("n").get<std::int64_t>()
             : static_cast<std::int64_t>(sp.A.size()) *
                   static_cast<std::int64_t>(sp.B.size());
  return sp;
}

std::string grid_mask_to_json(const GridMask& g) {
  std::string bits;
  bits.reserve(g.cells.size());
  for (bool c : g.cells) bits.push_back(c ? '1' : '0');
  return json{{"m", g.m}, {"cells", bits}}.dump();
}

GridMask grid_mask_from_json(const std::string& text) {
  const json j = parse(text);
  GridMask g;
  g.m = j.at("m").get<std::int64_t>();
  const std::string bits = j.at("cells").get<std::string>();
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("mask cells must be a 0/1 bitstring");
    }
    g.cells.push_back(c == '1');
  }
  g.validate();
  return g;
}

std::string translate_system_to_json(const TranslateSystem& t) {
  json offsets = json::array();
  for (const Rational& r : t.offsets) offsets.push_back(rational_string(r));
  return json{{"count", t.count}, {"offsets", offsets}}.dump();
}

std::pair<DiscreteMeasure, DiscreteMeasure> measure_pair_from_json(
    const std::string& text) {
  const json j = parse(text);
  if (!j.contains("p") || !j.contains("q")) {
    throw std::invalid_argument("measure pair JSON needs \"p\" and \"q\"");
  }
  return {measure_from_json(j.at("p").dump()),
          measure_from_json(j.at("q").dump())};
}

}  // namespace specforge
