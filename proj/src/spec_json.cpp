#include "autoseq/spec_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "autoseq/errors.hpp"

namespace autoseq {

namespace {

using nlohmann::json;

Natural to_natural(const json& j, const char* field) {
  if (j.is_number_unsigned()) return Natural(j.get<std::uint64_t>());
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v < 0) throw SpecParseError(std::string("field '") + field + "' must be non-negative");
    return Natural(v);
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw SpecParseError(std::string("field '") + field + "' is not a decimal integer");
    return Natural(s);
  }
  throw SpecParseError(std::string("field '") + field + "' must be an integer");
}

std::uint64_t to_small(const json& j, const char* field) {
  Natural n = to_natural(j, field);
  if (n > std::numeric_limits<std::uint32_t>::max())
    throw SpecParseError(std::string("field '") + field + "' is too large");
  return static_cast<std::uint64_t>(n);
}

const json& require(const json& obj, const char* field) {
  auto it = obj.find(field);
  if (it == obj.end()) throw SpecParseError(std::string("missing field '") + field + "'");
  return *it;
}

json natural_to_json(const Natural& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max()) return json(static_cast<std::uint64_t>(n));
  return json(n.str());
}

}  // namespace

SequenceSpec parse_spec_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SpecParseError("spec must be a JSON object");

  try {
    const auto base = static_cast<unsigned>(to_small(require(doc, "k"), "k"));
    const auto modulus = static_cast<Residue>(to_small(require(doc, "L"), "L"));
    const json& core = require(doc, "core");
    if (!core.is_object()) throw SpecParseError("'core' must be an object");
    const json& kind = require(core, "kind");
    if (!kind.is_string()) throw SpecParseError("'core.kind' must be a string");

    Core parsed_core;
    if (kind == "pattern") {
      const json& pattern = require(core, "pattern");
      if (!pattern.is_string()) throw SpecParseError("'core.pattern' must be a string of digits");
      parsed_core = PatternCore{Pattern::parse(pattern.get<std::string>(), base)};
    } else if (kind == "digitsum") {
      if (core.contains("pattern")) throw SpecParseError("'core.pattern' is only allowed for kind=pattern");
      parsed_core = DigitSumCore{};
    } else {
      throw SpecParseError("unknown core kind '" + kind.get<std::string>() + "'");
    }

    std::vector<Transform> transforms;
    if (auto it = doc.find("transforms"); it != doc.end()) {
      if (!it->is_array()) throw SpecParseError("'transforms' must be an array");
      for (const json& t : *it) {
        if (!t.is_object()) throw SpecParseError("each transform must be an object");
        const json& op = require(t, "op");
        if (op == "arithsub") {
          transforms.emplace_back(ArithSub{to_natural(require(t, "N"), "N"), to_natural(require(t, "l"), "l")});
        } else if (op == "polymap") {
          const json& coeffs = require(t, "coeffs");
          if (!coeffs.is_array()) throw SpecParseError("'coeffs' must be an array");
          PolyMap p;
          for (const json& c : coeffs) p.coeffs.push_back(to_natural(c, "coeffs"));
          transforms.emplace_back(std::move(p));
        } else {
          throw SpecParseError("unknown transform op " + op.dump());
        }
      }
    }
    return SequenceSpec(base, modulus, std::move(parsed_core), std::move(transforms));
  } catch (const InvalidArgument& e) {
    throw SpecParseError(e.what());
  }
}

SequenceSpec load_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecParseError("cannot open spec file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_json(buf.str());
}

std::string to_json(const SequenceSpec& spec) {
  json doc;
  doc["k"] = spec.base();
  doc["L"] = spec.modulus();
  if (const auto* p = std::get_if<PatternCore>(&spec.core())) {
    doc["core"] = {{"kind", "pattern"}, {"pattern", p->pattern.to_string()}};
  } else {
    doc["core"] = {{"kind", "digitsum"}};
  }
  json transforms = json::array();
  for (const auto& t : spec.transforms()) {
    if (const auto* a = std::get_if<ArithSub>(&t)) {
      transforms.push_back({{"op", "arithsub"}, {"N", natural_to_json(a->offset)}, {"l", natural_to_json(a->step)}});
    } else {
      json coeffs = json::array();
      for (const auto& c : std::get<PolyMap>(t).coeffs) coeffs.push_back(natural_to_json(c));
      transforms.push_back({{"op", "polymap"}, {"coeffs", coeffs}});
    }
  }
  doc["transforms"] = transforms;
  return doc.dump();
}

}  // namespace autoseq
