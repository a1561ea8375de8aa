#include "zignorm/json_io.hpp"

#include "zignorm/error.hpp"

namespace zignorm::io {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& message) {
  raise(ErrorKind::ParseError, (where.empty() ? std::string("/") : where) + ": " + message);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) parse_fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t size_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_unsigned()) parse_fail(where + "/" + key, "expected a non-negative integer");
  return v.get<std::size_t>();
}

std::string string_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_string()) parse_fail(where + "/" + key, "expected a string");
  return v.get<std::string>();
}

}  // namespace

json encode_diagram(const Diagram& d) {
  json j;
  j["dim"] = d.dimension();
  if (d.dimension() == 0) {
    j["generator"] = {{"name", d.generator().name}, {"dimension", d.generator().dimension}};
    return j;
  }
  json regulars = json::array();
  for (const auto& r : d.regulars()) regulars.push_back(encode_diagram(r));
  json singulars = json::array();
  for (const auto& s : d.singulars()) singulars.push_back(encode_diagram(s));
  json fwd = json::array();
  for (const auto& m : d.forward()) fwd.push_back(encode_map(m));
  json bwd = json::array();
  for (const auto& m : d.backward()) bwd.push_back(encode_map(m));
  j["regular"] = std::move(regulars);
  j["singular"] = std::move(singulars);
  j["forward"] = std::move(fwd);
  j["backward"] = std::move(bwd);
  return j;
}

json encode_map(const DiagramMap& f) {
  json j;
  j["dim"] = f.dimension();
  if (f.dimension() == 0) {
    j["source"] = f.source_generator().name;
    j["target"] = f.target_generator().name;
    return j;
  }
  j["monotone"] = f.singular_monotone().values;
  json regs = json::array();
  for (const auto& s : f.regular_slices()) regs.push_back(encode_map(s));
  json sings = json::array();
  for (const auto& s : f.singular_slices()) sings.push_back(encode_map(s));
  j["regular_slices"] = std::move(regs);
  j["singular_slices"] = std::move(sings);
  return j;
}

Diagram decode_diagram(const json& j, const std::string& where) {
  const std::size_t dim = size_field(j, "dim", where);
  if (dim == 0) {
    const json& g = field(j, "generator", where);
    Generator gen{string_field(g, "name", where + "/generator"),
                  size_field(g, "dimension", where + "/generator")};
    return Diagram::point(std::move(gen));
  }
  const json& regular = field(j, "regular", where);
  const json& singular = field(j, "singular", where);
  const json& forward = field(j, "forward", where);
  const json& backward = field(j, "backward", where);
  if (!regular.is_array() || !singular.is_array() || !forward.is_array() || !backward.is_array())
    parse_fail(where, "regular/singular/forward/backward must be arrays");
  if (regular.size() != singular.size() + 1)
    parse_fail(where + "/regular", "need exactly length+1 regular objects");
  if (forward.size() != singular.size() || backward.size() != singular.size())
    parse_fail(where + "/forward", "need one forward and one backward map per singular height");
  std::vector<Diagram> regs, sings;
  for (std::size_t i = 0; i < regular.size(); ++i)
    regs.push_back(decode_diagram(regular[i], where + "/regular/" + std::to_string(i)));
  for (std::size_t i = 0; i < singular.size(); ++i)
    sings.push_back(decode_diagram(singular[i], where + "/singular/" + std::to_string(i)));
  for (const auto& child : regs)
    if (child.dimension() + 1 != dim) parse_fail(where + "/regular", "child has wrong dimension");
  for (const auto& child : sings)
    if (child.dimension() + 1 != dim) parse_fail(where + "/singular", "child has wrong dimension");
  std::vector<DiagramMap> fwd, bwd;
  for (std::size_t i = 0; i < forward.size(); ++i)
    fwd.push_back(decode_map(forward[i], regs[i], sings[i], where + "/forward/" + std::to_string(i)));
  for (std::size_t i = 0; i < backward.size(); ++i)
    bwd.push_back(
        decode_map(backward[i], regs[i + 1], sings[i], where + "/backward/" + std::to_string(i)));
  return Diagram::zigzag(std::move(regs), std::move(sings), std::move(fwd), std::move(bwd));
}

DiagramMap decode_map(const json& j, const Diagram& source, const Diagram& target,
                      const std::string& where) {
  const std::size_t dim = size_field(j, "dim", where);
  if (dim != source.dimension() || dim != target.dimension())
    parse_fail(where, "map dimension disagrees with its endpoints");
  if (dim == 0) {
    if (string_field(j, "source", where) != source.generator().name)
      parse_fail(where + "/source", "generator name disagrees with the source diagram");
    if (string_field(j, "target", where) != target.generator().name)
      parse_fail(where + "/target", "generator name disagrees with the target diagram");
    return DiagramMap::thin(source.generator(), target.generator());
  }
  const json& mono = field(j, "monotone", where);
  if (!mono.is_array() || mono.size() != source.length())
    parse_fail(where + "/monotone", "monotone length must equal the source length");
  Monotone mu;
  mu.source_size = source.length();
  mu.target_size = target.length();
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (!mono[i].is_number_unsigned())
      parse_fail(where + "/monotone/" + std::to_string(i), "expected a non-negative integer");
    mu.values.push_back(mono[i].get<std::size_t>());
  }
  if (!mu.well_formed()) parse_fail(where + "/monotone", "values must be weakly increasing and in range");
  const Monotone reg = wraith_dual(mu);
  const json& regular_slices = field(j, "regular_slices", where);
  const json& singular_slices = field(j, "singular_slices", where);
  if (!regular_slices.is_array() || regular_slices.size() != target.length() + 1)
    parse_fail(where + "/regular_slices", "need target length + 1 regular slices");
  if (!singular_slices.is_array() || singular_slices.size() != source.length())
    parse_fail(where + "/singular_slices", "need one singular slice per source height");
  std::vector<DiagramMap> regs, sings;
  for (std::size_t i = 0; i < regular_slices.size(); ++i)
    regs.push_back(decode_map(regular_slices[i], source.regular(reg(i)), target.regular(i),
                              where + "/regular_slices/" + std::to_string(i)));
  for (std::size_t i = 0; i < singular_slices.size(); ++i)
    sings.push_back(decode_map(singular_slices[i], source.singular(i), target.singular(mu(i)),
                               where + "/singular_slices/" + std::to_string(i)));
  return DiagramMap::zigzag_map(source, target, std::move(mu), std::move(regs), std::move(sings));
}

std::string canonical_text(const json& payload) { return payload.dump() + "\n"; }

json parse_file_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    raise(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) raise(ErrorKind::ParseError, "/: expected a top-level object");
  auto it = j.find("format");
  if (it == j.end() || !it->is_string() || it->get<std::string>() != kFormatTag)
    raise(ErrorKind::ParseError, "/format: expected \"" + std::string(kFormatTag) + "\"");
  return j;
}

std::string write_diagram_text(const Diagram& d) {
  json j = encode_diagram(d);
  j["format"] = kFormatTag;
  return canonical_text(j);
}

Diagram read_diagram_text(const std::string& text) {
  json j = parse_file_text(text);
  j.erase("format");
  Diagram d = decode_diagram(j, "");
  if (auto r = validate_diagram(d); !r)
    raise(ErrorKind::ValidationError, "diagram invalid at " + r.path + ": " + r.message);
  return d;
}

std::string write_map_text(const DiagramMap& f) {
  json j;
  j["format"] = kFormatTag;
  j["source"] = encode_diagram(f.source());
  j["target"] = encode_diagram(f.target());
  j["map"] = encode_map(f);
  return canonical_text(j);
}

DiagramMap read_map_text(const std::string& text) {
  json j = parse_file_text(text);
  Diagram source = decode_diagram(field(j, "source", ""), "/source");
  Diagram target = decode_diagram(field(j, "target", ""), "/target");
  DiagramMap f = decode_map(field(j, "map", ""), source, target, "/map");
  if (auto r = validate_map(f); !r)
    raise(ErrorKind::ValidationError, "map invalid at " + r.path + ": " + r.message);
  return f;
}

std::string write_signature_text(const Signature& sig) {
  json gens = json::array();
  for (const auto& e : sig.entries()) {
    json g;
    g["name"] = e.generator.name;
    g["dimension"] = e.generator.dimension;
    g["diagram"] = encode_diagram(e.typing);
    gens.push_back(std::move(g));
  }
  json j;
  j["format"] = kFormatTag;
  j["generators"] = std::move(gens);
  return canonical_text(j);
}

Signature read_signature_text(const std::string& text, std::vector<std::string>* warnings) {
  json j = parse_file_text(text);
  const json& gens = field(j, "generators", "");
  if (!gens.is_array()) parse_fail("/generators", "expected an array");
  std::vector<Signature::Entry> entries;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string where = "/generators/" + std::to_string(i);
    Signature::Entry e;
    e.generator.name = string_field(gens[i], "name", where);
    e.generator.dimension = size_field(gens[i], "dimension", where);
    e.typing = decode_diagram(field(gens[i], "diagram", where), where + "/diagram");
    entries.push_back(std::move(e));
  }
  return Signature::make(std::move(entries), warnings);
}

std::string write_normalisation_text(const NormalisationResult& result) {
  json j;
  j["format"] = kFormatTag;
  j["normal_form"] = encode_diagram(result.normal_form);
  j["normaliser"] = encode_map(result.normaliser);
  json facts = json::array();
  for (const auto& f : result.factorisations) facts.push_back(encode_map(f));
  j["factorisations"] = std::move(facts);
  return canonical_text(j);
}

std::string write_verdict_text(const TypecheckVerdict& verdict) {
  json j;
  j["format"] = kFormatTag;
  j["verdict"] = verdict.accepted ? "accept" : "reject";
  if (!verdict.accepted) {
    j["first_failing_address"] = verdict.first_failing_address;
    j["label"] = verdict.failing_label;
  }
  return canonical_text(j);
}

}  // namespace zignorm::io
