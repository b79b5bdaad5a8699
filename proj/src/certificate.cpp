#include "chilab/certificate.hpp"

#include <algorithm>
#include <set>

#include "chilab/error.hpp"

namespace chilab {

namespace {

const Json& require_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorKind::structure, std::string("missing field '") + key + "'");
  return j.at(key);
}

int require_int(const Json& j, const char* key, int min_value = 0) {
  const Json& v = require_field(j, key);
  if (!v.is_number_integer())
    fail(ErrorKind::structure, std::string("field '") + key + "' must be an integer");
  long long raw = v.get<long long>();
  if (raw < min_value || raw > kMaxVertices * kMaxVertices)
    fail(ErrorKind::structure, std::string("field '") + key + "' out of range");
  return static_cast<int>(raw);
}

std::string require_string(const Json& j, const char* key) {
  const Json& v = require_field(j, key);
  if (!v.is_string())
    fail(ErrorKind::structure, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<int> parse_vertex_list(const Json& v, const char* key,
                                   bool forbid_repeats) {
  if (!v.is_array())
    fail(ErrorKind::structure, std::string("field '") + key + "' must be an array");
  std::vector<int> out;
  out.reserve(v.size());
  for (const Json& e : v) {
    if (!e.is_number_integer() || e.get<long long>() < 0 ||
        e.get<long long>() >= kMaxVertices)
      fail(ErrorKind::structure,
           std::string("field '") + key + "' must hold vertex indices");
    out.push_back(e.get<int>());
  }
  if (forbid_repeats) {
    std::set<int> seen(out.begin(), out.end());
    if (seen.size() != out.size())
      fail(ErrorKind::structure, std::string("field '") + key + "' repeats a vertex");
  }
  return out;
}

std::vector<int> require_vertex_list(const Json& j, const char* key) {
  return parse_vertex_list(require_field(j, key), key, true);
}

std::vector<std::vector<int>> require_parts(const Json& j, const char* key) {
  const Json& v = require_field(j, key);
  if (!v.is_array())
    fail(ErrorKind::structure, std::string("field '") + key + "' must be an array");
  std::vector<std::vector<int>> out;
  for (const Json& part : v)
    out.push_back(parse_vertex_list(part, key, true));
  return out;
}

NonDecPoly require_psi(const Json& j) {
  const Json& v = require_field(j, "psi");
  if (!v.is_array()) fail(ErrorKind::structure, "field 'psi' must be an array");
  std::vector<std::string> coeffs;
  for (const Json& c : v) {
    if (!c.is_string()) fail(ErrorKind::structure, "psi coefficients must be strings");
    coeffs.push_back(c.get<std::string>());
  }
  try {
    return NonDecPoly::from_strings(coeffs);
  } catch (const Error&) {
    fail(ErrorKind::structure, "bad psi coefficients");
  }
}

Json psi_to_json(const NonDecPoly& psi) { return Json(psi.to_strings()); }

Json hole_spec_to_json(const HoleSpec& spec) {
  Json j;
  j["kind"] = "hole";
  j["hole_kind"] = hole_kind_name(spec.kind);
  if (spec.kind == HoleKind::long_) j["min_length"] = spec.min_length;
  return j;
}

HoleSpec hole_spec_from_json(const Json& j) {
  HoleSpec spec;
  std::string name = require_string(j, "hole_kind");
  try {
    spec.kind = hole_kind_from_name(name);
  } catch (const Error&) {
    fail(ErrorKind::structure, "unknown hole_kind '" + name + "'");
  }
  if (spec.kind == HoleKind::long_) {
    spec.min_length = require_int(j, "min_length");
    if (spec.min_length < 4)
      fail(ErrorKind::structure, "long hole min_length must be at least 4");
  }
  return spec;
}

} // namespace

bool is_inconclusive(const Certificate& cert) {
  return std::holds_alternative<InconclusiveCert>(cert);
}

std::string certificate_type_name(const Certificate& cert) {
  if (const auto* copy = std::get_if<CopyCert>(&cert))
    return copy->isolated ? "isolated_copy" : "nondominating_copy";
  if (std::holds_alternative<SprinklingCert>(cert)) return "sprinkling";
  if (std::holds_alternative<TemplateCert>(cert)) return "template";
  if (std::holds_alternative<HFreeSetCert>(cert)) return "h_free_set";
  if (std::holds_alternative<MultiholeCert>(cert)) return "multihole";
  return "inconclusive";
}

Json pattern_to_json(const Pattern& pattern) {
  if (const auto* c = std::get_if<CompletePattern>(&pattern)) {
    Json j;
    j["kind"] = "complete";
    j["k"] = c->k;
    return j;
  }
  if (const auto* b = std::get_if<BicliquePattern>(&pattern)) {
    Json j;
    j["kind"] = "biclique";
    j["s"] = b->s;
    j["s_prime"] = b->s_prime;
    return j;
  }
  return hole_spec_to_json(std::get<HolePattern>(pattern).spec);
}

Pattern pattern_from_json(const Json& j) {
  std::string kind = require_string(j, "kind");
  if (kind == "complete") return CompletePattern{require_int(j, "k")};
  if (kind == "biclique")
    return BicliquePattern{require_int(j, "s"), require_int(j, "s_prime")};
  if (kind == "hole") return HolePattern{hole_spec_from_json(j)};
  fail(ErrorKind::structure, "unknown pattern kind '" + kind + "'");
}

Json component_spec_to_json(const ComponentSpec& spec) {
  if (const auto* hs = std::get_if<HoleSpec>(&spec)) return hole_spec_to_json(*hs);
  if (const auto* bc = std::get_if<BicliqueComponent>(&spec)) {
    Json j;
    j["kind"] = "biclique";
    j["s"] = bc->s;
    j["s_prime"] = bc->s_prime;
    return j;
  }
  const auto& ec = std::get<EitherComponent>(spec);
  Json j;
  j["kind"] = "either";
  j["s"] = ec.s;
  j["min_length"] = ec.min_length;
  return j;
}

ComponentSpec component_spec_from_json(const Json& j) {
  std::string kind = require_string(j, "kind");
  if (kind == "hole") return hole_spec_from_json(j);
  if (kind == "biclique")
    return BicliqueComponent{require_int(j, "s"), require_int(j, "s_prime")};
  if (kind == "either") {
    EitherComponent ec{require_int(j, "s"), require_int(j, "min_length")};
    if (ec.min_length < 4)
      fail(ErrorKind::structure, "either-component min_length must be at least 4");
    return ec;
  }
  fail(ErrorKind::structure, "unknown component kind '" + kind + "'");
}

Json certificate_to_json(const Certificate& cert) {
  Json j;
  j["type"] = certificate_type_name(cert);
  if (const auto* copy = std::get_if<CopyCert>(&cert)) {
    j["pattern"] = pattern_to_json(copy->pattern);
    j["parts"] = copy->parts;
    j["witness"] = copy->witness;
    j["psi"] = psi_to_json(copy->psi);
  } else if (const auto* sp = std::get_if<SprinklingCert>(&cert)) {
    j["p"] = sp->p;
    j["q_set"] = sp->q_set;
    j["q"] = sp->q;
    j["r"] = sp->r.str();
    j["psi"] = psi_to_json(sp->psi);
  } else if (const auto* tp = std::get_if<TemplateCert>(&cert)) {
    j["blocks"] = tp->blocks;
    j["t"] = tp->t;
    j["s"] = tp->s;
  } else if (const auto* hf = std::get_if<HFreeSetCert>(&cert)) {
    j["pattern"] = pattern_to_json(hf->pattern);
    j["set"] = hf->set;
    j["psi"] = psi_to_json(hf->psi);
  } else if (const auto* mh = std::get_if<MultiholeCert>(&cert)) {
    Json comps = Json::array();
    for (const auto& comp : mh->components) {
      Json cj;
      cj["spec"] = component_spec_to_json(comp.spec);
      cj["parts"] = comp.parts;
      comps.push_back(std::move(cj));
    }
    j["components"] = std::move(comps);
  } else {
    j["reason"] = std::get<InconclusiveCert>(cert).reason;
  }
  return j;
}

Certificate certificate_from_json(const Json& j) {
  std::string type = require_string(j, "type");
  if (type == "nondominating_copy" || type == "isolated_copy") {
    CopyCert cert;
    cert.isolated = type == "isolated_copy";
    cert.pattern = pattern_from_json(require_field(j, "pattern"));
    cert.parts = require_parts(j, "parts");
    cert.witness = require_vertex_list(j, "witness");
    cert.psi = require_psi(j);
    return cert;
  }
  if (type == "sprinkling") {
    SprinklingCert cert;
    cert.p = require_vertex_list(j, "p");
    cert.q_set = require_vertex_list(j, "q_set");
    cert.q = require_int(j, "q");
    std::string r = require_string(j, "r");
    try {
      cert.r = BigInt{r};
    } catch (const std::exception&) {
      fail(ErrorKind::structure, "bad field 'r'");
    }
    if (cert.r < 0) fail(ErrorKind::structure, "field 'r' must be nonnegative");
    cert.psi = require_psi(j);
    return cert;
  }
  if (type == "template") {
    TemplateCert cert;
    cert.blocks = require_parts(j, "blocks");
    cert.t = require_int(j, "t");
    cert.s = require_int(j, "s");
    return cert;
  }
  if (type == "h_free_set") {
    HFreeSetCert cert;
    cert.pattern = pattern_from_json(require_field(j, "pattern"));
    cert.set = require_vertex_list(j, "set");
    cert.psi = require_psi(j);
    return cert;
  }
  if (type == "multihole") {
    MultiholeCert cert;
    const Json& comps = require_field(j, "components");
    if (!comps.is_array())
      fail(ErrorKind::structure, "field 'components' must be an array");
    for (const Json& cj : comps) {
      MultiholeComponentCert comp;
      comp.spec = component_spec_from_json(require_field(cj, "spec"));
      comp.parts = require_parts(cj, "parts");
      cert.components.push_back(std::move(comp));
    }
    return cert;
  }
  if (type == "inconclusive") return InconclusiveCert{require_string(j, "reason")};
  fail(ErrorKind::structure, "unknown certificate type '" + type + "'");
}

std::string certificate_to_string(const Certificate& cert) {
  return certificate_to_json(cert).dump(2) + "\n";
}

Certificate certificate_from_string(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorKind::parse, "certificate is not valid JSON");
  return certificate_from_json(j);
}

} // namespace chilab
