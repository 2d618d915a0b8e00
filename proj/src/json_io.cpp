#include "ttolab/json_io.hpp"

#include <stdexcept>

namespace ttolab {

namespace {

double require_number(const ordered_json& j, const std::string& path) {
  if (!j.is_number()) {
    throw std::invalid_argument(path + " must be a number");
  }
  return j.get<double>();
}

const ordered_json& require_field(const ordered_json& j, const char* name,
                                  const std::string& path) {
  if (!j.is_object() || !j.contains(name)) {
    throw std::invalid_argument(path + "." + name + " is missing");
  }
  return j.at(name);
}

void require_type(const ordered_json& j, const char* expected) {
  const ordered_json& t = require_field(j, "type", "$");
  if (!t.is_string() || t.get<std::string>() != expected) {
    throw std::invalid_argument(std::string("$.type must be \"") + expected + "\"");
  }
}

}  // namespace

BlaschkeProduct parse_blaschke(const ordered_json& j) {
  require_type(j, "blaschke");
  const ordered_json& zeros = require_field(j, "zeros", "$");
  if (!zeros.is_array()) throw std::invalid_argument("$.zeros must be an array");
  std::vector<cplx> zs;
  zs.reserve(zeros.size());
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    const std::string path = "$.zeros[" + std::to_string(k) + "]";
    const double re = require_number(require_field(zeros[k], "re", path), path + ".re");
    const double im = require_number(require_field(zeros[k], "im", path), path + ".im");
    zs.emplace_back(re, im);
  }
  try {
    return BlaschkeProduct(std::move(zs));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("$.zeros: " + std::string(e.what()));
  }
}

ordered_json to_json(const BlaschkeProduct& u) {
  ordered_json j;
  j["type"] = "blaschke";
  j["zeros"] = ordered_json::array();
  for (cplx z : u.zeros()) {
    j["zeros"].push_back({{"re", z.real()}, {"im", z.imag()}});
  }
  return j;
}

AtomicMeasure parse_atomic_measure(const ordered_json& j) {
  require_type(j, "singular");
  const ordered_json& atoms = require_field(j, "atoms", "$");
  if (!atoms.is_array()) throw std::invalid_argument("$.atoms must be an array");
  std::vector<Atom> as;
  as.reserve(atoms.size());
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    const std::string path = "$.atoms[" + std::to_string(k) + "]";
    Atom a;
    a.angle = require_number(require_field(atoms[k], "angle", path), path + ".angle");
    a.weight = require_number(require_field(atoms[k], "weight", path), path + ".weight");
    if (!(a.weight > 0.0)) {
      throw std::invalid_argument(path + ".weight must be positive");
    }
    as.push_back(a);
  }
  try {
    return AtomicMeasure(std::move(as));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("$.atoms: " + std::string(e.what()));
  }
}

ordered_json to_json(const AtomicMeasure& nu) {
  ordered_json j;
  j["type"] = "singular";
  j["atoms"] = ordered_json::array();
  for (const Atom& a : nu.atoms()) {
    j["atoms"].push_back({{"angle", a.angle}, {"weight", a.weight}});
  }
  return j;
}

namespace {

ordered_json parse_document(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("input is not valid JSON");
  return j;
}

}  // namespace

BlaschkeProduct parse_blaschke_string(const std::string& text) {
  return parse_blaschke(parse_document(text));
}

AtomicMeasure parse_atomic_measure_string(const std::string& text) {
  return parse_atomic_measure(parse_document(text));
}

ordered_json to_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace ttolab
