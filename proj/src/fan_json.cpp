#include "toricoh/fan_json.hpp"

#include <fstream>
#include <set>

namespace toricoh {

namespace {

// A loaded fan that coincides with a builder output (same rays in the same
// order, same cone set) regains its family tag, so family-gated operations
// keep working across save/load round trips.
Fan with_detected_family(std::size_t dim, std::vector<std::vector<Int>> rays,
                         std::vector<std::vector<int>> cones) {
  Fan fan(dim, rays, cones);
  auto matches = [&](const Fan& built) {
    if (built.ray_count() != fan.ray_count() || built.dimension() != fan.dimension()) return false;
    if (built.rays() != fan.rays()) return false;
    std::set<std::vector<int>> a(built.max_cones().begin(), built.max_cones().end());
    std::set<std::vector<int>> b(fan.max_cones().begin(), fan.max_cones().end());
    return a == b;
  };
  if (fan.ray_count() == fan.dimension() + 1) {
    Fan built = build_projective_fan(dim);
    if (matches(built)) return Fan(dim, std::move(rays), std::move(cones), FanFamily::Projective, dim);
  }
  if (dim % 2 == 0 && dim >= 2 && fan.ray_count() == 2 * dim + 2) {
    Fan built = build_del_pezzo_fan(dim);
    if (matches(built)) return Fan(dim, std::move(rays), std::move(cones), FanFamily::DelPezzo, dim);
  }
  return fan;
}

}  // namespace

nlohmann::json fan_to_json(const Fan& fan) {
  nlohmann::json j;
  j["dimension"] = fan.dimension();
  nlohmann::json rays = nlohmann::json::array();
  for (const auto& v : fan.rays()) {
    nlohmann::json rv = nlohmann::json::array();
    for (const Int& e : v) rv.push_back(e.convert_to<long long>());
    rays.push_back(std::move(rv));
  }
  j["rays"] = std::move(rays);
  nlohmann::json cones = nlohmann::json::array();
  for (const auto& c : fan.max_cones()) {
    nlohmann::json cv = nlohmann::json::array();
    for (int i : c) cv.push_back(i + 1);
    cones.push_back(std::move(cv));
  }
  j["max_cones"] = std::move(cones);
  return j;
}

Fan fan_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dimension") || !j.contains("rays") || !j.contains("max_cones"))
    throw DomainError("fan JSON must contain dimension, rays and max_cones");
  if (!j["dimension"].is_number_integer()) throw DomainError("fan dimension must be an integer");
  if (!j["rays"].is_array() || !j["max_cones"].is_array())
    throw DomainError("rays and max_cones must be arrays of arrays");
  long long dim = j["dimension"].get<long long>();
  if (dim < 1) throw DomainError("fan dimension must be at least 1");
  std::vector<std::vector<Int>> rays;
  for (const auto& rv : j["rays"]) {
    if (!rv.is_array()) throw DomainError("each ray must be an array of integers");
    std::vector<Int> v;
    for (const auto& e : rv) {
      if (!e.is_number_integer()) throw DomainError("ray entries must be integers");
      v.emplace_back(e.get<long long>());
    }
    rays.push_back(std::move(v));
  }
  std::vector<std::vector<int>> cones;
  for (const auto& cv : j["max_cones"]) {
    if (!cv.is_array()) throw DomainError("each cone must be an array of 1-based ray indices");
    std::vector<int> c;
    for (const auto& e : cv) {
      if (!e.is_number_integer()) throw DomainError("cone entries must be integers");
      long long i = e.get<long long>();
      if (i < 1) throw DomainError("cone ray indices are 1-based");
      c.push_back(static_cast<int>(i - 1));
    }
    cones.push_back(std::move(c));
  }
  return with_detected_family(static_cast<std::size_t>(dim), std::move(rays), std::move(cones));
}

std::string fan_to_json_string(const Fan& fan) { return fan_to_json(fan).dump(2); }

Fan fan_from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw DomainError("fan file is not valid JSON");
  return fan_from_json(j);
}

Fan fan_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open fan file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return fan_from_json_string(text);
}

void fan_to_file(const Fan& fan, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write fan file: " + path);
  out << fan_to_json_string(fan) << "\n";
}

}  // namespace toricoh
