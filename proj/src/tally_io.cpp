#include <fstream>
#include <sstream>

#include <json.hpp>

#include "siegel2/census.hpp"

namespace siegel2 {

using nlohmann::json;

std::string tally_to_json(const Tally& t) {
  json j;
  j["p"] = t.p;
  j["n"] = t.n;
  j["stratum"] = t.stratum;
  j["weight_cap"] = t.weight_cap;
  j["variant"] = t.variant;
  j["tool_version"] = t.tool_version;
  j["shard_index"] = t.shard_index;
  j["shard_count"] = t.shard_count;
  const auto& parts = (t.stratum == "genus2") ? partitions6() : partitions3();
  json entries = json::array();
  for (const auto& [key, v] : t.raw) {
    auto [nu, n1, n2] = key;
    json e;
    e["nu"] = parts[nu];
    e["n1"] = n1;
    e["n2"] = n2;
    e["raw"] = v.get_str();
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j.dump(1);
}

Tally tally_from_json(const std::string& text) {
  json j = json::parse(text);
  Tally t;
  t.p = j.at("p").get<int>();
  t.n = j.at("n").get<int>();
  t.stratum = j.at("stratum").get<std::string>();
  t.weight_cap = j.at("weight_cap").get<int>();
  t.variant = j.at("variant").get<std::string>();
  t.tool_version = j.value("tool_version", std::string(kToolVersion));
  t.shard_index = j.value("shard_index", 0);
  t.shard_count = j.value("shard_count", 1);
  if (t.variant != kTallyVariant)
    throw census_error("VariantMismatch", "tally variant '" + t.variant + "' unsupported");
  const auto& parts = (t.stratum == "genus2") ? partitions6() : partitions3();
  for (const auto& e : j.at("entries")) {
    Partition nu = e.at("nu").get<Partition>();
    int idx = partition_index(parts, nu);
    mpz_class v(e.at("raw").get<std::string>());
    t.raw[{idx, e.at("n1").get<int>(), e.at("n2").get<int>()}] = v;
  }
  return t;
}

void save_tally(const Tally& t, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw census_error("IoError", "cannot write " + path);
  os << tally_to_json(t);
}

Tally load_tally(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw census_error("IoError", "cannot read " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return tally_from_json(ss.str());
}

}  // namespace siegel2
