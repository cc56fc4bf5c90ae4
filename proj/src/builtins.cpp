#include <map>
#include <mutex>

#include "builtin_data.hpp"
#include "growthlab/errors.hpp"
#include "growthlab/group.hpp"

namespace growthlab {

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"grigorchuk", "golden_mean", "simple_grig"};
  return names;
}

std::string canonical_example(std::string_view name) {
  if (name == "golden") return "golden_mean";
  for (const auto& n : builtin_names())
    if (n == name) return n;
  throw UnknownExample("'" + std::string(name) + "' (expected grigorchuk, golden_mean or simple_grig)");
}

GeneratorSet load_builtin(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, GeneratorSet> cache;
  auto id = canonical_example(name);
  std::lock_guard lock(mu);
  if (auto it = cache.find(id); it != cache.end()) return it->second;
  const char* text = id == "grigorchuk"    ? builtin_data::grigorchuk
                     : id == "golden_mean" ? builtin_data::golden_mean
                                           : builtin_data::simple_grig;
  auto set = generators_from_json(Json::parse(text));
  cache.emplace(id, set);
  return set;
}

}  // namespace growthlab
