#include "chilab/coverage.hpp"

#include <algorithm>
#include <mutex>

#include "chilab/error.hpp"

namespace chilab {

namespace {

std::mutex& coverage_mutex() {
  static std::mutex m;
  return m;
}

std::set<std::string>& hit_set() {
  static std::set<std::string> hits;
  return hits;
}

}  // namespace

const std::vector<std::string>& coverage_registry() {
  static const std::vector<std::string> registry = {
      "ic.hfree_all",
      "ic.isolated_part",
      "ic.hfree_part",
      "ic.inconclusive",
      "bb.lowset_sprinkling",
      "bb.step_sprinkling",
      "bb.grow",
      "bb.final_copy",
      "bb.final_template",
      "bb.stall",
      "si.claim1_cert",
      "si.claim1_template",
      "si.zrest_extension",
      "si.home_pair_copy",
      "si.home_tail_cert",
      "si.home_tail_extension",
      "si.homes_exhausted",
      "bip.copy_direct",
      "bip.hfree",
      "bip.copy_in_p",
      "smallnbrs.hole",
      "smallnbrs.inconclusive",
      "odd_c4.smallnbrs",
      "odd_c4.pair",
      "odd_c4.inconclusive",
      "special_nd.copy_to_hole",
      "special_nd.four_in_p",
      "special_nd.odd_tail",
      "special_nd.fallback",
      "special_nd.inconclusive",
      "special_mh.base",
      "special_mh.step",
      "special_mh.fallback",
      "special_mh.inconclusive",
      "long_nd.low_side",
      "long_nd.pair_side",
      "long_nd.inconclusive",
      "long_or_kss.copy_direct",
      "long_or_kss.kss_in_p",
      "long_or_kss.hole_in_p",
      "long_or_kss.tail",
      "long_or_kss.fallback",
      "long_or_kss.inconclusive",
      "k_object.base_kss",
      "k_object.base_hole",
      "k_object.step",
      "k_object.fallback",
      "k_object.inconclusive",
  };
  return registry;
}

void coverage_hit(const std::string& branch) {
  const auto& reg = coverage_registry();
  if (std::find(reg.begin(), reg.end(), branch) == reg.end())
    fail(ErrorKind::argument, "unregistered coverage branch: " + branch);
  std::lock_guard<std::mutex> lock(coverage_mutex());
  hit_set().insert(branch);
}

std::set<std::string> coverage_hits() {
  std::lock_guard<std::mutex> lock(coverage_mutex());
  return hit_set();
}

void coverage_reset() {
  std::lock_guard<std::mutex> lock(coverage_mutex());
  hit_set().clear();
}

}  // namespace chilab
