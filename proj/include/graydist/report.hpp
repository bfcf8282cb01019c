#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace graydist {

struct CheckInstance {
  std::string tag;
  bool pass = true;
  std::string witness;
  // Rendered source shapes of failing instances (preorder node tuples).
  std::vector<std::string> shapes;
  // Pointwise oracle: verdict on every evaluated set size and whether it
  // matched the container verdict. oracle_sizes == 0 means not evaluated.
  bool oracle_pass = true;
  bool oracle_agrees = true;
  int oracle_sizes = 0;
};

inline CheckInstance make_instance(std::string tag) {
  CheckInstance i;
  i.tag = std::move(tag);
  return i;
}

struct CheckReport {
  std::string suite;
  std::vector<CheckInstance> instances;

  bool pass() const;
  void add(CheckInstance i) { instances.push_back(std::move(i)); }
  // Appends other's instances with "prefix/" prepended to their tags.
  void merge(const CheckReport& other, const std::string& prefix = "");
  void sort_by_tag();
  const CheckInstance* find(const std::string& tag) const;
  std::vector<std::string> failing_tags() const;
  nlohmann::json to_json() const;
  std::string summary() const;
};

}  // namespace graydist
