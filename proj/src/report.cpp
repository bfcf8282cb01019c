#include "graydist/report.hpp"

#include <algorithm>
#include <sstream>

namespace graydist {

bool CheckReport::pass() const {
  return std::all_of(instances.begin(), instances.end(), [](const CheckInstance& i) { return i.pass; });
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (CheckInstance i : other.instances) {
    if (!prefix.empty()) i.tag = prefix + "/" + i.tag;
    instances.push_back(std::move(i));
  }
}

void CheckReport::sort_by_tag() {
  std::stable_sort(instances.begin(), instances.end(),
                   [](const CheckInstance& a, const CheckInstance& b) { return a.tag < b.tag; });
}

const CheckInstance* CheckReport::find(const std::string& tag) const {
  for (const auto& i : instances)
    if (i.tag == tag) return &i;
  return nullptr;
}

std::vector<std::string> CheckReport::failing_tags() const {
  std::vector<std::string> out;
  for (const auto& i : instances)
    if (!i.pass) out.push_back(i.tag);
  return out;
}

nlohmann::json CheckReport::to_json() const {
  CheckReport sorted = *this;
  sorted.sort_by_tag();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& i : sorted.instances)
    arr.push_back({{"tag", i.tag}, {"pass", i.pass}, {"witness", i.witness}});
  return {{"suite", suite}, {"instances", arr}};
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& i : instances)
    if (!i.pass) ++failed;
  os << suite << ": " << instances.size() - failed << "/" << instances.size() << " passed\n";
  for (const auto& i : instances)
    if (!i.pass) os << "  FAIL " << i.tag << ": " << i.witness << "\n";
  return os.str();
}

}  // namespace graydist
