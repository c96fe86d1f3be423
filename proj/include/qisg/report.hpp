#pragma once

#include <string>
#include <vector>

namespace qisg {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string witness;   // first failing element(s) and both sides, empty on pass
  bool required = true;  // informational rows never gate ok()
};

struct Report {
  std::string title;
  std::vector<CheckItem> items;
  std::vector<std::pair<std::string, long>> counts;

  bool ok() const {
    for (const auto& it : items)
      if (it.required && !it.pass) return false;
    return true;
  }
  const CheckItem* find(const std::string& name) const {
    for (const auto& it : items)
      if (it.name == name) return &it;
    return nullptr;
  }
  void add(std::string name, bool pass, std::string witness = "", bool required = true) {
    items.push_back(CheckItem{std::move(name), pass, std::move(witness), required});
  }
  void count(std::string name, long value) { counts.emplace_back(std::move(name), value); }
  void merge(const Report& other) {
    for (const auto& it : other.items) items.push_back(it);
    for (const auto& c : other.counts) counts.push_back(c);
  }
};

/// Thrown when a construction's prerequisite report fails.
struct CheckFailure : std::runtime_error {
  Report report;
  CheckFailure(std::string msg, Report rep) : std::runtime_error(std::move(msg)), report(std::move(rep)) {}
};

}  // namespace qisg
