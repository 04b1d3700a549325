/*
 * Copyright 2026 The hombraid Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HOMBRAID_REPORT_HPP
#define HOMBRAID_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace hombraid {

/// Outcome of a single named check.  A failing check carries a witness: a
/// human-readable description of the first counterexample found.
struct CheckItem {
  std::string name;
  bool pass = false;
  std::string witness;  ///< empty when pass is true

  static CheckItem ok(std::string name) { return CheckItem{std::move(name), true, {}}; }
  static CheckItem fail(std::string name, std::string witness) {
    return CheckItem{std::move(name), false, std::move(witness)};
  }
};

/// A bundle of check outcomes.  Every requested check is always evaluated and
/// recorded, even after an earlier one has failed.
class Report {
 public:
  void add(CheckItem item) { items_.push_back(std::move(item)); }
  void ok(std::string name) { add(CheckItem::ok(std::move(name))); }
  void fail(std::string name, std::string witness) {
    add(CheckItem::fail(std::move(name), std::move(witness)));
  }
  /// Appends all items of another report, prefixing their names.
  void absorb(const Report& other, const std::string& prefix = "") {
    for (const auto& item : other.items_) {
      CheckItem copy = item;
      copy.name = prefix + copy.name;
      items_.push_back(std::move(copy));
    }
  }

  const std::vector<CheckItem>& items() const { return items_; }
  bool pass() const {
    for (const auto& item : items_)
      if (!item.pass) return false;
    return true;
  }
  /// First failing item, or nullptr if all pass.
  const CheckItem* first_failure() const {
    for (const auto& item : items_)
      if (!item.pass) return &item;
    return nullptr;
  }

  /// One line per check, suitable for logs and error messages.
  std::string summary() const {
    std::string out;
    for (const auto& item : items_) {
      out += item.pass ? "  [pass] " : "  [FAIL] ";
      out += item.name;
      if (!item.pass && !item.witness.empty()) {
        out += ": ";
        out += item.witness;
      }
      out += '\n';
    }
    return out;
  }

 private:
  std::vector<CheckItem> items_;
};

}  // namespace hombraid

#endif  // HOMBRAID_REPORT_HPP
