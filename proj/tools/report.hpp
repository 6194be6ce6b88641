#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "trideg/complexes.hpp"

namespace trideg::cli {

/// Collects a run's verdicts. Every isomorphism claim carries its serialized
/// certificate, in both output modes.
class Report {
 public:
  explicit Report(std::string command) { doc_["command"] = std::move(command); }

  void note(const std::string& text);
  void set(const std::string& key, nlohmann::json value);
  /// Records a boolean verdict; a false one makes the run fail.
  void verdict(const std::string& key, bool ok, const std::string& text);
  /// "X ≅ Y" with certificate, or "not found within budget".
  void iso(const std::string& key, const std::string& claim, const std::optional<IsoCertificate>& cert);

  [[nodiscard]] bool ok() const { return ok_; }
  void print(bool as_json) const;

 private:
  nlohmann::json doc_;
  std::string text_;
  bool ok_ = true;
};

}  // namespace trideg::cli
