#include "report.hpp"

#include <iostream>

#include "trideg/io.hpp"

namespace trideg::cli {

void Report::note(const std::string& text) { text_ += text + "\n"; }

void Report::set(const std::string& key, nlohmann::json value) { doc_[key] = std::move(value); }

void Report::verdict(const std::string& key, bool ok, const std::string& text) {
  doc_["verdicts"][key] = ok;
  ok_ = ok_ && ok;
  text_ += (ok ? "[ok]   " : "[FAIL] ") + text + "\n";
}

void Report::iso(const std::string& key, const std::string& claim, const std::optional<IsoCertificate>& cert) {
  if (cert) {
    const auto j = io::to_json(*cert);
    doc_["certificates"][key] = j;
    verdict(key, verify_iso(*cert), claim);
    text_ += "       certificate: " + j.dump() + "\n";
  } else {
    verdict(key, false, claim + ": not found within budget");
  }
}

void Report::print(bool as_json) const {
  if (as_json) {
    nlohmann::json out = doc_;
    out["ok"] = ok_;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text_;
  }
}

}  // namespace trideg::cli
