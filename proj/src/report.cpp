#include "bq/report.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bq {

namespace {
using ordered_json = nlohmann::ordered_json;
}

std::string certificate_json(const Certificate& cert, bool with_timestamps) {
  ordered_json j;
  j["schema"] = "ballquot-certificate/1";
  j["tool"] = {{"name", cert.header.tool}, {"version", cert.header.version}};
  ordered_json conv = ordered_json::object();
  for (const auto& [k, v] : cert.header.conventions) conv[k] = v;
  j["conventions"] = conv;
  j["cited"] = cert.header.cited;
  ordered_json claims = ordered_json::array();
  for (const ClaimResult& c : cert.claims) {
    ordered_json e;
    e["id"] = c.id;
    e["statement"] = c.statement;
    e["anchor"] = c.anchor;
    e["quote"] = c.quote;
    e["provenance"] = c.provenance;
    e["computed"] = c.computed;
    e["expected"] = c.expected;
    e["status"] = c.pass ? "pass" : "fail";
    claims.push_back(e);
  }
  j["claims"] = claims;
  ordered_json summary;
  summary["passed"] = cert.passed;
  summary["failed"] = cert.failed;
  if (with_timestamps) summary["elapsed_ms"] = cert.elapsed_ms;
  j["summary"] = summary;
  return j.dump(2) + "\n";
}

std::string certificate_markdown(const Certificate& cert, bool with_timestamps) {
  std::ostringstream os;
  os << "# " << cert.header.tool << " " << cert.header.version << " certificate\n\n";
  os << "## Conventions\n\n";
  for (const auto& [k, v] : cert.header.conventions) os << "- **" << k << "**: " << v << "\n";
  os << "\n## Cited results (imported, not re-derived)\n\n";
  for (const std::string& c : cert.header.cited) os << "- " << c << "\n";
  os << "\n## Claims\n";
  for (const ClaimResult& c : cert.claims) {
    os << "\n### " << c.id << " — " << (c.pass ? "PASS" : "FAIL") << "\n\n";
    os << c.statement << "\n\n";
    os << "- anchor: " << c.anchor << " (\"" << c.quote << "\")\n";
    os << "- provenance: " << c.provenance << "\n";
    os << "- computed: " << c.computed << "\n";
    os << "- expected: " << c.expected << "\n";
  }
  os << "\n## Summary\n\n";
  os << "- passed: " << cert.passed << "\n";
  os << "- failed: " << cert.failed << "\n";
  if (with_timestamps) os << "- elapsed: " << cert.elapsed_ms << " ms\n";
  return os.str();
}

std::string certificate_text(const Certificate& cert, bool with_timestamps) {
  std::ostringstream os;
  for (const ClaimResult& c : cert.claims) {
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.statement << "\n";
    if (!c.pass) {
      os << "      computed: " << c.computed << "\n";
      os << "      expected: " << c.expected << "\n";
    }
  }
  os << cert.passed << " passed, " << cert.failed << " failed";
  if (with_timestamps) os << " (" << cert.elapsed_ms << " ms)";
  os << "\n";
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("error writing '" + path + "'");
}

}  // namespace bq
