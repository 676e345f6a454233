#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bq/cosets.hpp"
#include "bq/fuchsian.hpp"
#include "bq/intlat.hpp"
#include "bq/ledger.hpp"
#include "bq/paper_data.hpp"
#include "bq/perms.hpp"
#include "bq/reflrep.hpp"

namespace bq {

struct ClaimResult {
  std::string id;
  std::string statement;
  std::string anchor;      // section of the source construction
  std::string quote;       // short verbatim quote pinned to the claim
  std::string provenance;  // paper | derived | trivial
  std::string computed;
  std::string expected;
  bool pass = false;
};

struct ClaimInfo {
  std::string id;
  std::string statement;
  std::string anchor;
  std::string quote;
  std::string provenance;
};

/// Lazily computed artifacts shared by the claims: coset tables, the
/// exact representation, finite image groups. Later claims reuse what
/// earlier claims built; expected values never feed a computation.
class Pipeline {
 public:
  explicit Pipeline(PaperData data, std::size_t max_cosets = 100000);
  ~Pipeline();
  Pipeline(Pipeline&&) noexcept;
  Pipeline& operator=(Pipeline&&) noexcept;

  const PaperData& data() const;
  std::size_t max_cosets() const;

  const ReflectionRep& rep();
  const CosetTable& table_gamma1();            // Gamma1 in Gamma0
  const CosetTable& table_gamma2();            // Gamma2 in Gamma0
  const CosetTable& table_gamma3();            // Gamma3 in Gamma0
  const CosetTable& table_gamma3_in_gamma1();
  const CosetTable& table_gamma3_in_gamma2();
  const CosetTable& table_gamma4_in_gamma3();
  const CosetTable& lambda1_table();           // kernel of rho1 in Gamma1
  const CosetTable& lambda2_table();           // kernel of rho2 in Gamma2
  const FiniteGroup& image_rho1();             // closure of the rho1 images
  const FiniteGroup& image_rho2();

  Perm rho1_of(const Word& w_abcd) const;
  Perm rho2_of(const Word& w_gh) const;

  /// Intersection data of the resolved quotient pair, assembled from the
  /// pipeline's own outputs (never from expected values).
  const PairInvariants& base_pair();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Catalog order mirrors the construction narrative: C01..C18 for the
/// group-theoretic claims, L01..L08 for the intersection-number ledger.
std::vector<ClaimInfo> claim_catalog();
bool is_claim_id(const std::string& id);

/// Run one claim. Unknown ids throw std::invalid_argument. Mathematical
/// failures come back as pass = false with the computed object in full;
/// resource exhaustion propagates.
ClaimResult run_claim(Pipeline& pipe, const std::string& id);

/// Cover claims for one odd degree d (V01..V03): quotient certificate,
/// scaled invariants, scaled volume.
std::vector<ClaimResult> run_cover_claims(Pipeline& pipe, int d);

struct CertificateHeader {
  std::string tool;
  std::string version;
  std::vector<std::pair<std::string, std::string>> conventions;
  std::vector<std::string> cited;  // rules imported as named arithmetic, not re-proved
};

CertificateHeader standard_header();

struct Certificate {
  CertificateHeader header;
  std::vector<ClaimResult> claims;
  int passed = 0;
  int failed = 0;
  long long elapsed_ms = 0;
  bool all_pass() const { return failed == 0; }
};

/// Run a selection of claims in catalog order and aggregate.
Certificate run_claims(Pipeline& pipe, const std::vector<std::string>& ids);

/// The whole catalog.
Certificate run_all(Pipeline& pipe);

}  // namespace bq
