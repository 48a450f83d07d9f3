#pragma once

#include "mapdist/families.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mapdist {

enum class IdentityName {
  recurX,
  XtoN,
  recurN,
  recurY,
  recurNbiv,
  DstClosed,
  recurYbiv,
  recurXtilde,
  recurXtildeBiv,
  recurYtilde,
  recurYtildeBiv,
  routeEquivalence,
  telescoping,
  productFormulaR,
  treeLimitEven,
  treeLimitOdd,
  treeLimitBip,
};

const std::vector<IdentityName>& all_identities();
std::string to_string(IdentityName id);
IdentityName parse_identity(const std::string& name);

struct VerifierConfig {
  int univariate_order = 16;
  int bivariate_order = 10;
  int univariate_max_index = 5;
  int bivariate_max_index = 3;
};

struct IdentityFailure {
  std::string regime;
  std::string check;
  std::vector<int> indices;
  int g_order = 0;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  IdentityName identity;
  bool pass = true;
  long cases = 0;
  std::optional<IdentityFailure> first_failure;
};

nlohmann::ordered_json to_json(const VerificationReport& r);

class IdentityVerifier {
 public:
  explicit IdentityVerifier(VerifierConfig cfg = {});

  const VerifierConfig& config() const { return cfg_; }

  // Evaluators are built on first use; callers may install overrides on them before verifying.
  FamilyEvaluator<Rational>& univariate(MapFamily f);
  FamilyEvaluator<ZPolynomial>& bivariate(MapFamily f);

  VerificationReport verify(IdentityName id);
  std::vector<VerificationReport> verify_all();

 private:
  VerifierConfig cfg_;
  std::unique_ptr<FamilyEvaluator<Rational>> uni_[2];
  std::unique_ptr<FamilyEvaluator<ZPolynomial>> biv_[2];
};

}  // namespace mapdist
