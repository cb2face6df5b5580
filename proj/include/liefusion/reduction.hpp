#pragma once

#include "liefusion/explicit_module.hpp"
#include "liefusion/fusion.hpp"

#include <optional>

namespace liefusion {

// Everything in this header is specific to F4 with charge weight lambda_4.

enum class DifferenceKind { Zero, ShortA, ShortB, LongRoot, Other };

struct DifferenceClass {
  DifferenceKind kind = DifferenceKind::Other;
  // Matched (positive root index, sign) when nu - mu is plus or minus a root.
  std::optional<std::pair<std::size_t, int>> matched;
};

DifferenceClass classify_difference(const Weight& mu, const Weight& nu);

// The six positive short roots orthogonal to theta (group A), in canonical
// root order; short_b_roots are the remaining six short positive roots.
std::vector<std::size_t> group_a_roots();
std::vector<std::size_t> group_b_roots();

struct FundamentalType {
  int id = 0;  // 1..9
  Weight mu0, nu0;
  std::int64_t level = 0;
  Int rule;
};

// The nine fundamental types with their computed fusion rules
// (1,1,1,1,1,1,2,1,1); throws if any computed rule disagrees.
const std::vector<FundamentalType>& fundamental_table();

enum class ReductionTarget { ZeroRule, Fundamental, AdjointOf };

struct ReductionCertificate {
  std::int64_t level = 0;  // l
  Weight mu, nu;
  ReductionTarget target = ReductionTarget::ZeroRule;
  int type_id = 0;  // 1..9 when target != ZeroRule
  Weight shift;     // rho
  std::int64_t target_level = 0;  // k
  bool rule_bound_holds = false;  // N^nu_mu <= N^{nu0}_{mu0}
  bool shift_consistent = false;  // mu = mu0 + rho, nu = nu0 + rho, rho admissible at l-k
  Int rule_value;                 // N^{nu0}_{mu0} (0 for the zero rule)
};

// Reduces type (nu over mu, level l) with (mu|theta) = (nu|theta) = l to a
// fundamental type, the adjoint of one, or the zero rule; throws when the
// difference is out of scope or a certificate check fails.
ReductionCertificate reduce_to_fundamental(std::int64_t l, const Weight& mu, const Weight& nu);

enum class WitnessRoute { None, MultiplicityAndAngle, ExplicitModule };

// Checkable conditions for reducing a level-l intertwiner family to level k.
struct ReductionConditionsReport {
  std::int64_t level = 0;  // l
  Weight mu, nu, rho, mu0, nu0;
  std::int64_t k = 0;
  Weight alpha;  // nu0 - nu + rho
  Weight eta;    // nu - mu
  Int rule_l;    // N at level l (classical value, unit charge)
  Int rule_k;    // N of the target type
  bool cond_a = false;  // rule_l <= rule_k
  bool cond_b = false;  // mu = mu0 + rho; dim L(nu0)[nu-rho] = 1; Hom(nu0 x rho, nu) = 1
  bool cond_c = false;  // (rho|theta) + k <= l
  bool cond_d = false;
  bool cond_i = false;   // rule_k == 1
  bool cond_ii = false;  // alpha is a positive root
  WitnessRoute route = WitnessRoute::None;
  Rat eta_alpha_inner;       // (eta|alpha)
  Int charge_space_dim;      // dim L(lambda4)[nu0 - mu0]
  Int nu_rho_multiplicity;   // dim L(nu0)[nu - rho]
  bool pass() const { return cond_a && cond_b && cond_c && cond_d; }
};

ReductionConditionsReport check_level_reduction(std::int64_t l, const Weight& mu, const Weight& nu,
                                                const Weight& rho, const Weight& mu0, const Weight& nu0);

struct ReductionCaseData {
  int id = 0;
  std::int64_t l = 0;
  Weight mu, nu, rho, mu0, nu0;
  std::int64_t expect_k = 0;
  OrthoVec expect_alpha, expect_eta;
  WitnessRoute expect_route = WitnessRoute::None;
  Weight nu_minus_rho;
};

struct ReductionCaseResult {
  ReductionCaseData data;
  ReductionConditionsReport report;
  bool derived_match = false;  // k, alpha, eta equal the tabulated values
  Int nu_rho_mult;
  bool pass() const;
};

struct ReductionSuiteReport {
  std::vector<ReductionCaseResult> cases;
  bool annihilators_distinct = false;  // the two zero-weight annihilator lines differ
  bool pass() const;
};

// The four tabulated reduction cases for the higher-level fundamental
// types, plus the zero-weight annihilator independence check.
const std::vector<ReductionCaseData>& reduction_case_table();
ReductionSuiteReport verify_reduction_cases();

}  // namespace liefusion
