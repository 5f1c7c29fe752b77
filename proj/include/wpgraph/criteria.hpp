#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wpgraph/enumeration.hpp"
#include "wpgraph/rational.hpp"

namespace wpgraph {

// Coefficient criteria for log-concavity and unimodality of independence
// polynomials of connected W_p graphs. Every evaluator here is a pure exact
// formula; whether its structural premises actually hold for a given graph is
// recorded by the caller, never assumed.

// Verdict names: "phi_general", "f_quadratic", "interval_form_case1",
// "interval_form_case2", "interval_form" (evaluated, neither case holds),
// "unimodality_LR", "direct".
struct CriterionVerdict {
  std::string name;
  int p = 0;
  Rational lambda;
  int n = 0;
  int alpha = 0;
  std::vector<std::pair<int, Rational>> per_k;  // formula value at each k
  bool fired = false;
  bool premises_verified = false;
  std::optional<int> bound_l, bound_r;               // unimodality_LR only
  std::optional<bool> direct_log_concave, direct_unimodal;  // "direct" only
};

// (k+1)p(alpha-k+1) - k(n-(lambda+1)k), the log-concavity margin at k.
// Requires 1 <= k <= alpha-1 (k_out_of_range otherwise) and lambda > 0.
Rational log_concavity_margin(int p, const Rational& lambda, int n, int alpha, int k);

// k^2 - (n-p*alpha)k + p*alpha + p; equals the margin above at lambda = p.
long long quadratic_margin(int p, int n, int alpha, int k);

// Fired when the margin is nonnegative for every 1 <= k <= alpha-1
// (vacuously for alpha <= 1).
CriterionVerdict log_concavity_criterion(int p, const Rational& lambda, int n, int alpha);

// Same range over the quadratic specialization, name "f_quadratic".
CriterionVerdict quadratic_criterion(int p, int n, int alpha);

// Membership of (n, p, alpha) in one of two explicit intervals, each with a
// side condition on p; all square-root comparisons are done by integer
// squaring with sign care. Requires alpha >= 2 (alpha_too_small).
//   case 1: (p+1)a <= n <= pa + 2*sqrt(pa+p)       with a^2 <= 4p(a+1)
//   case 2: pa + 2*sqrt(pa+p) < n,
//           n(a-1) <= (a^2+1)p + (a-1)^2           with a(a-1) <= p(a+1)
CriterionVerdict interval_criterion(int p, int n, int alpha);

// L = floor((p*alpha-1)/(p+1)), R = ceil((n-1)/(lambda+2)); coefficients are
// nondecreasing through L+1 and nonincreasing from R on, so R <= L+1 fires
// unimodality. R > L+1 is inconclusive, never a refutation.
CriterionVerdict unimodality_bounds(int p, const Rational& lambda, int n, int alpha);

// s_k^2 >= s_{k-1} s_{k+1} at every interior index.
bool is_log_concave(std::span<const BigInt> coeffs);

// Nondecreasing then nonincreasing around some peak (plateaus allowed).
bool is_unimodal(std::span<const BigInt> coeffs);

// The two coefficient chains, evaluated only under machine-verified premises:
// (i)  (k+1) s_{k+1} <= (n-(lambda+1)k) s_k   0 <= k <= alpha-1   [lambda-QR]
// (ii) p(alpha-k) s_k <= (k+1) s_{k+1}        1 <= k <= alpha-1   [connected W_p]
struct ChainResult {
  enum class Status { pass, fail, premise_not_met };
  Status status = Status::premise_not_met;
  std::optional<int> violated_k;
};

struct CoefficientAudit {
  int p = 0;
  Rational lambda;
  ChainResult chain_i;   // needs verified lambda-quasi-regularizability
  ChainResult chain_ii;  // needs verified connected W_p membership
};

CoefficientAudit coefficient_inequality_audit(int n, int alpha, std::span<const BigInt> coeffs,
                                              int p, const Rational& lambda,
                                              bool lambda_qr_verified, bool connected_wp_verified);

// Convolution facts: a log-concave times a log-concave positive sequence is
// log-concave; a log-concave times a unimodal one is unimodal. Inputs must
// have no internal zero coefficient (internal_zero otherwise).
struct ProductLemmaReport {
  bool p_log_concave = false;
  bool q_log_concave = false;
  bool q_unimodal = false;
  std::vector<BigInt> product;
  bool product_log_concave = false;
  bool product_unimodal = false;

  // True when a guaranteed conclusion failed on the computed convolution.
  bool violation() const {
    return (p_log_concave && q_log_concave && !product_log_concave) ||
           (p_log_concave && q_unimodal && !product_unimodal);
  }
};

ProductLemmaReport product_lemma_check(std::span<const BigInt> p, std::span<const BigInt> q);

std::vector<BigInt> convolve(std::span<const BigInt> a, std::span<const BigInt> b);

// Randomized suite behind `verify --theorem product-lemma`: checks
// pairs_per_class log-concave x log-concave products for log-concavity and
// the same number of log-concave x unimodal products for unimodality.
// Factors have lengths 2..12 and entries 1..10^6, built so the required
// property holds by construction.
struct ProductLemmaSuiteResult {
  int lc_lc_pairs = 0;
  int lc_unimodal_pairs = 0;
  int violations = 0;
};

ProductLemmaSuiteResult product_lemma_suite(int pairs_per_class, std::uint64_t seed);

// One verified W_p membership feeding the unified verdict.
struct MembershipInput {
  int p = 0;
  bool wp_verified = false;        // connected W_p membership machine-checked
  bool qr_lambda_p_verified = false;  // lambda = p quasi-regularizability machine-checked
};

// For each verified p with n >= (p+1)*alpha, evaluates the margin, quadratic,
// interval and unimodality criteria at lambda = p, then appends one "direct"
// verdict carrying the exact checks on the coefficients.
std::vector<CriterionVerdict> unified_verdict(bool connected,
                                              std::span<const MembershipInput> memberships, int n,
                                              int alpha, std::span<const BigInt> coeffs);

}  // namespace wpgraph
