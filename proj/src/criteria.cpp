#include "wpgraph/criteria.hpp"

#include <random>

namespace wpgraph {

namespace {

void require_k_range(int alpha, int k) {
  if (k < 1 || k > alpha - 1)
    throw Error(errc::k_out_of_range,
                "k=" + std::to_string(k) + " outside 1.." + std::to_string(alpha - 1));
}

}  // namespace

Rational log_concavity_margin(int p, const Rational& lambda, int n, int alpha, int k) {
  if (p < 1) throw Error(errc::bad_argument, "p must be at least 1");
  if (!lambda.positive()) throw Error(errc::bad_argument, "lambda must be positive");
  require_k_range(alpha, k);
  // (k+1)p(alpha-k+1) - k(n-k) + lambda*k^2, assembled over lambda's denominator
  const long long integer_part =
      static_cast<long long>(k + 1) * p * (alpha - k + 1) - static_cast<long long>(k) * (n - k);
  return Rational(integer_part * lambda.den + lambda.num * k * k, lambda.den);
}

long long quadratic_margin(int p, int n, int alpha, int k) {
  if (p < 1) throw Error(errc::bad_argument, "p must be at least 1");
  require_k_range(alpha, k);
  return static_cast<long long>(k) * k - static_cast<long long>(n - p * alpha) * k +
         static_cast<long long>(p) * alpha + p;
}

CriterionVerdict log_concavity_criterion(int p, const Rational& lambda, int n, int alpha) {
  CriterionVerdict v{.name = "phi_general", .p = p, .lambda = lambda, .n = n, .alpha = alpha};
  v.fired = true;  // empty range fires vacuously
  for (int k = 1; k <= alpha - 1; ++k) {
    Rational value = log_concavity_margin(p, lambda, n, alpha, k);
    if (value.num < 0) v.fired = false;
    v.per_k.emplace_back(k, value);
  }
  return v;
}

CriterionVerdict quadratic_criterion(int p, int n, int alpha) {
  CriterionVerdict v{.name = "f_quadratic", .p = p, .lambda = Rational(p), .n = n, .alpha = alpha};
  v.fired = true;
  for (int k = 1; k <= alpha - 1; ++k) {
    const long long value = quadratic_margin(p, n, alpha, k);
    if (value < 0) v.fired = false;
    v.per_k.emplace_back(k, Rational(value));
  }
  return v;
}

CriterionVerdict interval_criterion(int p, int n, int alpha) {
  if (p < 1) throw Error(errc::bad_argument, "p must be at least 1");
  if (alpha < 2) throw Error(errc::alpha_too_small, "interval criterion needs alpha >= 2");
  CriterionVerdict v{.name = "interval_form", .p = p, .lambda = Rational(p), .n = n, .alpha = alpha};

  const long long a = alpha;
  const long long pa = static_cast<long long>(p) * a;
  const long long rad = pa + p;  // the radicand p*alpha + p
  // n <= pa + 2*sqrt(rad)  <=>  n <= pa, or (n-pa)^2 <= 4*rad
  const bool below_sqrt_bound = n <= pa || (n - pa) * (n - pa) <= 4 * rad;

  const bool case1 = (static_cast<long long>(p) + 1) * a <= n && below_sqrt_bound &&
                     a * a <= 4 * static_cast<long long>(p) * (a + 1);
  const bool case2 = !below_sqrt_bound &&
                     static_cast<long long>(n) * (a - 1) <= (a * a + 1) * p + (a - 1) * (a - 1) &&
                     a * (a - 1) <= static_cast<long long>(p) * (a + 1);
  if (case1) {
    v.name = "interval_form_case1";
    v.fired = true;
  } else if (case2) {
    v.name = "interval_form_case2";
    v.fired = true;
  }
  return v;
}

CriterionVerdict unimodality_bounds(int p, const Rational& lambda, int n, int alpha) {
  if (p < 1) throw Error(errc::bad_argument, "p must be at least 1");
  if (!lambda.positive()) throw Error(errc::bad_argument, "lambda must be positive");
  CriterionVerdict v{.name = "unimodality_LR", .p = p, .lambda = lambda, .n = n, .alpha = alpha};
  const long long l = (static_cast<long long>(p) * alpha - 1) / (p + 1);  // floor, numerator >= 0
  // ceil((n-1) / (lambda+2)) over the exact fraction
  const long long r = ceil_div(static_cast<long long>(n - 1) * lambda.den,
                               lambda.num + 2 * lambda.den);
  v.bound_l = static_cast<int>(l);
  v.bound_r = static_cast<int>(r);
  v.fired = r <= l + 1;
  return v;
}

bool is_log_concave(std::span<const BigInt> coeffs) {
  if (coeffs.empty()) throw Error(errc::bad_argument, "empty coefficient sequence");
  for (std::size_t k = 1; k + 1 < coeffs.size(); ++k)
    if (coeffs[k] * coeffs[k] < coeffs[k - 1] * coeffs[k + 1]) return false;
  return true;
}

bool is_unimodal(std::span<const BigInt> coeffs) {
  if (coeffs.empty()) throw Error(errc::bad_argument, "empty coefficient sequence");
  std::size_t i = 1;
  while (i < coeffs.size() && coeffs[i - 1] <= coeffs[i]) ++i;
  while (i < coeffs.size() && coeffs[i - 1] >= coeffs[i]) ++i;
  return i == coeffs.size();
}

namespace {

ChainResult evaluate_chain_i(int n, const Rational& lambda, std::span<const BigInt> coeffs) {
  ChainResult out;
  out.status = ChainResult::Status::pass;
  const int alpha = static_cast<int>(coeffs.size()) - 1;
  for (int k = 0; k <= alpha - 1; ++k) {
    // (k+1) s_{k+1} * den <= (den*(n-k) - num*k) * s_k
    const BigInt lhs = BigInt(k + 1) * coeffs[static_cast<std::size_t>(k) + 1] * lambda.den;
    const BigInt rhs =
        (BigInt(lambda.den) * (n - k) - BigInt(lambda.num) * k) * coeffs[static_cast<std::size_t>(k)];
    if (lhs > rhs) {
      out.status = ChainResult::Status::fail;
      out.violated_k = k;
      break;
    }
  }
  return out;
}

ChainResult evaluate_chain_ii(int p, std::span<const BigInt> coeffs) {
  ChainResult out;
  out.status = ChainResult::Status::pass;
  const int alpha = static_cast<int>(coeffs.size()) - 1;
  for (int k = 1; k <= alpha - 1; ++k) {
    const BigInt lhs = BigInt(p) * (alpha - k) * coeffs[static_cast<std::size_t>(k)];
    const BigInt rhs = BigInt(k + 1) * coeffs[static_cast<std::size_t>(k) + 1];
    if (lhs > rhs) {
      out.status = ChainResult::Status::fail;
      out.violated_k = k;
      break;
    }
  }
  return out;
}

}  // namespace

CoefficientAudit coefficient_inequality_audit(int n, int alpha, std::span<const BigInt> coeffs,
                                              int p, const Rational& lambda,
                                              bool lambda_qr_verified, bool connected_wp_verified) {
  if (static_cast<int>(coeffs.size()) != alpha + 1)
    throw Error(errc::bad_argument, "coefficient count does not match alpha");
  CoefficientAudit out;
  out.p = p;
  out.lambda = lambda;
  if (lambda_qr_verified) out.chain_i = evaluate_chain_i(n, lambda, coeffs);
  if (connected_wp_verified) out.chain_ii = evaluate_chain_ii(p, coeffs);
  return out;
}

std::vector<BigInt> convolve(std::span<const BigInt> a, std::span<const BigInt> b) {
  std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

namespace {

void require_no_internal_zero(std::span<const BigInt> coeffs, const char* which) {
  std::size_t lo = 0, hi = coeffs.size();
  while (lo < hi && coeffs[lo] == 0) ++lo;
  while (hi > lo && coeffs[hi - 1] == 0) --hi;
  for (std::size_t i = lo; i < hi; ++i) {
    if (coeffs[i] < 0) throw Error(errc::bad_argument, "negative coefficient");
    if (coeffs[i] == 0)
      throw Error(errc::internal_zero, std::string(which) + " has an internal zero coefficient");
  }
}

}  // namespace

ProductLemmaReport product_lemma_check(std::span<const BigInt> p, std::span<const BigInt> q) {
  if (p.empty() || q.empty()) throw Error(errc::bad_argument, "empty factor");
  require_no_internal_zero(p, "first factor");
  require_no_internal_zero(q, "second factor");
  ProductLemmaReport out;
  out.p_log_concave = is_log_concave(p);
  out.q_log_concave = is_log_concave(q);
  out.q_unimodal = is_unimodal(q);
  out.product = convolve(p, q);
  out.product_log_concave = is_log_concave(out.product);
  out.product_unimodal = is_unimodal(out.product);
  return out;
}

namespace {

// s_{k+1} <= floor(s_k^2 / s_{k-1}) keeps the squared-middle inequality true
// at every step, so the construction is log-concave with no rounding games.
std::vector<BigInt> random_log_concave(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len_dist(2, 12);
  std::uniform_int_distribution<long long> small(1, 1000);
  const int len = len_dist(rng);
  std::vector<BigInt> s;
  s.push_back(BigInt(small(rng)));
  s.push_back(BigInt(std::uniform_int_distribution<long long>(1, 1000000)(rng)));
  while (static_cast<int>(s.size()) < len) {
    BigInt cap = (s.back() * s.back()) / s[s.size() - 2];
    if (cap > 1000000) cap = 1000000;
    if (cap < 1) break;  // no positive continuation stays log-concave
    const long long hi = cap.convert_to<long long>();
    s.push_back(BigInt(std::uniform_int_distribution<long long>(1, hi)(rng)));
  }
  return s;
}

std::vector<BigInt> random_unimodal(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len_dist(2, 12);
  const int len = len_dist(rng);
  std::uniform_int_distribution<int> peak_dist(0, len - 1);
  const int peak = peak_dist(rng);
  std::vector<BigInt> s;
  long long cur = std::uniform_int_distribution<long long>(1, 1000)(rng);
  for (int i = 0; i < len; ++i) {
    s.push_back(BigInt(cur));
    if (i < peak)
      cur = std::uniform_int_distribution<long long>(cur, 1000000)(rng);
    else
      cur = std::uniform_int_distribution<long long>(1, cur)(rng);
  }
  return s;
}

}  // namespace

ProductLemmaSuiteResult product_lemma_suite(int pairs_per_class, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ProductLemmaSuiteResult out;
  while (out.lc_lc_pairs < pairs_per_class) {
    std::vector<BigInt> p = random_log_concave(rng);
    std::vector<BigInt> q = random_log_concave(rng);
    ProductLemmaReport rep = product_lemma_check(p, q);
    if (!rep.p_log_concave || !rep.q_log_concave) continue;  // generator invariant slipped
    ++out.lc_lc_pairs;
    if (!rep.product_log_concave) ++out.violations;
  }
  while (out.lc_unimodal_pairs < pairs_per_class) {
    std::vector<BigInt> p = random_log_concave(rng);
    std::vector<BigInt> q = random_unimodal(rng);
    ProductLemmaReport rep = product_lemma_check(p, q);
    if (!rep.p_log_concave || !rep.q_unimodal) continue;
    ++out.lc_unimodal_pairs;
    if (!rep.product_unimodal) ++out.violations;
  }
  return out;
}

std::vector<CriterionVerdict> unified_verdict(bool connected,
                                              std::span<const MembershipInput> memberships, int n,
                                              int alpha, std::span<const BigInt> coeffs) {
  std::vector<CriterionVerdict> out;
  for (const MembershipInput& m : memberships) {
    if (!m.wp_verified) continue;
    // The quasi-regularizability threshold for connected W_p members:
    // n >= (p+1)*alpha turns on the lambda = p criteria.
    if (n < (m.p + 1) * alpha) continue;
    const bool premises = connected && m.qr_lambda_p_verified;
    CriterionVerdict lc = log_concavity_criterion(m.p, Rational(m.p), n, alpha);
    lc.premises_verified = premises;
    out.push_back(std::move(lc));
    CriterionVerdict quad = quadratic_criterion(m.p, n, alpha);
    quad.premises_verified = premises;
    out.push_back(std::move(quad));
    if (alpha >= 2) {
      CriterionVerdict iv = interval_criterion(m.p, n, alpha);
      iv.premises_verified = premises;
      out.push_back(std::move(iv));
    }
    CriterionVerdict uni = unimodality_bounds(m.p, Rational(m.p), n, alpha);
    uni.premises_verified = premises;
    out.push_back(std::move(uni));
  }

  CriterionVerdict direct{.name = "direct", .n = n, .alpha = alpha};
  direct.direct_log_concave = is_log_concave(coeffs);
  direct.direct_unimodal = is_unimodal(coeffs);
  direct.fired = *direct.direct_log_concave;
  direct.premises_verified = true;  // the direct checks carry no premises
  out.push_back(std::move(direct));
  return out;
}

}  // namespace wpgraph
