#include "wpgraph/quasireg.hpp"

#include "wpgraph/enumeration.hpp"

namespace wpgraph {

namespace {

ExpansionWitness make_witness(const Graph& g, VertexSet a, const Rational& lambda) {
  const int nb = open_neighborhood(g, a).size();
  return {a, nb, Rational(lambda.num * a.size() - static_cast<long long>(lambda.den) * nb, lambda.den)};
}

}  // namespace

QuasiRegResult is_lambda_quasi_regularizable(const Graph& g, const Rational& lambda) {
  if (!lambda.positive()) throw Error(errc::bad_argument, "lambda must be positive");
  QuasiRegResult out;
  out.holds = true;
  enumerate_independent_sets(g, [&](VertexSet a) {
    if (a.empty()) return true;  // vacuous for the empty set
    const int nb = open_neighborhood(g, a).size();
    // lambda*|A| > |N(A)|  <=>  num*|A| > den*|N(A)|
    if (lambda.num * a.size() > static_cast<long long>(lambda.den) * nb) {
      out.holds = false;
      out.witness = make_witness(g, a, lambda);
      return false;
    }
    return true;
  });
  return out;
}

LocalExpansionReport verify_local_expansion(const Graph& g, bool connected_verified,
                                            bool w2_verified) {
  LocalExpansionReport out;
  if (!connected_verified) {
    out.premises = PremiseStatus::not_connected;
    return out;
  }
  if (!w2_verified) {
    out.premises = PremiseStatus::not_w2;
    return out;
  }
  const int alpha = independence_number(g);
  const Rational two(2);
  enumerate_independent_sets(g, [&](VertexSet a) {
    if (a.size() >= alpha) return true;
    const int nb = open_neighborhood(g, a).size();
    if (nb < 2 * a.size()) out.violations.push_back(make_witness(g, a, two));
    return true;  // diagnostic path scans everything
  });
  return out;
}

ThresholdReport check_threshold_equivalence(const Graph& g, bool connected_verified,
                                            bool w2_verified) {
  ThresholdReport out;
  if (!connected_verified) {
    out.premises = PremiseStatus::not_connected;
    return out;
  }
  if (!w2_verified) {
    out.premises = PremiseStatus::not_w2;
    return out;
  }
  const int alpha = independence_number(g);
  QuasiRegResult qr = is_lambda_quasi_regularizable(g, Rational(2));
  out.two_quasi_regularizable = qr.holds;
  out.order_at_least_3alpha = g.order() >= 3 * alpha;
  if (!qr.holds && !out.order_at_least_3alpha) out.witness = qr.witness;
  return out;
}

std::pair<Rational, ExpansionWitness> min_expansion_ratio(const Graph& g) {
  if (g.order() == 0) throw Error(errc::bad_argument, "no nonempty independent set");
  bool have = false;
  long long best_num = 0, best_den = 1;  // |N(A)| / |A|, unreduced
  VertexSet best_set;
  int best_nb = 0;
  enumerate_independent_sets(g, [&](VertexSet a) {
    if (a.empty()) return true;
    const int nb = open_neighborhood(g, a).size();
    // nb/|a| < best  <=>  nb*best_den < best_num*|a|
    if (!have || static_cast<long long>(nb) * best_den < best_num * a.size()) {
      have = true;
      best_num = nb;
      best_den = a.size();
      best_set = a;
      best_nb = nb;
    }
    return true;
  });
  Rational ratio(best_num, best_den);
  return {ratio, ExpansionWitness{best_set, best_nb, Rational(0)}};
}

}  // namespace wpgraph
