#include "wpgraph/report.hpp"

#include <sstream>

namespace wpgraph {

const char* check_outcome_label(CheckOutcome o) {
  switch (o) {
    case CheckOutcome::pass: return "pass";
    case CheckOutcome::fail: return "fail";
    case CheckOutcome::not_applicable: return "not-applicable";
    case CheckOutcome::cap_exceeded: return "cap-exceeded";
  }
  return "?";
}

namespace {

Json vertex_set_json(VertexSet s) {
  Json arr = Json::array();
  for (int v : s.to_vector()) arr.push_back(v + 1);
  return arr;
}

Json tuple_json(const std::vector<VertexSet>& sets) {
  Json arr = Json::array();
  for (VertexSet s : sets) arr.push_back(vertex_set_json(s));
  return arr;
}

Json bigint_json(const BigInt& v) {
  // Every coefficient of a graph on at most 62 vertices fits in 63 bits;
  // fall back to a decimal string if a caller ever feeds something larger.
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return Json(v.convert_to<long long>());
  return Json(v.str());
}

Json rational_json(const Rational& r) {
  if (r.is_integer()) return Json(r.num);
  return Json(r.str());
}

const char* wp_status_label(WpStatus s) {
  switch (s) {
    case WpStatus::member: return "member";
    case WpStatus::non_member: return "non-member";
    case WpStatus::cap_exceeded: return "cap-exceeded";
  }
  return "?";
}

const char* chain_label(const ChainResult& c) {
  switch (c.status) {
    case ChainResult::Status::pass: return "pass";
    case ChainResult::Status::fail: return "fail";
    case ChainResult::Status::premise_not_met: return "not-applicable";
  }
  return "?";
}

Json criterion_json(const CriterionVerdict& c) {
  Json j;
  j["name"] = c.name;
  if (c.name != "direct") {
    j["p"] = c.p;
    j["lambda"] = c.lambda.str();
  }
  j["n"] = c.n;
  j["alpha"] = c.alpha;
  j["fired"] = c.fired;
  j["premises_verified"] = c.premises_verified;
  if (!c.per_k.empty()) {
    Json per = Json::array();
    for (const auto& [k, value] : c.per_k) per.push_back(Json::array({k, rational_json(value)}));
    j["per_k"] = per;
  }
  if (c.bound_l) j["L"] = *c.bound_l;
  if (c.bound_r) j["R"] = *c.bound_r;
  if (c.direct_log_concave) j["log_concave"] = *c.direct_log_concave;
  if (c.direct_unimodal) j["unimodal"] = *c.direct_unimodal;
  return j;
}

}  // namespace

Json report_to_json(const ClassificationReport& r) {
  Json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["alpha"] = r.alpha;
  j["connected"] = r.connected;
  Json poly = Json::array();
  for (const BigInt& c : r.polynomial) poly.push_back(bigint_json(c));
  j["polynomial"] = poly;

  Json wp = Json::object();
  for (const WpEntry& e : r.wp) {
    Json entry;
    entry["status"] = wp_status_label(e.status);
    entry["method"] = e.method;
    if (!e.failing_tuple.empty()) entry["failing_tuple"] = tuple_json(e.failing_tuple);
    if (!e.extension.empty()) entry["extension"] = tuple_json(e.extension);
    wp[std::to_string(e.p)] = std::move(entry);
  }
  j["wp"] = std::move(wp);

  Json qr = Json::object();
  for (const QuasiRegEntry& e : r.quasireg) {
    Json entry;
    entry["holds"] = e.holds;
    if (e.witness) {
      entry["witness"] = vertex_set_json(e.witness->set);
      entry["neighborhood_size"] = e.witness->neighborhood_size;
      entry["deficiency"] = e.witness->deficiency.str();
    }
    qr[e.lambda.str()] = std::move(entry);
  }
  j["quasireg"] = std::move(qr);

  j["local_expansion"] = check_outcome_label(r.local_expansion);
  j["threshold_equivalence"] = check_outcome_label(r.threshold_equivalence);

  Json crits = Json::array();
  for (const CriterionVerdict& c : r.criteria) crits.push_back(criterion_json(c));
  j["criteria"] = std::move(crits);

  j["direct"] = Json{{"log_concave", r.direct_log_concave}, {"unimodal", r.direct_unimodal}};

  Json audits;
  audits["w2_facts"] = check_outcome_label(r.audits.w2_facts);
  if (!r.audits.w2_facts_witness.empty()) audits["w2_facts_witness"] = r.audits.w2_facts_witness;
  Json chain_i = Json::object();
  for (const auto& [lambda, res] : r.audits.chain_i) chain_i[lambda.str()] = chain_label(res);
  audits["chain_i"] = std::move(chain_i);
  Json chain_ii = Json::object();
  for (const auto& [p, res] : r.audits.chain_ii) chain_ii[std::to_string(p)] = chain_label(res);
  audits["chain_ii"] = std::move(chain_ii);
  audits["w2_cross_check"] = check_outcome_label(r.audits.w2_cross_check);
  j["audits"] = std::move(audits);
  return j;
}

std::string report_to_jsonl(const ClassificationReport& r) { return report_to_json(r).dump(); }

std::string format_vertex_list(VertexSet s, std::size_t limit) {
  const std::vector<int> vs = s.to_vector();
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i == limit) {
      out += ", ... (+" + std::to_string(vs.size() - limit) + ")";
      break;
    }
    if (i) out += ", ";
    out += std::to_string(vs[i] + 1);
  }
  return out + "}";
}

namespace {

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s + " ";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string wp_cell(const WpEntry& e) {
  switch (e.status) {
    case WpStatus::member: return "yes";
    case WpStatus::non_member: return "no";
    case WpStatus::cap_exceeded: return "cap";
  }
  return "?";
}

std::string outcome_cell(CheckOutcome o) {
  switch (o) {
    case CheckOutcome::pass: return "pass";
    case CheckOutcome::fail: return "FAIL";
    case CheckOutcome::not_applicable: return "-";
    case CheckOutcome::cap_exceeded: return "cap";
  }
  return "?";
}

}  // namespace

std::string sweep_table_header(const std::vector<Rational>& lambdas, const std::vector<int>& ps) {
  std::string out = pad("graph6", 14) + pad("n", 2) + pad("alpha", 5) + pad("conn", 4);
  for (int p : ps) out += pad("W" + std::to_string(p), 4);
  for (const Rational& l : lambdas) out += pad("QR(" + l.str() + ")", 7);
  out += pad("locexp", 6) + pad("thresh", 6) + pad("LC", 3) + pad("uni", 3);
  return out;
}

std::string sweep_table_row(const ClassificationReport& r) {
  std::string out = pad(r.graph6, 14) + pad(std::to_string(r.n), 2) +
                    pad(std::to_string(r.alpha), 5) + pad(yes_no(r.connected), 4);
  for (const WpEntry& e : r.wp) out += pad(wp_cell(e), 4);
  for (const QuasiRegEntry& e : r.quasireg) out += pad(yes_no(e.holds), 7);
  out += pad(outcome_cell(r.local_expansion), 6) + pad(outcome_cell(r.threshold_equivalence), 6) +
         pad(yes_no(r.direct_log_concave), 3) + pad(yes_no(r.direct_unimodal), 3);
  return out;
}

std::string analyze_detail(const ClassificationReport& r) {
  std::ostringstream out;
  out << "graph6: " << r.graph6 << "\n";
  out << "n: " << r.n << "  alpha: " << r.alpha << "  connected: " << yes_no(r.connected) << "\n";
  out << "polynomial:";
  for (const BigInt& c : r.polynomial) out << " " << c.str();
  out << "\n";
  for (const WpEntry& e : r.wp) {
    out << "W_" << e.p << ": " << wp_status_label(e.status) << " (" << e.method << ")";
    if (!e.failing_tuple.empty()) {
      out << ", failing tuple:";
      for (VertexSet s : e.failing_tuple) out << " " << format_vertex_list(s);
    }
    if (!e.extension.empty()) {
      out << ", extension:";
      for (VertexSet s : e.extension) out << " " << format_vertex_list(s);
    }
    out << "\n";
  }
  for (const QuasiRegEntry& e : r.quasireg) {
    out << "quasi-regularizable(lambda=" << e.lambda.str() << "): " << yes_no(e.holds);
    if (e.witness)
      out << ", witness " << format_vertex_list(e.witness->set) << " with |N|="
          << e.witness->neighborhood_size << " (deficiency " << e.witness->deficiency.str() << ")";
    out << "\n";
  }
  out << "n >= 3*alpha: " << yes_no(r.n >= 3 * r.alpha) << "\n";
  out << "local expansion: " << check_outcome_label(r.local_expansion) << "\n";
  out << "threshold equivalence: " << check_outcome_label(r.threshold_equivalence) << "\n";
  for (const CriterionVerdict& c : r.criteria) {
    out << "criterion " << c.name;
    if (c.name != "direct") out << " (p=" << c.p << ", lambda=" << c.lambda.str() << ")";
    out << ": " << (c.fired ? "fired" : "not fired");
    if (c.bound_l) out << ", L=" << *c.bound_l << ", R=" << *c.bound_r;
    if (!c.per_k.empty()) {
      out << ", values";
      for (const auto& [k, value] : c.per_k) out << " k=" << k << ":" << value.str();
    }
    out << (c.premises_verified ? " [premises verified]" : " [premises asserted]") << "\n";
  }
  out << "direct: log-concave " << yes_no(r.direct_log_concave) << ", unimodal "
      << yes_no(r.direct_unimodal) << "\n";
  out << "audits: w2-facts " << check_outcome_label(r.audits.w2_facts);
  if (!r.audits.w2_facts_witness.empty()) out << " (" << r.audits.w2_facts_witness << ")";
  for (const auto& [lambda, res] : r.audits.chain_i)
    out << ", chain-i(" << lambda.str() << ") " << chain_label(res);
  for (const auto& [p, res] : r.audits.chain_ii)
    out << ", chain-ii(p=" << p << ") " << chain_label(res);
  out << ", w2-cross-check " << check_outcome_label(r.audits.w2_cross_check) << "\n";
  return out.str();
}

}  // namespace wpgraph
