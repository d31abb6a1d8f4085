#include "monocurve/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace monocurve {

json order_to_json(const OrderSpec& o) {
  json j;
  j["smallest_first"] = o.smallest_first;
  j["homogenized"] = o.homogenized;
  if (!o.degree_weights.empty()) j["degree_weights"] = o.degree_weights;
  return j;
}

json basis_to_json(const GroebnerBasis& g) {
  json arr = json::array();
  for (const auto& f : g.elements) {
    json e;
    e["lead"] = to_string(f.lead, g.order.homogenized);
    e["tail"] = f.tail ? json(to_string(*f.tail, g.order.homogenized)) : json(nullptr);
    arr.push_back(std::move(e));
  }
  json j;
  j["order"] = order_to_json(g.order);
  j["reduced"] = g.reduced;
  j["elements"] = std::move(arr);
  return j;
}

json report_to_json(const AcmReport& r) {
  json j;
  j["sequence"] = r.sequence.entries();
  j["verdict"] = r.verdict;
  json c;
  c["d"] = r.criteria.d;
  c["e"] = r.criteria.e;
  c["f"] = r.criteria.f;
  c["g"] = r.criteria.g;
  c["duality_b"] = r.criteria.duality_b;
  c["duality_c"] = r.criteria.duality_c;
  c["apery_b"] = r.criteria.apery_b;
  c["apery_c"] = r.criteria.apery_c;
  c["apery_d"] = r.criteria.apery_d;
  c["cn"] = r.criteria.cn;
  j["criteria"] = std::move(c);
  j["witness"] = r.witness ? json(to_string(*r.witness)) : json(nullptr);
  j["mu_ini"] = r.mu_ini;
  j["bound_binom"] = r.bound_binom;
  return j;
}

json family_to_json(const FamilyInstance& inst, const AcmReport& r) {
  json j;
  j["family"] = inst.name;
  j["parameter"] = inst.parameter;
  if (inst.normalization != 1) j["normalization"] = inst.normalization;
  json rep = report_to_json(r);
  for (auto& [k, v] : rep.items()) j[k] = v;
  return j;
}

json gb_fragment_json(const Sequence& a, const GroebnerBasis& g,
                      std::optional<std::int64_t> std_count) {
  json j;
  j["sequence"] = a.entries();
  json gb = json::array();
  for (const auto& f : g.elements) {
    json e;
    e["lead"] = to_string(f.lead, g.order.homogenized);
    e["tail"] = f.tail ? json(to_string(*f.tail, g.order.homogenized)) : json(nullptr);
    gb.push_back(std::move(e));
  }
  j["order"] = order_to_json(g.order);
  j["gb"] = std::move(gb);
  json ini = json::array();
  for (const auto& f : g.elements) ini.push_back(to_string(f.lead, g.order.homogenized));
  j["ini_gens"] = std::move(ini);
  j["std_monomials_count"] = std_count ? json(*std_count) : json(nullptr);
  return j;
}

std::string apery_tsv(const Sequence& a, const AperyTable& t) {
  std::vector<std::int64_t> ap_dual = apery_set(dual(a));
  std::sort(ap_dual.begin(), ap_dual.end());
  std::ostringstream out;
  out << "residue\tnu\tmu\tphi\tdual_deg\tin_dual_apery\n";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const AperyRow& r = t.rows[i];
    bool in_dual = std::binary_search(ap_dual.begin(), ap_dual.end(), r.dual_deg);
    out << i << "\t" << r.nu << "\t" << r.mu << "\t" << to_string(r.phi) << "\t" << r.dual_deg
        << "\t" << (in_dual ? "true" : "false") << "\n";
  }
  return out.str();
}

json apery_json(const Sequence& a, const AperyTable& t) {
  std::vector<std::int64_t> ap_dual = apery_set(dual(a));
  std::sort(ap_dual.begin(), ap_dual.end());
  json rows = json::array();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const AperyRow& r = t.rows[i];
    json row;
    row["residue"] = i;
    row["nu"] = r.nu;
    row["mu"] = r.mu;
    row["phi"] = to_string(r.phi);
    row["dual_deg"] = r.dual_deg;
    row["in_dual_apery"] = std::binary_search(ap_dual.begin(), ap_dual.end(), r.dual_deg);
    rows.push_back(std::move(row));
  }
  json j;
  j["sequence"] = a.entries();
  j["modulus"] = t.modulus;
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace monocurve
