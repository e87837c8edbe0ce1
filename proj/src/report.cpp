#include "constamax/report.hpp"

namespace constamax {

Json field_json(const Field& f) {
  return Json{{"p", f.characteristic()}, {"e", f.degree()}, {"q", f.size()}, {"modulus", f.modulus()},
              {"generator", f.generator()}};
}

Json profile_json(const CosetProfile& p) {
  return Json{{"q", p.q},   {"r", p.r}, {"n", p.n}, {"cofactor", p.cofactor},
              {"rn", p.rn}, {"lemma", to_string(p.tag)}};
}

Json partition_json(const CosetPartition& part) {
  Json cosets = Json::array();
  for (const auto& c : part.cosets)
    cosets.push_back(Json{{"representative", c.representative}, {"elements", c.elements}});
  return Json{{"profile", profile_json(part.profile)}, {"cosets", cosets}, {"count", part.cosets.size()}};
}

Json code_json(const ConstacyclicCode& code) {
  const auto& base = *code.base();
  const auto& p = code.profile();
  const uint32_t alpha = code.tower->alpha();
  return Json{{"p", base.characteristic()},
              {"e", base.degree()},
              {"modulus", base.modulus()},
              {"r", p.r},
              {"n", p.n},
              {"k", code.dim},
              {"alpha_power", alpha == 0 ? 0 : base.log(alpha)},
              {"defining_set", code.defining_set},
              {"parity_exponents", code.parity_exponents},
              {"generator_coeffs", code.generator.coeffs()},
              {"designed_distance", code.designed_distance},
              {"run", Json{{"start", code.run.start}, {"length", code.run.length}}},
              {"family_tag", to_string(code.family)},
              {"index", code.index}};
}

Json certificate_json(const DistanceCertificate& c) {
  Json j{{"method", to_string(c.method)},
         {"decided", c.decided},
         {"exact", c.exact()},
         {"lower", c.lower},
         {"upper", c.upper},
         {"mds", c.mds},
         {"work", c.work}};
  if (!c.witness_columns.empty()) j["witness_columns"] = c.witness_columns;
  if (!c.witness_word.empty()) j["witness_word"] = c.witness_word;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

std::string conv_display(const ConvTuple& t) {
  std::string df = t.df_lower == t.df_upper ? std::to_string(t.df_lower)
                                            : std::to_string(t.df_lower) + ".." + std::to_string(t.df_upper);
  return "(" + std::to_string(t.n) + ", " + std::to_string(t.k) + ", " + std::to_string(t.gamma) + "; " +
         std::to_string(t.memory) + ", " + df + ")";
}

std::string block_display(uint64_t n, uint64_t k, const DistanceCertificate& d) {
  const std::string ds = d.exact() ? std::to_string(d.value())
                                   : ">= " + std::to_string(d.lower);
  return "[" + std::to_string(n) + ", " + std::to_string(k) + ", " + ds + "]";
}

Json conv_json(const ConvCode& cc) {
  const auto& t = cc.dual;
  const auto& cl = cc.claim;
  Json claim{{"n", cl.n},     {"k", cl.k},   {"gamma", cl.gamma}, {"memory", cl.memory},
             {"df", cl.df},   {"df_is_lower_bound", cl.df_is_lower_bound}, {"max_defect", cl.max_defect}};
  Json dual{{"n", t.n},
            {"k", t.k},
            {"gamma", t.gamma},
            {"memory", t.memory},
            {"df_lo", t.df_lower},
            {"df_hi", t.df_upper},
            {"display", conv_display(t)}};
  return Json{{"family", to_string(cc.family)},
              {"index", cc.index},
              {"c1", cc.c1},
              {"c2", cc.c2},
              {"codes", Json{{"C2", code_json(cc.full)}, {"C1", code_json(cc.top)}, {"C0", code_json(cc.bottom)}}},
              {"row_counts", cc.row_counts},
              {"G", cc.G.entries()},
              {"kappa", cc.kappa},
              {"v_degree", cc.v_degree},
              {"rank_conditions", cc.rank_conditions},
              {"reduced_basic", cc.reduced_basic},
              {"dual_minimal_indices", cc.dual_indices.nu},
              {"distances", Json{{"d_full", certificate_json(cc.d_full)},
                                 {"d_top", certificate_json(cc.d_top)},
                                 {"d_bottom", certificate_json(cc.d_bottom)}}},
              {"singleton", cc.singleton},
              {"dual", dual},
              {"mds", cc.mds},
              {"defect", cc.defect},
              {"claim", claim}};
}

Json aqecc_json(const AqeccRecord& rec) {
  Json j{{"family", to_string(rec.family)},
         {"i", rec.i},
         {"j", rec.j},
         {"n", rec.n},
         {"k", rec.k},
         {"k1", rec.k1},
         {"k2", rec.k2},
         {"containment", rec.containment},
         {"C1", code_json(rec.C1)},
         {"C2perp", code_json(rec.C2perp)},
         {"claim", Json{{"n", rec.claim.n}, {"k", rec.claim.k}, {"dx", rec.claim.dx}, {"dz", rec.claim.dz},
                        {"display", rec.claim.display()}}},
         {"derived", rec.derived}};
  if (rec.derived) {
    j["classical"] = Json{{"d_C1", certificate_json(rec.d_C1)},
                          {"d_C2", certificate_json(rec.d_C2)},
                          {"d_C1perp", certificate_json(rec.d_C1perp)},
                          {"d_C2perp", certificate_json(rec.d_C2perp)}};
    j["dz"] = certificate_json(rec.dz);
    j["dx"] = certificate_json(rec.dx);
    j["gap_certified"] = rec.gap_certified;
    j["purity"] = to_string(rec.purity);
    j["pure"] = rec.pure;
    j["mds"] = rec.mds;
    j["defect"] = rec.defect;
    j["display"] = rec.display();
  }
  return j;
}

}  // namespace constamax
