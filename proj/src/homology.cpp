#include "flagslice/homology.hpp"

#include "flagslice/slmh.hpp"
#include "flagslice/slnr.hpp"
#include "flagslice/supq.hpp"

namespace flagslice {

std::string to_string(RealForm form) {
  switch (form) {
    case RealForm::slnr: return "slnr";
    case RealForm::slmh: return "slmh";
    case RealForm::supq: return "supq";
  }
  return "";
}

RealForm parse_real_form(const std::string& text) {
  if (text == "slnr") return RealForm::slnr;
  if (text == "slmh") return RealForm::slmh;
  if (text == "supq") return RealForm::supq;
  throw InvalidArgument("unknown real form '" + text + "' (expected slnr, slmh or supq)");
}

nlohmann::json HomologyExpansion::to_json() const {
  nlohmann::json names = nlohmann::json::array();
  for (const auto& w : classes) names.push_back(to_string(w));
  return {{"coefficient", coefficient}, {"classes", names}, {"context", context}};
}

namespace {

std::uint64_t slnr_coefficient(const DimensionSequence& d) {
  const int n = d.n(), m = n / 2;
  if (d.is_full()) return std::uint64_t{1} << (n % 2 ? m : m - 1);
  if (classify_symmetry(d).symmetric()) return intersection_count_measurable(d);
  // The lift to the measurable model is bijective on intersection points.
  return slnr_coefficient(measurable_model(d).dhat);
}

}  // namespace

HomologyExpansion base_cycle_class(RealForm form, const FormParams& params,
                                   const std::optional<DimensionSequence>& d,
                                   const std::optional<OrbitDescriptor>& orbit) {
  HomologyExpansion out;
  out.context["form"] = to_string(form);
  switch (form) {
    case RealForm::slnr: {
      const auto dims = d.value_or(DimensionSequence::full(params.n));
      if (dims.n() != params.n) throw InvalidArgument("dimension sequence does not sum to n");
      if (params.n < 2) throw InvalidArgument("SL(n,R) needs n >= 2");
      out.coefficient = slnr_coefficient(dims);
      out.classes = enumerate_slnr(dims);
      out.context["n"] = params.n;
      out.context["dims"] = to_string(dims);
      break;
    }
    case RealForm::slmh: {
      const auto dims = d.value_or(DimensionSequence::full(params.n));
      if (dims.n() != params.n) throw InvalidArgument("dimension sequence does not sum to n");
      out.coefficient = 1;
      out.classes = enumerate_slmh(dims);
      out.context["n"] = params.n;
      out.context["dims"] = to_string(dims);
      break;
    }
    case RealForm::supq: {
      if (!orbit) throw InvalidArgument("SU(p,q) base cycle needs an orbit");
      if (orbit->p != params.p || orbit->q != params.q)
        throw InvalidArgument("orbit does not match (p,q)");
      if (d && *d != orbit->dims())
        throw InvalidArgument("dimension sequence does not match the orbit blocks");
      const auto dims = orbit->dims();
      out.coefficient = 1;
      std::vector<OrbitVariety> varieties = dims.is_full()
                                                ? enumerate_for_orbit(sign_sequence_of(*orbit))
                                                : enumerate_for_orbit_gp(*orbit);
      for (auto& v : varieties) out.classes.push_back(v.w);
      out.context["p"] = params.p;
      out.context["q"] = params.q;
      out.context["dims"] = to_string(dims);
      out.context["orbit"] = sign_sequence_of(*orbit).to_string();
      break;
    }
  }
  return out;
}

HomologyExpansion total_cycle_class_su(int p, int q) {
  HomologyExpansion out;
  out.coefficient = std::uint64_t{1} << q;
  out.classes = enumerate_I_pq(p, q);
  out.context = {{"form", "supq"}, {"p", p}, {"q", q}, {"cycle", "total"}};
  return out;
}

}  // namespace flagslice
