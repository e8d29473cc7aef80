#include "posetlab/analyze.hpp"

#include "posetlab/grading.hpp"
#include "posetlab/io.hpp"
#include "posetlab/partition.hpp"
#include "posetlab/structure.hpp"

namespace posetlab {

using nlohmann::json;

namespace {

json named_values(const Poset& poset, const std::vector<int>& values) {
  json out = json::object();
  for (std::size_t x = 0; x < poset.size(); ++x) out[poset.name(x)] = values[x];
  return out;
}

}  // namespace

json analyze(const LabeledPoset& lp) {
  const Poset& poset = lp.poset();
  const std::size_t p = poset.size();
  const auto grading = classify(lp);
  const auto parity = parity_classification(poset);
  const auto stats = delta_statistics(lp);
  const IntPolynomial w = w_polynomial(lp);
  const OrderPolynomial omega(w, p);

  json report;
  report["poset"] = poset_file_json(lp);
  report["size"] = p;
  report["cover_count"] = poset.edge_count();

  json g;
  g["consistent"] = grading.consistent;
  g["graded"] = grading.graded;
  g["dual_consistent"] = grading.dual_consistent;
  g["rank"] = grading.rank ? json(*grading.rank) : json(nullptr);
  g["rank_function"] = grading.rank_function ? named_values(poset, *grading.rank_function) : json(nullptr);
  g["parity_consistent"] = parity.parity_consistent;
  g["parity_graded"] = parity.parity_graded;
  g["r_max"] = stats.r_max;
  g["lambda_chain"] = stats.lambda_chain;
  report["grading"] = g;

  report["w_polynomial"] = {{"coefficients", polynomial_json(w)}, {"text", w.to_string()}};

  json values = json::array();
  for (long n = 0; n <= 5; ++n) values.push_back(bigint_json(omega(n)));
  report["order_polynomial"] = {{"basis_coefficients", polynomial_json(w)}, {"values", values},
                                {"text", omega.as_polynomial().to_string()}};

  report["symmetric_expansion"] = nullptr;
  report["charney_davis"] = nullptr;
  if (grading.graded) {
    const int d = static_cast<int>(p) - 1 - *grading.rank;
    const auto expansion = symmetric_expand(w, d);
    json a = json::array();
    for (const auto& c : expansion.a) a.push_back(bigint_json(c));
    report["symmetric_expansion"] = {{"d", d}, {"a", a}, {"nonnegative", expansion.nonnegative()}};

    const LabeledPoset canonical = canonical_labeling(lp);
    report["charney_davis"] = {{"value", bigint_json(charney_davis(lp))},
                               {"reverse_alternating_count", bigint_json(reverse_alternating_count(canonical))}};
  }

  json e = json::array();
  for (const auto& c : to_e_vector(w, p).e) e.push_back(bigint_json(c));
  report["e_vector"] = e;

  report["saturated_decomposition"] = nullptr;
  if (grading.consistent) {
    const auto decomposition = saturated_decomposition(lp);
    json parts = json::array();
    for (const auto& part : decomposition.parts) {
      parts.push_back({{"covers", poset_file_json(part.poset())["covers"]},
                       {"w_polynomial", polynomial_json(w_polynomial(part))}});
    }
    report["saturated_decomposition"] = {{"part_count", decomposition.parts.size()}, {"parts", parts}};
  }

  report["real_nonpositive_roots"] = real_nonpositive_roots(w);
  report["unimodal"] = is_unimodal(w);
  report["mode"] = mode(w).get_str();
  return report;
}

}  // namespace posetlab
