#include "posetlab/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "posetlab/generate.hpp"
#include "posetlab/grading.hpp"
#include "posetlab/io.hpp"
#include "posetlab/partition.hpp"
#include "posetlab/structure.hpp"

namespace posetlab {

using nlohmann::json;

json VerificationReport::to_json() const {
  json out;
  out["suite"] = suite;
  out["kind"] = kind;
  out["max_size"] = max_size;
  out["posets_examined"] = posets_examined;
  out["labelings_examined"] = labelings_examined;
  out["elapsed_seconds"] = elapsed_seconds;
  out["pass"] = pass();
  out["violations"] = json::array();
  for (const auto& v : violations) {
    out["violations"].push_back(
        {{"poset", json::parse(v.poset)}, {"theorem", v.theorem}, {"expected", v.expected}, {"actual", v.actual}});
  }
  return out;
}

namespace {

struct Outcome {
  std::size_t labelings = 0;
  std::vector<Violation> violations;

  void check(bool ok, const LabeledPoset& lp, const std::string& theorem, const std::string& expected,
             const std::string& actual) {
    if (!ok) violations.push_back({serialize(lp), theorem, expected, actual});
  }
};

using PosetCheck = std::function<Outcome(const Poset&, const SuiteBounds&)>;
using CustomRun = std::function<Outcome(const SuiteBounds&, std::size_t& examined)>;

struct Suite {
  std::string id;
  std::string kind;
  std::size_t default_max;
  PosetCheck per_poset;
  CustomRun custom;
};

std::string str(bool b) { return b ? "true" : "false"; }

std::vector<LabeledPoset> all_signs(const Poset& poset) { return labelings_for(poset, LabelingScope::AllEpsilon); }
std::vector<LabeledPoset> canonical(const Poset& poset) { return labelings_for(poset, LabelingScope::Canonical); }

long bound_or(const SuiteBounds& b, long fallback) { return b.partition_bound.value_or(fallback); }

/// W(lower rank) = t^k W(higher rank) with k half the rank difference.
bool shifted_w_agree(const IntPolynomial& w_eps, int r_eps, const IntPolynomial& w_mu, int r_mu) {
  const int k = (r_eps - r_mu) / 2;
  return k >= 0 ? w_mu == w_eps.shifted(static_cast<std::size_t>(k))
                : w_eps == w_mu.shifted(static_cast<std::size_t>(-k));
}

Outcome check_shift(const Poset& poset, const SuiteBounds& b) {
  Outcome out;
  std::vector<std::pair<LabeledPoset, int>> graded;
  for (auto& lp : all_signs(poset)) {
    ++out.labelings;
    const auto g = classify(lp);
    if (g.graded) graded.emplace_back(std::move(lp), *g.rank);
  }
  if (graded.empty()) return out;
  const auto& [ref, r_ref] = graded.front();
  const IntPolynomial w_ref = w_polynomial(ref);
  for (const auto& [lp, r] : graded) {
    out.check(grading_shift_check(lp, ref, static_cast<int>(bound_or(b, 2))), lp, "order polynomial shift",
              "Omega(eps;t) = Omega(mu;t+(r_eps-r_mu)/2) and xi bijective", "mismatch against " + serialize(ref));
    out.check(shifted_w_agree(w_polynomial(lp), r, w_ref, r_ref), lp, "W shift between gradings",
              "W differ by t^((r_eps-r_mu)/2)", "mismatch against " + serialize(ref));
  }
  return out;
}

Outcome check_reciprocity_graded(const Poset& poset, const SuiteBounds&) {
  Outcome out;
  for (const auto& lp : all_signs(poset)) {
    ++out.labelings;
    const auto g = classify(lp);
    if (!g.graded) continue;
    const auto verdict = reciprocity_verdict(lp);
    out.check(verdict.holds_at_r, lp, "reciprocity for graded labelings", "holds", "fails");
    const int d = static_cast<int>(poset.size()) - 1 - *g.rank;
    const IntPolynomial w = w_polynomial(lp);
    out.check(is_symmetric(w, d), lp, "W symmetry", "symmetric about " + std::to_string(d) + "/2", w.to_string());
  }
  return out;
}

Outcome check_parity(const Poset& poset, const SuiteBounds&) {
  Outcome out;
  bool some_consistent = false;
  bool some_graded = false;
  for (const auto& lp : all_signs(poset)) {
    ++out.labelings;
    const auto g = classify(lp);
    some_consistent = some_consistent || g.consistent;
    some_graded = some_graded || g.graded;
  }
  const auto parity = parity_classification(poset);
  const LabeledPoset natural(poset, EdgeSigns{std::vector<int>(poset.edge_count(), 1)});
  out.check(some_consistent == parity.parity_consistent, natural, "consistent labeling exists iff parity consistent",
            str(parity.parity_consistent), str(some_consistent));
  out.check(some_graded == parity.parity_graded, natural, "graded labeling exists iff parity graded",
            str(parity.parity_graded), str(some_graded));
  if (parity.parity_consistent) {
    const LabeledPoset witness(poset, *parity.witness);
    const auto g = classify(witness);
    const bool binary = g.consistent && std::all_of(g.rank_function->begin(), g.rank_function->end(),
                                                    [](int v) { return v == 0 || v == 1; });
    out.check(binary, witness, "parity witness", "consistent with ranks in {0,1}", "violated");
    out.check(g.graded == parity.parity_graded, witness, "parity witness graded iff parity graded",
              str(parity.parity_graded), str(g.graded));
    out.check(is_canonical(canonical_labeling(witness)), witness, "canonical labeling", "canonical", "not canonical");
  }
  return out;
}

std::set<Permutation> jordan_holder(const LabeledPoset& lp) {
  std::set<Permutation> out;
  JordanHolderStream stream(lp);
  while (auto pi = stream.next()) out.insert(std::move(*pi));
  return out;
}

Outcome check_saturated(const Poset& poset, const SuiteBounds&) {
  Outcome out;
  std::vector<LabeledPoset> inputs = canonical(poset);
  if (poset.size() <= 5) {
    for (auto& lp : all_signs(poset)) {
      if (rank_function(lp)) inputs.push_back(rank_sorted_omega(lp));
    }
  }
  for (const auto& lp : inputs) {
    ++out.labelings;
    const auto rho = *rank_function(lp);
    const auto first = saturated_decomposition(lp, SplitPolicy::LowestRankFirst);
    const auto second = saturated_decomposition(lp, SplitPolicy::HighestRankFirst);

    IntPolynomial sum;
    std::set<Permutation> merged;
    std::size_t total = 0;
    bool parts_ok = true;
    for (const auto& part : first.parts) {
      sum += w_polynomial(part);
      const auto jh = jordan_holder(part);
      total += jh.size();
      merged.insert(jh.begin(), jh.end());
      const auto part_rho = rank_function(part);
      parts_ok = parts_ok && part_rho && *part_rho == rho && is_saturated(part);
      for (std::size_t x = 0; x < poset.size(); ++x) {
        for (std::size_t y = 0; y < poset.size(); ++y) {
          if (lp.poset().less(x, y) && !part.poset().less(x, y)) parts_ok = false;
        }
      }
    }
    out.check(sum == w_polynomial(lp), lp, "W is the sum over saturated parts", w_polynomial(lp).to_string(),
              sum.to_string());
    out.check(total == merged.size() && merged == jordan_holder(lp), lp, "Jordan-Hoelder set is a disjoint union",
              "disjoint and exhaustive", "overlap or gap");
    out.check(parts_ok, lp, "parts are saturated extensions with the same rank function", "true", "false");

    std::vector<std::string> keys_a, keys_b;
    for (const auto& part : first.parts) keys_a.push_back(structure_key(part));
    for (const auto& part : second.parts) keys_b.push_back(structure_key(part));
    out.check(keys_a == keys_b, lp, "decomposition independent of split order",
              std::to_string(keys_a.size()) + " parts", std::to_string(keys_b.size()) + " parts");
  }
  return out;
}

Outcome check_antichain(const Poset& poset, const SuiteBounds&) {
  Outcome out;
  for (const auto& lp : canonical(poset)) {
    std::vector<LabeledPoset> targets;
    if (is_saturated(lp)) targets.push_back(lp);
    for (auto& part : saturated_decomposition(lp).parts) {
      if (!(part == lp)) targets.push_back(std::move(part));
    }
    for (const auto& target : targets) {
      ++out.labelings;
      const auto spec = antichain_decomposition(target);
      const LabeledPoset rebuilt = spec.reconstruct();
      bool alternating = true;
      for (std::size_t i = 0; i < spec.glue.size(); ++i) alternating = alternating && spec.glue[i] == (i % 2 == 0 ? 1 : -1);
      out.check(alternating, target, "glue alternates +1, -1, ...", "alternating", "not alternating");
      out.check(same_structure(rebuilt, target), target, "antichain decomposition round trip", serialize(target),
                serialize(rebuilt));
      out.check(w_polynomial(rebuilt) == w_polynomial(target), target, "round trip keeps W",
                w_polynomial(target).to_string(), w_polynomial(rebuilt).to_string());

      // A saturated part's W is t^(number of -1 glues) times Eulerian polynomials.
      IntPolynomial product = IntPolynomial::constant(BigInt(1));
      for (const auto& block : spec.blocks) product = product * eulerian(block.size());
      product = product.shifted(static_cast<std::size_t>(std::count(spec.glue.begin(), spec.glue.end(), -1)));
      const IntPolynomial w = w_polynomial(target);
      out.check(w == product, target, "saturated W is a product of Eulerian polynomials", product.to_string(),
                w.to_string());
      out.check(real_nonpositive_roots(w), target, "saturated W has real non-positive zeros", "true", "false");
    }
  }
  return out;
}

Outcome check_expansion(const Poset& poset, const SuiteBounds&) {
  Outcome out;
  for (const auto& lp : all_signs(poset)) {
    ++out.labelings;
    const auto g = classify(lp);
    if (!g.graded) continue;
    const int d = static_cast<int>(poset.size()) - 1 - *g.rank;
    const IntPolynomial w = w_polynomial(lp);
    if (!is_symmetric(w, d)) {
      out.check(false, lp, "W symmetric", "symmetric about " + std::to_string(d) + "/2", w.to_string());
      continue;
    }
    const auto expansion = symmetric_expand(w, d);
    std::string coefficients;
    for (const auto& a : expansion.a) coefficients += a.get_str() + " ";
    out.check(expansion.nonnegative(), lp, "non-negative symmetric expansion", "all a_i >= 0", coefficients);
    out.check(expansion.reconstruct() == w, lp, "expansion reconstructs W", w.to_string(),
              expansion.reconstruct().to_string());
    if (d % 2 == 0) {
      BigInt at_minus_one = w.evaluate(BigInt(-1));
      if ((d / 2) % 2 != 0) at_minus_one = -at_minus_one;
      out.check(at_minus_one >= 0, lp, "sign at -1", ">= 0", at_minus_one.get_str());
    }
  }
  return out;
}

Outcome check_unimodal(const Poset& poset, const SuiteBounds&) {
  Outcome out;
  for (const auto& lp : all_signs(poset)) {
    ++out.labelings;
    const auto rho = rank_function(lp);
    if (!rho) continue;
    int lo = std::numeric_limits<int>::max();
    int hi = std::numeric_limits<int>::min();
    for_each_bit(poset.maximal(), [&](std::size_t z) {
      lo = std::min(lo, (*rho)[z]);
      hi = std::max(hi, (*rho)[z]);
    });
    if (hi - lo > 1) continue;
    const IntPolynomial w = w_polynomial(lp);
    out.check(is_unimodal(w), lp, "unimodal W for near-graded labelings", "unimodal", w.to_string());
  }
  return out;
}

Outcome check_charney_davis(const Poset& poset, const SuiteBounds&) {
  Outcome out;
  for (const auto& lp : canonical(poset)) {
    if (!classify(lp).graded) continue;
    ++out.labelings;
    const BigInt cd = charney_davis(lp);
    const BigInt count = reverse_alternating_count(lp);
    out.check(cd == count, lp, "CD equals odd-component reverse alternating count", cd.get_str(), count.get_str());
  }
  return out;
}

Outcome check_rank_identity(const Poset& poset, const SuiteBounds&) {
  Outcome out;
  for (const auto& lp : all_signs(poset)) {
    ++out.labelings;
    if (!classify(lp).graded) continue;
    out.check(rank_identity_check(lp), lp, "2 e_{p-1} = (p+r-1) e_p and the W'(1)/W(1) identity", "true", "false");
    const EVector direct = e_vector_direct(lp);
    const EVector converted = to_e_vector(w_polynomial(lp), poset.size());
    const EVector ideals = e_vector_by_ideals(lp);
    out.check(direct == converted && direct == ideals, lp, "e-vector routes agree", "equal", "different");
  }
  return out;
}

Outcome check_phi(const Poset& poset, const SuiteBounds& b, bool literal) {
  Outcome out;
  for (const auto& lp : all_signs(poset)) {
    ++out.labelings;
    const bool dual = classify(lp).dual_consistent;
    for (long n = 0; n <= bound_or(b, 3); ++n) {
      const PhiTable table = phi_table(lp, n);
      const std::string at = " at n=" + std::to_string(n);
      out.check(table.injective && table.images_valid, lp, "Phi is an injection into A_{n+r}(-eps)" + at, "true",
                "false");
      if (literal) {
        out.check(table.bijective_onto_bound == dual, lp, "Phi onto A_{n+r}(-eps) iff dual consistent" + at,
                  str(dual), str(table.bijective_onto_bound));
      } else {
        out.check(table.every_target_has_preimage == dual, lp,
                  "every target has a preimage under Phi iff dual consistent" + at, str(dual),
                  str(table.every_target_has_preimage));
      }
    }
  }
  return out;
}

Outcome check_lambda(const Poset& poset, const SuiteBounds& b) {
  Outcome out;
  for (const auto& lp : all_signs(poset)) {
    ++out.labelings;
    const auto stats = delta_statistics(lp);
    bool bounded = true;
    for (std::size_t x = 0; x < poset.size(); ++x) bounded = bounded && stats.delta[x] + stats.delta_star[x] <= stats.r_max;
    out.check(bounded, lp, "delta + delta* <= r", "true", "false");
    const LabeledPoset opposite = negated(lp);
    for (long n = 0; n <= bound_or(b, 3); ++n) {
      // Phi*(sigma) = sigma + r - delta* is an injection into A_{n+r}(-eps).
      std::set<std::vector<int>> images;
      bool valid = true;
      std::size_t sources = 0;
      PartitionStream stream(lp, n);
      while (auto sigma = stream.next()) {
        ++sources;
        for (std::size_t x = 0; x < poset.size(); ++x) sigma->values[x] += stats.r_max - stats.delta_star[x];
        valid = valid && is_partition(opposite, sigma->values) &&
                *std::max_element(sigma->values.begin(), sigma->values.end()) <= n + stats.r_max;
        images.insert(sigma->values);
      }
      out.check(valid && images.size() == sources, lp, "Phi* is an injection at n=" + std::to_string(n), "true",
                "false");
      if (n == 0) continue;
      const BigInt here = count_partitions(lp, n);
      if (here == 0 || count_partitions(opposite, n + stats.r_max) != here) continue;
      out.check(stats.lambda_chain, lp, "equal counts force the lambda-chain condition at n=" + std::to_string(n),
                "lambda-chain", "no lambda-chain");
    }
  }
  return out;
}

Outcome check_characterization(const Poset& poset, const SuiteBounds&) {
  Outcome out;
  for (const auto& lp : all_signs(poset)) {
    ++out.labelings;
    const auto verdict = reciprocity_verdict(lp);
    out.check(verdict.consistent_with_theorem(), lp, "reciprocity at r holds iff graded", str(verdict.graded),
              str(verdict.holds_at_r));
    // Omega(-eps; t) = (-1)^p Omega(eps; -t) for every labeling induced by an omega.
    if (!realizing_omega(lp)) continue;
    RatPolynomial mirrored = order_polynomial(lp).as_polynomial().reflected();
    if (poset.size() % 2 == 1) mirrored = -mirrored;
    out.check(order_polynomial(negated(lp)).as_polynomial() == mirrored, lp, "reciprocity between eps and -eps",
              "identity", "mismatch");
  }
  return out;
}

Outcome check_shift_range(const Poset& poset, const SuiteBounds&) {
  Outcome out;
  for (const auto& lp : all_signs(poset)) {
    ++out.labelings;
    const LabeledPoset opposite = negated(lp);
    const int r = delta_statistics(lp).r_max;
    const int r_opp = delta_statistics(opposite).r_max;
    const bool graded = classify(lp).graded;
    const RatPolynomial mine = order_polynomial(lp).as_polynomial();
    const RatPolynomial theirs = order_polynomial(opposite).as_polynomial();
    for (int s = -r_opp - 2; s <= r + 2; ++s) {
      const bool holds = mine == theirs.translated(Rational(s));
      const std::string at = " at s=" + std::to_string(s);
      if (holds) {
        out.check(-r_opp <= s && s <= r, lp, "shift lies in [-r(-eps), r(eps)]" + at, "in range", "outside");
        if (s == r || s == -r_opp) out.check(graded, lp, "extreme shift forces graded" + at, "graded", "not graded");
      } else if (graded && s == r) {
        out.check(false, lp, "graded labelings attain the shift r" + at, "identity holds", "fails");
      }
    }
  }
  return out;
}

Outcome check_real_roots(const Poset& poset, const SuiteBounds&) {
  Outcome out;
  for (const auto& lp : all_signs(poset)) {
    if (!realizing_omega(lp)) continue;
    ++out.labelings;
    const IntPolynomial w = w_polynomial(lp);
    out.check(real_nonpositive_roots(w), lp, "W has only real non-positive zeros", "real-rooted", w.to_string());
  }
  return out;
}

Outcome check_oracle(const Poset& poset, const SuiteBounds& b) {
  Outcome out;
  for (const auto& lp : all_signs(poset)) {
    ++out.labelings;
    const OrderPolynomial omega = order_polynomial(lp);
    const RatPolynomial as_poly = omega.as_polynomial();
    for (long n = 0; n <= bound_or(b, 5); ++n) {
      const BigInt formula = omega(n);
      const BigInt counted = count_partitions(lp, n);
      const std::string at = " at n=" + std::to_string(n);
      out.check(formula == counted, lp, "binomial formula equals direct count" + at, counted.get_str(),
                formula.get_str());
      out.check(as_poly.evaluate(Rational(n)) == Rational(counted), lp, "polynomial form equals direct count" + at,
                counted.get_str(), as_poly.evaluate(Rational(n)).get_str());
      if (poset.size() <= 4) {
        std::size_t listed = 0;
        PartitionStream stream(lp, n);
        while (auto sigma = stream.next()) {
          ++listed;
          out.check(is_partition(lp, sigma->values), lp, "enumerated maps are partitions" + at, "valid", "invalid");
        }
        out.check(BigInt(static_cast<unsigned long>(listed)) == counted, lp, "enumeration size equals count" + at,
                  counted.get_str(), std::to_string(listed));
      }
    }
  }
  return out;
}

Outcome run_ordinal_sums(const SuiteBounds& b, std::size_t& examined) {
  Outcome out;
  std::mt19937_64 rng(b.seed);
  const std::size_t total_max = b.max_size.value_or(8);
  const std::size_t cases = b.random_count.value_or(200);
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };

  for (std::size_t k = 0; k < cases; ++k) {
    const std::size_t block_count = pick(2, std::min<std::size_t>(4, total_max));
    std::vector<std::size_t> sizes(block_count, 1);
    for (std::size_t extra = pick(0, total_max - block_count); extra > 0; --extra) ++sizes[pick(0, block_count - 1)];

    std::vector<LabeledPoset> blocks;
    for (std::size_t i = 0; i < block_count; ++i) {
      std::vector<std::string> names;
      for (std::size_t j = 0; j < sizes[i]; ++j) names.push_back("b" + std::to_string(i) + "_" + std::to_string(j));
      Omega omega;
      omega.labels.resize(sizes[i]);
      std::iota(omega.labels.begin(), omega.labels.end(), 1);
      std::shuffle(omega.labels.begin(), omega.labels.end(), rng);
      blocks.emplace_back(Poset::from_indexed(std::move(names), {}), std::move(omega));
    }
    std::vector<int> glue;
    for (std::size_t i = 0; i + 1 < block_count; ++i) glue.push_back(pick(0, 1) == 0 ? 1 : -1);

    ++examined;
    ++out.labelings;
    LabeledPoset acc = blocks.front();
    IntPolynomial product = w_polynomial(acc);
    for (std::size_t i = 1; i < block_count; ++i) {
      out.check(ordinal_sum_w_check(acc, blocks[i], glue[i - 1]), acc, "ordinal sum product law",
                "W(P+Q) = t^[sign=-1] W(P) W(Q)", "mismatch with block " + std::to_string(i));
      acc = ordinal_sum(acc, blocks[i], glue[i - 1]);
      product = product * w_polynomial(blocks[i]);
      if (glue[i - 1] == -1) product = product.shifted(1);
    }
    out.check(w_polynomial(acc) == product, acc, "W of a composition is the product", product.to_string(),
              w_polynomial(acc).to_string());
    if (block_count >= 3) {
      const LabeledPoset left = ordinal_sum(ordinal_sum(blocks[0], blocks[1], glue[0]), blocks[2], glue[1]);
      const LabeledPoset right = ordinal_sum(blocks[0], ordinal_sum(blocks[1], blocks[2], glue[1]), glue[0]);
      out.check(same_structure(left, right), left, "ordinal sums are associative", serialize(left), serialize(right));
    }
  }
  return out;
}

Outcome run_eulerian(const SuiteBounds& b, std::size_t& examined) {
  Outcome out;
  const std::size_t top = b.max_size.value_or(8);
  for (std::size_t n = 1; n <= top; ++n) {
    ++examined;
    ++out.labelings;
    std::vector<BigInt> counts(n, BigInt(0));
    Permutation pi(n);
    std::iota(pi.begin(), pi.end(), 1);
    do {
      std::size_t des = 0;
      for (std::size_t i = 0; i + 1 < n; ++i) des += pi[i] > pi[i + 1] ? 1 : 0;
      counts[des] += 1;
    } while (std::next_permutation(pi.begin(), pi.end()));
    const IntPolynomial scanned(std::move(counts));
    const IntPolynomial a = eulerian(n);
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    const LabeledPoset antichain(Poset::from_indexed(names, {}), EdgeSigns{});
    out.check(a == scanned, antichain, "Eulerian polynomial by recurrence equals descent scan", scanned.to_string(),
              a.to_string());
    out.check(symmetric_expand(a, static_cast<int>(n) - 1).nonnegative(), antichain,
              "Eulerian symmetric expansion non-negative", "all a_i >= 0", "negative coefficient");
    if (n <= 7) out.check(eulerian_cd_check(n), antichain, "Eulerian value at -1 counts alternating permutations",
                          "true", "false");
  }
  return out;
}

const std::vector<Suite>& registry() {
  using namespace std::placeholders;
  static const std::vector<Suite> suites = {
      {"T2.2", "theorem", 6, check_shift, {}},
      {"T2.3", "theorem", 6, check_reciprocity_graded, {}},
      {"T2.5", "theorem", 6, check_parity, {}},
      {"T3.2", "theorem", 7, check_saturated, {}},
      {"P3.4", "theorem", 8, {}, run_ordinal_sums},
      {"P3.5", "theorem", 7, check_antichain, {}},
      {"T4.2", "theorem", 6, check_expansion, {}},
      {"T4.5", "theorem", 6, check_unimodal, {}},
      {"T5.2", "theorem", 7, check_charney_davis, {}},
      {"P6.2", "theorem", 6, check_rank_identity, {}},
      {"P7.1", "theorem", 5, [](const Poset& p, const SuiteBounds& b) { return check_phi(p, b, false); }, {}},
      {"P7.1-bounded", "literal", 5, [](const Poset& p, const SuiteBounds& b) { return check_phi(p, b, true); }, {}},
      {"L7.2", "theorem", 5, check_lambda, {}},
      {"T7.3", "theorem", 5, check_characterization, {}},
      {"C7.4", "theorem", 5, check_shift_range, {}},
      {"NS", "conjecture", 6, check_real_roots, {}},
      {"ORACLE", "oracle", 6, check_oracle, {}},
      {"EULERIAN", "oracle", 8, {}, run_eulerian},
  };
  return suites;
}

std::vector<Poset> corpus(std::size_t max_size, const SuiteBounds& b) {
  std::vector<Poset> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    auto level = b.random_count ? random_posets(n, b.seed + n, *b.random_count) : exhaustive_posets(n);
    std::move(level.begin(), level.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& s : registry()) out.push_back(s.id);
    return out;
  }();
  return ids;
}

VerificationReport run_suite(const std::string& suite, const SuiteBounds& bounds) {
  const auto& suites = registry();
  const auto it = std::find_if(suites.begin(), suites.end(), [&](const Suite& s) { return s.id == suite; });
  if (it == suites.end()) throw Error(ErrorCode::UnknownSuite, "unknown suite " + suite);

  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = it->id;
  report.kind = it->kind;
  report.max_size = bounds.max_size.value_or(it->default_max);

  if (it->custom) {
    Outcome out = it->custom(bounds, report.posets_examined);
    report.labelings_examined = out.labelings;
    report.violations = std::move(out.violations);
  } else {
    const std::vector<Poset> posets = corpus(report.max_size, bounds);
    std::vector<Outcome> outcomes(posets.size());
    std::atomic<std::size_t> next{0};
    std::size_t workers = bounds.threads != 0 ? bounds.threads : std::max(1U, std::thread::hardware_concurrency());
    workers = std::min(workers, std::max<std::size_t>(1, posets.size()));
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = next++; i < posets.size(); i = next++) outcomes[i] = it->per_poset(posets[i], bounds);
          } catch (...) {
            errors[w] = std::current_exception();
            next = posets.size();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    report.posets_examined = posets.size();
    for (auto& out : outcomes) {
      report.labelings_examined += out.labelings;
      std::move(out.violations.begin(), out.violations.end(), std::back_inserter(report.violations));
    }
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace posetlab
