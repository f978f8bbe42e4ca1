#include "diffeocert/certify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace diffeocert {
namespace {

CircuitWitness make_witness(const CircuitNumber& theta, const Rational& weight,
                            const std::string& inequality, bool satisfied) {
  CircuitWitness w;
  w.alpha_star = theta.decomposition.alpha_star;
  w.support = theta.decomposition.support;
  w.lambdas = theta.decomposition.lambdas;
  w.power_exponent = theta.power_exponent;
  w.power_form = theta.power_form;
  w.float_hint = theta.float_hint;
  w.weight = weight;
  w.inequality = inequality;
  w.satisfied = satisfied;
  return w;
}

std::string describe_sufficient(const Polynomial& f, const ExponentVector& alpha_star) {
  std::ostringstream os;
  if (all_even(alpha_star))
    os << "f_alpha > -w*Theta (even alpha), f_alpha = " << format_rational(f.coefficient(alpha_star));
  else
    os << "|f_alpha| < w*Theta (odd alpha), f_alpha = " << format_rational(f.coefficient(alpha_star));
  return os.str();
}

// Attempts the strict sufficiency inequalities with one weight choice;
// returns true (and records witnesses) when every degenerate point passes
// with some minimal decomposition.
bool try_sufficient(const Polynomial& f, const GemAnalysis& gem,
                    const std::map<ExponentVector, Rational, GradedLexLess>& weights,
                    std::vector<CircuitWitness>& out) {
  std::vector<CircuitWitness> attempt;
  bool all_ok = true;
  for (const ExponentVector& alpha_star : gem.degenerate) {
    const auto it = weights.find(alpha_star);
    const Rational w = it == weights.end() ? Rational(0) : it->second;
    const std::vector<CaratheodoryDecomposition> decs = caratheodory_decompose(alpha_star, gem.vertices);
    bool ok = false;
    std::optional<CircuitNumber> recorded;
    for (const CaratheodoryDecomposition& d : decs) {
      const CircuitNumber theta = circuit_number(f, d);
      if (!recorded) recorded = theta;
      if (sufficient_inequality(f, theta, w, all_even(alpha_star))) {
        attempt.push_back(make_witness(theta, w, describe_sufficient(f, alpha_star), true));
        ok = true;
        break;
      }
    }
    if (!ok) {
      attempt.push_back(make_witness(*recorded, w, describe_sufficient(f, alpha_star), false));
      all_ok = false;
    }
  }
  out.insert(out.end(), attempt.begin(), attempt.end());
  return all_ok;
}

// Float-guided proportional weights: each degenerate point gets roughly the
// share it needs (|f_alpha|/Theta), padded with an equal cut of the slack.
// The result is rationalized and later verified exactly, so the floats can
// only cause a missed certificate, never a wrong one.
std::optional<std::map<ExponentVector, Rational, GradedLexLess>> proportional_weights(
    const Polynomial& f, const GemAnalysis& gem) {
  const std::size_t k = gem.degenerate.size();
  std::map<ExponentVector, Rational, GradedLexLess> weights;
  std::vector<double> needed;
  double total_needed = 0.0;
  for (const ExponentVector& alpha_star : gem.degenerate) {
    const std::vector<CaratheodoryDecomposition> decs = caratheodory_decompose(alpha_star, gem.vertices);
    double best_theta = 0.0;
    for (const CaratheodoryDecomposition& d : decs)
      best_theta = std::max(best_theta, circuit_number(f, d).float_hint);
    const Rational coeff = f.coefficient(alpha_star);
    double r = 0.0;
    if (!(all_even(alpha_star) && coeff >= 0)) {
      const double c = std::abs(to_double_hint(coeff));
      r = best_theta > 0 ? c / best_theta : 1.0;
    }
    needed.push_back(r);
    total_needed += r;
  }
  if (total_needed >= 1.0) return std::nullopt;  // no split can cover the demands

  const double slack_share = (1.0 - total_needed) / static_cast<double>(k);
  const long denom = 1L << 30;
  Rational budget = 1;
  for (std::size_t i = 0; i < k; ++i) {
    const double target = needed[i] + slack_share;
    Rational w(static_cast<long>(std::floor(target * static_cast<double>(denom))), denom);
    if (w <= 0) w = Rational(1, denom);
    if (w > budget) w = budget;
    budget -= w;
    weights.emplace(gem.degenerate[i], w);
  }
  return weights;
}

}  // namespace

CoercivityVerdict coercivity_verdict(const Polynomial& f, const std::optional<WeightAssignment>& weights,
                                     WeightStrategy strategy) {
  CoercivityVerdict verdict;
  verdict.gem = classify_support(f);
  verdict.conditions = check_conditions(f, verdict.gem);

  if (!verdict.conditions.all_hold()) {
    verdict.tag = CoercivityTag::NotCoercive;
    verdict.theorem = CoercivityTheorem::NecessaryViolation;
    if (!verdict.conditions.c1_holds)
      verdict.notes.push_back("C1 fails: a vertex has an odd entry");
    if (!verdict.conditions.c2_holds)
      verdict.notes.push_back("C2 fails: a vertex coefficient is not strictly positive");
    if (!verdict.conditions.c3_holds)
      verdict.notes.push_back("C3 fails: some coordinate axis has no even vertex");
    return verdict;
  }

  if (verdict.gem.gem_regular()) {
    // With no degenerate points the vertex conditions characterize
    // coercivity outright.
    verdict.tag = CoercivityTag::Coercive;
    verdict.theorem = CoercivityTheorem::Characterization;
    verdict.notes.push_back("gem regular: C1-C3 hold, coercivity follows from the characterization");
    return verdict;
  }

  const NecessaryCheck necessary = necessary_condition_check(f, verdict.gem);
  for (const CircuitNumber& theta : necessary.circuits_checked)
    verdict.circuits.push_back(make_witness(theta, 1, "necessary bound (non-strict)", true));
  for (const ExponentVector& alpha : necessary.unconstrained) {
    std::ostringstream os;
    os << "degenerate point with no isolating simplicial face: [";
    for (std::size_t i = 0; i < alpha.size(); ++i) os << (i ? "," : "") << alpha[i];
    os << "] left unconstrained by the necessary bounds";
    verdict.notes.push_back(os.str());
  }
  if (!necessary.pass) {
    verdict.tag = CoercivityTag::NotCoercive;
    verdict.theorem = CoercivityTheorem::NecessaryViolation;
    verdict.notes.push_back(necessary.violated_clause);
    if (!necessary.circuits_checked.empty()) {
      // Re-record the violated bound as unsatisfied for the report.
      const CircuitNumber& last = necessary.circuits_checked.back();
      verdict.circuits.back() = make_witness(last, 1, necessary.violated_clause, false);
    }
    return verdict;
  }

  // Sufficiency pass.  Explicit weights win; otherwise the equal split,
  // optionally followed by the proportional reallocation.
  std::map<ExponentVector, Rational, GradedLexLess> w;
  if (weights) {
    w = weights->weights;
    Rational total = 0;
    for (const auto& [alpha, value] : w) {
      if (value < 0) throw std::invalid_argument("weights must be nonnegative");
      total += value;
    }
    if (total > 1) throw std::invalid_argument("weights must sum to at most 1");
  } else {
    const Rational equal = Rational(1) / static_cast<long>(verdict.gem.degenerate.size());
    for (const ExponentVector& alpha_star : verdict.gem.degenerate) w.emplace(alpha_star, equal);
  }

  if (try_sufficient(f, verdict.gem, w, verdict.circuits)) {
    verdict.tag = CoercivityTag::Coercive;
    verdict.theorem = CoercivityTheorem::Sufficient;
    verdict.notes.push_back(weights ? "sufficient inequalities hold with the supplied weights"
                                    : "sufficient inequalities hold with the equal weight split");
    return verdict;
  }

  if (!weights && strategy == WeightStrategy::ProportionalSlack && verdict.gem.degenerate.size() > 1) {
    const auto proportional = proportional_weights(f, verdict.gem);
    if (proportional) {
      std::vector<CircuitWitness> second;
      if (try_sufficient(f, verdict.gem, *proportional, second)) {
        verdict.circuits = std::move(second);
        verdict.tag = CoercivityTag::Coercive;
        verdict.theorem = CoercivityTheorem::Sufficient;
        verdict.notes.push_back("sufficient inequalities hold with proportional-slack weights");
        return verdict;
      }
    }
  }

  verdict.tag = CoercivityTag::Unknown;
  verdict.theorem = CoercivityTheorem::None;
  verdict.notes.push_back("necessary bounds hold but no strict sufficiency certificate was found");
  return verdict;
}

std::vector<RationalMatrix> transform_family(int dimension, int entry_bound) {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  if (entry_bound < 1) throw std::invalid_argument("entry bound must be >= 1");

  // Canonical columns: nonzero integer vectors with entries in
  // [-bound, bound], gcd 1, first nonzero entry positive.
  std::vector<std::vector<int>> columns;
  std::vector<int> col(static_cast<std::size_t>(dimension), -entry_bound);
  for (;;) {
    int g = 0;
    int first_nonzero = 0;
    for (int e : col) {
      if (e != 0 && first_nonzero == 0) first_nonzero = e;
      g = std::gcd(g, e);
    }
    if (g == 1 && first_nonzero > 0) columns.push_back(col);
    int i = dimension - 1;
    while (i >= 0 && col[static_cast<std::size_t>(i)] == entry_bound) {
      col[static_cast<std::size_t>(i)] = -entry_bound;
      --i;
    }
    if (i < 0) break;
    ++col[static_cast<std::size_t>(i)];
  }

  // All column tuples (order matters: column permutations are distinct but
  // equally valid transforms); keep the regular ones.
  std::vector<std::vector<int>> flat;  // row-major entries per matrix
  std::vector<std::size_t> tuple(static_cast<std::size_t>(dimension), 0);
  const std::size_t cn = columns.size();
  for (;;) {
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(dimension),
                                            std::vector<Rational>(static_cast<std::size_t>(dimension)));
    for (int c = 0; c < dimension; ++c)
      for (int r = 0; r < dimension; ++r)
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            columns[tuple[static_cast<std::size_t>(c)]][static_cast<std::size_t>(r)];
    if (RationalMatrix(rows).is_regular()) {
      std::vector<int> entries;
      entries.reserve(static_cast<std::size_t>(dimension * dimension));
      for (int r = 0; r < dimension; ++r)
        for (int c = 0; c < dimension; ++c)
          entries.push_back(columns[tuple[static_cast<std::size_t>(c)]][static_cast<std::size_t>(r)]);
      flat.push_back(std::move(entries));
    }
    int i = dimension - 1;
    while (i >= 0 && tuple[static_cast<std::size_t>(i)] == cn - 1) {
      tuple[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++tuple[static_cast<std::size_t>(i)];
  }

  // Order: total |entry| mass, then entry by entry with 1 < 0 < -1 < 2 < -2
  // < ... so the identity precedes everything else.
  auto rank = [](int e) {
    if (e == 1) return 0;
    if (e == 0) return 1;
    if (e == -1) return 2;
    return 2 * std::abs(e) - 1 + (e < 0 ? 1 : 0);
  };
  std::sort(flat.begin(), flat.end(), [&](const std::vector<int>& a, const std::vector<int>& b) {
    int ma = 0, mb = 0;
    for (int e : a) ma += std::abs(e);
    for (int e : b) mb += std::abs(e);
    if (ma != mb) return ma < mb;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (rank(a[i]) != rank(b[i])) return rank(a[i]) < rank(b[i]);
    return false;
  });

  std::vector<RationalMatrix> out;
  out.reserve(flat.size());
  for (const std::vector<int>& entries : flat) {
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(dimension),
                                            std::vector<Rational>(static_cast<std::size_t>(dimension)));
    for (int r = 0; r < dimension; ++r)
      for (int c = 0; c < dimension; ++c)
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            entries[static_cast<std::size_t>(r * dimension + c)];
    out.emplace_back(std::move(rows));
  }
  return out;
}

std::optional<std::pair<RationalMatrix, CoercivityVerdict>> transform_search(
    const PolynomialMap& F, const TransformFamily& family, WeightStrategy strategy) {
  const std::vector<RationalMatrix> candidates = transform_family(F.dimension(), family.entry_bound);
  const int total = static_cast<int>(candidates.size());
  constexpr int chunk = 16;
  for (int begin = 0; begin < total; begin += chunk) {
    const int end = std::min(total, begin + chunk);
    std::vector<std::optional<CoercivityVerdict>> hits(static_cast<std::size_t>(end - begin));
#pragma omp parallel for schedule(dynamic)
    for (int i = begin; i < end; ++i) {
      const Polynomial g = sos_polynomial(compose_linear(F, candidates[static_cast<std::size_t>(i)]));
      CoercivityVerdict v = coercivity_verdict(g, std::nullopt, strategy);
      if (v.tag == CoercivityTag::Coercive) hits[static_cast<std::size_t>(i - begin)] = std::move(v);
    }
    // First hit in family order wins, independent of scheduling.
    for (int i = begin; i < end; ++i)
      if (hits[static_cast<std::size_t>(i - begin)])
        return std::make_pair(candidates[static_cast<std::size_t>(i)],
                              *hits[static_cast<std::size_t>(i - begin)]);
  }
  return std::nullopt;
}

DiffeomorphismReport diffeomorphism_verdict(const PolynomialMap& F, const CertifyOptions& options) {
  DiffeomorphismReport report;

  report.jacobian_det = jacobian_determinant(F);
  // The formula is the production path; the cofactor oracle cross-checks it
  // on every invocation.  A mismatch is a hard internal error.
  if (report.jacobian_det != jacobian_determinant_oracle(F))
    throw InternalCheckError("jacobian determinant formula and cofactor oracle disagree");

  report.h1 = nonvanishing_analysis(report.jacobian_det, options.budget);
  if (report.h1.tag == NonvanishingTag::Unknown && options.assert_nonvanishing) {
    report.h1.tag = NonvanishingTag::AssertedNonvanishing;
    report.h1.certificate = NonvanishingCertificate::SamplingAssertion;
    report.notes.push_back("nonvanishing of det JF asserted by the user after inconclusive sampling");
  }

  report.h2 = coercivity_verdict(sos_polynomial(F), std::nullopt, options.weights);

  CoercivityTag h2_effective = report.h2.tag;
  if (report.h2.tag == CoercivityTag::Unknown && options.transforms) {
    auto found = transform_search(F, TransformFamily{options.transform_bound}, options.weights);
    if (found) {
      report.transform = found->first;
      report.transform_verdict = found->second;
      h2_effective = CoercivityTag::Coercive;
      report.notes.push_back(
          "coercivity certified for ||F∘A^{-1}||^2 and propagated back: coercivity is invariant "
          "under regular linear changes of variables");
    } else {
      report.notes.push_back("transform search exhausted the family without finding a certificate");
    }
  }

  const bool h1_refuted = report.h1.tag == NonvanishingTag::ZeroWitness ||
                          report.h1.tag == NonvanishingTag::SignChangeWitness;
  const bool h1_certified = report.h1.tag == NonvanishingTag::PositiveEverywhere ||
                            report.h1.tag == NonvanishingTag::NegativeEverywhere ||
                            report.h1.tag == NonvanishingTag::AssertedNonvanishing;

  if (h2_effective == CoercivityTag::NotCoercive) {
    // Norm coercivity is necessary for a global C^1 diffeomorphism, so a
    // sound NotCoercive refutes on its own.
    report.verdict = DiffeomorphismTag::NotDiffeomorphism;
  } else if (h1_refuted) {
    report.verdict = DiffeomorphismTag::NotDiffeomorphism;
  } else if (h1_certified && h2_effective == CoercivityTag::Coercive) {
    report.verdict = DiffeomorphismTag::Diffeomorphism;
  } else {
    report.verdict = DiffeomorphismTag::Unknown;
  }
  return report;
}

}  // namespace diffeocert
