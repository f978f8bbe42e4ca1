#include "diffeocert/jacobian.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace diffeocert {
namespace {

struct SupportEntry {
  ExponentVector alpha;
  Rational coeff;
};

// Per-component nonzero support; a zero exponent vector contributes a zero
// column to every tuple determinant, so it is dropped up front.
std::vector<std::vector<SupportEntry>> nonzero_supports(const PolynomialMap& F) {
  std::vector<std::vector<SupportEntry>> supports;
  supports.reserve(static_cast<std::size_t>(F.dimension()));
  for (const Polynomial& f : F.components()) {
    std::vector<SupportEntry> entries;
    for (const auto& [alpha, c] : f.terms())
      if (total_degree(alpha) > 0) entries.push_back({alpha, c});
    supports.push_back(std::move(entries));
  }
  return supports;
}

// Exact integer determinant of the matrix whose columns are the given
// exponent vectors, via Bareiss fraction-free elimination.
Integer exponent_determinant(const std::vector<const ExponentVector*>& columns) {
  const int n = static_cast<int>(columns.size());
  std::vector<std::vector<Integer>> a(static_cast<std::size_t>(n),
                                      std::vector<Integer>(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[r][c] = (*columns[c])[r];

  Integer sign = 1;
  Integer prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c)
        a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
      a[r][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Core enumeration: all tuples with the first component's support index in
// [first_begin, first_end), pruned by the componentwise requirement
// sum alpha^i >= 1.  remaining_max[depth][k] is the largest k-th exponent
// still obtainable from components depth..n-1.
void tuple_sum(const std::vector<std::vector<SupportEntry>>& supports,
               const std::vector<std::vector<int>>& remaining_max, int first_begin, int first_end,
               Polynomial& accum) {
  const int n = static_cast<int>(supports.size());
  std::vector<const ExponentVector*> columns(static_cast<std::size_t>(n), nullptr);
  ExponentVector sigma(static_cast<std::size_t>(n), 0);

  auto rec = [&](auto&& self, int depth, const Rational& coeff_prod) -> void {
    for (int k = 0; k < n; ++k)
      if (sigma[static_cast<std::size_t>(k)] + remaining_max[static_cast<std::size_t>(depth)][static_cast<std::size_t>(k)] < 1)
        return;
    if (depth == n) {
      const Integer det = exponent_determinant(columns);
      if (det == 0) return;
      ExponentVector shifted(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) shifted[static_cast<std::size_t>(k)] = sigma[static_cast<std::size_t>(k)] - 1;
      accum.add_term(shifted, coeff_prod * Rational(det));
      return;
    }
    const int begin = depth == 0 ? first_begin : 0;
    const int end = depth == 0 ? first_end : static_cast<int>(supports[static_cast<std::size_t>(depth)].size());
    for (int i = begin; i < end; ++i) {
      const SupportEntry& entry = supports[static_cast<std::size_t>(depth)][static_cast<std::size_t>(i)];
      columns[static_cast<std::size_t>(depth)] = &entry.alpha;
      for (int k = 0; k < n; ++k) sigma[static_cast<std::size_t>(k)] += entry.alpha[static_cast<std::size_t>(k)];
      self(self, depth + 1, coeff_prod * entry.coeff);
      for (int k = 0; k < n; ++k) sigma[static_cast<std::size_t>(k)] -= entry.alpha[static_cast<std::size_t>(k)];
    }
  };
  rec(rec, 0, Rational(1));
}

std::vector<std::vector<int>> build_remaining_max(const std::vector<std::vector<SupportEntry>>& supports,
                                                  int n) {
  std::vector<std::vector<int>> remaining_max(static_cast<std::size_t>(n) + 1,
                                              std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int depth = n - 1; depth >= 0; --depth) {
    for (int k = 0; k < n; ++k) {
      int best = 0;
      for (const SupportEntry& e : supports[static_cast<std::size_t>(depth)])
        best = std::max(best, e.alpha[static_cast<std::size_t>(k)]);
      remaining_max[static_cast<std::size_t>(depth)][static_cast<std::size_t>(k)] =
          remaining_max[static_cast<std::size_t>(depth) + 1][static_cast<std::size_t>(k)] + best;
    }
  }
  return remaining_max;
}

}  // namespace

Polynomial jacobian_determinant_serial(const PolynomialMap& F) {
  const int n = F.dimension();
  const auto supports = nonzero_supports(F);
  for (const auto& s : supports)
    if (s.empty()) return Polynomial(n);  // a constant component gives a zero row
  const auto remaining_max = build_remaining_max(supports, n);
  Polynomial accum(n);
  tuple_sum(supports, remaining_max, 0, static_cast<int>(supports[0].size()), accum);
  return accum;
}

Polynomial jacobian_determinant_parallel(const PolynomialMap& F) {
  const int n = F.dimension();
  const auto supports = nonzero_supports(F);
  for (const auto& s : supports)
    if (s.empty()) return Polynomial(n);
  const auto remaining_max = build_remaining_max(supports, n);

  const int first_count = static_cast<int>(supports[0].size());
  std::vector<Polynomial> partials(static_cast<std::size_t>(first_count), Polynomial(n));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < first_count; ++i)
    tuple_sum(supports, remaining_max, i, i + 1, partials[static_cast<std::size_t>(i)]);

  // Merge in index order; addition over Q is commutative and exact, so the
  // result is independent of the thread schedule by construction.
  Polynomial accum(n);
  for (const Polynomial& p : partials) accum = accum + p;
  return accum;
}

Polynomial jacobian_determinant(const PolynomialMap& F) {
#ifdef _OPENMP
  return jacobian_determinant_parallel(F);
#else
  return jacobian_determinant_serial(F);
#endif
}

Polynomial jacobian_determinant_oracle(const PolynomialMap& F) {
  const int n = F.dimension();
  std::vector<std::vector<Polynomial>> jf;
  jf.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    std::vector<Polynomial> row;
    row.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) row.push_back(F.component(i).partial_derivative(j));
    jf.push_back(std::move(row));
  }

  // Cofactor expansion along the first active row, skipping zero entries.
  std::vector<int> cols(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) cols[static_cast<std::size_t>(j)] = j;
  auto expand = [&](auto&& self, int row, std::vector<int> active_cols) -> Polynomial {
    if (active_cols.size() == 1)
      return jf[static_cast<std::size_t>(row)][static_cast<std::size_t>(active_cols[0])];
    Polynomial total(n);
    for (std::size_t pos = 0; pos < active_cols.size(); ++pos) {
      const Polynomial& entry = jf[static_cast<std::size_t>(row)][static_cast<std::size_t>(active_cols[pos])];
      if (entry.is_zero()) continue;
      std::vector<int> rest;
      rest.reserve(active_cols.size() - 1);
      for (std::size_t k = 0; k < active_cols.size(); ++k)
        if (k != pos) rest.push_back(active_cols[k]);
      Polynomial minor = self(self, row + 1, std::move(rest));
      if (pos % 2 == 1) minor = -minor;
      total = total + entry * minor;
    }
    return total;
  };
  return expand(expand, 0, cols);
}

Rational det_at_origin(const PolynomialMap& F) {
  // Only tuples with sum alpha^i = (1,...,1) survive; each alpha^i must then
  // be a distinct standard basis vector, i.e. this is det of the linear part.
  const int n = F.dimension();
  std::vector<std::vector<Rational>> linear(static_cast<std::size_t>(n),
                                            std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      ExponentVector e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(j - 1)] = 1;
      linear[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = F.component(i).coefficient(e);
    }
  return RationalMatrix(std::move(linear)).determinant();
}

std::vector<std::vector<Rational>> nonvanishing_sample_points(int dimension, const SamplingBudget& budget) {
  std::vector<std::vector<Rational>> points;

  // 1) Diagonal grid x = (s, ..., s), s = 0, +1/d, -1/d, +2/d, ...
  std::vector<Rational> steps;
  steps.emplace_back(0);
  for (int k = 1; k <= budget.diagonal_steps; ++k) {
    steps.emplace_back(Rational(k) / budget.step_denominator);
    steps.emplace_back(Rational(-k) / budget.step_denominator);
  }
  for (const Rational& s : steps) points.push_back(std::vector<Rational>(static_cast<std::size_t>(dimension), s));

  // Deterministic PRNG; modulo reduction keeps the stream identical across
  // standard libraries (std::uniform_int_distribution is not portable).
  std::mt19937_64 rng(budget.seed);
  auto rand_int = [&rng](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  auto random_coordinate = [&](int radius) {
    const long q = rand_int(1, 8);
    const long p = rand_int(-radius * q, radius * q);
    return Rational(p) / q;
  };

  // 2) Uniform rational points in the box [-r, r]^n.
  for (int i = 0; i < budget.uniform_points; ++i) {
    std::vector<Rational> x;
    x.reserve(static_cast<std::size_t>(dimension));
    for (int k = 0; k < dimension; ++k) x.push_back(random_coordinate(budget.box_radius));
    points.push_back(std::move(x));
  }

  // 3) Random lines b + s*d swept over the diagonal grid values.
  for (int line = 0; line < budget.random_lines; ++line) {
    std::vector<Rational> base;
    std::vector<Rational> direction;
    bool nonzero = false;
    for (int k = 0; k < dimension; ++k) {
      base.push_back(random_coordinate(budget.box_radius));
      const Rational d = Rational(rand_int(-16, 16)) / 8;
      if (d != 0) nonzero = true;
      direction.push_back(d);
    }
    if (!nonzero) direction[0] = 1;
    for (const Rational& s : steps) {
      std::vector<Rational> x;
      x.reserve(static_cast<std::size_t>(dimension));
      for (int k = 0; k < dimension; ++k)
        x.push_back(base[static_cast<std::size_t>(k)] + s * direction[static_cast<std::size_t>(k)]);
      points.push_back(std::move(x));
    }
  }
  return points;
}

NonvanishingStatus nonvanishing_analysis(const Polynomial& d, const SamplingBudget& budget) {
  NonvanishingStatus status;
  status.seed = budget.seed;

  if (d.is_zero()) {
    status.tag = NonvanishingTag::ZeroWitness;
    status.witness = std::vector<Rational>(static_cast<std::size_t>(d.dimension()), Rational(0));
    return status;
  }

  // Structural certificates: even exponents and uniformly signed
  // coefficients with a nonzero constant term pin the sign globally.
  const ExponentVector origin(static_cast<std::size_t>(d.dimension()), 0);
  const Rational constant = d.coefficient(origin);
  bool even = true, all_positive = true, all_negative = true;
  for (const auto& [alpha, c] : d.terms()) {
    if (!all_even(alpha)) even = false;
    if (c < 0) all_positive = false;
    if (c > 0) all_negative = false;
  }
  if (even && all_positive && constant > 0) {
    status.tag = NonvanishingTag::PositiveEverywhere;
    status.certificate = NonvanishingCertificate::EvenPositiveMonomials;
    return status;
  }
  if (even && all_negative && constant < 0) {
    status.tag = NonvanishingTag::NegativeEverywhere;
    status.certificate = NonvanishingCertificate::EvenNegativeMonomials;
    return status;
  }

  const std::vector<std::vector<Rational>> points = nonvanishing_sample_points(d.dimension(), budget);
  const int count = static_cast<int>(points.size());
  std::vector<int> signs(static_cast<std::size_t>(count), 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (int i = 0; i < count; ++i) {
    const Rational value = d.evaluate(points[static_cast<std::size_t>(i)]);
    signs[static_cast<std::size_t>(i)] = value == 0 ? 0 : (value > 0 ? 1 : -1);
  }

  // Scan in sample order so the reported witnesses are deterministic.
  std::optional<std::size_t> first_positive, first_negative, first_zero;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (signs[i] == 0 && !first_zero) first_zero = i;
    if (signs[i] > 0 && !first_positive) first_positive = i;
    if (signs[i] < 0 && !first_negative) first_negative = i;
    if (first_zero || (first_positive && first_negative)) break;
  }
  if (first_zero) {
    status.tag = NonvanishingTag::ZeroWitness;
    status.witness = points[*first_zero];
    return status;
  }
  if (first_positive && first_negative) {
    status.tag = NonvanishingTag::SignChangeWitness;
    status.witness = points[*first_positive];
    status.witness_opposite = points[*first_negative];
    return status;
  }
  status.tag = NonvanishingTag::Unknown;
  return status;
}

}  // namespace diffeocert
