#include "diffeocert/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace diffeocert {
namespace {

bool point_less(const RationalPoint& a, const RationalPoint& b) {
  Rational sa = 0, sb = 0;
  for (const Rational& v : a) sa += v;
  for (const Rational& v : b) sb += v;
  if (sa != sb) return sa < sb;
  return a < b;
}

RationalPoint to_point(const ExponentVector& alpha) {
  RationalPoint p;
  p.reserve(alpha.size());
  for (int e : alpha) p.emplace_back(e);
  return p;
}

// Support points of f plus the origin — the generating set of new_inf(f).
std::vector<RationalPoint> support_with_origin(const Polynomial& f) {
  std::vector<RationalPoint> pts;
  pts.push_back(RationalPoint(static_cast<std::size_t>(f.dimension()), Rational(0)));
  for (const ExponentVector& alpha : f.support()) {
    if (total_degree(alpha) == 0) continue;  // origin already present
    pts.push_back(to_point(alpha));
  }
  return pts;
}

}  // namespace

ConvexCombination convex_combination(const RationalPoint& p, const std::vector<RationalPoint>& points) {
  ConvexCombination out;
  if (points.empty()) return out;
  const int dim = static_cast<int>(p.size());
  for (const RationalPoint& q : points)
    if (static_cast<int>(q.size()) != dim) throw std::invalid_argument("point dimension mismatch");

  // Feasibility of sum_i lambda_i q_i = p, sum_i lambda_i = 1, lambda >= 0.
  LinearProgram lp;
  lp.num_vars = static_cast<int>(points.size());
  lp.nonnegative.assign(points.size(), true);
  for (int k = 0; k < dim; ++k) {
    std::vector<Rational> row;
    row.reserve(points.size());
    for (const RationalPoint& q : points) row.push_back(q[k]);
    lp.add_row(std::move(row), RowSense::Equal, p[k]);
  }
  lp.add_row(std::vector<Rational>(points.size(), Rational(1)), RowSense::Equal, 1);

  LpFeasibility feas = lp_feasible(lp);
  out.inside = feas.feasible;
  if (feas.feasible)
    out.lambdas = std::move(feas.point);
  else
    out.farkas = std::move(feas.farkas);
  return out;
}

bool affinely_independent(const std::vector<RationalPoint>& points) {
  if (points.empty()) return true;
  const std::size_t dim = points[0].size();
  // Rank of the homogenized vectors (q, 1) must equal the point count.
  std::vector<std::vector<Rational>> rows;
  for (const RationalPoint& q : points) {
    if (q.size() != dim) throw std::invalid_argument("point dimension mismatch");
    std::vector<Rational> row = q;
    row.push_back(1);
    rows.push_back(std::move(row));
  }
  const std::size_t cols = dim + 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const Rational inv = Rational(1) / rows[rank][col];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col] * inv;
      for (std::size_t k = col; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank == rows.size();
}

std::vector<RationalPoint> vertex_set(const std::vector<RationalPoint>& points) {
  std::vector<RationalPoint> unique = points;
  std::sort(unique.begin(), unique.end(), point_less);
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  std::vector<RationalPoint> result;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    std::vector<RationalPoint> others;
    others.reserve(unique.size() - 1);
    for (std::size_t j = 0; j < unique.size(); ++j)
      if (j != i) others.push_back(unique[j]);
    if (others.empty() || !convex_combination(unique[i], others).inside)
      result.push_back(unique[i]);
  }
  return result;  // already sorted: filtered from a sorted list
}

std::vector<RationalPoint> minkowski_sum_vertices(const std::vector<RationalPoint>& points) {
  if (points.empty()) return {};
  std::vector<RationalPoint> sums;
  sums.reserve(points.size() * points.size());
  for (const RationalPoint& a : points)
    for (const RationalPoint& b : points) {
      RationalPoint s(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
      sums.push_back(std::move(s));
    }
  return vertex_set(sums);
}

std::vector<ExponentVector> vertices_at_infinity(const Polynomial& f) {
  const std::vector<RationalPoint> pts = support_with_origin(f);
  std::vector<ExponentVector> out;
  for (const ExponentVector& alpha : f.support()) {
    if (total_degree(alpha) == 0) continue;
    const RationalPoint p = to_point(alpha);
    std::vector<RationalPoint> others;
    others.reserve(pts.size() - 1);
    for (const RationalPoint& q : pts)
      if (q != p) others.push_back(q);
    if (!convex_combination(p, others).inside) out.push_back(alpha);
  }
  return out;  // support() is graded lex ascending already
}

bool gem_membership(const Polynomial& f, const ExponentVector& alpha) {
  if (static_cast<int>(alpha.size()) != f.dimension())
    throw std::invalid_argument("exponent dimension mismatch");
  if (total_degree(alpha) == 0) return false;  // the origin never lies on the gem
  // alpha lies on a face avoiding the origin iff some c satisfies
  // c·beta <= 1 for every generator beta and c·alpha = 1.  (The face is then
  // cut out by c·x = 1, which the origin misses since c·0 = 0 < 1.)
  const std::vector<RationalPoint> pts = support_with_origin(f);
  LinearProgram lp;
  lp.num_vars = f.dimension();
  for (const RationalPoint& q : pts) lp.add_row(q, RowSense::LessEqual, 1);
  RationalPoint target = to_point(alpha);
  lp.add_row(target, RowSense::Equal, 1);
  return lp_feasible(lp).feasible;
}

GemAnalysis classify_support(const Polynomial& f) {
  GemAnalysis g;
  g.vertices = vertices_at_infinity(f);
  for (const ExponentVector& alpha : f.support()) {
    if (std::binary_search(g.vertices.begin(), g.vertices.end(), alpha,
                           [](const ExponentVector& a, const ExponentVector& b) {
                             return GradedLexLess{}(a, b);
                           })) {
      continue;  // already placed in V
    }
    if (total_degree(alpha) > 0 && gem_membership(f, alpha))
      g.degenerate.push_back(alpha);
    else
      g.remaining.push_back(alpha);
  }
  // The origin is a vertex of new_inf(f) whenever it is not a convex
  // combination of the rest of the support; recorded for reporting.
  std::vector<RationalPoint> others;
  for (const ExponentVector& alpha : f.support())
    if (total_degree(alpha) > 0) others.push_back(to_point(alpha));
  const RationalPoint origin(static_cast<std::size_t>(f.dimension()), Rational(0));
  g.origin_is_vertex = others.empty() || !convex_combination(origin, others).inside;
  return g;
}

std::vector<std::vector<ExponentVector>> simplicial_faces_through(const Polynomial& f,
                                                                  const ExponentVector& alpha) {
  const std::vector<ExponentVector> V = vertices_at_infinity(f);
  const int n = f.dimension();
  const RationalPoint target = to_point(alpha);
  std::vector<std::vector<ExponentVector>> faces;

  const int max_size = std::min<int>(n, static_cast<int>(V.size()));
  std::vector<int> pick;
  // Enumerate subsets of V by size then index order; both the subsets and
  // the output therefore come out deterministically ordered.
  auto consider = [&](const std::vector<int>& indices) {
    std::vector<ExponentVector> candidate;
    std::vector<RationalPoint> pts;
    for (int i : indices) {
      candidate.push_back(V[static_cast<std::size_t>(i)]);
      pts.push_back(to_point(V[static_cast<std::size_t>(i)]));
    }
    if (!affinely_independent(pts)) return;
    if (!convex_combination(target, pts).inside) return;

    // Face test: some (c, d) has c·v = d on the candidate set and
    // c·w <= d - 1 strictly below it for every other generator of
    // new_inf(f).  Scaling shows the gap can be taken as 1 exactly when a
    // strict separation exists, so this LP is an exact face oracle.
    LinearProgram lp;
    lp.num_vars = n + 1;  // c_1..c_n, d
    auto row_for = [&](const RationalPoint& q) {
      std::vector<Rational> row = q;
      row.push_back(-1);
      return row;
    };
    for (const RationalPoint& q : pts) lp.add_row(row_for(q), RowSense::Equal, 0);
    std::vector<RationalPoint> generators = support_with_origin(f);
    for (const RationalPoint& q : generators) {
      bool on_candidate_face = false;
      for (const RationalPoint& v : pts)
        if (q == v) {
          on_candidate_face = true;
          break;
        }
      // Generators inside conv(candidate) lie on the face itself (the
      // degenerate target is the prime example) and must not be strictly
      // separated; their equality c·q = d is implied by the candidate rows.
      if (!on_candidate_face && convex_combination(q, pts).inside) on_candidate_face = true;
      if (!on_candidate_face) lp.add_row(row_for(q), RowSense::LessEqual, -1);
    }
    if (!lp_feasible(lp).feasible) return;
    faces.push_back(std::move(candidate));
  };

  for (int size = 1; size <= max_size; ++size) {
    pick.assign(static_cast<std::size_t>(size), 0);
    // Standard combination enumeration over indices 0..|V|-1.
    for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
    const int vn = static_cast<int>(V.size());
    for (;;) {
      consider(pick);
      int i = size - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == vn - size + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return faces;
}

}  // namespace diffeocert
