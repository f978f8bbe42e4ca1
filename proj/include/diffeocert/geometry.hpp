#pragma once

#include "diffeocert/linprog.hpp"
#include "diffeocert/polynomial.hpp"

#include <vector>

namespace diffeocert {

using RationalPoint = std::vector<Rational>;

/// Result of testing p in conv(points).  When inside, `lambdas[i]` are
/// exact convex coefficients reproducing p; otherwise `farkas` holds the
/// verified infeasibility multipliers from the defining linear program.
struct ConvexCombination {
  bool inside = false;
  std::vector<Rational> lambdas;
  std::vector<Rational> farkas;
};

ConvexCombination convex_combination(const RationalPoint& p, const std::vector<RationalPoint>& points);

bool affinely_independent(const std::vector<RationalPoint>& points);

/// Vertices of conv(points): exact, deduplicated, sorted (coordinate sum,
/// then lexicographic).
std::vector<RationalPoint> vertex_set(const std::vector<RationalPoint>& points);

/// Vertices of the Minkowski sum conv(points) + conv(points), computed from
/// the pairwise sums.  Doubling law: this equals {2v : v vertex of conv(points)}.
std::vector<RationalPoint> minkowski_sum_vertices(const std::vector<RationalPoint>& points);

/// The classification of A(f) relative to the Newton polytope at infinity
/// new_inf(f) = conv(A(f) ∪ {0}): V = vertices other than the origin,
/// D = non-vertex support points lying on the gem (the faces not containing
/// the origin), R = everything else (the origin's exponent included).
/// f is "gem regular" exactly when D is empty.
struct GemAnalysis {
  std::vector<ExponentVector> vertices;    // V(f), graded lex ascending
  std::vector<ExponentVector> degenerate;  // D(f)
  std::vector<ExponentVector> remaining;   // R(f)
  bool origin_is_vertex = false;

  bool gem_regular() const { return degenerate.empty(); }
  bool operator==(const GemAnalysis& other) const = default;
};

/// V(f): support points that are vertices of new_inf(f), excluding 0.
std::vector<ExponentVector> vertices_at_infinity(const Polynomial& f);

/// Whether alpha lies on the gem of f, i.e. on some face of new_inf(f) cut
/// out by a hyperplane c·x = 1 with c·beta <= 1 over all of A(f) ∪ {0}.
bool gem_membership(const Polynomial& f, const ExponentVector& alpha);

GemAnalysis classify_support(const Polynomial& f);

/// All simplicial faces G of new_inf(f) whose vertex set V_G consists of
/// affinely independent elements of V(f) and which contain `alpha`.
/// Each face is returned as its vertex set, graded lex ascending; the list
/// is ordered by (size, lexicographic).
std::vector<std::vector<ExponentVector>> simplicial_faces_through(const Polynomial& f,
                                                                  const ExponentVector& alpha);

}  // namespace diffeocert
