// Benchmark comparing the serial reference kernels against the OpenMP
// kernels: Jacobian determinant expansion and nonvanishing sample
// evaluation.  Exact equality of the results is asserted as a side effect.

#include "diffeocert/jacobian.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace diffeocert;

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

PolynomialMap random_map(int n, int terms_per_component, int max_degree, std::mt19937_64& rng) {
  auto rand_int = [&rng](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::vector<Polynomial> components;
  for (int i = 0; i < n; ++i) {
    Polynomial f(n);
    for (int t = 0; t < terms_per_component; ++t) {
      ExponentVector alpha(static_cast<std::size_t>(n), 0);
      for (int k = 0; k < n; ++k) alpha[static_cast<std::size_t>(k)] = static_cast<int>(rand_int(0, max_degree));
      Rational c(rand_int(-9, 9));
      if (c == 0) c = 1;
      f.add_term(alpha, c);
    }
    if (f.is_zero()) f.add_term(ExponentVector(static_cast<std::size_t>(n), 0), 1);
    components.push_back(std::move(f));
  }
  return PolynomialMap(std::move(components));
}

}  // namespace

int main(int argc, char** argv) {
  int n = 5;
  int terms = 6;
  int max_degree = 3;
  int rounds = 20;
  if (argc > 1) n = std::atoi(argv[1]);
  if (argc > 2) terms = std::atoi(argv[2]);
  if (argc > 3) rounds = std::atoi(argv[3]);

#ifdef _OPENMP
  std::cout << "OpenMP enabled, max threads = " << omp_get_max_threads() << "\n";
#else
  std::cout << "OpenMP disabled (serial build)\n";
#endif
  std::cout << "jacobian determinant: n = " << n << ", terms/component = " << terms
            << ", max degree = " << max_degree << ", rounds = " << rounds << "\n";

  std::mt19937_64 rng(7);
  std::vector<PolynomialMap> maps;
  for (int i = 0; i < rounds; ++i) maps.push_back(random_map(n, terms, max_degree, rng));

  auto start = std::chrono::steady_clock::now();
  std::vector<Polynomial> serial_results;
  for (const PolynomialMap& F : maps) serial_results.push_back(jacobian_determinant_serial(F));
  const double serial_ms = ms_since(start);

  start = std::chrono::steady_clock::now();
  std::vector<Polynomial> parallel_results;
  for (const PolynomialMap& F : maps) parallel_results.push_back(jacobian_determinant_parallel(F));
  const double parallel_ms = ms_since(start);

  for (int i = 0; i < rounds; ++i)
    if (serial_results[static_cast<std::size_t>(i)] != parallel_results[static_cast<std::size_t>(i)]) {
      std::cerr << "MISMATCH between serial and parallel kernels on map " << i << "\n";
      return 1;
    }

  std::cout << "  serial:   " << serial_ms << " ms\n";
  std::cout << "  parallel: " << parallel_ms << " ms\n";
  std::cout << "  speedup:  " << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "x\n";
  std::cout << "  results identical: yes\n";

  // Sample-evaluation kernel: one large polynomial evaluated on the full
  // deterministic sample family.
  const PolynomialMap F = random_map(4, 8, 4, rng);
  const Polynomial d = jacobian_determinant(F);
  SamplingBudget budget;
  const auto points = nonvanishing_sample_points(4, budget);
  std::cout << "sample evaluation: " << points.size() << " points, |terms| = " << d.terms().size() << "\n";

  start = std::chrono::steady_clock::now();
  std::vector<int> serial_signs(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Rational v = d.evaluate(points[i]);
    serial_signs[i] = v == 0 ? 0 : (v > 0 ? 1 : -1);
  }
  const double eval_serial_ms = ms_since(start);

  start = std::chrono::steady_clock::now();
  std::vector<int> parallel_signs(points.size());
  const int count = static_cast<int>(points.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (int i = 0; i < count; ++i) {
    const Rational v = d.evaluate(points[static_cast<std::size_t>(i)]);
    parallel_signs[static_cast<std::size_t>(i)] = v == 0 ? 0 : (v > 0 ? 1 : -1);
  }
  const double eval_parallel_ms = ms_since(start);

  if (serial_signs != parallel_signs) {
    std::cerr << "MISMATCH between serial and parallel sample evaluation\n";
    return 1;
  }
  std::cout << "  serial:   " << eval_serial_ms << " ms\n";
  std::cout << "  parallel: " << eval_parallel_ms << " ms\n";
  std::cout << "  speedup:  " << (eval_parallel_ms > 0 ? eval_serial_ms / eval_parallel_ms : 0.0) << "x\n";
  std::cout << "  results identical: yes\n";
  return 0;
}
