// Compares the OpenMP kernels against their serial reference paths and
// verifies that both produce identical results.
#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wsys/four_term.hpp"
#include "wsys/pbw.hpp"

using namespace wsys;

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench_envelope() {
  PBWAlgebra alg(AlgebraSpec::so(5));
  const Permutation s({3, 5, 2, 1, 4});

  auto t0 = std::chrono::steady_clock::now();
  const PBWElement serial = alg.w_envelope_serial(s);
  const double t_serial = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const PBWElement parallel = alg.w_envelope(s);
  const double t_parallel = seconds_since(t0);

  std::cout << "w_envelope so(5), m=5:  serial " << t_serial << " s,  parallel " << t_parallel
            << " s,  identical: " << (serial == parallel ? "yes" : "NO") << "\n";
}

void bench_basis_eval(int n) {
  const auto diagrams = enumerate_diagrams(n);

  auto t0 = std::chrono::steady_clock::now();
  const auto serial = evaluate_diagrams(diagrams, WeightFamily::so, false, false);
  const double t_serial = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const auto parallel = evaluate_diagrams(diagrams, WeightFamily::so, true, false);
  const double t_parallel = seconds_since(t0);

  std::cout << "so values, all " << diagrams.size() << " diagrams with " << n
            << " chords:  serial " << t_serial << " s,  parallel " << t_parallel
            << " s,  identical: " << (serial == parallel ? "yes" : "NO") << "\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP; parallel paths fall back to serial\n";
#endif
  bench_envelope();
  bench_basis_eval(4);
  bench_basis_eval(5);
  return 0;
}
