// Timings of the OpenMP kernels against their serial counterparts.
//   galoiskit_bench [repetitions]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "galoiskit/analysis.hpp"
#include "galoiskit/galois.hpp"
#include "galoiskit/linalg.hpp"
#include "galoiskit/tower.hpp"

using namespace galoiskit;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<long> v(-9, 9), w(1, 4);
  Matrix m(n, n + n / 2);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = Rational(Integer(v(rng)), Integer(w(rng)));
  }
  return m;
}

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto start = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::printf("threads: %d, best of %d\n\n", omp_get_max_threads(), reps);

  std::printf("rref (n x 3n/2, random rationals)\n");
  std::printf("%6s %12s %12s %12s %9s\n", "n", "reference", "serial", "parallel", "speedup");
  std::mt19937 rng(1);
  for (std::size_t n : {16, 32, 48, 64}) {
    const Matrix m = random_matrix(rng, n);
    Matrix a = m, b = m, c = m;
    const double t_ref = best_of(reps, [&] { a = m; reference::rref(a); });
    const double t_ser = best_of(reps, [&] { b = m; rref(b, Execution::serial); });
    const double t_par = best_of(reps, [&] { c = m; rref(c, Execution::parallel); });
    if (!(a == b && b == c)) {
      std::fprintf(stderr, "rref results disagree at n = %zu\n", n);
      return 1;
    }
    std::printf("%6zu %11.4fs %11.4fs %11.4fs %8.2fx\n", n, t_ref, t_ser, t_par, t_ser / t_par);
  }

  std::printf("\ngalois correspondence\n");
  std::printf("%-24s %6s %12s %12s %9s\n", "polynomial", "[E:Q]", "serial", "parallel", "speedup");
  for (const char* text : {"x^4 - 2", "x^3 - 3*x - 1", "(x^2-2)*(x^2-3)*(x^2-5)", "x^4 + x + 1"}) {
    const SplittingField sf = splitting_field(parse_polynomial(text));
    const AutGroup G(sf.field);
    std::size_t fields_serial = 0, fields_parallel = 0;
    const double t_ser = best_of(reps, [&] {
      fields_serial = galois_correspondence(G, {.exec = Execution::serial}).fields.size();
    });
    const double t_par = best_of(reps, [&] {
      fields_parallel = galois_correspondence(G, {.exec = Execution::parallel}).fields.size();
    });
    if (fields_serial != fields_parallel) {
      std::fprintf(stderr, "correspondence results disagree for %s\n", text);
      return 1;
    }
    std::printf("%-24s %6zu %11.4fs %11.4fs %8.2fx\n", text, sf.field.degree(), t_ser, t_par, t_ser / t_par);
  }
  return 0;
}
