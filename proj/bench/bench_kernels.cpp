#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#include "topohopf/enumerate.hpp"
#include "topohopf/exact_linalg.hpp"
#include "topohopf/pairing.hpp"
#include "topohopf/suites.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace topohopf;

namespace {

template <class F>
double best_ms(int reps, F f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    best = std::min(best, ms);
  }
  return best;
}

void row(const std::string& name, double serial, double parallel, bool agree) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed << std::setprecision(2) << std::setw(12)
            << serial << std::setw(12) << parallel << std::setw(9) << serial / parallel << "x"
            << (agree ? "" : "  MISMATCH") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  // Usage: bench_kernels [degree], degree 4 by default, 5 for a longer run.
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 4;
  const int reps = 3;
#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (built without OpenMP)\n";
#endif
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(12) << "serial ms" << std::setw(12)
            << "parallel ms" << std::setw(10) << "speedup" << "\n";
  bool ok = true;

  {
    std::vector<Topology> a, b;
    const double s = best_ms(reps, [&] { a = enumerate_topologies_serial(n + 1); });
    const double p = best_ms(reps, [&] { b = enumerate_topologies(n + 1); });
    row("enumerate topologies n=" + std::to_string(n + 1), s, p, a == b);
    ok = ok && a == b;
  }
  IntMatrix gs, gp;
  {
    const double s = best_ms(1, [&] { gs = gram_matrix_serial(n); });
    const double p = best_ms(1, [&] { gp = gram_matrix(n); });
    row("gram matrix n=" + std::to_string(n), s, p, gs == gp);
    ok = ok && gs == gp;
  }
  {
    std::size_t rs = 0, rp = 0;
    const double s = best_ms(1, [&] { rs = exact_rank_serial(gs); });
    const double p = best_ms(1, [&] { rp = exact_rank(gs); });
    row("exact rank n=" + std::to_string(n) + " (" + std::to_string(rs) + ")", s, p, rs == rp);
    ok = ok && rs == rp;
  }
  for (Suite suite : {Suite::Hopf, Suite::Gamma}) {
    SuiteOptions serial;
    serial.parallel = false;
    SuiteOptions parallel;
    SuiteReport rs, rp;
    const double s = best_ms(1, [&] { rs = verify_suite(suite, serial); });
    const double p = best_ms(1, [&] { rp = verify_suite(suite, parallel); });
    const bool agree = rs.passed == rp.passed && rs.attempted == rp.attempted;
    row(std::string("verify ") + to_string(suite) + " d=4", s, p, agree);
    ok = ok && agree;
  }
  return ok ? 0 : 1;
}
