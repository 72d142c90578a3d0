// Serial reference vs OpenMP kernels on the workloads the library actually runs.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "ramanujan/array_code.hpp"
#include "ramanujan/cayley_abelian.hpp"
#include "ramanujan/kernels.hpp"
#include "ramanujan/lps.hpp"
#include "ramanujan/spectral.hpp"

using namespace ramanujan;
using kernels::Exec;

namespace {

double seconds(const std::function<void()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, const std::function<void(Exec)>& f) {
  const double s = seconds([&] { f(Exec::serial); });
  const double p = seconds([&] { f(Exec::parallel); });
  std::printf("%-34s %10.3f %10.3f %8.2fx\n", name.c_str(), s, p, s / p);
}

}  // namespace

int main(int argc, char** argv) {
  const int q = argc > 1 ? std::stoi(argv[1]) : 23;
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-34s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");

  const BinaryBigraph b = array_code::build_array_code({q, q});
  const std::string tag = "B(" + std::to_string(q) + "," + std::to_string(q) + ")";
  row("gram " + tag, [&](Exec e) { kernels::gram_rows(b.entries(), b.rows(), b.cols(), e); });
  const auto g = kernels::gram_rows(b.entries(), b.rows(), b.cols());
  row("tridiagonalize " + tag + " gram", [&](Exec e) {
    auto a = g;
    std::vector<double> d, o;
    kernels::tridiagonalize(a, d, o, e);
  });
  row("singular values " + tag, [&](Exec e) { spectral::singular_values(b, e); });
  row("theta_c " + tag, [&](Exec e) { spectral::theta_c(b, e); });
  row("cayley PGL(2,13), p = 29", [&](Exec e) { lps::cayley_pgl(29, 13, e); });
  const auto spec = abelian::li_spec(101);
  row("character sums Li q = 101", [&](Exec e) { abelian::character_values(spec, e); });
  return 0;
}
