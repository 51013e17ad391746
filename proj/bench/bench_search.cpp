// Compares the serial reference implementations of the two search kernels
// against their OpenMP counterparts and checks that the outputs agree.
//
//   bench_search [n] [m_max] [prop1_bound]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "latproj/catalog.hpp"
#include "latproj/strut.hpp"

using namespace latproj;

namespace {

template <typename F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

bool same_reports(const std::vector<StrutReport>& a, const std::vector<StrutReport>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i].v == b[i].v) || a[i].min_norm_primal != b[i].min_norm_primal) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 4;
  const long m_max = argc > 2 ? std::strtol(argv[2], nullptr, 10) : 300;
  const long bound = argc > 3 ? std::strtol(argv[3], nullptr, 10) : 200;

  std::printf("threads available: %d\n", omp_get_max_threads());
  std::printf("strut search: n=%zu, M <= %ld (%llu candidates)\n", n, m_max,
              static_cast<unsigned long long>(strut_candidate_count(n, 1, m_max)));

  std::vector<StrutReport> serial, parallel;
  const double t_serial =
      time_ms([&] { serial = strut_search_serial(n, 1, m_max, 10); });
  const double t_parallel = time_ms([&] { parallel = strut_search(n, 1, m_max, 10); });
  std::printf("  serial   %8.1f ms\n", t_serial);
  std::printf("  openmp   %8.1f ms   speedup %.2fx   outputs %s\n", t_parallel,
              t_serial / t_parallel, same_reports(serial, parallel) ? "match" : "DIFFER");

  const GramMatrix target(catalog_lookup("2Z+Z")->gram);
  std::printf("prop1 scan: bound=%ld (%ld pairs)\n", bound, (bound + 1) * (bound + 1));
  Prop1Report rs, rp;
  const double p_serial = time_ms([&] { rs = prop1_search_serial(bound, target); });
  const double p_parallel = time_ms([&] { rp = prop1_search(bound, target); });
  const bool agree = rs.checked == rp.checked &&
                     rs.counterexamples.size() == rp.counterexamples.size();
  std::printf("  serial   %8.1f ms\n", p_serial);
  std::printf("  openmp   %8.1f ms   speedup %.2fx   outputs %s\n", p_parallel,
              p_serial / p_parallel, agree ? "match" : "DIFFER");
  return same_reports(serial, parallel) && agree ? 0 : 1;
}
