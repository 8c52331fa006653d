// Times the parallel candidate enumeration against the serial reference and
// verifies that both produce identical class tables.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "lrp/classify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

bool same_table(const lrp::ClassTable& a, const lrp::ClassTable& b) {
  if (a.classes.size() != b.classes.size()) return false;
  for (size_t i = 0; i < a.classes.size(); ++i) {
    if (a.classes[i].key != b.classes[i].key) return false;
    if (!(a.classes[i].rep == b.classes[i].rep)) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  long long max_ell = argc > 1 ? std::atoll(argv[1]) : 99;
  int jobs = argc > 2 ? std::atoi(argv[2]) : 0;
#ifdef _OPENMP
  std::printf("openmp enabled, max threads %d\n", jobs > 0 ? jobs : omp_get_max_threads());
#else
  std::printf("openmp disabled, parallel path falls back to serial\n");
#endif
  std::printf("%6s %8s %12s %12s %8s\n", "ell", "classes", "serial[s]", "parallel[s]", "speedup");
  double total_serial = 0, total_parallel = 0;
  bool all_equal = true;
  for (long long ell = 1; ell <= max_ell; ell += 2) {
    auto t0 = std::chrono::steady_clock::now();
    lrp::ClassTable serial = lrp::enumerate_l_reflexive_serial(lrp::Int(ell));
    auto t1 = std::chrono::steady_clock::now();
    lrp::ClassTable parallel = lrp::enumerate_l_reflexive(lrp::Int(ell), jobs);
    auto t2 = std::chrono::steady_clock::now();
    double ts = seconds(t0, t1), tp = seconds(t1, t2);
    total_serial += ts;
    total_parallel += tp;
    all_equal = all_equal && same_table(serial, parallel);
    std::printf("%6lld %8zu %12.4f %12.4f %8.2f\n", ell, serial.classes.size(), ts, tp,
                tp > 0 ? ts / tp : 0.0);
  }
  std::printf("total serial %.3fs, parallel %.3fs, speedup %.2f\n", total_serial, total_parallel,
              total_parallel > 0 ? total_serial / total_parallel : 0.0);
  if (!all_equal) {
    std::printf("MISMATCH between serial and parallel tables\n");
    return 1;
  }
  std::printf("tables identical\n");
  return 0;
}
