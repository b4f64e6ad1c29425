// Serial reference against the OpenMP path for the three kernels:
// horn filling (Kan check), fibration lifting and compatible-family
// enumeration. Results must agree; timings are best of `reps`.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <omp.h>

#include "procat/eilmac.hpp"
#include "procat/homotopy.hpp"
#include "procat/kernels.hpp"
#include "procat/knil.hpp"

using namespace procat;

namespace {

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

template <class R>
void row(const std::string& name, int reps, const std::function<R(Exec)>& run) {
  R serial{}, parallel{};
  const double ts = best_of(reps, [&] { serial = run(Exec::Serial); });
  const double tp = best_of(reps, [&] { parallel = run(Exec::Parallel); });
  std::printf("%-44s serial %9.4fs  parallel %9.4fs  speedup %5.2fx  %s\n", name.c_str(), ts, tp, ts / tp,
              serial == parallel ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d\n", omp_get_max_threads());

  const TauSSet bs3 = b_group(FinGroup::symmetric3());
  const TauSSet k32 = k_abelian(FinAbGroup::cyclic(3), 2).sset;
  row<bool>("Kan check B(S3)", reps, [&](Exec e) { return is_kan(bs3, e).kan; });
  row<bool>("Kan check K(Z/3,2)", reps, [&](Exec e) { return is_kan(k32, e).kan; });

  const LToK lk = l_to_k_fibration(GModule::trivial(FinGroup::trivial(), FinAbGroup::cyclic(2)), 1);
  row<bool>("fibration lifting W K(Z/2,1) -> Wbar", reps, [&](Exec e) { return is_kan_fibration(lk.projection, e).ok; });
  const LToK lk3 = l_to_k_fibration(GModule::trivial(FinGroup::trivial(), FinAbGroup::cyclic(3)), 1);
  row<bool>("fibration lifting W K(Z/3,1) -> Wbar", reps,
            [&](Exec e) { return is_kan_fibration(lk3.projection, e).ok; });

  row<std::size_t>("compatible families B(S3), k=3", reps,
                   [&](Exec e) { return compatible_families(bs3, 3, -1, e, 50'000'000).size(); });
  row<std::size_t>("compatible families K(Z/3,2), k=3, horn 1", reps,
                   [&](Exec e) { return compatible_families(k32, 3, 1, e, 50'000'000).size(); });
  return 0;
}
