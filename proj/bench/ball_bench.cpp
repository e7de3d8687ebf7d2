// Serial vs OpenMP ball enumeration timings.
// Usage: ball_bench [omega] [radius] [repeats]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <omp.h>

#include "overgroup/ball.hpp"
#include "overgroup/omega.hpp"

namespace og = overgroup;

namespace {

template <class F>
double best_seconds(int repeats, F&& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string omega = argc > 1 ? argv[1] : "(012)";
  const std::size_t radius = argc > 2 ? std::stoul(argv[2]) : 8;
  const int repeats = argc > 3 ? std::atoi(argv[3]) : 3;

  std::size_t serial_size = 0;
  const double serial = best_seconds(repeats, [&] {
    auto group = og::Overgroup::make(og::parse_omega(omega));
    serial_size = og::enumerate_ball_serial(group, 0, radius).size();
  });
  std::cout << "omega=" << omega << " radius=" << radius << " elements=" << serial_size << "\n";
  std::cout << "serial      " << serial << " s\n";

  const int max_threads = omp_get_max_threads();
  for (int workers = 1; workers <= std::max(max_threads, 4); workers *= 2) {
    std::size_t size = 0;
    og::BallOptions options;
    options.workers = workers;
    const double t = best_seconds(repeats, [&] {
      auto group = og::Overgroup::make(og::parse_omega(omega));
      size = og::enumerate_ball(group, 0, radius, options).size();
    });
    std::cout << "parallel w=" << workers << " " << t << " s  speedup " << serial / t
              << (size == serial_size ? "" : "  SIZE MISMATCH") << "\n";
  }
  return 0;
}
