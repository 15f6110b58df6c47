// Compares the serial scan reference against the OpenMP chunked driver on the
// workloads the footprint and delta cells run: synthetic stream walks that
// isolate kernel overhead, and two real cells (cheap point evaluation, heavy
// per-candidate Groebner bases).  The two drivers must return identical
// outcomes, witness index included.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "gmd/enumeration.hpp"
#include "gmd/invariants.hpp"
#include "gmd/points.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_of(const Clock::time_point& a, const Clock::time_point& b) {
  return std::chrono::duration<double>(b - a).count();
}

template <class Fn>
double best_of(int repeat, Fn&& fn) {
  double best = 0;
  for (int i = 0; i < repeat; ++i) {
    auto t0 = Clock::now();
    fn();
    auto t1 = Clock::now();
    double s = seconds_of(t0, t1);
    if (i == 0 || s < best) best = s;
  }
  return best;
}

void print_row(const std::string& name, long long candidates, double serial, double parallel,
               bool agree) {
  std::cout << std::left << std::setw(34) << name << std::right << std::setw(12) << candidates
            << std::fixed << std::setprecision(3) << std::setw(10) << serial << "s"
            << std::setw(10) << parallel << "s" << std::setprecision(2) << std::setw(9)
            << (parallel > 0 ? serial / parallel : 0.0) << "x" << std::setw(7)
            << (agree ? "yes" : "NO") << "\n";
}

bool same(const gmd::ScanOutcome& a, const gmd::ScanOutcome& b) {
  return a.any == b.any && a.best == b.best && a.best_index == b.best_index &&
         a.scanned == b.scanned;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial reference vs OpenMP scan driver"};
  int threads = 0;
  int repeat = 3;
  app.add_option("--threads", threads, "thread count for the parallel driver (0 = OpenMP max)");
  app.add_option("--repeat", repeat, "repetitions per workload, best time wins")
      ->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  int width = threads > 0 ? threads : omp_get_max_threads();
  std::cout << "parallel driver width: " << width << " (OpenMP)\n";
#else
  std::cout << "built without OpenMP; both columns run the serial reference\n";
#endif
  std::cout << std::left << std::setw(34) << "workload" << std::right << std::setw(12)
            << "candidates" << std::setw(11) << "serial" << std::setw(11) << "parallel"
            << std::setw(10) << "speedup" << std::setw(7) << "agree" << "\n";

  bool all_agree = true;

  {
    gmd::SubspaceStream probe(3, 9, 2);
    const long long total = probe.total();
    auto eval = [](const gmd::SubspaceStream& s) -> std::optional<long long> {
      long long acc = 0;
      for (int64_t v : s.matrix()) acc += v;
      if (acc % 7 == 0) return std::nullopt;
      return acc % 101;
    };
    gmd::ScanOutcome serial_out, parallel_out;
    double ts = best_of(repeat, [&] {
      serial_out = gmd::scan_extremum_serial(gmd::SubspaceStream(3, 9, 2), 0, total, eval, true);
    });
    double tp = best_of(repeat, [&] {
      parallel_out = gmd::scan_extremum([] { return gmd::SubspaceStream(3, 9, 2); }, total, eval,
                                        true, threads);
    });
    bool agree = same(serial_out, parallel_out);
    all_agree = all_agree && agree;
    print_row("subspace odometer (synthetic)", total, ts, tp, agree);
  }

  {
    gmd::SubsetStream probe(30, 8);
    const long long total = probe.total();
    auto eval = [](const gmd::SubsetStream& s) -> std::optional<long long> {
      long long acc = 1;
      for (int v : s.current()) acc = (acc * (v + 17)) % 10007;
      if ((acc & 1) == 0) return std::nullopt;
      return acc;
    };
    gmd::ScanOutcome serial_out, parallel_out;
    double ts = best_of(repeat, [&] {
      serial_out = gmd::scan_extremum_serial(gmd::SubsetStream(30, 8), 0, total, eval, false);
    });
    double tp = best_of(repeat, [&] {
      parallel_out =
          gmd::scan_extremum([] { return gmd::SubsetStream(30, 8); }, total, eval, false, threads);
    });
    bool agree = same(serial_out, parallel_out);
    all_agree = all_agree && agree;
    print_row("subset walk (synthetic)", total, ts, tp, agree);
  }

  {
    auto ring = gmd::make_ring(gmd::PrimeField(3), {"t1", "t2", "t3"});
    gmd::ProjectivePointSet X = gmd::make_point_set(
        3, 2,
        {{1, 0, 1}, {1, 0, 0}, {1, 0, 2}, {1, 1, 0}, {1, 1, 1},
         {1, 1, 2}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}});
    auto ctx = gmd::build_points_context(ring, X);
    gmd::GmdOptions opts;
    gmd::Cell serial_cell, parallel_cell;
    opts.threads = 1;
    double ts = best_of(repeat, [&] { serial_cell = gmd::delta_hyp_cell(ctx, 2, 2, opts).delta; });
    opts.threads = threads;
    double tp = best_of(repeat,
                        [&] { parallel_cell = gmd::delta_hyp_cell(ctx, 2, 2, opts).delta; });
    bool agree = serial_cell.value == parallel_cell.value &&
                 serial_cell.status == parallel_cell.status;
    all_agree = all_agree && agree;
    print_row("point count delta(2,2), 10 pts", serial_cell.candidates, ts, tp, agree);
  }

  {
    auto ring = gmd::make_ring(gmd::PrimeField(3), {"t1", "t2", "t3"});
    using P = gmd::Polynomial<gmd::PrimeField>;
    auto ctx = gmd::build_context(
        ring, {P::variable(ring, 0, 3),
               P::variable(ring, 1, 1) * P::variable(ring, 2, 1)});
    gmd::GmdOptions opts;
    opts.force_generic = true;
    gmd::Cell serial_cell, parallel_cell;
    opts.threads = 1;
    double ts = best_of(repeat, [&] { serial_cell = gmd::delta_hyp_cell(ctx, 2, 2, opts).delta; });
    opts.threads = threads;
    double tp = best_of(repeat,
                        [&] { parallel_cell = gmd::delta_hyp_cell(ctx, 2, 2, opts).delta; });
    bool agree = serial_cell.value == parallel_cell.value &&
                 serial_cell.status == parallel_cell.status;
    all_agree = all_agree && agree;
    print_row("groebner delta(2,2), heavy eval", serial_cell.candidates, ts, tp, agree);
  }

  if (!all_agree) {
    std::cout << "drivers disagree\n";
    return 1;
  }
  return 0;
}
