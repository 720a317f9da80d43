// Times the parallel batch driver against the serial reference on the random
// Courant-axiom workload and checks that both produce the same failure set.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#include "gg/batch.hpp"
#include "gg/courant.hpp"
#include "gg/cp2.hpp"

using namespace gg;

namespace {

GaussianRational rand_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  GaussianRational re = GaussianRational::from_fraction(num(rng), den(rng));
  GaussianRational im = GaussianRational::from_fraction(num(rng), den(rng));
  return re + GaussianRational::i() * im;
}

Coeff rand_poly_coeff(std::mt19937_64& rng, int nvars) {
  std::uniform_int_distribution<int> nterms(0, 2);
  std::uniform_int_distribution<int> expd(0, 1);
  Poly p(nvars);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Exps e(nvars, 0);
    for (int v = 0; v < nvars; ++v) e[v] = expd(rng);
    p.add_term(e, rand_scalar(rng));
  }
  return Coeff(std::move(p));
}

DiffForm rand_form(std::mt19937_64& rng, const ChartPtr& chart, int degree) {
  DiffForm f(chart);
  std::uniform_int_distribution<int> coin(0, 1);
  int d = chart->dim();
  for (int mask = 0; mask < (1 << d); ++mask) {
    WedgeIdx idx;
    for (int i = 0; i < d; ++i)
      if (mask & (1 << i)) idx.push_back(i);
    if (static_cast<int>(idx.size()) != degree) continue;
    if (coin(rng)) f.add_term(idx, rand_poly_coeff(rng, chart->nfull()));
  }
  return f;
}

GenSection rand_section(std::mt19937_64& rng, const ChartPtr& chart) {
  std::uniform_int_distribution<int> coin(0, 1);
  VectorField x(chart);
  for (int i = 0; i < chart->dim(); ++i)
    if (coin(rng)) x.set_component(i, rand_poly_coeff(rng, chart->nfull()));
  return GenSection(std::move(x), rand_form(rng, chart, 1));
}

}  // namespace

int main(int argc, char** argv) {
  int count = argc > 1 ? std::atoi(argv[1]) : 50;
  std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1;
  auto chart = cp2::invariant_chart();

  auto item = [&](int, std::uint64_t s) {
    std::mt19937_64 rng(s);
    std::vector<GenSection> secs;
    for (int i = 0; i < 3; ++i) secs.push_back(rand_section(rng, chart));
    TwistData tw(exterior_d(rand_form(rng, chart, 2)));
    return axioms_check(secs, tw).ok();
  };

  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  BatchResult serial = run_batch_serial(count, seed, item);
  auto t1 = clock::now();
  BatchResult parallel = run_batch(count, seed, item);
  auto t2 = clock::now();

  double ts = std::chrono::duration<double>(t1 - t0).count();
  double tp = std::chrono::duration<double>(t2 - t1).count();
  std::cout << "items: " << count << "  seed: " << seed << "\n"
            << "serial:   " << ts << " s\n"
            << "parallel: " << tp << " s  (speedup " << ts / tp << "x)\n";
  if (serial.failures != parallel.failures) {
    std::cerr << "mismatch between serial and parallel failure sets\n";
    return 1;
  }
  if (!serial.ok()) {
    std::cerr << "unexpected axiom failures\n";
    return 1;
  }
  return 0;
}
