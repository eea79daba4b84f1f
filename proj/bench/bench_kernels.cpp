// Timing comparison of the serial and OpenMP elimination/multiplication
// kernels.  Run manually: bench_kernels [size].
#include <qhom/matrix.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>

using namespace qhom;

namespace {

Matrix pseudo(int r, int c, uint64_t seed, Field f) {
  Matrix m(r, c, f);
  uint64_t s = seed;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      s = s * 6364136223846793005ULL + 1442695040888963407ULL;
      m.at(i, j) = f.from_long(static_cast<long>((s >> 33) % 19) - 9);
    }
  return m;
}

template <class F>
double ms(F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 160;
  Field f = Field::gf(32003);
  Matrix a = pseudo(n, n + n / 4, 1, f);
  Matrix x = pseudo(n, n, 2, f), y = pseudo(n, n, 3, f);

  Rref rs, rp;
  double t_rref_s = ms([&] { rs = rref(a, Exec::Serial); });
  double t_rref_p = ms([&] { rp = rref(a, Exec::Parallel); });
  if (rs.reduced != rp.reduced) {
    std::fprintf(stderr, "kernel mismatch in rref\n");
    return 1;
  }
  Matrix ms_, mp_;
  double t_mul_s = ms([&] { ms_ = mul(x, y, Exec::Serial); });
  double t_mul_p = ms([&] { mp_ = mul(x, y, Exec::Parallel); });
  if (ms_ != mp_) {
    std::fprintf(stderr, "kernel mismatch in mul\n");
    return 1;
  }

  std::printf("n=%d over gf(32003)\n", n);
  std::printf("rref  serial %8.2f ms   parallel %8.2f ms   speedup %.2fx\n",
              t_rref_s, t_rref_p, t_rref_s / t_rref_p);
  std::printf("mul   serial %8.2f ms   parallel %8.2f ms   speedup %.2fx\n",
              t_mul_s, t_mul_p, t_mul_s / t_mul_p);
  return 0;
}
