#include "hexf/dft.hpp"

#include <cmath>
#include <stdexcept>

#include "hexf/parallel.hpp"

namespace hexf::dft {

namespace {

std::vector<Cplx> twiddles(int n, double sign) {
  std::vector<Cplx> w(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k)
    w[static_cast<size_t>(k)] = std::polar(1.0, sign * 2.0 * M_PI * k / n);
  return w;
}

// Applies a length-N DFT with the given twiddle table along both axes.
std::vector<Cplx> transform(const std::vector<Cplx>& in, int n,
                            const std::vector<Cplx>& w) {
  const size_t nn = static_cast<size_t>(n);
  if (in.size() != nn * nn) throw std::invalid_argument("dft: size mismatch");
  // axis 1 (inner index)
  std::vector<Cplx> mid(in.size());
  parallel_for(nn, [&](size_t rb, size_t re) {
    for (size_t a = rb; a < re; ++a) {
      const Cplx* row = &in[a * nn];
      for (size_t q = 0; q < nn; ++q) {
        Cplx acc{0.0, 0.0};
        size_t idx = 0;
        for (size_t b = 0; b < nn; ++b) {
          acc += row[b] * w[idx];
          idx += q;
          if (idx >= nn) idx -= nn;
        }
        mid[a * nn + q] = acc;
      }
    }
  });
  // axis 0 (outer index)
  std::vector<Cplx> out(in.size());
  parallel_for(nn, [&](size_t cb, size_t ce) {
    for (size_t q = cb; q < ce; ++q) {
      for (size_t p = 0; p < nn; ++p) {
        Cplx acc{0.0, 0.0};
        size_t idx = 0;
        for (size_t a = 0; a < nn; ++a) {
          acc += mid[a * nn + q] * w[idx];
          idx += p;
          if (idx >= nn) idx -= nn;
        }
        out[p * nn + q] = acc;
      }
    }
  });
  return out;
}

}  // namespace

std::vector<Cplx> forward(const std::vector<Cplx>& in, int n) {
  return transform(in, n, twiddles(n, -1.0));
}

std::vector<Cplx> inverse(const std::vector<Cplx>& in, int n) {
  return transform(in, n, twiddles(n, +1.0));
}

}  // namespace hexf::dft
