#ifndef HEXF_DFT_HPP
#define HEXF_DFT_HPP

#include <complex>
#include <vector>

namespace hexf::dft {

using Cplx = std::complex<double>;

/// Full 2-D DFT of an N x N row-major array:
/// out[p*N+q] = sum_{a,b} in[a*N+b] e^{-2 pi i (p a + q b)/N}.
/// Row-column factorization, O(N^3); no radix tricks.
std::vector<Cplx> forward(const std::vector<Cplx>& in, int n);

/// Inverse without the 1/N^2 factor:
/// out[a*N+b] = sum_{p,q} in[p*N+q] e^{+2 pi i (p a + q b)/N}.
std::vector<Cplx> inverse(const std::vector<Cplx>& in, int n);

}  // namespace hexf::dft

#endif
