#pragma once

#include <vector>

namespace symlab::quad {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [-1, 1]. Rules are computed once and
// shared; the returned reference stays valid for the process lifetime.
const Rule& gauss_legendre(int n);

}  // namespace symlab::quad
