#pragma once

namespace oracle {

struct C {
  double re, im;
};

struct NormCase {
  int p;
  double q, r;
  int a[3];
  double value;
};

struct KernelCase {
  double q, r;
  C nu[3];
  C value;
};

struct SliceCase {
  double q, r;
  C nu2, nu3;
  C value;
};

struct GCoeffCase {
  double r, eps;
  double a[3][3];  ///< a[j][k] multiplies x^j y^k
};

struct GValueCase {
  double q, r;
  C x, y;
  C value;
};

struct GDetCase {
  double r, eta;
  double det;
};

}  // namespace oracle
