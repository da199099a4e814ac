#pragma once

#include <string>

namespace projconst {

enum class Method { ClosedForm, JacobiQuadrature, DirichletQuadrature };

const char* method_name(Method method);

/// Output of every numerical computation: the value, an absolute error bound,
/// how it was obtained, and what was computed.
struct ComputationResult {
  std::string subject;  // family name or formula tag
  int n = 0;
  int d = 0;
  double value = 0.0;
  double abs_err = 0.0;
  Method method = Method::ClosedForm;
};

inline const char* method_name(Method method) {
  switch (method) {
    case Method::JacobiQuadrature:
      return "jacobi-quadrature";
    case Method::DirichletQuadrature:
      return "dirichlet-quadrature";
    case Method::ClosedForm:
      break;
  }
  return "closed-form";
}

}  // namespace projconst
