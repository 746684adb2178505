#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gforms/fq.hpp"

namespace gforms {

/// Polynomial over F_q, coefficients ascending; empty vector is the zero
/// polynomial and nonzero polynomials carry no trailing zero.
using FqPoly = std::vector<FqElem>;

int poly_deg(const FqPoly& f);  // -1 for zero
FqPoly poly_trim(FqPoly f);
FqPoly poly_x(const FqPtr&);
FqPoly poly_const(FqElem c);

FqPoly poly_add(const FqPtr& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_sub(const FqPtr& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_mul(const FqPtr& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_scale(const FqPtr& F, FqElem c, const FqPoly& a);
std::pair<FqPoly, FqPoly> poly_divmod(const FqPtr& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_mod(const FqPtr& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_gcd(const FqPtr& F, FqPoly a, FqPoly b);  // monic
FqPoly poly_monic(const FqPtr& F, FqPoly a);
FqPoly poly_derivative(const FqPtr& F, const FqPoly& a);
FqElem poly_eval(const FqPtr& F, const FqPoly& a, FqElem x);
FqPoly poly_powmod(const FqPtr& F, FqPoly base, std::uint64_t e, const FqPoly& mod);

bool poly_is_irreducible(const FqPtr& F, const FqPoly& f);

/// Complete factorization into monic irreducibles with multiplicities,
/// together with the unit (leading) coefficient. Distinct-degree splitting
/// plus a deterministic equal-degree scan; factors sorted by (degree,
/// coefficient order). The product of all factors times the unit reproduces
/// the input exactly.
struct PolyFactorization {
  FqElem unit;
  std::vector<std::pair<FqPoly, int>> factors;
};

PolyFactorization factor_poly(const FqPtr& F, const FqPoly& f);

std::string poly_to_string(const FqPtr& F, const FqPoly& f, const std::string& var = "t");

}  // namespace gforms
