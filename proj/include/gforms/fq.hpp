#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace gforms {

class Fq;
using FqPtr = std::shared_ptr<const Fq>;

/// Element of a finite field, packed as sum c_i p^i of its coefficient
/// vector. 0 is zero and 1 is one in every field.
using FqElem = std::uint32_t;

/// The field F_{p^m}, p an odd prime. The modulus is the first monic
/// irreducible polynomial of degree m in the packed coefficient order, so a
/// given (p, m) always names the same field. Arithmetic runs on discrete
/// log/exp tables built from the least primitive element.
class Fq {
 public:
  static FqPtr make(long p, int m, std::uint64_t size_bound = 1u << 20);

  long p() const { return p_; }
  int degree() const { return m_; }
  std::uint64_t q() const { return q_; }

  FqElem zero() const { return 0; }
  FqElem one() const { return 1; }

  FqElem add(FqElem a, FqElem b) const;
  FqElem sub(FqElem a, FqElem b) const;
  FqElem neg(FqElem a) const;
  FqElem mul(FqElem a, FqElem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
  }
  FqElem inv(FqElem a) const;
  FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
  FqElem pow(FqElem a, std::uint64_t e) const;
  FqElem frobenius(FqElem a) const { return pow(a, static_cast<std::uint64_t>(p_)); }

  /// Canonical image of an integer (the prime subfield).
  FqElem from_int(long v) const;
  /// a as an integer 0..p-1; requires a in the prime subfield.
  long to_int(FqElem a) const;

  /// Euler criterion; requires a != 0.
  bool is_square(FqElem a) const;
  /// The least non-square (packed order).
  FqElem least_nonsquare() const;

  /// Absolute trace to F_p, returned inside the prime subfield.
  FqElem trace_to_base(FqElem a) const;

  std::vector<long> coords(FqElem a) const;
  FqElem from_coords(const std::vector<long>& c) const;

  /// Modulus coefficients c_0..c_m (ascending, monic: c_m = 1).
  const std::vector<long>& modulus() const { return modulus_; }

  FqElem generator() const { return gen_; }
  std::uint32_t log(FqElem a) const;  // discrete log base generator, a != 0
  FqElem exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

  std::string to_string(FqElem a) const;

 private:
  Fq() = default;
  long p_ = 0;
  int m_ = 0;
  std::uint64_t q_ = 0;
  std::vector<long> modulus_;
  FqElem gen_ = 0;
  std::vector<FqElem> exp_;       // size q-1
  std::vector<std::uint32_t> log_;  // size q, log_[0] unused
  std::vector<FqElem> add_table_;   // q*q when q small, else empty
};

/// Identification of F_q inside F_{q^m} (deterministic: the least root of the
/// small modulus in the big field).
struct FieldExt {
  FqPtr small;
  FqPtr big;
  int degree = 1;                      // [big : small]
  std::vector<FqElem> embed_table;     // small elem -> big elem
  std::unordered_map<FqElem, FqElem> section;  // big elem in image -> small elem

  FqElem embed(FqElem a) const { return embed_table[a]; }
  bool in_image(FqElem b) const { return section.count(b) != 0; }
  FqElem project(FqElem b) const;  // inverse of embed; throws off the image

  /// Relative trace big -> small.
  FqElem rel_trace(FqElem x) const;
  /// Power basis 1, t, .., t^{degree-1} of big over small, where t is the
  /// canonical degree-1 element of the big field.
  std::vector<FqElem> power_basis() const;
};

FieldExt make_extension(const FqPtr& small, int degree, std::uint64_t size_bound = 1u << 20);

}  // namespace gforms
