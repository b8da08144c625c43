#pragma once

#include <string>

#include "periodrel/scalar.hpp"

namespace periodrel {

/// A place of Q, extended to Q(sqrt d) where needed: the archimedean place
/// together with a choice of embedding, or the p-adic place for a prime p.
class Place {
 public:
  static Place archimedean(Embedding e = Embedding::sigma);
  /// Throws PreconditionError unless p is prime.
  static Place finite(long p);

  bool is_archimedean() const { return prime_ == 0; }
  long prime() const { return prime_; }
  Embedding embedding() const { return embedding_; }
  std::string str() const;

  friend bool operator==(const Place&, const Place&) = default;

 private:
  long prime_ = 0;
  Embedding embedding_ = Embedding::sigma;
};

/// |x|_v: the usual absolute value of the chosen embedding, or p^(-v_p(x)).
/// For a quadratic scalar at a finite place, p must be inert or ramified in
/// Q(sqrt d); the result is then |N(x)|_p^(1/2).
double abs_at_place(const Scalar& x, const Place& v);

/// Legendre-style splitting type of p in Q(sqrt d): +1 split, -1 inert, 0 ramified.
int splitting_type(long d, long p);

}  // namespace periodrel
