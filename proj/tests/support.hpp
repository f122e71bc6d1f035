#pragma once

#include <initializer_list>
#include <string>

#include "galois/ratfun.hpp"

namespace testsupport {

using namespace galois;

inline Constant Q(long n, long d = 1) { return Constant(qrat(n, d)); }
inline Constant Ci(long re, long im) { return Constant(GaussRat(QRat(re), QRat(im))); }

// coefficients lowest degree first
inline Poly P(std::initializer_list<Constant> c) { return Poly(std::vector<Constant>(c)); }

inline const RatFunc X = RatFunc::x();
inline RatFunc R(const Constant& c) { return RatFunc(c); }
inline RatFunc R(long v) { return RatFunc(v); }

}  // namespace testsupport
