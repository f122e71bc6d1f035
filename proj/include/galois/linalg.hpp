#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "galois/ratfun.hpp"

namespace galois {

using Vec = std::vector<Constant>;
using Matrix = std::vector<Vec>;

// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(Matrix& m, int ncols);
// basis of {v : m v = 0}, one vector per free column (that entry is 1)
std::vector<Vec> nullspace(Matrix m, int ncols);
// one solution of m v = rhs, if consistent
std::optional<Vec> solve_linear(Matrix m, const Vec& rhs, int ncols);

// Coefficient vectors c with op(sum c_i basis_i) = 0, op linear over constants.
std::vector<Vec> linear_ansatz(const std::vector<RatFunc>& basis,
                               const std::function<RatFunc(const RatFunc&)>& op);

// same with several equations: images[j] lists the components of the image of unknown j
std::vector<Vec> linear_ansatz_images(const std::vector<std::vector<RatFunc>>& images);

// reduced echelon basis of the constant span of fs (zero elements dropped)
std::vector<RatFunc> echelon_span(const std::vector<RatFunc>& fs);
// is f in the constant span of fs
bool in_span(const std::vector<RatFunc>& fs, const RatFunc& f);

RatFunc combine(const std::vector<RatFunc>& basis, const Vec& c);

}  // namespace galois
